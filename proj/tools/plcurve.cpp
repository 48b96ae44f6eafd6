#include <iostream>
#include <string>
#include <vector>

#include "plcurve/cli.hpp"

namespace {

const char* kUsage =
    "usage: plcurve <command> [<input>] [flags]\n"
    "\n"
    "commands:\n"
    "  newton-polygon <file>        polygon of the support block or branch system\n"
    "  fan <file>                   slopes of the Newton fan\n"
    "  check-ndeg <file>            Newton non-degeneracy of the support block\n"
    "  resolve <file>               toroidal pseudo-resolution record\n"
    "  fan-tree <file>              fan tree of the pseudo-resolution\n"
    "  eggers-wall <file>           Eggers-Wall tree of the branches\n"
    "  lotus <file>                 glued lotus (use --emit svg to draw it)\n"
    "  dual-graph <file>            weighted dual graph of the resolution\n"
    "  enriques <file>              Enriques tree of the blown-up points\n"
    "  proximity <file>             proximity graph of the blown-up points\n"
    "  intersect <file> <A> <B>     intersection number of two branches\n"
    "  regularize <slopes...>       minimal regular subdivision of a fan\n"
    "\n"
    "flags:\n"
    "  --emit text|json|dot|svg     output format (default text)\n"
    "  --truncate                   truncated lotus/dual graph (C alone)\n"
    "  --aux-strategy truncation    auxiliary-branch strategy\n";

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.empty() || args[0] == "--help" || args[0] == "-h") {
    std::cout << kUsage;
    return args.empty() ? 1 : 0;
  }
  return plcurve::run_command(args, std::cout, std::cerr);
}
