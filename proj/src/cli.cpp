#include "plcurve/cli.hpp"

#include <iostream>
#include <sstream>

#include "json.hpp"
#include "plcurve/curvefile.hpp"
#include "plcurve/emit.hpp"
#include "plcurve/engine.hpp"
#include "plcurve/ewtree.hpp"
#include "plcurve/lotus.hpp"
#include "plcurve/polygon.hpp"

namespace plcurve {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";

std::string fnv1a_digest(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

struct Options {
  std::string command;
  std::string emit = "text";
  bool truncate = false;
  std::string strategy = "truncation";
  std::vector<std::string> positional;
};

Options parse_options(const std::vector<std::string>& args) {
  Options opt;
  if (args.empty()) throw parse_error("no command given");
  opt.command = args[0];
  for (std::size_t i = 1; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--emit") {
      if (++i >= args.size()) throw parse_error("--emit needs a value");
      opt.emit = args[i];
    } else if (a.rfind("--emit=", 0) == 0) {
      opt.emit = a.substr(7);
    } else if (a == "--truncate") {
      opt.truncate = true;
    } else if (a == "--aux-strategy") {
      if (++i >= args.size()) throw parse_error("--aux-strategy needs a value");
      opt.strategy = args[i];
    } else if (a.rfind("--aux-strategy=", 0) == 0) {
      opt.strategy = a.substr(15);
    } else if (a.rfind("--", 0) == 0) {
      throw parse_error("unknown flag: " + a);
    } else {
      opt.positional.push_back(a);
    }
  }
  if (opt.emit != "text" && opt.emit != "json" && opt.emit != "dot" && opt.emit != "svg")
    throw parse_error("unknown emitter: " + opt.emit);
  if (opt.strategy != "truncation")
    throw domain_error("unknown auxiliary-branch strategy: " + opt.strategy);
  return opt;
}

void print_report(std::ostream& out, const Options& opt, const std::string& digest,
                  Json result) {
  Json report;
  report["schema"] = 1;
  report["command"] = opt.command;
  report["version"] = kVersion;
  report["input_digest"] = digest;
  report["result"] = std::move(result);
  out << report.dump(2) << "\n";
}

NewtonPolygon file_polygon(const CurveFile& file) {
  if (file.has_support) return polygon_from_support(file.support);
  if (file.branches.empty()) throw domain_error("no branches and no support block");
  return polygon_from_branches(file.branches, PuiseuxSeries());
}

Json polygon_json(const NewtonPolygon& p) {
  Json verts = Json::array();
  for (const auto& [a, b] : p.vertices()) verts.push_back({a.str(), b.str()});
  return Json{{"vertices", verts}};
}

Json dual_graph_json(const DualGraph& graph) {
  DualGraph g = graph;
  assign_divisor_names(g);
  Json nodes = Json::array();
  for (const DualGraphNode& n : g.nodes) {
    Json j;
    j["name"] = dual_node_name(n);
    if (n.weighted) j["self_intersection"] = ("-" + n.weight.str());
    j["arrowhead"] = n.arrowhead;
    nodes.push_back(j);
  }
  Json edges = Json::array();
  for (const auto& [a, b] : g.edges) edges.push_back({a, b});
  return Json{{"nodes", nodes}, {"edges", edges}};
}

Json ew_tree_json(const EWTree& t) {
  Json nodes = Json::array();
  for (const EWNode& n : t.nodes()) {
    Json j;
    j["exponent"] = n.exponent.str();
    j["index"] = n.index.str();
    j["contact"] = n.contact.str();
    j["labels"] = n.labels;
    j["parent"] = n.parent;
    nodes.push_back(j);
  }
  return Json{{"nodes", nodes}};
}

Json fan_tree_json(const FanTree& t) {
  Json nodes = Json::array();
  for (const FTNode& n : t.nodes()) {
    Json j;
    j["labels"] = n.labels;
    j["slope"] = n.slope.str();
    j["trunk"] = n.trunk;
    j["parent"] = n.parent;
    nodes.push_back(j);
  }
  return Json{{"nodes", nodes}};
}

Json record_json(const ResolutionRecord& rec) {
  Json fans = Json::array();
  for (const Trunk& t : rec.trunks) {
    Json marks = Json::array();
    for (const TrunkMark& m : t.marks) marks.push_back({{"slope", m.slope.str()}, {"divisor", m.divisor}});
    Json jt;
    jt["trunk"] = t.id;
    jt["level"] = t.level;
    jt["base"] = t.base_label;
    jt["aux"] = t.aux_label;
    jt["marks"] = marks;
    if (!t.merged_branches.empty()) jt["merged_branches"] = t.merged_branches;
    fans.push_back(jt);
  }
  Json auxes = Json::array();
  for (const PuiseuxSeries& s : rec.auxiliaries) auxes.push_back(s.str());
  Json arrows = Json::array();
  for (const BranchArrow& a : rec.arrows)
    arrows.push_back({{"divisor", a.divisor}, {"branch", a.branch}});
  std::vector<SingularPoint> sing = singular_points(rec);
  Json singular = Json::array();
  for (const SingularPoint& s : sing)
    singular.push_back({{"trunk", s.trunk},
                        {"pair", {s.lo.str(), s.hi.str()}},
                        {"determinant", s.determinant.str()}});
  Json j;
  j["levels"] = rec.levels;
  j["fans"] = fans;
  j["auxiliaries"] = auxes;
  j["arrows"] = arrows;
  j["singular_points"] = singular;
  j["singular_point_count"] = sing.size();
  return j;
}

std::string record_text(const ResolutionRecord& rec) {
  std::ostringstream out;
  out << "levels: " << rec.levels << "\n";
  for (const Trunk& t : rec.trunks) {
    out << "trunk " << t.id << " level " << t.level << " cross (" << t.base_label << ", "
        << t.aux_label << "): fan";
    for (const TrunkMark& m : t.marks) out << " " << m.slope.str() << "=" << m.divisor;
    if (!t.merged_branches.empty()) {
      out << " merged";
      for (const std::string& b : t.merged_branches) out << " " << b;
    }
    out << "\n";
  }
  out << "auxiliaries:";
  for (const PuiseuxSeries& s : rec.auxiliaries) out << " " << s.str() << ";";
  out << "\n";
  out << "arrows:";
  for (const BranchArrow& a : rec.arrows) out << " " << a.divisor << "<-" << a.branch;
  out << "\n";
  out << "singular points: " << singular_points(rec).size() << "\n";
  return out.str();
}

const Branch& find_branch(const CurveFile& file, const std::string& label) {
  for (const Branch& b : file.branches)
    if (b.label == label) return b;
  throw domain_error("no branch labeled '" + label + "' in the input");
}

void require_emit(const Options& opt, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (opt.emit == a) return;
  throw parse_error("command '" + opt.command + "' cannot emit '" + opt.emit + "'");
}

int dispatch(const Options& opt, std::ostream& out) {
  const std::string& cmd = opt.command;

  if (cmd == "regularize") {
    require_emit(opt, {"text", "json"});
    if (opt.positional.empty()) throw domain_error("regularize needs slope arguments");
    std::vector<Rat> slopes;
    for (const std::string& s : opt.positional) slopes.push_back(Rat::parse(s));
    std::vector<Rat> reg = regularize(slopes);
    if (opt.emit == "json") {
      Json result = Json::array();
      for (const Rat& s : reg) result.push_back(s.str());
      print_report(out, opt, fnv1a_digest(""), Json{{"slopes", result}});
    } else {
      std::string line;
      for (const Rat& s : reg) line += (line.empty() ? "" : " ") + s.str();
      out << line << "\n";
    }
    return 0;
  }

  if (opt.positional.empty()) throw parse_error(cmd + " needs an input file");
  CurveFile file = load_curve_file(opt.positional[0]);
  const std::string digest = fnv1a_digest(file.raw);

  if (cmd == "newton-polygon") {
    require_emit(opt, {"text", "json"});
    NewtonPolygon p = file_polygon(file);
    if (opt.emit == "json") {
      print_report(out, opt, digest, polygon_json(p));
    } else {
      std::string line;
      for (const auto& [a, b] : p.vertices())
        line += (line.empty() ? "" : " ") + ("(" + a.str() + "," + b.str() + ")");
      out << line << "\n";
    }
    return 0;
  }

  if (cmd == "fan") {
    require_emit(opt, {"text", "json"});
    std::vector<Rat> slopes = newton_fan(file_polygon(file));
    if (opt.emit == "json") {
      Json result = Json::array();
      for (const Rat& s : slopes) result.push_back(s.str());
      print_report(out, opt, digest, Json{{"slopes", result}});
    } else {
      std::string line;
      for (const Rat& s : slopes) line += (line.empty() ? "" : " ") + s.str();
      out << line << "\n";
    }
    return 0;
  }

  if (cmd == "check-ndeg") {
    require_emit(opt, {"text", "json"});
    if (!file.has_support)
      throw domain_error("check-ndeg needs a support block with coefficients");
    bool ndeg = is_newton_nondegenerate(file.support);
    if (opt.emit == "json")
      print_report(out, opt, digest, Json{{"newton_nondegenerate", ndeg}});
    else
      out << (ndeg ? "true" : "false") << "\n";
    return 0;
  }

  if (cmd == "intersect") {
    require_emit(opt, {"text", "json"});
    if (opt.positional.size() != 3)
      throw domain_error("intersect needs an input file and two branch labels");
    auto resolve_label = [&file](const std::string& l) -> const Branch* {
      if (l == "L" || l == "x" || l == "Z(x)") return nullptr;
      return &find_branch(file, l);
    };
    const Branch* a = resolve_label(opt.positional[1]);
    const Branch* b = resolve_label(opt.positional[2]);
    Int result;
    if (a && b)
      result = intersection_number(*a, *b);
    else if (a || b)
      result = intersection_number_with_reference(a ? *a : *b);
    else
      throw domain_error("intersection of the reference branch with itself");
    if (opt.emit == "json")
      print_report(out, opt, digest, Json{{"intersection", result.str()}});
    else
      out << result.str() << "\n";
    return 0;
  }

  if (cmd == "eggers-wall") {
    require_emit(opt, {"text", "json", "dot"});
    EWTree t = build_ew_tree(file.branches);
    if (opt.emit == "json")
      print_report(out, opt, digest, ew_tree_json(t));
    else if (opt.emit == "dot")
      out << emit_dot(t);
    else
      out << ew_tree_text(t);
    return 0;
  }

  // The remaining commands run the pseudo-resolution.
  ResolutionRecord rec = pseudo_resolve(file.branches);

  if (cmd == "resolve") {
    require_emit(opt, {"text", "json"});
    if (opt.emit == "json")
      print_report(out, opt, digest, record_json(rec));
    else
      out << record_text(rec);
    return 0;
  }

  if (cmd == "fan-tree") {
    require_emit(opt, {"text", "json", "dot"});
    FanTree t = fan_tree(rec);
    if (opt.emit == "json")
      print_report(out, opt, digest, fan_tree_json(t));
    else if (opt.emit == "dot")
      out << emit_dot(t);
    else
      out << fan_tree_text(t);
    return 0;
  }

  Lotus lotus = glue_lotuses(rec);

  if (cmd == "lotus") {
    if (opt.truncate)
      require_emit(opt, {"text", "json"});
    else
      require_emit(opt, {"text", "json", "svg"});
    if (opt.truncate) {
      TruncatedLotus tr = truncate_lotus(lotus);
      if (opt.emit == "json") {
        Json weights = Json::array();
        for (const auto& [v, w] : tr.weights)
          weights.push_back({{"vertex", lotus_vertex_name(lotus, v)},
                             {"self_intersection", "-" + w.str()}});
        print_report(out, opt, digest,
                     Json{{"weights", weights}, {"dual_graph", dual_graph_json(tr.dual)}});
      } else {
        for (const auto& [v, w] : tr.weights)
          out << lotus_vertex_name(lotus, v) << " -" << w.str() << "\n";
      }
      return 0;
    }
    int dim1 = static_cast<int>(lotus.arrows.size());
    int dim2 = 0;
    for (const Membrane& m : lotus.membranes) dim2 += m.petals.empty() ? 0 : 1;
    if (opt.emit == "svg") {
      out << emit_svg(lotus);
    } else if (opt.emit == "json") {
      Json membranes = Json::array();
      for (const Membrane& m : lotus.membranes) {
        Json jm;
        jm["id"] = m.id;
        jm["trunk"] = m.trunk;
        jm["petals"] = m.petals.size();
        jm["base"] = {lotus_vertex_name(lotus, m.e1), lotus_vertex_name(lotus, m.e2)};
        membranes.push_back(jm);
      }
      Json arrows = Json::array();
      for (const LotusArrow& a : lotus.arrows)
        arrows.push_back({{"vertex", lotus_vertex_name(lotus, a.vertex)}, {"branch", a.branch}});
      print_report(out, opt, digest,
                   Json{{"petals", lotus.petals.size()},
                        {"membranes_2d", dim2},
                        {"membranes_1d", dim1},
                        {"membranes", membranes},
                        {"arrows", arrows}});
    } else {
      out << "petals: " << lotus.petals.size() << "\n";
      out << "membranes: " << dim2 << " two-dimensional, " << dim1 << " one-dimensional\n";
      std::string basics;
      for (const LotusVertex& v : lotus.vertices)
        if (v.basic) basics += (basics.empty() ? "" : " ") + lotus_vertex_name(lotus, v.id);
      out << "basic vertices: " << basics << "\n";
    }
    return 0;
  }

  if (cmd == "dual-graph") {
    require_emit(opt, {"text", "json", "dot"});
    DualGraph g = opt.truncate ? truncate_lotus(lotus).dual : dual_graph(lotus);
    if (opt.emit == "json")
      print_report(out, opt, digest, dual_graph_json(g));
    else if (opt.emit == "dot")
      out << emit_dot(g);
    else
      out << dual_graph_text(g) << "\n";
    return 0;
  }

  if (cmd == "enriques") {
    require_emit(opt, {"text", "json", "dot"});
    EnriquesTree t = enriques_tree(lotus);
    if (opt.emit == "json") {
      Json edges = Json::array();
      for (const auto& [p, c] : t.edges)
        edges.push_back({lotus_vertex_name(lotus, p), lotus_vertex_name(lotus, c)});
      print_report(out, opt, digest,
                   Json{{"root", t.root_vertex >= 0 ? lotus_vertex_name(lotus, t.root_vertex)
                                                    : std::string("e1+e2")},
                        {"edges", edges}});
    } else if (opt.emit == "dot") {
      out << emit_dot_enriques(lotus, t);
    } else {
      out << "root: "
          << (t.root_vertex >= 0 ? lotus_vertex_name(lotus, t.root_vertex) : "e1+e2") << "\n";
      for (const auto& [p, c] : t.edges)
        out << lotus_vertex_name(lotus, p) << " -> " << lotus_vertex_name(lotus, c) << "\n";
    }
    return 0;
  }

  if (cmd == "proximity") {
    require_emit(opt, {"text", "json", "dot"});
    ProximityGraph g = proximity_graph(lotus);
    if (opt.emit == "json") {
      Json verts = Json::array();
      for (int v : g.vertices) verts.push_back(lotus_vertex_name(lotus, v));
      Json edges = Json::array();
      for (const auto& [a, b] : g.edges)
        edges.push_back({lotus_vertex_name(lotus, a), lotus_vertex_name(lotus, b)});
      print_report(out, opt, digest, Json{{"vertices", verts}, {"edges", edges}});
    } else if (opt.emit == "dot") {
      out << emit_dot_proximity(lotus, g);
    } else {
      for (const auto& [a, b] : g.edges)
        out << lotus_vertex_name(lotus, a) << " -- " << lotus_vertex_name(lotus, b) << "\n";
    }
    return 0;
  }

  throw parse_error("unknown command: " + cmd);
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    Options opt = parse_options(args);
    return dispatch(opt, out);
  } catch (const parse_error& e) {
    err << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace plcurve
