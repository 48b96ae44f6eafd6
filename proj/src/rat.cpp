#include "plcurve/rat.hpp"

#include <cctype>

namespace plcurve {

Rat::Rat(const Int& num, const Int& den) {
  if (den == 0) throw domain_error("rational with zero denominator");
  v_ = BigRat(num, den);
}

Rat Rat::operator/(const Rat& o) const {
  if (o.v_ == 0) throw domain_error("division by zero rational");
  return Rat(BigRat(v_ / o.v_));
}

Int Rat::floor() const {
  Int q = num() / den();
  if (num() < 0 && q * den() != num()) --q;
  return q;
}

std::string Rat::str() const {
  std::string s = num().str();
  if (den() != 1) s += "/" + den().str();
  return s;
}

Rat Rat::parse(const std::string& text) {
  auto bad = [&] { throw parse_error("malformed rational: '" + text + "'"); };
  std::size_t i = 0, n = text.size();
  while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  std::size_t start = i;
  if (i < n && (text[i] == '-' || text[i] == '+')) ++i;
  std::size_t digits = i;
  while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == digits) bad();
  Int num(text.substr(start, i - start));
  Int den = 1;
  if (i < n && text[i] == '/') {
    ++i;
    std::size_t dstart = i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == dstart) bad();
    den = Int(text.substr(dstart, i - dstart));
    if (den == 0) bad();
  }
  while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i != n) bad();
  return Rat(num, den);
}

Rat rat(long n, long d) { return Rat(Int(n), Int(d)); }

const Rat& ExtRat::rat() const {
  if (!finite_) throw domain_error("infinite value where a rational is required");
  return v_;
}

Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

}  // namespace plcurve
