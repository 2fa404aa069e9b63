#include "chromagraph/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace chromagraph {

std::string rational_to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  std::string s = num.str();
  if (den != 1) {
    s += '/';
    s += den.str();
  }
  return s;
}

Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto check_int = [&](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!check_int(s)) throw std::invalid_argument("bad rational literal: " + s);
    return Rational(BigInt(s));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  if (!check_int(num) || !check_int(den))
    throw std::invalid_argument("bad rational literal: " + s);
  BigInt n(num), d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + s);
  if (d < 0) {  // keep the sign in the numerator
    n = -n;
    d = -d;
  }
  return Rational(n, d);
}

}  // namespace chromagraph
