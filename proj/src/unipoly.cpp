#include "chromagraph/unipoly.hpp"

#include <stdexcept>

namespace chromagraph {

UniPoly::UniPoly(std::vector<Rational> ascending_coeffs)
    : coeffs_(std::move(ascending_coeffs)) {
  trim();
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly UniPoly::monomial(int exponent, Rational coeff) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  if (coeff == 0) return UniPoly();
  std::vector<Rational> c(static_cast<std::size_t>(exponent) + 1, Rational(0));
  c.back() = std::move(coeff);
  return UniPoly(std::move(c));
}

UniPoly UniPoly::from_coeffs(std::initializer_list<long long> ascending) {
  std::vector<Rational> c;
  c.reserve(ascending.size());
  for (long long v : ascending) c.emplace_back(v);
  return UniPoly(std::move(c));
}

Rational UniPoly::coeff(int exponent) const {
  if (exponent < 0 || exponent >= static_cast<int>(coeffs_.size()))
    return Rational(0);
  return coeffs_[static_cast<std::size_t>(exponent)];
}

Rational UniPoly::evaluate(const Rational& at) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * at + *it;
  return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
    coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
    coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1,
                            Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

UniPoly UniPoly::operator-() const {
  UniPoly out(*this);
  for (auto& a : out.coeffs_) a = -a;
  return out;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
  UniPoly rem(*this);
  if (rem.degree() < divisor.degree()) return {UniPoly(), rem};
  std::vector<Rational> q(
      static_cast<std::size_t>(rem.degree() - divisor.degree()) + 1,
      Rational(0));
  const Rational& lead = divisor.coeffs_.back();
  while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
    const int shift = rem.degree() - divisor.degree();
    const Rational factor = rem.coeffs_.back() / lead;
    q[static_cast<std::size_t>(shift)] = factor;
    for (std::size_t i = 0; i < divisor.coeffs_.size(); ++i)
      rem.coeffs_[i + static_cast<std::size_t>(shift)] -=
          factor * divisor.coeffs_[i];
    rem.trim();
  }
  return {UniPoly(std::move(q)), rem};
}

std::string UniPoly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (s.empty()) {
      if (negative) s += '-';
    } else {
      s += negative ? " - " : " + ";
    }
    const Rational mag = negative ? Rational(-c) : c;
    const bool integral = boost::multiprecision::denominator(mag) == 1;
    std::string magstr = rational_to_string(mag);
    if (!integral) magstr = "(" + magstr + ")";
    if (k == 0) {
      s += magstr;
    } else {
      if (mag != 1 || !integral) s += magstr;
      s += 'x';
      if (k > 1) {
        s += '^';
        s += std::to_string(k);
      }
    }
  }
  return s;
}

UniPoly pow(const UniPoly& base, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  UniPoly acc = UniPoly::one();
  for (int i = 0; i < exponent; ++i) acc *= base;
  return acc;
}

UniPoly x_power_shifted(int k, int m) {
  return UniPoly::monomial(k) * pow(UniPoly::from_coeffs({-1, 1}), m);
}

UniPoly mobius_substitute(const UniPoly& p, int N) {
  if (N < 0) throw std::invalid_argument("mobius_substitute: N must be >= 0");
  if (p.degree() > N)
    throw std::invalid_argument("mobius_substitute: deg p exceeds N");
  UniPoly out;
  for (int k = 0; k <= p.degree(); ++k) {
    const Rational c = p.coeff(k);
    if (c == 0) continue;
    out += c * x_power_shifted(k, N - k);
  }
  return out;
}

BigInt binomial(long long n, long long k) {
  if (k < 0) return 0;
  if (n >= 0 && k > n) return 0;
  BigInt num = 1, den = 1;
  for (long long i = 0; i < k; ++i) {
    num *= BigInt(n - i);
    den *= BigInt(i + 1);
  }
  return num / den;
}

}  // namespace chromagraph
