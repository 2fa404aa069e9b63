#pragma once

#include "chromagraph/rational.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace chromagraph {

/// Dense univariate polynomial over exact rationals. Coefficients are stored
/// by ascending exponent with no trailing zeros; the zero polynomial is the
/// empty vector and reports degree() == -1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> ascending_coeffs);

  static UniPoly zero() { return UniPoly(); }
  static UniPoly one() { return monomial(0); }
  static UniPoly x() { return monomial(1); }
  static UniPoly monomial(int exponent, Rational coeff = Rational(1));
  static UniPoly from_coeffs(std::initializer_list<long long> ascending);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(int exponent) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational evaluate(const Rational& at) const;

  UniPoly& operator+=(const UniPoly& rhs);
  UniPoly& operator-=(const UniPoly& rhs);
  UniPoly& operator*=(const UniPoly& rhs);
  UniPoly& operator*=(const Rational& c);
  UniPoly operator-() const;

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(const Rational& c, UniPoly p) { return p *= c; }
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  /// Long division: returns (quotient, remainder) with
  /// *this == quotient * divisor + remainder and deg remainder < deg divisor.
  /// Throws std::invalid_argument when divisor is zero.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;

  /// Human form, descending exponents: "x^3 - 3x^2 + 2x", "0" for zero.
  /// Non-integer coefficients are parenthesized: "(1/2)x".
  std::string to_string() const;

 private:
  std::vector<Rational> coeffs_;
  void trim();
};

UniPoly pow(const UniPoly& base, int exponent);

/// x^k (x-1)^m
UniPoly x_power_shifted(int k, int m);

/// Sends p of degree <= N to (x-1)^N p(x/(x-1)), expanded exactly.
/// Applying it twice with the same N gives p back.
UniPoly mobius_substitute(const UniPoly& p, int N);

/// C(n, k). Zero when k < 0, or when 0 <= n < k; for negative n the value is
/// the falling-factorial extension n(n-1)...(n-k+1)/k!.
BigInt binomial(long long n, long long k);

}  // namespace chromagraph
