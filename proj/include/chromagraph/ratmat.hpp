#pragma once

#include "chromagraph/rational.hpp"

#include <optional>
#include <vector>

namespace chromagraph {

/// Row-major dense matrix of exact rationals.
using RationalMatrix = std::vector<std::vector<Rational>>;

RationalMatrix identity_matrix(std::size_t n);
RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b);
std::vector<Rational> mat_vec(const RationalMatrix& m,
                              const std::vector<Rational>& v);

/// Exact Gauss-Jordan inverse; nullopt when singular.
std::optional<RationalMatrix> mat_inverse(const RationalMatrix& m);

/// Solves m x = b exactly; nullopt when m is singular.
std::optional<std::vector<Rational>> mat_solve(RationalMatrix m,
                                               std::vector<Rational> b);

}  // namespace chromagraph
