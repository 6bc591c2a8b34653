#pragma once

#include "hfplumb/rational.hpp"

#include <vector>

namespace hfplumb {

using IntMatrix = std::vector<std::vector<BigInt>>;
using RatMatrix = std::vector<std::vector<Rational>>;

// Fraction-free Bareiss elimination with row pivoting. Exact for any size.
BigInt determinant(IntMatrix a);

// Determinants of the k x k leading principal submatrices, k = 1..n.
std::vector<BigInt> leading_minors(const IntMatrix& a);

// Sylvester test: (-1)^k det(Q_k) > 0 for all k.
bool is_negative_definite(const IntMatrix& a);

// Solves a x = rhs exactly. Throws SingularFormError if a is singular.
std::vector<Rational> solve_exact(const IntMatrix& a, const std::vector<Rational>& rhs);

// Exact inverse. Throws SingularFormError if singular.
RatMatrix invert_exact(const IntMatrix& a);

}  // namespace hfplumb
