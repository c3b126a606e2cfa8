#pragma once

#include <vector>

#include "zdg/semiring.hpp"

namespace zdg {

/// An orthogonal decomposition alpha = e_1 + ... + e_s: every part nonzero,
/// parts pairwise annihilating, stored distinct in ascending index order.
/// Parts of a non-zero-divisor are necessarily distinct (a repeated part
/// would square to zero and annihilate alpha), so searching subsets loses
/// nothing and bounds the length by m - 1.
struct Decomposition {
  int alpha = 0;
  std::vector<int> parts;

  int length() const { return (int)parts.size(); }
};

/// ell(alpha): the maximum length over all decompositions of alpha.
/// Throws std::domain_error when alpha is a zero divisor (or the zero of a
/// trivial semiring); the length is defined only on S \ Z(S).
int decomposition_length(const FiniteSemiring& S, int alpha);

/// A decomposition attaining the maximum of decomposition_length over
/// S \ Z(S). Ties: least alpha index, then lexicographically least part
/// set. Requires a commutative antiring with identity (so S \ Z(S) has a
/// usable element); throws std::domain_error otherwise.
Decomposition max_length_decomposition(const FiniteSemiring& S);

/// Every maximal-length alpha with every one of its maximal-length
/// decompositions, alpha ascending, parts in subset-lexicographic order.
std::vector<Decomposition> all_max_length_decompositions(const FiniteSemiring& S);

/// True iff no element of S \ Z(S) has length >= 2 (vacuously true when
/// there is no usable element).
bool is_indecomposable(const FiniteSemiring& S);

}  // namespace zdg
