#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zdg/bitset.hpp"
#include "zdg/semiring.hpp"

namespace zdg {

/// An n x n matrix of element indices over an ambient semiring. The ambient
/// is held by pointer identity; mixing ambients in arithmetic is an error.
struct Matrix {
  const FiniteSemiring* ring = nullptr;
  int n = 0;
  std::vector<int> e;  // row-major, e[i*n + j]

  int at(int i, int j) const { return e[i * n + j]; }
  int& at(int i, int j) { return e[i * n + j]; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.ring == b.ring && a.n == b.n && a.e == b.e;
  }
};

Matrix mat_zero(const FiniteSemiring& S, int n);
Matrix mat_add(const Matrix& a, const Matrix& b);

/// (AB)_ij = sum_k a_ik * b_kj, summed left to right k = 0..n-1.
Matrix mat_mul(const Matrix& a, const Matrix& b);

bool is_zero(const Matrix& a);

/// The matrix with entry x at (i, j) and zeros elsewhere; i, j are 0-based.
Matrix scaled_unit(const FiniteSemiring& S, int x, int i, int j, int n);

/// Entrywise left product x * A.
Matrix scalar_mul(int x, const Matrix& a);

/// m^(n^2), or throws BudgetError naming m^(n^2) when it exceeds cap.
uint64_t matrix_count(const FiniteSemiring& S, int n, uint64_t cap);

/// All matrices in row-major lexicographic order by entry indices. The
/// position of a matrix in this order is its mixed-radix value, see
/// index_of_matrix.
std::vector<Matrix> enumerate_matrices(const FiniteSemiring& S, int n,
                                       uint64_t cap);

Matrix matrix_from_index(const FiniteSemiring& S, int n, uint64_t index);
uint64_t index_of_matrix(const Matrix& a);

/// The per-column and per-row annihilator intersections of a matrix:
/// right[i] = intersection over k of an(a_ki), left[j] = intersection over
/// k of an(a_jk). Each set contains the zero element.
struct AnnVectors {
  std::vector<Bitset> right;  // C_1..C_n
  std::vector<Bitset> left;   // R_1..R_n

  friend bool operator==(const AnnVectors&, const AnnVectors&) = default;
  size_t hash() const;
};

AnnVectors ann_vectors(const Matrix& a);

/// True iff a and b have identical annihilator vectors; over a commutative
/// antiring this decides twin-ness in the zero-divisor digraph.
bool twins_by_ann(const Matrix& a, const Matrix& b);

/// Matrix literal syntax: rows separated by ';', entries by spaces, entries
/// are element names. Example over bool, n=2: "1 0; 0 0".
Matrix parse_matrix(const FiniteSemiring& S, int n, const std::string& text);
std::string format_matrix(const Matrix& a);

/// Display name: the bare element name for n=1, "[<literal>]" otherwise.
std::string matrix_display_name(const Matrix& a);

}  // namespace zdg
