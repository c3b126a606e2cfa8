#include "zdg/matrix.hpp"

#include <gmpxx.h>

#include <sstream>
#include <stdexcept>

#include "zdg/error.hpp"

namespace zdg {

namespace {

void require_compatible(const Matrix& a, const Matrix& b) {
  if (a.ring != b.ring)
    throw std::invalid_argument("matrices have different ambient semirings");
  if (a.n != b.n) throw std::invalid_argument("matrix dimension mismatch");
}

}  // namespace

Matrix mat_zero(const FiniteSemiring& S, int n) {
  return Matrix{&S, n, std::vector<int>((size_t)n * n, S.zero)};
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
  require_compatible(a, b);
  Matrix c{a.ring, a.n, std::vector<int>(a.e.size())};
  for (size_t k = 0; k < a.e.size(); ++k)
    c.e[k] = a.ring->add_at(a.e[k], b.e[k]);
  return c;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  require_compatible(a, b);
  const FiniteSemiring& S = *a.ring;
  const int n = a.n;
  Matrix c = mat_zero(S, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int acc = S.zero;
      for (int k = 0; k < n; ++k)
        acc = S.add_at(acc, S.mul_at(a.at(i, k), b.at(k, j)));
      c.at(i, j) = acc;
    }
  return c;
}

bool is_zero(const Matrix& a) {
  for (int v : a.e)
    if (v != a.ring->zero) return false;
  return true;
}

Matrix scaled_unit(const FiniteSemiring& S, int x, int i, int j, int n) {
  if (i < 0 || i >= n || j < 0 || j >= n)
    throw std::invalid_argument("unit matrix position out of range");
  if (x < 0 || x >= S.size)
    throw std::invalid_argument("unit matrix entry out of range");
  Matrix a = mat_zero(S, n);
  a.at(i, j) = x;
  return a;
}

Matrix scalar_mul(int x, const Matrix& a) {
  Matrix c{a.ring, a.n, std::vector<int>(a.e.size())};
  for (size_t k = 0; k < a.e.size(); ++k) c.e[k] = a.ring->mul_at(x, a.e[k]);
  return c;
}

uint64_t matrix_count(const FiniteSemiring& S, int n, uint64_t cap) {
  const int cells = n * n;
  uint64_t count = 1;
  bool over = false;
  for (int k = 0; k < cells; ++k) {
    if (count > cap / (uint64_t)S.size) {
      over = true;
      break;
    }
    count *= (uint64_t)S.size;
  }
  if (over || count > cap) {
    mpz_class total;
    mpz_ui_pow_ui(total.get_mpz_t(), (unsigned long)S.size,
                  (unsigned long)cells);
    throw BudgetError("M_" + std::to_string(n) + "(" + S.name + ") has " +
                      std::to_string(S.size) + "^" + std::to_string(cells) +
                      " = " + total.get_str() + " matrices, above the vertex cap " +
                      std::to_string(cap));
  }
  return count;
}

std::vector<Matrix> enumerate_matrices(const FiniteSemiring& S, int n,
                                       uint64_t cap) {
  uint64_t count = matrix_count(S, n, cap);
  std::vector<Matrix> all;
  all.reserve(count);
  for (uint64_t idx = 0; idx < count; ++idx)
    all.push_back(matrix_from_index(S, n, idx));
  return all;
}

Matrix matrix_from_index(const FiniteSemiring& S, int n, uint64_t index) {
  Matrix a{&S, n, std::vector<int>((size_t)n * n)};
  for (int k = n * n - 1; k >= 0; --k) {
    a.e[k] = (int)(index % (uint64_t)S.size);
    index /= (uint64_t)S.size;
  }
  return a;
}

uint64_t index_of_matrix(const Matrix& a) {
  uint64_t idx = 0;
  for (int v : a.e) idx = idx * (uint64_t)a.ring->size + (uint64_t)v;
  return idx;
}

size_t AnnVectors::hash() const {
  uint64_t h = 1469598103934665603ull;
  for (const auto& b : right) {
    h ^= b.hash();
    h *= 1099511628211ull;
  }
  for (const auto& b : left) {
    h ^= b.hash();
    h *= 1099511628211ull;
  }
  return (size_t)h;
}

AnnVectors ann_vectors(const Matrix& a) {
  const FiniteSemiring& S = *a.ring;
  const int n = a.n;
  // One annihilator bitset per element; shared across all n^2 intersections.
  std::vector<Bitset> an(S.size);
  for (int x = 0; x < S.size; ++x) an[x] = annihilator(S, x);

  AnnVectors v;
  v.right.resize(n);
  v.left.resize(n);
  for (int i = 0; i < n; ++i) {
    Bitset c(S.size);
    c.set_all();
    for (int k = 0; k < n; ++k) c &= an[a.at(k, i)];
    v.right[i] = std::move(c);
  }
  for (int j = 0; j < n; ++j) {
    Bitset r(S.size);
    r.set_all();
    for (int k = 0; k < n; ++k) r &= an[a.at(j, k)];
    v.left[j] = std::move(r);
  }
  return v;
}

bool twins_by_ann(const Matrix& a, const Matrix& b) {
  require_compatible(a, b);
  return ann_vectors(a) == ann_vectors(b);
}

Matrix parse_matrix(const FiniteSemiring& S, int n, const std::string& text) {
  std::vector<std::vector<int>> rows;
  std::string row_text;
  std::istringstream in(text);
  while (std::getline(in, row_text, ';')) {
    std::istringstream rs(row_text);
    std::vector<int> row;
    std::string tok;
    while (rs >> tok) {
      int found = -1;
      for (int i = 0; i < S.size; ++i)
        if (S.names[i] == tok) {
          found = i;
          break;
        }
      if (found < 0)
        throw ParseError("unknown element name '" + tok + "' in matrix literal");
      row.push_back(found);
    }
    rows.push_back(std::move(row));
  }
  if ((int)rows.size() != n)
    throw ParseError("matrix literal has " + std::to_string(rows.size()) +
                     " rows, expected " + std::to_string(n));
  Matrix a = mat_zero(S, n);
  for (int i = 0; i < n; ++i) {
    if ((int)rows[i].size() != n)
      throw ParseError("matrix row " + std::to_string(i + 1) + " has " +
                       std::to_string(rows[i].size()) + " entries, expected " +
                       std::to_string(n));
    for (int j = 0; j < n; ++j) a.at(i, j) = rows[i][j];
  }
  return a;
}

std::string format_matrix(const Matrix& a) {
  std::string out;
  for (int i = 0; i < a.n; ++i) {
    if (i) out += "; ";
    for (int j = 0; j < a.n; ++j) {
      if (j) out += " ";
      out += a.ring->names[a.at(i, j)];
    }
  }
  return out;
}

std::string matrix_display_name(const Matrix& a) {
  if (a.n == 1) return a.ring->names[a.e[0]];
  return "[" + format_matrix(a) + "]";
}

}  // namespace zdg
