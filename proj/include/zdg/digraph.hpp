#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zdg/bitset.hpp"
#include "zdg/matrix.hpp"
#include "zdg/perm.hpp"
#include "zdg/semiring.hpp"

namespace zdg {

/// A digraph with loops allowed, adjacency kept as bitsets both ways.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int vcount)
      : vcount_(vcount),
        out_(vcount, Bitset(vcount)),
        in_(vcount, Bitset(vcount)) {}

  int vcount() const { return vcount_; }
  void add_edge(int u, int v) {
    out_[u].set(v);
    in_[v].set(u);
  }
  bool has_edge(int u, int v) const { return out_[u].test(v); }
  const Bitset& out(int v) const { return out_[v]; }
  const Bitset& in(int v) const { return in_[v]; }

 private:
  int vcount_ = 0;
  std::vector<Bitset> out_, in_;
};

/// Zero-divisor digraph of a finite magma: u -> v iff product_is_zero(u, v).
template <class F>
Digraph build_zdg(int vcount, F&& product_is_zero) {
  Digraph g(vcount);
  for (int u = 0; u < vcount; ++u)
    for (int v = 0; v < vcount; ++v)
      if (product_is_zero(u, v)) g.add_edge(u, v);
  return g;
}

/// Gamma(S): vertices are the carrier in index order.
Digraph zdg_of_semiring(const FiniteSemiring& S);

/// Gamma(M_n(S)): vertices in enumerate_matrices order. Throws BudgetError
/// when m^(n^2) exceeds vertex_cap.
Digraph zdg_of_matrix_semiring(const FiniteSemiring& S, int n,
                               uint64_t vertex_cap);

/// The twin-vertex partition: classes of equal (out, in) neighborhood
/// pairs, ordered by least vertex; members of each class are ascending.
struct TwinPartition {
  std::vector<int> class_of;             // vertex -> class id
  std::vector<std::vector<int>> classes; // sorted members per class
  std::vector<int> sizes;                // c_i, same order as classes
};

TwinPartition twin_partition(const Digraph& g);

/// The quotient digraph on twin classes, each vertex labelled with its
/// class size.
struct LabelledDigraph {
  Digraph digraph;
  std::vector<int> labels;
};

/// Throws std::invalid_argument if p is not the twin partition of g.
LabelledDigraph quotient_labelled(const Digraph& g, const TwinPartition& p);

/// A label- and adjacency-preserving bijection g1 -> g2 if one exists.
/// Deterministic: vertices are matched in index order with images tried
/// ascending, so the first solution has the lexicographically least image
/// sequence.
std::optional<VertexMap> labelled_isomorphism(const LabelledDigraph& g1,
                                              const LabelledDigraph& g2);

struct SearchBudget {
  int max_vertices = 512;
  uint64_t max_nodes = 100000000;  // backtracking node budget
};

struct AutResult {
  mpz_class order;
  std::vector<VertexMap> generators;
};

/// Exact automorphism group order and a generating set, by stabilizer-chain
/// backtracking over a partition refined by (label, out-degree, in-degree,
/// loop flag) with orbit pruning. Labels empty means unlabelled. Throws
/// BudgetError when the budget is exceeded; never returns a partial answer.
AutResult brute_force_aut(const Digraph& g, const std::vector<int>& labels,
                          const SearchBudget& budget = {});
AutResult brute_force_aut(const Digraph& g, const SearchBudget& budget = {});
AutResult brute_force_aut(const LabelledDigraph& g,
                          const SearchBudget& budget = {});

bool is_digraph_automorphism(const VertexMap& sigma, const Digraph& g);

/// Byte-deterministic DOT export. Node lines in index order; edge lines in
/// lexicographic (i, j) order. Labels show the vertex name (or index) and,
/// for labelled digraphs, " /<class size>".
std::string export_dot(const Digraph& g,
                       const std::vector<std::string>* names = nullptr);
std::string export_dot(const LabelledDigraph& g,
                       const std::vector<std::string>* names = nullptr);

}  // namespace zdg
