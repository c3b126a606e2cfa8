#include "zdg/digraph.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "zdg/error.hpp"

namespace zdg {

Digraph zdg_of_semiring(const FiniteSemiring& S) {
  return build_zdg(S.size, [&](int u, int v) { return S.mul_at(u, v) == S.zero; });
}

Digraph zdg_of_matrix_semiring(const FiniteSemiring& S, int n,
                               uint64_t vertex_cap) {
  uint64_t count = matrix_count(S, n, vertex_cap);
  std::vector<Matrix> all = enumerate_matrices(S, n, vertex_cap);
  Digraph g((int)count);
  for (uint64_t u = 0; u < count; ++u)
    for (uint64_t v = 0; v < count; ++v)
      if (is_zero(mat_mul(all[u], all[v]))) g.add_edge((int)u, (int)v);
  return g;
}

TwinPartition twin_partition(const Digraph& g) {
  struct PairHash {
    size_t operator()(const std::pair<Bitset, Bitset>& p) const {
      return p.first.hash() * 1099511628211ull ^ p.second.hash();
    }
  };
  TwinPartition part;
  part.class_of.resize(g.vcount());
  std::unordered_map<std::pair<Bitset, Bitset>, int, PairHash> ids;
  for (int v = 0; v < g.vcount(); ++v) {
    auto key = std::make_pair(g.out(v), g.in(v));
    auto [it, inserted] = ids.try_emplace(key, (int)part.classes.size());
    if (inserted) part.classes.emplace_back();
    part.class_of[v] = it->second;
    part.classes[it->second].push_back(v);
  }
  part.sizes.reserve(part.classes.size());
  for (const auto& c : part.classes) part.sizes.push_back((int)c.size());
  return part;
}

LabelledDigraph quotient_labelled(const Digraph& g, const TwinPartition& p) {
  if ((int)p.class_of.size() != g.vcount())
    throw std::invalid_argument("partition does not match digraph");
  int t = (int)p.classes.size();
  int covered = 0;
  for (const auto& cls : p.classes) {
    if (cls.empty()) throw std::invalid_argument("partition has an empty class");
    covered += (int)cls.size();
    for (int v : cls) {
      if (v < 0 || v >= g.vcount() || p.class_of[v] != p.class_of[cls[0]])
        throw std::invalid_argument("partition does not match digraph");
      if (!(g.out(v) == g.out(cls[0]) && g.in(v) == g.in(cls[0])))
        throw std::invalid_argument("partition is not the twin partition");
    }
  }
  if (covered != g.vcount())
    throw std::invalid_argument("partition does not cover the vertex set");
  // Maximality: distinct classes must have distinct neighborhood pairs.
  for (int a = 0; a < t; ++a)
    for (int b = a + 1; b < t; ++b)
      if (g.out(p.classes[a][0]) == g.out(p.classes[b][0]) &&
          g.in(p.classes[a][0]) == g.in(p.classes[b][0]))
        throw std::invalid_argument("partition is finer than the twin partition");
  LabelledDigraph q;
  q.digraph = Digraph(t);
  q.labels = p.sizes;
  for (int a = 0; a < t; ++a)
    for (int b = 0; b < t; ++b)
      if (g.has_edge(p.classes[a][0], p.classes[b][0])) q.digraph.add_edge(a, b);
  return q;
}

namespace {

// Refinement key: (label, out-degree, in-degree, loop flag).
using CellKey = std::tuple<int, int, int, bool>;

std::vector<CellKey> cell_keys(const Digraph& g, const std::vector<int>& labels) {
  std::vector<CellKey> keys(g.vcount());
  for (int v = 0; v < g.vcount(); ++v)
    keys[v] = {labels.empty() ? 0 : labels[v], g.out(v).count(),
               g.in(v).count(), g.has_edge(v, v)};
  return keys;
}

// Backtracking search shared by the automorphism oracle and the labelled
// isomorphism test. Maps vertices of g1 onto g2 (the same digraph for
// automorphisms), in the given processing order, images ascending. Vertices
// already assigned in `image` (>= 0) are fixed. Returns true if a full
// consistent extension exists, leaving it in `image`.
class ExtensionSearch {
 public:
  ExtensionSearch(const Digraph& g1, const Digraph& g2,
                  const std::vector<int>& cell1, const std::vector<int>& cell2,
                  const std::vector<int>& order, uint64_t* node_budget)
      : g1_(g1), g2_(g2), cell1_(cell1), cell2_(cell2), order_(order),
        node_budget_(node_budget) {}

  bool extend(std::vector<int>& image, std::vector<char>& used,
              size_t depth) const {
    while (depth < order_.size() && image[order_[depth]] >= 0) ++depth;
    if (depth == order_.size()) return true;
    int v = order_[depth];
    for (int w = 0; w < g2_.vcount(); ++w) {
      if (used[w] || cell2_[w] != cell1_[v]) continue;
      if (node_budget_) {
        if (*node_budget_ == 0)
          throw BudgetError("automorphism search exceeded its node budget");
        --*node_budget_;
      }
      if (!consistent(image, v, w)) continue;
      image[v] = w;
      used[w] = 1;
      if (extend(image, used, depth + 1)) return true;
      image[v] = -1;
      used[w] = 0;
    }
    return false;
  }

  // Adjacency agreement with every already-assigned vertex, both
  // directions, loops included (u == v case).
  bool consistent(const std::vector<int>& image, int v, int w) const {
    if (g1_.has_edge(v, v) != g2_.has_edge(w, w)) return false;
    for (int u = 0; u < g1_.vcount(); ++u) {
      int x = image[u];
      if (x < 0) continue;
      if (g1_.has_edge(v, u) != g2_.has_edge(w, x)) return false;
      if (g1_.has_edge(u, v) != g2_.has_edge(x, w)) return false;
    }
    return true;
  }

 private:
  const Digraph& g1_;
  const Digraph& g2_;
  const std::vector<int>& cell1_;
  const std::vector<int>& cell2_;
  const std::vector<int>& order_;
  uint64_t* node_budget_;
};

std::vector<int> cells_from_keys(const std::vector<CellKey>& keys,
                                 std::map<CellKey, int>& id_of) {
  std::vector<int> cells(keys.size());
  for (size_t v = 0; v < keys.size(); ++v) {
    auto [it, inserted] = id_of.try_emplace(keys[v], (int)id_of.size());
    cells[v] = it->second;
  }
  return cells;
}

}  // namespace

AutResult brute_force_aut(const Digraph& g, const std::vector<int>& labels,
                          const SearchBudget& budget) {
  const int n = g.vcount();
  if (n > budget.max_vertices)
    throw BudgetError("automorphism search refused: " + std::to_string(n) +
                      " vertices exceed the limit of " +
                      std::to_string(budget.max_vertices));
  if (!labels.empty() && (int)labels.size() != n)
    throw std::invalid_argument("label vector does not match vertex count");

  std::map<CellKey, int> cell_ids;
  std::vector<int> cell = cells_from_keys(cell_keys(g, labels), cell_ids);
  std::vector<int> cell_size(cell_ids.size(), 0);
  for (int c : cell) ++cell_size[c];

  // Process rarest cells first, ties by vertex index. The stabilizer-chain
  // order below computes |Aut| as the product of orbit sizes of each vertex
  // under the stabilizer of all earlier ones.
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return cell_size[cell[a]] < cell_size[cell[b]];
  });

  uint64_t nodes = budget.max_nodes;
  ExtensionSearch search(g, g, cell, cell, order, &nodes);

  AutResult result;
  result.order = 1;
  for (size_t level = 0; level < order.size(); ++level) {
    int v = order[level];
    if (cell_size[cell[v]] == 1) continue;

    // Orbit of v under the generators found at this level; other levels'
    // generators fix v or move earlier vertices. Forward closure is enough:
    // in a finite group every inverse is a positive power.
    Bitset orbit(n);
    orbit.set(v);
    std::vector<VertexMap> level_gens;
    auto grow_orbit = [&]() {
      bool changed = true;
      while (changed) {
        changed = false;
        for (const VertexMap& gen : level_gens)
          for (int x = orbit.next(0); x >= 0; x = orbit.next(x + 1))
            if (!orbit.test(gen[x])) {
              orbit.set(gen[x]);
              changed = true;
            }
      }
    };

    for (int w = 0; w < n; ++w) {
      if (w == v || cell[w] != cell[v] || orbit.test(w)) continue;
      // Any automorphism fixing order[0..level-1] pointwise with v -> w.
      std::vector<int> image(n, -1);
      std::vector<char> used(n, 0);
      for (size_t k = 0; k < level; ++k) {
        image[order[k]] = order[k];
        used[order[k]] = 1;
      }
      if (!search.consistent(image, v, w)) continue;
      image[v] = w;
      used[w] = 1;
      if (search.extend(image, used, level + 1)) {
        result.generators.push_back(image);
        level_gens.push_back(std::move(image));
        grow_orbit();
      }
    }
    result.order *= orbit.count();
  }

  for (const auto& gen : result.generators)
    if (!is_digraph_automorphism(gen, g))
      throw std::logic_error("search produced a non-automorphism");
  return result;
}

AutResult brute_force_aut(const Digraph& g, const SearchBudget& budget) {
  return brute_force_aut(g, std::vector<int>{}, budget);
}

AutResult brute_force_aut(const LabelledDigraph& g, const SearchBudget& budget) {
  return brute_force_aut(g.digraph, g.labels, budget);
}

std::optional<VertexMap> labelled_isomorphism(const LabelledDigraph& g1,
                                              const LabelledDigraph& g2) {
  if (g1.digraph.vcount() != g2.digraph.vcount()) return std::nullopt;
  const int n = g1.digraph.vcount();

  std::map<CellKey, int> cell_ids;
  std::vector<int> cell1 = cells_from_keys(cell_keys(g1.digraph, g1.labels), cell_ids);
  std::vector<int> cell2 = cells_from_keys(cell_keys(g2.digraph, g2.labels), cell_ids);
  std::vector<int> count1(cell_ids.size(), 0), count2(cell_ids.size(), 0);
  for (int c : cell1) ++count1[c];
  for (int c : cell2) ++count2[c];
  if (count1 != count2) return std::nullopt;

  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  ExtensionSearch search(g1.digraph, g2.digraph, cell1, cell2, order, nullptr);
  std::vector<int> image(n, -1);
  std::vector<char> used(n, 0);
  if (search.extend(image, used, 0)) return image;
  return std::nullopt;
}

bool is_digraph_automorphism(const VertexMap& sigma, const Digraph& g) {
  if ((int)sigma.size() != g.vcount() || !is_permutation(sigma)) return false;
  // sigma(N+(u)) == N+(sigma(u)) for every u; in-neighborhoods follow.
  for (int u = 0; u < g.vcount(); ++u) {
    Bitset mapped(g.vcount());
    for (int v = g.out(u).next(0); v >= 0; v = g.out(u).next(v + 1))
      mapped.set(sigma[v]);
    if (!(mapped == g.out(sigma[u]))) return false;
  }
  return true;
}

namespace {

std::string dot_body(const Digraph& g, const std::vector<std::string>* names,
                     const std::vector<int>* labels) {
  std::ostringstream out;
  out << "digraph zdg {\n";
  for (int v = 0; v < g.vcount(); ++v) {
    out << "  v" << v << " [label=\"";
    if (names)
      out << (*names)[v];
    else
      out << v;
    if (labels) out << " /" << (*labels)[v];
    out << "\"];\n";
  }
  for (int u = 0; u < g.vcount(); ++u)
    for (int v = g.out(u).next(0); v >= 0; v = g.out(u).next(v + 1))
      out << "  v" << u << " -> v" << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace

std::string export_dot(const Digraph& g, const std::vector<std::string>* names) {
  return dot_body(g, names, nullptr);
}

std::string export_dot(const LabelledDigraph& g,
                       const std::vector<std::string>* names) {
  return dot_body(g.digraph, names, &g.labels);
}

}  // namespace zdg
