#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace zdg {

// A vertex map is a permutation of 0..n-1 stored as an image table.
using VertexMap = std::vector<int>;

VertexMap identity_map(int n);

/// compose(f, g)[v] = g[f[v]]  (apply f first, then g).
VertexMap compose(const VertexMap& f, const VertexMap& g);

VertexMap inverse(const VertexMap& f);

bool is_permutation(const VertexMap& f);

/// Swaps i and j, fixes everything else.
VertexMap transposition_map(int n, int i, int j);

/// All elements of the group on 0..degree-1 generated by gens, in
/// deterministic breadth-first order starting from the identity. Returns
/// nullopt as soon as the closure would exceed cap elements.
std::optional<std::vector<VertexMap>> group_closure(
    const std::vector<VertexMap>& gens, int degree, uint64_t cap);

struct VertexMapHash {
  size_t operator()(const VertexMap& v) const {
    uint64_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= (uint64_t)x;
      h *= 1099511628211ull;
    }
    return (size_t)h;
  }
};

}  // namespace zdg
