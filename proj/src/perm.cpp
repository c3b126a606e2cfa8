#include "zdg/perm.hpp"

#include <deque>
#include <unordered_set>

namespace zdg {

VertexMap identity_map(int n) {
  VertexMap id(n);
  for (int i = 0; i < n; ++i) id[i] = i;
  return id;
}

VertexMap compose(const VertexMap& f, const VertexMap& g) {
  VertexMap h(f.size());
  for (size_t v = 0; v < f.size(); ++v) h[v] = g[f[v]];
  return h;
}

VertexMap inverse(const VertexMap& f) {
  VertexMap h(f.size());
  for (size_t v = 0; v < f.size(); ++v) h[f[v]] = (int)v;
  return h;
}

bool is_permutation(const VertexMap& f) {
  std::vector<char> seen(f.size(), 0);
  for (int x : f) {
    if (x < 0 || x >= (int)f.size() || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

VertexMap transposition_map(int n, int i, int j) {
  VertexMap t = identity_map(n);
  t[i] = j;
  t[j] = i;
  return t;
}

std::optional<std::vector<VertexMap>> group_closure(
    const std::vector<VertexMap>& gens, int degree, uint64_t cap) {
  std::unordered_set<VertexMap, VertexMapHash> seen;
  std::vector<VertexMap> elems;
  std::deque<VertexMap> queue;
  VertexMap id = identity_map(degree);
  if (cap == 0) return std::nullopt;
  seen.insert(id);
  elems.push_back(id);
  queue.push_back(id);
  while (!queue.empty()) {
    VertexMap cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      VertexMap next = compose(cur, g);
      if (seen.insert(next).second) {
        if (elems.size() + 1 > cap) return std::nullopt;
        elems.push_back(next);
        queue.push_back(std::move(next));
      }
    }
  }
  return elems;
}

}  // namespace zdg
