#include "zdg/decomposition.hpp"

#include <stdexcept>

namespace zdg {

namespace {

// Depth-first search over ascending nonzero element indices. Each chosen
// part must annihilate every previously chosen one; a node whose partial
// sum hits alpha reports its part list. No other pruning is sound: sums
// can reach alpha again after growing past it (there is no order).
template <class Report>
void search_decompositions(const FiniteSemiring& S, int alpha,
                           std::vector<int>& parts, int partial_sum, int next,
                           Report&& report) {
  if (partial_sum == alpha && !parts.empty()) report(parts);
  for (int e = next; e < S.size; ++e) {
    if (e == S.zero) continue;
    bool orthogonal = true;
    for (int p : parts)
      if (S.mul_at(p, e) != S.zero || S.mul_at(e, p) != S.zero) {
        orthogonal = false;
        break;
      }
    if (!orthogonal) continue;
    parts.push_back(e);
    search_decompositions(S, alpha, parts,
                          parts.size() == 1 ? e : S.add_at(partial_sum, e),
                          e + 1, report);
    parts.pop_back();
  }
}

struct Best {
  int length = 0;
  std::vector<int> parts;  // first found at the maximal length = lex least
};

Best best_decomposition_of(const FiniteSemiring& S, int alpha) {
  Best best;
  std::vector<int> parts;
  search_decompositions(S, alpha, parts, S.zero, 0, [&](const std::vector<int>& p) {
    if ((int)p.size() > best.length) {
      best.length = (int)p.size();
      best.parts = p;
    }
  });
  return best;
}

// Usable alphas: nonzero non-zero-divisors. The zero of a trivial semiring
// is formally outside Z(S) but admits no decomposition (parts are nonzero).
std::vector<int> usable_alphas(const FiniteSemiring& S) {
  Bitset z = zero_divisor_set(S);
  std::vector<int> out;
  for (int a = 0; a < S.size; ++a)
    if (a != S.zero && !z.test(a)) out.push_back(a);
  return out;
}

}  // namespace

int decomposition_length(const FiniteSemiring& S, int alpha) {
  if (alpha < 0 || alpha >= S.size)
    throw std::invalid_argument("alpha out of range");
  if (alpha == S.zero || zero_divisor_set(S).test(alpha))
    throw std::domain_error("length is defined only on S \\ Z(S); '" +
                            S.names[alpha] + "' is not usable");
  return best_decomposition_of(S, alpha).length;
}

Decomposition max_length_decomposition(const FiniteSemiring& S) {
  Decomposition best;
  int best_len = 0;
  for (int alpha : usable_alphas(S)) {
    Best b = best_decomposition_of(S, alpha);
    if (b.length > best_len) {
      best_len = b.length;
      best = Decomposition{alpha, b.parts};
    }
  }
  if (best_len == 0)
    throw std::domain_error("no usable element: S \\ Z(S) has no nonzero member");
  return best;
}

std::vector<Decomposition> all_max_length_decompositions(const FiniteSemiring& S) {
  std::vector<int> alphas = usable_alphas(S);
  int max_len = 0;
  for (int alpha : alphas)
    max_len = std::max(max_len, best_decomposition_of(S, alpha).length);

  std::vector<Decomposition> out;
  for (int alpha : alphas) {
    std::vector<int> parts;
    search_decompositions(S, alpha, parts, S.zero, 0,
                          [&](const std::vector<int>& p) {
                            if ((int)p.size() == max_len)
                              out.push_back(Decomposition{alpha, p});
                          });
  }
  return out;
}

bool is_indecomposable(const FiniteSemiring& S) {
  for (int alpha : usable_alphas(S))
    if (best_decomposition_of(S, alpha).length >= 2) return false;
  return true;
}

}  // namespace zdg
