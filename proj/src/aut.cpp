#include "zdg/aut.hpp"

#include <algorithm>
#include <stdexcept>

#include "zdg/error.hpp"

namespace zdg {

namespace {

mpz_class factorial(unsigned long k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return f;
}

const char* first_failed_axiom(const AxiomReport& r) {
  if (!r.additive_monoid.ok) return "additive-monoid";
  if (!r.multiplicative_semigroup.ok) return "multiplicative-semigroup";
  if (!r.left_distributive.ok) return "left-distributivity";
  if (!r.right_distributive.ok) return "right-distributivity";
  if (!r.zero_annihilates.ok) return "zero-annihilates";
  if (!r.commutative.ok) return "commutativity";
  if (!r.antinegative.ok) return "antinegativity";
  if (!r.has_identity.ok) return "identity";
  return nullptr;
}

void require_commutative_antiring_with_identity(const FiniteSemiring& S) {
  if (const char* axiom = first_failed_axiom(check_axioms(S)))
    throw std::domain_error(
        std::string("not a commutative antiring with identity: '") + axiom +
        "' fails");
}

ComponentMapSpec identity_spec(const ComponentAnalysis& analysis, int n) {
  ComponentMapSpec spec;
  int s = analysis.alpha.length();
  spec.omega = identity_map(s);
  for (int i = 0; i < s; ++i) {
    spec.pi.push_back(identity_map(n));
    spec.tau.push_back(identity_map((int)analysis.subs[i].carrier.size()));
  }
  return spec;
}

}  // namespace

ComponentAnalysis analyze_decomposition(const FiniteSemiring& S,
                                        const Decomposition& alpha,
                                        const SearchBudget& budget) {
  ComponentAnalysis a;
  a.alpha = alpha;
  const int s = alpha.length();
  for (int i = 0; i < s; ++i) {
    a.subs.push_back(scale_subsemiring(S, alpha.parts[i]));
    a.comp_digraphs.push_back(zdg_of_semiring(a.subs.back().ring));
    a.comp_twins.push_back(twin_partition(a.comp_digraphs.back()));
    a.comp_quotients.push_back(
        quotient_labelled(a.comp_digraphs.back(), a.comp_twins.back()));
  }

  a.class_of_part.assign(s, -1);
  a.iso_rep_to_part.resize(s);
  for (int p = 0; p < s; ++p) {
    for (size_t c = 0; c < a.omega_classes.size(); ++c) {
      int rep = a.omega_classes[c][0];
      if (auto iso =
              labelled_isomorphism(a.comp_quotients[rep], a.comp_quotients[p])) {
        a.class_of_part[p] = (int)c;
        a.omega_classes[c].push_back(p);
        a.iso_rep_to_part[p] = *iso;
        break;
      }
    }
    if (a.class_of_part[p] < 0) {
      a.class_of_part[p] = (int)a.omega_classes.size();
      a.omega_classes.push_back({p});
      a.iso_rep_to_part[p] =
          identity_map(a.comp_quotients[p].digraph.vcount());
    }
  }

  for (const auto& cls : a.omega_classes) {
    AutResult r = brute_force_aut(a.comp_quotients[cls[0]], budget);
    a.quotient_aut_orders.push_back(r.order);
    a.quotient_aut_gens.push_back(std::move(r.generators));
  }
  return a;
}

ComponentAnalysis component_analysis(const FiniteSemiring& S,
                                     const SearchBudget& budget) {
  require_commutative_antiring_with_identity(S);
  return analyze_decomposition(S, max_length_decomposition(S), budget);
}

mpz_class aut_order_formula(const ComponentAnalysis& analysis,
                            const std::vector<int>& twin_sizes, int n) {
  mpz_class total = 1;
  for (int c : twin_sizes) total *= factorial((unsigned long)c);
  const mpz_class n_fact = factorial((unsigned long)n);
  for (size_t c = 0; c < analysis.omega_classes.size(); ++c) {
    const unsigned long x = analysis.omega_classes[c].size();
    mpz_class base = n_fact * analysis.quotient_aut_orders[c];
    mpz_class powed;
    mpz_pow_ui(powed.get_mpz_t(), base.get_mpz_t(), x);
    total *= powed * factorial(x);
  }
  return total;
}

mpz_class aut_order(const FiniteSemiring& S, int n, uint64_t vertex_cap,
                    const SearchBudget& budget) {
  ComponentAnalysis analysis = component_analysis(S, budget);
  Digraph g = zdg_of_matrix_semiring(S, n, vertex_cap);
  return aut_order_formula(analysis, twin_partition(g).sizes, n);
}

VertexMap theta_permutation(const std::vector<int>& pi,
                            const FiniteSemiring& S, int n,
                            uint64_t vertex_cap) {
  if ((int)pi.size() != n || !is_permutation(pi))
    throw std::invalid_argument("pi is not a permutation of 0..n-1");
  const uint64_t count = matrix_count(S, n, vertex_cap);
  VertexMap map(count);
  for (uint64_t idx = 0; idx < count; ++idx) {
    Matrix a = matrix_from_index(S, n, idx);
    Matrix b = mat_zero(S, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) b.at(pi[i], pi[j]) = a.at(i, j);
    map[idx] = (int)index_of_matrix(b);
  }
  return map;
}

VertexMap lift_quotient_map_to_elements(const VertexMap& qmap,
                                        const TwinPartition& src,
                                        const TwinPartition& dst) {
  if (qmap.size() != src.classes.size() ||
      src.classes.size() != dst.classes.size() ||
      src.class_of.size() != dst.class_of.size())
    throw std::invalid_argument("quotient map does not match the partitions");
  VertexMap out(src.class_of.size());
  for (size_t k = 0; k < src.classes.size(); ++k) {
    const auto& from = src.classes[k];
    const auto& to = dst.classes[qmap[k]];
    if (from.size() != to.size())
      throw std::invalid_argument("class sizes differ under the quotient map");
    for (size_t j = 0; j < from.size(); ++j) out[from[j]] = to[j];
  }
  return out;
}

VertexMap lift_component_map(const ComponentMapSpec& spec,
                             const ComponentAnalysis& analysis,
                             const FiniteSemiring& S, int n,
                             uint64_t vertex_cap) {
  const int s = analysis.alpha.length();
  if ((int)spec.omega.size() != s || !is_permutation(spec.omega))
    throw std::invalid_argument("omega is not a permutation of the components");
  if ((int)spec.pi.size() != s || (int)spec.tau.size() != s)
    throw std::invalid_argument("spec must carry one pi and one tau per component");

  for (int i = 0; i < s; ++i) {
    if ((int)spec.pi[i].size() != n || !is_permutation(spec.pi[i]))
      throw std::invalid_argument("pi is not a permutation of 0..n-1");
    const ScaledSubsemiring& src = analysis.subs[i];
    const ScaledSubsemiring& dst = analysis.subs[spec.omega[i]];
    const std::vector<int>& tau = spec.tau[i];
    if (tau.size() != src.carrier.size() ||
        src.carrier.size() != dst.carrier.size() || !is_permutation(tau))
      throw std::invalid_argument("tau is not a bijection between the carriers");
    if (tau[src.ring.zero] != dst.ring.zero)
      throw std::invalid_argument("tau must map zero to zero");
    for (int x = 0; x < src.ring.size; ++x)
      for (int y = 0; y < src.ring.size; ++y)
        if ((src.ring.mul_at(x, y) == src.ring.zero) !=
            (dst.ring.mul_at(tau[x], tau[y]) == dst.ring.zero))
          throw std::invalid_argument(
              "tau is not an isomorphism of the component digraphs");
  }

  const uint64_t count = matrix_count(S, n, vertex_cap);
  VertexMap out(count);
  std::vector<char> seen(count, 0);
  for (uint64_t idx = 0; idx < count; ++idx) {
    Matrix a = matrix_from_index(S, n, idx);
    Matrix acc = mat_zero(S, n);
    for (int i = 0; i < s; ++i) {
      const int w = spec.omega[i];
      Matrix comp = mat_zero(S, n);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
          int scaled = S.mul_at(analysis.alpha.parts[i], a.at(r, c));
          int si = analysis.subs[i].sub_index_of(scaled);
          if (si < 0) throw std::logic_error("e_i * a left the carrier of e_iS");
          comp.at(spec.pi[i][r], spec.pi[i][c]) =
              analysis.subs[w].carrier[spec.tau[i][si]];
        }
      acc = mat_add(acc, comp);
    }
    uint64_t img = index_of_matrix(acc);
    if (seen[img]) throw std::logic_error("lifted component map is not a bijection");
    seen[img] = 1;
    out[idx] = (int)img;
  }
  return out;
}

std::vector<VertexMap> twin_transpositions(const TwinPartition& p, int vcount) {
  std::vector<VertexMap> out;
  for (const auto& cls : p.classes)
    for (size_t j = 0; j + 1 < cls.size(); ++j)
      out.push_back(transposition_map(vcount, cls[j], cls[j + 1]));
  return out;
}

AutDescription describe_aut(const FiniteSemiring& S, int n,
                            uint64_t vertex_cap, const SearchBudget& budget) {
  AutDescription d;
  d.n = n;
  d.analysis = component_analysis(S, budget);
  d.digraph = zdg_of_matrix_semiring(S, n, vertex_cap);
  d.twins = twin_partition(d.digraph);
  d.regular_order = 1;
  for (int c : d.twins.sizes) d.regular_order *= factorial((unsigned long)c);
  d.total_order = aut_order_formula(d.analysis, d.twins.sizes, n);

  const ComponentAnalysis& a = d.analysis;

  // (a) regular part: adjacent transpositions inside each twin class.
  d.generators = twin_transpositions(d.twins, d.digraph.vcount());

  // (b) row/column permutations, one representative per component class;
  // conjugates for equivalent components come from family (d).
  for (const auto& cls : a.omega_classes) {
    int rep = cls[0];
    for (int k = 0; k + 1 < n; ++k) {
      ComponentMapSpec spec = identity_spec(a, n);
      spec.pi[rep] = transposition_map(n, k, k + 1);
      d.generators.push_back(lift_component_map(spec, a, S, n, vertex_cap));
    }
  }

  // (c) quotient automorphisms of each representative, lifted to element
  // maps by ascending class matching.
  for (size_t ci = 0; ci < a.omega_classes.size(); ++ci) {
    int rep = a.omega_classes[ci][0];
    for (const VertexMap& qgen : a.quotient_aut_gens[ci]) {
      ComponentMapSpec spec = identity_spec(a, n);
      spec.tau[rep] = lift_quotient_map_to_elements(qgen, a.comp_twins[rep],
                                                    a.comp_twins[rep]);
      d.generators.push_back(lift_component_map(spec, a, S, n, vertex_cap));
    }
  }

  // (d) swaps of consecutive equivalent components through the stored
  // quotient isomorphisms.
  for (const auto& cls : a.omega_classes)
    for (size_t j = 0; j + 1 < cls.size(); ++j) {
      int p1 = cls[j], p2 = cls[j + 1];
      VertexMap psi = compose(inverse(a.iso_rep_to_part[p1]),
                              a.iso_rep_to_part[p2]);  // Q_{p1} -> Q_{p2}
      ComponentMapSpec spec = identity_spec(a, n);
      std::swap(spec.omega[p1], spec.omega[p2]);
      spec.tau[p1] = lift_quotient_map_to_elements(psi, a.comp_twins[p1],
                                                   a.comp_twins[p2]);
      spec.tau[p2] = lift_quotient_map_to_elements(inverse(psi),
                                                   a.comp_twins[p2],
                                                   a.comp_twins[p1]);
      d.generators.push_back(lift_component_map(spec, a, S, n, vertex_cap));
    }

  for (const VertexMap& g : d.generators)
    if (!is_digraph_automorphism(g, d.digraph))
      throw std::logic_error("synthesized generator is not an automorphism");
  return d;
}

std::vector<VertexMap> synthesize_generators(const FiniteSemiring& S, int n,
                                             uint64_t vertex_cap,
                                             const SearchBudget& budget) {
  return describe_aut(S, n, vertex_cap, budget).generators;
}

MatrixAutContext make_matrix_aut_context(const FiniteSemiring& S, int n,
                                         const ComponentAnalysis& analysis,
                                         const Digraph& digraph,
                                         const TwinPartition& twins,
                                         uint64_t vertex_cap) {
  MatrixAutContext ctx;
  ctx.S = &S;
  ctx.n = n;
  ctx.analysis = &analysis;
  ctx.digraph = &digraph;
  ctx.twins = &twins;
  ctx.matrices = enumerate_matrices(S, n, vertex_cap);
  const int vcount = (int)ctx.matrices.size();
  const int s = analysis.alpha.length();
  for (int i = 0; i < s; ++i) {
    Bitset vertices(vcount);
    for (int v = 0; v < vcount; ++v)
      vertices.set(
          (int)index_of_matrix(scalar_mul(analysis.alpha.parts[i],
                                          ctx.matrices[v])));
    ctx.part_vertex_sets.push_back(std::move(vertices));

    Bitset carrier(S.size);
    for (int c : analysis.subs[i].carrier) carrier.set(c);
    ctx.part_carriers.push_back(std::move(carrier));

    Bitset zd(S.size);
    Bitset sub_zd = zero_divisor_set(analysis.subs[i].ring);
    for (size_t k = 0; k < analysis.subs[i].carrier.size(); ++k)
      if (sub_zd.test((int)k)) zd.set(analysis.subs[i].carrier[k]);
    ctx.part_zero_divisors.push_back(std::move(zd));
  }
  return ctx;
}

std::optional<std::string> check_annihilator_images(const MatrixAutContext& ctx,
                                                    const VertexMap& sigma) {
  const Digraph& g = *ctx.digraph;
  for (int v = 0; v < g.vcount(); ++v) {
    Bitset mapped_out(g.vcount()), mapped_in(g.vcount());
    for (int u = g.out(v).next(0); u >= 0; u = g.out(v).next(u + 1))
      mapped_out.set(sigma[u]);
    for (int u = g.in(v).next(0); u >= 0; u = g.in(v).next(u + 1))
      mapped_in.set(sigma[u]);
    if (!(mapped_out == g.out(sigma[v])) || !(mapped_in == g.in(sigma[v])))
      return "sigma(an(A)) != an(sigma(A)) for A = " +
             matrix_display_name(ctx.matrices[v]);
  }
  return std::nullopt;
}

std::optional<std::string> check_additive_twins(const MatrixAutContext& ctx,
                                                const VertexMap& sigma) {
  const int vcount = (int)ctx.matrices.size();
  for (int u = 0; u < vcount; ++u)
    for (int v = 0; v < vcount; ++v) {
      int lhs = sigma[(int)index_of_matrix(mat_add(ctx.matrices[u],
                                                   ctx.matrices[v]))];
      int rhs = (int)index_of_matrix(
          mat_add(ctx.matrices[sigma[u]], ctx.matrices[sigma[v]]));
      if (ctx.twins->class_of[lhs] != ctx.twins->class_of[rhs])
        return "sigma(A+B) and sigma(A)+sigma(B) are not twins for A = " +
               matrix_display_name(ctx.matrices[u]) + ", B = " +
               matrix_display_name(ctx.matrices[v]);
    }
  return std::nullopt;
}

std::optional<std::vector<int>> componentwise_omega(const MatrixAutContext& ctx,
                                                    const VertexMap& sigma) {
  const int s = ctx.analysis->alpha.length();
  const int vcount = (int)ctx.matrices.size();
  std::vector<int> omega(s, -1);
  std::vector<char> taken(s, 0);
  for (int r = 0; r < s; ++r) {
    Bitset image(vcount);
    const Bitset& src = ctx.part_vertex_sets[r];
    for (int v = src.next(0); v >= 0; v = src.next(v + 1)) image.set(sigma[v]);
    for (int t = 0; t < s; ++t)
      if (!taken[t] && image == ctx.part_vertex_sets[t]) {
        omega[r] = t;
        taken[t] = 1;
        break;
      }
    if (omega[r] < 0) return std::nullopt;
  }
  return omega;
}

namespace {

// The unique nonzero position of a matrix, or nullopt if the number of
// nonzero entries differs from one.
std::optional<std::pair<int, int>> single_nonzero_position(const Matrix& a) {
  std::optional<std::pair<int, int>> pos;
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j)
      if (a.at(i, j) != a.ring->zero) {
        if (pos) return std::nullopt;
        pos = {i, j};
      }
  return pos;
}

}  // namespace

std::optional<std::string> check_scaled_unit_images(const MatrixAutContext& ctx,
                                                    const VertexMap& sigma,
                                                    const std::vector<int>& omega) {
  const FiniteSemiring& S = *ctx.S;
  const int s = ctx.analysis->alpha.length();
  for (int u = 0; u < s; ++u) {
    const Bitset& carrier = ctx.part_carriers[u];
    for (int x = carrier.next(0); x >= 0; x = carrier.next(x + 1)) {
      if (x == S.zero) continue;
      for (int i = 0; i < ctx.n; ++i)
        for (int j = 0; j < ctx.n; ++j) {
          int v = (int)index_of_matrix(scaled_unit(S, x, i, j, ctx.n));
          const Matrix& img = ctx.matrices[sigma[v]];
          auto pos = single_nonzero_position(img);
          std::string unit = S.names[x] + "E_" + std::to_string(i + 1) +
                             std::to_string(j + 1);
          if (!pos)
            return "sigma(" + unit + ") = " + matrix_display_name(img) +
                   " is not a scaled unit matrix";
          int z = img.at(pos->first, pos->second);
          if (!ctx.part_carriers[omega[u]].test(z))
            return "sigma(" + unit + ") has scalar " + S.names[z] +
                   " outside component " + std::to_string(omega[u] + 1);
          if (ctx.part_zero_divisors[u].test(x) !=
              ctx.part_zero_divisors[omega[u]].test(z))
            return "sigma(" + unit + ") does not preserve zero-divisor status";
        }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_unit_permutation_form(
    const MatrixAutContext& ctx, const VertexMap& sigma,
    const std::vector<int>& omega) {
  const FiniteSemiring& S = *ctx.S;
  const int s = ctx.analysis->alpha.length();
  for (int u = 0; u < s; ++u) {
    const int e_u = ctx.analysis->alpha.parts[u];
    std::vector<int> row(ctx.n, -1), col(ctx.n, -1);
    for (int i = 0; i < ctx.n; ++i)
      for (int j = 0; j < ctx.n; ++j) {
        int v = (int)index_of_matrix(scaled_unit(S, e_u, i, j, ctx.n));
        auto pos = single_nonzero_position(ctx.matrices[sigma[v]]);
        if (!pos)
          return "sigma(e_" + std::to_string(u + 1) + "E_" +
                 std::to_string(i + 1) + std::to_string(j + 1) +
                 ") is not a scaled unit matrix";
        if (row[i] < 0) row[i] = pos->first;
        if (col[j] < 0) col[j] = pos->second;
        if (row[i] != pos->first || col[j] != pos->second)
          return "unit images of component " + std::to_string(u + 1) +
                 " are not positioned by a single row/column pair";
      }
    if (row != col || !is_permutation(row))
      return "unit images of component " + std::to_string(u + 1) +
             " are not of the form (pi(i), pi(j))";
  }
  return std::nullopt;
}

std::optional<std::string> run_lemma_battery(const MatrixAutContext& ctx,
                                             const VertexMap& sigma) {
  if (auto w = check_annihilator_images(ctx, sigma))
    return "annihilators: " + *w;
  if (auto w = check_additive_twins(ctx, sigma)) return "additive: " + *w;
  auto omega = componentwise_omega(ctx, sigma);
  if (!omega) return std::string("componentwise: no component permutation exists");
  if (auto w = check_scaled_unit_images(ctx, sigma, *omega))
    return "elementary/divisors: " + *w;
  if (auto w = check_unit_permutation_form(ctx, sigma, *omega))
    return "permutations: " + *w;
  return std::nullopt;
}

bool VerificationReport::has_failure() const {
  for (const auto& c : checks)
    if (c.status == VerifyCheck::Status::Fail) return true;
  return false;
}

VerificationReport verify(const FiniteSemiring& S, int n, uint64_t vertex_cap,
                          const SearchBudget& budget, uint64_t closure_cap) {
  VerificationReport report;
  auto add = [&](const std::string& name, VerifyCheck::Status status,
                 const std::string& detail = "") {
    report.checks.push_back({name, status, detail});
  };

  AutDescription d = describe_aut(S, n, vertex_cap, budget);

  std::optional<AutResult> oracle;
  try {
    oracle = brute_force_aut(d.digraph, budget);
  } catch (const BudgetError&) {
  }

  if (oracle) {
    if (oracle->order == d.total_order)
      add("order-oracle", VerifyCheck::Status::Pass);
    else
      add("order-oracle", VerifyCheck::Status::Fail,
          "oracle " + oracle->order.get_str() + " != formula " +
              d.total_order.get_str());
  } else {
    add("order-oracle", VerifyCheck::Status::Skipped, "budget");
  }

  auto closure = group_closure(d.generators, d.digraph.vcount(), closure_cap);
  if (closure) {
    if (mpz_class((unsigned long)closure->size()) == d.total_order)
      add("generator-closure", VerifyCheck::Status::Pass);
    else
      add("generator-closure", VerifyCheck::Status::Fail,
          "closure " + std::to_string(closure->size()) + " != formula " +
              d.total_order.get_str());
  } else {
    add("generator-closure", VerifyCheck::Status::Skipped, "budget");
  }

  if (oracle) {
    MatrixAutContext ctx =
        make_matrix_aut_context(S, n, d.analysis, d.digraph, d.twins, vertex_cap);
    std::optional<std::string> wit_ann, wit_add, wit_comp, wit_elem, wit_perm;
    for (size_t g = 0; g < oracle->generators.size(); ++g) {
      const VertexMap& sigma = oracle->generators[g];
      auto tag = [&](const std::string& w) {
        return "generator " + std::to_string(g + 1) + ": " + w;
      };
      if (!wit_ann)
        if (auto w = check_annihilator_images(ctx, sigma)) wit_ann = tag(*w);
      if (!wit_add)
        if (auto w = check_additive_twins(ctx, sigma)) wit_add = tag(*w);
      auto omega = componentwise_omega(ctx, sigma);
      if (!omega) {
        if (!wit_comp) wit_comp = tag("no component permutation exists");
        continue;
      }
      if (!wit_elem)
        if (auto w = check_scaled_unit_images(ctx, sigma, *omega))
          wit_elem = tag(*w);
      if (!wit_perm)
        if (auto w = check_unit_permutation_form(ctx, sigma, *omega))
          wit_perm = tag(*w);
    }
    auto lemma = [&](const std::string& name,
                     const std::optional<std::string>& wit) {
      if (wit)
        add(name, VerifyCheck::Status::Fail, *wit);
      else
        add(name, VerifyCheck::Status::Pass);
    };
    lemma("lemma-annihilators", wit_ann);
    lemma("lemma-additive", wit_add);
    lemma("lemma-componentwise", wit_comp);
    lemma("lemma-elementary-divisors", wit_elem);
    lemma("lemma-permutations", wit_perm);
  } else {
    for (const char* name :
         {"lemma-annihilators", "lemma-additive", "lemma-componentwise",
          "lemma-elementary-divisors", "lemma-permutations"})
      add(name, VerifyCheck::Status::Skipped, "budget");
  }

  {
    std::optional<std::string> witness;
    for (const Decomposition& alt : all_max_length_decompositions(S)) {
      ComponentAnalysis alt_analysis = analyze_decomposition(S, alt, budget);
      mpz_class alt_order = aut_order_formula(alt_analysis, d.twins.sizes, n);
      if (alt_order != d.total_order) {
        witness = "alpha = " + S.names[alt.alpha] + " gives " +
                  alt_order.get_str() + " != " + d.total_order.get_str();
        break;
      }
    }
    if (witness)
      add("alpha-invariance", VerifyCheck::Status::Fail, *witness);
    else
      add("alpha-invariance", VerifyCheck::Status::Pass);
  }

  return report;
}

}  // namespace zdg
