#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "zdg/decomposition.hpp"
#include "zdg/digraph.hpp"
#include "zdg/matrix.hpp"
#include "zdg/perm.hpp"
#include "zdg/semiring.hpp"

namespace zdg {

/// Per-component structure of a commutative antiring with identity: a
/// maximal-length decomposition alpha = e_1 + ... + e_s, the zero-divisor
/// digraph of each subsemiring e_iS with its labelled twin quotient, the
/// grouping of components by labelled-quotient isomorphism, and the
/// automorphism group order of each representative quotient.
struct ComponentAnalysis {
  Decomposition alpha;
  std::vector<ScaledSubsemiring> subs;        // per part
  std::vector<Digraph> comp_digraphs;         // Gamma(e_iS)
  std::vector<TwinPartition> comp_twins;
  std::vector<LabelledDigraph> comp_quotients;
  std::vector<std::vector<int>> omega_classes;  // part positions, grouped,
                                                // each ascending; rep = front
  std::vector<int> class_of_part;
  std::vector<mpz_class> quotient_aut_orders;       // a_i, one per class
  std::vector<std::vector<VertexMap>> quotient_aut_gens;  // of each rep quotient
  std::vector<VertexMap> iso_rep_to_part;  // labelled iso Q_rep -> Q_part
};

/// Requires a verified commutative antiring with identity; throws
/// std::domain_error naming the first failed axiom otherwise.
ComponentAnalysis component_analysis(const FiniteSemiring& S,
                                     const SearchBudget& budget = {});

/// (prod c_i!) * prod over classes of ((n! * a_i)^{x_i} * x_i!).
mpz_class aut_order_formula(const ComponentAnalysis& analysis,
                            const std::vector<int>& twin_sizes, int n);

/// |Aut(Gamma(M_n(S)))| by the structure formula, with the twin class
/// sizes c_i taken from the digraph built under vertex_cap.
mpz_class aut_order(const FiniteSemiring& S, int n,
                    uint64_t vertex_cap = 200000,
                    const SearchBudget& budget = {});

/// The permutation of matrix indices induced by simultaneously permuting
/// rows and columns by pi: theta(A)_{pi(i)pi(j)} = A_{ij}.
VertexMap theta_permutation(const std::vector<int>& pi,
                            const FiniteSemiring& S, int n,
                            uint64_t vertex_cap = 200000);

/// Lift a quotient-level vertex map to a map on the underlying vertices by
/// matching the members of twin class k to the members of class qmap[k] in
/// ascending order. Class sizes must agree.
VertexMap lift_quotient_map_to_elements(const VertexMap& qmap,
                                        const TwinPartition& src,
                                        const TwinPartition& dst);

/// omega permutes components; pi[i] permutes 1..n inside component i;
/// tau[i] maps the carrier of e_iS onto the carrier of e_{omega(i)}S (by
/// sub-index) and must be an isomorphism of the component digraphs fixing
/// zero.
struct ComponentMapSpec {
  std::vector<int> omega;
  std::vector<std::vector<int>> pi;
  std::vector<std::vector<int>> tau;
};

/// The vertex map A -> sum_i theta_{pi_i}(tau_i(e_i * A)) over the matrix
/// digraph. Rejects a spec violating its invariants with
/// std::invalid_argument before mapping anything.
VertexMap lift_component_map(const ComponentMapSpec& spec,
                             const ComponentAnalysis& analysis,
                             const FiniteSemiring& S, int n,
                             uint64_t vertex_cap = 200000);

/// For each twin class with c >= 2, the c-1 transpositions of consecutive
/// members in ascending vertex order; everything else fixed.
std::vector<VertexMap> twin_transpositions(const TwinPartition& p, int vcount);

/// The computed group structure of Aut(Gamma(M_n(S))).
struct AutDescription {
  int n = 0;
  ComponentAnalysis analysis;
  Digraph digraph;       // Gamma(M_n(S))
  TwinPartition twins;
  mpz_class regular_order;  // |K| = prod c_i!
  mpz_class total_order;
  std::vector<VertexMap> generators;
};

/// Full structure computation: component analysis, matrix digraph, twin
/// census, order formula, and explicit generators (twin transpositions,
/// row/column permutations per representative, lifted quotient
/// automorphisms, and swaps of equivalent components). Every generator is
/// checked to be a digraph automorphism.
AutDescription describe_aut(const FiniteSemiring& S, int n,
                            uint64_t vertex_cap = 200000,
                            const SearchBudget& budget = {});

std::vector<VertexMap> synthesize_generators(const FiniteSemiring& S, int n,
                                             uint64_t vertex_cap = 200000,
                                             const SearchBudget& budget = {});

/// Precomputed tables for the lemma battery over one matrix digraph.
struct MatrixAutContext {
  const FiniteSemiring* S = nullptr;
  int n = 0;
  const ComponentAnalysis* analysis = nullptr;
  const Digraph* digraph = nullptr;
  const TwinPartition* twins = nullptr;
  std::vector<Matrix> matrices;          // vertex -> matrix
  std::vector<Bitset> part_vertex_sets;  // per part: { index(e_i * A) }
  std::vector<Bitset> part_carriers;     // per part: carrier as S-elements
  std::vector<Bitset> part_zero_divisors;  // per part: Z(e_iS) as S-elements
};

MatrixAutContext make_matrix_aut_context(const FiniteSemiring& S, int n,
                                         const ComponentAnalysis& analysis,
                                         const Digraph& digraph,
                                         const TwinPartition& twins,
                                         uint64_t vertex_cap = 200000);

/// Each check returns a failure witness, or nullopt when the lemma holds
/// for sigma.
std::optional<std::string> check_annihilator_images(const MatrixAutContext& ctx,
                                                    const VertexMap& sigma);
std::optional<std::string> check_additive_twins(const MatrixAutContext& ctx,
                                                const VertexMap& sigma);
/// The component permutation omega with sigma(e_r M_n(S)) = e_omega(r) M_n(S),
/// or nullopt if none exists.
std::optional<std::vector<int>> componentwise_omega(const MatrixAutContext& ctx,
                                                    const VertexMap& sigma);
std::optional<std::string> check_scaled_unit_images(const MatrixAutContext& ctx,
                                                    const VertexMap& sigma,
                                                    const std::vector<int>& omega);
std::optional<std::string> check_unit_permutation_form(
    const MatrixAutContext& ctx, const VertexMap& sigma,
    const std::vector<int>& omega);

/// All five lemma checks in order; the witness names the first failed one.
std::optional<std::string> run_lemma_battery(const MatrixAutContext& ctx,
                                             const VertexMap& sigma);

struct VerifyCheck {
  enum class Status { Pass, Fail, Skipped };
  std::string name;
  Status status;
  std::string detail;  // witness on failure, reason on skip
};

struct VerificationReport {
  std::vector<VerifyCheck> checks;
  bool has_failure() const;
};

/// Cross-validation: formula vs oracle order, generator closure, the lemma
/// battery over every oracle generator, and order invariance across every
/// maximal-length alpha and decomposition. Budget-infeasible checks are
/// reported as skipped, never silently dropped.
VerificationReport verify(const FiniteSemiring& S, int n,
                          uint64_t vertex_cap = 200000,
                          const SearchBudget& budget = {},
                          uint64_t closure_cap = 20000);

}  // namespace zdg
