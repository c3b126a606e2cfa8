#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "zdg/bitset.hpp"

namespace zdg {

/// A finite semiring given by explicit operation tables. The carrier is the
/// index set 0..size-1; add and mul are flattened size*size tables. Values
/// are immutable after construction and safe to share across threads.
struct FiniteSemiring {
  int size = 0;
  std::vector<int> add;  // add[a*size + b]
  std::vector<int> mul;  // mul[a*size + b]
  int zero = 0;
  std::optional<int> one;
  std::vector<std::string> names;  // pairwise distinct display strings
  std::string name;

  int add_at(int a, int b) const { return add[a * size + b]; }
  int mul_at(int a, int b) const { return mul[a * size + b]; }
};

/// One verified axiom: ok, or a witness for the first violation found.
/// The witness is the lexicographically first violating tuple within each
/// scan; an empty witness on a failed flag means no witness exists (only
/// possible for has_identity when no element acts as an identity).
struct AxiomFlag {
  bool ok = true;
  std::vector<int> witness;
};

struct AxiomReport {
  AxiomFlag additive_monoid;            // commutative monoid with identity 0
  AxiomFlag multiplicative_semigroup;   // mul associative
  AxiomFlag left_distributive;          // a(b+c) = ab + ac
  AxiomFlag right_distributive;         // (a+b)c = ac + bc
  AxiomFlag zero_annihilates;           // 0x = x0 = 0
  AxiomFlag commutative;                // ab = ba
  AxiomFlag antinegative;               // a+b = 0 implies a = 0 or b = 0
  AxiomFlag has_identity;               // declared one verified, or any found

  bool semiring() const {
    return additive_monoid.ok && multiplicative_semigroup.ok &&
           left_distributive.ok && right_distributive.ok && zero_annihilates.ok;
  }
  bool commutative_antiring() const {
    return semiring() && commutative.ok && antinegative.ok;
  }
  bool commutative_antiring_with_identity() const {
    return commutative_antiring() && has_identity.ok;
  }
};

/// Verifies every axiom by exhaustive enumeration. Throws StructureError if
/// a table is malformed (wrong length or entry out of range); a malformed
/// table is a structural defect, not an axiom failure.
AxiomReport check_axioms(const FiniteSemiring& S);

FiniteSemiring make_boolean();
FiniteSemiring make_chain(int k);  // 0 < ... < 1, add = max, mul = min
FiniteSemiring make_product(const FiniteSemiring& a, const FiniteSemiring& b);

/// Parses the builtin descriptor grammar: `bool` | `chain<k>` |
/// `<spec> x <spec>` (left-associative product). Throws ParseError.
FiniteSemiring build_builtin(const std::string& descriptor);

/// The subsemiring eS of a commutative antiring, with its carrier as a list
/// of S-indices in ascending order. carrier[i] is the S-element behind
/// sub-index i; ring.one is set only when e*1 acts as a two-sided identity
/// on the carrier.
struct ScaledSubsemiring {
  FiniteSemiring ring;
  std::vector<int> carrier;

  int sub_index_of(int s_elem) const;  // -1 if not in the carrier
};

ScaledSubsemiring scale_subsemiring(const FiniteSemiring& S, int e);

/// an(x) = { y : xy = 0 }, as a bitset over the carrier.
Bitset annihilator(const FiniteSemiring& S, int x);

/// Z(S) = { x : exists y != 0 with xy = 0 or yx = 0 }.
Bitset zero_divisor_set(const FiniteSemiring& S);

/// Line-oriented text format:
///   semiring <name> / order <m> / zero <i> / one <i>|none /
///   add + m rows of m indices / mul + m rows.
/// '#' starts a comment line. Throws ParseError with the offending line.
FiniteSemiring parse_semiring(std::istream& in);
FiniteSemiring parse_semiring_file(const std::string& path);
std::string format_semiring(const FiniteSemiring& S);

/// Renders a set of elements as `{name,name,...}` in ascending index order.
std::string format_element_set(const FiniteSemiring& S, const Bitset& set);

}  // namespace zdg
