#ifndef FIALG_ALGEBRA_HPP
#define FIALG_ALGEBRA_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fialg/partial_injection.hpp"

namespace fialg {

using element_id = std::uint32_t;

// semigroup: (S, *).  inverse_semigroup: (S, *, ^-1) with unique inverses.
// ai_semiring: (S, +, *) with + a commutative idempotent semigroup and * a
// semigroup distributing over + on both sides.
enum class AlgebraKind { semigroup, inverse_semigroup, ai_semiring };

std::string kind_name(AlgebraKind k);
AlgebraKind kind_from_name(const std::string& name);

// A finite algebra given by dense row-major operation tables. The kind decides
// which tables form the signature; extra tables (e.g. an inverse table on an
// ai-semiring whose multiplicative reduct happens to be inverse) are carried
// along and serialized but ignored by kind-driven checks.
class FiniteAlgebra {
 public:
  FiniteAlgebra(AlgebraKind kind, std::vector<std::string> labels, std::vector<element_id> mul,
                std::vector<element_id> add = {}, std::vector<element_id> inv = {},
                std::vector<element_id> generators = {});

  AlgebraKind kind() const { return kind_; }
  std::size_t size() const { return labels_.size(); }

  element_id mul(element_id a, element_id b) const { return mul_[a * size() + b]; }
  element_id add(element_id a, element_id b) const { return add_[a * size() + b]; }
  element_id inv(element_id a) const { return inv_[a]; }

  bool has_add() const { return !add_.empty(); }
  bool has_inv() const { return !inv_.empty(); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(element_id a) const { return labels_[a]; }
  const std::vector<element_id>& mul_table() const { return mul_; }
  const std::vector<element_id>& add_table() const { return add_; }
  const std::vector<element_id>& inv_table() const { return inv_; }
  const std::vector<element_id>& generators() const { return generators_; }

  // Index of the element carrying this label, if any.
  std::optional<element_id> find_label(const std::string& label) const;

  bool operator==(const FiniteAlgebra&) const = default;

 private:
  AlgebraKind kind_;
  std::vector<std::string> labels_;
  std::vector<element_id> mul_;
  std::vector<element_id> add_;
  std::vector<element_id> inv_;
  std::vector<element_id> generators_;
};

// One failed law with the witnessing elements, e.g. law = "associativity:mul",
// witness = {a, b, c} with (ab)c != a(bc).
struct LawViolation {
  std::string law;
  std::vector<element_id> witness;
};

struct VerifyResult {
  std::optional<LawViolation> violation;
  bool ok() const { return !violation.has_value(); }
  std::string describe(const FiniteAlgebra& a) const;
};

VerifyResult verify_semigroup(const FiniteAlgebra& a);
VerifyResult verify_inverse(const FiniteAlgebra& a);
VerifyResult verify_ai_semiring(const FiniteAlgebra& a);
// Dispatch on a.kind().
VerifyResult verify_kind_axioms(const FiniteAlgebra& a);

// Thrown when a closure would exceed its element budget.
class closure_limit_error : public std::runtime_error {
 public:
  closure_limit_error(std::size_t seen, std::size_t max_size);
  std::size_t seen;
};

// Closure of partial injections under composition (and inversion when
// with_inverses is set). Elements get deterministic ids in canonical order;
// labels render the maps; words[i] spells element i over the generators
// (letter g = gens[g], letter ~g = inverse of gens[g]).
struct MapClosure {
  FiniteAlgebra algebra;
  std::vector<PartialInjection> elements;
  std::vector<std::vector<int>> words;

  element_id id_of(const PartialInjection& f) const;  // throws if absent
  std::optional<element_id> try_id_of(const PartialInjection& f) const;
};

MapClosure closure_from_maps(const std::vector<PartialInjection>& gens, bool with_inverses,
                             std::size_t max_size = 1'000'000);

// Either the inverse-semigroup upgrade of a semigroup, or the reason there is
// none: an element with no inverse, or one with two distinct inverses.
struct InversionOutcome {
  std::optional<FiniteAlgebra> algebra;
  std::string error;                  // empty on success
  std::vector<element_id> witness;    // offending element, then its inverses if two
  bool ok() const { return algebra.has_value(); }
};

InversionOutcome inversion_table(const FiniteAlgebra& a);

// Component-wise product; labels are "(la,lb)". Same kind required.
FiniteAlgebra direct_product(const FiniteAlgebra& a, const FiniteAlgebra& b);

struct Subalgebra {
  FiniteAlgebra algebra;
  std::vector<element_id> inclusion;  // sub id -> parent id, strictly increasing
};

// Closure of the seeds under every operation present on the parent; element
// order (hence ids) follows the parent's order.
Subalgebra subalgebra_generated(const FiniteAlgebra& a, const std::vector<element_id>& seeds);

struct IdealCheck {
  bool is_ideal;
  std::string reason;                // empty when is_ideal
  std::vector<element_id> witness;   // offending (outside, inside) pair
};

IdealCheck is_ideal(const FiniteAlgebra& a, const std::vector<element_id>& subset);

// Rees quotient: the ideal collapses to a zero, placed last and labeled "0".
FiniteAlgebra rees_quotient(const FiniteAlgebra& a, const std::vector<element_id>& ideal);

// Does `map` (a bijection candidate, indexed by elements of a) transport every
// signature operation of a onto b exactly?
bool transports_exactly(const FiniteAlgebra& a, const FiniteAlgebra& b,
                        const std::vector<element_id>& map);

// Backtracking search over generator images, pruned by invariant fingerprints;
// the returned map is checked exhaustively before being reported.
std::optional<std::vector<element_id>> is_isomorphic(const FiniteAlgebra& a,
                                                     const FiniteAlgebra& b);

// Reducts, as plain semigroups (for separate-reduct isomorphism checks).
FiniteAlgebra mul_reduct(const FiniteAlgebra& a);
FiniteAlgebra add_reduct(const FiniteAlgebra& a);

// JSON file format: {"kind": ..., "elements": [...], "mul": [...],
// "add": [...]?, "inv": [...]?, "generators": [...]}. Storing is canonical
// (sorted keys, fixed indentation), so load-then-store is byte-identical
// modulo the whitespace of the input.
std::string algebra_to_json(const FiniteAlgebra& a);
FiniteAlgebra algebra_from_json(const std::string& text);
void save_algebra(const FiniteAlgebra& a, const std::string& path);
FiniteAlgebra load_algebra(const std::string& path);

}  // namespace fialg

#endif  // FIALG_ALGEBRA_HPP
