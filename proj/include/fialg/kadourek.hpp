#ifndef FIALG_KADOUREK_HPP
#define FIALG_KADOUREK_HPP

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fialg/algebra.hpp"
#include "fialg/green.hpp"

namespace fialg {

// Membership in the variety generated by the 6-element algebra b21() is
// decided, for finite combinatorial inverse semigroups, by a separation
// condition over the D-class order: every "obligation" (X, Y, e, f) must be
// separated by some filter of the classes above Y that avoids X. The two
// relation families feeding the condition are pi (projections of idempotents
// along connecting elements) and rho (common upper bounds).

// Two readings of the rho relation. `prose` is the operative one: (f1, f2)
// ranges over E(Y) and lies in rho(X, Y) when some g in E(X) bounds both
// from above. `display` swaps the roles — pairs from E(X), bound g from
// E(Y) — and exists only so experiments can compare the readings; tau()
// keeps just the pairs that land inside E(Y).
enum class RhoReading { prose, display };

// Ordered pairs of idempotents, both taken from E(Y).
using IdempotentRelation = std::set<std::pair<element_id, element_id>>;

// D-class ids X with Y <= X in the class order, ascending, Y included.
std::vector<int> up_set(const GreenStructure& g, int y);

// pi(X, Y): union over anchors (g in E(X), e in E(Y), e <= g) of the full
// relation on { a^-1 e a : h in E(X) }, where a is the unique element with
// a a^-1 = g and a^-1 a = h. Uniqueness of a needs trivial H-classes; a
// violation throws std::logic_error.
IdempotentRelation pi_relation(const FiniteAlgebra& a, const GreenStructure& g, int x, int y);

// rho(X, Y): pairs of E(Y) idempotents bounded above by a common g in E(X).
IdempotentRelation rho_relation(const FiniteAlgebra& a, const GreenStructure& g, int x, int y,
                                RhoReading reading = RhoReading::prose);

// A filter: an upward-closed subset of up_set(Y), as sorted class ids.
using Filter = std::vector<int>;

// Every filter of ([Y), <=), ordered by (size, lexicographic). Includes the
// empty filter and the full one.
std::vector<Filter> enumerate_filters(const GreenStructure& g, int y);

// The partition of E(Y) induced by tau(K, Y).
class TauPartition {
 public:
  TauPartition(std::vector<element_id> members, std::vector<int> class_of);

  const std::vector<element_id>& members() const { return members_; }
  bool same(element_id e, element_id f) const;  // throws on a non-member
  // Blocks sorted internally, ordered by least member.
  std::vector<std::vector<element_id>> classes() const;

 private:
  std::size_t index_of(element_id e) const;
  std::vector<element_id> members_;  // E(Y), ascending
  std::vector<int> class_of_;        // canonical: least member index per block
};

// tau(K, Y): the equivalence on E(Y) generated by pi(X, Y) for X in K and
// rho(X, Y) for X in [Y) \ K. K must be a filter of [Y).
TauPartition tau(const FiniteAlgebra& a, const GreenStructure& g, const Filter& k, int y,
                 RhoReading reading = RhoReading::prose);

// An obligation: g in E(X) with e <= g and not f <= g, both e, f in E(Y).
// The separation condition asks for a filter K of [Y) with X not in K and
// (e, f) not in tau(K, Y). `separator` is the first such filter in
// enumeration order, when one exists.
struct Obligation {
  int x_class = -1, y_class = -1;
  element_id e = 0, f = 0;
  element_id g = 0;  // first witness in E(X)
  std::optional<Filter> separator;
};

struct StarResult {
  bool holds = false;
  std::vector<Obligation> obligations;  // deterministic order: (y, x, e, f)
  std::optional<Obligation> failure;    // first obligation with no separator
};

// Checks the separation condition on an inverse semigroup with trivial
// H-classes. Throws std::invalid_argument for a non-inverse kind and
// std::logic_error when H-classes are not trivial.
StarResult star_condition(const FiniteAlgebra& a, RhoReading reading = RhoReading::prose);

struct B21MembershipResult {
  bool member = false;
  std::string obstruction;             // empty when member
  std::vector<element_id> witness;     // e.g. a nontrivial H-class
  std::optional<StarResult> star;      // present when the condition ran
};

// Finite inverse semigroup membership in the variety of b21(): trivial
// H-classes plus the separation condition.
B21MembershipResult in_var_b21(const FiniteAlgebra& a, RhoReading reading = RhoReading::prose);

}  // namespace fialg

#endif  // FIALG_KADOUREK_HPP
