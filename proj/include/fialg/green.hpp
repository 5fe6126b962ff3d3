#ifndef FIALG_GREEN_HPP
#define FIALG_GREEN_HPP

#include <string>
#include <vector>

#include "fialg/algebra.hpp"

namespace fialg {

// Green's relations of a finite semigroup, with the idempotent order and the
// induced order on D-classes. Class ids are numbered by least member, so the
// whole structure is deterministic for a given table.
struct GreenStructure {
  std::vector<int> r_class, l_class, h_class, d_class;  // per element
  std::vector<std::vector<element_id>> r_classes, l_classes, h_classes, d_classes;
  std::vector<element_id> idempotents;
  // Strict pairs (e, f) with e <= f, e != f, where e <= f means ef = fe = e.
  std::vector<std::pair<element_id, element_id>> idempotent_order;
  // d_leq[y][x]: class y <= class x, i.e. some e in E(y), f in E(x) has e <= f.
  std::vector<std::vector<char>> d_leq;

  int d_count() const { return static_cast<int>(d_classes.size()); }
  // Idempotents of one D-class, ascending.
  std::vector<element_id> d_idempotents(int d) const;
};

// R-classes are the strongly connected components of the right Cayley graph
// over S^1 (x -> x*s for every s; the adjoined identity only contributes
// reflexivity, so no vertex is added); L dually; H = R meet L; D is the
// transitive closure of R union L, computed by union-find.
GreenStructure green(const FiniteAlgebra& a);

bool idempotent_leq(const FiniteAlgebra& a, element_id e, element_id f);

// All H-classes singletons.
bool is_combinatorial(const GreenStructure& g);
bool is_combinatorial(const FiniteAlgebra& a);

// s <= t in the natural partial order: s = s s^-1 t. Needs an inv table.
bool natural_leq(const FiniteAlgebra& a, element_id s, element_id t);

// Least global p <= |S| with x^p = x^(p+1) for every x, or -1 if none.
int idempotent_power_exponent(const FiniteAlgebra& a);

// Upgrades an inverse semigroup whose every element satisfies x^p = x^(p+1)
// to an ai-semiring with s + t = (s t^-1)^p s. The result is verified: the
// ai-semiring axioms must hold and s + t must be the infimum of {s, t} in the
// natural order; a failure of either is an internal consistency error. Throws
// std::invalid_argument when no exponent p exists.
FiniteAlgebra nat_addition(const FiniteAlgebra& a);

// Text egg-box summary: one block per D-class plus the class order.
std::string render_green_report(const FiniteAlgebra& a, const GreenStructure& g);

// Structural sanity used by property tests: partitions consistent, H = R
// meet L, D = join, the D order a partial order, idempotent order a partial
// order. Returns an empty string or a description of the first failure.
std::string green_consistency_error(const FiniteAlgebra& a, const GreenStructure& g);

}  // namespace fialg

#endif  // FIALG_GREEN_HPP
