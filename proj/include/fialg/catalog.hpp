#ifndef FIALG_CATALOG_HPP
#define FIALG_CATALOG_HPP

#include <string>
#include <vector>

#include "fialg/algebra.hpp"

namespace fialg {

// Value rows of all monotone self-maps of the chain 0 < 1 < ... < m-1, in
// lexicographic order. m is capped at 10 so labels stay one digit per point.
std::vector<std::vector<int>> monotone_maps(int m);
std::string monotone_label(const std::vector<int>& values);

// The ai-semiring of all monotone self-maps of an m-chain: addition is
// pointwise max, multiplication is composition x -> g(f(x)).
FiniteAlgebra end_chain(int m);

// The subalgebra of maps fixing the bottom point.
FiniteAlgebra end0_chain(int m);

// Same carrier as end_chain(m) but with pointwise min as the addition.
FiniteAlgebra end_chain_min(int m);

// The six monotone self-maps of a 3-chain fixing the top point, labeled
// 1, e, a, ea, ae, 0; generated by {e, a, 1}.
FiniteAlgebra a21();

// The inverse monoid on {1, d, dc, cd, c, 0}: closure of the identity,
// c = {0->1} and d = {1->0} on two points, under composition and inversion.
FiniteAlgebra brandt_monoid();

// brandt_monoid() upgraded with its derived addition (kind ai-semiring).
FiniteAlgebra b21();

struct LatticeCheck {
  bool lattice_laws = false;           // (carrier, max, min) distributive lattice
  bool reversal_isomorphism = false;   // conjugation by x -> m-1-x carries
                                       // (min, compose) onto (max, compose)
  std::string detail;                  // first failure, empty when ok
};
LatticeCheck combined_lattice_check(int m);

// Catalog names: end-chain:M, end0-chain:M, a21, b21, brandt, sn:N, tn:N:K.
FiniteAlgebra build_catalog(const std::string& name, std::size_t max_size = 1'000'000);

}  // namespace fialg

#endif  // FIALG_CATALOG_HPP
