#ifndef FIALG_SN_FAMILY_HPP
#define FIALG_SN_FAMILY_HPP

#include <string>
#include <vector>

#include "fialg/algebra.hpp"
#include "fialg/green.hpp"
#include "fialg/kadourek.hpp"
#include "fialg/partial_injection.hpp"
#include "fialg/terms.hpp"

namespace fialg {

// The witness family sn:N lives on 3n+3 points and is generated, inside the
// partial injections, by one rank-2 map and n rank-3 maps:
//   chi   = {n -> 2n+1, n+1 -> 2n+2}
//   chi_i = {i-1 -> i, n+1+i -> n+i, 2n+1+i -> 2n+2+i}     (1 <= i <= n)
// Its D-classes are, from the top: B_1..B_n (one per chi_i), then C (the
// rank-2 maps zeta_ij), E (the class of chi), D (all rank-1 maps eta), {0}.
// Dropping one B_k leaves a subsemigroup, the family tn:N:K.
std::vector<PartialInjection> sn_generators(int n);  // [chi, chi_1..chi_n]

struct SnFamily {
  int n;
  int removed;  // -1 for the full family, else the dropped B-index
  FiniteAlgebra algebra;
  std::vector<PartialInjection> maps;  // per element id, canonically sorted
  GreenStructure green;
  std::vector<int> b_class;  // b_class[i] for i in 1..n; -1 when dropped
  int c_class, e_class, d_class, zero_class;

  element_id id_of(const PartialInjection& p) const;  // throws if absent
  int degree() const { return 3 * n + 3; }
  element_id chi_id(int i) const;               // i = 0 gives chi
  element_id eta_id(int l, int r) const;        // {l -> r}
  element_id eta_idem(int l) const { return eta_id(l, l); }
  element_id zeta_id(int i, int j) const;       // {i -> j, 2n+2+i -> 2n+2+j}
};

SnFamily build_sn(int n, std::size_t max_size = 1'000'000);

// The subalgebra on everything outside B_k; checks that this set is already
// closed (the closure adds nothing).
SnFamily build_tn(const SnFamily& s, int k);

// Composition formulas for the generators (chi_i chi_j, chi_i chi_j^-1,
// chi_i^-1 chi_j, chi chi_i, chi_i chi, chi chi_j^-1, chi_j^-1 chi), each
// checked both on raw maps and through the multiplication table.
// Returns "" or the first mismatch.
std::string verify_formulas(const SnFamily& s);

// D-class partition (exact member sets), class order matrix, and idempotent
// counts. Returns "" or the first mismatch.
std::string dclass_shape_check(const SnFamily& s);

// x1..xn -> chi_i, x(n+1) -> chi, x(n+2)..x(2n) -> chi^-1 chi.
Assignment phi_assignment(const SnFamily& s);

// Under phi_assignment, the first word of vn_pair(n) evaluates to {0 -> 3n+2}
// and the second to the empty map; both by folding raw maps and through the
// table. Returns "" or the first mismatch.
std::string word_image_check(const SnFamily& s);

// Known two-block partitions of tau(K, D) for the named filter families in a
// family with B_k dropped, as eta indices.
struct EtaBlocks {
  std::vector<int> first, second;
};
EtaBlocks expected_tau_k1(int n, int m, int k);  // K1 = B's minus {m, m+1, k}; m+1 < k
EtaBlocks expected_tau_k2(int n, int m, int k);  // K2 = B's minus {m, k}; m < k
EtaBlocks expected_tau_k3(int n, int m, int k);  // K3 = B's minus {m-1, m, k}; 1 < m < k
EtaBlocks expected_tau_k4(int n, int k);         // K4 = {E}
EtaBlocks expected_tau_k8(int n, int k);         // K8 = all B's present plus C

// Replays the separation analysis on a family with B_k dropped: the named
// filters produce exactly the expected partitions, and every spot-checked
// obligation is separated by its designated filter. Returns "" or the first
// failure.
std::string separation_regressions(const SnFamily& t);

}  // namespace fialg

#endif  // FIALG_SN_FAMILY_HPP
