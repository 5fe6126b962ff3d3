#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "fialg/algebra.hpp"
#include "fialg/catalog.hpp"
#include "fialg/green.hpp"
#include "fialg/kadourek.hpp"
#include "fialg/sn_family.hpp"

using namespace fialg;

namespace {

FiniteAlgebra two_element_group() {
  return FiniteAlgebra(AlgebraKind::inverse_semigroup, {"1", "g"}, {0, 1, 1, 0}, {}, {0, 1});
}

// Blocks of eta indices -> blocks of element ids, ordered like TauPartition::classes().
std::vector<std::vector<element_id>> eta_blocks_to_ids(const SnFamily& s, const EtaBlocks& b) {
  std::vector<std::vector<element_id>> out(2);
  for (int i : b.first) out[0].push_back(s.eta_idem(i));
  for (int i : b.second) out[1].push_back(s.eta_idem(i));
  for (auto& blk : out) std::sort(blk.begin(), blk.end());
  if (out[1][0] < out[0][0]) std::swap(out[0], out[1]);
  return out;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

TEST_CASE("up-sets of the class order") {
  SnFamily s = build_sn(2);
  CHECK(up_set(s.green, s.b_class[1]) == std::vector<int>{s.b_class[1]});
  CHECK(up_set(s.green, s.zero_class).size() == 6);

  SnFamily t = build_tn(s, 1);
  std::vector<int> want{t.b_class[2], t.c_class, t.e_class, t.d_class};
  std::sort(want.begin(), want.end());
  CHECK(up_set(t.green, t.d_class) == want);
  CHECK_THROWS_AS(up_set(t.green, -1), std::invalid_argument);
}

TEST_CASE("filter enumeration matches a brute-force subset scan") {
  SnFamily t = build_tn(build_sn(2), 1);
  const GreenStructure& g = t.green;
  std::vector<Filter> filters = enumerate_filters(g, t.d_class);
  CHECK(filters.size() == 7);
  CHECK(filters.front().empty());
  CHECK(filters.back() == up_set(g, t.d_class));
  for (std::size_t i = 1; i < filters.size(); ++i)
    CHECK(filters[i - 1].size() <= filters[i].size());

  std::vector<int> ground = up_set(g, t.d_class);
  std::set<Filter> brute;
  for (std::uint32_t mask = 0; mask < (1u << ground.size()); ++mask) {
    Filter k;
    for (std::size_t i = 0; i < ground.size(); ++i)
      if (mask & (1u << i)) k.push_back(ground[i]);
    bool closed = true;
    for (int m : k)
      for (int x : ground)
        if (g.d_leq[m][x] && !std::count(k.begin(), k.end(), x)) closed = false;
    if (closed) brute.insert(k);
  }
  CHECK(brute == std::set<Filter>(filters.begin(), filters.end()));
}

TEST_CASE("filter counts for a chain and for an antichain") {
  FiniteAlgebra e = end_chain(3);
  GreenStructure g = green(e);
  CHECK(enumerate_filters(g, g.d_class[*e.find_label("000")]).size() == 4);

  std::vector<PartialInjection> pids;
  for (int i = 0; i < 3; ++i) pids.push_back(PartialInjection::partial_identity(3, {i}));
  MapClosure c = closure_from_maps(pids, true);
  REQUIRE(c.algebra.size() == 4);
  GreenStructure cg = green(c.algebra);
  REQUIRE(cg.d_count() == 4);
  int bottom = cg.d_class[c.id_of(PartialInjection::empty(3))];
  CHECK(up_set(cg, bottom).size() == 4);
  CHECK(enumerate_filters(cg, bottom).size() == 9);
}

TEST_CASE("tau on the rank-1 class of the reduced family") {
  SnFamily t = build_tn(build_sn(2), 1);
  const FiniteAlgebra& a = t.algebra;
  const GreenStructure& g = t.green;

  // Both rank-2 classes have trivial tau under the empty filter.
  for (int y : {t.c_class, t.e_class}) {
    TauPartition p = tau(a, g, {}, y);
    CHECK(p.classes().size() == p.members().size());
  }

  TauPartition empty_k = tau(a, g, {}, t.d_class);
  CHECK(empty_k.classes() == eta_blocks_to_ids(t, EtaBlocks{{0, 1, 5, 6, 7}, {2, 3, 4, 8}}));

  TauPartition b2_k = tau(a, g, {t.b_class[2]}, t.d_class);
  CHECK(b2_k.classes() == eta_blocks_to_ids(t, EtaBlocks{{0, 4, 5, 6}, {1, 2, 3, 7, 8}}));

  // Neither partition refines the other.
  CHECK(empty_k.same(t.eta_idem(0), t.eta_idem(1)));
  CHECK_FALSE(b2_k.same(t.eta_idem(0), t.eta_idem(1)));
  CHECK(b2_k.same(t.eta_idem(0), t.eta_idem(4)));
  CHECK_FALSE(empty_k.same(t.eta_idem(0), t.eta_idem(4)));

  CHECK_THROWS_AS(empty_k.same(t.eta_idem(0), t.chi_id(0)), std::invalid_argument);
  CHECK_THROWS_AS(tau(a, g, {t.zero_class}, t.d_class), std::invalid_argument);
}

TEST_CASE("tau agrees with a direct union-find over pi and rho edges") {
  SnFamily t = build_tn(build_sn(2), 1);
  const FiniteAlgebra& a = t.algebra;
  const GreenStructure& g = t.green;
  const std::vector<element_id> ey = g.d_idempotents(t.d_class);
  auto index_of = [&](element_id e) {
    return static_cast<int>(std::lower_bound(ey.begin(), ey.end(), e) - ey.begin());
  };
  for (const Filter& k : enumerate_filters(g, t.d_class)) {
    UnionFind uf(ey.size());
    for (int x : up_set(g, t.d_class)) {
      bool in_k = std::binary_search(k.begin(), k.end(), x);
      IdempotentRelation rel =
          in_k ? pi_relation(a, g, x, t.d_class) : rho_relation(a, g, x, t.d_class);
      for (const auto& [u, v] : rel) uf.unite(index_of(u), index_of(v));
    }
    TauPartition p = tau(a, g, k, t.d_class);
    for (std::size_t i = 0; i < ey.size(); ++i)
      for (std::size_t j = 0; j < ey.size(); ++j)
        CHECK(p.same(ey[i], ey[j]) ==
              (uf.find(static_cast<int>(i)) == uf.find(static_cast<int>(j))));
  }
}

TEST_CASE("the display reading of rho collapses nothing on the rank-1 class") {
  SnFamily t = build_tn(build_sn(2), 1);
  TauPartition p = tau(t.algebra, t.green, {}, t.d_class, RhoReading::display);
  CHECK(p.classes().size() == p.members().size());
  TauPartition prose = tau(t.algebra, t.green, {}, t.d_class, RhoReading::prose);
  CHECK(prose.classes().size() == 2);
}

TEST_CASE("frozen tau formula on the larger reduced family") {
  SnFamily t = build_tn(build_sn(3), 3);
  Filter k2{t.b_class[2]};  // B's minus {1, 3}, with B_3 the dropped class
  TauPartition p = tau(t.algebra, t.green, k2, t.d_class);
  CHECK(p.classes() == eta_blocks_to_ids(t, expected_tau_k2(3, 1, 3)));
}

TEST_CASE("the 6-element inverse monoid satisfies the separation condition") {
  FiniteAlgebra b = brandt_monoid();
  StarResult star = star_condition(b);
  CHECK(star.holds);
  CHECK_FALSE(star.failure.has_value());
  REQUIRE(star.obligations.size() == 2);
  GreenStructure g = green(b);
  int top = g.d_class[*b.find_label("1")];
  for (const Obligation& ob : star.obligations) {
    REQUIRE(ob.separator.has_value());
    CHECK(*ob.separator == Filter{top});
    CHECK(ob.x_class == ob.y_class);
    CHECK(ob.e == ob.g);
  }
  B21MembershipResult res = in_var_b21(b);
  CHECK(res.member);
  CHECK(res.obstruction.empty());
  REQUIRE(res.star.has_value());
  CHECK(res.star->holds);
}

TEST_CASE("a nontrivial subgroup blocks membership before the condition runs") {
  B21MembershipResult res = in_var_b21(two_element_group());
  CHECK_FALSE(res.member);
  CHECK(res.obstruction == "nontrivial H-class");
  CHECK(res.witness == std::vector<element_id>{0, 1});
  CHECK_FALSE(res.star.has_value());
  CHECK_THROWS_AS(star_condition(two_element_group()), std::logic_error);
}

TEST_CASE("only inverse semigroups are accepted") {
  CHECK_THROWS_AS(in_var_b21(a21()), std::invalid_argument);
  CHECK_THROWS_AS(star_condition(mul_reduct(a21())), std::invalid_argument);
  FiniteAlgebra b = brandt_monoid();
  GreenStructure g = green(b);
  int top = g.d_class[*b.find_label("1")];
  int bottom = g.d_class[*b.find_label("0")];
  CHECK_THROWS_AS(pi_relation(b, g, bottom, top), std::invalid_argument);
  CHECK_THROWS_AS(rho_relation(b, g, bottom, top), std::invalid_argument);
}

TEST_CASE("the full witness family fails the condition on its rank-1 class") {
  SnFamily s = build_sn(2);
  B21MembershipResult res = in_var_b21(s.algebra);
  CHECK_FALSE(res.member);
  CHECK(res.obstruction == "no separating filter for an obligation");
  REQUIRE(res.star.has_value());
  CHECK_FALSE(res.star->holds);
  REQUIRE(res.star->failure.has_value());
  CHECK(res.star->failure->y_class == s.d_class);
  CHECK(res.witness.size() == 3);

  // Dropping either maximal class restores membership.
  for (int k = 1; k <= 2; ++k) {
    SnFamily t = build_tn(s, k);
    B21MembershipResult tres = in_var_b21(t.algebra);
    CHECK(tres.member);
  }
}
