#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fialg/algebra.hpp"
#include "fialg/catalog.hpp"
#include "fialg/green.hpp"
#include "fialg/sn_family.hpp"
#include "fialg/terms.hpp"

using namespace fialg;

namespace {

PartialInjection gen_chi(int n) {
  return PartialInjection::from_pairs(3 * n + 3, {{n, 2 * n + 1}, {n + 1, 2 * n + 2}});
}

PartialInjection gen_chi_i(int n, int i) {
  return PartialInjection::from_pairs(
      3 * n + 3, {{i - 1, i}, {n + 1 + i, n + i}, {2 * n + 1 + i, 2 * n + 2 + i}});
}

PartialInjection reversal(int degree) {
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < degree; ++x) pairs.push_back({x, degree - 1 - x});
  return PartialInjection::from_pairs(degree, pairs);
}

PartialInjection conj(const PartialInjection& r, const PartialInjection& p) {
  return compose(compose(r, p), r);
}

}  // namespace

TEST_CASE("generators of the witness family") {
  std::vector<PartialInjection> gens = sn_generators(2);
  REQUIRE(gens.size() == 3);
  CHECK(gens[0] == gen_chi(2));
  CHECK(gens[1] == gen_chi_i(2, 1));
  CHECK(gens[2] == gen_chi_i(2, 2));
  CHECK(gens[0].to_string() == "{2→5, 3→6}");
  CHECK_THROWS_AS(sn_generators(1), std::invalid_argument);
}

TEST_CASE("family sizes follow the closed formula") {
  SnFamily s2 = build_sn(2);
  CHECK(s2.algebra.size() == 103);
  CHECK(s2.degree() == 9);
  CHECK(s2.removed == -1);
  SnFamily s3 = build_sn(3);
  CHECK(s3.algebra.size() == 177);
  for (const SnFamily* s : {&s2, &s3}) {
    std::size_t n = static_cast<std::size_t>(s->n), deg = static_cast<std::size_t>(s->degree());
    CHECK(s->algebra.size() == 4 * n + (n + 1) * (n + 1) + deg * deg + 5);
  }
}

TEST_CASE("canonical element order places the rank-3 maps first") {
  SnFamily s = build_sn(2);
  PartialInjection chi = gen_chi(2), chi1 = gen_chi_i(2, 1), chi2 = gen_chi_i(2, 2);
  std::vector<PartialInjection> first8 = {
      chi2.inverse(),           compose(chi2.inverse(), chi2),
      chi1.inverse(),           compose(chi2, chi2.inverse()),
      compose(chi1.inverse(), chi1), chi2,
      compose(chi1, chi1.inverse()), chi1};
  for (element_id i = 0; i < 8; ++i) {
    CHECK(s.maps[i] == first8[i]);
    CHECK(s.id_of(first8[i]) == i);
  }
  CHECK(s.chi_id(1) == 7);
  CHECK(s.chi_id(2) == 5);
  CHECK(s.chi_id(0) == s.id_of(chi));
  CHECK_THROWS_AS(s.id_of(PartialInjection::identity(9)), std::invalid_argument);
  CHECK_THROWS_AS(s.chi_id(3), std::invalid_argument);
}

TEST_CASE("named D-classes and their shapes") {
  SnFamily s = build_sn(2);
  CHECK(dclass_shape_check(s).empty());
  CHECK(verify_formulas(s).empty());
  CHECK(word_image_check(s).empty());
  CHECK(is_combinatorial(s.green));
  CHECK(s.green.d_classes[static_cast<std::size_t>(s.b_class[1])].size() == 4);
  CHECK(s.green.d_classes[static_cast<std::size_t>(s.c_class)].size() == 9);
  CHECK(s.green.d_classes[static_cast<std::size_t>(s.e_class)].size() == 4);
  CHECK(s.green.d_classes[static_cast<std::size_t>(s.d_class)].size() == 81);
  CHECK(s.green.d_classes[static_cast<std::size_t>(s.zero_class)].size() == 1);
}

TEST_CASE("zeta maps compose transitively") {
  SnFamily s = build_sn(2);
  for (int i = 0; i <= 2; ++i)
    for (int l = 0; l <= 2; ++l)
      for (int j = 0; j <= 2; ++j)
        CHECK(s.algebra.mul(s.zeta_id(i, l), s.zeta_id(l, j)) == s.zeta_id(i, j));
  CHECK_THROWS_AS(s.zeta_id(0, 3), std::invalid_argument);
}

TEST_CASE("eta lookups cover every rank-1 map") {
  SnFamily s = build_sn(2);
  for (int l = 0; l < 9; ++l)
    for (int r = 0; r < 9; ++r) {
      element_id id = s.eta_id(l, r);
      CHECK(s.maps[id] == PartialInjection::from_pairs(9, {{l, r}}));
      CHECK(s.green.d_class[id] == s.d_class);
    }
}

TEST_CASE("dropping one maximal class leaves a closed subfamily") {
  SnFamily s = build_sn(2);
  SnFamily t = build_tn(s, 1);
  CHECK(t.algebra.size() == 99);
  CHECK(t.removed == 1);
  CHECK(t.b_class[1] == -1);
  CHECK(t.b_class[2] >= 0);
  CHECK(dclass_shape_check(t).empty());
  CHECK(verify_formulas(t) == "generator formulas are checked on the full family");
  CHECK_THROWS_AS(phi_assignment(t), std::invalid_argument);
  CHECK_THROWS_AS(build_tn(s, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_tn(s, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_tn(t, 2), std::invalid_argument);
}

TEST_CASE("reversing the chain of points is an anti-order automorphism") {
  SnFamily s = build_sn(2);
  PartialInjection r = reversal(9);
  std::vector<element_id> sigma(s.algebra.size());
  for (element_id x = 0; x < s.algebra.size(); ++x) sigma[x] = s.id_of(conj(r, s.maps[x]));
  for (element_id x = 0; x < s.algebra.size(); ++x)
    for (element_id y = 0; y < s.algebra.size(); ++y)
      CHECK(sigma[s.algebra.mul(x, y)] == s.algebra.mul(sigma[x], sigma[y]));
  CHECK(conj(r, gen_chi(2)) == gen_chi(2).inverse());
  CHECK(conj(r, gen_chi_i(2, 1)) == gen_chi_i(2, 2).inverse());
  CHECK(transports_exactly(s.algebra, s.algebra, sigma));
}

TEST_CASE("the substitution sends the marker words to the expected images") {
  SnFamily s = build_sn(2);
  Assignment phi = phi_assignment(s);
  CHECK(phi == Assignment{{"x1", s.chi_id(1)},
                          {"x2", s.chi_id(2)},
                          {"x3", s.chi_id(0)},
                          {"x4", s.algebra.mul(s.algebra.inv(s.chi_id(0)), s.chi_id(0))}});
  auto [v2, v2p] = vn_pair(2);
  CHECK(eval_term(word_to_term(v2), phi, s.algebra) == s.eta_id(0, 8));
  CHECK(eval_term(word_to_term(v2p), phi, s.algebra) ==
        s.id_of(PartialInjection::empty(9)));
}

TEST_CASE("frozen partition formulas validate and reject bad indices") {
  EtaBlocks b = expected_tau_k1(3, 1, 3);
  std::vector<bool> seen(12, false);
  for (int i : b.first) seen[static_cast<std::size_t>(i)] = true;
  for (int i : b.second) {
    CHECK_FALSE(seen[static_cast<std::size_t>(i)]);
    seen[static_cast<std::size_t>(i)] = true;
  }
  CHECK(std::count(seen.begin(), seen.end(), true) == 12);
  CHECK_THROWS_AS(expected_tau_k1(3, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(expected_tau_k3(3, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(expected_tau_k4(3, 4), std::invalid_argument);
}

TEST_CASE("separation spot checks replay cleanly on the reduced families") {
  SnFamily s = build_sn(2);
  for (int k = 1; k <= 2; ++k) {
    SnFamily t = build_tn(s, k);
    CHECK(separation_regressions(t).empty());
  }
}

TEST_CASE("the marker identity fails on the full family at the least assignment") {
  SnFamily s = build_sn(2);
  auto [v2, v2p] = vn_pair(2);
  Identity id{word_to_term(v2), word_to_term(v2p)};
  CheckOutcome out = check_identity(s.algebra, id);
  REQUIRE_FALSE(out.satisfied);
  REQUIRE(out.counterexample.has_value());
  CHECK(out.counterexample->at("x1") == 0);
  CHECK(eval_term(id.lhs, *out.counterexample, s.algebra) !=
        eval_term(id.rhs, *out.counterexample, s.algebra));

  // The reversed substitution is itself a counterexample starting at element 0.
  PartialInjection r = reversal(9), chi = gen_chi(2);
  Assignment reversed{{"x1", s.id_of(conj(r, gen_chi_i(2, 1)))},
                      {"x2", s.id_of(conj(r, gen_chi_i(2, 2)))},
                      {"x3", s.id_of(conj(r, chi))},
                      {"x4", s.id_of(conj(r, compose(chi.inverse(), chi)))}};
  CHECK(reversed.at("x1") == 0);
  CHECK(eval_term(id.lhs, reversed, s.algebra) != eval_term(id.rhs, reversed, s.algebra));
}

TEST_CASE("the marker identity holds on the 6-element inverse monoid") {
  auto [v2, v2p] = vn_pair(2);
  Identity id{word_to_term(v2), word_to_term(v2p)};
  CHECK(check_identity(brandt_monoid(), id).satisfied);
}

TEST_CASE("the marker identity holds on the reduced family, exhaustively") {
  SnFamily t = build_tn(build_sn(2), 1);
  auto [v2, v2p] = vn_pair(2);
  Identity id{word_to_term(v2), word_to_term(v2p)};
  CheckOutcome out = check_identity(t.algebra, id);
  CHECK(out.satisfied);
}
