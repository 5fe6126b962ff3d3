#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "fialg/algebra.hpp"
#include "fialg/catalog.hpp"
#include "fialg/green.hpp"

using namespace fialg;

namespace {

// Distinct digits in a monotone-map label = size of the map's image.
int label_rank(const std::string& label) {
  std::set<char> digits(label.begin(), label.end());
  return static_cast<int>(digits.size());
}

FiniteAlgebra two_element_group() {
  return FiniteAlgebra(AlgebraKind::inverse_semigroup, {"1", "g"}, {0, 1, 1, 0}, {}, {0, 1});
}

}  // namespace

TEST_CASE("D-classes of the monotone-map semirings are the rank classes") {
  for (int m = 2; m <= 4; ++m) {
    FiniteAlgebra e = end_chain(m);
    GreenStructure g = green(e);
    std::map<int, std::set<element_id>> by_rank;
    for (element_id x = 0; x < e.size(); ++x) by_rank[label_rank(e.label(x))].insert(x);
    REQUIRE(g.d_count() == static_cast<int>(by_rank.size()));
    for (const auto& cls : g.d_classes) {
      std::set<element_id> block(cls.begin(), cls.end());
      CHECK(by_rank.at(label_rank(e.label(cls[0]))) == block);
    }
    // Ranks order the classes linearly.
    for (int y = 0; y < g.d_count(); ++y)
      for (int x = 0; x < g.d_count(); ++x) {
        bool want = label_rank(e.label(g.d_classes[y][0])) <= label_rank(e.label(g.d_classes[x][0]));
        CHECK(static_cast<bool>(g.d_leq[y][x]) == want);
      }
  }
}

TEST_CASE("constant maps are right zeros and a two-sided ideal") {
  FiniteAlgebra e = end_chain(3);
  std::vector<element_id> constants;
  for (element_id x = 0; x < e.size(); ++x)
    if (label_rank(e.label(x)) == 1) constants.push_back(x);
  REQUIRE(constants.size() == 3);
  for (element_id c : constants)
    for (element_id f = 0; f < e.size(); ++f) {
      CHECK(e.mul(f, c) == c);
      CHECK(std::count(constants.begin(), constants.end(), e.mul(c, f)) == 1);
    }
  CHECK(is_ideal(mul_reduct(e), constants).is_ideal);
}

TEST_CASE("the 6-element inverse monoid splits into three D-classes") {
  FiniteAlgebra b = brandt_monoid();
  GreenStructure g = green(b);
  REQUIRE(g.d_count() == 3);
  std::vector<std::size_t> sizes;
  for (const auto& cls : g.d_classes) sizes.push_back(cls.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 1, 4});
  CHECK(is_combinatorial(g));

  std::set<std::string> idem;
  for (element_id x : g.idempotents) idem.insert(b.label(x));
  CHECK(idem == std::set<std::string>{"1", "cd", "dc", "0"});
}

TEST_CASE("natural order on the 6-element inverse monoid") {
  FiniteAlgebra b = brandt_monoid();
  element_id one = *b.find_label("1"), c = *b.find_label("c"), cd = *b.find_label("cd"),
             dc = *b.find_label("dc"), zero = *b.find_label("0");
  CHECK(natural_leq(b, cd, one));
  CHECK(natural_leq(b, dc, one));
  CHECK_FALSE(natural_leq(b, c, one));
  for (element_id x = 0; x < b.size(); ++x) {
    CHECK(natural_leq(b, zero, x));
    CHECK(natural_leq(b, x, x));
  }
  CHECK(idempotent_leq(b, zero, cd));
  CHECK_FALSE(idempotent_leq(b, cd, dc));
}

TEST_CASE("derived addition selects infima and reverses into the known table") {
  FiniteAlgebra b = brandt_monoid();
  CHECK(idempotent_power_exponent(b) == 2);
  FiniteAlgebra plus = nat_addition(b);
  CHECK(verify_ai_semiring(plus).ok());
  element_id one = *plus.find_label("1"), c = *plus.find_label("c"), d = *plus.find_label("d"),
             cd = *plus.find_label("cd"), zero = *plus.find_label("0");
  CHECK(plus.add(c, d) == zero);
  CHECK(plus.add(one, cd) == cd);
  CHECK(plus.add(one, one) == one);
  // Additive order runs opposite to the natural order.
  for (element_id s = 0; s < plus.size(); ++s)
    for (element_id t = 0; t < plus.size(); ++t) {
      bool add_leq = plus.add(s, t) == t;
      CHECK(add_leq == natural_leq(b, t, s));
    }
  CHECK(plus == b21());
}

TEST_CASE("derived addition rejects non-aperiodic input") {
  CHECK(idempotent_power_exponent(two_element_group()) == -1);
  CHECK_THROWS_AS(nat_addition(two_element_group()), std::invalid_argument);
  CHECK_THROWS_AS(nat_addition(mul_reduct(a21())), std::invalid_argument);  // no inverses
}

TEST_CASE("relabeling and permuting elements preserves the partitions") {
  FiniteAlgebra a = mul_reduct(a21());
  GreenStructure ga = green(a);
  const std::size_t n = a.size();
  auto flip = [n](element_id x) { return static_cast<element_id>(n - 1 - x); };
  std::vector<element_id> mul(n * n);
  std::vector<std::string> labels(n);
  for (element_id x = 0; x < n; ++x) {
    labels[flip(x)] = a.label(x);
    for (element_id y = 0; y < n; ++y) mul[flip(x) * n + flip(y)] = flip(a.mul(x, y));
  }
  FiniteAlgebra p(AlgebraKind::semigroup, labels, mul);
  GreenStructure gp = green(p);
  REQUIRE(gp.d_count() == ga.d_count());
  for (element_id x = 0; x < n; ++x)
    for (element_id y = 0; y < n; ++y) {
      CHECK((ga.d_class[x] == ga.d_class[y]) == (gp.d_class[flip(x)] == gp.d_class[flip(y)]));
      CHECK((ga.h_class[x] == ga.h_class[y]) == (gp.h_class[flip(x)] == gp.h_class[flip(y)]));
      CHECK((ga.r_class[x] == ga.r_class[y]) == (gp.r_class[flip(x)] == gp.r_class[flip(y)]));
      CHECK((ga.l_class[x] == ga.l_class[y]) == (gp.l_class[flip(x)] == gp.l_class[flip(y)]));
    }
}

TEST_CASE("green structures pass the internal consistency audit") {
  for (const std::string& name : {"a21", "brandt", "end-chain:3"}) {
    FiniteAlgebra a = build_catalog(name);
    CHECK(green_consistency_error(a, green(a)).empty());
  }
}

TEST_CASE("report lists sizes, idempotents, and the class order") {
  FiniteAlgebra b = brandt_monoid();
  std::string report = render_green_report(b, green(b));
  CHECK(report.find("elements: 6, D-classes: 3, combinatorial: yes") != std::string::npos);
  CHECK(report.find("order (strictly below):") != std::string::npos);
}
