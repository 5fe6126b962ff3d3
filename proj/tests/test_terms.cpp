#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <string>
#include <vector>

#include "fialg/catalog.hpp"
#include "fialg/green.hpp"
#include "fialg/sn_family.hpp"
#include "fialg/terms.hpp"

using namespace fialg;

TEST_CASE("parsing round-trips through to_string") {
  for (const char* text : {"x*y*x", "x + y*z", "x*(y + z)", "(x + y)*(x + z)"}) {
    Term t = parse_term(text, Signature::plus_times);
    CHECK(t.to_string() == text);
    CHECK(parse_term(t.to_string(), Signature::plus_times).to_string() == text);
  }
  for (const char* text : {"x^-1", "(x*y)^-1", "x*y^-1*x"}) {
    Term t = parse_term(text, Signature::times_inverse);
    CHECK(t.to_string() == text);
  }
  CHECK(parse_term("x y x", Signature::times_only).to_string() == "x*y*x");
  CHECK(parse_term("x^3", Signature::times_only).to_string() == "x*x*x");
  CHECK(parse_term("(x y)^2", Signature::times_only).to_string() == "x*y*x*y");
  Identity id = parse_identity("x + y = y + x", Signature::plus_times);
  CHECK(id.to_string() == "x + y = y + x");
  CHECK(id.alphabet() == std::vector<std::string>{"x", "y"});
}

TEST_CASE("precedence: products bind tighter than sums") {
  Term t = parse_term("x + y*z", Signature::plus_times);
  REQUIRE(t.kind() == TermKind::add);
  CHECK(t.left().kind() == TermKind::variable);
  CHECK(t.right().kind() == TermKind::mul);
  Term u = parse_term("x*y + z", Signature::plus_times);
  REQUIRE(u.kind() == TermKind::add);
  CHECK(u.left().kind() == TermKind::mul);
}

TEST_CASE("signatures restrict the operator set") {
  CHECK_THROWS_AS(parse_term("x + y", Signature::times_only), parse_error);
  CHECK_THROWS_AS(parse_term("x^-1", Signature::plus_times), parse_error);
  CHECK_THROWS_AS(parse_term("x^-1", Signature::times_only), parse_error);
  CHECK(infer_signature("x y = y") == Signature::times_only);
  CHECK(infer_signature("x + y = y") == Signature::plus_times);
  CHECK(infer_signature("x^-1 x = x") == Signature::times_inverse);
  CHECK_THROWS_AS(infer_signature("x + y^-1"), parse_error);
}

TEST_CASE("parse errors carry the offending position") {
  try {
    parse_term("x @ y", Signature::times_only);
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.position == 2);
  }
  try {
    parse_term("x ^ 0", Signature::times_only);
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.position == 2);
  }
  CHECK_THROWS_AS(parse_term("(x", Signature::times_only), parse_error);
  CHECK_THROWS_AS(parse_identity("x y", Signature::times_only), parse_error);
  CHECK_THROWS_AS(parse_term("x^-2", Signature::times_inverse), parse_error);
}

TEST_CASE("evaluation follows the tables") {
  FiniteAlgebra a = a21();
  element_id e = *a.find_label("e"), ae = *a.find_label("ae"), ea = *a.find_label("ea"),
             av = *a.find_label("a");
  CHECK(eval_term(parse_term("x*y", Signature::plus_times), {{"x", e}, {"y", av}}, a) == ea);
  CHECK(eval_term(parse_term("x + y", Signature::plus_times), {{"x", ea}, {"y", ae}}, a) == av);
  CHECK_THROWS(eval_term(parse_term("x*y", Signature::times_only), {{"x", e}}, a));  // y unbound
  CHECK_THROWS(eval_term(parse_term("x^-1", Signature::times_inverse), {{"x", e}}, a));  // no inv

  FiniteAlgebra b = brandt_monoid();
  CHECK(eval_term(parse_term("x^-1", Signature::times_inverse), {{"x", *b.find_label("c")}}, b) ==
        *b.find_label("d"));
}

TEST_CASE("identity checking reports the lexicographically least counterexample") {
  FiniteAlgebra a = a21();
  Identity id = parse_identity("x + x*x = x", Signature::plus_times);
  CheckOutcome out = check_identity(a, id);
  REQUIRE_FALSE(out.satisfied);
  REQUIRE(out.counterexample.has_value());
  CHECK(*out.counterexample == Assignment{{"x", *a.find_label("a")}});

  CHECK(check_identity(a, parse_identity("x + x*x = x*x", Signature::plus_times)).satisfied);
}

TEST_CASE("the assignment budget is enforced") {
  FiniteAlgebra a = a21();
  Identity id = parse_identity("x + y = y + x", Signature::plus_times);
  CheckOptions opt;
  opt.budget = 10;
  try {
    check_identity(a, id, opt);
    FAIL("expected budget_exceeded_error");
  } catch (const budget_exceeded_error& e) {
    CHECK(e.evaluated == 10);
  }
}

TEST_CASE("sharded checking matches the single-job outcome") {
  FiniteAlgebra a = a21();
  for (const char* text : {"x + x*x = x", "x*y + y*x = y*x + x*y", "x*(y + z) = x*y + x*z"}) {
    Identity id = parse_identity(text, Signature::plus_times);
    CheckOptions one, three;
    three.jobs = 3;
    CheckOutcome lhs = check_identity(a, id, one), rhs = check_identity(a, id, three);
    CHECK(lhs.satisfied == rhs.satisfied);
    CHECK(lhs.counterexample == rhs.counterexample);
  }
  // Large enough assignment space to actually split across threads.
  FiniteAlgebra e = end_chain(4);
  for (const char* text : {"x*(y + z)*w = x*y*w + x*z*w", "x*y*z*w = y*x*z*w"}) {
    Identity id = parse_identity(text, Signature::plus_times);
    CheckOptions one, three;
    three.jobs = 3;
    CheckOutcome lhs = check_identity(e, id, one), rhs = check_identity(e, id, three);
    CHECK(lhs.satisfied == rhs.satisfied);
    CHECK(lhs.counterexample == rhs.counterexample);
  }
}

TEST_CASE("word utilities") {
  Word w = parse_word("x y x");
  CHECK(w == Word{"x", "y", "x"});
  CHECK(term_to_word(word_to_term(w)) == w);
  CHECK(word_to_term(w).to_string() == "x*y*x");
  CHECK_THROWS(term_to_word(parse_term("x + y", Signature::plus_times)));
  CHECK(first_occurrence_word(w) == Word{"x", "y"});
  CHECK(last_occurrence_word(w) == Word{"y", "x"});
}

TEST_CASE("the marker word pair") {
  auto [v2, v2p] = vn_pair(2);
  CHECK(v2 == Word{"x1", "x2", "x3", "x4", "x2", "x1", "x3", "x4", "x1", "x2"});
  Word expect;
  for (int round = 0; round < 2; ++round)
    for (const char* s : {"x1", "x2", "x3", "x4", "x2", "x1", "x3", "x4"}) expect.push_back(s);
  expect.push_back("x1");
  expect.push_back("x2");
  CHECK(v2p == expect);
  CHECK(vn_pair(3).first.size() == 15);
  CHECK(vn_pair(3).second.size() == 27);
  CHECK_THROWS_AS(vn_pair(1), std::invalid_argument);
}

TEST_CASE("jump sets") {
  CHECK(jumps_of(parse_word("x y x")) ==
        std::vector<Jump>{{"x", {}, "y"}, {"x", {"y"}, "x"}, {"y", {}, "x"}});
  CHECK(jumps_of(parse_word("x x")) == std::vector<Jump>{{"x", {}, "x"}});
  CHECK(jumps_of(parse_word("x x x")) == std::vector<Jump>{{"x", {}, "x"}});
  CHECK(jumps_of(parse_word("x")).empty());
}

TEST_CASE("word-identity test against exhaustive evaluation") {
  CHECK(a21_satisfies(parse_word("x x"), parse_word("x x x")));
  CHECK_FALSE(a21_satisfies(parse_word("x"), parse_word("x x")));
  CHECK_FALSE(a21_satisfies(parse_word("x y"), parse_word("y x")));
}

TEST_CASE("plus rewrites to an inverse-signature term") {
  FiniteAlgebra b = brandt_monoid(), plus = b21();
  Term sum = parse_term("x + y", Signature::plus_times);
  Term rewritten = rewrite_plus_to_inv(sum, idempotent_power_exponent(b));
  CHECK(rewritten.signature() == Signature::times_inverse);
  CHECK(rewritten.to_string() == "x*y^-1*x*y^-1*x");
  for (element_id x = 0; x < b.size(); ++x)
    for (element_id y = 0; y < b.size(); ++y)
      CHECK(eval_term(rewritten, {{"x", x}, {"y", y}}, b) == plus.add(x, y));
}

TEST_CASE("plus rewrite agrees with the derived addition on the witness family") {
  SnFamily s = build_sn(2);
  const FiniteAlgebra& a = s.algebra;
  FiniteAlgebra plus = nat_addition(a);
  Term rewritten =
      rewrite_plus_to_inv(parse_term("x + y", Signature::plus_times), idempotent_power_exponent(a));
  for (element_id x = 0; x < a.size(); ++x)
    for (element_id y = 0; y < a.size(); ++y)
      CHECK(eval_term(rewritten, {{"x", x}, {"y", y}}, a) == plus.add(x, y));
}
