#ifndef FIALG_TERMS_HPP
#define FIALG_TERMS_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fialg/algebra.hpp"

namespace fialg {

// plus_times: {+, *}. times_inverse: {*, ^-1}. times_only: {*} (words).
enum class Signature { times_only, times_inverse, plus_times };

enum class TermKind { variable, mul, add, inv };

// Immutable term tree with cheap value-semantics sharing. Add and Inv never
// occur together in one term.
class Term {
 public:
  static Term variable(std::string name);
  static Term mul(Term l, Term r);
  static Term add(Term l, Term r);
  static Term inv(Term t);

  TermKind kind() const { return node_->kind; }
  const std::string& var_name() const;
  const Term left() const;
  const Term right() const;
  const Term child() const;  // of an Inv node

  bool has_add() const { return node_->has_add; }
  bool has_inv() const { return node_->has_inv; }

  // Smallest signature containing the operations used.
  Signature signature() const;

  // Distinct variable names, sorted.
  std::vector<std::string> alphabet() const;

  std::string to_string() const;

 private:
  struct Node {
    TermKind kind;
    std::string name;
    std::shared_ptr<const Node> a, b;
    bool has_add = false, has_inv = false;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct Identity {
  Term lhs, rhs;
  std::vector<std::string> alphabet() const;  // union, sorted
  std::string to_string() const;
};

class parse_error : public std::runtime_error {
 public:
  parse_error(std::size_t position, const std::string& message);
  std::size_t position;
};

// Grammar: sum of products; product factors juxtaposed or joined by '*';
// postfix ^-1 (times_inverse only) and ^k (k >= 1, expanded left to left-
// associated products); variables match [a-z][a-z0-9]*; parentheses group.
// Operations outside the signature are rejected.
Term parse_term(std::string_view text, Signature sig);
Identity parse_identity(std::string_view text, Signature sig);  // lhs '=' rhs

// Signature suggested by the operators appearing in the text.
Signature infer_signature(std::string_view text);

using Assignment = std::map<std::string, element_id>;

// Structural evaluation; throws when the algebra lacks a needed table or a
// variable is unbound.
element_id eval_term(const Term& t, const Assignment& assignment, const FiniteAlgebra& a);

class budget_exceeded_error : public std::runtime_error {
 public:
  explicit budget_exceeded_error(std::uint64_t evaluated);
  std::uint64_t evaluated;
};

struct CheckOptions {
  std::uint64_t budget = 100'000'000;  // evaluated assignments
  int jobs = 1;
};

struct CheckOutcome {
  bool satisfied;
  std::optional<Assignment> counterexample;  // lexicographically least
};

// Exhaustive search over |A|^#vars assignments in lexicographic order over
// the sorted variable list. The outcome is independent of sharding; only the
// first `budget` assignments are ever evaluated, and running out of budget
// before a verdict throws budget_exceeded_error.
CheckOutcome check_identity(const FiniteAlgebra& a, const Identity& id, CheckOptions opt = {});

// Words are nonempty variable sequences.
using Word = std::vector<std::string>;

Term word_to_term(const Word& w);
Word term_to_word(const Term& t);  // throws unless the term is a pure product of variables
Word parse_word(std::string_view text);

// The word pair (v_n, v_n'): with U = x1..xn, V = x(n+1)..x(2n), U~ = xn..x1,
// v_n = U V U~ V U and v_n' = (U V U~ V)^2 U. Requires n >= 2.
std::pair<Word, Word> vn_pair(int n);

// Replaces every x + y by (x y^-1)^p x, bottom up.
Term rewrite_plus_to_inv(const Term& t, int p);

Word first_occurrence_word(const Word& w);
Word last_occurrence_word(const Word& w);

// A jump (x, G, y): w factors as u x m y v with alf(m) = G and x, y not in G.
struct Jump {
  std::string x;
  std::vector<std::string> between;  // sorted
  std::string y;
  auto operator<=>(const Jump&) const = default;
};

std::vector<Jump> jumps_of(const Word& w);  // sorted, duplicate-free

// Identity-of-words test for the 6-element semiring a21(): equal first-
// occurrence words, equal last-occurrence words, equal jump sets.
bool a21_satisfies(const Word& w, const Word& w2);

}  // namespace fialg

#endif  // FIALG_TERMS_HPP
