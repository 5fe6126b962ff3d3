#include "fialg/terms.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <initializer_list>
#include <set>
#include <sstream>
#include <thread>

namespace fialg {

Term Term::variable(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::variable;
  n->name = std::move(name);
  return Term(std::move(n));
}

Term Term::mul(Term l, Term r) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::mul;
  n->has_add = l.node_->has_add || r.node_->has_add;
  n->has_inv = l.node_->has_inv || r.node_->has_inv;
  n->a = std::move(l.node_);
  n->b = std::move(r.node_);
  return Term(std::move(n));
}

Term Term::add(Term l, Term r) {
  if (l.node_->has_inv || r.node_->has_inv)
    throw std::invalid_argument("a term may not mix + with ^-1");
  auto n = std::make_shared<Node>();
  n->kind = TermKind::add;
  n->has_add = true;
  n->a = std::move(l.node_);
  n->b = std::move(r.node_);
  return Term(std::move(n));
}

Term Term::inv(Term t) {
  if (t.node_->has_add) throw std::invalid_argument("a term may not mix + with ^-1");
  auto n = std::make_shared<Node>();
  n->kind = TermKind::inv;
  n->has_inv = true;
  n->a = std::move(t.node_);
  return Term(std::move(n));
}

const std::string& Term::var_name() const {
  if (kind() != TermKind::variable) throw std::logic_error("not a variable");
  return node_->name;
}

const Term Term::left() const {
  if (kind() != TermKind::mul && kind() != TermKind::add) throw std::logic_error("no left child");
  return Term(node_->a);
}

const Term Term::right() const {
  if (kind() != TermKind::mul && kind() != TermKind::add) throw std::logic_error("no right child");
  return Term(node_->b);
}

const Term Term::child() const {
  if (kind() != TermKind::inv) throw std::logic_error("not an inverse");
  return Term(node_->a);
}

Signature Term::signature() const {
  if (node_->has_add) return Signature::plus_times;
  if (node_->has_inv) return Signature::times_inverse;
  return Signature::times_only;
}

namespace {

void collect_vars(const Term& t, std::set<std::string>& out) {
  switch (t.kind()) {
    case TermKind::variable: out.insert(t.var_name()); return;
    case TermKind::inv: collect_vars(t.child(), out); return;
    case TermKind::mul:
    case TermKind::add:
      collect_vars(t.left(), out);
      collect_vars(t.right(), out);
      return;
  }
}

void render(const Term& t, std::ostream& os, int parent_prec) {
  // precedence: + is 0, * is 1, ^ binds tightest
  switch (t.kind()) {
    case TermKind::variable: os << t.var_name(); return;
    case TermKind::add: {
      if (parent_prec > 0) os << '(';
      render(t.left(), os, 0);
      os << " + ";
      render(t.right(), os, 0);
      if (parent_prec > 0) os << ')';
      return;
    }
    case TermKind::mul: {
      if (parent_prec > 1) os << '(';
      render(t.left(), os, 1);
      os << '*';
      render(t.right(), os, 1);
      if (parent_prec > 1) os << ')';
      return;
    }
    case TermKind::inv: {
      const Term c = t.child();
      if (c.kind() == TermKind::variable) {
        os << c.var_name() << "^-1";
      } else {
        os << '(';
        render(c, os, 0);
        os << ")^-1";
      }
      return;
    }
  }
}

}  // namespace

std::vector<std::string> Term::alphabet() const {
  std::set<std::string> s;
  collect_vars(*this, s);
  return {s.begin(), s.end()};
}

std::string Term::to_string() const {
  std::ostringstream os;
  render(*this, os, 0);
  return os.str();
}

std::vector<std::string> Identity::alphabet() const {
  std::set<std::string> s;
  collect_vars(lhs, s);
  collect_vars(rhs, s);
  return {s.begin(), s.end()};
}

std::string Identity::to_string() const { return lhs.to_string() + " = " + rhs.to_string(); }

parse_error::parse_error(std::size_t position_, const std::string& message)
    : std::runtime_error("parse error at position " + std::to_string(position_) + ": " + message),
      position(position_) {}

namespace {

struct Token {
  enum Kind { var, integer, plus, star, caret, minus, lparen, rparen, equals, end } kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c >= 'a' && c <= 'z') {
      std::size_t j = i + 1;
      while (j < s.size() && ((s[j] >= 'a' && s[j] <= 'z') || (s[j] >= '0' && s[j] <= '9'))) ++j;
      out.push_back({Token::var, std::string(s.substr(i, j - i)), i});
      i = j;
      continue;
    }
    if (c >= '0' && c <= '9') {
      std::size_t j = i + 1;
      while (j < s.size() && s[j] >= '0' && s[j] <= '9') ++j;
      out.push_back({Token::integer, std::string(s.substr(i, j - i)), i});
      i = j;
      continue;
    }
    Token::Kind k;
    switch (c) {
      case '+': k = Token::plus; break;
      case '*': k = Token::star; break;
      case '^': k = Token::caret; break;
      case '-': k = Token::minus; break;
      case '(': k = Token::lparen; break;
      case ')': k = Token::rparen; break;
      case '=': k = Token::equals; break;
      default: throw parse_error(i, std::string("unexpected character '") + c + "'");
    }
    out.push_back({k, std::string(1, c), i});
    ++i;
  }
  out.push_back({Token::end, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, Signature sig) : tokens_(std::move(tokens)), sig_(sig) {}

  Term parse_full_term() {
    Term t = sum();
    expect(Token::end, "end of input");
    return t;
  }

  Identity parse_full_identity() {
    Term l = sum();
    expect(Token::equals, "'='");
    Term r = sum();
    expect(Token::end, "end of input");
    return {std::move(l), std::move(r)};
  }

 private:
  const Token& peek() const { return tokens_[at_]; }
  const Token& take() { return tokens_[at_++]; }

  void expect(Token::Kind k, const char* what) {
    if (peek().kind != k) throw parse_error(peek().pos, std::string("expected ") + what);
    ++at_;
  }

  Term sum() {
    Term t = product();
    while (peek().kind == Token::plus) {
      if (sig_ != Signature::plus_times)
        throw parse_error(peek().pos, "'+' is only allowed in the plus-times signature");
      take();
      t = Term::add(std::move(t), product());
    }
    return t;
  }

  Term product() {
    Term t = postfix();
    while (true) {
      if (peek().kind == Token::star) {
        take();
        t = Term::mul(std::move(t), postfix());
      } else if (peek().kind == Token::var || peek().kind == Token::lparen) {
        t = Term::mul(std::move(t), postfix());  // juxtaposition
      } else {
        break;
      }
    }
    return t;
  }

  Term postfix() {
    Term t = atom();
    while (peek().kind == Token::caret) {
      std::size_t cpos = take().pos;
      if (peek().kind == Token::minus) {
        take();
        const Token& num = peek();
        if (num.kind != Token::integer || num.text != "1")
          throw parse_error(num.pos, "only ^-1 is a valid negative exponent");
        take();
        if (sig_ != Signature::times_inverse)
          throw parse_error(cpos, "'^-1' is only allowed in the times-inverse signature");
        t = Term::inv(std::move(t));
      } else if (peek().kind == Token::integer) {
        const Token& num = take();
        long k = 0;
        try {
          k = std::stol(num.text);
        } catch (const std::out_of_range&) {
          k = -1;
        }
        if (k < 1 || k > 1024) throw parse_error(cpos, "exponent must be 1..1024 or -1");
        Term base = t;
        for (long i = 1; i < k; ++i) t = Term::mul(std::move(t), base);
      } else {
        throw parse_error(peek().pos, "expected an exponent after '^'");
      }
    }
    return t;
  }

  Term atom() {
    if (peek().kind == Token::var) return Term::variable(take().text);
    if (peek().kind == Token::lparen) {
      take();
      Term t = sum();
      expect(Token::rparen, "')'");
      return t;
    }
    throw parse_error(peek().pos, "expected a variable or '('");
  }

  std::vector<Token> tokens_;
  Signature sig_;
  std::size_t at_ = 0;
};

}  // namespace

Term parse_term(std::string_view text, Signature sig) {
  return Parser(tokenize(text), sig).parse_full_term();
}

Identity parse_identity(std::string_view text, Signature sig) {
  return Parser(tokenize(text), sig).parse_full_identity();
}

Signature infer_signature(std::string_view text) {
  bool has_plus = text.find('+') != std::string_view::npos;
  bool has_inv = text.find("^-") != std::string_view::npos;
  if (has_plus && has_inv)
    throw parse_error(text.find("^-"), "identity mixes + with ^-1");
  if (has_plus) return Signature::plus_times;
  if (has_inv) return Signature::times_inverse;
  return Signature::times_only;
}

element_id eval_term(const Term& t, const Assignment& assignment, const FiniteAlgebra& a) {
  switch (t.kind()) {
    case TermKind::variable: {
      auto it = assignment.find(t.var_name());
      if (it == assignment.end())
        throw std::invalid_argument("unbound variable: " + t.var_name());
      if (it->second >= a.size()) throw std::invalid_argument("assignment value out of range");
      return it->second;
    }
    case TermKind::mul: return a.mul(eval_term(t.left(), assignment, a), eval_term(t.right(), assignment, a));
    case TermKind::add:
      if (!a.has_add()) throw std::invalid_argument("term uses + but the algebra has no addition");
      return a.add(eval_term(t.left(), assignment, a), eval_term(t.right(), assignment, a));
    case TermKind::inv:
      if (!a.has_inv())
        throw std::invalid_argument("term uses ^-1 but the algebra has no inversion");
      return a.inv(eval_term(t.child(), assignment, a));
  }
  throw std::logic_error("unreachable");
}

budget_exceeded_error::budget_exceeded_error(std::uint64_t evaluated_)
    : std::runtime_error("identity check budget exceeded after " + std::to_string(evaluated_) +
                         " assignments"),
      evaluated(evaluated_) {}

namespace {

// Flat postorder program; var indexes the odometer digit array.
struct Program {
  enum OpKind : std::uint8_t { push, mul, add, inv };
  struct Op {
    OpKind kind;
    int var;
  };
  std::vector<Op> ops;
  std::size_t stack_need = 0;

  static void compile_into(const Term& t, const std::vector<std::string>& vars, Program& p,
                           std::size_t depth) {
    switch (t.kind()) {
      case TermKind::variable: {
        auto it = std::lower_bound(vars.begin(), vars.end(), t.var_name());
        p.ops.push_back({push, static_cast<int>(it - vars.begin())});
        p.stack_need = std::max(p.stack_need, depth + 1);
        return;
      }
      case TermKind::mul:
      case TermKind::add:
        compile_into(t.left(), vars, p, depth);
        compile_into(t.right(), vars, p, depth + 1);
        p.ops.push_back({t.kind() == TermKind::mul ? mul : add, 0});
        return;
      case TermKind::inv:
        compile_into(t.child(), vars, p, depth);
        p.ops.push_back({inv, 0});
        return;
    }
  }

  static Program compile(const Term& t, const std::vector<std::string>& vars) {
    Program p;
    compile_into(t, vars, p, 0);
    return p;
  }

  element_id run(const element_id* vals, const FiniteAlgebra& a, element_id* stack) const {
    std::size_t top = 0;
    for (const Op& op : ops) {
      switch (op.kind) {
        case push: stack[top++] = vals[op.var]; break;
        case mul:
          --top;
          stack[top - 1] = a.mul(stack[top - 1], stack[top]);
          break;
        case add:
          --top;
          stack[top - 1] = a.add(stack[top - 1], stack[top]);
          break;
        case inv: stack[top - 1] = a.inv(stack[top - 1]); break;
      }
    }
    return stack[0];
  }
};

constexpr std::uint64_t kNoFailure = ~std::uint64_t{0};

// Scans global assignment indices [begin, end) in order; returns the first
// index where the two programs disagree, or kNoFailure. `stop_hint` lets
// other shards cancel this one once they hold a smaller failure index.
std::uint64_t scan_block(const FiniteAlgebra& a, const Program& pl, const Program& pr,
                         std::size_t num_vars, std::uint64_t begin, std::uint64_t end,
                         const std::atomic<std::uint64_t>* stop_hint) {
  const std::uint64_t n = a.size();
  std::vector<element_id> digits(num_vars, 0);
  {
    std::uint64_t rest = begin;
    for (std::size_t v = num_vars; v-- > 0;) {
      digits[v] = static_cast<element_id>(rest % n);
      rest /= n;
    }
  }
  std::vector<element_id> stack(pl.stack_need + pr.stack_need + 2);
  element_id* stack_l = stack.data();
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    if (stop_hint && (idx & 0xFFF) == 0 &&
        stop_hint->load(std::memory_order_relaxed) < begin)
      return kNoFailure;  // a smaller failure exists elsewhere; result unused
    if (pl.run(digits.data(), a, stack_l) != pr.run(digits.data(), a, stack_l)) return idx;
    for (std::size_t v = num_vars; v-- > 0;) {
      if (++digits[v] < n) break;
      digits[v] = 0;
    }
  }
  return kNoFailure;
}

}  // namespace

CheckOutcome check_identity(const FiniteAlgebra& a, const Identity& id, CheckOptions opt) {
  if (opt.budget < 1) throw std::invalid_argument("budget must be >= 1");
  const int jobs = std::max(1, opt.jobs);
  for (const Term* side : {&id.lhs, &id.rhs}) {
    if (side->has_add() && !a.has_add())
      throw std::invalid_argument("identity uses + but the algebra has no addition");
    if (side->has_inv() && !a.has_inv())
      throw std::invalid_argument("identity uses ^-1 but the algebra has no inversion");
  }
  const std::vector<std::string> vars = id.alphabet();
  const std::uint64_t n = a.size();

  unsigned __int128 space_wide = 1;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    space_wide *= n;
    if (space_wide > (static_cast<unsigned __int128>(1) << 62)) break;
  }
  const bool bounded = space_wide <= (static_cast<unsigned __int128>(1) << 62);
  const std::uint64_t space = bounded ? static_cast<std::uint64_t>(space_wide) : kNoFailure;
  const std::uint64_t limit = std::min<std::uint64_t>(space, opt.budget);

  Program pl = Program::compile(id.lhs, vars);
  Program pr = Program::compile(id.rhs, vars);

  std::uint64_t first_fail = kNoFailure;
  if (jobs == 1 || limit < 0x10000) {
    first_fail = scan_block(a, pl, pr, vars.size(), 0, limit, nullptr);
  } else {
    std::atomic<std::uint64_t> best{kNoFailure};
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (limit + jobs - 1) / jobs;
    for (int j = 0; j < jobs; ++j) {
      std::uint64_t begin = std::min<std::uint64_t>(limit, chunk * static_cast<std::uint64_t>(j));
      std::uint64_t end = std::min<std::uint64_t>(limit, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back([&, begin, end] {
        std::uint64_t r = scan_block(a, pl, pr, vars.size(), begin, end, &best);
        if (r != kNoFailure) {
          std::uint64_t cur = best.load();
          while (r < cur && !best.compare_exchange_weak(cur, r)) {
          }
        }
      });
    }
    for (auto& t : pool) t.join();
    first_fail = best.load();
  }

  if (first_fail == kNoFailure) {
    if (space > limit) throw budget_exceeded_error(limit);
    return {true, std::nullopt};
  }
  Assignment witness;
  std::uint64_t rest = first_fail;
  std::vector<element_id> digits(vars.size(), 0);
  for (std::size_t v = vars.size(); v-- > 0;) {
    digits[v] = static_cast<element_id>(rest % n);
    rest /= n;
  }
  for (std::size_t v = 0; v < vars.size(); ++v) witness[vars[v]] = digits[v];
  return {false, std::move(witness)};
}

Term word_to_term(const Word& w) {
  if (w.empty()) throw std::invalid_argument("a word must be nonempty");
  Term t = Term::variable(w[0]);
  for (std::size_t i = 1; i < w.size(); ++i) t = Term::mul(std::move(t), Term::variable(w[i]));
  return t;
}

Word term_to_word(const Term& t) {
  Word w;
  // Left-leaning product chains flatten without recursion depth issues here.
  std::vector<Term> stack{t};
  while (!stack.empty()) {
    Term cur = stack.back();
    stack.pop_back();
    switch (cur.kind()) {
      case TermKind::variable: w.push_back(cur.var_name()); break;
      case TermKind::mul:
        stack.push_back(cur.right());
        stack.push_back(cur.left());
        break;
      default: throw std::invalid_argument("term is not a word: contains non-product operations");
    }
  }
  return w;
}

Word parse_word(std::string_view text) {
  return term_to_word(parse_term(text, Signature::times_only));
}

std::pair<Word, Word> vn_pair(int n) {
  if (n < 2) throw std::invalid_argument("vn_pair needs n >= 2");
  auto var = [](int i) { return "x" + std::to_string(i); };
  Word u, v, ub;
  for (int i = 1; i <= n; ++i) u.push_back(var(i));
  for (int i = n + 1; i <= 2 * n; ++i) v.push_back(var(i));
  ub = u;
  std::reverse(ub.begin(), ub.end());
  auto cat = [](std::initializer_list<const Word*> parts) {
    Word out;
    for (const Word* p : parts) out.insert(out.end(), p->begin(), p->end());
    return out;
  };
  Word vn = cat({&u, &v, &ub, &v, &u});
  Word vnp = cat({&u, &v, &ub, &v, &u, &v, &ub, &v, &u});
  return {std::move(vn), std::move(vnp)};
}

Term rewrite_plus_to_inv(const Term& t, int p) {
  if (p < 1) throw std::invalid_argument("rewrite exponent must be >= 1");
  switch (t.kind()) {
    case TermKind::variable: return t;
    case TermKind::mul:
      return Term::mul(rewrite_plus_to_inv(t.left(), p), rewrite_plus_to_inv(t.right(), p));
    case TermKind::inv: return Term::inv(rewrite_plus_to_inv(t.child(), p));
    case TermKind::add: {
      Term u = rewrite_plus_to_inv(t.left(), p);
      Term v = rewrite_plus_to_inv(t.right(), p);
      Term base = Term::mul(u, Term::inv(v));
      Term power = base;
      for (int i = 1; i < p; ++i) power = Term::mul(std::move(power), base);
      return Term::mul(std::move(power), u);
    }
  }
  throw std::logic_error("unreachable");
}

Word first_occurrence_word(const Word& w) {
  Word out;
  std::set<std::string> seen;
  for (const auto& x : w)
    if (seen.insert(x).second) out.push_back(x);
  return out;
}

Word last_occurrence_word(const Word& w) {
  Word rev;
  std::set<std::string> seen;
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    if (seen.insert(*it).second) rev.push_back(*it);
  std::reverse(rev.begin(), rev.end());
  return rev;
}

std::vector<Jump> jumps_of(const Word& w) {
  std::set<Jump> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::set<std::string> between;
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (!between.contains(w[i]) && !between.contains(w[j]))
        out.insert(Jump{w[i], {between.begin(), between.end()}, w[j]});
      between.insert(w[j]);
    }
  }
  return {out.begin(), out.end()};
}

bool a21_satisfies(const Word& w, const Word& w2) {
  return first_occurrence_word(w) == first_occurrence_word(w2) &&
         last_occurrence_word(w) == last_occurrence_word(w2) && jumps_of(w) == jumps_of(w2);
}

}  // namespace fialg
