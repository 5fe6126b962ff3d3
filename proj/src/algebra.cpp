#include "fialg/algebra.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace fialg {

std::string kind_name(AlgebraKind k) {
  switch (k) {
    case AlgebraKind::semigroup: return "semigroup";
    case AlgebraKind::inverse_semigroup: return "inverse";
    case AlgebraKind::ai_semiring: return "ai-semiring";
  }
  throw std::logic_error("unreachable");
}

AlgebraKind kind_from_name(const std::string& name) {
  if (name == "semigroup") return AlgebraKind::semigroup;
  if (name == "inverse") return AlgebraKind::inverse_semigroup;
  if (name == "ai-semiring") return AlgebraKind::ai_semiring;
  throw std::invalid_argument("unknown algebra kind: " + name);
}

FiniteAlgebra::FiniteAlgebra(AlgebraKind kind, std::vector<std::string> labels,
                             std::vector<element_id> mul, std::vector<element_id> add,
                             std::vector<element_id> inv, std::vector<element_id> generators)
    : kind_(kind),
      labels_(std::move(labels)),
      mul_(std::move(mul)),
      add_(std::move(add)),
      inv_(std::move(inv)),
      generators_(std::move(generators)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw std::invalid_argument("algebra must be nonempty");
  auto check_table = [n](const std::vector<element_id>& t, const char* what) {
    if (t.size() != n * n) throw std::invalid_argument(std::string(what) + " table has wrong size");
    for (element_id v : t)
      if (v >= n) throw std::invalid_argument(std::string(what) + " table entry out of range");
  };
  check_table(mul_, "mul");
  if (!add_.empty()) check_table(add_, "add");
  if (!inv_.empty()) {
    if (inv_.size() != n) throw std::invalid_argument("inv table has wrong size");
    for (element_id v : inv_)
      if (v >= n) throw std::invalid_argument("inv table entry out of range");
  }
  if (kind_ == AlgebraKind::inverse_semigroup && inv_.empty())
    throw std::invalid_argument("an inverse semigroup needs an inv table");
  if (kind_ == AlgebraKind::ai_semiring && add_.empty())
    throw std::invalid_argument("an ai-semiring needs an add table");
  for (element_id g : generators_)
    if (g >= n) throw std::invalid_argument("generator id out of range");
}

std::optional<element_id> FiniteAlgebra::find_label(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<element_id>(i);
  return std::nullopt;
}

std::string VerifyResult::describe(const FiniteAlgebra& a) const {
  if (ok()) return "ok";
  std::ostringstream os;
  os << violation->law << " violated at (";
  for (std::size_t i = 0; i < violation->witness.size(); ++i) {
    if (i) os << ", ";
    os << a.label(violation->witness[i]);
  }
  os << ")";
  return os.str();
}

namespace {

std::optional<LawViolation> check_associative(const FiniteAlgebra& a, bool additive,
                                              const char* law) {
  const element_id n = static_cast<element_id>(a.size());
  auto op = [&](element_id x, element_id y) { return additive ? a.add(x, y) : a.mul(x, y); };
  for (element_id x = 0; x < n; ++x)
    for (element_id y = 0; y < n; ++y)
      for (element_id z = 0; z < n; ++z)
        if (op(op(x, y), z) != op(x, op(y, z))) return LawViolation{law, {x, y, z}};
  return std::nullopt;
}

}  // namespace

VerifyResult verify_semigroup(const FiniteAlgebra& a) {
  return {check_associative(a, false, "associativity:mul")};
}

VerifyResult verify_inverse(const FiniteAlgebra& a) {
  if (!a.has_inv()) return {LawViolation{"inverse:no-table", {}}};
  if (auto v = check_associative(a, false, "associativity:mul")) return {v};
  const element_id n = static_cast<element_id>(a.size());
  for (element_id x = 0; x < n; ++x) {
    element_id xi = a.inv(x);
    if (a.mul(a.mul(x, xi), x) != x) return {LawViolation{"inverse:x*x'*x=x", {x}}};
    if (a.mul(a.mul(xi, x), xi) != xi) return {LawViolation{"inverse:x'*x*x'=x'", {x}}};
  }
  // Uniqueness of inverses: no second element may satisfy both laws.
  for (element_id x = 0; x < n; ++x)
    for (element_id y = 0; y < n; ++y) {
      if (y == a.inv(x)) continue;
      if (a.mul(a.mul(x, y), x) == x && a.mul(a.mul(y, x), y) == y)
        return {LawViolation{"inverse:uniqueness", {x, a.inv(x), y}}};
    }
  // Equivalent formulation, kept as a separate named law for reporting:
  // idempotents commute pairwise.
  for (element_id e = 0; e < n; ++e) {
    if (a.mul(e, e) != e) continue;
    for (element_id f = 0; f < n; ++f) {
      if (a.mul(f, f) != f) continue;
      if (a.mul(e, f) != a.mul(f, e)) return {LawViolation{"inverse:idempotents-commute", {e, f}}};
    }
  }
  return {std::nullopt};
}

VerifyResult verify_ai_semiring(const FiniteAlgebra& a) {
  if (!a.has_add()) return {LawViolation{"ai:no-add-table", {}}};
  const element_id n = static_cast<element_id>(a.size());
  for (element_id x = 0; x < n; ++x) {
    if (a.add(x, x) != x) return {LawViolation{"ai:add-idempotent", {x}}};
    for (element_id y = 0; y < n; ++y)
      if (a.add(x, y) != a.add(y, x)) return {LawViolation{"ai:add-commutative", {x, y}}};
  }
  if (auto v = check_associative(a, true, "associativity:add")) return {v};
  if (auto v = check_associative(a, false, "associativity:mul")) return {v};
  for (element_id x = 0; x < n; ++x)
    for (element_id y = 0; y < n; ++y)
      for (element_id z = 0; z < n; ++z) {
        if (a.mul(x, a.add(y, z)) != a.add(a.mul(x, y), a.mul(x, z)))
          return {LawViolation{"ai:left-distributivity", {x, y, z}}};
        if (a.mul(a.add(y, z), x) != a.add(a.mul(y, x), a.mul(z, x)))
          return {LawViolation{"ai:right-distributivity", {x, y, z}}};
      }
  return {std::nullopt};
}

VerifyResult verify_kind_axioms(const FiniteAlgebra& a) {
  switch (a.kind()) {
    case AlgebraKind::semigroup: return verify_semigroup(a);
    case AlgebraKind::inverse_semigroup: return verify_inverse(a);
    case AlgebraKind::ai_semiring: return verify_ai_semiring(a);
  }
  throw std::logic_error("unreachable");
}

closure_limit_error::closure_limit_error(std::size_t seen_, std::size_t max_size)
    : std::runtime_error("closure exceeded max_size=" + std::to_string(max_size) +
                         " (saw at least " + std::to_string(seen_) + " elements)"),
      seen(seen_) {}

element_id MapClosure::id_of(const PartialInjection& f) const {
  auto id = try_id_of(f);
  if (!id) throw std::invalid_argument("map not in closure: " + f.to_string());
  return *id;
}

std::optional<element_id> MapClosure::try_id_of(const PartialInjection& f) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), f, canonical_less);
  if (it != elements.end() && *it == f)
    return static_cast<element_id>(it - elements.begin());
  return std::nullopt;
}

MapClosure closure_from_maps(const std::vector<PartialInjection>& gens, bool with_inverses,
                             std::size_t max_size) {
  if (gens.empty()) throw std::invalid_argument("closure needs at least one generator");
  if (max_size < 1) throw std::invalid_argument("max_size must be >= 1");
  const int degree = gens[0].degree();
  for (const auto& g : gens)
    if (g.degree() != degree) throw std::invalid_argument("generators must share one degree");

  // Letters: generator index, or ~index for its inverse.
  std::vector<std::pair<PartialInjection, int>> alphabet;
  for (std::size_t i = 0; i < gens.size(); ++i)
    alphabet.emplace_back(gens[i], static_cast<int>(i));
  if (with_inverses)
    for (std::size_t i = 0; i < gens.size(); ++i)
      alphabet.emplace_back(gens[i].inverse(), ~static_cast<int>(i));

  std::map<PartialInjection, std::vector<int>> word_of;  // canonically ordered
  std::set<PartialInjection> pending;
  for (const auto& [f, letter] : alphabet) {
    if (word_of.emplace(f, std::vector<int>{letter}).second) pending.insert(f);
  }
  while (!pending.empty()) {
    PartialInjection f = *pending.begin();
    pending.erase(pending.begin());
    const std::vector<int>& wf = word_of.at(f);
    for (const auto& [g, letter] : alphabet) {
      PartialInjection h = compose(f, g);
      auto it = word_of.find(h);
      if (it != word_of.end()) continue;
      std::vector<int> wh = wf;
      wh.push_back(letter);
      word_of.emplace(h, std::move(wh));
      if (word_of.size() > max_size) throw closure_limit_error(word_of.size(), max_size);
      pending.insert(h);
    }
  }

  std::vector<PartialInjection> elements;
  std::vector<std::vector<int>> words;
  elements.reserve(word_of.size());
  for (auto& [f, w] : word_of) {
    elements.push_back(f);
    words.push_back(std::move(w));
  }

  const std::size_t n = elements.size();
  auto id_of = [&elements](const PartialInjection& f) {
    auto it = std::lower_bound(elements.begin(), elements.end(), f, canonical_less);
    return static_cast<element_id>(it - elements.begin());
  };

  std::vector<element_id> mul(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mul[i * n + j] = id_of(compose(elements[i], elements[j]));

  std::vector<element_id> inv;
  if (with_inverses) {
    inv.resize(n);
    for (std::size_t i = 0; i < n; ++i) inv[i] = id_of(elements[i].inverse());
  }

  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& f : elements) labels.push_back(f.to_string());

  std::vector<element_id> gen_ids;
  for (const auto& g : gens) {
    element_id id = id_of(g);
    if (std::find(gen_ids.begin(), gen_ids.end(), id) == gen_ids.end()) gen_ids.push_back(id);
  }

  AlgebraKind kind = with_inverses ? AlgebraKind::inverse_semigroup : AlgebraKind::semigroup;
  return MapClosure{FiniteAlgebra(kind, std::move(labels), std::move(mul), {}, std::move(inv),
                                  std::move(gen_ids)),
                    std::move(elements), std::move(words)};
}

InversionOutcome inversion_table(const FiniteAlgebra& a) {
  const element_id n = static_cast<element_id>(a.size());
  std::vector<element_id> inv(n);
  for (element_id x = 0; x < n; ++x) {
    std::vector<element_id> found;
    for (element_id y = 0; y < n; ++y)
      if (a.mul(a.mul(x, y), x) == x && a.mul(a.mul(y, x), y) == y) found.push_back(y);
    if (found.empty()) return {std::nullopt, "no inverse", {x}};
    if (found.size() > 1) return {std::nullopt, "two inverses", {x, found[0], found[1]}};
    inv[x] = found[0];
  }
  FiniteAlgebra out(AlgebraKind::inverse_semigroup, a.labels(), a.mul_table(), a.add_table(),
                    std::move(inv), a.generators());
  return {std::move(out), "", {}};
}

FiniteAlgebra direct_product(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (a.kind() != b.kind())
    throw std::invalid_argument("direct product needs algebras of the same kind");
  const std::size_t na = a.size(), nb = b.size(), n = na * nb;
  auto pair_id = [nb](element_id x, element_id y) {
    return static_cast<element_id>(x * nb + y);
  };
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t x = 0; x < na; ++x)
    for (std::size_t y = 0; y < nb; ++y)
      labels.push_back("(" + a.label(static_cast<element_id>(x)) + "," +
                       b.label(static_cast<element_id>(y)) + ")");
  std::vector<element_id> mul(n * n);
  for (element_id xa = 0; xa < na; ++xa)
    for (element_id xb = 0; xb < nb; ++xb)
      for (element_id ya = 0; ya < na; ++ya)
        for (element_id yb = 0; yb < nb; ++yb)
          mul[pair_id(xa, xb) * n + pair_id(ya, yb)] = pair_id(a.mul(xa, ya), b.mul(xb, yb));
  std::vector<element_id> add;
  if (a.kind() == AlgebraKind::ai_semiring) {
    add.resize(n * n);
    for (element_id xa = 0; xa < na; ++xa)
      for (element_id xb = 0; xb < nb; ++xb)
        for (element_id ya = 0; ya < na; ++ya)
          for (element_id yb = 0; yb < nb; ++yb)
            add[pair_id(xa, xb) * n + pair_id(ya, yb)] = pair_id(a.add(xa, ya), b.add(xb, yb));
  }
  std::vector<element_id> inv;
  if (a.kind() == AlgebraKind::inverse_semigroup) {
    inv.resize(n);
    for (element_id xa = 0; xa < na; ++xa)
      for (element_id xb = 0; xb < nb; ++xb) inv[pair_id(xa, xb)] = pair_id(a.inv(xa), b.inv(xb));
  }
  return FiniteAlgebra(a.kind(), std::move(labels), std::move(mul), std::move(add),
                       std::move(inv));
}

Subalgebra subalgebra_generated(const FiniteAlgebra& a, const std::vector<element_id>& seeds) {
  if (seeds.empty()) throw std::invalid_argument("subalgebra needs at least one seed");
  const std::size_t n = a.size();
  std::vector<char> in(n, 0);
  std::vector<element_id> work;
  for (element_id s : seeds) {
    if (s >= n) throw std::invalid_argument("seed out of range");
    if (!in[s]) {
      in[s] = 1;
      work.push_back(s);
    }
  }
  // Fixpoint under every operation the parent carries.
  for (std::size_t i = 0; i < work.size(); ++i) {
    element_id x = work[i];
    auto visit = [&](element_id y) {
      if (!in[y]) {
        in[y] = 1;
        work.push_back(y);
      }
    };
    if (a.has_inv()) visit(a.inv(x));
    for (std::size_t j = 0; j <= i; ++j) {
      element_id y = work[j];
      visit(a.mul(x, y));
      visit(a.mul(y, x));
      if (a.has_add()) {
        visit(a.add(x, y));
        visit(a.add(y, x));
      }
    }
  }

  std::vector<element_id> inclusion;
  for (element_id x = 0; x < n; ++x)
    if (in[x]) inclusion.push_back(x);
  std::vector<element_id> back(n, 0);
  for (std::size_t i = 0; i < inclusion.size(); ++i) back[inclusion[i]] = static_cast<element_id>(i);

  const std::size_t m = inclusion.size();
  std::vector<std::string> labels;
  labels.reserve(m);
  for (element_id x : inclusion) labels.push_back(a.label(x));
  std::vector<element_id> mul(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) mul[i * m + j] = back[a.mul(inclusion[i], inclusion[j])];
  std::vector<element_id> add;
  if (a.has_add()) {
    add.resize(m * m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) add[i * m + j] = back[a.add(inclusion[i], inclusion[j])];
  }
  std::vector<element_id> inv;
  if (a.has_inv()) {
    inv.resize(m);
    for (std::size_t i = 0; i < m; ++i) inv[i] = back[a.inv(inclusion[i])];
  }
  std::vector<element_id> gen_ids;
  for (element_id s : seeds) {
    element_id id = back[s];
    if (std::find(gen_ids.begin(), gen_ids.end(), id) == gen_ids.end()) gen_ids.push_back(id);
  }
  return Subalgebra{FiniteAlgebra(a.kind(), std::move(labels), std::move(mul), std::move(add),
                                  std::move(inv), std::move(gen_ids)),
                    std::move(inclusion)};
}

IdealCheck is_ideal(const FiniteAlgebra& a, const std::vector<element_id>& subset) {
  const std::size_t n = a.size();
  if (subset.empty()) return {false, "an ideal must be nonempty", {}};
  std::vector<char> in(n, 0);
  for (element_id x : subset) {
    if (x >= n) throw std::invalid_argument("subset element out of range");
    in[x] = 1;
  }
  for (element_id i = 0; i < n; ++i) {
    if (!in[i]) continue;
    for (element_id x = 0; x < n; ++x) {
      if (!in[a.mul(x, i)]) return {false, "left product escapes", {x, i}};
      if (!in[a.mul(i, x)]) return {false, "right product escapes", {i, x}};
      if (a.kind() == AlgebraKind::ai_semiring) {
        if (!in[a.add(x, i)]) return {false, "sum escapes", {x, i}};
        if (!in[a.add(i, x)]) return {false, "sum escapes", {i, x}};
      }
    }
  }
  return {true, "", {}};
}

FiniteAlgebra rees_quotient(const FiniteAlgebra& a, const std::vector<element_id>& ideal) {
  IdealCheck chk = is_ideal(a, ideal);
  if (!chk.is_ideal) throw std::invalid_argument("not an ideal: " + chk.reason);
  const std::size_t n = a.size();
  std::vector<char> in(n, 0);
  for (element_id x : ideal) in[x] = 1;

  std::vector<element_id> kept;
  for (element_id x = 0; x < n; ++x)
    if (!in[x]) kept.push_back(x);
  const std::size_t m = kept.size() + 1;  // collapsed zero goes last
  const element_id zero = static_cast<element_id>(m - 1);
  std::vector<element_id> to_new(n, zero);
  for (std::size_t i = 0; i < kept.size(); ++i) to_new[kept[i]] = static_cast<element_id>(i);

  std::vector<std::string> labels;
  for (element_id x : kept) labels.push_back(a.label(x));
  labels.push_back("0");

  auto quotient_table = [&](bool additive) {
    std::vector<element_id> t(m * m, zero);
    for (std::size_t i = 0; i < kept.size(); ++i)
      for (std::size_t j = 0; j < kept.size(); ++j) {
        element_id v = additive ? a.add(kept[i], kept[j]) : a.mul(kept[i], kept[j]);
        t[i * m + j] = to_new[v];
      }
    // Rows and columns through the zero class stay at zero: the ideal absorbs
    // under every signature operation, which is exactly what is_ideal checked.
    return t;
  };

  std::vector<element_id> mul = quotient_table(false);
  std::vector<element_id> add;
  if (a.kind() == AlgebraKind::ai_semiring) add = quotient_table(true);
  std::vector<element_id> inv;
  if (a.kind() == AlgebraKind::inverse_semigroup) {
    inv.resize(m);
    for (std::size_t i = 0; i < kept.size(); ++i) inv[i] = to_new[a.inv(kept[i])];
    inv[zero] = zero;
  }
  return FiniteAlgebra(a.kind(), std::move(labels), std::move(mul), std::move(add),
                       std::move(inv));
}

bool transports_exactly(const FiniteAlgebra& a, const FiniteAlgebra& b,
                        const std::vector<element_id>& map) {
  const std::size_t n = a.size();
  if (b.size() != n || map.size() != n) return false;
  std::vector<char> hit(n, 0);
  for (element_id v : map) {
    if (v >= n || hit[v]) return false;
    hit[v] = 1;
  }
  const bool with_add = a.kind() == AlgebraKind::ai_semiring;
  const bool with_inv = a.kind() == AlgebraKind::inverse_semigroup;
  for (element_id x = 0; x < n; ++x) {
    if (with_inv && map[a.inv(x)] != b.inv(map[x])) return false;
    for (element_id y = 0; y < n; ++y) {
      if (map[a.mul(x, y)] != b.mul(map[x], map[y])) return false;
      if (with_add && map[a.add(x, y)] != b.add(map[x], map[y])) return false;
    }
  }
  return true;
}

namespace {

// Cheap iso invariants: idempotency, absorbed identities, row/column value
// counts, per operation in the kind's signature.
std::vector<int> fingerprint(const FiniteAlgebra& a, element_id x) {
  const element_id n = static_cast<element_id>(a.size());
  std::vector<int> fp;
  auto scan = [&](auto&& op) {
    fp.push_back(op(x, x) == x);
    int left_ids = 0, right_ids = 0;
    std::set<element_id> row, col;
    for (element_id y = 0; y < n; ++y) {
      if (op(y, x) == x) ++left_ids;
      if (op(x, y) == x) ++right_ids;
      row.insert(op(x, y));
      col.insert(op(y, x));
    }
    fp.push_back(left_ids);
    fp.push_back(right_ids);
    fp.push_back(static_cast<int>(row.size()));
    fp.push_back(static_cast<int>(col.size()));
  };
  scan([&a](element_id p, element_id q) { return a.mul(p, q); });
  if (a.kind() == AlgebraKind::ai_semiring)
    scan([&a](element_id p, element_id q) { return a.add(p, q); });
  if (a.kind() == AlgebraKind::inverse_semigroup) fp.push_back(a.inv(x) == x);
  return fp;
}

// A generating set for the kind's signature, preferring declared generators.
std::vector<element_id> generating_set(const FiniteAlgebra& a) {
  if (!a.generators().empty()) {
    Subalgebra s = subalgebra_generated(a, a.generators());
    if (s.algebra.size() == a.size()) return a.generators();
  }
  std::vector<element_id> gens;
  std::vector<char> covered(a.size(), 0);
  for (element_id x = 0; x < a.size(); ++x) {
    if (covered[x]) continue;
    gens.push_back(x);
    Subalgebra s = subalgebra_generated(a, gens);
    for (element_id y : s.inclusion) covered[y] = 1;
  }
  return gens;
}

struct IsoSearch {
  const FiniteAlgebra& a;
  const FiniteAlgebra& b;
  std::vector<std::vector<int>> fp_b;
  std::vector<element_id> gens;
  std::vector<std::vector<int>> fp_gens;
  std::vector<int> img;   // a-element -> b-element or -1
  std::vector<char> used;  // b-elements already hit

  // Extends img under the operations; false on conflict.
  bool propagate() {
    std::vector<element_id> known;
    for (element_id x = 0; x < a.size(); ++x)
      if (img[x] >= 0) known.push_back(x);
    bool grew = true;
    auto assign = [&](element_id x, element_id y) {
      if (img[x] >= 0) return img[x] == static_cast<int>(y);
      if (used[y]) return false;
      img[x] = static_cast<int>(y);
      used[y] = 1;
      known.push_back(x);
      grew = true;
      return true;
    };
    while (grew) {
      grew = false;
      for (std::size_t i = 0; i < known.size(); ++i) {
        element_id x = known[i];
        element_id fx = static_cast<element_id>(img[x]);
        if (a.kind() == AlgebraKind::inverse_semigroup &&
            !assign(a.inv(x), b.inv(fx)))
          return false;
        for (std::size_t j = 0; j < known.size(); ++j) {
          element_id y = known[j];
          element_id fy = static_cast<element_id>(img[y]);
          if (!assign(a.mul(x, y), b.mul(fx, fy))) return false;
          if (a.kind() == AlgebraKind::ai_semiring && !assign(a.add(x, y), b.add(fx, fy)))
            return false;
        }
      }
    }
    return true;
  }

  std::optional<std::vector<element_id>> extend(std::size_t pos) {
    if (pos == gens.size()) {
      for (element_id x = 0; x < a.size(); ++x)
        if (img[x] < 0) return std::nullopt;  // gens did not generate; cannot happen
      std::vector<element_id> map(a.size());
      for (element_id x = 0; x < a.size(); ++x) map[x] = static_cast<element_id>(img[x]);
      if (transports_exactly(a, b, map)) return map;
      return std::nullopt;
    }
    for (element_id y = 0; y < b.size(); ++y) {
      if (used[y] && img[gens[pos]] != static_cast<int>(y)) continue;
      if (fp_b[y] != fp_gens[pos]) continue;
      std::vector<int> saved_img = img;
      std::vector<char> saved_used = used;
      bool ok = true;
      if (img[gens[pos]] < 0) {
        img[gens[pos]] = static_cast<int>(y);
        used[y] = 1;
        ok = propagate();
      } else if (img[gens[pos]] != static_cast<int>(y)) {
        ok = false;
      }
      if (ok)
        if (auto r = extend(pos + 1)) return r;
      img = std::move(saved_img);
      used = std::move(saved_used);
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<std::vector<element_id>> is_isomorphic(const FiniteAlgebra& a,
                                                     const FiniteAlgebra& b) {
  if (a.kind() != b.kind())
    throw std::invalid_argument("isomorphism test needs algebras of the same kind");
  if (a.size() != b.size()) return std::nullopt;
  const element_id n = static_cast<element_id>(a.size());
  std::vector<std::vector<int>> fa(n), fb(n);
  for (element_id x = 0; x < n; ++x) {
    fa[x] = fingerprint(a, x);
    fb[x] = fingerprint(b, x);
  }
  {
    auto sa = fa, sb = fb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  IsoSearch search{a, b, std::move(fb), generating_set(a), {}, {}, {}};
  for (element_id g : search.gens) search.fp_gens.push_back(fa[g]);
  search.img.assign(n, -1);
  search.used.assign(n, 0);
  return search.extend(0);
}

FiniteAlgebra mul_reduct(const FiniteAlgebra& a) {
  return FiniteAlgebra(AlgebraKind::semigroup, a.labels(), a.mul_table(), {}, {}, a.generators());
}

FiniteAlgebra add_reduct(const FiniteAlgebra& a) {
  if (!a.has_add()) throw std::invalid_argument("no additive reduct: missing add table");
  return FiniteAlgebra(AlgebraKind::semigroup, a.labels(), a.add_table(), {}, {}, {});
}

std::string algebra_to_json(const FiniteAlgebra& a) {
  nlohmann::json j;
  j["kind"] = kind_name(a.kind());
  j["elements"] = a.labels();
  j["mul"] = a.mul_table();
  if (a.has_add()) j["add"] = a.add_table();
  if (a.has_inv()) j["inv"] = a.inv_table();
  j["generators"] = a.generators();
  return j.dump(2) + "\n";
}

FiniteAlgebra algebra_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  AlgebraKind kind = kind_from_name(j.at("kind").get<std::string>());
  auto labels = j.at("elements").get<std::vector<std::string>>();
  auto mul = j.at("mul").get<std::vector<element_id>>();
  std::vector<element_id> add, inv, gens;
  if (j.contains("add")) add = j.at("add").get<std::vector<element_id>>();
  if (j.contains("inv")) inv = j.at("inv").get<std::vector<element_id>>();
  if (j.contains("generators")) gens = j.at("generators").get<std::vector<element_id>>();
  return FiniteAlgebra(kind, std::move(labels), std::move(mul), std::move(add), std::move(inv),
                       std::move(gens));
}

void save_algebra(const FiniteAlgebra& a, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << algebra_to_json(a);
  if (!out) throw std::runtime_error("write failed: " + path);
}

FiniteAlgebra load_algebra(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return algebra_from_json(buf.str());
}

}  // namespace fialg
