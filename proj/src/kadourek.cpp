#include "fialg/kadourek.hpp"

#include <algorithm>
#include <stdexcept>

#include "fialg/util.hpp"

namespace fialg {

std::vector<int> up_set(const GreenStructure& g, int y) {
  if (y < 0 || y >= g.d_count()) throw std::invalid_argument("no such D-class");
  std::vector<int> out;
  for (int x = 0; x < g.d_count(); ++x)
    if (g.d_leq[y][x]) out.push_back(x);
  return out;
}

namespace {

// The unique a with a a^-1 = g and a^-1 a = h; needs trivial H-classes.
element_id connecting_element(const FiniteAlgebra& a, const GreenStructure& gs, element_id g,
                              element_id h) {
  std::optional<element_id> found;
  for (element_id s : gs.d_classes[gs.d_class[g]]) {
    if (a.mul(s, a.inv(s)) == g && a.mul(a.inv(s), s) == h) {
      if (found) throw std::logic_error("connecting element not unique: H-classes nontrivial");
      found = s;
    }
  }
  if (!found) throw std::logic_error("no connecting element inside a D-class");
  return *found;
}

bool is_idempotent(const FiniteAlgebra& a, element_id e) { return a.mul(e, e) == e; }

void insert_full_relation(IdempotentRelation& rel, const std::vector<element_id>& set) {
  for (element_id u : set)
    for (element_id v : set) rel.insert({u, v});
}

void check_symmetric_on(const IdempotentRelation& rel, const char* what) {
  for (const auto& [u, v] : rel)
    if (!rel.count({v, u})) throw std::logic_error(std::string(what) + " relation not symmetric");
}

}  // namespace

IdempotentRelation pi_relation(const FiniteAlgebra& a, const GreenStructure& g, int x, int y) {
  if (!a.has_inv()) throw std::invalid_argument("pi needs an inversion table");
  if (!g.d_leq[y][x]) throw std::invalid_argument("pi needs Y <= X");
  const std::vector<element_id> ex = g.d_idempotents(x);
  const std::vector<element_id> ey = g.d_idempotents(y);
  IdempotentRelation rel;
  for (element_id anchor_g : ex) {
    for (element_id e : ey) {
      if (!idempotent_leq(a, e, anchor_g)) continue;
      std::vector<element_id> image;
      for (element_id h : ex) {
        element_id conn = connecting_element(a, g, anchor_g, h);
        element_id f = a.mul(a.mul(a.inv(conn), e), conn);
        if (!is_idempotent(a, f) || g.d_class[f] != y)
          throw std::logic_error("projection left E(Y)");
        if (!idempotent_leq(a, f, h)) throw std::logic_error("projection not below its target");
        image.push_back(f);
      }
      insert_full_relation(rel, image);
    }
  }
  check_symmetric_on(rel, "pi");
  return rel;
}

IdempotentRelation rho_relation(const FiniteAlgebra& a, const GreenStructure& g, int x, int y,
                                RhoReading reading) {
  if (!g.d_leq[y][x]) throw std::invalid_argument("rho needs Y <= X");
  const std::vector<element_id> ex = g.d_idempotents(x);
  const std::vector<element_id> ey = g.d_idempotents(y);
  const std::vector<element_id>& pair_pool = reading == RhoReading::prose ? ey : ex;
  const std::vector<element_id>& bound_pool = reading == RhoReading::prose ? ex : ey;
  IdempotentRelation rel;
  for (element_id bound : bound_pool) {
    std::vector<element_id> below;
    for (element_id f : pair_pool)
      if (idempotent_leq(a, f, bound)) below.push_back(f);
    insert_full_relation(rel, below);
  }
  check_symmetric_on(rel, "rho");
  return rel;
}

std::vector<Filter> enumerate_filters(const GreenStructure& g, int y) {
  const std::vector<int> ground = up_set(g, y);
  if (ground.size() > 25) throw std::invalid_argument("filter space too large");
  std::vector<Filter> out;
  for (std::uint32_t mask = 0; mask < (1u << ground.size()); ++mask) {
    Filter k;
    for (std::size_t i = 0; i < ground.size(); ++i)
      if (mask & (1u << i)) k.push_back(ground[i]);
    bool upward_closed = true;
    for (int member : k) {
      for (std::size_t i = 0; i < ground.size() && upward_closed; ++i)
        if (g.d_leq[member][ground[i]] &&
            !std::binary_search(k.begin(), k.end(), ground[i]))
          upward_closed = false;
      if (!upward_closed) break;
    }
    if (upward_closed) out.push_back(std::move(k));
  }
  std::sort(out.begin(), out.end(), [](const Filter& a, const Filter& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

TauPartition::TauPartition(std::vector<element_id> members, std::vector<int> class_of)
    : members_(std::move(members)), class_of_(std::move(class_of)) {
  if (members_.size() != class_of_.size())
    throw std::invalid_argument("partition shape mismatch");
}

std::size_t TauPartition::index_of(element_id e) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), e);
  if (it == members_.end() || *it != e)
    throw std::invalid_argument("element is not an idempotent of this class");
  return static_cast<std::size_t>(it - members_.begin());
}

bool TauPartition::same(element_id e, element_id f) const {
  return class_of_[index_of(e)] == class_of_[index_of(f)];
}

std::vector<std::vector<element_id>> TauPartition::classes() const {
  std::vector<std::vector<element_id>> blocks;
  std::vector<int> block_of_class(members_.size(), -1);
  for (std::size_t i = 0; i < members_.size(); ++i) {
    int c = class_of_[i];
    if (block_of_class[c] < 0) {
      block_of_class[c] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[block_of_class[c]].push_back(members_[i]);
  }
  return blocks;  // members_ ascending => blocks ordered by least member
}

TauPartition tau(const FiniteAlgebra& a, const GreenStructure& g, const Filter& k, int y,
                 RhoReading reading) {
  const std::vector<int> ground = up_set(g, y);
  for (int x : k)
    if (!std::binary_search(ground.begin(), ground.end(), x))
      throw std::invalid_argument("filter contains a class outside [Y)");
  const std::vector<element_id> ey = g.d_idempotents(y);
  UnionFind uf(ey.size());
  auto index_of = [&](element_id e) -> int {
    auto it = std::lower_bound(ey.begin(), ey.end(), e);
    if (it == ey.end() || *it != e) return -1;
    return static_cast<int>(it - ey.begin());
  };
  auto feed = [&](const IdempotentRelation& rel) {
    for (const auto& [u, v] : rel) {
      int iu = index_of(u), iv = index_of(v);
      if (iu < 0 || iv < 0) continue;  // display-reading pairs may fall outside E(Y)
      uf.unite(iu, iv);
    }
  };
  for (int x : ground) {
    if (std::binary_search(k.begin(), k.end(), x))
      feed(pi_relation(a, g, x, y));
    else
      feed(rho_relation(a, g, x, y, reading));
  }
  TauPartition part(ey, uf.canonical_classes());
  // Closure sanity: an equivalence, and pi/rho pairs inside E(Y) stay glued.
  for (element_id e : ey) {
    if (!part.same(e, e)) throw std::logic_error("tau not reflexive");
  }
  for (std::size_t i = 0; i < ey.size(); ++i)
    for (std::size_t j = i + 1; j < ey.size(); ++j)
      if (part.same(ey[i], ey[j]) != part.same(ey[j], ey[i]))
        throw std::logic_error("tau not symmetric");
  return part;
}

namespace {

std::optional<element_id> first_anchor(const FiniteAlgebra& a, const GreenStructure& g, int x,
                                       element_id e, element_id f) {
  for (element_id cand : g.d_idempotents(x))
    if (idempotent_leq(a, e, cand) && !idempotent_leq(a, f, cand)) return cand;
  return std::nullopt;
}

}  // namespace

StarResult star_condition(const FiniteAlgebra& a, RhoReading reading) {
  if (a.kind() != AlgebraKind::inverse_semigroup)
    throw std::invalid_argument("the separation condition is defined for inverse semigroups");
  GreenStructure gs = green(a);
  if (!is_combinatorial(gs)) throw std::logic_error("H-classes must be trivial");
  StarResult result;
  result.holds = true;
  for (int y = 0; y < gs.d_count(); ++y) {
    const std::vector<element_id> ey = gs.d_idempotents(y);
    if (ey.size() < 2) continue;
    const std::vector<Filter> filters = enumerate_filters(gs, y);
    std::vector<std::optional<TauPartition>> parts(filters.size());
    auto part_at = [&](std::size_t i) -> const TauPartition& {
      if (!parts[i]) parts[i] = tau(a, gs, filters[i], y, reading);
      return *parts[i];
    };
    for (int x : up_set(gs, y)) {
      for (element_id e : ey) {
        for (element_id f : ey) {
          if (e == f) continue;
          std::optional<element_id> anchor = first_anchor(a, gs, x, e, f);
          if (!anchor) continue;
          Obligation ob;
          ob.x_class = x;
          ob.y_class = y;
          ob.e = e;
          ob.f = f;
          ob.g = *anchor;
          for (std::size_t i = 0; i < filters.size(); ++i) {
            if (std::binary_search(filters[i].begin(), filters[i].end(), x)) continue;
            if (!part_at(i).same(e, f)) {
              ob.separator = filters[i];
              break;
            }
          }
          if (!ob.separator && !result.failure) {
            result.holds = false;
            result.failure = ob;
          }
          result.obligations.push_back(std::move(ob));
        }
      }
    }
  }
  return result;
}

B21MembershipResult in_var_b21(const FiniteAlgebra& a, RhoReading reading) {
  if (a.kind() != AlgebraKind::inverse_semigroup)
    throw std::invalid_argument("membership is defined for inverse semigroups");
  B21MembershipResult result;
  GreenStructure gs = green(a);
  for (const auto& h : gs.h_classes) {
    if (h.size() > 1) {
      result.member = false;
      result.obstruction = "nontrivial H-class";
      result.witness = h;
      return result;
    }
  }
  result.star = star_condition(a, reading);
  if (result.star->holds) {
    result.member = true;
  } else {
    result.member = false;
    result.obstruction = "no separating filter for an obligation";
    const Obligation& bad = *result.star->failure;
    result.witness = {bad.e, bad.f, bad.g};
  }
  return result;
}

}  // namespace fialg
