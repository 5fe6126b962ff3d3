#include "fialg/green.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "fialg/util.hpp"

namespace fialg {

namespace {

// Iterative Tarjan over x -> step(x, s) for all s; SCC ids then renumbered by
// least member so the output is independent of traversal details.
template <typename Step>
std::vector<int> scc_classes(std::size_t n, Step step) {
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<char> on_stack(n, 0);
  std::vector<element_id> stack;
  int next_index = 0, next_comp = 0;

  struct Frame {
    element_id v;
    element_id s;  // next alphabet letter to try
  };
  std::vector<Frame> call;

  for (element_id root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    call.push_back({root, 0});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.s < n) {
        element_id w = step(f.v, f.s++);
        if (index[w] < 0) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        element_id v = f.v;
        call.pop_back();
        if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
        if (low[v] == index[v]) {
          while (true) {
            element_id w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            comp[w] = next_comp;
            if (w == v) break;
          }
          ++next_comp;
        }
      }
    }
  }

  // Renumber by least member.
  std::vector<int> first(static_cast<std::size_t>(next_comp), -1);
  int fresh = 0;
  std::vector<int> out(n);
  for (std::size_t x = 0; x < n; ++x) {
    int c = comp[x];
    if (first[static_cast<std::size_t>(c)] < 0) first[static_cast<std::size_t>(c)] = fresh++;
    out[x] = first[static_cast<std::size_t>(c)];
  }
  return out;
}

std::vector<std::vector<element_id>> collect_classes(const std::vector<int>& cls) {
  int count = 0;
  for (int c : cls) count = std::max(count, c + 1);
  std::vector<std::vector<element_id>> out(static_cast<std::size_t>(count));
  for (std::size_t x = 0; x < cls.size(); ++x)
    out[static_cast<std::size_t>(cls[x])].push_back(static_cast<element_id>(x));
  return out;
}

}  // namespace

std::vector<element_id> GreenStructure::d_idempotents(int d) const {
  std::vector<element_id> out;
  for (element_id e : idempotents)
    if (d_class[e] == d) out.push_back(e);
  return out;
}

bool idempotent_leq(const FiniteAlgebra& a, element_id e, element_id f) {
  return a.mul(e, f) == e && a.mul(f, e) == e;
}

GreenStructure green(const FiniteAlgebra& a) {
  const std::size_t n = a.size();
  GreenStructure g;
  g.r_class = scc_classes(n, [&a](element_id x, element_id s) { return a.mul(x, s); });
  g.l_class = scc_classes(n, [&a](element_id x, element_id s) { return a.mul(s, x); });
  g.r_classes = collect_classes(g.r_class);
  g.l_classes = collect_classes(g.l_class);

  // H: intersection of the two partitions, classes numbered by least member.
  g.h_class.assign(n, -1);
  {
    std::map<std::pair<int, int>, int> seen;
    int fresh = 0;
    for (std::size_t x = 0; x < n; ++x) {
      auto key = std::make_pair(g.r_class[x], g.l_class[x]);
      auto [it, inserted] = seen.emplace(key, fresh);
      if (inserted) ++fresh;
      g.h_class[x] = it->second;
    }
    // Renumber by least member for determinism.
    std::vector<int> first(static_cast<std::size_t>(fresh), -1);
    int renum = 0;
    for (std::size_t x = 0; x < n; ++x) {
      int c = g.h_class[x];
      if (first[static_cast<std::size_t>(c)] < 0) first[static_cast<std::size_t>(c)] = renum++;
      g.h_class[x] = first[static_cast<std::size_t>(c)];
    }
  }
  g.h_classes = collect_classes(g.h_class);

  // D: transitive closure of R union L via union-find.
  {
    UnionFind uf(n);
    for (const auto& cls : g.r_classes)
      for (std::size_t i = 1; i < cls.size(); ++i) uf.unite(cls[0], cls[i]);
    for (const auto& cls : g.l_classes)
      for (std::size_t i = 1; i < cls.size(); ++i) uf.unite(cls[0], cls[i]);
    g.d_class = uf.canonical_classes();
  }
  g.d_classes = collect_classes(g.d_class);

  for (element_id x = 0; x < n; ++x)
    if (a.mul(x, x) == x) g.idempotents.push_back(x);
  for (element_id e : g.idempotents)
    for (element_id f : g.idempotents)
      if (e != f && idempotent_leq(a, e, f)) g.idempotent_order.emplace_back(e, f);

  const int dn = g.d_count();
  g.d_leq.assign(static_cast<std::size_t>(dn), std::vector<char>(static_cast<std::size_t>(dn), 0));
  for (int d = 0; d < dn; ++d) g.d_leq[d][d] = 1;
  for (element_id e : g.idempotents)
    for (element_id f : g.idempotents)
      if (idempotent_leq(a, e, f)) g.d_leq[g.d_class[e]][g.d_class[f]] = 1;
  return g;
}

bool is_combinatorial(const GreenStructure& g) {
  for (const auto& h : g.h_classes)
    if (h.size() != 1) return false;
  return true;
}

bool is_combinatorial(const FiniteAlgebra& a) { return is_combinatorial(green(a)); }

bool natural_leq(const FiniteAlgebra& a, element_id s, element_id t) {
  if (!a.has_inv()) throw std::invalid_argument("natural order needs an inv table");
  return a.mul(a.mul(s, a.inv(s)), t) == s;
}

int idempotent_power_exponent(const FiniteAlgebra& a) {
  const element_id n = static_cast<element_id>(a.size());
  int p = 1;
  for (element_id x = 0; x < n; ++x) {
    // Walk x, x^2, ... until the power stabilizes or provably cycles.
    element_id pow = x;
    int t = 1;
    bool stabilized = false;
    for (std::size_t steps = 0; steps <= a.size() + 1; ++steps) {
      element_id next = a.mul(pow, x);
      if (next == pow) {
        stabilized = true;
        break;
      }
      pow = next;
      ++t;
    }
    if (!stabilized) return -1;
    p = std::max(p, t);
  }
  return p;
}

FiniteAlgebra nat_addition(const FiniteAlgebra& a) {
  if (!a.has_inv()) throw std::invalid_argument("nat_addition needs an inverse semigroup");
  const int p = idempotent_power_exponent(a);
  if (p < 0)
    throw std::invalid_argument("no exponent p with x^p = x^(p+1); semigroup is not aperiodic");
  const element_id n = static_cast<element_id>(a.size());
  std::vector<element_id> add(static_cast<std::size_t>(n) * n);
  for (element_id s = 0; s < n; ++s)
    for (element_id t = 0; t < n; ++t) {
      element_id st = a.mul(s, a.inv(t));
      element_id power = st;
      for (int i = 1; i < p; ++i) power = a.mul(power, st);
      add[static_cast<std::size_t>(s) * n + t] = a.mul(power, s);
    }
  FiniteAlgebra out(AlgebraKind::ai_semiring, a.labels(), a.mul_table(), std::move(add),
                    a.inv_table(), a.generators());
  VerifyResult vr = verify_ai_semiring(out);
  if (!vr.ok())
    throw std::logic_error("nat_addition produced a non-semiring: " + vr.describe(out));
  // s + t must be the infimum of {s, t} for the natural order.
  for (element_id s = 0; s < n; ++s)
    for (element_id t = 0; t < n; ++t) {
      element_id m = out.add(s, t);
      if (!natural_leq(out, m, s) || !natural_leq(out, m, t))
        throw std::logic_error("nat_addition: s+t is not a lower bound");
    }
  for (element_id u = 0; u < n; ++u)
    for (element_id s = 0; s < n; ++s) {
      if (!natural_leq(out, u, s)) continue;
      for (element_id t = 0; t < n; ++t)
        if (natural_leq(out, u, t) && !natural_leq(out, u, out.add(s, t)))
          throw std::logic_error("nat_addition: s+t is not the greatest lower bound");
    }
  return out;
}

std::string render_green_report(const FiniteAlgebra& a, const GreenStructure& g) {
  std::ostringstream os;
  os << "elements: " << a.size() << ", D-classes: " << g.d_count()
     << ", combinatorial: " << (is_combinatorial(g) ? "yes" : "no") << "\n";
  for (int d = 0; d < g.d_count(); ++d) {
    const auto& cls = g.d_classes[static_cast<std::size_t>(d)];
    auto idem = g.d_idempotents(d);
    os << "D" << d << ": size " << cls.size() << ", idempotents " << idem.size() << "\n";
    os << "  elements:";
    for (element_id x : cls) os << " " << a.label(x);
    os << "\n";
  }
  os << "order (strictly below):\n";
  for (int y = 0; y < g.d_count(); ++y)
    for (int x = 0; x < g.d_count(); ++x)
      if (y != x && g.d_leq[y][x]) os << "  D" << y << " < D" << x << "\n";
  return os.str();
}

std::string green_consistency_error(const FiniteAlgebra& a, const GreenStructure& g) {
  const std::size_t n = a.size();
  auto partition_ok = [n](const std::vector<int>& cls,
                          const std::vector<std::vector<element_id>>& classes) {
    if (cls.size() != n) return false;
    std::size_t total = 0;
    for (std::size_t c = 0; c < classes.size(); ++c) {
      total += classes[c].size();
      for (element_id x : classes[c])
        if (cls[x] != static_cast<int>(c)) return false;
    }
    return total == n;
  };
  if (!partition_ok(g.r_class, g.r_classes)) return "R partition inconsistent";
  if (!partition_ok(g.l_class, g.l_classes)) return "L partition inconsistent";
  if (!partition_ok(g.h_class, g.h_classes)) return "H partition inconsistent";
  if (!partition_ok(g.d_class, g.d_classes)) return "D partition inconsistent";
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      bool same_h = g.h_class[x] == g.h_class[y];
      bool meet = g.r_class[x] == g.r_class[y] && g.l_class[x] == g.l_class[y];
      if (same_h != meet) return "H is not R meet L";
      if ((g.r_class[x] == g.r_class[y] || g.l_class[x] == g.l_class[y]) &&
          g.d_class[x] != g.d_class[y])
        return "D does not contain R union L";
    }
  const int dn = g.d_count();
  for (int x = 0; x < dn; ++x) {
    if (!g.d_leq[x][x]) return "D order not reflexive";
    for (int y = 0; y < dn; ++y) {
      if (x != y && g.d_leq[x][y] && g.d_leq[y][x]) return "D order not antisymmetric";
      for (int z = 0; z < dn; ++z)
        if (g.d_leq[x][y] && g.d_leq[y][z] && !g.d_leq[x][z]) return "D order not transitive";
    }
  }
  for (element_id e : g.idempotents)
    if (a.mul(e, e) != e) return "non-idempotent listed";
  for (auto [e, f] : g.idempotent_order) {
    if (!idempotent_leq(a, e, f) || e == f) return "idempotent order pair wrong";
    if (idempotent_leq(a, f, e)) return "idempotent order not antisymmetric";
  }
  return "";
}

}  // namespace fialg
