#include "fialg/sn_family.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace fialg {

std::vector<PartialInjection> sn_generators(int n) {
  if (n < 2) throw std::invalid_argument("the family needs n >= 2");
  const int deg = 3 * n + 3;
  std::vector<PartialInjection> gens;
  gens.push_back(PartialInjection::from_pairs(deg, {{n, 2 * n + 1}, {n + 1, 2 * n + 2}}));
  for (int i = 1; i <= n; ++i)
    gens.push_back(PartialInjection::from_pairs(
        deg, {{i - 1, i}, {n + 1 + i, n + i}, {2 * n + 1 + i, 2 * n + 2 + i}}));
  return gens;
}

element_id SnFamily::id_of(const PartialInjection& p) const {
  auto it = std::lower_bound(maps.begin(), maps.end(), p, canonical_less);
  if (it == maps.end() || !(*it == p))
    throw std::invalid_argument("map is not an element of the family");
  return static_cast<element_id>(it - maps.begin());
}

element_id SnFamily::chi_id(int i) const {
  if (i < 0 || i > n) throw std::invalid_argument("generator index out of range");
  return id_of(sn_generators(n)[static_cast<std::size_t>(i)]);
}

element_id SnFamily::eta_id(int l, int r) const {
  return id_of(PartialInjection::from_pairs(degree(), {{l, r}}));
}

element_id SnFamily::zeta_id(int i, int j) const {
  if (i < 0 || i > n || j < 0 || j > n) throw std::invalid_argument("zeta index out of range");
  return id_of(
      PartialInjection::from_pairs(degree(), {{i, j}, {2 * n + 2 + i, 2 * n + 2 + j}}));
}

namespace {

struct Classified {
  std::vector<int> b_class;
  int c = -1, e = -1, d = -1, zero = -1;
};

Classified classify(int n, const std::vector<PartialInjection>& maps, const GreenStructure& gs,
                    int removed) {
  Classified out;
  out.b_class.assign(static_cast<std::size_t>(n) + 1, -1);
  const std::vector<PartialInjection> gens = sn_generators(n);
  auto contains = [&](int cls, const PartialInjection& p) {
    for (element_id x : gs.d_classes[static_cast<std::size_t>(cls)])
      if (maps[x] == p) return true;
    return false;
  };
  auto assign = [](int& slot, int cls) {
    if (slot != -1) throw std::logic_error("two D-classes claim the same role");
    slot = cls;
  };
  for (int cls = 0; cls < gs.d_count(); ++cls) {
    const PartialInjection& rep = maps[gs.d_classes[static_cast<std::size_t>(cls)][0]];
    switch (rep.rank()) {
      case 0: assign(out.zero, cls); break;
      case 1: assign(out.d, cls); break;
      case 2:
        if (contains(cls, gens[0]))
          assign(out.e, cls);
        else
          assign(out.c, cls);
        break;
      case 3: {
        int hit = -1;
        for (int i = 1; i <= n; ++i)
          if (contains(cls, gens[static_cast<std::size_t>(i)])) hit = i;
        if (hit < 0) throw std::logic_error("rank-3 D-class without a generator");
        assign(out.b_class[static_cast<std::size_t>(hit)], cls);
        break;
      }
      default: throw std::logic_error("unexpected element rank in the family");
    }
  }
  if (out.c < 0 || out.e < 0 || out.d < 0 || out.zero < 0)
    throw std::logic_error("a named D-class is missing");
  for (int i = 1; i <= n; ++i) {
    bool want = i != removed;
    if ((out.b_class[static_cast<std::size_t>(i)] >= 0) != want)
      throw std::logic_error("B-class presence does not match the construction");
  }
  return out;
}

}  // namespace

SnFamily build_sn(int n, std::size_t max_size) {
  std::vector<PartialInjection> gens = sn_generators(n);
  MapClosure mc = closure_from_maps(gens, /*with_inverses=*/true, max_size);
  const std::size_t deg = static_cast<std::size_t>(3 * n + 3);
  const std::size_t expect =
      4u * static_cast<std::size_t>(n) + static_cast<std::size_t>(n + 1) * (n + 1) + deg * deg + 4 + 1;
  if (mc.algebra.size() != expect) throw std::logic_error("unexpected family size");
  GreenStructure gs = green(mc.algebra);
  Classified cls = classify(n, mc.elements, gs, -1);
  return SnFamily{n,
                  -1,
                  std::move(mc.algebra),
                  std::move(mc.elements),
                  std::move(gs),
                  std::move(cls.b_class),
                  cls.c,
                  cls.e,
                  cls.d,
                  cls.zero};
}

SnFamily build_tn(const SnFamily& s, int k) {
  if (s.removed != -1) throw std::invalid_argument("a class was already dropped");
  if (k < 1 || k > s.n) throw std::invalid_argument("the dropped index must be in 1..n");
  std::vector<element_id> seeds;
  for (element_id x = 0; x < s.algebra.size(); ++x)
    if (s.green.d_class[x] != s.b_class[static_cast<std::size_t>(k)]) seeds.push_back(x);
  Subalgebra sub = subalgebra_generated(s.algebra, seeds);
  if (sub.algebra.size() != s.algebra.size() - 4)
    throw std::logic_error("the complement of the dropped class is not closed");
  std::vector<PartialInjection> maps;
  maps.reserve(sub.inclusion.size());
  for (element_id x : sub.inclusion) maps.push_back(s.maps[x]);
  GreenStructure gs = green(sub.algebra);
  Classified cls = classify(s.n, maps, gs, k);
  return SnFamily{s.n,
                  k,
                  std::move(sub.algebra),
                  std::move(maps),
                  std::move(gs),
                  std::move(cls.b_class),
                  cls.c,
                  cls.e,
                  cls.d,
                  cls.zero};
}

namespace {

std::string render_check_failure(const std::string& what, const PartialInjection& got,
                                 const PartialInjection& want) {
  std::ostringstream os;
  os << what << ": got " << got << ", expected " << want;
  return os.str();
}

}  // namespace

std::string verify_formulas(const SnFamily& s) {
  if (s.removed != -1) return "generator formulas are checked on the full family";
  const int n = s.n;
  const int deg = s.degree();
  const std::vector<PartialInjection> gens = sn_generators(n);
  const PartialInjection& chi = gens[0];
  auto chi_i = [&](int i) -> const PartialInjection& {
    return gens[static_cast<std::size_t>(i)];
  };
  std::string err;
  auto check = [&](const std::string& what, const PartialInjection& f,
                   const PartialInjection& g, const PartialInjection& want) {
    if (!err.empty()) return;
    PartialInjection got = compose(f, g);
    if (!(got == want)) {
      err = render_check_failure(what + " (maps)", got, want);
      return;
    }
    if (s.algebra.mul(s.id_of(f), s.id_of(g)) != s.id_of(want))
      err = what + " (table) disagrees with the map composition";
  };
  const PartialInjection zero = PartialInjection::empty(deg);
  for (int i = 1; i <= n && err.empty(); ++i) {
    for (int j = 1; j <= n && err.empty(); ++j) {
      std::ostringstream tag;
      tag << "i=" << i << ",j=" << j;
      PartialInjection want_mul = zero;
      if (j == i + 1)
        want_mul = PartialInjection::from_pairs(
            deg, {{i - 1, i + 1}, {2 * n + 1 + i, 2 * n + 3 + i}});
      else if (j == i - 1)
        want_mul = PartialInjection::from_pairs(deg, {{n + 1 + i, n - 1 + i}});
      check("chi_i chi_j at " + tag.str(), chi_i(i), chi_i(j), want_mul);

      check("chi_i chi_j^-1 at " + tag.str(), chi_i(i), chi_i(j).inverse(),
            i == j ? PartialInjection::partial_identity(deg, {i - 1, n + 1 + i, 2 * n + 1 + i})
                   : zero);
      check("chi_i^-1 chi_j at " + tag.str(), chi_i(i).inverse(), chi_i(j),
            i == j ? PartialInjection::partial_identity(deg, {i, n + i, 2 * n + 2 + i}) : zero);
    }
  }
  for (int i = 1; i <= n && err.empty(); ++i) {
    std::string tag = "i=" + std::to_string(i);
    PartialInjection want_chi_chii = zero;
    if (i == 1)
      want_chi_chii = PartialInjection::from_pairs(deg, {{n + 1, 2 * n + 3}});
    else if (i == n)
      want_chi_chii = PartialInjection::from_pairs(deg, {{n, 2 * n}});
    check("chi chi_i at " + tag, chi, chi_i(i), want_chi_chii);

    PartialInjection want_chii_chi = zero;
    if (i == 1)
      want_chii_chi = PartialInjection::from_pairs(deg, {{n + 2, 2 * n + 2}});
    else if (i == n)
      want_chii_chi = PartialInjection::from_pairs(deg, {{n - 1, 2 * n + 1}});
    check("chi_i chi at " + tag, chi_i(i), chi, want_chii_chi);

    check("chi chi_j^-1 at " + tag, chi, chi_i(i).inverse(), zero);
    check("chi_j^-1 chi at " + tag, chi_i(i).inverse(), chi, zero);
  }
  if (err.empty()) {
    for (int i = 0; i <= n && err.empty(); ++i) {
      element_id x = s.chi_id(i);
      if (s.algebra.inv(x) != s.id_of(gens[static_cast<std::size_t>(i)].inverse()))
        err = "inversion table disagrees with map inversion at generator " + std::to_string(i);
    }
  }
  return err;
}

std::string dclass_shape_check(const SnFamily& s) {
  const int n = s.n;
  const int deg = s.degree();
  const std::vector<PartialInjection> gens = sn_generators(n);
  std::ostringstream err;

  auto sorted_ids = [&](std::vector<PartialInjection> ps) {
    std::vector<element_id> ids;
    ids.reserve(ps.size());
    for (const auto& p : ps) ids.push_back(s.id_of(p));
    std::sort(ids.begin(), ids.end());
    return ids;
  };
  auto class_members = [&](int cls) {
    std::vector<element_id> ids = s.green.d_classes[static_cast<std::size_t>(cls)];
    std::sort(ids.begin(), ids.end());
    return ids;
  };
  auto check_class = [&](const std::string& name, int cls,
                         const std::vector<PartialInjection>& expected, std::size_t idem) {
    if (err.tellp() != 0) return;
    if (class_members(cls) != sorted_ids(expected)) {
      err << "class " << name << " has unexpected members";
      return;
    }
    if (s.green.d_idempotents(cls).size() != idem)
      err << "class " << name << " has an unexpected idempotent count";
  };

  for (int i = 1; i <= n; ++i) {
    if (i == s.removed) continue;
    const PartialInjection& g = gens[static_cast<std::size_t>(i)];
    check_class("B" + std::to_string(i), s.b_class[static_cast<std::size_t>(i)],
                {g, g.inverse(), compose(g, g.inverse()), compose(g.inverse(), g)}, 2);
  }
  std::vector<PartialInjection> zetas;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      zetas.push_back(
          PartialInjection::from_pairs(deg, {{i, j}, {2 * n + 2 + i, 2 * n + 2 + j}}));
  check_class("C", s.c_class, zetas, static_cast<std::size_t>(n) + 1);

  const PartialInjection& chi = gens[0];
  check_class("E", s.e_class, {chi, chi.inverse(), compose(chi, chi.inverse()),
                               compose(chi.inverse(), chi)}, 2);

  std::vector<PartialInjection> etas;
  for (int l = 0; l < deg; ++l)
    for (int r = 0; r < deg; ++r) etas.push_back(PartialInjection::from_pairs(deg, {{l, r}}));
  check_class("D", s.d_class, etas, static_cast<std::size_t>(deg));

  check_class("zero", s.zero_class, {PartialInjection::empty(deg)}, 1);
  if (err.tellp() != 0) return err.str();

  // Expected class order: zero below everything, D below everything, C below
  // the B's, and no other strict relations (B's pairwise incomparable, E
  // incomparable with both C and the B's).
  const int count = s.green.d_count();
  std::vector<std::vector<char>> want(static_cast<std::size_t>(count),
                                      std::vector<char>(static_cast<std::size_t>(count), 0));
  auto mark = [&](int lo, int hi) {
    want[static_cast<std::size_t>(lo)][static_cast<std::size_t>(hi)] = 1;
  };
  for (int x = 0; x < count; ++x) {
    mark(x, x);
    mark(s.zero_class, x);
    mark(s.d_class, x);
  }
  for (int i = 1; i <= n; ++i)
    if (i != s.removed) mark(s.c_class, s.b_class[static_cast<std::size_t>(i)]);
  if (s.green.d_leq != want) return "the D-class order differs from the expected shape";
  return "";
}

Assignment phi_assignment(const SnFamily& s) {
  if (s.removed != -1)
    throw std::invalid_argument("the substitution needs every generator present");
  Assignment phi;
  for (int i = 1; i <= s.n; ++i) phi["x" + std::to_string(i)] = s.chi_id(i);
  element_id chi = s.chi_id(0);
  phi["x" + std::to_string(s.n + 1)] = chi;
  element_id chi_inv_chi = s.algebra.mul(s.algebra.inv(chi), chi);
  for (int i = s.n + 2; i <= 2 * s.n; ++i) phi["x" + std::to_string(i)] = chi_inv_chi;
  return phi;
}

std::string word_image_check(const SnFamily& s) {
  const auto [vn, vnp] = vn_pair(s.n);
  const Assignment phi = phi_assignment(s);
  auto fold = [&](const Word& w) {
    PartialInjection acc = s.maps[phi.at(w[0])];
    for (std::size_t i = 1; i < w.size(); ++i) acc = compose(acc, s.maps[phi.at(w[i])]);
    return acc;
  };
  const PartialInjection want_vn =
      PartialInjection::from_pairs(s.degree(), {{0, 3 * s.n + 2}});
  const PartialInjection want_vnp = PartialInjection::empty(s.degree());
  PartialInjection got = fold(vn);
  if (!(got == want_vn)) return render_check_failure("image of the first word", got, want_vn);
  got = fold(vnp);
  if (!(got == want_vnp)) return render_check_failure("image of the second word", got, want_vnp);
  if (eval_term(word_to_term(vn), phi, s.algebra) != s.id_of(want_vn))
    return "table evaluation of the first word disagrees with the map fold";
  if (eval_term(word_to_term(vnp), phi, s.algebra) != s.id_of(want_vnp))
    return "table evaluation of the second word disagrees with the map fold";
  return "";
}

namespace {

void add_range(std::vector<int>& v, int lo, int hi) {
  for (int x = lo; x <= hi; ++x) v.push_back(x);
}

EtaBlocks with_complement(int n, std::vector<int> first) {
  std::set<int> seen(first.begin(), first.end());
  EtaBlocks out;
  out.first = std::move(first);
  for (int x = 0; x <= 3 * n + 2; ++x)
    if (!seen.count(x)) out.second.push_back(x);
  return out;
}

}  // namespace

EtaBlocks expected_tau_k1(int n, int m, int k) {
  if (!(1 <= m && m + 1 < k && k <= n))
    throw std::invalid_argument("the K1 partition needs 1 <= m, m+1 < k <= n");
  std::vector<int> first;
  add_range(first, 0, m - 1);
  add_range(first, m + 1, k - 1);
  first.push_back(n + m + 1);
  add_range(first, n + k + 1, 2 * n + m + 1);
  add_range(first, 2 * n + m + 3, 2 * n + k + 1);
  return with_complement(n, std::move(first));
}

EtaBlocks expected_tau_k2(int n, int m, int k) {
  if (!(1 <= m && m < k && k <= n))
    throw std::invalid_argument("the K2 partition needs 1 <= m < k <= n");
  std::vector<int> first;
  add_range(first, 0, m - 1);
  add_range(first, n + m + 1, 2 * n + m + 1);
  return with_complement(n, std::move(first));
}

EtaBlocks expected_tau_k3(int n, int m, int k) {
  if (!(1 < m && m < k && k <= n))
    throw std::invalid_argument("the K3 partition needs 1 < m < k <= n");
  std::vector<int> first;
  add_range(first, 0, m - 2);
  add_range(first, m, k - 1);
  first.push_back(n + m);
  add_range(first, n + k + 1, 2 * n + m);
  add_range(first, 2 * n + m + 2, 2 * n + k + 1);
  return with_complement(n, std::move(first));
}

EtaBlocks expected_tau_k4(int n, int k) {
  if (!(1 <= k && k <= n)) throw std::invalid_argument("the K4 partition needs 1 <= k <= n");
  std::vector<int> first;
  add_range(first, 0, k - 1);
  add_range(first, n + 1, n + k);
  add_range(first, 2 * n + 2, 2 * n + k + 1);
  return with_complement(n, std::move(first));
}

EtaBlocks expected_tau_k8(int n, int k) {
  if (!(1 <= k && k <= n)) throw std::invalid_argument("the K8 partition needs 1 <= k <= n");
  std::vector<int> first;
  add_range(first, 0, n + k);
  return with_complement(n, std::move(first));
}

std::string separation_regressions(const SnFamily& t) {
  if (t.removed < 1) return "the separation regressions need a family with a dropped class";
  const int n = t.n;
  const int k = t.removed;

  auto bs_except = [&](std::initializer_list<int> excl) {
    Filter f;
    for (int i = 1; i <= n; ++i) {
      if (i == k) continue;
      bool drop = false;
      for (int e : excl) drop = drop || e == i;
      if (!drop) f.push_back(t.b_class[static_cast<std::size_t>(i)]);
    }
    std::sort(f.begin(), f.end());
    return f;
  };
  const Filter k4 = {t.e_class};
  const Filter k5 = bs_except({});
  Filter k8 = bs_except({});
  k8.push_back(t.c_class);
  std::sort(k8.begin(), k8.end());

  std::map<Filter, TauPartition> cache;
  auto part_of = [&](const Filter& f) -> const TauPartition& {
    auto it = cache.find(f);
    if (it == cache.end())
      it = cache.emplace(f, tau(t.algebra, t.green, f, t.d_class)).first;
    return it->second;
  };
  std::string err;
  auto note = [&](const std::string& msg) {
    if (err.empty()) err = msg;
  };

  auto check_partition = [&](const std::string& name, const Filter& f, const EtaBlocks& want) {
    if (!err.empty()) return;
    std::vector<std::vector<element_id>> expect;
    for (const std::vector<int>* block : {&want.first, &want.second}) {
      std::vector<element_id> ids;
      for (int idx : *block) ids.push_back(t.eta_idem(idx));
      std::sort(ids.begin(), ids.end());
      expect.push_back(std::move(ids));
    }
    std::sort(expect.begin(), expect.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    if (part_of(f).classes() != expect) note("partition mismatch for " + name);
  };
  auto check_separates = [&](const std::string& name, const Filter& f, int x_class, int s_idx,
                             int t_idx) {
    if (!err.empty()) return;
    std::ostringstream tag;
    tag << name << " on pair (" << s_idx << "," << t_idx << ")";
    if (std::binary_search(f.begin(), f.end(), x_class)) {
      note(tag.str() + ": filter contains the obligation class");
      return;
    }
    if (part_of(f).same(t.eta_idem(s_idx), t.eta_idem(t_idx)))
      note(tag.str() + ": filter does not separate");
  };
  // e <= g and not f <= g, with g the idempotent anchoring the obligation.
  auto check_anchor = [&](const std::string& name, element_id g, int s_idx, int t_idx) {
    if (!err.empty()) return;
    if (!idempotent_leq(t.algebra, t.eta_idem(s_idx), g) ||
        idempotent_leq(t.algebra, t.eta_idem(t_idx), g))
      note(name + ": pinned index ranges break the obligation preconditions");
  };

  // Filter partitions against the frozen expectations.
  for (int m = 1; m + 1 < k; ++m)
    check_partition("K1(m=" + std::to_string(m) + ")", bs_except({m, m + 1}),
                    expected_tau_k1(n, m, k));
  for (int m = 1; m < k; ++m)
    check_partition("K2(m=" + std::to_string(m) + ")", bs_except({m}),
                    expected_tau_k2(n, m, k));
  for (int m = 2; m < k; ++m)
    check_partition("K3(m=" + std::to_string(m) + ")", bs_except({m - 1, m}),
                    expected_tau_k3(n, m, k));
  check_partition("K4", k4, expected_tau_k4(n, k));
  check_partition("K8", k8, expected_tau_k8(n, k));

  // Obligations at a class B_m (m < k): s indexes an idempotent below
  // chi_m chi_m^-1 (then its mirror), t runs over the pinned ranges.
  for (int m = 1; m < k && err.empty(); ++m) {
    const int x = t.b_class[static_cast<std::size_t>(m)];
    const element_id chi_m = t.chi_id(m);
    const element_id dom_idem = t.algebra.mul(chi_m, t.algebra.inv(chi_m));
    const element_id im_idem = t.algebra.mul(t.algebra.inv(chi_m), chi_m);
    const std::vector<int> dom_triple = {m - 1, n + 1 + m, 2 * n + 1 + m};
    const std::vector<int> im_triple = {m, n + m, 2 * n + 2 + m};

    for (int s_idx : dom_triple) {
      auto run = [&](const std::string& sub, const Filter& f, const std::vector<int>& ts) {
        for (int t_idx : ts) {
          check_anchor("case 1.1 " + sub, dom_idem, s_idx, t_idx);
          check_separates("case 1.1 " + sub, f, x, s_idx, t_idx);
        }
      };
      std::vector<int> ts;
      if (m + 1 < k) {
        ts.clear();
        add_range(ts, n + m + 2, n + k);
        run("K1", bs_except({m, m + 1}), ts);
      }
      ts.clear();
      add_range(ts, m, k - 1);
      add_range(ts, n + 1, n + m);
      add_range(ts, 2 * n + m + 2, 2 * n + k + 1);
      run("K2", bs_except({m}), ts);
      if (m > 1) {
        ts.clear();
        add_range(ts, 0, m - 2);
        add_range(ts, 2 * n + 2, 2 * n + m);
        run("K3", bs_except({m - 1, m}), ts);
      }
      ts.clear();
      add_range(ts, k, n);
      add_range(ts, n + k + 1, 2 * n + 1);
      add_range(ts, 2 * n + k + 2, 3 * n + 2);
      run("K4", k4, ts);
    }

    // Mirrored obligations (anchor on the image side): some filter among the
    // four above must separate each admissible pair.
    for (int s_idx : im_triple) {
      for (int t_idx = 0; t_idx <= 3 * n + 2 && err.empty(); ++t_idx) {
        if (std::find(im_triple.begin(), im_triple.end(), t_idx) != im_triple.end()) continue;
        check_anchor("case 1.2", im_idem, s_idx, t_idx);
        bool separated = false;
        std::vector<Filter> candidates = {bs_except({m}), k4};
        if (m + 1 < k) candidates.push_back(bs_except({m, m + 1}));
        if (m > 1) candidates.push_back(bs_except({m - 1, m}));
        for (const Filter& f : candidates) {
          if (std::binary_search(f.begin(), f.end(), x)) continue;
          if (!part_of(f).same(t.eta_idem(s_idx), t.eta_idem(t_idx))) {
            separated = true;
            break;
          }
        }
        if (!separated)
          note("case 1.2: no stated filter separates (" + std::to_string(s_idx) + "," +
               std::to_string(t_idx) + ")");
      }
    }
  }

  // Obligations at the class C: within one zeta-anchored triple, then the
  // m = k branches.
  for (int m = 1; m <= n && err.empty(); ++m) {
    const Filter& f = m == k ? k4 : k5;
    const std::string name = "case 2 same-triple (m=" + std::to_string(m) + ")";
    const element_id anchor = t.zeta_id(m - 1, m - 1);
    for (auto [s_idx, t_idx] :
         {std::pair{m - 1, n + m + 1}, std::pair{2 * n + m + 1, n + m + 1}}) {
      check_anchor(name, anchor, s_idx, t_idx);
      check_separates(name, f, t.c_class, s_idx, t_idx);
    }
  }
  for (int s_idx : {k - 1, 2 * n + k + 1}) {
    const element_id anchor = t.zeta_id(k - 1, k - 1);
    auto run = [&](const std::string& sub, const Filter& f, const std::vector<int>& ts) {
      for (int t_idx : ts) {
        check_anchor("case 2 " + sub, anchor, s_idx, t_idx);
        check_separates("case 2 " + sub, f, t.c_class, s_idx, t_idx);
      }
    };
    std::vector<int> ts;
    add_range(ts, k, n + k);
    add_range(ts, 2 * n + k + 2, 3 * n + 2);
    run("K5", k5, ts);
    if (k < n) {
      // The B-only filter that drops B_{k+1} leaves these pairs glued; the
      // {E} filter is the one that separates them.
      ts.clear();
      add_range(ts, n + k + 2, 2 * n + 1);
      run("K4", k4, ts);
    }
    if (k > 1) {
      ts.clear();
      add_range(ts, 0, k - 2);
      add_range(ts, 2 * n + 2, 2 * n + k);
      run("K7", bs_except({k - 1}), ts);
    }
  }

  // Obligations inside the class D: the pairs at distance 2n+2.
  for (int j = 0; j <= n; ++j) {
    check_separates("case 3", k8, t.d_class, j, 2 * n + 2 + j);
    check_separates("case 3", k8, t.d_class, 2 * n + 2 + j, j);
  }

  // Obligations at the class E.
  {
    const element_id chi = t.chi_id(0);
    const element_id anchor = t.algebra.mul(chi, t.algebra.inv(chi));
    for (int s_idx : {n, n + 1}) {
      auto run = [&](const std::string& sub, const Filter& f, const std::vector<int>& ts) {
        for (int t_idx : ts) {
          check_anchor("case 4 " + sub, anchor, s_idx, t_idx);
          check_separates("case 4 " + sub, f, t.e_class, s_idx, t_idx);
        }
      };
      std::vector<int> ts;
      add_range(ts, 0, k - 1);
      add_range(ts, n + k + 1, 2 * n + k + 1);
      run("K5", k5, ts);
      run("K8", k8, {3 * n + 2});
      if (k > 1) {
        ts.clear();
        add_range(ts, n + 2, n + k);
        run("K9", bs_except({1}), ts);
      }
      if (k < n) {
        ts.clear();
        add_range(ts, k, n - 1);
        add_range(ts, 2 * n + k + 2, 3 * n + 1);
        run("K10", bs_except({n}), ts);
      }
    }
  }
  return err;
}

}  // namespace fialg
