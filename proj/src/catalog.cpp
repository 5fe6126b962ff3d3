#include "fialg/catalog.hpp"

#include <algorithm>
#include <map>

#include "fialg/green.hpp"
#include "fialg/sn_family.hpp"

namespace fialg {

std::vector<std::vector<int>> monotone_maps(int m) {
  if (m < 1 || m > 10) throw std::invalid_argument("chain length must be between 1 and 10");
  std::vector<std::vector<int>> out;
  std::vector<int> cur(m, 0);
  while (true) {
    out.push_back(cur);
    int i = m - 1;
    while (i >= 0 && cur[i] == m - 1) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < m; ++j) cur[j] = cur[i];
  }
  return out;
}

std::string monotone_label(const std::vector<int>& values) {
  std::string s;
  for (int v : values) s += static_cast<char>('0' + v);
  return s;
}

namespace {

// Builds the table algebra on a composition-and-pointwise-extremum closed
// set of monotone maps. mul(f, g) is x -> g(f(x)).
FiniteAlgebra algebra_from_monotone(const std::vector<std::vector<int>>& vals, bool min_addition,
                                    std::vector<std::string> labels,
                                    std::vector<element_id> generators) {
  const std::size_t count = vals.size();
  const std::size_t m = vals.front().size();
  std::map<std::vector<int>, element_id> index;
  for (std::size_t i = 0; i < count; ++i) index[vals[i]] = static_cast<element_id>(i);
  auto id_of = [&](const std::vector<int>& v) {
    auto it = index.find(v);
    if (it == index.end()) throw std::logic_error("map set not closed under the operations");
    return it->second;
  };
  std::vector<element_id> mul(count * count), add(count * count);
  std::vector<int> tmp(m);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      for (std::size_t x = 0; x < m; ++x) tmp[x] = vals[j][vals[i][x]];
      mul[i * count + j] = id_of(tmp);
      for (std::size_t x = 0; x < m; ++x)
        tmp[x] = min_addition ? std::min(vals[i][x], vals[j][x])
                              : std::max(vals[i][x], vals[j][x]);
      add[i * count + j] = id_of(tmp);
    }
  }
  if (labels.empty())
    for (const auto& v : vals) labels.push_back(monotone_label(v));
  return FiniteAlgebra(AlgebraKind::ai_semiring, std::move(labels), std::move(mul),
                       std::move(add), {}, std::move(generators));
}

}  // namespace

FiniteAlgebra end_chain(int m) { return algebra_from_monotone(monotone_maps(m), false, {}, {}); }

FiniteAlgebra end0_chain(int m) {
  std::vector<std::vector<int>> vals;
  for (auto& v : monotone_maps(m))
    if (v[0] == 0) vals.push_back(std::move(v));
  return algebra_from_monotone(vals, false, {}, {});
}

FiniteAlgebra end_chain_min(int m) {
  return algebra_from_monotone(monotone_maps(m), true, {}, {});
}

FiniteAlgebra a21() {
  std::vector<std::vector<int>> vals;
  for (auto& v : monotone_maps(3))
    if (v[2] == 2) vals.push_back(std::move(v));
  // vals is lex sorted: e=(0,0,2), 1=(0,1,2), ae=(0,2,2), ea=(1,1,2),
  // a=(1,2,2), 0=(2,2,2).
  std::vector<std::string> labels = {"e", "1", "ae", "ea", "a", "0"};
  return algebra_from_monotone(vals, false, std::move(labels), {0, 1, 4});
}

FiniteAlgebra brandt_monoid() {
  MapClosure mc = closure_from_maps({PartialInjection::identity(2),
                                     PartialInjection::from_pairs(2, {{0, 1}}),
                                     PartialInjection::from_pairs(2, {{1, 0}})},
                                    /*with_inverses=*/true);
  if (mc.algebra.size() != 6) throw std::logic_error("unexpected closure size");
  const PartialInjection c = PartialInjection::from_pairs(2, {{0, 1}});
  const PartialInjection d = PartialInjection::from_pairs(2, {{1, 0}});
  std::vector<std::string> labels(6);
  labels[mc.id_of(PartialInjection::identity(2))] = "1";
  labels[mc.id_of(c)] = "c";
  labels[mc.id_of(d)] = "d";
  labels[mc.id_of(compose(c, d))] = "cd";
  labels[mc.id_of(compose(d, c))] = "dc";
  labels[mc.id_of(PartialInjection::empty(2))] = "0";
  return FiniteAlgebra(AlgebraKind::inverse_semigroup, std::move(labels),
                       mc.algebra.mul_table(), {}, mc.algebra.inv_table(),
                       mc.algebra.generators());
}

FiniteAlgebra b21() { return nat_addition(brandt_monoid()); }

LatticeCheck combined_lattice_check(int m) {
  const std::vector<std::vector<int>> vals = monotone_maps(m);
  const std::size_t count = vals.size();
  const std::size_t deg = vals.front().size();
  std::map<std::vector<int>, element_id> index;
  for (std::size_t i = 0; i < count; ++i) index[vals[i]] = static_cast<element_id>(i);
  std::vector<int> tmp(deg);
  auto binop = [&](std::size_t i, std::size_t j, int mode) {  // 0 max, 1 min, 2 compose
    for (std::size_t x = 0; x < deg; ++x)
      tmp[x] = mode == 0   ? std::max(vals[i][x], vals[j][x])
               : mode == 1 ? std::min(vals[i][x], vals[j][x])
                           : vals[j][vals[i][x]];
    return index.at(tmp);
  };
  auto join = [&](element_id i, element_id j) { return binop(i, j, 0); };
  auto meet = [&](element_id i, element_id j) { return binop(i, j, 1); };
  auto comp = [&](element_id i, element_id j) { return binop(i, j, 2); };

  LatticeCheck out;
  auto fail = [&](const std::string& msg) {
    if (out.detail.empty()) out.detail = msg;
    return out;
  };
  for (element_id i = 0; i < count; ++i) {
    if (join(i, i) != i) return fail("join not idempotent");
    if (meet(i, i) != i) return fail("meet not idempotent");
    for (element_id j = 0; j < count; ++j) {
      if (join(i, j) != join(j, i)) return fail("join not commutative");
      if (meet(i, j) != meet(j, i)) return fail("meet not commutative");
      if (meet(i, join(i, j)) != i) return fail("absorption meet-over-join fails");
      if (join(i, meet(i, j)) != i) return fail("absorption join-over-meet fails");
      for (element_id l = 0; l < count; ++l) {
        if (join(join(i, j), l) != join(i, join(j, l))) return fail("join not associative");
        if (meet(meet(i, j), l) != meet(i, meet(j, l))) return fail("meet not associative");
        if (meet(i, join(j, l)) != join(meet(i, j), meet(i, l)))
          return fail("meet does not distribute over join");
        if (join(i, meet(j, l)) != meet(join(i, j), join(i, l)))
          return fail("join does not distribute over meet");
      }
    }
  }
  out.lattice_laws = true;

  // phi(alpha) = r . alpha . r with r the order reversal of the chain.
  std::vector<element_id> phi(count);
  std::vector<char> hit(count, 0);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t x = 0; x < deg; ++x)
      tmp[x] = static_cast<int>(deg) - 1 - vals[i][deg - 1 - x];
    auto it = index.find(tmp);
    if (it == index.end()) return fail("reversal conjugate left the carrier");
    phi[i] = it->second;
    hit[it->second] = 1;
  }
  if (std::find(hit.begin(), hit.end(), 0) != hit.end())
    return fail("reversal conjugation is not a bijection");
  for (element_id i = 0; i < count; ++i)
    for (element_id j = 0; j < count; ++j) {
      if (phi[meet(i, j)] != join(phi[i], phi[j]))
        return fail("reversal does not carry min onto max");
      if (phi[comp(i, j)] != comp(phi[i], phi[j]))
        return fail("reversal does not respect composition");
    }
  out.reversal_isomorphism = true;
  return out;
}

FiniteAlgebra build_catalog(const std::string& name, std::size_t max_size) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : name) {
    if (ch == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  auto arg = [&](std::size_t i) {
    if (i >= parts.size() || parts[i].empty() ||
        parts[i].find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("catalog name needs a numeric argument: " + name);
    return std::stoi(parts[i]);
  };
  auto arity = [&](std::size_t want) {
    if (parts.size() != want) throw std::invalid_argument("malformed catalog name: " + name);
  };
  const std::string& head = parts[0];
  if (head == "end-chain") {
    arity(2);
    return end_chain(arg(1));
  }
  if (head == "end0-chain") {
    arity(2);
    return end0_chain(arg(1));
  }
  if (head == "a21") {
    arity(1);
    return a21();
  }
  if (head == "b21") {
    arity(1);
    return b21();
  }
  if (head == "brandt") {
    arity(1);
    return brandt_monoid();
  }
  if (head == "sn") {
    arity(2);
    return build_sn(arg(1), max_size).algebra;
  }
  if (head == "tn") {
    arity(3);
    SnFamily s = build_sn(arg(1), max_size);
    return build_tn(s, arg(2)).algebra;
  }
  throw std::invalid_argument(
      "unknown catalog name '" + name +
      "'; expected end-chain:M, end0-chain:M, a21, b21, brandt, sn:N, or tn:N:K");
}

}  // namespace fialg
