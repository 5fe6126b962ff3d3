#include "fialg/partial_injection.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace fialg {

namespace {

void check_degree(int degree) {
  if (degree < 0) throw std::invalid_argument("partial injection degree must be >= 0");
}

}  // namespace

PartialInjection::PartialInjection(int degree)
    : degree_(degree), targets_(static_cast<std::size_t>(degree), kUndefined) {
  check_degree(degree);
}

PartialInjection::PartialInjection(int degree, std::vector<int> targets)
    : degree_(degree), targets_(std::move(targets)) {
  check_degree(degree);
  if (targets_.size() != static_cast<std::size_t>(degree))
    throw std::invalid_argument("target sequence length must equal the degree");
  std::vector<char> seen(static_cast<std::size_t>(degree), 0);
  for (int t : targets_) {
    if (t == kUndefined) continue;
    if (t < 0 || t >= degree) throw std::invalid_argument("target out of range");
    if (seen[static_cast<std::size_t>(t)]) throw std::invalid_argument("targets must be injective");
    seen[static_cast<std::size_t>(t)] = 1;
  }
}

PartialInjection PartialInjection::identity(int degree) {
  check_degree(degree);
  std::vector<int> t(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) t[static_cast<std::size_t>(i)] = i;
  return PartialInjection(degree, std::move(t));
}

PartialInjection PartialInjection::empty(int degree) { return PartialInjection(degree); }

PartialInjection PartialInjection::partial_identity(int degree, const std::vector<int>& points) {
  check_degree(degree);
  PartialInjection f(degree);
  for (int p : points) {
    if (p < 0 || p >= degree) throw std::invalid_argument("point out of range");
    if (f.targets_[static_cast<std::size_t>(p)] != kUndefined)
      throw std::invalid_argument("duplicate point");
    f.targets_[static_cast<std::size_t>(p)] = p;
  }
  return f;
}

PartialInjection PartialInjection::from_pairs(int degree,
                                              const std::vector<std::pair<int, int>>& mappings) {
  check_degree(degree);
  std::vector<int> t(static_cast<std::size_t>(degree), kUndefined);
  for (auto [x, y] : mappings) {
    if (x < 0 || x >= degree || y < 0 || y >= degree)
      throw std::invalid_argument("mapping out of range");
    if (t[static_cast<std::size_t>(x)] != kUndefined)
      throw std::invalid_argument("duplicate source point");
    t[static_cast<std::size_t>(x)] = y;
  }
  return PartialInjection(degree, std::move(t));
}

int PartialInjection::rank() const {
  int r = 0;
  for (int t : targets_)
    if (t != kUndefined) ++r;
  return r;
}

std::vector<int> PartialInjection::domain() const {
  std::vector<int> d;
  for (int x = 0; x < degree_; ++x)
    if (defined_at(x)) d.push_back(x);
  return d;
}

std::vector<int> PartialInjection::image() const {
  std::vector<int> im;
  for (int t : targets_)
    if (t != kUndefined) im.push_back(t);
  std::sort(im.begin(), im.end());
  return im;
}

PartialInjection PartialInjection::inverse() const {
  PartialInjection g(degree_);
  for (int x = 0; x < degree_; ++x) {
    int t = target(x);
    if (t != kUndefined) g.targets_[static_cast<std::size_t>(t)] = x;
  }
  return g;
}

std::string PartialInjection::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int x = 0; x < degree_; ++x) {
    if (!defined_at(x)) continue;
    if (!first) os << ", ";
    first = false;
    os << x << "→" << target(x);
  }
  os << '}';
  return os.str();
}

PartialInjection compose(const PartialInjection& f, const PartialInjection& g) {
  if (f.degree() != g.degree())
    throw std::invalid_argument("cannot compose partial injections of different degrees");
  PartialInjection h(f.degree());
  std::vector<int> t(static_cast<std::size_t>(f.degree()), PartialInjection::kUndefined);
  for (int x = 0; x < f.degree(); ++x) {
    int y = f.target(x);
    if (y == PartialInjection::kUndefined) continue;
    t[static_cast<std::size_t>(x)] = g.target(y);
  }
  return PartialInjection(f.degree(), std::move(t));
}

bool canonical_less(const PartialInjection& a, const PartialInjection& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  int ra = a.rank(), rb = b.rank();
  if (ra != rb) return ra > rb;
  return a.targets() < b.targets();
}

std::ostream& operator<<(std::ostream& os, const PartialInjection& f) {
  return os << f.to_string();
}

}  // namespace fialg
