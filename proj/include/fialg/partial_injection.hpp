#ifndef FIALG_PARTIAL_INJECTION_HPP
#define FIALG_PARTIAL_INJECTION_HPP

#include <compare>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace fialg {

// A partial injective self-map of {0, ..., degree-1}, stored as one target per
// point with -1 marking "undefined". Composition is applied left to right:
// x under (f * g) is g(f(x)).
class PartialInjection {
 public:
  static constexpr int kUndefined = -1;

  // The empty map of the given degree.
  explicit PartialInjection(int degree);

  // Validates injectivity and target range.
  PartialInjection(int degree, std::vector<int> targets);

  static PartialInjection identity(int degree);
  static PartialInjection empty(int degree);
  // The identity restricted to `points` (each in range, duplicates rejected).
  static PartialInjection partial_identity(int degree, const std::vector<int>& points);
  static PartialInjection from_pairs(int degree,
                                     const std::vector<std::pair<int, int>>& mappings);

  int degree() const { return degree_; }
  bool defined_at(int x) const { return targets_[static_cast<std::size_t>(x)] != kUndefined; }
  int target(int x) const { return targets_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& targets() const { return targets_; }

  int rank() const;
  std::vector<int> domain() const;
  std::vector<int> image() const;

  PartialInjection inverse() const;

  bool operator==(const PartialInjection&) const = default;

  // Rendered as {a→b, c→d, …} sorted by source; the empty map renders as {}.
  std::string to_string() const;

 private:
  int degree_;
  std::vector<int> targets_;
};

// x under compose(f, g) is g(f(x)); degrees must agree.
PartialInjection compose(const PartialInjection& f, const PartialInjection& g);

// Canonical order used for deterministic element ids: degree, then rank
// descending, then the target sequence lexicographically.
bool canonical_less(const PartialInjection& a, const PartialInjection& b);

// operator< is the canonical order, so ordered containers enumerate
// canonically.
inline bool operator<(const PartialInjection& a, const PartialInjection& b) {
  return canonical_less(a, b);
}

std::ostream& operator<<(std::ostream& os, const PartialInjection& f);

}  // namespace fialg

#endif  // FIALG_PARTIAL_INJECTION_HPP
