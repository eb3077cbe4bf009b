#pragma once

// Exact permutation calculus on {0,...,N-1} and naive group computations
// (closure, orbits, stabilizers). Everything is sized for desk-scale degrees
// (<= 64) and group orders up to about 10^6.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ybe {

using Point = std::uint32_t;

inline constexpr std::size_t kDefaultCap = 1'000'000;

class Perm {
 public:
  Perm() = default;
  // Throws Error(NotPermutationRow) if `images` is not a bijection.
  explicit Perm(std::vector<Point> images);

  static Perm identity(std::size_t degree);
  // Skips the bijection check; for images already known to be a permutation.
  static Perm unchecked(std::vector<Point> images);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::vector<Point> const& images() const noexcept { return images_; }

  Perm inverse() const;
  bool is_identity() const noexcept;
  std::size_t order() const;
  // Lengths of all cycles (fixed points included), ascending.
  std::vector<std::size_t> cycle_lengths() const;

  friend bool operator==(Perm const&, Perm const&) = default;
  friend auto operator<=>(Perm const& a, Perm const& b) { return a.images_ <=> b.images_; }

 private:
  std::vector<Point> images_;
};

// (a * b)(x) = a(b(x)).
Perm operator*(Perm const& a, Perm const& b);
Perm power(Perm const& p, long long k);
bool commute(Perm const& a, Perm const& b);

struct PermHash {
  std::size_t operator()(Perm const& p) const noexcept;
};

// Breadth-first closure; result sorted lexicographically by image sequence.
// Throws Error(CapExceeded) once more than `cap` elements appear.
std::vector<Perm> group_closure(std::span<const Perm> gens, std::size_t degree,
                                std::size_t cap = kDefaultCap);

// Orbit of `point` under <gens>, ascending. Works without full closure.
std::vector<Point> orbit(std::span<const Perm> gens, Point point);

std::vector<Perm> point_stabilizer(std::span<const Perm> group_elements, Point point);

class PermGroup {
 public:
  // Materializes the full element list (sorted) on construction.
  PermGroup(std::size_t degree, std::vector<Perm> generators, std::size_t cap = kDefaultCap);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  std::vector<Perm> const& generators() const noexcept { return generators_; }
  std::vector<Perm> const& elements() const noexcept { return elements_; }
  bool contains(Perm const& p) const;

 private:
  std::size_t degree_;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
};

struct ActionPredicates {
  bool is_transitive = false;
  bool is_regular = false;
  bool is_abelian = false;
  bool is_cyclic = false;
};

ActionPredicates action_predicates(PermGroup const& group);

// Element-set helpers over sorted element lists.
std::vector<Perm> intersect(std::span<const Perm> a, std::span<const Perm> b);
bool is_subset(std::span<const Perm> sub, std::span<const Perm> super);

}  // namespace ybe
