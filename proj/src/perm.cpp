#include "ybe/perm.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_set>

#include "ybe/error.hpp"

namespace ybe {

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    Point v = images_[i];
    if (v >= images_.size() || seen[v]) {
      throw Error(ErrorCode::NotPermutationRow,
                  "image sequence is not a bijection at position " + std::to_string(i),
                  {static_cast<long long>(i)});
    }
    seen[v] = 1;
  }
}

Perm Perm::identity(std::size_t degree) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  Perm p;
  p.images_ = std::move(img);
  return p;
}

Perm Perm::unchecked(std::vector<Point> images) {
  Perm p;
  p.images_ = std::move(images);
  return p;
}

Perm Perm::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  Perm p;
  p.images_ = std::move(inv);
  return p;
}

bool Perm::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::vector<std::size_t> Perm::cycle_lengths() const {
  std::vector<std::size_t> lengths;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (Point j = static_cast<Point>(i); !seen[j]; j = images_[j]) {
      seen[j] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::size_t Perm::order() const {
  std::size_t result = 1;
  for (std::size_t len : cycle_lengths()) result = std::lcm(result, len);
  return result;
}

Perm operator*(Perm const& a, Perm const& b) {
  std::vector<Point> img(b.degree());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = a(b(static_cast<Point>(i)));
  return Perm::unchecked(std::move(img));
}

Perm power(Perm const& p, long long k) {
  Perm base = k < 0 ? p.inverse() : p;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
  Perm result = Perm::identity(p.degree());
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

bool commute(Perm const& a, Perm const& b) {
  for (std::size_t i = 0; i < a.degree(); ++i) {
    Point x = static_cast<Point>(i);
    if (a(b(x)) != b(a(x))) return false;
  }
  return true;
}

std::size_t PermHash::operator()(Perm const& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Point v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<Perm> group_closure(std::span<const Perm> gens, std::size_t degree, std::size_t cap) {
  for (auto const& g : gens) {
    if (g.degree() != degree)
      throw Error(ErrorCode::BadParams, "generator degree mismatch");
  }
  std::unordered_set<Perm, PermHash> seen;
  std::deque<Perm> queue;
  Perm id = Perm::identity(degree);
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    Perm g = std::move(queue.front());
    queue.pop_front();
    for (auto const& s : gens) {
      Perm h = s * g;
      if (seen.insert(h).second) {
        if (seen.size() > cap)
          throw Error(ErrorCode::CapExceeded,
                      "group closure exceeded cap " + std::to_string(cap));
        queue.push_back(std::move(h));
      }
    }
  }
  std::vector<Perm> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Point> orbit(std::span<const Perm> gens, Point point) {
  std::vector<Point> out{point};
  std::unordered_set<Point> seen{point};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (auto const& g : gens) {
      Point y = g(out[head]);
      if (seen.insert(y).second) out.push_back(y);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Perm> point_stabilizer(std::span<const Perm> group_elements, Point point) {
  std::vector<Perm> out;
  for (auto const& g : group_elements)
    if (g(point) == point) out.push_back(g);
  return out;
}

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators, std::size_t cap)
    : degree_(degree),
      generators_(std::move(generators)),
      elements_(group_closure(generators_, degree_, cap)) {}

bool PermGroup::contains(Perm const& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

ActionPredicates action_predicates(PermGroup const& group) {
  ActionPredicates out;
  auto const& gens = group.generators();
  if (group.degree() == 0) {
    out.is_transitive = out.is_regular = out.is_abelian = out.is_cyclic = true;
    return out;
  }
  out.is_transitive = orbit(gens, 0).size() == group.degree();
  out.is_regular = out.is_transitive && group.order() == group.degree();
  out.is_abelian = true;
  for (std::size_t i = 0; i < gens.size() && out.is_abelian; ++i)
    for (std::size_t j = i + 1; j < gens.size() && out.is_abelian; ++j)
      out.is_abelian = commute(gens[i], gens[j]);
  if (out.is_abelian) {
    for (auto const& g : group.elements()) {
      if (g.order() == group.order()) {
        out.is_cyclic = true;
        break;
      }
    }
  }
  return out;
}

std::vector<Perm> intersect(std::span<const Perm> a, std::span<const Perm> b) {
  std::vector<Perm> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_subset(std::span<const Perm> sub, std::span<const Perm> super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

}  // namespace ybe
