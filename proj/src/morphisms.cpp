#include "ybe/morphisms.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <string>

#include "ybe/error.hpp"

namespace ybe {

namespace {

constexpr Point kUnset = std::numeric_limits<Point>::max();
constexpr std::size_t kCongruenceCap = 100'000;

struct PartialMap {
  Mapping phi;
  Mapping inv;
  std::vector<Point> assigned;
};

PartialMap empty_map(std::size_t n) { return {Mapping(n, kUnset), Mapping(n, kUnset), {}}; }

class Propagator {
 public:
  Propagator(FinSolution const& a, FinSolution const& b) : a_(a), b_(b) {}

  // Assigns x -> y and closes under phi(sigma^e_u(v)) = sigma'^e_{phi u}(phi v).
  bool assign(PartialMap& m, Point x, Point y) const {
    std::vector<Point> queue;
    if (!set(m, x, y, queue)) return false;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Point u = queue[head];
      for (std::size_t k = 0; k < m.assigned.size(); ++k) {
        Point v = m.assigned[k];
        if (!close_pair(m, u, v, queue) || !close_pair(m, v, u, queue)) return false;
      }
    }
    return true;
  }

 private:
  bool set(PartialMap& m, Point x, Point y, std::vector<Point>& queue) const {
    if (m.phi[x] != kUnset) return m.phi[x] == y;
    if (m.inv[y] != kUnset) return false;
    m.phi[x] = y;
    m.inv[y] = x;
    m.assigned.push_back(x);
    queue.push_back(x);
    return true;
  }

  bool close_pair(PartialMap& m, Point u, Point v, std::vector<Point>& queue) const {
    Point pu = m.phi[u], pv = m.phi[v];
    return set(m, a_.sigma(u)(v), b_.sigma(pu)(pv), queue) &&
           set(m, a_.sigma_inv(u)(v), b_.sigma_inv(pu)(pv), queue);
  }

  FinSolution const& a_;
  FinSolution const& b_;
};

// Depth-first over the least unassigned point, images ascending.
bool backtrack(Propagator const& prop, PartialMap const& m, std::size_t n, bool collect_all,
               std::vector<Mapping>& found) {
  Point x = 0;
  while (x < n && m.phi[x] != kUnset) ++x;
  if (x == n) {
    found.push_back(m.phi);
    return !collect_all;
  }
  for (Point y = 0; y < n; ++y) {
    if (m.inv[y] != kUnset) continue;
    PartialMap next = m;
    if (!prop.assign(next, x, y)) continue;
    if (backtrack(prop, next, n, collect_all, found)) return true;
  }
  return false;
}

std::vector<Mapping> run_backtracking(FinSolution const& a, FinSolution const& b, bool collect_all) {
  std::vector<Mapping> found;
  if (a.size() != b.size()) return found;
  Propagator prop(a, b);
  std::vector<Mapping> raw;
  backtrack(prop, empty_map(a.size()), a.size(), collect_all, raw);
  for (auto& phi : raw)
    if (is_isomorphism(a, b, phi)) found.push_back(std::move(phi));
  return found;
}

bool fast_path_applies(FinSolution const& s) { return is_indecomposable(s) && is_mpl2_local(s); }

// nullopt when propagation from point 0 fails to reach every point.
std::optional<std::vector<Mapping>> run_fast(FinSolution const& a, FinSolution const& b, bool collect_all) {
  std::vector<Mapping> found;
  Propagator prop(a, b);
  for (Point e = 0; e < b.size(); ++e) {
    PartialMap m = empty_map(a.size());
    if (!prop.assign(m, 0, e)) continue;
    if (m.assigned.size() != a.size()) return std::nullopt;
    if (!is_isomorphism(a, b, m.phi)) continue;
    found.push_back(std::move(m.phi));
    if (!collect_all) break;
  }
  return found;
}

std::vector<Mapping> search(FinSolution const& a, FinSolution const& b, bool collect_all) {
  if (a.size() != b.size()) return {};
  if (a.size() == 0) return {Mapping{}};
  if (fast_path_applies(a) && fast_path_applies(b))
    if (auto r = run_fast(a, b, collect_all)) return *r;
  return run_backtracking(a, b, collect_all);
}

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), Point{0}); }
  Point find(Point x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(Point a, Point b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
  std::vector<Point> parent;
};

}  // namespace

bool is_isomorphism(FinSolution const& a, FinSolution const& b, Mapping const& phi) {
  std::size_t n = a.size();
  if (b.size() != n || phi.size() != n) return false;
  std::vector<char> hit(n, 0);
  for (Point v : phi) {
    if (v >= n || hit[v]) return false;
    hit[v] = 1;
  }
  for (Point x = 0; x < n; ++x)
    for (Point y = 0; y < n; ++y)
      if (phi[a.sigma(x)(y)] != b.sigma(phi[x])(phi[y])) return false;
  return true;
}

std::optional<Mapping> find_isomorphism(FinSolution const& a, FinSolution const& b) {
  auto r = search(a, b, false);
  if (r.empty()) return std::nullopt;
  return r.front();
}

std::optional<Mapping> find_isomorphism_backtracking(FinSolution const& a, FinSolution const& b) {
  if (a.size() != b.size()) return std::nullopt;
  if (a.size() == 0) return Mapping{};
  auto r = run_backtracking(a, b, false);
  if (r.empty()) return std::nullopt;
  return r.front();
}

std::vector<Mapping> automorphisms(FinSolution const& s) {
  auto r = search(s, s, true);
  std::sort(r.begin(), r.end());
  return r;
}

PermGroup automorphism_group(FinSolution const& s) {
  std::vector<Perm> gens;
  for (auto& phi : automorphisms(s)) gens.push_back(Perm::unchecked(std::move(phi)));
  std::erase_if(gens, [](Perm const& p) { return p.is_identity(); });
  return PermGroup(s.size(), std::move(gens));
}

bool is_congruence(FinSolution const& s, Partition const& p) {
  std::size_t n = s.size();
  if (p.size() != n) return false;
  for (Point x1 = 0; x1 < n; ++x1)
    for (Point x2 = 0; x2 < n; ++x2) {
      if (p[x1] != p[x2]) continue;
      for (Point y1 = 0; y1 < n; ++y1)
        for (Point y2 = 0; y2 < n; ++y2) {
          if (p[y1] != p[y2]) continue;
          if (p[s.sigma(x1)(y1)] != p[s.sigma(x2)(y2)]) return false;
          if (p[s.sigma_inv(x1)(y1)] != p[s.sigma_inv(x2)(y2)]) return false;
        }
    }
  return true;
}

Partition congruence_closure(FinSolution const& s, std::vector<std::pair<Point, Point>> const& pairs) {
  std::size_t n = s.size();
  UnionFind uf(n);
  std::vector<std::pair<Point, Point>> work(pairs.begin(), pairs.end());
  while (!work.empty()) {
    auto [u, v] = work.back();
    work.pop_back();
    if (!uf.unite(u, v)) continue;
    for (Point y = 0; y < n; ++y) {
      work.emplace_back(s.sigma(u)(y), s.sigma(v)(y));
      work.emplace_back(s.sigma_inv(u)(y), s.sigma_inv(v)(y));
      work.emplace_back(s.sigma(y)(u), s.sigma(y)(v));
      work.emplace_back(s.sigma_inv(y)(u), s.sigma_inv(y)(v));
    }
  }
  std::vector<Point> labels(n);
  for (Point x = 0; x < n; ++x) labels[x] = uf.find(x);
  return canonical_partition(labels);
}

std::vector<Partition> brute_congruences(FinSolution const& s, std::size_t max_size) {
  std::size_t n = s.size();
  if (n > max_size)
    throw Error(ErrorCode::TooLarge, "brute congruence search limited to " + std::to_string(max_size) + " points");
  std::vector<Point> id(n);
  std::iota(id.begin(), id.end(), Point{0});
  std::set<Partition> all{canonical_partition(id)};
  std::vector<Partition> principal;
  for (Point u = 0; u < n; ++u)
    for (Point v = u + 1; v < n; ++v) {
      Partition p = congruence_closure(s, {{u, v}});
      if (all.insert(p).second) principal.push_back(std::move(p));
    }
  // Every congruence is a join of principal ones.
  std::vector<Partition> frontier(all.begin(), all.end());
  while (!frontier.empty()) {
    std::vector<Partition> next;
    for (auto const& f : frontier)
      for (auto const& p : principal) {
        std::vector<std::pair<Point, Point>> pairs;
        for (Point x = 0; x < n; ++x) {
          pairs.emplace_back(x, static_cast<Point>(std::find(f.begin(), f.end(), f[x]) - f.begin()));
          pairs.emplace_back(x, static_cast<Point>(std::find(p.begin(), p.end(), p[x]) - p.begin()));
        }
        Partition j = congruence_closure(s, pairs);
        if (all.insert(j).second) {
          if (all.size() > kCongruenceCap) throw Error(ErrorCode::CapExceeded, "congruence lattice too large");
          next.push_back(std::move(j));
        }
      }
    frontier = std::move(next);
  }
  return {all.begin(), all.end()};
}

FinSolution quotient_by_partition(FinSolution const& s, Partition const& p) {
  if (!is_congruence(s, p)) throw Error(ErrorCode::BadDescriptor, "partition is not a congruence");
  std::size_t k = class_count(p);
  std::vector<Point> rep(k, kUnset);
  for (Point x = 0; x < s.size(); ++x)
    if (rep[p[x]] == kUnset) rep[p[x]] = x;
  Table t(k, std::vector<Point>(k));
  for (Point i = 0; i < k; ++i)
    for (Point j = 0; j < k; ++j) t[i][j] = p[s.sigma(rep[i])(rep[j])];
  return FinSolution::from_sigma(t);
}

}  // namespace ybe
