#include "ybe/solution.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

#include "ybe/error.hpp"

namespace ybe {

Partition canonical_partition(std::vector<Point> const& labels) {
  std::map<Point, Point> relabel;
  Partition out(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, fresh] = relabel.emplace(labels[i], static_cast<Point>(relabel.size()));
    out[i] = it->second;
  }
  return out;
}

std::size_t class_count(Partition const& p) {
  Point top = 0;
  for (Point v : p) top = std::max(top, v + 1);
  return top;
}

namespace {

// Flat tables: sig[x*n+y] = sigma_x(y), tau[y*n+x] = tau_y(x).
struct Flat {
  std::size_t n;
  std::vector<Point> sig;
  std::vector<Point> tau;
};

Flat flatten(std::vector<Perm> const& sigma, std::vector<Perm> const& tau) {
  Flat f{sigma.size(), {}, {}};
  f.sig.reserve(f.n * f.n);
  f.tau.reserve(f.n * f.n);
  for (auto const& p : sigma) f.sig.insert(f.sig.end(), p.images().begin(), p.images().end());
  for (auto const& p : tau) f.tau.insert(f.tau.end(), p.images().begin(), p.images().end());
  return f;
}

// (x,y,z) under r12 r23 r12 versus r23 r12 r23.
inline bool braid_at(Flat const& f, Point x, Point y, Point z) {
  std::size_t n = f.n;
  auto S = [&](Point a, Point b) { return f.sig[a * n + b]; };
  auto T = [&](Point b, Point a) { return f.tau[b * n + a]; };
  // left: r12, r23, r12
  Point a1 = S(x, y), b1 = T(y, x), c1 = z;
  Point b2 = S(b1, c1), c2 = T(c1, b1);
  Point a3 = S(a1, b2), b3 = T(b2, a1);
  // right: r23, r12, r23
  Point q1 = S(y, z), w1 = T(z, y);
  Point p2 = S(x, q1), q2 = T(q1, x);
  Point q3 = S(q2, w1), w3 = T(w1, q2);
  return a3 == p2 && b3 == q3 && c2 == w3;
}

BraidResult scan_serial(Flat const& f) {
  auto n = static_cast<Point>(f.n);
  for (Point x = 0; x < n; ++x)
    for (Point y = 0; y < n; ++y)
      for (Point z = 0; z < n; ++z)
        if (!braid_at(f, x, y, z)) return {false, {x, y, z}};
  return {};
}

BraidResult scan_parallel(Flat const& f) {
  auto n = static_cast<long long>(f.n);
  constexpr long long kNone = std::numeric_limits<long long>::max();
  long long first = kNone;
#pragma omp parallel for schedule(dynamic) reduction(min : first)
  for (long long x = 0; x < n; ++x) {
    if (x * n * n >= first) continue;
    for (long long y = 0; y < n; ++y)
      for (long long z = 0; z < n; ++z)
        if (!braid_at(f, static_cast<Point>(x), static_cast<Point>(y), static_cast<Point>(z))) {
          first = std::min(first, (x * n + y) * n + z);
          y = n;
          break;
        }
  }
  if (first == kNone) return {};
  auto code = static_cast<std::size_t>(first);
  return {false, {static_cast<Point>(code / (f.n * f.n)), static_cast<Point>(code / f.n % f.n),
                  static_cast<Point>(code % f.n)}};
}

std::vector<Perm> derive_tau(std::vector<Perm> const& sigma, std::vector<Perm> const& sigma_inv) {
  std::size_t n = sigma.size();
  std::vector<std::vector<Point>> tau(n, std::vector<Point>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      tau[y][x] = sigma_inv[sigma[x](static_cast<Point>(y))](static_cast<Point>(x));
  std::vector<Perm> out;
  out.reserve(n);
  for (std::size_t y = 0; y < n; ++y) {
    std::vector<char> seen(n, 0);
    for (Point v : tau[y]) {
      if (seen[v]) throw Error(ErrorCode::DegenerateTau, "tau_" + std::to_string(y) + " is not a bijection",
                               {static_cast<long long>(y)});
      seen[v] = 1;
    }
    out.push_back(Perm::unchecked(std::move(tau[y])));
  }
  return out;
}

}  // namespace

FinSolution FinSolution::build(Table const& sigma, std::optional<Table> const& tau, bool check_braid) {
  std::size_t n = sigma.size();
  FinSolution s;
  s.sigma_.reserve(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (sigma[x].size() != n)
      throw Error(ErrorCode::NotPermutationRow, "row " + std::to_string(x) + " has wrong length",
                  {static_cast<long long>(x)});
    try {
      s.sigma_.emplace_back(sigma[x]);
    } catch (Error const&) {
      throw Error(ErrorCode::NotPermutationRow, "sigma_" + std::to_string(x) + " is not a permutation",
                  {static_cast<long long>(x)});
    }
  }
  for (auto const& p : s.sigma_) s.sigma_inv_.push_back(p.inverse());
  s.tau_ = derive_tau(s.sigma_, s.sigma_inv_);

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      auto [u, v] = s.apply(static_cast<Point>(x), static_cast<Point>(y));
      auto [x2, y2] = s.apply(u, v);
      bool mismatch = x2 != x || y2 != y;
      if (tau && !mismatch) mismatch = (*tau).at(y).at(x) != v;
      if (mismatch)
        throw Error(ErrorCode::NotInvolutive, "r^2 differs from the identity at (" + std::to_string(x) + "," +
                                                  std::to_string(y) + ")",
                    {static_cast<long long>(x), static_cast<long long>(y)});
    }

  if (check_braid) {
    BraidResult b = scan_parallel(flatten(s.sigma_, s.tau_));
    if (!b.ok) {
      auto [x, y, z] = b.witness;
      throw Error(ErrorCode::BraidFails,
                  "braid relation fails at (" + std::to_string(x) + "," + std::to_string(y) + "," +
                      std::to_string(z) + ")",
                  {x, y, z});
    }
  }
  return s;
}

FinSolution FinSolution::from_sigma(Table const& sigma, std::optional<Table> const& tau) {
  return build(sigma, tau, true);
}

FinSolution FinSolution::from_sigma_trusted(Table const& sigma) { return build(sigma, std::nullopt, false); }

Table FinSolution::sigma_table() const {
  Table t;
  t.reserve(sigma_.size());
  for (auto const& p : sigma_) t.push_back(p.images());
  return t;
}

FinSolution trivial_solution(std::size_t n) {
  return FinSolution::from_sigma(Table(n, Perm::identity(n).images()));
}

FinSolution permutation_solution(Perm const& f) { return FinSolution::from_sigma(Table(f.degree(), f.images())); }

BraidResult verify_braid(FinSolution const& s) {
  std::vector<Perm> taus;
  for (std::size_t y = 0; y < s.size(); ++y) taus.push_back(s.tau(static_cast<Point>(y)));
  return scan_parallel(flatten(s.sigmas(), taus));
}

BraidResult verify_braid_serial(FinSolution const& s) {
  std::vector<Perm> taus;
  for (std::size_t y = 0; y < s.size(); ++y) taus.push_back(s.tau(static_cast<Point>(y)));
  return scan_serial(flatten(s.sigmas(), taus));
}

BraidResult verify_braid_table(Table const& sigma) {
  std::vector<Perm> rows;
  for (auto const& r : sigma) rows.emplace_back(r);
  std::vector<Perm> inv;
  for (auto const& r : rows) inv.push_back(r.inverse());
  return scan_parallel(flatten(rows, derive_tau(rows, inv)));
}

bool is_square_free(FinSolution const& s) {
  for (std::size_t x = 0; x < s.size(); ++x) {
    auto p = static_cast<Point>(x);
    if (s.sigma(p)(p) != p || s.tau(p)(p) != p) return false;
  }
  return true;
}

namespace {

Partition classes_of(std::vector<Perm> const& rows) {
  std::map<Perm, Point> ids;
  std::vector<Point> labels;
  labels.reserve(rows.size());
  for (auto const& r : rows) labels.push_back(ids.emplace(r, static_cast<Point>(ids.size())).first->second);
  return canonical_partition(labels);
}

}  // namespace

Retraction retract(FinSolution const& s) {
  std::size_t n = s.size();
  std::vector<Perm> taus;
  for (std::size_t y = 0; y < n; ++y) taus.push_back(s.tau(static_cast<Point>(y)));
  Partition by_tau = classes_of(taus);
  Partition by_sigma = classes_of(s.sigmas());
  if (by_tau != by_sigma)
    throw Error(ErrorCode::RetractIllFormed, "tau-column classes differ from sigma-row classes");
  std::size_t k = class_count(by_tau);
  Table q(k, std::vector<Point>(k, std::numeric_limits<Point>::max()));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Point v = by_tau[s.sigma(static_cast<Point>(x))(static_cast<Point>(y))];
      Point& cell = q[by_tau[x]][by_tau[y]];
      if (cell != std::numeric_limits<Point>::max() && cell != v)
        throw Error(ErrorCode::RetractIllFormed, "induced table is not well defined",
                    {static_cast<long long>(x), static_cast<long long>(y)});
      cell = v;
    }
  return {FinSolution::from_sigma_trusted(q), by_tau};
}

std::optional<int> multipermutation_level(FinSolution const& s) {
  int level = 0;
  FinSolution cur = s;
  while (cur.size() > 1) {
    Retraction r = retract(cur);
    if (r.solution.size() == cur.size()) return std::nullopt;
    cur = std::move(r.solution);
    ++level;
  }
  return level;
}

bool is_mpl2_local(FinSolution const& s) {
  Partition rows = classes_of(s.sigmas());
  for (std::size_t x = 0; x < s.size(); ++x) {
    auto p = static_cast<Point>(x);
    Point first = rows[s.sigma(0)(p)];
    for (std::size_t y = 1; y < s.size(); ++y)
      if (rows[s.sigma(static_cast<Point>(y))(p)] != first) return false;
  }
  return true;
}

bool is_2_reductive(FinSolution const& s) {
  Partition rows = classes_of(s.sigmas());
  for (std::size_t x = 0; x < s.size(); ++x)
    for (std::size_t y = 0; y < s.size(); ++y)
      if (rows[s.sigma(static_cast<Point>(y))(static_cast<Point>(x))] != rows[x]) return false;
  return true;
}

TwoReductive isotope(FinSolution const& s, Point e) {
  if (!is_mpl2_local(s)) throw Error(ErrorCode::NotLevel2, "isotope requires multipermutation level <= 2");
  std::size_t n = s.size();
  TwoReductive t;
  Perm const& se_inv = s.sigma_inv(e);
  for (std::size_t x = 0; x < n; ++x) t.L.push_back(s.sigma(static_cast<Point>(x)) * se_inv);
  for (std::size_t y = 0; y < n; ++y) t.R.push_back(s.sigma(e) * s.tau(se_inv(static_cast<Point>(y))));
  Partition rows = classes_of(t.L);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (rows[t.L[y](static_cast<Point>(x))] != rows[x])
        throw Error(ErrorCode::NotLevel2, "isotope is not 2-reductive",
                    {static_cast<long long>(x), static_cast<long long>(y)});
  return t;
}

FinSolution assemble(TwoReductive const& t, Perm const& pi) {
  std::size_t n = t.size();
  if (pi.degree() != n) throw Error(ErrorCode::BadParams, "pi has wrong degree");
  bool unit = std::any_of(t.L.begin(), t.L.end(), [](Perm const& p) { return p.is_identity(); });
  if (!unit) throw Error(ErrorCode::NoUnitRow, "no L_a equals the identity");
  std::vector<Perm> piL;
  for (auto const& l : t.L) piL.push_back(pi * l);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      auto px = pi(static_cast<Point>(x)), py = pi(static_cast<Point>(y));
      if (t.L[py] * piL[x] != t.L[px] * piL[y])
        throw Error(ErrorCode::PiIncompatible, "L_{pi(y)} pi L_x != L_{pi(x)} pi L_y",
                    {static_cast<long long>(x), static_cast<long long>(y)});
    }
  Table sigma;
  for (auto const& l : t.L) sigma.push_back((l * pi).images());
  return FinSolution::from_sigma(sigma);
}

FinSolution as_solution(TwoReductive const& t) {
  Table sigma;
  for (auto const& l : t.L) sigma.push_back(l.images());
  return FinSolution::from_sigma(sigma);
}

namespace {

std::vector<Perm> distinct_non_identity(std::vector<Perm> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::erase_if(gens, [](Perm const& p) { return p.is_identity(); });
  return gens;
}

}  // namespace

PermGroup permutation_group(FinSolution const& s, std::size_t cap) {
  return PermGroup(s.size(), distinct_non_identity(s.sigmas()), cap);
}

PermGroup displacement_group(FinSolution const& s, Point e, std::size_t cap) {
  std::vector<Perm> gens;
  if (s.size() > 0)
    for (auto const& p : s.sigmas()) gens.push_back(p * s.sigma_inv(e));
  return PermGroup(s.size(), distinct_non_identity(std::move(gens)), cap);
}

BasepointFrame basepoint_frame(FinSolution const& s, Point base) {
  if (!is_mpl2_local(s)) throw Error(ErrorCode::NotLevel2, "basepoint frame requires level <= 2");
  BasepointFrame f;
  f.base = base;
  f.pi = s.sigma(base);
  Point cur = base;
  do {
    f.tilde.push_back(cur);
    cur = f.pi(cur);
  } while (cur != base);
  Perm pi_inv = f.pi.inverse();
  for (Point t : f.tilde) f.Lseq.push_back(s.sigma(t) * pi_inv);
  std::size_t n = f.tilde.size();
  for (std::size_t i = 0; i < n; ++i) f.Dseq.push_back(f.Lseq[i] * f.Lseq[(i + n - 1) % n].inverse());
  return f;
}

bool is_indecomposable(FinSolution const& s) {
  if (s.size() == 0) return true;
  return orbit(s.sigmas(), 0).size() == s.size();
}

bool is_uniconnected(FinSolution const& s, std::size_t cap) {
  if (!is_indecomposable(s)) return false;
  return permutation_group(s, cap).order() == s.size();
}

}  // namespace ybe
