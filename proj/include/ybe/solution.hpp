#pragma once

// Finite involutive non-degenerate set-theoretic solutions of the braid
// relation, stored by their left translations sigma[x][y] = sigma_x(y).
// tau_y(x) = sigma^{-1}_{sigma_x(y)}(x) is always derived, never stored
// independently, so r(x,y) = (sigma_x(y), tau_y(x)) is involutive by
// construction.

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ybe/perm.hpp"

namespace ybe {

using Table = std::vector<std::vector<Point>>;
// Canonical partition of {0..N-1}: label[x] is the class index, classes
// numbered by first occurrence.
using Partition = std::vector<Point>;

Partition canonical_partition(std::vector<Point> const& labels);
std::size_t class_count(Partition const& p);

struct BraidResult {
  bool ok = true;
  std::array<Point, 3> witness{};  // lexicographically least failing triple
};

class FinSolution {
 public:
  // Validates rows, derives tau, checks tau rows, involutivity and the braid
  // relation. When `tau` is supplied (tau[y][x] = tau_y(x)) it must agree
  // with the derived table, else NotInvolutive.
  static FinSolution from_sigma(Table const& sigma, std::optional<Table> const& tau = std::nullopt);
  // Skips the braid scan; rows and tau are still validated. For builders
  // whose output is verified separately.
  static FinSolution from_sigma_trusted(Table const& sigma);

  std::size_t size() const noexcept { return sigma_.size(); }
  Perm const& sigma(Point x) const { return sigma_[x]; }
  Perm const& sigma_inv(Point x) const { return sigma_inv_[x]; }
  Perm const& tau(Point y) const { return tau_[y]; }
  std::vector<Perm> const& sigmas() const noexcept { return sigma_; }
  std::pair<Point, Point> apply(Point x, Point y) const { return {sigma_[x](y), tau_[y](x)}; }
  Table sigma_table() const;

  friend bool operator==(FinSolution const& a, FinSolution const& b) { return a.sigma_ == b.sigma_; }

 private:
  static FinSolution build(Table const& sigma, std::optional<Table> const& tau, bool check_braid);

  std::vector<Perm> sigma_;
  std::vector<Perm> sigma_inv_;
  std::vector<Perm> tau_;
};

// The projection solution r(x,y) = (y,x) on n points.
FinSolution trivial_solution(std::size_t n);
// sigma_x = tau_x = f for all x.
FinSolution permutation_solution(Perm const& f);

// Parallel over the first coordinate; the witness is the least failing triple.
BraidResult verify_braid(FinSolution const& s);
BraidResult verify_braid_serial(FinSolution const& s);
BraidResult verify_braid_table(Table const& sigma);

bool is_square_free(FinSolution const& s);

struct Retraction {
  FinSolution solution;
  Partition classes;
};

// Classes of x ~ y iff tau_x = tau_y; also checks they match sigma_x = sigma_y.
Retraction retract(FinSolution const& s);
// Number of retractions needed to reach one point; nullopt when the size
// stabilizes above one.
std::optional<int> multipermutation_level(FinSolution const& s);

bool is_mpl2_local(FinSolution const& s);
bool is_2_reductive(FinSolution const& s);

struct TwoReductive {
  std::vector<Perm> L;
  std::vector<Perm> R;
  std::size_t size() const noexcept { return L.size(); }
};

// L_x = sigma_x sigma_e^{-1}, R_y = sigma_e tau_{sigma_e^{-1}(y)}.
TwoReductive isotope(FinSolution const& s, Point e);
// sigma_x = L_x pi, after checking a unit row and compatibility of pi.
FinSolution assemble(TwoReductive const& t, Perm const& pi);
// The solution with sigma_x = L_x (tau derived).
FinSolution as_solution(TwoReductive const& t);

PermGroup permutation_group(FinSolution const& s, std::size_t cap = kDefaultCap);
// Generated by sigma_x sigma_e^{-1} for all x.
PermGroup displacement_group(FinSolution const& s, Point e = 0, std::size_t cap = kDefaultCap);

struct BasepointFrame {
  Point base = 0;
  Perm pi;
  std::vector<Point> tilde;  // tilde[i] = pi^i(base), i in Z_n, n = cycle length of base
  std::vector<Perm> Lseq;    // sigma_{tilde i} pi^{-1}
  std::vector<Perm> Dseq;    // Lseq[i] Lseq[i-1]^{-1}
};

BasepointFrame basepoint_frame(FinSolution const& s, Point base);

bool is_indecomposable(FinSolution const& s);
bool is_uniconnected(FinSolution const& s, std::size_t cap = kDefaultCap);

}  // namespace ybe
