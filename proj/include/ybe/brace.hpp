#pragma once

// Finite left braces as dense tables, and the solutions they produce.

#include <array>
#include <cstddef>
#include <vector>

#include "ybe/intlat.hpp"
#include "ybe/solution.hpp"

namespace ybe {

struct Brace {
  Table add;  // add[a][b] = a + b
  Table mul;  // mul[a][b] = a o b
  Point zero = 0;

  std::size_t size() const noexcept { return add.size(); }
};

struct BraceCheck {
  bool ok = true;
  std::array<Point, 3> witness{};  // first failing (a,b,c); the brace law or a group axiom
};

// (B,+) abelian group, (B,o) group with the same neutral element, and
// a o b + a o c = a o (b + c) + a.
BraceCheck verify_brace(Brace const& b);

Point brace_neg(Brace const& b, Point a);
Point brace_inverse(Brace const& b, Point a);  // a^- for o
// lambda_a(x) = a o x - a.
Perm lambda_map(Brace const& b, Point a);
// {a : lambda_a = id}, ascending.
std::vector<Point> socle(Brace const& b);

// The brace with + = o on Z_{d_1} x ... indexed by AbGroup::index_of.
Brace trivial_brace(AbGroup const& g);
// Brace on G x Z_n with (a,i) o (b,j) = (a + alpha^i(b), i + j), (a,i) at
// index index_of(a) * n + i. alpha_images[k] is alpha(e_k). Throws BadOrder
// unless alpha is an automorphism with alpha^n = id.
Brace semidirect_trivial(AbGroup const& g, Int n, std::vector<AbElem> const& alpha_images);

// sigma_x(y) = (lambda_x(g))^- o y. Throws NotCycleBase unless the lambda
// orbit of g generates (B,+).
FinSolution rump_solution(Brace const& b, Point g);

enum class CyclicKind { Dihedral, Quaternion };

// On Z_{2^m}: a o b = a + q^a b with q = -1 (dihedral) or 2^{m-1} - 1 (quaternion).
Brace cyclic_brace(CyclicKind kind, Int m);
// Closed forms:
//   dihedral:   sigma_a(b) = 1 - b (a even), -1 - b (a odd)
//   quaternion: sigma_a(b) = (1 - 2^{m-1})(1 - b) (a even), -1 + (2^{m-1} - 1) b (a odd)
FinSolution cyclic_brace_family(CyclicKind kind, Int m);

}  // namespace ybe
