#pragma once

// The solutions S(G x Z_n, c) on G x Z_n:
//   sigma_{(a,i)}((b,j)) = (b + c_{i-j-1} - c_{-j-1}, j+1)
//   tau_{(a,i)}((b,j))   = (b - c_{i-j+1} + c_{-j},   j-1)
// Subscripts are reduced mod n into 0..n-1. Point (a,i) has index
// index_of(a) * n + i, so the group element is major and i is minor.

#include <cstddef>
#include <string>
#include <vector>

#include "ybe/intlat.hpp"
#include "ybe/solution.hpp"

namespace ybe {

inline constexpr std::size_t kMaxBuildSize = 512;

struct SParams {
  AbGroup G;
  Int n = 1;
  std::vector<AbElem> c;  // c[0] = 0, <c> = G

  AbElem const& at(Int i) const { return c[static_cast<std::size_t>(emod(i, n))]; }
  std::size_t size() const { return static_cast<std::size_t>(G.order() * n); }
};

// Throws BadParams unless n >= 1, |c| = n, c[0] = 0 and c generates G.
void validate(SParams const& p);

inline Point s_point(SParams const& p, AbElem const& a, Int i) {
  return static_cast<Point>(p.G.index_of(a) * static_cast<std::size_t>(p.n) + static_cast<std::size_t>(emod(i, p.n)));
}

// c_{i,j} = c_{i-j} - c_{-j}.
AbElem c_matrix(SParams const& p, Int i, Int j);

FinSolution build_solution(SParams const& p);
// L_{(a,i)}((b,j)) = (b + c_{i,j}, j); R is the derived tau of that solution.
TwoReductive two_reductive_layer(SParams const& p);
// pi((a,i)) = (a, i+1).
Perm s_shift(SParams const& p);

// c_{i mod n} = i c_1 for 0 <= i <= n.
bool is_abelian_params(SParams const& p);

// True iff n agrees and some isomorphism G -> G' maps c_i to c'_i for all i.
bool params_isomorphic(SParams const& a, SParams const& b);

// G = (Z_k)^r, n = 2r, c_i = e_1+...+e_i, c_{i+r} = e_{i+1}+...+e_r.
SParams module_construction(Int k, Int r);

// Dis(X) meets <pi> trivially and G(X)_{base} lies in Dis(X), pi = sigma_base.
bool is_s_representable(FinSolution const& s, Point base = 0);

// Parses "0,0;1,0" into elements of g.
std::vector<AbElem> parse_elements(AbGroup const& g, std::string const& text);

}  // namespace ybe
