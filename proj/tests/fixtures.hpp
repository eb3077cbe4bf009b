#pragma once

// Shared fixtures and independent test oracles.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ybe/brace.hpp"
#include "ybe/census.hpp"
#include "ybe/morphisms.hpp"
#include "ybe/quotients.hpp"
#include "ybe/sconstruct.hpp"
#include "ybe/solution.hpp"

namespace fx {

using namespace ybe;

inline SParams params(std::vector<Int> factors, Int n, std::string const& c) {
  SParams p{AbGroup(std::move(factors)), n, {}};
  p.c = parse_elements(p.G, c);
  return p;
}

// S(Z_4 x Z_2 x Z_4, c) with 32 points, not uniconnected.
inline SParams ex43() { return params({4, 2}, 4, "0,0;1,0;1,0;2,1"); }
// S(Z_2 x Z_6, (0,1,1,0,1,1)): G = Z_2, n = 6.
inline SParams contr() { return params({2}, 6, "0;1;1;0;1;1"); }

inline CongruenceDescriptor descriptor(SParams const& p, Int m, std::vector<AbElem> const& hgens, AbElem r) {
  return make_descriptor(p, m, subgroup_generated(p.G, hgens), std::move(r));
}

// theta(3, {0}, 1) on contr().
inline CongruenceDescriptor contr_theta() { return descriptor(contr(), 3, {}, AbElem{{1}}); }

// Relabels the contr quotient (point a*3+i) to the i-major labels
// 0=(0,0), 1=(1,0), 2=(0,1), 3=(1,1), 4=(0,2), 5=(1,2).
inline Mapping contr_relabel() {
  Mapping phi(6);
  for (Point a = 0; a < 2; ++a)
    for (Point i = 0; i < 3; ++i) phi[a * 3 + i] = 2 * i + a;
  return phi;
}

inline FinSolution relabel(FinSolution const& s, Mapping const& phi) {
  Table t(s.size(), std::vector<Point>(s.size()));
  for (Point x = 0; x < s.size(); ++x)
    for (Point y = 0; y < s.size(); ++y) t[phi[x]][phi[y]] = phi[s.sigma(x)(y)];
  return FinSolution::from_sigma(t);
}

// Perm from disjoint cycles on n points.
inline Perm cycles(std::size_t n, std::vector<std::vector<Point>> const& cs) {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  for (auto const& c : cs)
    for (std::size_t k = 0; k < c.size(); ++k) img[c[k]] = c[(k + 1) % c.size()];
  return Perm(img);
}

// The dihedral family member on Z_{2^m} as theta(2,{0},0) of S(Z_{2^{m-1}} x Z_2, (0,-1)).
inline SParams dihedral_params(Int m) {
  Int h = Int{1} << (m - 1);
  return SParams{AbGroup({h}), 2, {AbElem{{0}}, AbElem{{h - 1}}}};
}
inline CongruenceDescriptor dihedral_theta(Int m) { return descriptor(dihedral_params(m), 2, {}, AbElem{{0}}); }

// The quaternion family member as theta(2,{0},2^{m-2}) of
// S(Z_{2^{m-1}} x Z_4, (0, 2^{m-2}-1, 0, 2^{m-2}-1)).
inline SParams quaternion_params(Int m) {
  Int h = Int{1} << (m - 1);
  return SParams{AbGroup({h}), 4, {AbElem{{0}}, AbElem{{h / 2 - 1}}, AbElem{{0}}, AbElem{{h / 2 - 1}}}};
}
inline CongruenceDescriptor quaternion_theta(Int m) {
  Int h = Int{1} << (m - 1);
  return descriptor(quaternion_params(m), 2, {}, AbElem{{h / 2}});
}

// (Z_2 x Z_2) x| Z_3 with alpha(e1) = (0,1), alpha(e2) = (1,1).
inline Brace uni223_brace() {
  return semidirect_trivial(AbGroup({2, 2}), 3, {AbElem{{0, 1}}, AbElem{{1, 1}}});
}
// g = ((1,0), 1)
inline Point uni223_g() { return static_cast<Point>(AbGroup({2, 2}).index_of(AbElem{{1, 0}}) * 3 + 1); }
inline FinSolution uni223() { return rump_solution(uni223_brace(), uni223_g()); }

// Indecomposable solution of size 8 and multipermutation level 3.
inline FinSolution level3() {
  return FinSolution::from_sigma({{5, 0, 3, 6, 1, 4, 7, 2},
                                  {3, 2, 1, 0, 7, 6, 5, 4},
                                  {1, 4, 7, 2, 5, 0, 3, 6},
                                  {7, 6, 5, 4, 3, 2, 1, 0},
                                  {5, 0, 3, 6, 1, 4, 7, 2},
                                  {3, 2, 1, 0, 7, 6, 5, 4},
                                  {1, 4, 7, 2, 5, 0, 3, 6},
                                  {7, 6, 5, 4, 3, 2, 1, 0}});
}

inline FinSolution cycle_solution(std::size_t n) {
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>((i + 1) % n);
  return permutation_solution(Perm(img));
}

// Invariant-factor presentations of all abelian groups of the given order.
inline std::vector<AbGroup> abelian_groups(Int order) {
  std::vector<AbGroup> out;
  std::function<void(Int, Int, std::vector<Int>&)> rec = [&](Int rest, Int last, std::vector<Int>& cur) {
    if (rest == 1) {
      std::vector<Int> f(cur.rbegin(), cur.rend());  // ascending d_1 | d_2 | ...
      out.emplace_back(f);
      return;
    }
    for (Int d = 2; d <= rest; ++d) {
      if (rest % d || (last && last % d)) continue;
      cur.push_back(d);
      rec(rest / d, d, cur);
      cur.pop_back();
    }
  };
  std::vector<Int> cur;
  if (order == 1)
    out.emplace_back(std::vector<Int>{1});
  else
    rec(order, 0, cur);
  return out;
}

// Every generating c for (G, n), in lexicographic order of element ranks.
inline std::vector<SParams> all_params(AbGroup const& g, Int n) {
  std::vector<SParams> out;
  auto elems = g.elements();
  std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);  // idx[0] stays 0
  while (true) {
    SParams p{g, n, {}};
    for (auto i : idx) p.c.push_back(elems[i]);
    if (subgroup_generated(g, p.c).order() == static_cast<std::size_t>(g.order())) out.push_back(std::move(p));
    std::size_t k = idx.size() - 1;
    while (k >= 1 && ++idx[k] == elems.size()) idx[k--] = 0;
    if (k < 1) return out;
  }
}

inline std::vector<SParams> params_up_to(std::size_t max_points) {
  std::vector<SParams> out;
  for (Int order = 1; static_cast<std::size_t>(order) <= max_points; ++order)
    for (auto const& g : abelian_groups(order))
      for (Int n = 1; static_cast<std::size_t>(order * n) <= max_points; ++n)
        for (auto& p : all_params(g, n)) out.push_back(std::move(p));
  return out;
}

inline std::vector<FinSolution> census_corpus(Int max_size) {
  std::vector<FinSolution> out;
  for (Int s = 1; s <= max_size; ++s)
    for (auto const& e : census_entries(s)) out.push_back(census_solution(e));
  return out;
}

inline std::vector<FinSolution> fixture_solutions() {
  std::vector<FinSolution> out{build_solution(ex43()),
                               build_solution(contr()),
                               quotient_by(contr(), contr_theta()),
                               uni223(),
                               cyclic_brace_family(CyclicKind::Dihedral, 3),
                               cyclic_brace_family(CyclicKind::Quaternion, 3),
                               cyclic_brace_family(CyclicKind::Dihedral, 4),
                               cyclic_brace_family(CyclicKind::Quaternion, 4),
                               build_solution(module_construction(2, 2)),
                               build_solution(module_construction(3, 2))};
  return out;
}

inline Mapping random_mapping(std::size_t n, std::mt19937& rng) {
  Mapping phi(n);
  std::iota(phi.begin(), phi.end(), Point{0});
  std::shuffle(phi.begin(), phi.end(), rng);
  return phi;
}

// Normal closure of {sigma_x sigma_y^{-1}} in G(X): the words with exponent
// sum zero. Independent of the sigma_x sigma_e^{-1} generating set.
inline std::vector<Perm> exponent_sum_zero(FinSolution const& s) {
  PermGroup g = permutation_group(s);
  std::vector<Perm> gens;
  for (auto const& a : s.sigmas())
    for (auto const& b : s.sigmas()) {
      Perm d = a * b.inverse();
      for (auto const& h : g.elements()) gens.push_back(h * d * h.inverse());
    }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return group_closure(gens, s.size());
}

}  // namespace fx
