#pragma once

// Congruences theta(m, H, r) of S(G x Z_n, c) and their quotients.
//
// (a,i) ~ (a',i') iff i = i' (mod m) and a' - a = ((i - i')/m) r (mod H),
// so (b, j+m) ~ (b+r, j). The quotient lives on A x Z_m, A = G/H, with
//   sigma_{(a,i)}((b,j)) = (b + c_{i-j-1} - c_{-j-1}, j+1)        if j+1 < m
//                          (b + c_{i-j-1} - c_{-j-1} + r, 0)      if j+1 = m
// and point (a,i) at index_of(a) * m + i.

#include <cstddef>
#include <vector>

#include "ybe/intlat.hpp"
#include "ybe/sconstruct.hpp"
#include "ybe/solution.hpp"

namespace ybe {

struct CongruenceDescriptor {
  Int m = 1;
  Subgroup H;
  AbElem r;  // least-ranked representative of r + H
};

// m | n, c_i - c_{i+m} in H for all i, (n/m) r in H.
bool is_valid_descriptor(SParams const& p, CongruenceDescriptor const& d);
// Reduces r to its canonical coset representative. Throws BadDescriptor.
CongruenceDescriptor make_descriptor(SParams const& p, Int m, Subgroup H, AbElem r);

// Ordered by m ascending, then H (order, then element ranks), then r rank.
std::vector<CongruenceDescriptor> enumerate_congruences(SParams const& p);

// The partition of G x Z_n induced by d, in S-point indexing.
Partition descriptor_partition(SParams const& p, CongruenceDescriptor const& d);

// Solution on A x Z_m from m-periodic cbar (cbar.size() == m, cbar[0] = 0)
// and the wrap twist rbar.
FinSolution twisted_quotient(AbGroup const& A, Int m, std::vector<AbElem> const& cbar, AbElem const& rbar);

FinSolution quotient_by(SParams const& p, CongruenceDescriptor const& d);

bool quotients_isomorphic(SParams const& p, CongruenceDescriptor const& d1, CongruenceDescriptor const& d2);

struct QuotientReport {
  std::size_t size = 0;
  Int index_H = 0;            // [G:H]
  Int m = 0;
  Int r_order = 0;            // order of r + H in G/H
  std::size_t dis_over_stab = 0;  // |Dis(Y)| / |Dis(Y)_e|
  std::size_t g_over_stab_dis = 0;  // [G(Y) : G(Y)_e Dis(Y)]
  std::vector<std::size_t> cycle_lengths;  // distinct cycle lengths over all sigma_y
  bool size_ok = false;        // |Y| = m [G:H]
  bool dis_ok = false;         // dis_over_stab = [G:H]
  bool index_ok = false;       // g_over_stab_dis = m
  bool cycles_ok = false;      // every cycle has length m * r_order
  bool rho_m_equal = false;    // sigma_x^m independent of x
  bool all_ok() const { return size_ok && dis_ok && index_ok && cycles_ok && rho_m_equal; }
};

QuotientReport quotient_invariant_report(SParams const& p, CongruenceDescriptor const& d);

}  // namespace ybe
