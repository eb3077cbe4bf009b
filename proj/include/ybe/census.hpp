#pragma once

// Census of indecomposable solutions of multipermutation level <= 2 by size.
//
// Size s splits as m * |A| with A = Z^{m-1}/K for a sublattice K of index
// s/m. With e_1..e_{m-1} the images of the standard basis in A and
// e_m = -(e_1 + ... + e_{m-1}), put cbar_i = e_1 + ... + e_i (i = 0..m-1).
// Every rbar in A gives one solution twisted_quotient(A, m, cbar, rbar), and
// distinct triples (m, K, rbar) give non-isomorphic solutions.

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ybe/intlat.hpp"
#include "ybe/solution.hpp"

namespace ybe {

inline constexpr Int kMaxCensusSize = 20;

struct CensusEntry {
  Int m = 1;
  LatticeQuotient lattice;
  std::vector<AbElem> cbar;
  AbElem rbar;
  std::vector<Int> iso_type;  // abelian_iso_type of A
};

struct CensusOptions {
  bool materialize = false;  // build each solution and classify G(Y)
  bool verify = false;       // also run braid, indecomposability and level checks
  int jobs = 0;              // 0 leaves the OpenMP default
};

struct CensusItem {
  CensusEntry entry;
  std::optional<FinSolution> solution;
  bool abelian = false;
  bool cyclic = false;
};

// Ordered by (m, HNF rows lexicographically, rank of rbar).
std::vector<CensusEntry> census_entries(Int size);
FinSolution census_solution(CensusEntry const& e);

std::vector<CensusItem> census(Int size, CensusOptions const& opt = {});
std::vector<CensusItem> census_serial(Int size, CensusOptions const& opt = {});

// Sum over m | s of #sublattices(m-1, s/m) * (s/m), without construction.
Int census_count(Int size);

struct CensusReport {
  Int size = 0;
  std::map<Int, Int> by_m;
  std::map<std::pair<Int, std::vector<Int>>, Int> by_m_type;
  Int total = 0;
  Int abelian = 0;
  Int cyclic = 0;
};

CensusReport census_report(Int size, int jobs = 0);
std::vector<CensusReport> table1_report(Int max_size, int jobs = 0);

Int count_formula_elementary(Int p, Int k, Int m);
Int count_formula_cyclic(Int p, Int k, Int m);
// 2^{s/2} - 1 with s = 2^{s_exponent}.
Int power_of_two_lower_bound(Int s_exponent);

}  // namespace ybe
