#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "fixtures.hpp"
#include "ybe/error.hpp"

using namespace ybe;

namespace {

const std::vector<Int> kTotals{1, 1, 1, 3, 1, 10, 1, 19, 13, 36, 1, 136, 1, 134, 151, 403};
const std::vector<Int> kAbelian{1, 1, 1, 3, 1, 1, 1, 3, 4, 1, 1, 3, 1, 1, 1, 7};
const std::vector<Int> kCyclic{1, 1, 1, 2, 1, 1, 1, 2, 3, 1, 1, 2, 1, 1, 1, 4};

Int ipow(Int b, Int e) {
  Int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

Int count_with(Int size, Int m, std::vector<Int> const& type) {
  Int c = 0;
  for (auto const& e : census_entries(size)) c += e.m == m && e.iso_type == type;
  return c;
}

bool is_single_cycle(Perm const& p) { return p.cycle_lengths() == std::vector<std::size_t>{p.degree()}; }

}  // namespace

TEST_CASE("census examples") {
  auto r8 = census_report(8);
  CHECK(r8.total == 19);
  CHECK(r8.by_m == std::map<Int, Int>{{2, 4}, {4, 14}, {8, 1}});
  CHECK(census_report(1).total == 1);
  CHECK(census_solution(census_entries(1)[0]) == trivial_solution(1));

  auto r16 = census_report(16);
  CHECK(r16.total == 403);
  std::map<std::pair<Int, std::vector<Int>>, Int> want{
      {{2, {8}}, 8}, {{4, {4}}, 112}, {{4, {2, 2}}, 28}, {{8, {2}}, 254}, {{16, {}}, 1}};
  CHECK(r16.by_m_type == want);
}

TEST_CASE("census size guard") {
  try {
    census_entries(21);
    FAIL("guard missing");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::TooLarge);
  }
  CHECK_THROWS_AS(census_count(0), Error);
}

TEST_CASE("entries are ordered by m, HNF and rbar") {
  for (Int s = 1; s <= 16; ++s) {
    auto es = census_entries(s);
    for (std::size_t k = 1; k < es.size(); ++k) {
      auto key = [](CensusEntry const& e) {
        return std::make_tuple(e.m, e.lattice.hnf, e.lattice.quotient.index_of(e.rbar));
      };
      CHECK(key(es[k - 1]) < key(es[k]));
    }
    for (auto const& e : es) {
      CHECK(static_cast<Int>(e.cbar.size()) == e.m);
      CHECK(e.lattice.quotient.is_zero(e.cbar[0]));
      CHECK(e.iso_type == abelian_iso_type(e.lattice.quotient));
    }
  }
}

TEST_CASE("census counts match the sublattice sum and materialization") {
  for (Int s = 1; s <= kMaxCensusSize; ++s) {
    Int expected = 0;
    for (Int m = 1; m <= s; ++m)
      if (s % m == 0) expected += static_cast<Int>(sublattices_of_index(static_cast<std::size_t>(m - 1), s / m).size()) * (s / m);
    CHECK(census_count(s) == expected);
    CHECK(static_cast<Int>(census_entries(s).size()) == expected);
  }
}

TEST_CASE("table of counts up to 16") {
  auto rows = table1_report(16);
  REQUIRE(rows.size() == 16);
  for (std::size_t i = 0; i < 16; ++i) {
    CHECK(rows[i].size == static_cast<Int>(i + 1));
    CHECK(rows[i].total == kTotals[i]);
    CHECK(rows[i].abelian == kAbelian[i]);
    CHECK(rows[i].cyclic == kCyclic[i]);
  }
}

TEST_CASE("count formulas") {
  CHECK(count_formula_elementary(2, 2, 4) == 28);
  for (Int k = 1; k <= 4; ++k)
    for (Int m = 1; m <= k; ++m) CHECK(count_formula_elementary(3, k, m) == 0);
  CHECK(count_formula_elementary(3, 1, 3) == 12);
  CHECK(count_formula_elementary(5, 2, 3) == 25);
  CHECK(count_formula_cyclic(2, 2, 4) == 112);
  CHECK(count_formula_cyclic(2, 3, 2) == 8);
  for (Int p : {2, 3, 5})
    for (Int m = 2; m <= 6; ++m) {
      Int simple = (ipow(p, m) - p) / (p - 1);
      CHECK(count_formula_cyclic(p, 1, m) == simple);
      CHECK(count_formula_elementary(p, 1, m) == simple);
    }
}

TEST_CASE("formulas equal census sub-counts") {
  std::size_t checked = 0;
  for (Int p : {2, 3, 5, 7, 11, 13})
    for (Int k = 0; ipow(p, k) <= 16; ++k)
      for (Int m = 1; ipow(p, k) * m <= 16; ++m) {
        Int s = ipow(p, k) * m;
        CHECK(count_formula_elementary(p, k, m) == count_with(s, m, std::vector<Int>(static_cast<std::size_t>(k), p)));
        if (k >= 1 && m >= 2) CHECK(count_formula_cyclic(p, k, m) == count_with(s, m, {ipow(p, k)}));
        ++checked;
      }
  CHECK(checked > 30);
}

TEST_CASE("order 2p and order p^2 identities") {
  for (Int p : {3, 5, 7}) CHECK(census_count(2 * p) == ipow(2, p) + p - 1);
  for (Int p : {2, 3}) {
    CHECK(census_count(p * p) == 1 + (ipow(p, p) - p) / (p - 1));
    Int full_cycles = 0;
    for (auto const& e : census_entries(p * p)) {
      auto y = census_solution(e);
      full_cycles += std::all_of(y.sigmas().begin(), y.sigmas().end(), is_single_cycle);
    }
    CHECK(full_cycles == ipow(p, p - 1));
  }
}

TEST_CASE("lower bound for powers of two") {
  CHECK(power_of_two_lower_bound(1) == 1);
  CHECK(power_of_two_lower_bound(2) == 3);
  CHECK(power_of_two_lower_bound(3) == 15);
  CHECK(power_of_two_lower_bound(4) == 255);
  for (Int e = 1; e <= 4; ++e) CHECK(census_count(Int{1} << e) >= power_of_two_lower_bound(e));
  CHECK_THROWS_AS(power_of_two_lower_bound(0), Error);
}

TEST_CASE("parallel census equals the serial reference") {
  for (Int s = 1; s <= 16; ++s)
    for (int jobs : {1, 2, 4}) {
      CensusOptions opt{true, false, jobs};
      auto par = census(s, opt);
      auto ser = census_serial(s, opt);
      REQUIRE(par.size() == ser.size());
      for (std::size_t k = 0; k < par.size(); ++k) {
        CHECK(par[k].entry.m == ser[k].entry.m);
        CHECK(par[k].entry.lattice.hnf == ser[k].entry.lattice.hnf);
        CHECK(par[k].entry.rbar == ser[k].entry.rbar);
        REQUIRE(par[k].solution.has_value());
        CHECK(*par[k].solution == *ser[k].solution);
        CHECK(par[k].abelian == ser[k].abelian);
        CHECK(par[k].cyclic == ser[k].cyclic);
      }
    }
}

TEST_CASE("census members are indecomposable of level <= 2, one permutation solution per size") {
  for (Int s = 1; s <= 12; ++s) {
    auto items = census(s, {true, true, 0});
    Int perm = 0;
    for (auto const& it : items) {
      auto const& y = *it.solution;
      CHECK(y.size() == static_cast<std::size_t>(s));
      CHECK(verify_braid_serial(y).ok);
      CHECK(is_indecomposable(y));
      auto lvl = multipermutation_level(y);
      REQUIRE(lvl.has_value());
      CHECK(*lvl <= 2);
      if (*lvl <= 1) {
        ++perm;
        CHECK(it.entry.m == s);
      }
    }
    CHECK(perm == 1);
  }
}

TEST_CASE("census members are pairwise non-isomorphic up to size 8") {
  for (Int s = 1; s <= 8; ++s) {
    auto corpus = fx::census_corpus(s);
    std::vector<FinSolution> same;
    for (auto& y : corpus)
      if (y.size() == static_cast<std::size_t>(s)) same.push_back(std::move(y));
    for (std::size_t i = 0; i < same.size(); ++i)
      for (std::size_t j = i + 1; j < same.size(); ++j)
        REQUIRE_FALSE(find_isomorphism_backtracking(same[i], same[j]).has_value());
  }
}

TEST_CASE("census members up to 8 cover every quotient of every S-solution") {
  // Each quotient of an S-solution is indecomposable of level <= 2, so it
  // must be isomorphic to exactly one census member of its size.
  for (auto const& p : fx::params_up_to(8))
    for (auto const& d : enumerate_congruences(p)) {
      auto y = quotient_by(p, d);
      std::size_t hits = 0;
      for (auto const& e : census_entries(static_cast<Int>(y.size())))
        hits += find_isomorphism(y, census_solution(e)).has_value();
      CHECK(hits == 1);
    }
}
