#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "fixtures.hpp"
#include "ybe/error.hpp"

using namespace ybe;

namespace {

bool respects(FinSolution const& a, FinSolution const& b, Mapping const& phi) {
  for (Point x = 0; x < a.size(); ++x)
    for (Point y = 0; y < a.size(); ++y)
      if (phi[a.sigma(x)(y)] != b.sigma(phi[x])(phi[y])) return false;
  return true;
}

// All automorphisms by scanning every bijection.
std::vector<Mapping> brute_automorphisms(FinSolution const& s) {
  Mapping phi(s.size());
  std::iota(phi.begin(), phi.end(), Point{0});
  std::vector<Mapping> out;
  do {
    if (respects(s, s, phi)) out.push_back(phi);
  } while (std::next_permutation(phi.begin(), phi.end()));
  return out;
}

// Every set partition as a restricted growth string.
std::vector<Partition> all_partitions(std::size_t n) {
  std::vector<Partition> out;
  Partition cur(n, 0);
  std::function<void(std::size_t, Point)> rec = [&](std::size_t i, Point blocks) {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (Point b = 0; b <= blocks; ++b) {
      cur[i] = b;
      rec(i + 1, std::max<Point>(blocks, b + 1));
    }
  };
  if (n == 0)
    out.push_back(cur);
  else
    rec(1, 1);
  return out;
}

bool congruence_oracle(FinSolution const& s, Partition const& p) {
  std::size_t n = s.size();
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

bool refines(Partition const& fine, Partition const& coarse) {
  for (std::size_t x = 0; x < fine.size(); ++x)
    for (std::size_t y = 0; y < fine.size(); ++y)
      if (fine[x] == fine[y] && coarse[x] != coarse[y]) return false;
  return true;
}

std::vector<FinSolution> small_corpus(std::size_t max_size) {
  std::vector<FinSolution> out;
  for (auto& s : fx::census_corpus(static_cast<Int>(max_size))) out.push_back(std::move(s));
  for (auto const& p : fx::params_up_to(max_size)) out.push_back(build_solution(p));
  for (auto& s : fx::fixture_solutions())
    if (s.size() <= max_size) out.push_back(std::move(s));
  if (max_size >= 8) out.push_back(fx::level3());
  for (std::size_t n = 2; n <= std::min<std::size_t>(max_size, 4); ++n) out.push_back(trivial_solution(n));
  return out;
}

}  // namespace

TEST_CASE("identity is found for s vs s") {
  for (auto const& s : fx::fixture_solutions()) {
    auto phi = find_isomorphism(s, s);
    REQUIRE(phi.has_value());
    Mapping id(s.size());
    std::iota(id.begin(), id.end(), Point{0});
    CHECK(*phi == id);
  }
}

TEST_CASE("S(Z_m x Z_2, (0,1)) and S(Z_m x Z_2, (0,g)) are isomorphic for units g") {
  for (Int m : {3, 5, 6, 8})
    for (Int g = 1; g < m; ++g) {
      if (std::gcd(g, m) != 1) continue;
      auto a = build_solution(fx::params({m}, 2, "0;1"));
      auto b = build_solution(fx::params({m}, 2, "0;" + std::to_string(g)));
      auto phi = find_isomorphism(a, b);
      REQUIRE(phi.has_value());
      CHECK(is_isomorphism(a, b, *phi));
      CHECK(respects(a, b, *phi));
    }
}

TEST_CASE("the p+1 solutions S(Z_3 x Z_3, c) are pairwise non-isomorphic") {
  std::vector<FinSolution> sols;
  for (auto c : {"0;0;1", "0;1;0", "0;1;1", "0;1;2"}) sols.push_back(build_solution(fx::params({3}, 3, c)));
  for (std::size_t i = 0; i < sols.size(); ++i)
    for (std::size_t j = 0; j < sols.size(); ++j) {
      CHECK(find_isomorphism(sols[i], sols[j]).has_value() == (i == j));
      CHECK(find_isomorphism_backtracking(sols[i], sols[j]).has_value() == (i == j));
    }
  // every other generating c falls into one of these four classes
  for (auto const& p : fx::all_params(AbGroup({3}), 3)) {
    auto s = build_solution(p);
    std::size_t hits = 0;
    for (auto const& t : sols) hits += find_isomorphism(s, t).has_value();
    CHECK(hits == 1);
  }
}

TEST_CASE("isomorphisms of relabeled solutions") {
  std::mt19937 rng(3);
  for (auto const& s : fx::fixture_solutions()) {
    auto phi = fx::random_mapping(s.size(), rng);
    auto t = fx::relabel(s, phi);
    auto found = find_isomorphism(s, t);
    REQUIRE(found.has_value());
    CHECK(respects(s, t, *found));
    if (s.size() <= 12) CHECK(*found == *find_isomorphism_backtracking(s, t));
  }
  // non-indecomposable inputs take the backtracking path
  auto u = trivial_solution(3);
  auto phi = find_isomorphism(u, u);
  REQUIRE(phi.has_value());
  CHECK(respects(u, u, *phi));
  CHECK_FALSE(find_isomorphism(trivial_solution(3), fx::cycle_solution(3)).has_value());
  CHECK_FALSE(find_isomorphism(trivial_solution(3), trivial_solution(4)).has_value());
}

TEST_CASE("find_isomorphism is symmetric and agrees with backtracking up to size 8") {
  auto corpus = small_corpus(8);
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (std::size_t j = 0; j < corpus.size(); ++j) {
      if (corpus[i].size() != corpus[j].size()) continue;
      auto f = find_isomorphism(corpus[i], corpus[j]);
      auto g = find_isomorphism(corpus[j], corpus[i]);
      auto b = find_isomorphism_backtracking(corpus[i], corpus[j]);
      REQUIRE(f.has_value() == g.has_value());
      REQUIRE(f.has_value() == b.has_value());
      if (f) {
        CHECK(respects(corpus[i], corpus[j], *f));
        CHECK(*f == *b);
      }
      ++pairs;
    }
  CHECK(pairs > 1000);
}

TEST_CASE("automorphism group examples") {
  CHECK(automorphism_group(trivial_solution(1)).order() == 1);

  auto contr = automorphism_group(build_solution(fx::contr()));
  CHECK(contr.order() == 12);
  CHECK(action_predicates(contr).is_regular);

  auto y = automorphism_group(quotient_by(fx::contr(), fx::contr_theta()));
  CHECK(y.order() == 6);
  CHECK(action_predicates(y).is_regular);
}

TEST_CASE("automorphisms agree with a scan over all bijections") {
  for (auto const& s : small_corpus(7)) {
    auto a = automorphisms(s);
    CHECK(a == brute_automorphisms(s));
  }
  CHECK(automorphisms(trivial_solution(4)).size() == 24);
}

TEST_CASE("brute_congruences examples") {
  CHECK(brute_congruences(trivial_solution(1)).size() == 1);
  CHECK(brute_congruences(build_solution(fx::contr())).size() == 7);
  for (std::size_t p : {2, 3, 5, 7, 11, 13}) CHECK(brute_congruences(fx::cycle_solution(p)).size() == 2);
  CHECK(brute_congruences(fx::cycle_solution(4)).size() == 3);
  try {
    brute_congruences(fx::cycle_solution(17));
    FAIL("size guard not enforced");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::TooLarge);
  }
  CHECK(brute_congruences(fx::cycle_solution(17), 17).size() == 2);
}

TEST_CASE("brute_congruences equals a scan over all partitions up to size 7") {
  for (auto const& s : small_corpus(7)) {
    std::vector<Partition> expected;
    for (auto const& p : all_partitions(s.size()))
      if (congruence_oracle(s, p)) expected.push_back(p);
    std::sort(expected.begin(), expected.end());
    auto got = brute_congruences(s);
    CHECK(got == expected);
    for (auto const& p : all_partitions(s.size())) REQUIRE(is_congruence(s, p) == congruence_oracle(s, p));
  }
}

TEST_CASE("congruence closure is the least congruence containing the pairs") {
  for (auto const& s : small_corpus(8)) {
    auto all = brute_congruences(s);
    for (Point x = 0; x < s.size(); ++x)
      for (Point y = x + 1; y < s.size(); ++y) {
        auto c = congruence_closure(s, {{x, y}});
        CHECK(c[x] == c[y]);
        CHECK(congruence_oracle(s, c));
        CHECK(std::binary_search(all.begin(), all.end(), c));
        for (auto const& other : all)
          if (other[x] == other[y]) CHECK(refines(c, other));
      }
  }
}

TEST_CASE("quotients by partitions") {
  auto s = build_solution(fx::contr());
  for (auto const& p : brute_congruences(s)) {
    auto q = quotient_by_partition(s, p);
    CHECK(q.size() == class_count(p));
    for (Point x = 0; x < s.size(); ++x)
      for (Point y = 0; y < s.size(); ++y) CHECK(q.sigma(p[x])(p[y]) == p[s.sigma(x)(y)]);
  }
  Partition bad{0, 1, 0, 2, 2, 2, 2, 2, 2, 2, 2, 2};
  REQUIRE_FALSE(congruence_oracle(s, bad));
  try {
    quotient_by_partition(s, bad);
    FAIL("non-congruence accepted");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::BadDescriptor);
  }
}
