#pragma once

// Isomorphisms and congruences of finite solutions.

#include <cstddef>
#include <optional>
#include <vector>

#include "ybe/solution.hpp"

namespace ybe {

// phi[x] is the image of x; phi sigma_x = sigma'_{phi(x)} phi.
using Mapping = std::vector<Point>;

bool is_isomorphism(FinSolution const& a, FinSolution const& b, Mapping const& phi);

// Fast path when both solutions are indecomposable of level <= 2: the image
// of point 0 determines the map. Otherwise falls back to backtracking.
// Returns the lexicographically least isomorphism.
std::optional<Mapping> find_isomorphism(FinSolution const& a, FinSolution const& b);
// Backtracking with forward propagation only; no structural shortcuts.
std::optional<Mapping> find_isomorphism_backtracking(FinSolution const& a, FinSolution const& b);

// Every automorphism, ascending.
std::vector<Mapping> automorphisms(FinSolution const& s);
PermGroup automorphism_group(FinSolution const& s);

inline constexpr std::size_t kBruteCongruenceMax = 16;

// x1~x2 and y1~y2 imply sigma^e_{x1}(y1) ~ sigma^e_{x2}(y2), e = +-1.
bool is_congruence(FinSolution const& s, Partition const& p);
// Smallest congruence identifying every pair in `pairs`.
Partition congruence_closure(FinSolution const& s, std::vector<std::pair<Point, Point>> const& pairs);
// All congruences, ascending on label vectors. Throws TooLarge above max_size.
std::vector<Partition> brute_congruences(FinSolution const& s, std::size_t max_size = kBruteCongruenceMax);
// Solution on the classes of a congruence.
FinSolution quotient_by_partition(FinSolution const& s, Partition const& p);

}  // namespace ybe
