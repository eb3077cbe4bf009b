#pragma once

// JSON file formats.
//
// Solution:   {"size": N, "sigma": [[...], ...], "meta": {...}}
//             written with one sigma row per line in point order; "meta" is
//             optional and keeps its key order, so read -> write is
//             byte-identical for files this writer produced.
// SParams:    {"factors": [...], "n": n, "c": [[...], ...]}
// Descriptor: {"m": m, "H": [[...], ...], "r": [...]}, H listed by elements
//             ascending (any generating list is accepted on input).
// Census:     {"size": s, "by_m": {"m": count, ...}, "total": t,
//              "abelian": a, "cyclic": c, "breakdown": [{"m", "type", "count"}]}

#include <string>

#include "json.hpp"
#include "ybe/census.hpp"
#include "ybe/quotients.hpp"
#include "ybe/sconstruct.hpp"
#include "ybe/solution.hpp"

namespace ybe {

using Json = nlohmann::ordered_json;

struct SolutionFile {
  FinSolution solution;
  Json meta;  // null when absent
};

std::string write_solution(FinSolution const& s, Json const& meta = nullptr);
// Throws ParseError on malformed input; validation errors pass through.
SolutionFile read_solution(std::string const& text);

std::string read_file(std::string const& path);
void write_file(std::string const& path, std::string const& text);

Json params_to_json(SParams const& p);
SParams params_from_json(Json const& j);

Json descriptor_to_json(CongruenceDescriptor const& d);
CongruenceDescriptor descriptor_from_json(SParams const& p, Json const& j);
// "theta(m=3, H={(0,0),(0,3)}, r=(0,1))".
std::string format_descriptor(CongruenceDescriptor const& d);

Json census_to_json(CensusReport const& r);

}  // namespace ybe
