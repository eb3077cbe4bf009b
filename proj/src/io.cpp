#include "ybe/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ybe/error.hpp"

namespace ybe {

namespace {

[[noreturn]] void parse_fail(std::string const& what) { throw Error(ErrorCode::ParseError, what); }

std::vector<Int> int_list(Json const& j, char const* what) {
  if (!j.is_array()) parse_fail(std::string(what) + " must be an array");
  std::vector<Int> out;
  for (auto const& v : j) {
    if (!v.is_number_integer()) parse_fail(std::string(what) + " must hold integers");
    out.push_back(v.get<Int>());
  }
  return out;
}

std::vector<AbElem> elem_list(AbGroup const& g, Json const& j, char const* what) {
  if (!j.is_array()) parse_fail(std::string(what) + " must be an array of elements");
  std::vector<AbElem> out;
  for (auto const& e : j) {
    auto coords = int_list(e, what);
    if (coords.size() != g.rank()) parse_fail(std::string(what) + " element has the wrong rank");
    out.push_back(g.reduce(std::move(coords)));
  }
  return out;
}

Json coords_json(AbElem const& a) { return Json(a.coords); }

std::string coords_text(AbElem const& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.coords.size(); ++i) s += (i ? "," : "") + std::to_string(a.coords[i]);
  return s + ")";
}

}  // namespace

std::string write_solution(FinSolution const& s, Json const& meta) {
  std::ostringstream out;
  out << "{\n  \"size\": " << s.size() << ",\n  \"sigma\": [";
  for (Point x = 0; x < s.size(); ++x) {
    out << (x ? ",\n    [" : "\n    [");
    auto const& row = s.sigma(x).images();
    for (std::size_t y = 0; y < row.size(); ++y) out << (y ? "," : "") << row[y];
    out << "]";
  }
  out << (s.size() ? "\n  ]" : "]");
  if (!meta.is_null()) out << ",\n  \"meta\": " << meta.dump();
  out << "\n}\n";
  return out.str();
}

SolutionFile read_solution(std::string const& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (Json::parse_error const& e) {
    parse_fail(e.what());
  }
  if (!j.is_object() || !j.contains("size") || !j.contains("sigma")) parse_fail("solution needs size and sigma");
  if (!j["size"].is_number_unsigned()) parse_fail("size must be a nonnegative integer");
  auto n = j["size"].get<std::size_t>();
  if (!j["sigma"].is_array() || j["sigma"].size() != n) parse_fail("sigma must have size rows");
  Table sigma;
  for (auto const& row : j["sigma"]) {
    auto vals = int_list(row, "sigma row");
    std::vector<Point> r;
    for (Int v : vals) {
      if (v < 0 || static_cast<std::size_t>(v) >= std::max<std::size_t>(n, 1)) {
        r.push_back(static_cast<Point>(n));  // rejected below as NotPermutationRow
        continue;
      }
      r.push_back(static_cast<Point>(v));
    }
    sigma.push_back(std::move(r));
  }
  Json meta = j.contains("meta") ? j["meta"] : Json(nullptr);
  return {FinSolution::from_sigma(sigma), std::move(meta)};
}

std::string read_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) parse_fail("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(std::string const& path, std::string const& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
  out << text;
}

Json params_to_json(SParams const& p) {
  Json j;
  j["factors"] = p.G.factors();
  j["n"] = p.n;
  Json c = Json::array();
  for (auto const& e : p.c) c.push_back(coords_json(e));
  j["c"] = std::move(c);
  return j;
}

SParams params_from_json(Json const& j) {
  if (!j.is_object() || !j.contains("factors") || !j.contains("n") || !j.contains("c"))
    parse_fail("params need factors, n and c");
  if (!j["n"].is_number_integer()) parse_fail("n must be an integer");
  SParams p{AbGroup(int_list(j["factors"], "factors")), j["n"].get<Int>(), {}};
  p.c = elem_list(p.G, j["c"], "c");
  validate(p);
  return p;
}

Json descriptor_to_json(CongruenceDescriptor const& d) {
  Json j;
  j["m"] = d.m;
  Json h = Json::array();
  for (auto const& e : d.H.elements()) h.push_back(coords_json(e));
  j["H"] = std::move(h);
  j["r"] = coords_json(d.r);
  return j;
}

CongruenceDescriptor descriptor_from_json(SParams const& p, Json const& j) {
  if (!j.is_object() || !j.contains("m") || !j.contains("H") || !j.contains("r"))
    parse_fail("descriptor needs m, H and r");
  if (!j["m"].is_number_integer()) parse_fail("m must be an integer");
  auto gens = elem_list(p.G, j["H"], "H");
  auto r = int_list(j["r"], "r");
  if (r.size() != p.G.rank()) parse_fail("r has the wrong rank");
  return make_descriptor(p, j["m"].get<Int>(), subgroup_generated(p.G, gens), AbElem{std::move(r)});
}

std::string format_descriptor(CongruenceDescriptor const& d) {
  std::string h = "{";
  bool first = true;
  for (auto const& e : d.H.elements()) {
    h += (first ? "" : ",") + coords_text(e);
    first = false;
  }
  return "theta(m=" + std::to_string(d.m) + ", H=" + h + "}, r=" + coords_text(d.r) + ")";
}

Json census_to_json(CensusReport const& r) {
  Json j;
  j["size"] = r.size;
  Json by_m = Json::object();
  for (auto const& [m, count] : r.by_m) by_m[std::to_string(m)] = count;
  j["by_m"] = std::move(by_m);
  j["total"] = r.total;
  j["abelian"] = r.abelian;
  j["cyclic"] = r.cyclic;
  Json br = Json::array();
  for (auto const& [key, count] : r.by_m_type) {
    Json row;
    row["m"] = key.first;
    row["type"] = key.second;
    row["count"] = count;
    br.push_back(std::move(row));
  }
  j["breakdown"] = std::move(br);
  return j;
}

}  // namespace ybe
