// Command-line front end.
//
// Exit codes: 0 ok, 1 negative result (oracle failure, not isomorphic),
// 2 usage or malformed input, 3 internal cap exceeded.

#include <cstdio>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ybe/brace.hpp"
#include "ybe/census.hpp"
#include "ybe/error.hpp"
#include "ybe/io.hpp"
#include "ybe/morphisms.hpp"
#include "ybe/quotients.hpp"
#include "ybe/sconstruct.hpp"
#include "ybe/solution.hpp"

using namespace ybe;

namespace {

enum Exit { kOk = 0, kNegative = 1, kUsage = 2, kCap = 3 };

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::CapExceeded:
    case ErrorCode::TooLarge:
    case ErrorCode::Overflow:
      return kCap;
    case ErrorCode::BadParams:
    case ErrorCode::BadOrder:
    case ErrorCode::BadDescriptor:
    case ErrorCode::NotCycleBase:
    case ErrorCode::ParseError:
      return kUsage;
    default:
      return kNegative;
  }
}

void emit(std::string const& text, std::string const& out) {
  if (out.empty())
    std::cout << text;
  else
    write_file(out, text);
}

std::vector<Int> parse_factors(std::string const& text) {
  std::vector<Int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (std::exception const&) {
      throw Error(ErrorCode::ParseError, "bad factor '" + tok + "'");
    }
  }
  if (out.empty()) throw Error(ErrorCode::ParseError, "empty factor list");
  return out;
}

struct ParamFlags {
  std::string factors;
  Int n = 1;
  std::string c;
  std::string file;

  void add(CLI::App* app) {
    app->add_option("--factors", factors, "invariant factors of G, e.g. 4,2");
    app->add_option("--n", n, "cycle length n");
    app->add_option("--c", c, "c_0;...;c_{n-1}, coordinates comma-separated");
    app->add_option("--params", file, "SParams JSON file instead of --factors/--n/--c");
  }

  SParams get() const {
    if (!file.empty()) return params_from_json(Json::parse(read_file(file)));
    if (factors.empty() || c.empty()) throw Error(ErrorCode::ParseError, "need --factors, --n and --c or --params");
    SParams p{AbGroup(parse_factors(factors)), n, {}};
    p.c = parse_elements(p.G, c);
    validate(p);
    return p;
  }
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_verify(std::string const& path) {
  SolutionFile f = read_solution(read_file(path));
  FinSolution const& s = f.solution;
  auto lvl = multipermutation_level(s);
  std::cout << "size:            " << s.size() << "\n"
            << "non-degenerate:  ok\n"
            << "involutive:      ok\n"
            << "braid:           ok\n"
            << "square-free:     " << yes_no(is_square_free(s)) << "\n"
            << "level:           " << (lvl ? std::to_string(*lvl) : "none") << "\n"
            << "indecomposable:  " << yes_no(is_indecomposable(s)) << "\n"
            << "uniconnected:    " << yes_no(is_uniconnected(s)) << "\n"
            << "|G|:             " << permutation_group(s).order() << "\n"
            << "|Dis|:           " << displacement_group(s).order() << "\n";
  return kOk;
}

// Short, stable digest of an HNF for file names (FNV-1a).
std::string hnf_digest(Matrix const& h) {
  std::uint64_t x = 1469598103934665603ull;
  for (auto const& row : h)
    for (Int v : row) {
      x ^= static_cast<std::uint64_t>(v);
      x *= 1099511628211ull;
    }
  std::ostringstream ss;
  ss << std::hex << std::setw(8) << std::setfill('0') << (x & 0xffffffffull);
  return ss.str();
}

std::string type_text(std::vector<Int> const& t) {
  if (t.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "x" : "") + std::string("Z") + std::to_string(t[i]);
  return s;
}

void print_census(CensusReport const& r) {
  std::cout << "size " << r.size << "\n";
  std::cout << std::left << std::setw(6) << "m" << std::setw(14) << "A" << "count\n";
  for (auto const& [key, count] : r.by_m_type)
    std::cout << std::left << std::setw(6) << key.first << std::setw(14) << type_text(key.second) << count << "\n";
  std::cout << "total " << r.total << "\nabelian " << r.abelian << "\ncyclic " << r.cyclic << "\n";
}

int cmd_census(Int size, Int max, int jobs, std::string const& emit_dir, bool json) {
  if ((size > 0) == (max > 0)) throw Error(ErrorCode::ParseError, "give exactly one of --size or --max");
  Int lo = size > 0 ? size : 1, hi = size > 0 ? size : max;
  Json all = Json::array();
  for (Int s = lo; s <= hi; ++s) {
    CensusReport rep = census_report(s, jobs);
    if (json)
      all.push_back(census_to_json(rep));
    else
      print_census(rep);
    if (!emit_dir.empty()) {
      std::filesystem::create_directories(emit_dir);
      for (auto const& it : census(s, {true, false, jobs})) {
        auto const& e = it.entry;
        Json meta;
        meta["size"] = s;
        meta["m"] = e.m;
        meta["hnf"] = e.lattice.hnf;
        meta["A"] = e.lattice.quotient.factors();
        meta["rbar"] = e.rbar.coords;
        std::string name = "s" + std::to_string(s) + "_m" + std::to_string(e.m) + "_h" + hnf_digest(e.lattice.hnf) +
                           "_r" + std::to_string(e.lattice.quotient.index_of(e.rbar)) + ".json";
        write_file((std::filesystem::path(emit_dir) / name).string(), write_solution(*it.solution, meta));
      }
    }
  }
  if (json) std::cout << (size > 0 ? all[0] : all).dump(2) << "\n";
  return kOk;
}

int cmd_table1(Int max, int jobs, bool json) {
  auto rows = table1_report(max, jobs);
  if (json) {
    Json j = Json::array();
    for (auto const& r : rows) j.push_back(census_to_json(r));
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  auto line = [&](char const* label, auto get) {
    std::cout << std::left << std::setw(9) << label << std::right;
    for (auto const& r : rows) std::cout << std::setw(5) << get(r);
    std::cout << "\n";
  };
  line("n", [](CensusReport const& r) { return r.size; });
  line("total", [](CensusReport const& r) { return r.total; });
  line("abelian", [](CensusReport const& r) { return r.abelian; });
  line("cyclic", [](CensusReport const& r) { return r.cyclic; });
  return kOk;
}

int run(int argc, char** argv) {
  CLI::App app{"Indecomposable involutive solutions of multipermutation level <= 2"};
  app.require_subcommand(1);

  std::string verify_path;
  auto* verify = app.add_subcommand("verify", "check a solution file and print its invariants");
  verify->add_option("file", verify_path)->required();

  auto* construct = app.add_subcommand("construct", "build a solution file");
  construct->require_subcommand(1);
  std::string out;
  construct->add_option("-o,--out", out, "output file (default stdout)");
  ParamFlags sflags;
  auto* cs = construct->add_subcommand("s", "S(G x Z_n, c)");
  sflags.add(cs);
  Int mk = 2, mr = 1;
  auto* cm = construct->add_subcommand("module", "free Z_k-module family of rank r");
  cm->add_option("--k", mk)->required();
  cm->add_option("--r", mr)->required();
  Int bm = 3;
  auto* cd = construct->add_subcommand("brace-dihedral", "dihedral cyclic brace family on Z_{2^m}");
  cd->add_option("--m", bm)->required();
  auto* cq = construct->add_subcommand("brace-quaternion", "quaternion cyclic brace family on Z_{2^m}");
  cq->add_option("--m", bm)->required();
  std::string sd_factors, sd_alpha, sd_ga;
  Int sd_n = 1, sd_gi = 1;
  auto* csd = construct->add_subcommand("semidirect", "Rump solution of G x| Z_n with g = (ga, gi)");
  csd->add_option("--factors", sd_factors)->required();
  csd->add_option("--n", sd_n)->required();
  csd->add_option("--alpha", sd_alpha, "images of e_1;...;e_k")->required();
  csd->add_option("--ga", sd_ga, "group part of g")->required();
  csd->add_option("--gi", sd_gi, "Z_n part of g");

  ParamFlags cflags;
  bool cong_json = false;
  auto* cong = app.add_subcommand("congruences", "list every congruence theta(m, H, r)");
  cflags.add(cong);
  cong->add_flag("--json", cong_json);

  ParamFlags qflags;
  Int qm = 1;
  std::string qh, qr, qdesc;
  auto* quot = app.add_subcommand("quotient", "quotient of S(G x Z_n, c) by theta(m, H, r)");
  qflags.add(quot);
  quot->add_option("--m", qm);
  quot->add_option("--H", qh, "generators of H, ';'-separated (empty for {0})");
  quot->add_option("--r", qr);
  quot->add_option("--descriptor", qdesc, "descriptor JSON file instead of --m/--H/--r");
  quot->add_option("-o,--out", out);

  std::string iso_a, iso_b;
  auto* iso = app.add_subcommand("iso", "exit 0 iff the two solutions are isomorphic");
  iso->add_option("a", iso_a)->required();
  iso->add_option("b", iso_b)->required();

  Int cen_size = 0, cen_max = 0;
  int jobs = 0;
  std::string emit_dir;
  bool cen_json = false;
  auto* cen = app.add_subcommand("census", "count solutions of one size (--size) or of sizes 1..max (--max)");
  cen->add_option("--size", cen_size);
  cen->add_option("--max", cen_max);
  cen->add_option("--jobs", jobs, "worker threads (0 = default)");
  cen->add_option("--emit", emit_dir, "write every solution as JSON into this directory");
  cen->add_flag("--json", cen_json);

  Int t_max = 16;
  bool t_json = false;
  auto* t1 = app.add_subcommand("table1", "counts, abelian and cyclic subcounts for sizes 1..max");
  t1->add_option("--max", t_max);
  t1->add_option("--jobs", jobs);
  t1->add_flag("--json", t_json);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (*verify) return cmd_verify(verify_path);
  if (*construct) {
    if (*cs) {
      SParams p = sflags.get();
      Json meta;
      meta["kind"] = "s";
      meta["params"] = params_to_json(p);
      emit(write_solution(build_solution(p), meta), out);
    } else if (*cm) {
      SParams p = module_construction(mk, mr);
      Json meta;
      meta["kind"] = "module";
      meta["params"] = params_to_json(p);
      emit(write_solution(build_solution(p), meta), out);
    } else if (*cd || *cq) {
      Json meta;
      meta["kind"] = *cd ? "brace-dihedral" : "brace-quaternion";
      meta["m"] = bm;
      emit(write_solution(cyclic_brace_family(*cd ? CyclicKind::Dihedral : CyclicKind::Quaternion, bm), meta), out);
    } else {
      AbGroup g(parse_factors(sd_factors));
      auto alpha = parse_elements(g, sd_alpha);
      auto ga = parse_elements(g, sd_ga);
      if (ga.size() != 1) throw Error(ErrorCode::ParseError, "--ga must be one element");
      Brace b = semidirect_trivial(g, sd_n, alpha);
      auto gpt = static_cast<Point>(g.index_of(ga[0]) * static_cast<std::size_t>(sd_n) +
                                    static_cast<std::size_t>(emod(sd_gi, sd_n)));
      Json meta;
      meta["kind"] = "semidirect";
      meta["factors"] = g.factors();
      meta["n"] = sd_n;
      meta["g"] = gpt;
      emit(write_solution(rump_solution(b, gpt), meta), out);
    }
    return kOk;
  }
  if (*cong) {
    SParams p = cflags.get();
    auto ds = enumerate_congruences(p);
    if (cong_json) {
      Json j = Json::array();
      for (auto const& d : ds) j.push_back(descriptor_to_json(d));
      std::cout << j.dump(2) << "\n";
    } else {
      for (auto const& d : ds)
        std::cout << format_descriptor(d) << "  size=" << d.m * d.H.index() << "\n";
    }
    return kOk;
  }
  if (*quot) {
    SParams p = qflags.get();
    CongruenceDescriptor d;
    if (!qdesc.empty()) {
      d = descriptor_from_json(p, Json::parse(read_file(qdesc)));
    } else {
      auto gens = qh.empty() ? std::vector<AbElem>{} : parse_elements(p.G, qh);
      auto r = qr.empty() ? std::vector<AbElem>{p.G.zero()} : parse_elements(p.G, qr);
      if (r.size() != 1) throw Error(ErrorCode::ParseError, "--r must be one element");
      d = make_descriptor(p, qm, subgroup_generated(p.G, gens), r[0]);
    }
    Json meta;
    meta["kind"] = "quotient";
    meta["params"] = params_to_json(p);
    meta["descriptor"] = descriptor_to_json(d);
    emit(write_solution(quotient_by(p, d), meta), out);
    return kOk;
  }
  if (*iso) {
    auto a = read_solution(read_file(iso_a)).solution;
    auto b = read_solution(read_file(iso_b)).solution;
    auto phi = find_isomorphism(a, b);
    if (!phi) {
      std::cout << "not isomorphic\n";
      return kNegative;
    }
    std::cout << "isomorphic:";
    for (Point x : *phi) std::cout << " " << x;
    std::cout << "\n";
    return kOk;
  }
  if (*cen) return cmd_census(cen_size, cen_max, jobs, emit_dir, cen_json);
  if (*t1) return cmd_table1(t_max, jobs, t_json);
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (Error const& e) {
    std::cerr << "error: " << e.what();
    if (!e.witness().empty()) {
      std::cerr << " [witness";
      for (auto w : e.witness()) std::cerr << " " << w;
      std::cerr << "]";
    }
    std::cerr << "\n";
    return exit_for(e.code());
  } catch (Json::exception const& e) {
    std::cerr << "error: ParseError: " << e.what() << "\n";
    return kUsage;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCap;
  }
}
