#include "ybe/census.hpp"

#include <algorithm>
#include <exception>
#include <string>

#include "ybe/error.hpp"
#include "ybe/quotients.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ybe {

namespace {

struct Task {
  Int m;
  LatticeQuotient lattice;
};

void check_size(Int size) {
  if (size < 1) throw Error(ErrorCode::BadParams, "census size must be >= 1");
  if (size > kMaxCensusSize) throw Error(ErrorCode::TooLarge, "census size above " + std::to_string(kMaxCensusSize));
}

std::vector<Task> tasks_for(Int size) {
  std::vector<Task> out;
  for (Int m = 1; m <= size; ++m) {
    if (size % m) continue;
    for (auto& lq : sublattices_of_index(static_cast<std::size_t>(m - 1), size / m)) out.push_back({m, std::move(lq)});
  }
  return out;
}

std::vector<AbElem> partial_sums(Task const& t) {
  AbGroup const& A = t.lattice.quotient;
  std::vector<AbElem> cbar{A.zero()};
  for (Int i = 1; i < t.m; ++i) cbar.push_back(A.add(cbar.back(), t.lattice.gen_images[static_cast<std::size_t>(i - 1)]));
  return cbar;
}

std::vector<CensusEntry> expand(Task const& t) {
  std::vector<CensusEntry> out;
  auto cbar = partial_sums(t);
  auto type = abelian_iso_type(t.lattice.quotient);
  for (auto const& r : t.lattice.quotient.elements()) out.push_back({t.m, t.lattice, cbar, r, type});
  return out;
}

CensusItem classify(CensusEntry e, CensusOptions const& opt) {
  CensusItem item{std::move(e), std::nullopt, false, false};
  if (!opt.materialize && !opt.verify) return item;
  FinSolution s = census_solution(item.entry);
  if (opt.verify) {
    if (!is_indecomposable(s)) throw Error(ErrorCode::BadParams, "census solution is decomposable");
    if (!is_mpl2_local(s)) throw Error(ErrorCode::NotLevel2, "census solution has level above 2");
  }
  ActionPredicates ap = action_predicates(permutation_group(s));
  item.abelian = ap.is_abelian;
  item.cyclic = ap.is_cyclic;
  item.solution = std::move(s);
  return item;
}

std::vector<CensusItem> run_task(Task const& t, CensusOptions const& opt) {
  std::vector<CensusItem> out;
  for (auto& e : expand(t)) out.push_back(classify(std::move(e), opt));
  return out;
}

std::vector<CensusItem> merge(std::vector<std::vector<CensusItem>>& parts) {
  std::vector<CensusItem> out;
  for (auto& p : parts)
    for (auto& item : p) out.push_back(std::move(item));
  return out;
}

}  // namespace

std::vector<CensusEntry> census_entries(Int size) {
  check_size(size);
  std::vector<CensusEntry> out;
  for (auto const& t : tasks_for(size))
    for (auto& e : expand(t)) out.push_back(std::move(e));
  return out;
}

FinSolution census_solution(CensusEntry const& e) {
  return twisted_quotient(e.lattice.quotient, e.m, e.cbar, e.rbar);
}

std::vector<CensusItem> census_serial(Int size, CensusOptions const& opt) {
  check_size(size);
  auto tasks = tasks_for(size);
  std::vector<std::vector<CensusItem>> parts;
  for (auto const& t : tasks) parts.push_back(run_task(t, opt));
  return merge(parts);
}

std::vector<CensusItem> census(Int size, CensusOptions const& opt) {
  check_size(size);
  auto tasks = tasks_for(size);
  std::vector<std::vector<CensusItem>> parts(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  auto count = static_cast<long long>(tasks.size());
#ifdef _OPENMP
  int threads = opt.jobs > 0 ? opt.jobs : omp_get_max_threads();
#endif
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (long long i = 0; i < count; ++i) {
    try {
      parts[static_cast<std::size_t>(i)] = run_task(tasks[static_cast<std::size_t>(i)], opt);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto const& e : errors)
    if (e) std::rethrow_exception(e);
  return merge(parts);
}

Int census_count(Int size) {
  check_size(size);
  Int total = 0;
  for (Int m = 1; m <= size; ++m)
    if (size % m == 0)
      total = checked_add(total, checked_mul(count_sublattices(static_cast<std::size_t>(m - 1), size / m), size / m));
  return total;
}

CensusReport census_report(Int size, int jobs) {
  CensusReport rep;
  rep.size = size;
  for (auto const& item : census(size, {true, false, jobs})) {
    ++rep.by_m[item.entry.m];
    ++rep.by_m_type[{item.entry.m, item.entry.iso_type}];
    ++rep.total;
    rep.abelian += item.abelian;
    rep.cyclic += item.cyclic;
  }
  return rep;
}

std::vector<CensusReport> table1_report(Int max_size, int jobs) {
  check_size(max_size);
  std::vector<CensusReport> out;
  for (Int s = 1; s <= max_size; ++s) out.push_back(census_report(s, jobs));
  return out;
}

namespace {

Int ipow(Int base, Int e) {
  Int r = 1;
  for (Int i = 0; i < e; ++i) r = checked_mul(r, base);
  return r;
}

}  // namespace

Int count_formula_elementary(Int p, Int k, Int m) {
  if (p < 2 || k < 0 || m < 1) throw Error(ErrorCode::BadParams, "need p prime, k >= 0, m >= 1");
  if (m <= k) return 0;
  // p^k times the Gaussian binomial [m-1, k]_p, built by the q-Pascal rule on
  // columns <= k so intermediates never exceed the result.
  std::vector<Int> row{1};
  for (Int n = 1; n <= m - 1; ++n) {
    Int top = std::min(n, k);
    std::vector<Int> next(static_cast<std::size_t>(top) + 1, 1);
    for (Int j = 1; j <= top && j < n; ++j)
      next[static_cast<std::size_t>(j)] =
          checked_add(row[static_cast<std::size_t>(j - 1)], checked_mul(ipow(p, j), row[static_cast<std::size_t>(j)]));
    row = std::move(next);
  }
  return checked_mul(ipow(p, k), row[static_cast<std::size_t>(k)]);
}

Int count_formula_cyclic(Int p, Int k, Int m) {
  if (p < 2 || k < 1 || m < 2) throw Error(ErrorCode::BadParams, "need p prime, k >= 1, m >= 2");
  return checked_mul(ipow(p, k * m - m - k + 2), (ipow(p, m - 1) - 1) / (p - 1));
}

Int power_of_two_lower_bound(Int s_exponent) {
  if (s_exponent < 1 || s_exponent > 6) throw Error(ErrorCode::BadParams, "exponent out of range");
  Int s = Int{1} << s_exponent;
  return (Int{1} << (s / 2)) - 1;
}

}  // namespace ybe
