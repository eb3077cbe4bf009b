#include "ybe/intlat.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <string>
#include <utility>

#include "ybe/error.hpp"

namespace ybe {

namespace {

[[noreturn]] void overflow(char const* op) {
  throw Error(ErrorCode::Overflow, std::string("63-bit overflow in ") + op);
}

void add_row_multiple(Matrix& a, std::size_t dst, std::size_t src, Int q) {
  for (std::size_t j = 0; j < a[dst].size(); ++j)
    a[dst][j] = checked_sub(a[dst][j], checked_mul(q, a[src][j]));
}

void add_col_multiple(Matrix& a, std::size_t dst, std::size_t src, Int q) {
  for (auto& row : a) row[dst] = checked_sub(row[dst], checked_mul(q, row[src]));
}

void swap_cols(Matrix& a, std::size_t i, std::size_t j) {
  for (auto& row : a) std::swap(row[i], row[j]);
}

}  // namespace

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) overflow("add");
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) overflow("sub");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) overflow("mul");
  return r;
}

Matrix identity_matrix(std::size_t n) {
  Matrix m(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Matrix multiply(Matrix const& a, Matrix const& b) {
  std::size_t inner = b.size();
  std::size_t cols = inner == 0 ? 0 : b[0].size();
  Matrix out(a.size(), std::vector<Int>(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner) throw Error(ErrorCode::BadParams, "matrix shape mismatch");
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j)
        out[i][j] = checked_add(out[i][j], checked_mul(a[i][k], b[k][j]));
    }
  }
  return out;
}

Int determinant(Matrix const& m) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  Matrix a = m;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = checked_sub(checked_mul(a[i][j], a[k][k]), checked_mul(a[i][k], a[k][j]));
        a[i][j] = num / prev;  // exact by Sylvester's identity
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return checked_mul(sign, a[n - 1][n - 1]);
}

SmithForm smith_normal_form(Matrix const& m) {
  std::size_t rows = m.size();
  std::size_t cols = rows == 0 ? 0 : m[0].size();
  for (auto const& row : m)
    if (row.size() != cols) throw Error(ErrorCode::BadParams, "ragged matrix");
  SmithForm out{identity_matrix(rows), m, identity_matrix(cols)};
  Matrix& a = out.D;
  Matrix& u = out.U;
  Matrix& v = out.V;
  std::size_t diag = std::min(rows, cols);

  for (std::size_t t = 0; t < diag; ++t) {
    while (true) {
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pi == rows || std::llabs(a[i][j]) < std::llabs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) break;  // remaining block is zero
      if (pi != t) {
        std::swap(a[pi], a[t]);
        std::swap(u[pi], u[t]);
      }
      if (pj != t) {
        swap_cols(a, pj, t);
        swap_cols(v, pj, t);
      }
      bool clean = true;
      Int p = a[t][t];
      for (std::size_t i = t + 1; i < rows; ++i) {
        Int q = a[i][t] / p;
        if (q != 0) {
          add_row_multiple(a, i, t, q);
          add_row_multiple(u, i, t, q);
        }
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        Int q = a[t][j] / p;
        if (q != 0) {
          add_col_multiple(a, j, t, q);
          add_col_multiple(v, j, t, q);
        }
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % p != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      add_row_multiple(a, t, bad, -1);
      add_row_multiple(u, t, bad, -1);
    }
    if (a[t][t] < 0) {
      for (auto& x : a[t]) x = -x;
      for (auto& x : u[t]) x = -x;
    }
  }
  return out;
}

AbGroup::AbGroup(std::vector<Int> factors) : factors_(std::move(factors)) {
  order_ = 1;
  for (Int d : factors_) {
    if (d < 1) throw Error(ErrorCode::BadParams, "group factor must be >= 1");
    order_ = checked_mul(order_, d);
  }
}

AbElem AbGroup::zero() const { return AbElem{std::vector<Int>(factors_.size(), 0)}; }

AbElem AbGroup::reduce(std::vector<Int> coords) const {
  if (coords.size() != factors_.size())
    throw Error(ErrorCode::BadParams, "element has " + std::to_string(coords.size()) +
                                          " coordinates, group has " + std::to_string(factors_.size()));
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = emod(coords[i], factors_[i]);
  return AbElem{std::move(coords)};
}

AbElem AbGroup::add(AbElem const& a, AbElem const& b) const {
  AbElem r = a;
  for (std::size_t i = 0; i < factors_.size(); ++i) r.coords[i] = emod(a.coords[i] + b.coords[i], factors_[i]);
  return r;
}

AbElem AbGroup::sub(AbElem const& a, AbElem const& b) const {
  AbElem r = a;
  for (std::size_t i = 0; i < factors_.size(); ++i) r.coords[i] = emod(a.coords[i] - b.coords[i], factors_[i]);
  return r;
}

AbElem AbGroup::neg(AbElem const& a) const { return sub(zero(), a); }

AbElem AbGroup::scale(Int k, AbElem const& a) const {
  AbElem r = a;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    r.coords[i] = emod(checked_mul(emod(k, factors_[i]), a.coords[i]), factors_[i]);
  return r;
}

bool AbGroup::is_zero(AbElem const& a) const {
  return std::all_of(a.coords.begin(), a.coords.end(), [](Int x) { return x == 0; });
}

Int AbGroup::element_order(AbElem const& a) const {
  Int ord = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    Int d = factors_[i];
    Int g = std::gcd(emod(a.coords[i], d), d);
    ord = std::lcm(ord, d / g);
  }
  return ord;
}

std::size_t AbGroup::index_of(AbElem const& a) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    idx = idx * static_cast<std::size_t>(factors_[i]) + static_cast<std::size_t>(emod(a.coords[i], factors_[i]));
  return idx;
}

AbElem AbGroup::element_at(std::size_t index) const {
  AbElem r = zero();
  for (std::size_t i = factors_.size(); i-- > 0;) {
    auto d = static_cast<std::size_t>(factors_[i]);
    r.coords[i] = static_cast<Int>(index % d);
    index /= d;
  }
  return r;
}

std::vector<AbElem> AbGroup::elements() const {
  std::vector<AbElem> out;
  out.reserve(static_cast<std::size_t>(order_));
  for (std::size_t i = 0; i < static_cast<std::size_t>(order_); ++i) out.push_back(element_at(i));
  return out;
}

AbElem AbGroup::basis(std::size_t i) const {
  AbElem r = zero();
  r.coords.at(i) = factors_[i] == 1 ? 0 : 1;
  return r;
}

std::vector<Int> abelian_iso_type(AbGroup const& g) {
  std::size_t k = g.rank();
  Matrix m(k, std::vector<Int>(k, 0));
  for (std::size_t i = 0; i < k; ++i) m[i][i] = g.factors()[i];
  SmithForm s = smith_normal_form(m);
  std::vector<Int> out;
  for (std::size_t i = 0; i < k; ++i)
    if (s.D[i][i] > 1) out.push_back(s.D[i][i]);
  return out;
}

Subgroup::Subgroup(AbGroup parent, std::vector<std::size_t> element_indices, std::vector<AbElem> generators)
    : parent_(std::move(parent)), elements_(std::move(element_indices)), generators_(std::move(generators)) {
  std::sort(elements_.begin(), elements_.end());
}

std::vector<AbElem> Subgroup::elements() const {
  std::vector<AbElem> out;
  out.reserve(elements_.size());
  for (std::size_t i : elements_) out.push_back(parent_.element_at(i));
  return out;
}

bool Subgroup::contains(AbElem const& a) const {
  return std::binary_search(elements_.begin(), elements_.end(), parent_.index_of(a));
}

AbElem Subgroup::coset_rep(AbElem const& a) const {
  std::size_t best = parent_.order();
  for (std::size_t h : elements_) best = std::min(best, parent_.index_of(parent_.add(a, parent_.element_at(h))));
  return parent_.element_at(best);
}

namespace {

void check_cap(AbGroup const& g) {
  if (g.order() > kSubgroupOrderCap)
    throw Error(ErrorCode::TooLarge, "group order " + std::to_string(g.order()) + " exceeds subgroup cap");
}

// <S, g> as the union of cosets S + k·g.
std::vector<std::size_t> extend_by(AbGroup const& g, std::vector<std::size_t> const& base, AbElem const& x) {
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  for (std::size_t i : base) in[i] = 1;
  std::vector<std::size_t> out = base;
  AbElem step = x;
  while (!in[g.index_of(step)]) {
    for (std::size_t i : base) {
      std::size_t j = g.index_of(g.add(g.element_at(i), step));
      if (!in[j]) {
        in[j] = 1;
        out.push_back(j);
      }
    }
    step = g.add(step, x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Subgroup subgroup_generated(AbGroup const& g, std::span<const AbElem> gens) {
  check_cap(g);
  std::vector<std::size_t> elems{0};
  std::vector<AbElem> kept;
  for (auto const& x : gens) {
    AbElem r = g.reduce(x.coords);
    kept.push_back(r);
    elems = extend_by(g, elems, r);
  }
  return Subgroup(g, std::move(elems), std::move(kept));
}

std::vector<Subgroup> subgroups_containing(Subgroup const& base) {
  AbGroup const& g = base.parent();
  check_cap(g);
  std::vector<Subgroup> found{base};
  std::vector<std::vector<std::size_t>> keys{base.element_indices()};
  for (std::size_t head = 0; head < found.size(); ++head) {
    Subgroup cur = found[head];
    for (std::size_t x = 0; x < static_cast<std::size_t>(g.order()); ++x) {
      if (std::binary_search(cur.element_indices().begin(), cur.element_indices().end(), x)) continue;
      AbElem ex = g.element_at(x);
      auto elems = extend_by(g, cur.element_indices(), ex);
      if (std::find(keys.begin(), keys.end(), elems) != keys.end()) continue;
      auto gens = cur.generators();
      gens.push_back(ex);
      keys.push_back(elems);
      found.emplace_back(g, std::move(elems), std::move(gens));
    }
  }
  std::sort(found.begin(), found.end(), [](Subgroup const& a, Subgroup const& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.element_indices() < b.element_indices();
  });
  return found;
}

QuotientMap::QuotientMap(AbGroup source, AbGroup target, Matrix rows, std::vector<Int> moduli)
    : source_(std::move(source)), target_(std::move(target)), rows_(std::move(rows)), moduli_(std::move(moduli)) {}

AbElem QuotientMap::operator()(AbElem const& a) const {
  std::vector<Int> out(rows_.size(), 0);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Int acc = 0;
    for (std::size_t j = 0; j < a.coords.size(); ++j)
      acc = emod(checked_add(acc, checked_mul(rows_[i][j], a.coords[j])), moduli_[i]);
    out[i] = acc;
  }
  return AbElem{std::move(out)};
}

namespace {

// Keeps the rows of U whose invariant factor exceeds 1, reduced modulo it.
QuotientMap quotient_from_smith(AbGroup const& source, SmithForm const& s, std::size_t k) {
  Matrix rows;
  std::vector<Int> moduli;
  for (std::size_t i = 0; i < k; ++i) {
    Int d = s.D[i][i];
    if (d == 1) continue;
    if (d == 0) throw Error(ErrorCode::BadParams, "infinite quotient");
    std::vector<Int> row = s.U[i];
    for (auto& x : row) x = emod(x, d);
    rows.push_back(std::move(row));
    moduli.push_back(d);
  }
  return QuotientMap(source, AbGroup(moduli), std::move(rows), moduli);
}

}  // namespace

QuotientMap quotient_group(AbGroup const& g, Subgroup const& h) {
  std::size_t k = g.rank();
  auto const& gens = h.generators();
  Matrix m(k, std::vector<Int>(k + gens.size(), 0));
  for (std::size_t i = 0; i < k; ++i) {
    m[i][i] = g.factors()[i];
    for (std::size_t j = 0; j < gens.size(); ++j) m[i][k + j] = gens[j].coords[i];
  }
  return quotient_from_smith(g, smith_normal_form(m), k);
}

namespace {

void ordered_factorizations(Int n, std::size_t parts, std::vector<Int>& cur, std::vector<std::vector<Int>>& out) {
  if (parts == 0) {
    if (n == 1) out.push_back(cur);
    return;
  }
  for (Int d = 1; d <= n; ++d) {
    if (n % d) continue;
    cur.push_back(d);
    ordered_factorizations(n / d, parts - 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<Int>> diagonals(std::size_t rank, Int index) {
  std::vector<std::vector<Int>> out;
  if (index < 1) return out;
  std::vector<Int> cur;
  ordered_factorizations(index, rank, cur, out);
  return out;
}

void fill_offdiag(Matrix& h, std::size_t pos, std::vector<std::pair<std::size_t, std::size_t>> const& slots,
                  std::vector<Matrix>& out) {
  if (pos == slots.size()) {
    out.push_back(h);
    return;
  }
  auto [i, j] = slots[pos];
  for (Int v = 0; v < h[i][i]; ++v) {
    h[i][j] = v;
    fill_offdiag(h, pos + 1, slots, out);
  }
  h[i][j] = 0;
}

LatticeQuotient to_quotient(std::size_t rank, Matrix hnf) {
  SmithForm s = smith_normal_form(hnf);
  AbGroup free_part(std::vector<Int>(rank, 1));
  QuotientMap q = quotient_from_smith(free_part, s, rank);
  LatticeQuotient lq;
  lq.rank = rank;
  lq.hnf = std::move(hnf);
  lq.quotient = q.target();
  for (std::size_t j = 0; j < rank; ++j) {
    std::vector<Int> e(rank, 0);
    e[j] = 1;
    lq.gen_images.push_back(q(AbElem{std::move(e)}));
  }
  return lq;
}

}  // namespace

std::vector<LatticeQuotient> sublattices_of_index(std::size_t rank, Int index) {
  std::vector<Matrix> hnfs;
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = i + 1; j < rank; ++j) slots.emplace_back(i, j);
  for (auto const& d : diagonals(rank, index)) {
    Matrix h(rank, std::vector<Int>(rank, 0));
    for (std::size_t i = 0; i < rank; ++i) h[i][i] = d[i];
    fill_offdiag(h, 0, slots, hnfs);
  }
  std::sort(hnfs.begin(), hnfs.end());  // row-major lexicographic
  std::vector<LatticeQuotient> out;
  out.reserve(hnfs.size());
  for (auto& h : hnfs) out.push_back(to_quotient(rank, std::move(h)));
  return out;
}

Int count_sublattices(std::size_t rank, Int index) {
  Int total = 0;
  for (auto const& d : diagonals(rank, index)) {
    Int term = 1;
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t j = i + 1; j < rank; ++j) term = checked_mul(term, d[i]);
    total = checked_add(total, term);
  }
  return total;
}

}  // namespace ybe
