#include "ybe/brace.hpp"

#include <algorithm>
#include <string>

#include "ybe/error.hpp"

namespace ybe {

namespace {

bool rows_are_permutations(Table const& t) {
  std::size_t n = t.size();
  for (auto const& row : t) {
    if (row.size() != n) return false;
    std::vector<char> seen(n, 0);
    for (Point v : row) {
      if (v >= n || seen[v]) return false;
      seen[v] = 1;
    }
  }
  return true;
}

BraceCheck fail(Point a, Point b, Point c) { return {false, {a, b, c}}; }

}  // namespace

BraceCheck verify_brace(Brace const& br) {
  auto n = static_cast<Point>(br.size());
  auto const& A = br.add;
  auto const& M = br.mul;
  if (M.size() != n || br.zero >= n || !rows_are_permutations(A) || !rows_are_permutations(M)) return fail(0, 0, 0);
  for (Point a = 0; a < n; ++a) {
    if (A[br.zero][a] != a || M[br.zero][a] != a || M[a][br.zero] != a) return fail(a, br.zero, br.zero);
    for (Point b = 0; b < n; ++b)
      if (A[a][b] != A[b][a]) return fail(a, b, 0);
  }
  // columns of o are bijections too
  for (Point b = 0; b < n; ++b) {
    std::vector<char> seen(n, 0);
    for (Point a = 0; a < n; ++a) {
      if (seen[M[a][b]]) return fail(a, b, 0);
      seen[M[a][b]] = 1;
    }
  }
  for (Point a = 0; a < n; ++a)
    for (Point b = 0; b < n; ++b)
      for (Point c = 0; c < n; ++c) {
        if (A[A[a][b]][c] != A[a][A[b][c]]) return fail(a, b, c);
        if (M[M[a][b]][c] != M[a][M[b][c]]) return fail(a, b, c);
        if (A[M[a][b]][M[a][c]] != A[M[a][A[b][c]]][a]) return fail(a, b, c);
      }
  return {};
}

Point brace_neg(Brace const& b, Point a) {
  for (Point x = 0; x < b.size(); ++x)
    if (b.add[a][x] == b.zero) return x;
  throw Error(ErrorCode::BadParams, "no additive inverse");
}

Point brace_inverse(Brace const& b, Point a) {
  for (Point x = 0; x < b.size(); ++x)
    if (b.mul[a][x] == b.zero) return x;
  throw Error(ErrorCode::BadParams, "no multiplicative inverse");
}

Perm lambda_map(Brace const& b, Point a) {
  Point na = brace_neg(b, a);
  std::vector<Point> img(b.size());
  for (Point x = 0; x < b.size(); ++x) img[x] = b.add[b.mul[a][x]][na];
  return Perm(std::move(img));
}

std::vector<Point> socle(Brace const& b) {
  std::vector<Point> out;
  for (Point a = 0; a < b.size(); ++a)
    if (lambda_map(b, a).is_identity()) out.push_back(a);
  return out;
}

Brace trivial_brace(AbGroup const& g) {
  auto n = static_cast<std::size_t>(g.order());
  Brace b;
  b.add.assign(n, std::vector<Point>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      b.add[x][y] = static_cast<Point>(g.index_of(g.add(g.element_at(x), g.element_at(y))));
  b.mul = b.add;
  b.zero = 0;
  return b;
}

namespace {

struct Linear {
  AbGroup const& g;
  std::vector<AbElem> const& images;
  AbElem operator()(AbElem const& x) const {
    AbElem out = g.zero();
    for (std::size_t k = 0; k < g.rank(); ++k) out = g.add(out, g.scale(x.coords[k], images[k]));
    return out;
  }
};

}  // namespace

Brace semidirect_trivial(AbGroup const& g, Int n, std::vector<AbElem> const& alpha_images) {
  if (n < 1) throw Error(ErrorCode::BadParams, "n must be >= 1");
  if (alpha_images.size() != g.rank()) throw Error(ErrorCode::BadParams, "alpha needs one image per generator");
  std::vector<AbElem> imgs;
  for (auto const& a : alpha_images) imgs.push_back(g.reduce(a.coords));
  for (std::size_t k = 0; k < g.rank(); ++k)
    if (!g.is_zero(g.scale(g.factors()[k], imgs[k])))
      throw Error(ErrorCode::BadOrder, "alpha is not well defined on the invariant factors");
  Linear alpha{g, imgs};
  auto elems = g.elements();
  // powers[i][x] = index of alpha^i(x)
  auto order = static_cast<std::size_t>(g.order());
  std::vector<std::vector<std::size_t>> powers(static_cast<std::size_t>(n) + 1, std::vector<std::size_t>(order));
  for (std::size_t x = 0; x < order; ++x) powers[0][x] = x;
  for (Int i = 1; i <= n; ++i)
    for (std::size_t x = 0; x < order; ++x)
      powers[static_cast<std::size_t>(i)][x] = g.index_of(alpha(elems[powers[static_cast<std::size_t>(i - 1)][x]]));
  std::vector<char> hit(order, 0);
  for (std::size_t x = 0; x < order; ++x) hit[powers[1][x]] = 1;
  if (std::count(hit.begin(), hit.end(), 1) != static_cast<long>(order))
    throw Error(ErrorCode::BadOrder, "alpha is not bijective");
  for (std::size_t x = 0; x < order; ++x)
    if (powers[static_cast<std::size_t>(n)][x] != x) throw Error(ErrorCode::BadOrder, "alpha^n is not the identity");

  auto nn = static_cast<std::size_t>(n);
  std::size_t N = order * nn;
  Brace b;
  b.add.assign(N, std::vector<Point>(N));
  b.mul.assign(N, std::vector<Point>(N));
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t i = 0; i < nn; ++i)
      for (std::size_t c = 0; c < order; ++c)
        for (std::size_t j = 0; j < nn; ++j) {
          std::size_t x = a * nn + i, y = c * nn + j, k = (i + j) % nn;
          b.add[x][y] = static_cast<Point>(g.index_of(g.add(elems[a], elems[c])) * nn + k);
          b.mul[x][y] = static_cast<Point>(g.index_of(g.add(elems[a], elems[powers[i][c]])) * nn + k);
        }
  b.zero = 0;
  return b;
}

FinSolution rump_solution(Brace const& b, Point g) {
  std::size_t n = b.size();
  std::vector<Perm> lambdas;
  for (Point a = 0; a < n; ++a) lambdas.push_back(lambda_map(b, a));
  std::vector<Point> orb = orbit(lambdas, g);
  // additive span of the orbit
  std::vector<char> in(n, 0);
  std::vector<Point> span{b.zero};
  in[b.zero] = 1;
  for (std::size_t head = 0; head < span.size(); ++head)
    for (Point o : orb) {
      Point y = b.add[span[head]][o];
      if (!in[y]) {
        in[y] = 1;
        span.push_back(y);
      }
    }
  if (span.size() != n)
    throw Error(ErrorCode::NotCycleBase, "lambda orbit of " + std::to_string(g) + " does not generate (B,+)");
  Table sigma(n, std::vector<Point>(n));
  for (Point x = 0; x < n; ++x) {
    Point u = brace_inverse(b, lambdas[x](g));
    for (Point y = 0; y < n; ++y) sigma[x][y] = b.mul[u][y];
  }
  FinSolution s = FinSolution::from_sigma(sigma);
  if (!is_uniconnected(s)) throw Error(ErrorCode::NotCycleBase, "resulting solution is not uniconnected");
  return s;
}

namespace {

Int pow2(Int m) {
  if (m < 1 || m > 20) throw Error(ErrorCode::BadParams, "exponent out of range");
  return Int{1} << m;
}

Int cyclic_q(CyclicKind kind, Int N) { return kind == CyclicKind::Dihedral ? N - 1 : N / 2 - 1; }

}  // namespace

Brace cyclic_brace(CyclicKind kind, Int m) {
  if (m < 3) throw Error(ErrorCode::BadParams, "cyclic brace family needs m >= 3");
  Int N = pow2(m);
  Int q = cyclic_q(kind, N);
  Brace b;
  auto n = static_cast<std::size_t>(N);
  b.add.assign(n, std::vector<Point>(n));
  b.mul.assign(n, std::vector<Point>(n));
  for (Int a = 0; a < N; ++a)
    for (Int c = 0; c < N; ++c) {
      b.add[a][c] = static_cast<Point>(emod(a + c, N));
      b.mul[a][c] = static_cast<Point>(emod(a + (a % 2 ? q : 1) * c, N));
    }
  return b;
}

FinSolution cyclic_brace_family(CyclicKind kind, Int m) {
  if (m < 3) throw Error(ErrorCode::BadParams, "cyclic brace family needs m >= 3");
  Int N = pow2(m);
  Int h = N / 2;
  Table sigma(static_cast<std::size_t>(N), std::vector<Point>(static_cast<std::size_t>(N)));
  for (Int a = 0; a < N; ++a)
    for (Int b = 0; b < N; ++b) {
      Int v;
      if (kind == CyclicKind::Dihedral)
        v = a % 2 == 0 ? 1 - b : -1 - b;
      else
        v = a % 2 == 0 ? (1 - h) * (1 - b) : -1 + (h - 1) * b;
      sigma[a][b] = static_cast<Point>(emod(v, N));
    }
  return FinSolution::from_sigma(sigma);
}

}  // namespace ybe
