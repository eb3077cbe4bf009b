#include "ybe/sconstruct.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "ybe/error.hpp"

namespace ybe {

void validate(SParams const& p) {
  if (p.n < 1) throw Error(ErrorCode::BadParams, "n must be >= 1");
  if (p.c.size() != static_cast<std::size_t>(p.n))
    throw Error(ErrorCode::BadParams, "c must have exactly n entries");
  for (auto const& ci : p.c)
    if (ci.coords.size() != p.G.rank() || p.G.reduce(ci.coords) != ci)
      throw Error(ErrorCode::BadParams, "c entry is not a reduced element of G");
  if (!p.G.is_zero(p.c[0])) throw Error(ErrorCode::BadParams, "c_0 must be 0");
  if (subgroup_generated(p.G, p.c).order() != static_cast<std::size_t>(p.G.order()))
    throw Error(ErrorCode::BadParams, "c does not generate G");
}

AbElem c_matrix(SParams const& p, Int i, Int j) { return p.G.sub(p.at(i - j), p.at(-j)); }

FinSolution build_solution(SParams const& p) {
  validate(p);
  if (p.size() > kMaxBuildSize) throw Error(ErrorCode::TooLarge, "G x Z_n exceeds the build cap");
  auto elems = p.G.elements();
  std::size_t N = p.size();
  Table sigma(N, std::vector<Point>(N));
  Table tau(N, std::vector<Point>(N));
  for (auto const& a : elems)
    for (Int i = 0; i < p.n; ++i) {
      Point x = s_point(p, a, i);
      for (auto const& b : elems)
        for (Int j = 0; j < p.n; ++j) {
          Point y = s_point(p, b, j);
          sigma[x][y] = s_point(p, p.G.add(b, p.G.sub(p.at(i - j - 1), p.at(-j - 1))), j + 1);
          // tau_x(y), stored as tau[x][y]
          tau[x][y] = s_point(p, p.G.add(p.G.sub(b, p.at(i - j + 1)), p.at(-j)), j - 1);
        }
    }
  return FinSolution::from_sigma(sigma, tau);
}

TwoReductive two_reductive_layer(SParams const& p) {
  validate(p);
  if (p.size() > kMaxBuildSize) throw Error(ErrorCode::TooLarge, "G x Z_n exceeds the build cap");
  for (Int j = 0; j < p.n; ++j)
    if (c_matrix(p, j, 0) != p.at(j) || !p.G.is_zero(c_matrix(p, 0, j)))
      throw Error(ErrorCode::BadParams, "c_{i,j} boundary identities fail");
  auto elems = p.G.elements();
  std::size_t N = p.size();
  Table L(N, std::vector<Point>(N));
  for (auto const& a : elems)
    for (Int i = 0; i < p.n; ++i)
      for (auto const& b : elems)
        for (Int j = 0; j < p.n; ++j)
          L[s_point(p, a, i)][s_point(p, b, j)] = s_point(p, p.G.add(b, c_matrix(p, i, j)), j);
  FinSolution layer = FinSolution::from_sigma(L);
  TwoReductive t;
  for (Point x = 0; x < N; ++x) {
    t.L.push_back(layer.sigma(x));
    t.R.push_back(layer.tau(x));
  }
  return t;
}

Perm s_shift(SParams const& p) {
  std::vector<Point> img(p.size());
  for (auto const& a : p.G.elements())
    for (Int i = 0; i < p.n; ++i) img[s_point(p, a, i)] = s_point(p, a, i + 1);
  return Perm(std::move(img));
}

bool is_abelian_params(SParams const& p) {
  for (Int i = 0; i <= p.n; ++i)
    if (p.at(i) != p.G.scale(i, p.at(1))) return false;
  return true;
}

bool params_isomorphic(SParams const& a, SParams const& b) {
  validate(a);
  validate(b);
  if (a.n != b.n || a.G.order() != b.G.order()) return false;
  // c generates G, so g is forced along the Cayley graph with edges x -> x + c_i.
  auto order = static_cast<std::size_t>(a.G.order());
  std::vector<std::size_t> image(order, order);
  std::vector<char> used(order, 0);
  std::deque<AbElem> queue{a.G.zero()};
  image[0] = 0;
  used[0] = 1;
  while (!queue.empty()) {
    AbElem x = queue.front();
    queue.pop_front();
    AbElem gx = b.G.element_at(image[a.G.index_of(x)]);
    for (Int i = 0; i < a.n; ++i) {
      std::size_t y = a.G.index_of(a.G.add(x, a.at(i)));
      std::size_t gy = b.G.index_of(b.G.add(gx, b.at(i)));
      if (image[y] == order) {
        if (used[gy]) return false;
        image[y] = gy;
        used[gy] = 1;
        queue.push_back(a.G.element_at(y));
      } else if (image[y] != gy) {
        return false;
      }
    }
  }
  return true;
}

SParams module_construction(Int k, Int r) {
  if (k < 2 || r < 1) throw Error(ErrorCode::BadParams, "module construction needs k >= 2, r >= 1");
  SParams p{AbGroup(std::vector<Int>(static_cast<std::size_t>(r), k)), 2 * r, {}};
  p.c.assign(static_cast<std::size_t>(2 * r), p.G.zero());
  for (Int i = 1; i <= r; ++i) {
    for (Int t = 0; t < i; ++t) p.c[static_cast<std::size_t>(i)].coords[static_cast<std::size_t>(t)] = 1;
    if (i < r)
      for (Int t = i; t < r; ++t) p.c[static_cast<std::size_t>(i + r)].coords[static_cast<std::size_t>(t)] = 1;
  }
  validate(p);
  return p;
}

bool is_s_representable(FinSolution const& s, Point base) {
  if (!is_mpl2_local(s) || !is_indecomposable(s))
    throw Error(ErrorCode::NotLevel2, "S-representability needs an indecomposable solution of level <= 2");
  PermGroup dis = displacement_group(s, base);
  PermGroup g = permutation_group(s);
  Perm const& pi = s.sigma(base);
  for (Perm q = pi; !q.is_identity(); q = q * pi)
    if (dis.contains(q)) return false;
  for (auto const& h : point_stabilizer(g.elements(), base))
    if (!dis.contains(h)) return false;
  return true;
}

std::vector<AbElem> parse_elements(AbGroup const& g, std::string const& text) {
  std::vector<AbElem> out;
  std::stringstream outer(text);
  std::string item;
  while (std::getline(outer, item, ';')) {
    std::vector<Int> coords;
    std::stringstream inner(item);
    std::string num;
    while (std::getline(inner, num, ',')) {
      try {
        std::size_t used = 0;
        coords.push_back(std::stoll(num, &used));
        if (num.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(num);
      } catch (std::exception const&) {
        throw Error(ErrorCode::ParseError, "bad integer '" + num + "' in element list");
      }
    }
    if (coords.size() != g.rank())
      throw Error(ErrorCode::ParseError, "element '" + item + "' has wrong coordinate count");
    out.push_back(g.reduce(std::move(coords)));
  }
  return out;
}

}  // namespace ybe
