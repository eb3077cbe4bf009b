#include "ybe/quotients.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "ybe/error.hpp"

namespace ybe {

namespace {

Subgroup difference_subgroup(SParams const& p, Int m) {
  std::vector<AbElem> diffs;
  for (Int i = 0; i < p.n; ++i) diffs.push_back(p.G.sub(p.at(i), p.at(i + m)));
  return subgroup_generated(p.G, diffs);
}

bool contains_all(Subgroup const& big, Subgroup const& small) {
  return std::includes(big.element_indices().begin(), big.element_indices().end(),
                       small.element_indices().begin(), small.element_indices().end());
}

}  // namespace

bool is_valid_descriptor(SParams const& p, CongruenceDescriptor const& d) {
  if (d.m < 1 || p.n % d.m != 0) return false;
  if (!(d.H.parent() == p.G)) return false;
  if (d.r.coords.size() != p.G.rank()) return false;
  if (!contains_all(d.H, difference_subgroup(p, d.m))) return false;
  return d.H.contains(p.G.scale(p.n / d.m, d.r));
}

CongruenceDescriptor make_descriptor(SParams const& p, Int m, Subgroup H, AbElem r) {
  if (r.coords.size() != p.G.rank()) throw Error(ErrorCode::BadDescriptor, "r has the wrong rank");
  CongruenceDescriptor d{m, std::move(H), p.G.reduce(r.coords)};
  if (!is_valid_descriptor(p, d)) throw Error(ErrorCode::BadDescriptor, "triple (m, H, r) is not a congruence");
  d.r = d.H.coset_rep(d.r);
  return d;
}

std::vector<CongruenceDescriptor> enumerate_congruences(SParams const& p) {
  validate(p);
  std::vector<CongruenceDescriptor> out;
  auto order = static_cast<std::size_t>(p.G.order());
  for (Int m = 1; m <= p.n; ++m) {
    if (p.n % m) continue;
    for (auto const& H : subgroups_containing(difference_subgroup(p, m))) {
      for (std::size_t x = 0; x < order; ++x) {
        AbElem r = p.G.element_at(x);
        if (H.coset_rep(r) != r) continue;
        if (!H.contains(p.G.scale(p.n / m, r))) continue;
        out.push_back({m, H, r});
      }
    }
  }
  return out;
}

Partition descriptor_partition(SParams const& p, CongruenceDescriptor const& d) {
  if (!is_valid_descriptor(p, d)) throw Error(ErrorCode::BadDescriptor, "invalid descriptor");
  std::vector<Point> labels(p.size());
  for (auto const& a : p.G.elements())
    for (Int i = 0; i < p.n; ++i) {
      Int q = i / d.m, i0 = i % d.m;
      AbElem rep = d.H.coset_rep(p.G.add(a, p.G.scale(q, d.r)));
      labels[s_point(p, a, i)] = static_cast<Point>(p.G.index_of(rep) * static_cast<std::size_t>(d.m) +
                                                    static_cast<std::size_t>(i0));
    }
  return canonical_partition(labels);
}

FinSolution twisted_quotient(AbGroup const& A, Int m, std::vector<AbElem> const& cbar, AbElem const& rbar) {
  if (m < 1 || cbar.size() != static_cast<std::size_t>(m))
    throw Error(ErrorCode::BadDescriptor, "cbar must have m entries");
  auto mm = static_cast<std::size_t>(m);
  std::size_t N = static_cast<std::size_t>(A.order()) * mm;
  if (N > kMaxBuildSize) throw Error(ErrorCode::TooLarge, "quotient exceeds the build cap");
  auto at = [&](Int i) -> AbElem const& { return cbar[static_cast<std::size_t>(emod(i, m))]; };
  auto elems = A.elements();
  Table sigma(N, std::vector<Point>(N));
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (Int i = 0; i < m; ++i)
      for (std::size_t b = 0; b < elems.size(); ++b)
        for (Int j = 0; j < m; ++j) {
          AbElem v = A.add(elems[b], A.sub(at(i - j - 1), at(-j - 1)));
          Int k = j + 1;
          if (k == m) {
            v = A.add(v, rbar);
            k = 0;
          }
          sigma[a * mm + static_cast<std::size_t>(i)][b * mm + static_cast<std::size_t>(j)] =
              static_cast<Point>(A.index_of(v) * mm + static_cast<std::size_t>(k));
        }
  return FinSolution::from_sigma(sigma);
}

FinSolution quotient_by(SParams const& p, CongruenceDescriptor const& d) {
  if (!is_valid_descriptor(p, d)) throw Error(ErrorCode::BadDescriptor, "invalid descriptor");
  QuotientMap proj = quotient_group(p.G, d.H);
  std::vector<AbElem> cbar;
  for (Int i = 0; i < d.m; ++i) cbar.push_back(proj(p.at(i)));
  return twisted_quotient(proj.target(), d.m, cbar, proj(d.r));
}

bool quotients_isomorphic(SParams const& p, CongruenceDescriptor const& d1, CongruenceDescriptor const& d2) {
  if (!is_valid_descriptor(p, d1) || !is_valid_descriptor(p, d2))
    throw Error(ErrorCode::BadDescriptor, "invalid descriptor");
  return d1.m == d2.m && d1.H == d2.H && d1.H.contains(p.G.sub(d1.r, d2.r));
}

QuotientReport quotient_invariant_report(SParams const& p, CongruenceDescriptor const& d) {
  FinSolution y = quotient_by(p, d);
  QuotientMap proj = quotient_group(p.G, d.H);
  QuotientReport rep;
  rep.size = y.size();
  rep.index_H = d.H.index();
  rep.m = d.m;
  rep.r_order = proj.target().element_order(proj(d.r));

  PermGroup dis = displacement_group(y, 0);
  PermGroup g = permutation_group(y);
  auto dis_stab = point_stabilizer(dis.elements(), 0);
  auto g_stab = point_stabilizer(g.elements(), 0);
  rep.dis_over_stab = dis.order() / dis_stab.size();
  std::size_t product = g_stab.size() * dis.order() / intersect(g_stab, dis.elements()).size();
  rep.g_over_stab_dis = g.order() / product;

  std::set<std::size_t> lengths;
  for (auto const& s : y.sigmas())
    for (std::size_t l : s.cycle_lengths()) lengths.insert(l);
  rep.cycle_lengths.assign(lengths.begin(), lengths.end());

  Perm first = power(y.sigma(0), d.m);
  rep.rho_m_equal = std::all_of(y.sigmas().begin(), y.sigmas().end(),
                                [&](Perm const& s) { return power(s, d.m) == first; });
  rep.size_ok = rep.size == static_cast<std::size_t>(d.m * rep.index_H);
  rep.dis_ok = rep.dis_over_stab == static_cast<std::size_t>(rep.index_H);
  rep.index_ok = rep.g_over_stab_dis == static_cast<std::size_t>(d.m);
  rep.cycles_ok = rep.cycle_lengths == std::vector<std::size_t>{static_cast<std::size_t>(d.m * rep.r_order)};
  return rep;
}

}  // namespace ybe
