#pragma once

// Finite abelian groups in invariant-factor form, exact integer normal forms
// and finite-index sublattice enumeration.
//
// Conventions:
//  * All arithmetic is 63-bit checked; overflow throws Error(Overflow).
//  * Matrices are row-major vectors of rows.
//  * Elements of Z_{d_1} x ... x Z_{d_k} are ranked in mixed radix with
//    coordinate 0 most significant, so rank order equals lexicographic order.
//  * Sublattices K <= Z^r are stored as column-style Hermite normal forms:
//    upper triangular, positive diagonal, and for i < j the entry (i,j)
//    satisfies 0 <= h(i,j) < h(i,i). The columns generate K.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace ybe {

using Int = std::int64_t;
using Matrix = std::vector<std::vector<Int>>;

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);
// Mathematical residue in [0, m).
inline Int emod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

Matrix identity_matrix(std::size_t n);
Matrix multiply(Matrix const& a, Matrix const& b);
// Fraction-free (Bareiss) determinant of a square matrix.
Int determinant(Matrix const& m);

struct SmithForm {
  Matrix U;  // rows x rows, unimodular
  Matrix D;  // rows x cols, diagonal with d_1 | d_2 | ...
  Matrix V;  // cols x cols, unimodular
};

// U * M * V == D exactly. Zero diagonal entries (rank deficiency) come last.
SmithForm smith_normal_form(Matrix const& m);

struct AbElem {
  std::vector<Int> coords;
  friend bool operator==(AbElem const&, AbElem const&) = default;
  friend auto operator<=>(AbElem const&, AbElem const&) = default;
};

class AbGroup {
 public:
  AbGroup() = default;
  // Every factor must be >= 1. The factors need not divide each other.
  explicit AbGroup(std::vector<Int> factors);

  std::vector<Int> const& factors() const noexcept { return factors_; }
  std::size_t rank() const noexcept { return factors_.size(); }
  Int order() const noexcept { return order_; }

  AbElem zero() const;
  AbElem reduce(std::vector<Int> coords) const;
  AbElem add(AbElem const& a, AbElem const& b) const;
  AbElem sub(AbElem const& a, AbElem const& b) const;
  AbElem neg(AbElem const& a) const;
  AbElem scale(Int k, AbElem const& a) const;
  bool is_zero(AbElem const& a) const;
  // Additive order of an element.
  Int element_order(AbElem const& a) const;

  std::size_t index_of(AbElem const& a) const;
  AbElem element_at(std::size_t index) const;
  std::vector<AbElem> elements() const;
  // Unit vector e_i.
  AbElem basis(std::size_t i) const;

  friend bool operator==(AbGroup const& a, AbGroup const& b) { return a.factors_ == b.factors_; }

 private:
  std::vector<Int> factors_;
  Int order_ = 1;
};

// Canonical invariant factors d_1 | d_2 | ... with d_1 > 1. Trivial group -> ().
std::vector<Int> abelian_iso_type(AbGroup const& g);

inline constexpr Int kSubgroupOrderCap = 4096;

class Subgroup {
 public:
  Subgroup() = default;  // {0} in the trivial group
  Subgroup(AbGroup parent, std::vector<std::size_t> element_indices, std::vector<AbElem> generators);

  AbGroup const& parent() const noexcept { return parent_; }
  // Ranks (AbGroup::index_of) of all members, ascending.
  std::vector<std::size_t> const& element_indices() const noexcept { return elements_; }
  std::vector<AbElem> elements() const;
  std::vector<AbElem> const& generators() const noexcept { return generators_; }
  std::size_t order() const noexcept { return elements_.size(); }
  Int index() const { return parent_.order() / static_cast<Int>(elements_.size()); }
  bool contains(AbElem const& a) const;
  // Least-ranked element of a + H.
  AbElem coset_rep(AbElem const& a) const;

  friend bool operator==(Subgroup const& a, Subgroup const& b) {
    return a.parent_ == b.parent_ && a.elements_ == b.elements_;
  }

 private:
  AbGroup parent_;
  std::vector<std::size_t> elements_{0};
  std::vector<AbElem> generators_;
};

// BFS closure; throws Error(TooLarge) if |G| > kSubgroupOrderCap.
Subgroup subgroup_generated(AbGroup const& g, std::span<const AbElem> gens);
inline Subgroup subgroup_generated(AbGroup const& g, std::initializer_list<AbElem> gens) {
  return subgroup_generated(g, std::span<const AbElem>(gens.begin(), gens.size()));
}

// All subgroups H with base <= H <= G, ordered by ascending order then
// lexicographically on the sorted element ranks.
std::vector<Subgroup> subgroups_containing(Subgroup const& base);

class QuotientMap {
 public:
  QuotientMap(AbGroup source, AbGroup target, Matrix rows, std::vector<Int> moduli);

  AbGroup const& source() const noexcept { return source_; }
  AbGroup const& target() const noexcept { return target_; }
  AbElem operator()(AbElem const& a) const;

 private:
  AbGroup source_;
  AbGroup target_;
  Matrix rows_;  // one row of U per kept invariant factor
  std::vector<Int> moduli_;
};

// G/H in invariant-factor form with its total projection, via the Smith form
// of [diag(d_i) | generators of H].
QuotientMap quotient_group(AbGroup const& g, Subgroup const& h);

struct LatticeQuotient {
  std::size_t rank = 0;
  Matrix hnf;                    // rank x rank, column-style HNF of K
  AbGroup quotient;              // Z^rank / K in invariant-factor form
  std::vector<AbElem> gen_images;  // images of e_1..e_rank
};

// Every K <= Z^rank of index `index`, ordered lexicographically by the
// row-major flattening of the HNF.
std::vector<LatticeQuotient> sublattices_of_index(std::size_t rank, Int index);

// Number of such sublattices without materializing them.
Int count_sublattices(std::size_t rank, Int index);

}  // namespace ybe
