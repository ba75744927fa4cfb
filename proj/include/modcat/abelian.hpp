#pragma once

#include <string>
#include <vector>

#include "modcat/cyclotomic.hpp"
#include "modcat/numeric.hpp"

namespace modcat {

// Element of a finite abelian group, as coordinates with respect to the
// group's invariant factors.  Plain data; the owning group reduces coords.
struct GroupElement {
  std::vector<long long> coords;
  bool operator==(const GroupElement& o) const { return coords == o.coords; }
  bool operator<(const GroupElement& o) const { return coords < o.coords; }
};

// Finite abelian group in invariant-factor form Z_{m1} x ... x Z_{mk} with
// m1 | m2 | ... | mk and every mi >= 2.  The trivial group has no factors.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;  // trivial group
  explicit FiniteAbelianGroup(std::vector<long long> invariant_factors);

  // Any product of cyclic groups, regrouped into invariant-factor form
  // (e.g. {3, 5} -> Z_15, {4, 2} -> Z_2 x Z_4).
  static FiniteAbelianGroup from_cyclic_factors(const std::vector<long long>& ns);

  const std::vector<long long>& factors() const { return factors_; }
  long long order() const { return order_; }
  long long exponent() const { return factors_.empty() ? 1 : factors_.back(); }
  size_t num_generators() const { return factors_.size(); }

  GroupElement zero() const { return {std::vector<long long>(factors_.size(), 0)}; }
  GroupElement reduce(std::vector<long long> coords) const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement neg(const GroupElement& a) const;
  GroupElement scale(long long k, const GroupElement& a) const;
  GroupElement generator(size_t i) const;
  long long element_order(const GroupElement& a) const;

  // All elements in lexicographic coordinate order; index_of inverts it.
  std::vector<GroupElement> elements() const;
  long long index_of(const GroupElement& a) const;
  GroupElement element_at(long long index) const;

  // Value at g of the character indexed by t (same coordinate space):
  // prod_i zeta_{m_i}^{t_i g_i}.  The characters indexed this way exhaust
  // the dual group.
  Cyclotomic character(const GroupElement& t, const GroupElement& g) const;

  // Automorphisms as generator-image tables; apply with act().  Intended for
  // the small groups this library enumerates exhaustively.
  std::vector<std::vector<GroupElement>> automorphisms() const;
  GroupElement act(const std::vector<GroupElement>& images, const GroupElement& g) const;

  std::string str() const;  // "Z4xZ2" style, "1" for the trivial group
  bool operator==(const FiniteAbelianGroup& o) const { return factors_ == o.factors_; }

 private:
  std::vector<long long> factors_;
  long long order_ = 1;
};

}  // namespace modcat
