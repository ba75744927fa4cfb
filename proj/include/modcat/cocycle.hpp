#pragma once

#include <utility>
#include <vector>

#include "modcat/abelian.hpp"

namespace modcat {

// Root-of-unity-valued functions on a finite abelian group are stored as
// integer exponent tables with respect to a fixed root zeta_M: table entry e
// means zeta_M^e.  All identities are then checked in integer arithmetic
// mod M; Cyclotomic values are materialized on demand.

// Quadratic form phi on G: phi(0) = 1, phi(-x) = phi(x), and the associated
// bicharacter b(x,y) = phi(x+y) phi(x)^-1 phi(y)^-1 is bimultiplicative.
// All three properties are verified exhaustively on construction.
class QuadraticForm {
 public:
  QuadraticForm(FiniteAbelianGroup group, long long root_order,
                std::vector<long long> exps);

  // The two inequivalent nondegenerate forms on Z_p, p an odd prime:
  // variant 1 is x -> zeta_p^(x^2), variant 2 is x -> zeta_p^(c x^2) with c
  // the least quadratic nonresidue mod p.
  static QuadraticForm standard_form(long long p, int variant);

  // Gauss form on a product of cyclic groups, one coefficient per factor:
  // factor of odd order n contributes zeta_n^(c x^2), even order n
  // contributes zeta_2n^(c x^2).  Nondegenerate iff every gcd(c_i, n_i) = 1.
  static QuadraticForm gauss_form(const FiniteAbelianGroup& g,
                                  const std::vector<long long>& coeffs);

  const FiniteAbelianGroup& group() const { return group_; }
  long long root_order() const { return M_; }

  long long exp_of(const GroupElement& x) const { return exps_[group_.index_of(x)]; }
  Cyclotomic value(const GroupElement& x) const;
  long long bilinear_exp(const GroupElement& x, const GroupElement& y) const;
  Cyclotomic bilinear(const GroupElement& x, const GroupElement& y) const;

  // Radical of b; the form is nondegenerate iff this is trivial.
  std::vector<GroupElement> radical() const;
  bool is_nondegenerate() const { return radical().size() == 1; }

 private:
  FiniteAbelianGroup group_;
  long long M_;
  std::vector<long long> exps_;
};

// Normalized 2-cochain beta on G with the 2-cocycle identity
// beta(h,k) beta(g,h+k) = beta(g,h) beta(g+h,k) verified on construction.
class Cocycle2 {
 public:
  Cocycle2(FiniteAbelianGroup group, long long root_order, std::vector<long long> exps);

  const FiniteAbelianGroup& group() const { return group_; }
  long long root_order() const { return M_; }
  long long exp_of(const GroupElement& g, const GroupElement& h) const {
    return exps_[group_.index_of(g) * group_.order() + group_.index_of(h)];
  }
  Cyclotomic value(const GroupElement& g, const GroupElement& h) const;
  const std::vector<long long>& exps() const { return exps_; }

  bool is_symmetric() const;

  // Alternating pairing a(g,h) = beta(g,h) beta(h,g)^-1.  beta is a
  // coboundary iff the pairing is identically 1; the radical is the set of
  // g pairing trivially with everything.
  Cyclotomic pairing(const GroupElement& g, const GroupElement& h) const;
  bool is_coboundary() const;
  std::vector<GroupElement> radical() const;

  // For symmetric beta: rho with rho(g) rho(h) rho(g+h)^-1 = beta(g,h),
  // returned as exponents of zeta_L, L = root_order * exponent(G).  Found by
  // splitting the central extension Z_L x_beta G; the defining identity is
  // re-verified exhaustively before returning.
  std::pair<long long, std::vector<long long>> solve_symmetric_coboundary() const;

 private:
  FiniteAbelianGroup group_;
  long long M_;
  std::vector<long long> exps_;
};

// Normalized 3-cocycle omega on G; the pentagon-shaped identity
// omega(h,k,l) omega(g,h+k,l) omega(g,h,k) = omega(g+h,k,l) omega(g,h,k+l)
// is verified exhaustively on construction (integer sweep over |G|^4).
class Cocycle3 {
 public:
  Cocycle3(FiniteAbelianGroup group, long long root_order, std::vector<long long> exps);

  // Generator of type I on one cyclic factor, to the power a:
  // omega(g,h,k) = zeta_m^(a * g_j * floor((h_j + k_j)/m)), m the factor order.
  static Cocycle3 type_I(const FiniteAbelianGroup& g, size_t factor, long long a);

  // Generator of type II on an ordered pair of factors of equal order q:
  // omega(g,h,k) = zeta_q^(a * g_j * floor((h_l + k_l)/q)).
  static Cocycle3 type_II(const FiniteAbelianGroup& g, size_t factor_j, size_t factor_l,
                          long long a);

  static Cocycle3 trivial(const FiniteAbelianGroup& g);

  // Pointwise product (class addition in H^3).
  Cocycle3 operator*(const Cocycle3& o) const;

  const FiniteAbelianGroup& group() const { return group_; }
  long long root_order() const { return M_; }
  long long exp_of(const GroupElement& g, const GroupElement& h, const GroupElement& k) const {
    long long n = group_.order();
    return exps_[(group_.index_of(g) * n + group_.index_of(h)) * n + group_.index_of(k)];
  }
  Cyclotomic value(const GroupElement& g, const GroupElement& h, const GroupElement& k) const;
  const std::vector<long long>& exps() const { return exps_; }
  bool is_trivial_table() const;

  // Slant product omega_x(g,h) = omega(x,g,h) omega(g,h,x) omega(g,x,h)^-1,
  // a 2-cocycle on G.
  Cocycle2 slant(const GroupElement& x) const;

 private:
  Cocycle3(FiniteAbelianGroup group, long long root_order, std::vector<long long> exps,
           bool skip_validation);
  FiniteAbelianGroup group_;
  long long M_;
  std::vector<long long> exps_;
};

}  // namespace modcat
