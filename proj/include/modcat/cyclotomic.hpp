#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "modcat/numeric.hpp"

namespace modcat {

// Exact element of a cyclotomic field Q(zeta_N).
//
// Stored as a rational polynomial in zeta_N reduced modulo the N-th
// cyclotomic polynomial, so the coordinates in the power basis
// {1, zeta_N, ..., zeta_N^(phi(N)-1)} are unique: two values with the same
// conductor are equal iff their term lists are identical (zero is the empty
// list).  Mixed-conductor arithmetic rebases both operands into the lcm
// field first.  Values are immutable; all operations return new values.
class Cyclotomic {
 public:
  struct Term {
    long long exp;
    Rational coeff;
    bool operator==(const Term& o) const { return exp == o.exp && coeff == o.coeff; }
  };

  Cyclotomic() : conductor_(1) {}  // zero

  static Cyclotomic from_rational(const Rational& r);
  static Cyclotomic from_integer(long long n);
  // zeta_order^exponent, any integer exponent.  The pair is reduced, so the
  // result lives in the smallest power-of-the-same-root field: (4,2) -> -1.
  static Cyclotomic root_of_unity(long long order, long long exponent);

  long long conductor() const { return conductor_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_integer(long long n) const;

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator*(const Rational& r) const;
  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  // Complex conjugate zeta -> zeta^-1 (a field automorphism here).
  Cyclotomic conjugate() const;
  // Multiplicative inverse; throws std::domain_error on zero.
  Cyclotomic inverse() const;
  Cyclotomic pow(long long k) const;

  // Same value in Q(zeta_m); requires conductor() | m.
  Cyclotomic rebased(long long m) const;
  // Same value in Q(zeta_m) if it lies there; requires m | conductor().
  std::optional<Cyclotomic> descended(long long m) const;

  std::optional<Rational> as_rational() const;
  // (order, exponent) with gcd(exponent, order) = 1 if the value is a root
  // of unity; as_root_of_unity(1) = (1, 0), (-1) = (2, 1).
  std::optional<std::pair<long long, long long>> as_root_of_unity() const;

  std::string str() const;  // debug rendering, e.g. "z8^1 + -1/2*z8^3"

 private:
  long long conductor_;
  std::vector<Term> terms_;  // sorted by exp, exps in [0, phi(conductor)), no zero coeffs

  static Cyclotomic from_dense(long long n, std::vector<Rational> dense);
  friend struct CycloOps;
};

// Coefficients of the n-th cyclotomic polynomial, ascending degree, monic.
const std::vector<long long>& cyclotomic_polynomial(long long n);

}  // namespace modcat
