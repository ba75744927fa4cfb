#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace modcat {

// Exact rational scalar used for all cyclotomic coefficients.
using Rational = mpq_class;

// This gmpxx has no long long overloads; funnel through long (same width here).
inline Rational rat(long long num, long long den = 1) {
  Rational r(static_cast<long>(num), static_cast<long>(den));
  r.canonicalize();
  return r;
}

inline long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

inline long long lcm_ll(long long a, long long b) {
  if (a == 0 || b == 0) return 0;
  return a / std::gcd(a, b) * b;
}

// Nonnegative remainder, also for negative a.
inline long long mod_ll(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

bool is_prime(long long n);

// Prime factorization of n >= 1 as (p, exponent) pairs, p ascending.
std::vector<std::pair<long long, int>> factorize(long long n);

long long euler_phi(long long n);

// Product of the primes dividing n to an odd power; squarefree_part(1) = 1.
long long squarefree_part(long long n);

// p-adic valuation of n (n >= 1).
int valuation(long long n, long long p);

// Exact integer square root if n is a perfect square.
std::optional<long long> exact_sqrt(long long n);

// Divisors of n >= 1 in ascending order.
std::vector<long long> divisors(long long n);

}  // namespace modcat
