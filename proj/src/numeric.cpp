#include "modcat/numeric.hpp"

#include <algorithm>
#include <cmath>

namespace modcat {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

std::vector<std::pair<long long, int>> factorize(long long n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be positive");
  std::vector<std::pair<long long, int>> out;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) n /= p, ++e;
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

long long euler_phi(long long n) {
  long long phi = 1;
  for (auto [p, e] : factorize(n)) {
    long long pe = 1;
    for (int i = 1; i < e; ++i) pe *= p;
    phi *= pe * (p - 1);
  }
  return phi;
}

long long squarefree_part(long long n) {
  long long s = 1;
  for (auto [p, e] : factorize(n))
    if (e % 2) s *= p;
  return s;
}

int valuation(long long n, long long p) {
  if (n < 1 || p < 2) throw std::invalid_argument("valuation: bad arguments");
  int v = 0;
  while (n % p == 0) n /= p, ++v;
  return v;
}

std::optional<long long> exact_sqrt(long long n) {
  if (n < 0) return std::nullopt;
  long long r = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(n))));
  for (long long c = r > 1 ? r - 1 : 0; c <= r + 1; ++c)
    if (c * c == n) return c;
  return std::nullopt;
}

std::vector<long long> divisors(long long n) {
  std::vector<long long> out{1};
  for (auto [p, e] : factorize(n)) {
    size_t base = out.size();
    long long pe = 1;
    for (int i = 0; i < e; ++i) {
      pe *= p;
      for (size_t j = 0; j < base; ++j) out.push_back(out[j] * pe);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace modcat
