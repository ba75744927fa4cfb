#include "modcat/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace modcat {

namespace {

// Exact division of integer polynomials (ascending coeffs), remainder must
// vanish; used only to assemble cyclotomic polynomials.
std::vector<long long> poly_div_exact(std::vector<long long> num,
                                      const std::vector<long long>& den) {
  long long dd = static_cast<long long>(den.size()) - 1;
  long long nd = static_cast<long long>(num.size()) - 1;
  std::vector<long long> quot(nd - dd + 1, 0);
  for (long long k = nd - dd; k >= 0; --k) {
    long long c = num[k + dd] / den[dd];
    quot[k] = c;
    if (c == 0) continue;
    for (long long j = 0; j <= dd; ++j) num[k + j] -= c * den[j];
  }
  for (long long v : num)
    if (v != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
  return quot;
}

std::map<long long, std::vector<long long>> g_phi_cache;
std::mutex g_phi_mutex;

const std::vector<long long>& cyclo_poly_locked(long long n) {
  auto it = g_phi_cache.find(n);
  if (it != g_phi_cache.end()) return it->second;
  // x^n - 1 divided by the product of Phi_d over proper divisors d of n.
  std::vector<long long> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (long long d : divisors(n)) {
    if (d == n) continue;
    num = poly_div_exact(std::move(num), cyclo_poly_locked(d));
  }
  return g_phi_cache.emplace(n, std::move(num)).first->second;
}

}  // namespace

const std::vector<long long>& cyclotomic_polynomial(long long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  std::lock_guard<std::mutex> lock(g_phi_mutex);
  return cyclo_poly_locked(n);
}

// Reduce dense coefficients in place modulo Phi_n (monic), leaving degree < deg Phi_n.
static void reduce_mod_phi(std::vector<Rational>& c, long long n) {
  const auto& phi = cyclotomic_polynomial(n);
  long long deg = static_cast<long long>(phi.size()) - 1;
  for (long long e = static_cast<long long>(c.size()) - 1; e >= deg; --e) {
    if (c[e] == 0) continue;
    Rational t = c[e];
    c[e] = 0;
    for (long long j = 0; j < deg; ++j)
      if (phi[j] != 0) c[e - deg + j] -= t * static_cast<long>(phi[j]);
  }
  c.resize(std::min<long long>(c.size(), deg));
}

Cyclotomic Cyclotomic::from_dense(long long n, std::vector<Rational> dense) {
  reduce_mod_phi(dense, n);
  Cyclotomic out;
  out.conductor_ = n;
  for (long long e = 0; e < static_cast<long long>(dense.size()); ++e)
    if (dense[e] != 0) out.terms_.push_back({e, std::move(dense[e])});
  return out;
}

Cyclotomic Cyclotomic::from_rational(const Rational& r) {
  Cyclotomic out;
  if (r != 0) out.terms_.push_back({0, r});
  return out;
}

Cyclotomic Cyclotomic::from_integer(long long n) { return from_rational(rat(n)); }

Cyclotomic Cyclotomic::root_of_unity(long long order, long long exponent) {
  if (order < 1) throw std::invalid_argument("root_of_unity: order must be positive");
  long long e = mod_ll(exponent, order);
  long long g = std::gcd(e, order);
  if (e == 0) g = order;
  order /= g;
  e /= g;
  if (order == 1) return from_integer(1);
  if (order == 2) return from_integer(-1);
  std::vector<Rational> dense(e + 1, Rational(0));
  dense[e] = 1;
  return from_dense(order, std::move(dense));
}

bool Cyclotomic::is_one() const {
  return terms_.size() == 1 && terms_[0].exp == 0 && terms_[0].coeff == 1;
}

bool Cyclotomic::is_integer(long long n) const {
  if (n == 0) return is_zero();
  return terms_.size() == 1 && terms_[0].exp == 0 && terms_[0].coeff == static_cast<long>(n);
}

Cyclotomic Cyclotomic::rebased(long long m) const {
  if (m % conductor_ != 0) throw std::invalid_argument("rebased: conductor must divide m");
  if (m == conductor_) return *this;
  long long k = m / conductor_;
  std::vector<Rational> dense;
  for (const Term& t : terms_) {
    long long e = t.exp * k;
    if (e >= static_cast<long long>(dense.size())) dense.resize(e + 1, Rational(0));
    dense[e] = t.coeff;
  }
  return from_dense(m, std::move(dense));
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  long long m = lcm_ll(conductor_, o.conductor_);
  const Cyclotomic a = rebased(m), b = o.rebased(m);
  std::vector<Rational> dense(std::max<size_t>(1, euler_phi(m)), Rational(0));
  for (const Term& t : a.terms_) dense[t.exp] += t.coeff;
  for (const Term& t : b.terms_) dense[t.exp] += t.coeff;
  return from_dense(m, std::move(dense));
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out(*this);
  for (Term& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  if (is_zero() || o.is_zero()) return Cyclotomic();
  long long m = lcm_ll(conductor_, o.conductor_);
  const Cyclotomic a = rebased(m), b = o.rebased(m);
  long long deg = euler_phi(m);
  std::vector<Rational> dense(2 * deg, Rational(0));
  for (const Term& s : a.terms_)
    for (const Term& t : b.terms_) dense[s.exp + t.exp] += s.coeff * t.coeff;
  return from_dense(m, std::move(dense));
}

Cyclotomic Cyclotomic::operator*(const Rational& r) const {
  if (r == 0) return Cyclotomic();
  Cyclotomic out(*this);
  for (Term& t : out.terms_) t.coeff *= r;
  return out;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  if (conductor_ == o.conductor_) return terms_ == o.terms_;
  long long m = lcm_ll(conductor_, o.conductor_);
  return rebased(m).terms_ == o.rebased(m).terms_;
}

Cyclotomic Cyclotomic::conjugate() const {
  std::vector<Rational> dense;
  for (const Term& t : terms_) {
    long long e = t.exp == 0 ? 0 : conductor_ - t.exp;
    if (e >= static_cast<long long>(dense.size())) dense.resize(e + 1, Rational(0));
    dense[e] += t.coeff;
  }
  if (dense.empty()) return Cyclotomic();
  return from_dense(conductor_, std::move(dense));
}

// Coordinates of (this * zeta^j) for j < deg form a deg x deg system; solving
// against e_0 yields the inverse.  Gaussian elimination over Q.
Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("Cyclotomic::inverse: zero has no inverse");
  if (auto r = as_rational()) return from_rational(1 / *r);
  long long n = conductor_;
  long long deg = euler_phi(n);
  // col[j] = dense coords of this * zeta^j
  std::vector<std::vector<Rational>> M(deg, std::vector<Rational>(deg, Rational(0)));
  for (long long j = 0; j < deg; ++j) {
    std::vector<Rational> dense(deg + j + 1, Rational(0));
    for (const Term& t : terms_) dense[t.exp + j] += t.coeff;
    reduce_mod_phi(dense, n);
    for (long long i = 0; i < static_cast<long long>(dense.size()); ++i)
      M[i][j] = std::move(dense[i]);
  }
  std::vector<Rational> rhs(deg, Rational(0));
  rhs[0] = 1;
  // forward elimination with partial pivoting (first nonzero pivot)
  std::vector<long long> piv_col(deg, -1);
  long long row = 0;
  for (long long col = 0; col < deg && row < deg; ++col) {
    long long p = -1;
    for (long long r = row; r < deg; ++r)
      if (M[r][col] != 0) { p = r; break; }
    if (p < 0) continue;
    std::swap(M[p], M[row]);
    std::swap(rhs[p], rhs[row]);
    Rational inv_piv = 1 / M[row][col];
    for (long long c = col; c < deg; ++c) M[row][c] *= inv_piv;
    rhs[row] *= inv_piv;
    for (long long r = 0; r < deg; ++r) {
      if (r == row || M[r][col] == 0) continue;
      Rational f = M[r][col];
      for (long long c = col; c < deg; ++c) M[r][c] -= f * M[row][c];
      rhs[r] -= f * rhs[row];
    }
    piv_col[row] = col;
    ++row;
  }
  std::vector<Rational> x(deg, Rational(0));
  for (long long r = 0; r < deg; ++r) {
    if (piv_col[r] >= 0) {
      x[piv_col[r]] = rhs[r];
    } else if (rhs[r] != 0) {
      throw std::logic_error("Cyclotomic::inverse: inconsistent system");
    }
  }
  Cyclotomic out;
  out.conductor_ = n;
  for (long long e = 0; e < deg; ++e)
    if (x[e] != 0) out.terms_.push_back({e, std::move(x[e])});
  return out;
}

Cyclotomic Cyclotomic::pow(long long k) const {
  if (k < 0) return inverse().pow(-k);
  Cyclotomic acc = from_integer(1), base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

std::optional<Cyclotomic> Cyclotomic::descended(long long m) const {
  if (conductor_ % m != 0) throw std::invalid_argument("descended: m must divide conductor");
  if (m == conductor_) return *this;
  long long degN = euler_phi(conductor_), degM = euler_phi(m);
  // Solve sum_j x_j * coords(zeta_m^j) = coords(this) over the big field.
  std::vector<std::vector<Rational>> A(degN, std::vector<Rational>(degM + 1, Rational(0)));
  for (long long j = 0; j < degM; ++j) {
    Cyclotomic img = root_of_unity(m, j).rebased(conductor_);
    for (const Term& t : img.terms_) A[t.exp][j] = t.coeff;
  }
  for (const Term& t : terms_) A[t.exp][degM] = t.coeff;
  long long row = 0;
  std::vector<long long> piv_col(degN, -1);
  for (long long col = 0; col < degM && row < degN; ++col) {
    long long p = -1;
    for (long long r = row; r < degN; ++r)
      if (A[r][col] != 0) { p = r; break; }
    if (p < 0) continue;
    std::swap(A[p], A[row]);
    Rational inv_piv = 1 / A[row][col];
    for (long long c = col; c <= degM; ++c) A[row][c] *= inv_piv;
    for (long long r = 0; r < degN; ++r) {
      if (r == row || A[r][col] == 0) continue;
      Rational f = A[r][col];
      for (long long c = col; c <= degM; ++c) A[r][c] -= f * A[row][c];
    }
    piv_col[row] = col;
    ++row;
  }
  std::vector<Rational> x(degM, Rational(0));
  for (long long r = 0; r < degN; ++r) {
    if (piv_col[r] >= 0)
      x[piv_col[r]] = A[r][degM];
    else if (A[r][degM] != 0)
      return std::nullopt;  // value does not lie in Q(zeta_m)
  }
  Cyclotomic out;
  out.conductor_ = m;
  for (long long e = 0; e < degM; ++e)
    if (x[e] != 0) out.terms_.push_back({e, std::move(x[e])});
  return out;
}

std::optional<Rational> Cyclotomic::as_rational() const {
  if (is_zero()) return Rational(0);
  if (terms_.size() == 1 && terms_[0].exp == 0) return terms_[0].coeff;
  return std::nullopt;
}

std::optional<std::pair<long long, long long>> Cyclotomic::as_root_of_unity() const {
  if (auto r = as_rational()) {
    if (*r == 1) return std::make_pair(1LL, 0LL);
    if (*r == -1) return std::make_pair(2LL, 1LL);
    return std::nullopt;
  }
  // power-basis monomial zeta_N^e with unit coefficient
  if (terms_.size() == 1 && terms_[0].coeff == 1) {
    long long n = conductor_, e = terms_[0].exp;
    long long g = std::gcd(e, n);
    return std::make_pair(n / g, e / g);
  }
  // otherwise brute-force over the roots in Q(zeta_N): orders divide
  // N (N even) or 2N (N odd)
  long long M = conductor_ % 2 == 0 ? conductor_ : 2 * conductor_;
  for (long long j = 1; j < M; ++j) {
    if (*this == root_of_unity(M, j)) {
      long long g = std::gcd(j, M);
      return std::make_pair(M / g, j / g);
    }
  }
  return std::nullopt;
}

std::string Cyclotomic::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms_) {
    if (!first) os << " + ";
    first = false;
    if (t.exp == 0) {
      os << t.coeff.get_str();
    } else {
      if (t.coeff != 1) os << t.coeff.get_str() << "*";
      os << "z" << conductor_ << "^" << t.exp;
    }
  }
  return os.str();
}

}  // namespace modcat
