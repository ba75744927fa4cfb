#include "modcat/cocycle.hpp"

#include <sstream>

#include "modcat/kernels.hpp"

namespace modcat {

namespace {

std::string elem_str(const GroupElement& g) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < g.coords.size(); ++i) os << (i ? "," : "") << g.coords[i];
  os << ")";
  return os.str();
}

void check_exp_table(const FiniteAbelianGroup& g, long long M,
                     const std::vector<long long>& exps, size_t arity) {
  if (M < 1) throw std::invalid_argument("root order must be positive");
  size_t want = 1;
  for (size_t i = 0; i < arity; ++i) want *= g.order();
  if (exps.size() != want) throw std::invalid_argument("exponent table has wrong size");
  for (long long e : exps)
    if (e < 0 || e >= M) throw std::invalid_argument("exponent out of range [0, M)");
}

}  // namespace

QuadraticForm::QuadraticForm(FiniteAbelianGroup group, long long root_order,
                             std::vector<long long> exps)
    : group_(std::move(group)), M_(root_order), exps_(std::move(exps)) {
  check_exp_table(group_, M_, exps_, 1);
  const auto elems = group_.elements();
  long long n = group_.order();
  if (exps_[group_.index_of(group_.zero())] != 0)
    throw std::invalid_argument("quadratic form: phi(0) != 1");
  for (const auto& x : elems)
    if (exp_of(x) != exp_of(group_.neg(x)))
      throw std::invalid_argument("quadratic form: phi(-x) != phi(x) at x=" + elem_str(x));
  // b(x+y, z) = b(x,z) b(y,z); symmetry of b is built into its definition
  std::vector<long long> bexp(n * n);
  for (long long i = 0; i < n; ++i)
    for (long long j = 0; j < n; ++j)
      bexp[i * n + j] = bilinear_exp(elems[i], elems[j]);
  for (long long i = 0; i < n; ++i)
    for (long long j = 0; j < n; ++j) {
      long long ij = group_.index_of(group_.add(elems[i], elems[j]));
      for (long long k = 0; k < n; ++k)
        if ((bexp[i * n + k] + bexp[j * n + k]) % M_ != bexp[ij * n + k])
          throw std::invalid_argument("quadratic form: b is not bimultiplicative at " +
                                      elem_str(elems[i]) + elem_str(elems[j]) +
                                      elem_str(elems[k]));
    }
}

QuadraticForm QuadraticForm::standard_form(long long p, int variant) {
  if (!is_prime(p) || p == 2)
    throw std::invalid_argument("standard_form: p must be an odd prime");
  if (variant != 1 && variant != 2)
    throw std::invalid_argument("standard_form: variant must be 1 or 2");
  long long c = 1;
  if (variant == 2) {
    // least quadratic nonresidue mod p
    std::vector<char> is_sq(p, 0);
    for (long long x = 0; x < p; ++x) is_sq[(x * x) % p] = 1;
    c = 2;
    while (is_sq[c]) ++c;
  }
  FiniteAbelianGroup g({p});
  std::vector<long long> exps(p);
  for (long long x = 0; x < p; ++x) exps[x] = (c * x * x) % p;
  return QuadraticForm(std::move(g), p, std::move(exps));
}

QuadraticForm QuadraticForm::gauss_form(const FiniteAbelianGroup& g,
                                        const std::vector<long long>& coeffs) {
  if (coeffs.size() != g.num_generators())
    throw std::invalid_argument("gauss_form: one coefficient per factor required");
  std::vector<long long> roots(coeffs.size());
  long long M = 1;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    long long m = g.factors()[i];
    roots[i] = m % 2 == 0 ? 2 * m : m;
    M = lcm_ll(M, roots[i]);
  }
  std::vector<long long> exps(g.order());
  const auto elems = g.elements();
  for (const auto& x : elems) {
    long long e = 0;
    for (size_t i = 0; i < coeffs.size(); ++i)
      e += (M / roots[i]) * mod_ll(coeffs[i] * x.coords[i] * x.coords[i], roots[i]);
    exps[g.index_of(x)] = e % M;
  }
  return QuadraticForm(g, M, std::move(exps));
}

Cyclotomic QuadraticForm::value(const GroupElement& x) const {
  return Cyclotomic::root_of_unity(M_, exp_of(x));
}

long long QuadraticForm::bilinear_exp(const GroupElement& x, const GroupElement& y) const {
  return mod_ll(exp_of(group_.add(x, y)) - exp_of(x) - exp_of(y), M_);
}

Cyclotomic QuadraticForm::bilinear(const GroupElement& x, const GroupElement& y) const {
  return Cyclotomic::root_of_unity(M_, bilinear_exp(x, y));
}

std::vector<GroupElement> QuadraticForm::radical() const {
  std::vector<GroupElement> rad;
  for (const auto& x : group_.elements()) {
    bool in = true;
    for (const auto& y : group_.elements())
      if (bilinear_exp(x, y) != 0) {
        in = false;
        break;
      }
    if (in) rad.push_back(x);
  }
  return rad;
}

Cocycle2::Cocycle2(FiniteAbelianGroup group, long long root_order,
                   std::vector<long long> exps)
    : group_(std::move(group)), M_(root_order), exps_(std::move(exps)) {
  check_exp_table(group_, M_, exps_, 2);
  const auto elems = group_.elements();
  long long n = group_.order();
  for (long long i = 0; i < n; ++i)
    if (exps_[0 * n + i] != 0 || exps_[i * n + 0] != 0)
      throw std::invalid_argument("2-cochain is not normalized");
  for (const auto& g : elems)
    for (const auto& h : elems)
      for (const auto& k : elems) {
        long long lhs = exp_of(h, k) + exp_of(g, group_.add(h, k));
        long long rhs = exp_of(g, h) + exp_of(group_.add(g, h), k);
        if (mod_ll(lhs - rhs, M_) != 0)
          throw std::invalid_argument("2-cocycle identity fails at " + elem_str(g) +
                                      elem_str(h) + elem_str(k));
      }
}

Cyclotomic Cocycle2::value(const GroupElement& g, const GroupElement& h) const {
  return Cyclotomic::root_of_unity(M_, exp_of(g, h));
}

bool Cocycle2::is_symmetric() const {
  for (const auto& g : group_.elements())
    for (const auto& h : group_.elements())
      if (exp_of(g, h) != exp_of(h, g)) return false;
  return true;
}

Cyclotomic Cocycle2::pairing(const GroupElement& g, const GroupElement& h) const {
  return Cyclotomic::root_of_unity(M_, mod_ll(exp_of(g, h) - exp_of(h, g), M_));
}

bool Cocycle2::is_coboundary() const { return is_symmetric(); }

std::vector<GroupElement> Cocycle2::radical() const {
  std::vector<GroupElement> rad;
  for (const auto& g : group_.elements()) {
    bool in = true;
    for (const auto& h : group_.elements())
      if (exp_of(g, h) != exp_of(h, g)) {
        in = false;
        break;
      }
    if (in) rad.push_back(g);
  }
  return rad;
}

// Split the central extension Z_L x_beta G: pick a preimage y_i = (s_i, e_i)
// of each generator with m_i y_i = 0, extend to a section along coordinate
// paths, and read rho off the first component.
std::pair<long long, std::vector<long long>> Cocycle2::solve_symmetric_coboundary() const {
  if (!is_symmetric())
    throw std::invalid_argument("solve_symmetric_coboundary: beta is not symmetric");
  long long L = M_ * group_.exponent();
  long long scale = L / M_;
  size_t k = group_.num_generators();
  std::vector<long long> s(k);
  for (size_t i = 0; i < k; ++i) {
    long long m = group_.factors()[i];
    GroupElement ei = group_.generator(i);
    long long u = 0;
    GroupElement cur = ei;
    for (long long j = 1; j < m; ++j) {
      u = (u + exp_of(cur, ei)) % M_;  // beta(j*e_i, e_i)
      cur = group_.add(cur, ei);
    }
    // m * s_i = -u * scale (mod L); solvable since m | L / M
    s[i] = mod_ll(-u * (L / (M_ * m)), L);
  }
  long long n = group_.order();
  std::vector<long long> rho(n);
  for (const auto& g : group_.elements()) {
    long long acc = 0;
    GroupElement cur = group_.zero();
    for (size_t i = 0; i < k; ++i)
      for (long long step = 0; step < g.coords[i]; ++step) {
        acc = mod_ll(acc + s[i] + scale * exp_of(cur, group_.generator(i)), L);
        cur = group_.add(cur, group_.generator(i));
      }
    rho[group_.index_of(g)] = mod_ll(-acc, L);
  }
  // the defining identity, re-checked exhaustively
  for (const auto& g : group_.elements())
    for (const auto& h : group_.elements()) {
      long long lhs = rho[group_.index_of(g)] + rho[group_.index_of(h)] -
                      rho[group_.index_of(group_.add(g, h))];
      if (mod_ll(lhs - scale * exp_of(g, h), L) != 0)
        throw std::logic_error("solve_symmetric_coboundary: verification failed");
    }
  return {L, std::move(rho)};
}

Cocycle3::Cocycle3(FiniteAbelianGroup group, long long root_order,
                   std::vector<long long> exps)
    : Cocycle3(std::move(group), root_order, std::move(exps), false) {}

Cocycle3::Cocycle3(FiniteAbelianGroup group, long long root_order,
                   std::vector<long long> exps, bool skip_validation)
    : group_(std::move(group)), M_(root_order), exps_(std::move(exps)) {
  check_exp_table(group_, M_, exps_, 3);
  long long n = group_.order();
  for (long long i = 0; i < n; ++i)
    for (long long j = 0; j < n; ++j)
      if (exps_[(0 * n + i) * n + j] != 0 || exps_[(i * n + 0) * n + j] != 0 ||
          exps_[(i * n + j) * n + 0] != 0)
        throw std::invalid_argument("3-cochain is not normalized");
  if (skip_validation) return;
  auto bad = kernels::cocycle3_identity_violations(*this);
  if (!bad.empty()) {
    const auto& q = bad.front();
    throw std::invalid_argument(
        "3-cocycle identity fails at " + elem_str(group_.element_at(q.g)) +
        elem_str(group_.element_at(q.h)) + elem_str(group_.element_at(q.k)) +
        elem_str(group_.element_at(q.l)));
  }
}

Cocycle3 Cocycle3::type_I(const FiniteAbelianGroup& g, size_t factor, long long a) {
  if (factor >= g.num_generators()) throw std::invalid_argument("type_I: no such factor");
  long long m = g.factors()[factor];
  long long n = g.order();
  std::vector<long long> exps(n * n * n);
  const auto elems = g.elements();
  for (long long i = 0; i < n; ++i)
    for (long long j = 0; j < n; ++j)
      for (long long l = 0; l < n; ++l) {
        long long carry = (elems[j].coords[factor] + elems[l].coords[factor]) / m;
        exps[(i * n + j) * n + l] = mod_ll(a * elems[i].coords[factor] * carry, m);
      }
  return Cocycle3(g, m, std::move(exps));
}

Cocycle3 Cocycle3::type_II(const FiniteAbelianGroup& g, size_t factor_j, size_t factor_l,
                           long long a) {
  if (factor_j >= g.num_generators() || factor_l >= g.num_generators() ||
      factor_j == factor_l)
    throw std::invalid_argument("type_II: need two distinct factors");
  long long q = g.factors()[factor_j];
  if (q != g.factors()[factor_l])
    throw std::invalid_argument("type_II: factors must have equal order");
  long long n = g.order();
  std::vector<long long> exps(n * n * n);
  const auto elems = g.elements();
  for (long long i = 0; i < n; ++i)
    for (long long j = 0; j < n; ++j)
      for (long long l = 0; l < n; ++l) {
        long long carry = (elems[j].coords[factor_l] + elems[l].coords[factor_l]) / q;
        exps[(i * n + j) * n + l] = mod_ll(a * elems[i].coords[factor_j] * carry, q);
      }
  return Cocycle3(g, q, std::move(exps));
}

Cocycle3 Cocycle3::trivial(const FiniteAbelianGroup& g) {
  long long n = g.order();
  return Cocycle3(g, 1, std::vector<long long>(n * n * n, 0), true);
}

Cocycle3 Cocycle3::operator*(const Cocycle3& o) const {
  if (!(group_ == o.group_)) throw std::invalid_argument("cocycle product: group mismatch");
  long long M = lcm_ll(M_, o.M_);
  std::vector<long long> exps(exps_.size());
  for (size_t i = 0; i < exps_.size(); ++i)
    exps[i] = (exps_[i] * (M / M_) + o.exps_[i] * (M / o.M_)) % M;
  // a product of cocycles satisfies the identity automatically
  return Cocycle3(group_, M, std::move(exps), true);
}

Cyclotomic Cocycle3::value(const GroupElement& g, const GroupElement& h,
                           const GroupElement& k) const {
  return Cyclotomic::root_of_unity(M_, exp_of(g, h, k));
}

bool Cocycle3::is_trivial_table() const {
  for (long long e : exps_)
    if (e != 0) return false;
  return true;
}

Cocycle2 Cocycle3::slant(const GroupElement& x) const {
  long long n = group_.order();
  std::vector<long long> exps(n * n);
  const auto elems = group_.elements();
  for (long long i = 0; i < n; ++i)
    for (long long j = 0; j < n; ++j)
      exps[i * n + j] =
          mod_ll(exp_of(x, elems[i], elems[j]) + exp_of(elems[i], elems[j], x) -
                     exp_of(elems[i], x, elems[j]),
                 M_);
  return Cocycle2(group_, M_, std::move(exps));
}

}  // namespace modcat
