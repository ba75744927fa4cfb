#include "modcat/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <map>
#include <tuple>

namespace modcat::kernels {

namespace {

// ---- shared integer machinery -------------------------------------------

// In-place reduction of int64 polynomial coefficients modulo Phi_M (monic).
void reduce_int_mod_phi(std::vector<long long>& c, const std::vector<long long>& phi) {
  long long deg = static_cast<long long>(phi.size()) - 1;
  for (long long e = static_cast<long long>(c.size()) - 1; e >= deg; --e) {
    long long t = c[e];
    if (t == 0) continue;
    c[e] = 0;
    for (long long j = 0; j < deg; ++j)
      if (phi[j] != 0) c[e - deg + j] -= t * phi[j];
  }
}

bool all_zero(const std::vector<long long>& c) {
  for (long long v : c)
    if (v != 0) return false;
  return true;
}

// Conductor that contains every root of unity appearing in S (and T when
// asked): make it even so orders of roots always divide it.
long long common_root_order(const ModularData& m, bool include_t) {
  long long n = m.rank(), big = 1;
  for (long long i = 0; i < n; ++i) {
    for (long long j = 0; j < n; ++j) big = lcm_ll(big, m.s(i, j).conductor());
    if (include_t) big = lcm_ll(big, m.twist(i).conductor());
  }
  if (big % 2) big *= 2;
  return big;
}

// Integer coordinates of v in Z[zeta_M] (length phi(M)); nullopt when some
// coordinate is not an int64 integer.
std::optional<std::vector<long long>> int_coords(const Cyclotomic& v, long long M) {
  std::vector<long long> out(euler_phi(M), 0);
  for (const auto& t : v.rebased(M).terms()) {
    if (t.coeff.get_den() != 1) return std::nullopt;
    if (!t.coeff.get_num().fits_slong_p()) return std::nullopt;
    out[t.exp] = t.coeff.get_num().get_si();
  }
  return out;
}

// Exponent lookup for roots of unity at conductor M, keyed by the canonical
// reduced coordinates (integral for roots).
class RootTable {
 public:
  explicit RootTable(long long M) : M_(M) {
    for (long long j = 0; j < M; ++j) {
      auto key = key_of(Cyclotomic::root_of_unity(M_, j));
      if (key) idx_.emplace(std::move(*key), j);
    }
  }
  // exponent e with value == zeta_M^e, or -1
  long long lookup(const Cyclotomic& v) const {
    if (v.is_zero() || v.conductor() > M_ || M_ % v.conductor() != 0) return -1;
    auto key = key_of(v.rebased(M_));
    if (!key) return -1;
    auto it = idx_.find(*key);
    return it == idx_.end() ? -1 : it->second;
  }

 private:
  using Key = std::vector<std::pair<long long, long long>>;
  static std::optional<Key> key_of(const Cyclotomic& v) {
    Key key;
    for (const auto& t : v.terms()) {
      if (t.coeff.get_den() != 1 || !t.coeff.get_num().fits_slong_p()) return std::nullopt;
      key.emplace_back(t.exp, t.coeff.get_num().get_si());
    }
    return key;
  }
  long long M_;
  std::map<Key, long long> idx_;
};

// Precomputed tiers for the S-matrix sweeps.
struct STables {
  long long n = 0, M = 0, deg = 0;
  std::vector<long long> phi;  // Phi_M coefficients
  bool monomial = false;       // E[i*n+j] = exponent of S[i][j] as zeta_M power
  std::vector<long long> E;
  bool integral = false;       // C[(i*n+j)*deg ...] = integer coordinates
  std::vector<long long> C;
};

// deg limit beyond which the convolution tier stops paying off
constexpr long long kConvDegCap = 32;

STables prepare_s_tables(const ModularData& m) {
  STables t;
  t.n = m.rank();
  t.M = common_root_order(m, false);
  t.phi = cyclotomic_polynomial(t.M);
  t.deg = static_cast<long long>(t.phi.size()) - 1;
  bool pointed = true;
  for (const auto& d : m.dims())
    if (d.d2 != 1) pointed = false;
  if (pointed) {
    RootTable roots(t.M);
    t.E.assign(t.n * t.n, -1);
    bool ok = true;
    for (long long i = 0; i < t.n && ok; ++i)
      for (long long j = 0; j < t.n && ok; ++j) {
        t.E[i * t.n + j] = roots.lookup(m.s(i, j));
        if (t.E[i * t.n + j] < 0) ok = false;
      }
    t.monomial = ok;
    if (ok) return t;
  }
  if (t.deg <= kConvDegCap) {
    t.C.assign(t.n * t.n * t.deg, 0);
    bool ok = true;
    for (long long i = 0; i < t.n && ok; ++i)
      for (long long j = 0; j < t.n && ok; ++j) {
        auto c = int_coords(m.s(i, j), t.M);
        if (!c) {
          ok = false;
          break;
        }
        std::copy(c->begin(), c->end(), t.C.begin() + (i * t.n + j) * t.deg);
      }
    t.integral = ok;
  }
  return t;
}

// out += reduce(a conv b); scratch must hold 2*deg-1 slots
void conv_reduce_add(const long long* a, const long long* b, long long deg,
                     const std::vector<long long>& phi, std::vector<long long>& scratch,
                     long long* out) {
  std::fill(scratch.begin(), scratch.end(), 0);
  for (long long x = 0; x < deg; ++x) {
    if (a[x] == 0) continue;
    for (long long y = 0; y < deg; ++y)
      if (b[y] != 0) scratch[x + y] += a[x] * b[y];
  }
  reduce_int_mod_phi(scratch, phi);
  for (long long x = 0; x < deg; ++x) out[x] += scratch[x];
}

template <typename V>
void sort_dedup(std::vector<V>& v, bool (*less)(const V&, const V&)) {
  std::sort(v.begin(), v.end(), less);
}

bool triple_less(const TripleViolation& a, const TripleViolation& b) {
  return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
}
bool pair_less(const PairViolation& a, const PairViolation& b) {
  return std::tie(a.i, a.j) < std::tie(b.i, b.j);
}
bool assoc_less(const AssocViolation& a, const AssocViolation& b) {
  return std::tie(a.i, a.j, a.k, a.l) < std::tie(b.i, b.j, b.k, b.l);
}
bool quad_less(const CocycleQuad& a, const CocycleQuad& b) {
  return std::tie(a.g, a.h, a.k, a.l) < std::tie(b.g, b.h, b.k, b.l);
}

}  // namespace

// ---- associativity -------------------------------------------------------

std::vector<AssocViolation> associativity_violations_serial(const FusionRing& r) {
  long long n = r.rank();
  std::vector<AssocViolation> out;
  for (long long i = 0; i < n; ++i)
    for (long long j = 0; j < n; ++j)
      for (long long k = 0; k < n; ++k)
        for (long long l = 0; l < n; ++l) {
          long long lhs = 0, rhs = 0;
          for (long long mm = 0; mm < n; ++mm) {
            lhs += r.fusion(i, j, mm) * r.fusion(mm, k, l);
            rhs += r.fusion(j, k, mm) * r.fusion(i, mm, l);
          }
          if (lhs != rhs) out.push_back({i, j, k, l});
        }
  sort_dedup(out, assoc_less);
  return out;
}

std::vector<AssocViolation> associativity_violations(const FusionRing& r) {
  long long n = r.rank();
  std::vector<AssocViolation> out;
#pragma omp parallel
  {
    std::vector<AssocViolation> local;
    std::vector<long long> lhs(n), rhs(n);
#pragma omp for collapse(2) schedule(static)
    for (long long i = 0; i < n; ++i)
      for (long long j = 0; j < n; ++j)
        for (long long k = 0; k < n; ++k) {
          std::fill(lhs.begin(), lhs.end(), 0);
          std::fill(rhs.begin(), rhs.end(), 0);
          for (const auto& [mm, v1] : r.product(i, j))
            for (const auto& [l, v2] : r.product(mm, k)) lhs[l] += v1 * v2;
          for (const auto& [mm, v1] : r.product(j, k))
            for (const auto& [l, v2] : r.product(i, mm)) rhs[l] += v1 * v2;
          for (long long l = 0; l < n; ++l)
            if (lhs[l] != rhs[l]) local.push_back({i, j, k, l});
        }
#pragma omp critical
    out.insert(out.end(), local.begin(), local.end());
  }
  sort_dedup(out, assoc_less);
  return out;
}

// ---- 3-cocycle identity --------------------------------------------------

std::vector<CocycleQuad> cocycle3_identity_violations_serial(const Cocycle3& w) {
  const auto& grp = w.group();
  auto elems = grp.elements();
  long long n = grp.order();
  std::vector<CocycleQuad> out;
  for (long long g = 0; g < n; ++g)
    for (long long h = 0; h < n; ++h)
      for (long long k = 0; k < n; ++k)
        for (long long l = 0; l < n; ++l) {
          Cyclotomic lhs = w.value(elems[h], elems[k], elems[l]) *
                           w.value(elems[g], grp.add(elems[h], elems[k]), elems[l]) *
                           w.value(elems[g], elems[h], elems[k]);
          Cyclotomic rhs = w.value(grp.add(elems[g], elems[h]), elems[k], elems[l]) *
                           w.value(elems[g], elems[h], grp.add(elems[k], elems[l]));
          if (lhs != rhs) out.push_back({g, h, k, l});
        }
  sort_dedup(out, quad_less);
  return out;
}

std::vector<CocycleQuad> cocycle3_identity_violations(const Cocycle3& w) {
  const auto& grp = w.group();
  long long n = grp.order();
  long long M = w.root_order();
  const auto& e = w.exps();
  // precomputed index addition table
  std::vector<long long> addt(n * n);
  {
    auto elems = grp.elements();
    for (long long a = 0; a < n; ++a)
      for (long long b = 0; b < n; ++b)
        addt[a * n + b] = grp.index_of(grp.add(elems[a], elems[b]));
  }
  auto at = [&](long long a, long long b, long long c) { return e[(a * n + b) * n + c]; };
  std::vector<CocycleQuad> out;
#pragma omp parallel
  {
    std::vector<CocycleQuad> local;
#pragma omp for collapse(2) schedule(static)
    for (long long g = 0; g < n; ++g)
      for (long long h = 0; h < n; ++h)
        for (long long k = 0; k < n; ++k)
          for (long long l = 0; l < n; ++l) {
            long long lhs = at(h, k, l) + at(g, addt[h * n + k], l) + at(g, h, k);
            long long rhs = at(addt[g * n + h], k, l) + at(g, h, addt[k * n + l]);
            if ((lhs - rhs) % M != 0) local.push_back({g, h, k, l});
          }
#pragma omp critical
    out.insert(out.end(), local.begin(), local.end());
  }
  sort_dedup(out, quad_less);
  return out;
}

// ---- Verlinde ------------------------------------------------------------

std::vector<TripleViolation> verlinde_violations_serial(const ModularData& m) {
  long long n = m.rank();
  Rational invD2 = rat(1, m.global_dim2());
  std::vector<Cyclotomic> invd(n);
  for (long long r = 0; r < n; ++r) invd[r] = m.dim_exact(r).inverse();
  std::vector<std::vector<Cyclotomic>> conjS(n, std::vector<Cyclotomic>(n));
  for (long long k = 0; k < n; ++k)
    for (long long r = 0; r < n; ++r) conjS[k][r] = m.s(k, r).conjugate();
  std::vector<TripleViolation> out;
  for (long long i = 0; i < n; ++i)
    for (long long j = 0; j < n; ++j) {
      std::vector<Cyclotomic> row(n);
      for (long long r = 0; r < n; ++r) row[r] = m.s(i, r) * m.s(j, r) * invd[r];
      for (long long k = 0; k < n; ++k) {
        Cyclotomic acc;
        for (long long r = 0; r < n; ++r) acc = acc + row[r] * conjS[k][r];
        acc = acc * invD2;
        if (!acc.is_integer(m.ring().fusion(i, j, k))) out.push_back({i, j, k});
      }
    }
  sort_dedup(out, triple_less);
  return out;
}

namespace {

std::vector<TripleViolation> verlinde_monomial(const ModularData& m, const STables& t) {
  long long n = t.n, M = t.M;
  long long D2 = m.global_dim2();
  std::vector<TripleViolation> out;
#pragma omp parallel
  {
    std::vector<TripleViolation> local;
    std::vector<long long> cnt(M, 0);
#pragma omp for collapse(2) schedule(static)
    for (long long i = 0; i < n; ++i)
      for (long long j = 0; j < n; ++j) {
        const long long* Ei = t.E.data() + i * n;
        const long long* Ej = t.E.data() + j * n;
        for (long long k = 0; k < n; ++k) {
          const long long* Ek = t.E.data() + k * n;
          std::fill(cnt.begin(), cnt.end(), 0);
          for (long long r = 0; r < n; ++r) {
            long long e = Ei[r] + Ej[r] + M - Ek[r];
            while (e >= M) e -= M;
            ++cnt[e];
          }
          cnt[0] -= D2 * m.ring().fusion(i, j, k);
          reduce_int_mod_phi(cnt, t.phi);
          if (!all_zero(cnt)) local.push_back({i, j, k});
        }
      }
#pragma omp critical
    out.insert(out.end(), local.begin(), local.end());
  }
  sort_dedup(out, triple_less);
  return out;
}

std::vector<TripleViolation> verlinde_integral(const ModularData& m, const STables& t) {
  long long n = t.n, deg = t.deg;
  long long D2 = m.global_dim2();
  // Delta clears all 1/d_r: 1/d_r = d_r / d2_r
  long long Delta = 1;
  for (const auto& d : m.dims()) Delta = lcm_ll(Delta, d.d2);
  // W[k][r] = coords( conj(S[k][r]) * d_r * (Delta / d2_r) )
  std::vector<long long> W(n * n * deg, 0);
  {
    std::vector<long long> scratch(2 * deg - 1);
    for (long long k = 0; k < n; ++k)
      for (long long r = 0; r < n; ++r) {
        auto cc = int_coords(m.s(k, r).conjugate(), t.M);
        if (!cc) throw std::logic_error("verlinde kernel: conjugate left Z[zeta]");
        std::vector<long long> dd(t.C.begin() + (0 * n + r) * deg,
                                  t.C.begin() + (0 * n + r + 1) * deg);
        long long w = Delta / m.dims()[r].d2;
        for (auto& v : dd) v *= w;
        conv_reduce_add(cc->data(), dd.data(), deg, t.phi, scratch,
                        W.data() + (k * n + r) * deg);
      }
  }
  std::vector<TripleViolation> out;
#pragma omp parallel
  {
    std::vector<TripleViolation> local;
    std::vector<long long> scratch(2 * deg - 1);
    std::vector<long long> row(n * deg), acc(deg);
#pragma omp for collapse(2) schedule(static)
    for (long long i = 0; i < n; ++i)
      for (long long j = 0; j < n; ++j) {
        std::fill(row.begin(), row.end(), 0);
        for (long long r = 0; r < n; ++r)
          conv_reduce_add(t.C.data() + (i * n + r) * deg, t.C.data() + (j * n + r) * deg,
                          deg, t.phi, scratch, row.data() + r * deg);
        for (long long k = 0; k < n; ++k) {
          std::fill(acc.begin(), acc.end(), 0);
          for (long long r = 0; r < n; ++r)
            conv_reduce_add(row.data() + r * deg, W.data() + (k * n + r) * deg, deg,
                            t.phi, scratch, acc.data());
          acc[0] -= Delta * D2 * m.ring().fusion(i, j, k);
          if (!all_zero(acc)) local.push_back({i, j, k});
        }
      }
#pragma omp critical
    out.insert(out.end(), local.begin(), local.end());
  }
  sort_dedup(out, triple_less);
  return out;
}

std::vector<TripleViolation> verlinde_general(const ModularData& m) {
  long long n = m.rank();
  Rational invD2 = rat(1, m.global_dim2());
  std::vector<Cyclotomic> invd(n);
  for (long long r = 0; r < n; ++r) invd[r] = m.dim_exact(r).inverse();
  std::vector<std::vector<Cyclotomic>> conjS(n, std::vector<Cyclotomic>(n));
  for (long long k = 0; k < n; ++k)
    for (long long r = 0; r < n; ++r) conjS[k][r] = m.s(k, r).conjugate();
  std::vector<TripleViolation> out;
#pragma omp parallel
  {
    std::vector<TripleViolation> local;
#pragma omp for collapse(2) schedule(dynamic)
    for (long long i = 0; i < n; ++i)
      for (long long j = 0; j < n; ++j) {
        std::vector<Cyclotomic> row(n);
        for (long long r = 0; r < n; ++r) row[r] = m.s(i, r) * m.s(j, r) * invd[r];
        for (long long k = 0; k < n; ++k) {
          Cyclotomic acc;
          for (long long r = 0; r < n; ++r) acc = acc + row[r] * conjS[k][r];
          acc = acc * invD2;
          if (!acc.is_integer(m.ring().fusion(i, j, k))) local.push_back({i, j, k});
        }
      }
#pragma omp critical
    out.insert(out.end(), local.begin(), local.end());
  }
  sort_dedup(out, triple_less);
  return out;
}

}  // namespace

std::vector<TripleViolation> verlinde_violations(const ModularData& m) {
  STables t = prepare_s_tables(m);
  if (t.monomial) return verlinde_monomial(m, t);
  if (t.integral) return verlinde_integral(m, t);
  return verlinde_general(m);
}

// ---- balancing -----------------------------------------------------------

namespace {

// theta^-1 taken as the conjugate; T entries are roots of unity (checked
// separately by the validator), where the two coincide.
std::vector<PairViolation> balancing_impl(const ModularData& m, bool parallel) {
  long long n = m.rank();
  std::vector<Cyclotomic> tbar(n);
  for (long long i = 0; i < n; ++i) tbar[i] = m.twist(i).conjugate();
  std::vector<PairViolation> out;
#pragma omp parallel if (parallel)
  {
    std::vector<PairViolation> local;
#pragma omp for collapse(2) schedule(static)
    for (long long i = 0; i < n; ++i)
      for (long long j = 0; j < n; ++j) {
        Cyclotomic sum;
        for (const auto& [k, v] : m.ring().product(i, j))
          sum = sum + m.dim_exact(k) * m.twist(k) * rat(v);
        Cyclotomic rhs = tbar[i] * tbar[j] * sum;
        if (rhs != m.s(i, j)) local.push_back({i, j});
      }
#pragma omp critical
    out.insert(out.end(), local.begin(), local.end());
  }
  sort_dedup(out, pair_less);
  return out;
}

}  // namespace

std::vector<PairViolation> balancing_violations_serial(const ModularData& m) {
  return balancing_impl(m, false);
}

std::vector<PairViolation> balancing_violations(const ModularData& m) {
  return balancing_impl(m, true);
}

// ---- S conj(S) = D^2 C ---------------------------------------------------

std::vector<PairViolation> s_orthogonality_violations_serial(const ModularData& m) {
  long long n = m.rank();
  std::vector<PairViolation> out;
  for (long long i = 0; i < n; ++i)
    for (long long j = 0; j < n; ++j) {
      Cyclotomic acc;
      for (long long r = 0; r < n; ++r) acc = acc + m.s(i, r) * m.s(j, r).conjugate();
      long long want = (j == m.ring().dual()[i]) ? m.global_dim2() : 0;
      if (!acc.is_integer(want)) out.push_back({i, j});
    }
  sort_dedup(out, pair_less);
  return out;
}

std::vector<PairViolation> s_orthogonality_violations(const ModularData& m) {
  STables t = prepare_s_tables(m);
  long long n = m.rank();
  std::vector<PairViolation> out;
  if (t.monomial) {
    long long M = t.M;
#pragma omp parallel
    {
      std::vector<PairViolation> local;
      std::vector<long long> cnt(M, 0);
#pragma omp for collapse(2) schedule(static)
      for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j) {
          std::fill(cnt.begin(), cnt.end(), 0);
          for (long long r = 0; r < n; ++r) {
            long long e = t.E[i * n + r] + M - t.E[j * n + r];
            while (e >= M) e -= M;
            ++cnt[e];
          }
          if (j == m.ring().dual()[i]) cnt[0] -= m.global_dim2();
          reduce_int_mod_phi(cnt, t.phi);
          if (!all_zero(cnt)) local.push_back({i, j});
        }
#pragma omp critical
      out.insert(out.end(), local.begin(), local.end());
    }
    sort_dedup(out, pair_less);
    return out;
  }
  if (t.integral) {
    long long deg = t.deg;
    std::vector<long long> Cbar(n * n * deg, 0);
    for (long long j = 0; j < n; ++j)
      for (long long r = 0; r < n; ++r) {
        auto cc = int_coords(m.s(j, r).conjugate(), t.M);
        if (!cc) throw std::logic_error("orthogonality kernel: conjugate left Z[zeta]");
        std::copy(cc->begin(), cc->end(), Cbar.begin() + (j * n + r) * deg);
      }
#pragma omp parallel
    {
      std::vector<PairViolation> local;
      std::vector<long long> scratch(2 * deg - 1), acc(deg);
#pragma omp for collapse(2) schedule(static)
      for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j) {
          std::fill(acc.begin(), acc.end(), 0);
          for (long long r = 0; r < n; ++r)
            conv_reduce_add(t.C.data() + (i * n + r) * deg, Cbar.data() + (j * n + r) * deg,
                            deg, t.phi, scratch, acc.data());
          if (j == m.ring().dual()[i]) acc[0] -= m.global_dim2();
          if (!all_zero(acc)) local.push_back({i, j});
        }
#pragma omp critical
      out.insert(out.end(), local.begin(), local.end());
    }
    sort_dedup(out, pair_less);
    return out;
  }
  return s_orthogonality_violations_serial(m);
}

}  // namespace modcat::kernels
