#include "modcat/modular.hpp"

#include <algorithm>
#include <sstream>

#include "modcat/kernels.hpp"

namespace modcat {

namespace {

void check_shapes(const FusionRing& ring, const std::vector<std::vector<Cyclotomic>>& s,
                  const std::vector<Cyclotomic>& t) {
  size_t n = ring.rank();
  if (s.size() != n) throw std::invalid_argument("S matrix has wrong number of rows");
  for (const auto& row : s)
    if (row.size() != n) throw std::invalid_argument("S matrix has a wrong-sized row");
  if (t.size() != n) throw std::invalid_argument("T diagonal has wrong size");
}

}  // namespace

ModularData::ModularData(FusionRing ring, std::vector<std::vector<Cyclotomic>> s,
                         std::vector<Cyclotomic> t)
    : ModularData(std::move(ring), std::move(s), std::move(t), {}) {
  dims_ = compute_dims(ring_);
  global_dim2_ = fpdim_ring(dims_);
}

ModularData::ModularData(FusionRing ring, std::vector<std::vector<Cyclotomic>> s,
                         std::vector<Cyclotomic> t, std::vector<ObjectDim> dims)
    : ring_(std::move(ring)), S_(std::move(s)), T_(std::move(t)), dims_(std::move(dims)) {
  check_shapes(ring_, S_, T_);
  if (!dims_.empty() && dims_.size() != static_cast<size_t>(ring_.rank()))
    throw std::invalid_argument("dims table has wrong size");
  global_dim2_ = fpdim_ring(dims_);
}

bool centralizes(const ModularData& m, long long i, long long j) {
  return m.s(i, j) == m.dim_exact(i) * m.dim_exact(j);
}

FusionSubcategory centralizer_of(const ModularData& m, const FusionSubcategory& s) {
  std::vector<long long> members;
  for (long long i = 0; i < m.rank(); ++i) {
    bool central = true;
    for (long long j : s.members)
      if (!centralizes(m, i, j)) {
        central = false;
        break;
      }
    if (central) members.push_back(i);
  }
  // a centralizer is itself a fusion subcategory; the factory re-checks that
  return subcategory(m.ring(), std::move(members));
}

FusionSubcategory muger_center(const ModularData& m) {
  return centralizer_of(m, full_subcategory(m.ring()));
}

bool is_nondegenerate(const ModularData& m) { return muger_center(m).rank() == 1; }

bool nondegeneracy_cross_check(const ModularData& m) {
  bool by_center = is_nondegenerate(m);
  bool by_orthogonality = kernels::s_orthogonality_violations(m).empty();
  return by_center == by_orthogonality;
}

ModularValidation validate_modular(const ModularData& m, const ValidationOptions& opts) {
  ModularValidation out;
  auto issue = [&out](const std::string& check, const std::string& witness) {
    out.report.issues.push_back({check, witness});
  };
  auto pair_witness = [&m](long long i, long long j) {
    return "(" + m.ring().labels()[i] + ", " + m.ring().labels()[j] + ")";
  };

  for (const auto& iss : validate_ring(m.ring()).issues) out.report.issues.push_back(iss);

  long long n = m.rank();
  if (!m.s(0, 0).is_one()) issue("s-matrix", "S[0][0] != 1");
  for (long long i = 0; i < n; ++i)
    for (long long j = i + 1; j < n; ++j)
      if (m.s(i, j) != m.s(j, i)) issue("s-matrix", "S not symmetric at " + pair_witness(i, j));
  for (long long i = 0; i < n; ++i) {
    const Cyclotomic& d = m.dim_exact(i);
    if (d.conjugate() != d)
      issue("dims", "S[0][" + m.ring().labels()[i] + "] is not real");
    if (d * d != Cyclotomic::from_integer(m.dims()[i].d2))
      issue("dims", "S[0][" + m.ring().labels()[i] + "]^2 != certified d^2");
  }
  if (!m.twist(0).is_one()) issue("twists", "T[0] != 1");
  for (long long i = 0; i < n; ++i)
    if (!m.twist(i).as_root_of_unity())
      issue("twists", "T[" + m.ring().labels()[i] + "] is not a root of unity");

  for (const auto& v : kernels::balancing_violations(m))
    issue("balancing", pair_witness(v.i, v.j));

  bool nondeg = is_nondegenerate(m);
  bool ortho = kernels::s_orthogonality_violations(m).empty();
  if (nondeg != ortho)
    issue("nondegeneracy",
          "centralizer criterion and S conj(S) = D^2 C disagree");

  bool run = false;
  switch (opts.verlinde) {
    case ValidationOptions::Verlinde::force:
      run = true;
      break;
    case ValidationOptions::Verlinde::skip:
      out.verlinde_note = "skipped by request";
      break;
    case ValidationOptions::Verlinde::automatic:
      if (!nondeg)
        out.verlinde_note = "skipped: degenerate S is singular";
      else if (n > opts.verlinde_rank_cap)
        out.verlinde_note = "skipped: rank above cap";
      else
        run = true;
      break;
  }
  if (run) {
    out.verlinde_ran = true;
    for (const auto& v : kernels::verlinde_violations(m)) {
      std::ostringstream os;
      os << "(" << m.ring().labels()[v.i] << ", " << m.ring().labels()[v.j] << ", "
         << m.ring().labels()[v.k] << ")";
      issue("verlinde", os.str());
    }
  }
  return out;
}

SymmetricClassification classify_symmetric(const ModularData& m,
                                           const FusionSubcategory& s) {
  for (long long i : s.members)
    for (long long j : s.members)
      if (!centralizes(m, i, j))
        throw std::invalid_argument("classify_symmetric: subcategory does not centralize itself");
  std::optional<long long> witness;
  for (long long i : s.members) {
    if (m.twist(i).is_one()) continue;
    if (m.twist(i).is_integer(-1)) {
      if (!witness) witness = i;
    } else {
      throw std::domain_error("classify_symmetric: twist at " + m.ring().labels()[i] +
                              " is neither 1 nor -1");
    }
  }
  if (witness) return {SymmetricClass::super, witness};
  return {SymmetricClass::tannakian, std::nullopt};
}

ModularData deligne_product(const ModularData& a, const ModularData& b) {
  FusionRing ring = product_ring(a.ring(), b.ring());
  long long ra = a.rank(), rb = b.rank();
  std::vector<std::vector<Cyclotomic>> S(ra * rb, std::vector<Cyclotomic>(ra * rb));
  std::vector<Cyclotomic> T(ra * rb);
  std::vector<ObjectDim> dims(ra * rb);
  for (long long i1 = 0; i1 < ra; ++i1)
    for (long long j1 = 0; j1 < rb; ++j1) {
      long long u = i1 * rb + j1;
      T[u] = a.twist(i1) * b.twist(j1);
      dims[u] = {a.dims()[i1].fp * b.dims()[j1].fp, a.dims()[i1].d2 * b.dims()[j1].d2};
      for (long long i2 = 0; i2 < ra; ++i2)
        for (long long j2 = 0; j2 < rb; ++j2)
          S[u][i2 * rb + j2] = a.s(i1, i2) * b.s(j1, j2);
    }
  return ModularData(std::move(ring), std::move(S), std::move(T), std::move(dims));
}

std::vector<FusionSubcategory> prime_decomposition(const ModularData& m,
                                                   long long rank_limit) {
  if (!is_nilpotent(m.ring()))
    throw std::invalid_argument("prime_decomposition: input is not nilpotent");
  if (!is_nondegenerate(m))
    throw std::invalid_argument("prime_decomposition: input is degenerate");
  long long d2 = m.global_dim2();
  auto facs = factorize(d2);
  if (facs.empty()) return {};
  auto lattice = all_subcategories(m.ring(), rank_limit);
  std::vector<FusionSubcategory> comps;
  for (auto [p, a] : facs) {
    long long target = 1;
    for (int e = 0; e < a; ++e) target *= p;
    FusionSubcategory comp = trivial_subcategory(m.ring());
    for (const auto& s : lattice) {
      long long f = fpdim_subcategory(m.dims(), s);
      bool p_power = f > 1;
      while (f > 1) {
        if (f % p) {
          p_power = false;
          break;
        }
        f /= p;
      }
      if (p_power) comp = subcategory_join(m.ring(), comp, s);
    }
    if (fpdim_subcategory(m.dims(), comp) != target) {
      std::ostringstream os;
      os << "prime component at p=" << p << " has FPdim "
         << fpdim_subcategory(m.dims(), comp) << ", expected " << target;
      throw std::domain_error(os.str());
    }
    comps.push_back(std::move(comp));
  }
  for (size_t x = 0; x < comps.size(); ++x)
    for (size_t y = x + 1; y < comps.size(); ++y)
      for (long long i : comps[x].members)
        for (long long j : comps[y].members)
          if (!centralizes(m, i, j))
            throw std::domain_error("prime components fail to centralize each other");
  for (const auto& comp : comps)
    for (long long i : comp.members) {
      if (i == 0) continue;
      bool transparent = true;
      for (long long j : comp.members)
        if (!centralizes(m, i, j)) {
          transparent = false;
          break;
        }
      if (transparent)
        throw std::domain_error("prime component is degenerate at " + m.ring().labels()[i]);
    }
  return comps;
}

std::vector<FusionSubcategory> tannakian_subcategories(const ModularData& m,
                                                       long long rank_limit) {
  std::vector<FusionSubcategory> out;
  for (const auto& s : all_subcategories(m.ring(), rank_limit)) {
    bool sym = true;
    for (long long i : s.members) {
      for (long long j : s.members)
        if (!centralizes(m, i, j)) {
          sym = false;
          break;
        }
      if (!sym) break;
    }
    if (!sym) continue;
    bool trivial_twists = true;
    for (long long i : s.members)
      if (!m.twist(i).is_one()) {
        trivial_twists = false;
        break;
      }
    if (trivial_twists) out.push_back(s);
  }
  return out;
}

}  // namespace modcat
