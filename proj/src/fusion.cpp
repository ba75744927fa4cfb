#include "modcat/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "modcat/kernels.hpp"

namespace modcat {

std::string ValidationReport::str() const {
  if (ok()) return "ok";
  std::ostringstream os;
  for (const auto& iss : issues) os << "[" << iss.check << "] " << iss.witness << "\n";
  return os.str();
}

FusionRing::FusionRing(std::vector<std::string> labels, std::vector<long long> dual,
                       const std::vector<FusionTriple>& triples)
    : labels_(std::move(labels)), dual_(std::move(dual)) {
  long long n = rank();
  if (n == 0) throw std::invalid_argument("fusion ring needs at least the unit");
  if (static_cast<long long>(dual_.size()) != n)
    throw std::invalid_argument("dual table size mismatch");
  for (long long d : dual_)
    if (d < 0 || d >= n) throw std::invalid_argument("dual index out of range");
  prod_.assign(n * n, {});
  std::map<std::tuple<long long, long long, long long>, long long> acc;
  for (const auto& t : triples) {
    if (t.i < 0 || t.i >= n || t.j < 0 || t.j >= n || t.k < 0 || t.k >= n)
      throw std::invalid_argument("fusion triple index out of range");
    if (t.value < 0) throw std::invalid_argument("negative fusion multiplicity");
    if (t.value > 0) acc[{t.i, t.j, t.k}] += t.value;
  }
  for (const auto& [key, v] : acc) {
    auto [i, j, k] = key;
    prod_[i * n + j].emplace_back(k, v);
  }
}

long long FusionRing::fusion(long long i, long long j, long long k) const {
  for (const auto& [kk, v] : prod_[i * rank() + j])
    if (kk == k) return v;
  return 0;
}

const std::vector<std::pair<long long, long long>>& FusionRing::product(long long i,
                                                                        long long j) const {
  return prod_[i * rank() + j];
}

std::vector<FusionTriple> FusionRing::triples() const {
  std::vector<FusionTriple> out;
  for (long long i = 0; i < rank(); ++i)
    for (long long j = 0; j < rank(); ++j)
      for (const auto& [k, v] : prod_[i * rank() + j]) out.push_back({i, j, k, v});
  return out;
}

bool FusionRing::operator==(const FusionRing& o) const {
  return labels_ == o.labels_ && dual_ == o.dual_ && prod_ == o.prod_;
}

ValidationReport validate_ring(const FusionRing& r) {
  ValidationReport rep;
  long long n = r.rank();
  auto issue = [&rep](const std::string& check, const std::string& witness) {
    rep.issues.push_back({check, witness});
  };
  auto ijk = [&r](long long i, long long j, long long k) {
    std::ostringstream os;
    os << "(" << r.labels()[i] << ", " << r.labels()[j] << ", " << r.labels()[k] << ")";
    return os.str();
  };
  for (long long j = 0; j < n; ++j)
    for (long long k = 0; k < n; ++k) {
      if (r.fusion(0, j, k) != (j == k ? 1 : 0)) issue("unit", ijk(0, j, k));
      if (r.fusion(j, 0, k) != (j == k ? 1 : 0)) issue("unit", ijk(j, 0, k));
    }
  if (r.dual()[0] != 0) issue("duality", "dual(unit) != unit");
  for (long long i = 0; i < n; ++i)
    if (r.dual()[r.dual()[i]] != i) issue("duality", "dual not an involution at " + r.labels()[i]);
  for (long long i = 0; i < n; ++i)
    for (long long j = 0; j < n; ++j) {
      long long want = (j == r.dual()[i]) ? 1 : 0;
      if (r.fusion(i, j, 0) != want) issue("duality", ijk(i, j, 0));
    }
  for (long long i = 0; i < n; ++i)
    for (long long j = 0; j < n; ++j)
      for (const auto& [k, v] : r.product(i, j)) {
        if (r.fusion(j, i, k) != v) issue("commutativity", ijk(i, j, k));
        if (r.fusion(r.dual()[i], k, j) != v) issue("frobenius", ijk(i, j, k));
      }
  for (const auto& viol : kernels::associativity_violations(r))
    issue("associativity", ijk(viol.i, viol.j, viol.k) + " x " + r.labels()[viol.l]);
  return rep;
}

std::vector<ObjectDim> compute_dims(const FusionRing& r) {
  long long n = r.rank();
  std::vector<ObjectDim> dims(n);
  for (long long i = 0; i < n; ++i) {
    // power iteration on (N_i + I); the shift makes periodic matrices converge
    std::vector<double> x(n, 1.0), y(n);
    double lambda = 0;
    bool converged = false;
    for (int it = 0; it < 200000 && !converged; ++it) {
      for (long long j = 0; j < n; ++j) {
        double s = x[j];
        for (const auto& [k, v] : r.product(i, j)) s += v * x[k];
        y[j] = s;
      }
      double mx = 0;
      for (double v : y) mx = std::max(mx, v);
      for (long long j = 0; j < n; ++j) x[j] = y[j] / mx;
      if (std::abs(mx - lambda) <= 1e-12 * std::max(1.0, mx)) converged = true;
      lambda = mx;
    }
    if (!converged)
      throw std::domain_error("power iteration did not converge for " + r.labels()[i]);
    double d = lambda - 1.0;
    double d2 = d * d;
    long long cert = std::llround(d2);
    if (std::abs(d2 - cert) > 1e-9 || cert < 1)
      throw std::domain_error("d^2 not certified as a positive integer for " +
                              r.labels()[i] + " (d^2 ~ " + std::to_string(d2) + ")");
    dims[i] = {d, cert};
  }
  return dims;
}

long long fpdim_ring(const std::vector<ObjectDim>& dims) {
  long long s = 0;
  for (const auto& d : dims) s += d.d2;
  return s;
}

bool FusionSubcategory::contains(long long i) const {
  return std::binary_search(members.begin(), members.end(), i);
}

bool FusionSubcategory::operator<(const FusionSubcategory& o) const {
  if (members.size() != o.members.size()) return members.size() < o.members.size();
  return members < o.members;
}

namespace {

// closure of a seed set under unit, duality and fusion constituents
std::vector<long long> close_under_fusion(const FusionRing& r, std::vector<long long> seed) {
  std::vector<char> in(r.rank(), 0);
  std::vector<long long> queue;
  auto push = [&](long long i) {
    if (!in[i]) {
      in[i] = 1;
      queue.push_back(i);
    }
  };
  push(0);
  for (long long g : seed) push(g);
  for (size_t head = 0; head < queue.size(); ++head) {
    long long i = queue[head];
    push(r.dual()[i]);
    // pair i with everything currently present (including later arrivals)
    for (size_t other = 0; other < queue.size(); ++other)
      for (const auto& [k, v] : r.product(i, queue[other])) push(k);
  }
  std::vector<long long> out(queue.begin(), queue.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

FusionSubcategory subcategory(const FusionRing& r, std::vector<long long> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  FusionSubcategory s{members};
  for (long long i : members)
    if (i < 0 || i >= r.rank()) throw std::invalid_argument("subcategory index out of range");
  if (!s.contains(0)) throw std::invalid_argument("subcategory must contain the unit");
  for (long long i : members) {
    if (!s.contains(r.dual()[i]))
      throw std::invalid_argument("subcategory not closed under duality at " + r.labels()[i]);
    for (long long j : members)
      for (const auto& [k, v] : r.product(i, j))
        if (!s.contains(k))
          throw std::invalid_argument("subcategory not closed under fusion: " +
                                      r.labels()[i] + " x " + r.labels()[j] + " -> " +
                                      r.labels()[k]);
  }
  return s;
}

FusionSubcategory subcategory_generated(const FusionRing& r,
                                        const std::vector<long long>& gens) {
  return {close_under_fusion(r, gens)};
}

FusionSubcategory full_subcategory(const FusionRing& r) {
  std::vector<long long> all(r.rank());
  for (long long i = 0; i < r.rank(); ++i) all[i] = i;
  return {all};
}

FusionSubcategory trivial_subcategory(const FusionRing&) { return {{0}}; }

bool subcategory_includes(const FusionSubcategory& a, const FusionSubcategory& b) {
  return std::includes(a.members.begin(), a.members.end(), b.members.begin(),
                       b.members.end());
}

FusionSubcategory subcategory_join(const FusionRing& r, const FusionSubcategory& a,
                                   const FusionSubcategory& b) {
  std::vector<long long> seed = a.members;
  seed.insert(seed.end(), b.members.begin(), b.members.end());
  return {close_under_fusion(r, seed)};
}

FusionSubcategory subcategory_meet(const FusionRing&, const FusionSubcategory& a,
                                   const FusionSubcategory& b) {
  std::vector<long long> out;
  std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(),
                        b.members.end(), std::back_inserter(out));
  return {out};
}

long long fpdim_subcategory(const std::vector<ObjectDim>& dims, const FusionSubcategory& s) {
  long long t = 0;
  for (long long i : s.members) t += dims[i].d2;
  return t;
}

FusionRing restrict_ring(const FusionRing& r, const FusionSubcategory& s) {
  long long m = s.rank();
  std::vector<long long> back(r.rank(), -1);
  for (long long ni = 0; ni < m; ++ni) back[s.members[ni]] = ni;
  std::vector<std::string> labels(m);
  std::vector<long long> dual(m);
  for (long long ni = 0; ni < m; ++ni) {
    labels[ni] = r.labels()[s.members[ni]];
    dual[ni] = back[r.dual()[s.members[ni]]];
    if (dual[ni] < 0) throw std::invalid_argument("restrict_ring: set not closed under dual");
  }
  std::vector<FusionTriple> triples;
  for (long long i = 0; i < m; ++i)
    for (long long j = 0; j < m; ++j)
      for (const auto& [k, v] : r.product(s.members[i], s.members[j])) {
        if (back[k] < 0)
          throw std::invalid_argument("restrict_ring: set not closed under fusion");
        triples.push_back({i, j, back[k], v});
      }
  return FusionRing(std::move(labels), std::move(dual), triples);
}

FusionRing product_ring(const FusionRing& a, const FusionRing& b) {
  long long ra = a.rank(), rb = b.rank();
  std::vector<std::string> labels(ra * rb);
  std::vector<long long> dual(ra * rb);
  for (long long i = 0; i < ra; ++i)
    for (long long j = 0; j < rb; ++j) {
      labels[i * rb + j] = a.labels()[i] + "*" + b.labels()[j];
      dual[i * rb + j] = a.dual()[i] * rb + b.dual()[j];
    }
  std::vector<FusionTriple> triples;
  for (long long i1 = 0; i1 < ra; ++i1)
    for (long long i2 = 0; i2 < ra; ++i2)
      for (const auto& [k1, v1] : a.product(i1, i2))
        for (long long j1 = 0; j1 < rb; ++j1)
          for (long long j2 = 0; j2 < rb; ++j2)
            for (const auto& [k2, v2] : b.product(j1, j2))
              triples.push_back({i1 * rb + j1, i2 * rb + j2, k1 * rb + k2, v1 * v2});
  return FusionRing(std::move(labels), std::move(dual), triples);
}

FusionSubcategory adjoint_of(const FusionRing& r, const FusionSubcategory& s) {
  std::vector<long long> seed;
  for (long long i : s.members)
    for (const auto& [k, v] : r.product(i, r.dual()[i])) seed.push_back(k);
  return {close_under_fusion(r, seed)};
}

FusionSubcategory adjoint_subcategory(const FusionRing& r) {
  return adjoint_of(r, full_subcategory(r));
}

std::vector<FusionSubcategory> descending_central_series(const FusionRing& r) {
  std::vector<FusionSubcategory> series{full_subcategory(r)};
  while (true) {
    FusionSubcategory next = adjoint_of(r, series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
    if (series.back().rank() == 1) break;
  }
  return series;
}

bool is_nilpotent(const FusionRing& r) {
  return descending_central_series(r).back().rank() == 1;
}

std::optional<int> nilpotency_class(const FusionRing& r) {
  auto series = descending_central_series(r);
  if (series.back().rank() != 1) return std::nullopt;
  return static_cast<int>(series.size()) - 1;
}

FusionSubcategory commutator_subcategory(const FusionRing& r, const FusionSubcategory& s) {
  std::vector<long long> seed;
  for (long long i = 0; i < r.rank(); ++i) {
    bool inside = true;
    for (const auto& [k, v] : r.product(i, r.dual()[i]))
      if (!s.contains(k)) {
        inside = false;
        break;
      }
    if (inside) seed.push_back(i);
  }
  return {close_under_fusion(r, seed)};
}

FusionSubcategory pointed_part(const FusionRing& r, const std::vector<ObjectDim>& dims) {
  std::vector<long long> inv;
  for (long long i = 0; i < r.rank(); ++i)
    if (dims[i].invertible()) inv.push_back(i);
  // invertibles are closed under fusion and duality automatically
  return subcategory(r, std::move(inv));
}

FusionSubcategory integral_part(const FusionRing& r, const std::vector<ObjectDim>& dims) {
  std::vector<long long> in;
  for (long long i = 0; i < r.rank(); ++i)
    if (exact_sqrt(dims[i].d2)) in.push_back(i);
  return subcategory(r, std::move(in));
}

bool is_pointed(const FusionRing& r, const std::vector<ObjectDim>& dims) {
  return pointed_part(r, dims).rank() == r.rank();
}

bool is_generalized_tambara_yamagami(const FusionRing& r,
                                     const std::vector<ObjectDim>& dims) {
  if (is_pointed(r, dims)) return false;
  for (long long i = 0; i < r.rank(); ++i) {
    if (dims[i].invertible()) continue;
    for (long long j = 0; j < r.rank(); ++j) {
      if (dims[j].invertible()) continue;
      for (const auto& [k, v] : r.product(i, j))
        if (!dims[k].invertible()) return false;
    }
  }
  return true;
}

namespace {

struct UnionFind {
  std::vector<long long> parent;
  explicit UnionFind(long long n) : parent(n) {
    for (long long i = 0; i < n; ++i) parent[i] = i;
  }
  long long find(long long x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(long long a, long long b) { parent[find(a)] = find(b); }
};

}  // namespace

Grading universal_grading(const FusionRing& r) {
  long long n = r.rank();
  FusionSubcategory ad = adjoint_subcategory(r);
  UnionFind uf(n);
  for (long long j = 0; j < n; ++j)
    for (long long a : ad.members)
      for (const auto& [i, v] : r.product(a, j)) uf.unite(i, j);
  Grading g;
  g.class_of.assign(n, -1);
  std::vector<long long> rep;  // one member per class, in root order of first appearance
  for (long long i = 0; i < n; ++i) {
    long long root = uf.find(i);
    if (g.class_of[root] < 0) {
      g.class_of[root] = static_cast<long long>(rep.size());
      rep.push_back(i);
    }
    g.class_of[i] = g.class_of[root];
  }
  g.num_classes = static_cast<long long>(rep.size());
  g.neutral = g.class_of[0];
  // induced product: every constituent of i (x) j must land in one class
  // depending only on (class(i), class(j))
  g.table.assign(g.num_classes, std::vector<long long>(g.num_classes, -1));
  for (long long i = 0; i < n; ++i)
    for (long long j = 0; j < n; ++j) {
      long long ci = g.class_of[i], cj = g.class_of[j];
      for (const auto& [k, v] : r.product(i, j)) {
        long long& cell = g.table[ci][cj];
        if (cell < 0) cell = g.class_of[k];
        if (cell != g.class_of[k])
          throw std::domain_error("universal grading: product of classes ill-defined at " +
                                  r.labels()[i] + " x " + r.labels()[j]);
      }
    }
  for (long long ci = 0; ci < g.num_classes; ++ci)
    for (long long cj = 0; cj < g.num_classes; ++cj)
      if (g.table[ci][cj] < 0)
        throw std::domain_error("universal grading: empty class product");
  // orders in the class group
  g.class_order.assign(g.num_classes, 0);
  for (long long c = 0; c < g.num_classes; ++c) {
    long long cur = c, ord = 1;
    while (cur != g.neutral) {
      cur = g.table[cur][c];
      ++ord;
      if (ord > g.num_classes + 1)
        throw std::domain_error("universal grading: class has no finite order");
    }
    g.class_order[c] = ord;
  }
  return g;
}

DimensionalGrading dimensional_grading(const FusionRing& r,
                                       const std::vector<ObjectDim>& dims) {
  long long n = r.rank();
  std::vector<long long> sf(n);
  for (long long i = 0; i < n; ++i) sf[i] = squarefree_part(dims[i].d2);
  std::set<long long> seen(sf.begin(), sf.end());
  DimensionalGrading g;
  g.parts.assign(seen.begin(), seen.end());  // ascending, so parts[0] = 1
  if (g.parts.empty() || g.parts[0] != 1)
    throw std::domain_error("dimensional grading: unit class missing");
  auto part_index = [&g](long long s) {
    auto it = std::lower_bound(g.parts.begin(), g.parts.end(), s);
    if (it == g.parts.end() || *it != s) return static_cast<long long>(-1);
    return static_cast<long long>(it - g.parts.begin());
  };
  g.class_of.assign(n, 0);
  for (long long i = 0; i < n; ++i) g.class_of[i] = part_index(sf[i]);
  long long m = static_cast<long long>(g.parts.size());
  g.table.assign(m, std::vector<long long>(m, -1));
  for (long long a = 0; a < m; ++a)
    for (long long b = 0; b < m; ++b) {
      long long c = part_index(squarefree_part(g.parts[a] * g.parts[b]));
      if (c < 0)
        throw std::domain_error("dimensional grading: parts not closed under product");
      g.table[a][b] = c;
    }
  // grading property: constituents of i (x) j carry part sf(i) * sf(j)
  for (long long i = 0; i < n; ++i)
    for (long long j = 0; j < n; ++j)
      for (const auto& [k, v] : r.product(i, j))
        if (g.class_of[k] != g.table[g.class_of[i]][g.class_of[j]])
          throw std::domain_error("dimensional grading violated at " + r.labels()[i] +
                                  " x " + r.labels()[j] + " -> " + r.labels()[k]);
  return g;
}

std::vector<FusionSubcategory> all_subcategories(const FusionRing& r, long long rank_limit) {
  if (r.rank() > rank_limit)
    throw std::invalid_argument("subcategory enumeration limited to rank <= " +
                                std::to_string(rank_limit));
  std::set<FusionSubcategory> lattice;
  lattice.insert(trivial_subcategory(r));
  for (long long i = 0; i < r.rank(); ++i)
    lattice.insert(subcategory_generated(r, {i}));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<FusionSubcategory> cur(lattice.begin(), lattice.end());
    for (size_t a = 0; a < cur.size(); ++a)
      for (size_t b = a + 1; b < cur.size(); ++b) {
        FusionSubcategory j = subcategory_join(r, cur[a], cur[b]);
        if (lattice.insert(std::move(j)).second) grew = true;
      }
  }
  return {lattice.begin(), lattice.end()};
}

FusionSubcategory maximal_nilpotent_subcategory(const FusionRing& r, long long rank_limit) {
  std::vector<FusionSubcategory> nil;
  for (const auto& s : all_subcategories(r, rank_limit))
    if (is_nilpotent(restrict_ring(r, s))) nil.push_back(s);
  // keep the inclusion-maximal ones; the spec'd notion requires a unique one
  std::vector<FusionSubcategory> maximal;
  for (const auto& s : nil) {
    bool dominated = false;
    for (const auto& t : nil)
      if (!(t == s) && subcategory_includes(t, s)) {
        dominated = true;
        break;
      }
    if (!dominated) maximal.push_back(s);
  }
  if (maximal.size() != 1)
    throw std::domain_error("no unique maximal nilpotent subcategory (" +
                            std::to_string(maximal.size()) + " maximal candidates)");
  return maximal.front();
}

}  // namespace modcat
