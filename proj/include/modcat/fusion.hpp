#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "modcat/numeric.hpp"

namespace modcat {

// One structure constant N[i][j][k] = multiplicity of k in i (x) j.
struct FusionTriple {
  long long i, j, k, value;
};

struct ObjectDim {
  double fp;      // Frobenius-Perron dimension
  long long d2;   // certified integer square of fp
  bool invertible() const { return d2 == 1; }
};

struct ValidationIssue {
  std::string check;
  std::string witness;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  std::string str() const;
};

// Commutative fusion ring on simples 0..rank-1 with unit 0 and a dual
// involution; structure constants are stored sparsely as per-pair product
// lists.  Construction performs structural checks (sizes, ranges); the ring
// axioms are checked by validate_ring, which reports rather than throws.
class FusionRing {
 public:
  FusionRing(std::vector<std::string> labels, std::vector<long long> dual,
             const std::vector<FusionTriple>& triples);

  long long rank() const { return static_cast<long long>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<long long>& dual() const { return dual_; }

  long long fusion(long long i, long long j, long long k) const;
  // (k, multiplicity) pairs of i (x) j, ascending in k.
  const std::vector<std::pair<long long, long long>>& product(long long i, long long j) const;
  // All nonzero triples, lexicographic; the serialization order.
  std::vector<FusionTriple> triples() const;

  bool operator==(const FusionRing& o) const;

 private:
  std::vector<std::string> labels_;
  std::vector<long long> dual_;
  std::vector<std::vector<std::pair<long long, long long>>> prod_;  // [i*rank+j]
};

// Unit, duality, Frobenius reciprocity, commutativity, associativity.
ValidationReport validate_ring(const FusionRing& r);

// Frobenius-Perron dimension of every simple via power iteration on the
// fusion matrices (relative tolerance 1e-12), with d^2 certified to be an
// integer within 1e-9; certification failure throws std::domain_error.
std::vector<ObjectDim> compute_dims(const FusionRing& r);

// Sum of d^2 over all simples (FPdim of the category).
long long fpdim_ring(const std::vector<ObjectDim>& dims);

// Index set of a full fusion subcategory: sorted, contains the unit, closed
// under duality and fusion.  Built through the factories below.
struct FusionSubcategory {
  std::vector<long long> members;
  long long rank() const { return static_cast<long long>(members.size()); }
  bool contains(long long i) const;
  bool operator==(const FusionSubcategory& o) const { return members == o.members; }
  bool operator<(const FusionSubcategory& o) const;
};

// Validates closure; throws std::invalid_argument with a witness otherwise.
FusionSubcategory subcategory(const FusionRing& r, std::vector<long long> members);
// Smallest subcategory containing the generators.
FusionSubcategory subcategory_generated(const FusionRing& r,
                                        const std::vector<long long>& gens);
FusionSubcategory full_subcategory(const FusionRing& r);
FusionSubcategory trivial_subcategory(const FusionRing& r);
bool subcategory_includes(const FusionSubcategory& a, const FusionSubcategory& b);
FusionSubcategory subcategory_join(const FusionRing& r, const FusionSubcategory& a,
                                   const FusionSubcategory& b);
FusionSubcategory subcategory_meet(const FusionRing& r, const FusionSubcategory& a,
                                   const FusionSubcategory& b);

long long fpdim_subcategory(const std::vector<ObjectDim>& dims, const FusionSubcategory& s);

// The ring restricted to a subcategory; new index n corresponds to
// s.members[n] in the parent.
FusionRing restrict_ring(const FusionRing& r, const FusionSubcategory& s);

// Deligne product at the ring level: labels "a*b", index (i,j) -> i*rankB+j.
FusionRing product_ring(const FusionRing& a, const FusionRing& b);

// Adjoint subcategory: generated by all constituents of i (x) dual(i).
FusionSubcategory adjoint_subcategory(const FusionRing& r);
FusionSubcategory adjoint_of(const FusionRing& r, const FusionSubcategory& s);

// C = C^(0) >= C^(1) = ad(C) >= C^(2) = ad(C^(1)) >= ..., listed until the
// first repetition (the repeated term is not included twice).
std::vector<FusionSubcategory> descending_central_series(const FusionRing& r);
bool is_nilpotent(const FusionRing& r);
// Number of strict steps down to the trivial subcategory; nullopt when the
// series stabilizes above it.
std::optional<int> nilpotency_class(const FusionRing& r);

// Smallest subcategory S' with S' >= S-commutator: generated by all i whose
// i (x) dual(i) lies entirely inside s.
FusionSubcategory commutator_subcategory(const FusionRing& r, const FusionSubcategory& s);

FusionSubcategory pointed_part(const FusionRing& r, const std::vector<ObjectDim>& dims);
FusionSubcategory integral_part(const FusionRing& r, const std::vector<ObjectDim>& dims);
bool is_pointed(const FusionRing& r, const std::vector<ObjectDim>& dims);

// Not pointed, and the product of any two non-invertible simples decomposes
// into invertibles.
bool is_generalized_tambara_yamagami(const FusionRing& r,
                                     const std::vector<ObjectDim>& dims);

// Universal grading: components of the relation "i ~ j iff i appears in
// a (x) j for some a in the adjoint subcategory", with the induced group
// structure on components.  Throws std::domain_error if the component
// product is ill-defined (cannot happen for a genuine fusion ring).
struct Grading {
  std::vector<long long> class_of;               // per simple
  long long num_classes = 0;
  long long neutral = 0;
  std::vector<std::vector<long long>> table;     // class group multiplication
  std::vector<long long> class_order;            // element orders in the class group
};
Grading universal_grading(const FusionRing& r);

// Grading by squarefree parts of d^2.  The parts form an elementary abelian
// 2-group E under s*t = squarefree_part(st); |E| = parts.size().
struct DimensionalGrading {
  std::vector<long long> parts;                  // distinct squarefree parts, parts[0] = 1
  std::vector<long long> class_of;               // per simple, index into parts
  std::vector<std::vector<long long>> table;
};
DimensionalGrading dimensional_grading(const FusionRing& r,
                                       const std::vector<ObjectDim>& dims);

// Every fusion subcategory, saturated from singleton closures by pairwise
// joins; sorted by (rank, members).  Guarded by a rank limit because the
// lattice is enumerated exhaustively.
std::vector<FusionSubcategory> all_subcategories(const FusionRing& r,
                                                 long long rank_limit = 64);

// The unique maximal nilpotent subcategory; throws std::domain_error if the
// nilpotent members of the lattice have no unique maximum.
FusionSubcategory maximal_nilpotent_subcategory(const FusionRing& r,
                                                long long rank_limit = 64);

}  // namespace modcat
