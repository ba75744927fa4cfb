#pragma once

#include <vector>

#include "modcat/cocycle.hpp"
#include "modcat/fusion.hpp"
#include "modcat/modular.hpp"

// Exhaustive exact sweeps over the defining identities.  Each sweep exists
// twice: a *_serial reference that works entry-by-entry in full cyclotomic
// arithmetic, and an optimized variant that is OpenMP-parallel and drops to
// integer arithmetic where the data allows (root-of-unity tables become
// exponent counts reduced modulo the cyclotomic polynomial; matrices with
// integer cyclotomic coordinates become fixed-length integer convolutions).
// Both variants return identical, deterministically ordered violation lists;
// the test suite and the benchmark target hold them against each other.
namespace modcat::kernels {

struct AssocViolation {
  long long i, j, k, l;  // sum_m N(i,j,m) N(m,k,l) != sum_m N(j,k,m) N(i,m,l)
  bool operator==(const AssocViolation& o) const {
    return i == o.i && j == o.j && k == o.k && l == o.l;
  }
};
std::vector<AssocViolation> associativity_violations_serial(const FusionRing& r);
std::vector<AssocViolation> associativity_violations(const FusionRing& r);

struct CocycleQuad {
  long long g, h, k, l;  // element indices
  bool operator==(const CocycleQuad& o) const {
    return g == o.g && h == o.h && k == o.k && l == o.l;
  }
};
std::vector<CocycleQuad> cocycle3_identity_violations_serial(const Cocycle3& w);
std::vector<CocycleQuad> cocycle3_identity_violations(const Cocycle3& w);

struct TripleViolation {
  long long i, j, k;
  bool operator==(const TripleViolation& o) const {
    return i == o.i && j == o.j && k == o.k;
  }
};
// N[i][j][k] == (1/D^2) sum_r S[i][r] S[j][r] conj(S[k][r]) / d_r, exactly.
// Caller is responsible for only running this on data with invertible S.
std::vector<TripleViolation> verlinde_violations_serial(const ModularData& m);
std::vector<TripleViolation> verlinde_violations(const ModularData& m);

struct PairViolation {
  long long i, j;
  bool operator==(const PairViolation& o) const { return i == o.i && j == o.j; }
};
// S[i][j] == theta_i^-1 theta_j^-1 sum_k N[i][j][k] d_k theta_k, exactly.
std::vector<PairViolation> balancing_violations_serial(const ModularData& m);
std::vector<PairViolation> balancing_violations(const ModularData& m);

// (S conj(S))[i][j] == D^2 [j == dual(i)], exactly.
std::vector<PairViolation> s_orthogonality_violations_serial(const ModularData& m);
std::vector<PairViolation> s_orthogonality_violations(const ModularData& m);

}  // namespace modcat::kernels
