#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modcat/cyclotomic.hpp"
#include "modcat/fusion.hpp"

namespace modcat {

// Modular datum over a fusion ring: unnormalized exact S-matrix
// (S[0][0] = 1, first row the Frobenius-Perron dimensions) and the diagonal
// of twists T.  D^2 = sum of d^2 is kept as a certified integer.
// Construction checks shapes and computes dimensions; the modular axioms are
// the business of validate_modular.
class ModularData {
 public:
  ModularData(FusionRing ring, std::vector<std::vector<Cyclotomic>> s,
              std::vector<Cyclotomic> t);
  // As above with dimensions supplied by the caller (used where they are
  // known exactly, e.g. Deligne products); sizes are still checked.
  ModularData(FusionRing ring, std::vector<std::vector<Cyclotomic>> s,
              std::vector<Cyclotomic> t, std::vector<ObjectDim> dims);

  const FusionRing& ring() const { return ring_; }
  long long rank() const { return ring_.rank(); }
  const std::vector<std::vector<Cyclotomic>>& s_matrix() const { return S_; }
  const std::vector<Cyclotomic>& t_diagonal() const { return T_; }
  const Cyclotomic& s(long long i, long long j) const { return S_[i][j]; }
  const Cyclotomic& twist(long long i) const { return T_[i]; }
  // Exact dimension d_i = S[0][i].
  const Cyclotomic& dim_exact(long long i) const { return S_[0][i]; }
  const std::vector<ObjectDim>& dims() const { return dims_; }
  long long global_dim2() const { return global_dim2_; }

 private:
  FusionRing ring_;
  std::vector<std::vector<Cyclotomic>> S_;
  std::vector<Cyclotomic> T_;
  std::vector<ObjectDim> dims_;
  long long global_dim2_;
};

struct ValidationOptions {
  enum class Verlinde { automatic, force, skip };
  // automatic: run the Verlinde sweep when the datum is nondegenerate and
  // the rank is within verlinde_rank_cap; degenerate S is singular and the
  // formula does not apply.
  Verlinde verlinde = Verlinde::automatic;
  long long verlinde_rank_cap = 128;
};

struct ModularValidation {
  ValidationReport report;
  bool verlinde_ran = false;
  std::string verlinde_note;  // set when the sweep was skipped
  bool ok() const { return report.ok(); }
};

// Ring axioms, S symmetry, exact first row = dims, unit twist, T roots of
// unity, the balancing identity, S conj(S) = D^2 C agreement with the
// centralizer criterion, and the Verlinde sweep per options.
ModularValidation validate_modular(const ModularData& m,
                                   const ValidationOptions& opts = {});

// Muger centralizer criterion: i and j centralize iff S[i][j] = d_i d_j.
bool centralizes(const ModularData& m, long long i, long long j);
FusionSubcategory centralizer_of(const ModularData& m, const FusionSubcategory& s);
FusionSubcategory muger_center(const ModularData& m);
bool is_nondegenerate(const ModularData& m);
// Whether the centralizer criterion and S conj(S) = D^2 C agree on
// nondegeneracy (they must, for genuine data).
bool nondegeneracy_cross_check(const ModularData& m);

enum class SymmetricClass { tannakian, super };
struct SymmetricClassification {
  SymmetricClass kind;
  std::optional<long long> witness;  // an object with twist -1 in the super case
};

// Classify a self-centralizing subcategory: tannakian when every twist on it
// is 1, super otherwise (twists then lie in {1,-1}; anything else throws).
// Throws std::invalid_argument if s does not centralize itself.
SymmetricClassification classify_symmetric(const ModularData& m,
                                           const FusionSubcategory& s);

ModularData deligne_product(const ModularData& a, const ModularData& b);

// For nilpotent nondegenerate data: the decomposition of the subcategory
// lattice into prime components C_p, sorted by p.  Verifies that components
// pairwise centralize, are individually nondegenerate, and multiply up to
// FPdim; throws std::invalid_argument on non-nilpotent or degenerate input.
std::vector<FusionSubcategory> prime_decomposition(const ModularData& m,
                                                   long long rank_limit = 64);

// All self-centralizing subcategories with trivial twists, from the lattice.
std::vector<FusionSubcategory> tannakian_subcategories(const ModularData& m,
                                                       long long rank_limit = 64);

}  // namespace modcat
