#pragma once

#include <map>

#include "tc/bounds.hpp"

namespace tc {

// Integral homology in each degree: free rank plus torsion as a list of
// prime powers (Z/q summands, q = p^e).
struct HomologyProfile {
  int dimension = 0;
  std::vector<int> free_ranks;             // size dimension + 1
  std::vector<std::vector<Int>> torsion;   // size dimension + 1
};

// A closed manifold given by its homology and cohomology presentations
// over the coefficient rings needed to analyze it.
struct ManifoldData {
  std::string name;
  bool orientable = true;
  int pi1_free_rank = 0;  // rank of H_1; the free-group claim is the caller's
  HomologyProfile profile;
  std::map<CoeffRing, RingPtr> rings;
};

// Structural checks: profile shape, Poincare symmetry when orientable,
// H_1 consistency with pi1_free_rank, ring dimensions against universal
// coefficients, required presentations present.  Throws on failure.
void validate_manifold_data(const ManifoldData& d);

// Gram matrix of the pairing H^k x H^(m-k) -> H^m in a ring with a
// one-dimensional top degree.
std::vector<std::vector<Scalar>> pairing_matrix(const RingPtr& r, int k);

struct PDDegree {
  int k = 0;
  int dim_k = 0;
  int dim_mk = 0;
  int rank = 0;  // rank of the pairing matrix
  bool ok = true;
};
struct PDReport {
  bool ok = true;
  std::vector<PDDegree> degrees;
};

// Nondegeneracy of all middle pairings over a field (top degree must be
// one-dimensional; degree 0 pairs with the top via the unit).
PDReport check_poincare_duality(const RingPtr& r);

enum class Alt {
  Alternative1,  // homology of a sphere S^k
  Alternative2,  // cohomology an exterior algebra on degrees k, l
  Alternative3,  // mod-2 cohomology exterior on degrees k, k+1, dimension 2k+1
  Excluded,      // a zero-divisor certificate forces TC >= 4
  Undecided,     // no certificate found in the supplied presentations
};

std::string to_string(Alt a);

struct Verdict {
  Alt outcome = Alt::Undecided;
  int k = 0, l = 0;           // the degrees named by the alternative
  int tc_floor = 1;           // best zero-divisor bound found on the way
  std::string reason;
  std::optional<Witness> witness;      // certificate for Excluded
  std::optional<CoeffRing> witness_coeff;
};

// "Alternative2(3,5)", "Excluded", ... (degrees only where meaningful)
std::string verdict_label(const Verdict& v);

// Decides which of the low-TC alternatives a closed orientable manifold's
// data is consistent with, or excludes TC <= 3 outright by exhibiting a
// nonzero triple (or longer) product of zero-divisors.
Verdict classify_low_tc(const ManifoldData& d, const SearchOptions& opts = {});

}  // namespace tc
