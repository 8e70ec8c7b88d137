#pragma once

#include "tc/classify.hpp"

namespace tc {

struct ExpectedVerdict {
  Alt outcome = Alt::Undecided;
  int k = 0, l = 0;
  int tc_floor = 0;     // 0: not checked
  int witness_len = 0;  // Excluded only; 0: not checked
};

// A worked example: manifold data plus everything we can hold the
// implementation to — expected zero-divisor bounds per coefficient ring,
// the classification verdict, and TC/cat values quoted from the
// literature (upper anchors for the computed lower bounds).
struct CatalogEntry {
  ManifoldData data;
  std::optional<int> known_tc;
  std::optional<int> known_cat;
  std::map<CoeffRing, int> expected_zcl;
  std::optional<ExpectedVerdict> expected_verdict;
  std::string source_note;
};

const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry* find_entry(const std::string& name);

// Presentation over the requested coefficients, base-changing the
// integral one when the exact field is not stored.
RingPtr catalog_ring(const CatalogEntry& e, const CoeffRing& coeff);

// Family builders behind the fixed roster, exposed so tests can
// instantiate further members.
CatalogEntry sphere_entry(int k);
CatalogEntry circle_times_sphere_entry(int k);        // S^1 x S^k, odd k >= 3
CatalogEntry product_of_spheres_entry(int k, int l);  // S^k x S^l, odd k <= l

struct CatalogCheckLine {
  std::string entry;
  bool pass = true;
  std::string detail;
};
struct CatalogCheckResult {
  bool all_pass = true;
  std::vector<CatalogCheckLine> lines;
};

// Recomputes every stored expectation from scratch: zcl per coefficient
// ring with the rank oracle cross-checking field cases, witnesses
// re-multiplied, duality of field presentations, classification verdicts,
// and bounds against the quoted TC/cat values.
CatalogCheckResult catalog_check(const SearchOptions& opts = {});
CatalogCheckResult catalog_check(const std::vector<CatalogEntry>& entries,
                                 const SearchOptions& opts = {});

}  // namespace tc
