#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tc/kunneth.hpp"

namespace tc {

struct SearchOptions {
  int max_k = 64;               // hard cap on product length
  Exec policy = Exec::Parallel;
  RingLimits limits;            // forwarded when a square must be built
};

// A nonzero k-fold product certificate.  factor_indices index into the
// generator list the search ran over; factors are printable names
// ("hat(x3)" or "x3"); product is the nonzero value.
struct Witness {
  std::vector<int> factor_indices;
  std::vector<std::string> factors;
  Element product;
};

// nil = least k such that every k-fold product of the generators (with
// repetition) vanishes; witness certifies the last nonzero stage when
// nil >= 2.
struct NilResult {
  int nil = 1;
  std::optional<Witness> witness;
};

// nil of the ideal Ker(diagonal) of the square: products of the
// zero-divisors hat(b_i) over all positive-degree basis elements b_i.
NilResult zero_divisor_nilpotency(const SquareRing& sq,
                                  const SearchOptions& opts = {});

// Lexicographically first nonzero k-fold product of the hat generators,
// if any.
std::optional<Witness> find_witness(const SquareRing& sq, int k,
                                    const SearchOptions& opts = {});

// nil of the positive-degree ideal of the base ring (cup length + 1).
NilResult cuplength_nilpotency(const RingPtr& ring,
                               const SearchOptions& opts = {});

// Independent check over field coefficients: spans of the powers of the
// zero-divisor ideal computed by rank (no frontier, no witnesses).
int nilpotency_oracle(const SquareRing& sq);

struct BoundReport {
  std::string ring_name;
  CoeffRing coeff;
  int zcl = 1;             // nil of the zero-divisor ideal
  int tc_lower_bound = 1;  // = zcl
  int cup_nil = 1;         // nil of the positive-degree ideal
  int cat_lower_bound = 1; // = cup_nil
  std::optional<Witness> zcl_witness;
  std::optional<Witness> cup_witness;
};

// TC >= zcl and cat >= cup_nil, both from one ring presentation.
BoundReport tc_lower_bound(const RingPtr& ring, const SearchOptions& opts = {});

}  // namespace tc
