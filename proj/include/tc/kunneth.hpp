#pragma once

#include "tc/graded.hpp"

namespace tc {

// The ring R (x) R for a graded ring R, materialized as a validated
// GradedRing with basis b_i (x) b_j at flat index i*n + j and products
// following the sign rule (a(x)b)(c(x)d) = (-1)^(|b||c|) ac (x) bd.
// Carries the diagonal map and the zero-divisor construction
// hat(u) = u(x)1 - 1(x)u.
class SquareRing {
 public:
  explicit SquareRing(RingPtr base, const RingLimits& limits = {},
                      Exec policy = Exec::Parallel);

  const RingPtr& base() const { return base_; }
  const RingPtr& product() const { return prod_; }
  int base_size() const { return n_; }

  int flat(int i, int j) const { return i * n_ + j; }
  std::pair<int, int> unflat(int f) const { return {f / n_, f % n_}; }

  // a (x) b as an element of the square (bilinear placement, no signs)
  Element tensor(const Element& a, const Element& b) const;

  // multiplication map: sends b_i (x) b_j to b_i * b_j in the base ring
  Element diagonal(const Element& e) const;

  // hat(u) for homogeneous u of positive degree
  Element zero_divisor(const Element& u) const;

  // hat of every positive-degree basis element, in basis order
  std::vector<Element> zero_divisor_generators() const;

 private:
  RingPtr base_;
  RingPtr prod_;
  int n_;
};

}  // namespace tc
