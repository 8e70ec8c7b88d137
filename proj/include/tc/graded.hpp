#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tc/parallel.hpp"
#include "tc/scalar.hpp"

namespace tc {

struct BasisElement {
  std::string label;
  int degree = 0;
};

class GradedRing;
using RingPtr = std::shared_ptr<const GradedRing>;

// Sparse coordinates: basis index -> nonzero coefficient.
using Coords = std::map<int, Scalar>;

// Multiplication table input: (i, j) -> coordinates of b_i * b_j.  Entries
// may be given for either (i, j) or (j, i); unit rows and zero products may
// be omitted.
using RawTable = std::map<std::pair<int, int>, Coords>;

struct RingLimits {
  std::size_t max_basis = 512;
};

// Finite-dimensional graded-commutative ring presented by an ordered
// homogeneous basis (index 0 is the unit) and a sparse multiplication
// table.  Instances are immutable and fully validated on construction:
// graded commutativity, degree additivity, unit behavior, associativity,
// and x^2 = 0 for odd-degree x away from characteristic 2.
class GradedRing : public std::enable_shared_from_this<GradedRing> {
 public:
  const std::string& name() const { return name_; }
  const CoeffRing& coeff() const { return coeff_; }
  const std::vector<BasisElement>& basis() const { return basis_; }
  int size() const { return static_cast<int>(basis_.size()); }
  std::optional<int> formal_dim() const { return formal_dim_; }
  int degree(int i) const { return basis_[i].degree; }
  const std::string& label(int i) const { return basis_[i].label; }
  std::optional<int> index_of(const std::string& label) const;
  // largest degree carrying a basis element
  int max_degree() const { return max_degree_; }
  // count of stored (non-unit, nonzero) table entries
  std::size_t table_size() const { return table_.size(); }
  // stored entries only: keys have 1 <= i <= j
  const std::map<std::pair<int, int>, Coords>& table() const { return table_; }

  // b_i * b_j for any i, j; derives i > j entries by the sign rule
  // b_j b_i = (-1)^(|i||j|) b_i b_j.
  Coords basis_product(int i, int j) const;

  // product of sparse coordinate vectors over this ring
  Coords multiply(const Coords& a, const Coords& b) const;

  RingPtr self() const { return shared_from_this(); }

 private:
  GradedRing() = default;
  friend RingPtr make_ring(const std::string&, const CoeffRing&,
                           std::vector<BasisElement>, const RawTable&,
                           std::optional<int>, const RingLimits&, Exec);

  std::string name_;
  CoeffRing coeff_;
  std::vector<BasisElement> basis_;
  std::map<std::string, int> index_;
  std::map<std::pair<int, int>, Coords> table_;
  std::optional<int> formal_dim_;
  int max_degree_ = 0;
};

// Element of a graded ring, held as sparse coordinates.
class Element {
 public:
  Element() = default;  // unattached zero; only containers should hold these

  static Element zero(RingPtr r);
  static Element unit(RingPtr r);
  static Element basis(RingPtr r, int i);
  static Element make(RingPtr r, Coords c);  // drops zero coefficients

  const RingPtr& ring() const { return ring_; }
  const Coords& coords() const { return coords_; }
  bool is_zero() const { return coords_.empty(); }
  Scalar coeff_at(int i) const;

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator-() const;
  Element operator*(const Element& o) const;
  Element scaled(const Scalar& c) const;
  bool operator==(const Element& o) const;
  bool operator!=(const Element& o) const { return !(*this == o); }

  // nonzero part in each degree, ascending
  std::map<int, Element> degree_components() const;
  // degree when homogeneous and nonzero
  std::optional<int> homogeneous_degree() const;

  // "x3x5 + -2*g", terms in basis order; "0" for zero
  std::string to_string() const;

 private:
  Element(RingPtr r, Coords c) : ring_(std::move(r)), coords_(std::move(c)) {}
  RingPtr ring_;
  Coords coords_;
};

// Builds and validates a ring.  Throws RingError naming the first violated
// axiom.  The unit must be basis[0] with label "1" and degree 0.  With
// Exec::Parallel the associativity sweep runs multithreaded (same verdict,
// smallest failing triple reported either way).
RingPtr make_ring(const std::string& name, const CoeffRing& coeff,
                  std::vector<BasisElement> basis, const RawTable& table,
                  std::optional<int> formal_dim = std::nullopt,
                  const RingLimits& limits = {}, Exec policy = Exec::Parallel);

// Exterior algebra on generators of the given positive degrees.  Over Z or
// Q all degrees must be odd; over F_p generator squares are zero by
// decree, any degrees allowed.  Generators of equal degree d are labeled
// x<d>, y<d>, z<d>, w<d>, ...
RingPtr exterior_algebra(const CoeffRing& coeff, const std::vector<int>& degrees,
                         const std::string& name = "",
                         const RingLimits& limits = {},
                         Exec policy = Exec::Parallel);

// H^*(S^k): basis 1, x<k>; x^2 = 0.
RingPtr sphere_ring(const CoeffRing& coeff, int k, const std::string& name = "");

// Reinterprets an integral table over Q or F_p (reduction of structure
// constants; the result is re-validated).
RingPtr base_change(const RingPtr& r, const CoeffRing& target,
                    Exec policy = Exec::Parallel);

// Cohomology ring of a connected sum of two m-manifolds from the summand
// rings: degrees strictly between 0 and m survive with all cross products
// zero, and the two top classes are identified into a single "g".  Both
// inputs must have formal dimension m and a one-dimensional top degree.
RingPtr connected_sum_ring(const RingPtr& a, const RingPtr& b, int m,
                           const std::string& name = "",
                           const RingLimits& limits = {},
                           Exec policy = Exec::Parallel);

// Label sanity shared by make_ring and the file parser: nonempty, no
// whitespace, none of : * + # =, not starting with '-', not a bare number
// (the unit's label "1" is special-cased by position).
bool valid_label(const std::string& s);

}  // namespace tc
