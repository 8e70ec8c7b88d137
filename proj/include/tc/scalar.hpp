#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <string>
#include <vector>

#include "tc/errors.hpp"

namespace tc {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Coefficient domain: Z, Q, or F_p with p prime.
class CoeffRing {
 public:
  enum class Kind { Integers, Rationals, PrimeField };

  CoeffRing() : kind_(Kind::Integers), modulus_(0) {}

  static CoeffRing integers() { return CoeffRing(Kind::Integers, 0); }
  static CoeffRing rationals() { return CoeffRing(Kind::Rationals, 0); }
  static CoeffRing prime_field(const Int& p);  // rejects non-primes

  Kind kind() const { return kind_; }
  const Int& modulus() const { return modulus_; }
  bool is_field() const { return kind_ != Kind::Integers; }
  bool char_two() const { return kind_ == Kind::PrimeField && modulus_ == 2; }

  std::string to_string() const;  // "Z", "Q", "F_5"
  static CoeffRing from_string(const std::string& s);

  bool operator==(const CoeffRing& o) const {
    return kind_ == o.kind_ && modulus_ == o.modulus_;
  }
  bool operator!=(const CoeffRing& o) const { return !(*this == o); }
  // Z < Q < F_2 < F_3 < ... (ordering used for deterministic map traversal)
  bool operator<(const CoeffRing& o) const {
    if (kind_ != o.kind_) return static_cast<int>(kind_) < static_cast<int>(o.kind_);
    return modulus_ < o.modulus_;
  }

 private:
  CoeffRing(Kind k, const Int& m) : kind_(k), modulus_(m) {}
  Kind kind_;
  Int modulus_;
};

// Exact scalar in a fixed coefficient ring.  Canonical forms: Z and F_p
// values have denominator 1, F_p values are residues in [0, p).
class Scalar {
 public:
  Scalar() : ring_(CoeffRing::integers()), v_(0) {}

  static Scalar zero(const CoeffRing& r) { return Scalar(r, Rat(0)); }
  static Scalar one(const CoeffRing& r) { return Scalar(r, Rat(1)); }
  static Scalar of(const CoeffRing& r, long long n) { return Scalar(r, Rat(n)); }
  static Scalar of(const CoeffRing& r, const Int& n) { return Scalar(r, Rat(n)); }
  // Accepts a true fraction only over Q, or over F_p when the denominator
  // is invertible mod p; rejects it over Z.
  static Scalar of(const CoeffRing& r, const Rat& q);

  const CoeffRing& ring() const { return ring_; }
  const Rat& value() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Multiplicative inverse.  Over Z only +-1 are invertible; elsewhere any
  // nonzero scalar is.
  Scalar inverse() const;

  std::string to_string() const;  // "-2", "3/4", F_p residue

 private:
  Scalar(const CoeffRing& r, const Rat& v) : ring_(r), v_(v) { canonicalize(); }
  void canonicalize();
  CoeffRing ring_;
  Rat v_;
};

// Rank of a matrix over a field (rows of equal length, exact Gaussian
// elimination).  Rejects Z coefficients and mixed rings.
int field_rank(const std::vector<std::vector<Scalar>>& rows);

}  // namespace tc
