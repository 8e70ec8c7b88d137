#include "tc/scalar.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

namespace tc {

namespace {

void require_same(const CoeffRing& a, const CoeffRing& b) {
  if (a != b)
    throw ScalarError("coefficient ring mismatch: " + a.to_string() + " vs " +
                      b.to_string());
}

bool is_prime(const Int& p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  // deterministic for anything we will ever see; 25 rounds otherwise
  return boost::multiprecision::miller_rabin_test(p, 25);
}

}  // namespace

std::string to_string(ValidationKind k) {
  switch (k) {
    case ValidationKind::Commutativity: return "CommutativityViolation";
    case ValidationKind::DegreeMismatch: return "DegreeMismatch";
    case ValidationKind::Associativity: return "AssociativityViolation";
    case ValidationKind::Unit: return "UnitViolation";
    case ValidationKind::OddSquare: return "OddSquareViolation";
    case ValidationKind::Input: return "InputError";
  }
  return "UnknownViolation";
}

CoeffRing CoeffRing::prime_field(const Int& p) {
  if (!is_prime(p))
    throw ScalarError("F_" + p.str() + ": modulus is not prime");
  return CoeffRing(Kind::PrimeField, p);
}

std::string CoeffRing::to_string() const {
  switch (kind_) {
    case Kind::Integers: return "Z";
    case Kind::Rationals: return "Q";
    case Kind::PrimeField: return "F_" + modulus_.str();
  }
  return "?";
}

CoeffRing CoeffRing::from_string(const std::string& s) {
  if (s == "Z") return integers();
  if (s == "Q") return rationals();
  if (s.rfind("F_", 0) == 0 && s.size() > 2) {
    const std::string digits = s.substr(2);
    for (char c : digits)
      if (c < '0' || c > '9')
        throw ScalarError("bad coefficient ring '" + s + "'");
    return prime_field(Int(digits));
  }
  throw ScalarError("bad coefficient ring '" + s + "' (want Z, Q or F_p)");
}

Scalar Scalar::of(const CoeffRing& r, const Rat& q) {
  using boost::multiprecision::denominator;
  if (denominator(q) != 1) {
    if (r.kind() == CoeffRing::Kind::Integers)
      throw ScalarError(q.str() + " is not an integer");
    if (r.kind() == CoeffRing::Kind::PrimeField) {
      Scalar den = Scalar(r, Rat(denominator(q)));
      if (den.is_zero())
        throw ScalarError("denominator of " + q.str() + " vanishes in " +
                          r.to_string());
      return Scalar(r, Rat(boost::multiprecision::numerator(q))) * den.inverse();
    }
  }
  return Scalar(r, q);
}

void Scalar::canonicalize() {
  if (ring_.kind() == CoeffRing::Kind::PrimeField) {
    Int n = boost::multiprecision::numerator(v_) % ring_.modulus();
    if (n < 0) n += ring_.modulus();
    v_ = Rat(n);
  }
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same(ring_, o.ring_);
  return Scalar(ring_, v_ + o.v_);
}

Scalar Scalar::operator-(const Scalar& o) const {
  require_same(ring_, o.ring_);
  return Scalar(ring_, v_ - o.v_);
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same(ring_, o.ring_);
  return Scalar(ring_, v_ * o.v_);
}

Scalar Scalar::operator-() const { return Scalar(ring_, -v_); }

bool Scalar::operator==(const Scalar& o) const {
  require_same(ring_, o.ring_);
  return v_ == o.v_;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw ScalarError("0 has no inverse");
  switch (ring_.kind()) {
    case CoeffRing::Kind::Integers:
      if (v_ == 1 || v_ == -1) return *this;
      throw ScalarError(to_string() + " is not a unit in Z");
    case CoeffRing::Kind::Rationals:
      return Scalar(ring_, Rat(1) / v_);
    case CoeffRing::Kind::PrimeField: {
      // Fermat: x^(p-2) mod p
      const Int& p = ring_.modulus();
      Int x = boost::multiprecision::numerator(v_);
      return Scalar(ring_, Rat(boost::multiprecision::powm(x, p - 2, p)));
    }
  }
  throw ScalarError("bad scalar state");
}

std::string Scalar::to_string() const { return v_.str(); }

int field_rank(const std::vector<std::vector<Scalar>>& rows) {
  if (rows.empty()) return 0;
  if (rows[0].empty()) {
    for (const auto& r : rows)
      if (!r.empty()) throw ScalarError("field_rank: ragged matrix");
    return 0;
  }
  const CoeffRing ring = rows[0][0].ring();
  if (!ring.is_field())
    throw ScalarError("field_rank needs field coefficients, got " +
                      ring.to_string());
  const std::size_t cols = rows[0].size();
  std::vector<std::vector<Scalar>> m = rows;
  for (const auto& r : m) {
    if (r.size() != cols) throw ScalarError("field_rank: ragged matrix");
    for (const auto& s : r) require_same(s.ring(), ring);
  }

  int rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][col].is_zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[row]);
    const Scalar inv = m[row][col].inverse();
    for (std::size_t j = col; j < cols; ++j) m[row][j] = m[row][j] * inv;
    for (std::size_t i = row + 1; i < m.size(); ++i) {
      if (m[i][col].is_zero()) continue;
      const Scalar f = m[i][col];
      for (std::size_t j = col; j < cols; ++j)
        m[i][j] = m[i][j] - f * m[row][j];
    }
    ++row;
    ++rank;
  }
  return rank;
}

}  // namespace tc
