#include "tc/graded.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "parallel_impl.hpp"
#include "tc/errors.hpp"

namespace tc {

int hardware_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

bool valid_label(const std::string& s) {
  if (s.empty() || s[0] == '-') return false;
  bool all_digits = true;
  for (char ch : s) {
    const unsigned char c = static_cast<unsigned char>(ch);
    if (c < '0' || c > '9') all_digits = false;
    if (c < 128 && std::isspace(c)) return false;
    if (c == ':' || c == '*' || c == '+' || c == '#' || c == '=') return false;
  }
  return !all_digits;  // a bare number would be ambiguous in product terms
}

namespace {

void add_scaled(Coords& acc, const Coords& src, const Scalar& f) {
  for (const auto& [r, c] : src) {
    auto it = acc.find(r);
    if (it == acc.end()) {
      Scalar v = c * f;
      if (!v.is_zero()) acc.emplace(r, v);
    } else {
      it->second = it->second + c * f;
      if (it->second.is_zero()) acc.erase(it);
    }
  }
}

void check_name(const std::string& name) {
  for (char ch : name) {
    const unsigned char c = static_cast<unsigned char>(ch);
    if ((c < 128 && std::isspace(c)) || c == '#' || c == ':' || c == '*' ||
        c == '+' || c == '=')
      throw RingError(ValidationKind::Input,
                      "ring name '" + name + "' contains reserved characters");
  }
}

}  // namespace

std::optional<int> GradedRing::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Coords GradedRing::basis_product(int i, int j) const {
  if (i < 0 || j < 0 || i >= size() || j >= size())
    throw ComputeError("basis index out of range");
  if (i == 0) return Coords{{j, Scalar::one(coeff_)}};
  if (j == 0) return Coords{{i, Scalar::one(coeff_)}};
  const bool flip = i > j;
  auto it = table_.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
  if (it == table_.end()) return {};
  Coords out = it->second;
  if (flip && (degree(i) % 2 != 0) && (degree(j) % 2 != 0))
    for (auto& [r, c] : out) c = -c;
  return out;
}

Coords GradedRing::multiply(const Coords& a, const Coords& b) const {
  Coords acc;
  for (const auto& [i, ci] : a)
    for (const auto& [j, cj] : b) add_scaled(acc, basis_product(i, j), ci * cj);
  return acc;
}

// ---- Element ----------------------------------------------------------

Element Element::zero(RingPtr r) { return Element(std::move(r), {}); }

Element Element::unit(RingPtr r) {
  Coords c{{0, Scalar::one(r->coeff())}};
  return Element(std::move(r), std::move(c));
}

Element Element::basis(RingPtr r, int i) {
  if (i < 0 || i >= r->size()) throw ComputeError("basis index out of range");
  Coords c{{i, Scalar::one(r->coeff())}};
  return Element(std::move(r), std::move(c));
}

Element Element::make(RingPtr r, Coords c) {
  for (auto it = c.begin(); it != c.end();) {
    if (it->first < 0 || it->first >= r->size())
      throw ComputeError("coordinate index out of range");
    if (it->second.ring() != r->coeff())
      throw ComputeError("coordinate in wrong coefficient ring");
    it = it->second.is_zero() ? c.erase(it) : std::next(it);
  }
  return Element(std::move(r), std::move(c));
}

namespace {
const RingPtr& common_ring(const Element& a, const Element& b) {
  if (!a.ring() || !b.ring() || a.ring() != b.ring())
    throw ComputeError("elements belong to different rings");
  return a.ring();
}
}  // namespace

Scalar Element::coeff_at(int i) const {
  auto it = coords_.find(i);
  return it == coords_.end() ? Scalar::zero(ring_->coeff()) : it->second;
}

Element Element::operator+(const Element& o) const {
  common_ring(*this, o);
  Coords c = coords_;
  add_scaled(c, o.coords_, Scalar::one(ring_->coeff()));
  return Element(ring_, std::move(c));
}

Element Element::operator-(const Element& o) const {
  common_ring(*this, o);
  Coords c = coords_;
  add_scaled(c, o.coords_, -Scalar::one(ring_->coeff()));
  return Element(ring_, std::move(c));
}

Element Element::operator-() const {
  Coords c = coords_;
  for (auto& [i, v] : c) v = -v;
  return Element(ring_, std::move(c));
}

Element Element::operator*(const Element& o) const {
  common_ring(*this, o);
  return Element(ring_, ring_->multiply(coords_, o.coords_));
}

Element Element::scaled(const Scalar& c) const {
  if (!ring_ || c.ring() != ring_->coeff())
    throw ComputeError("scaling by scalar from a different coefficient ring");
  if (c.is_zero()) return Element(ring_, {});
  Coords out = coords_;
  for (auto& [i, v] : out) v = v * c;
  return Element(ring_, std::move(out));
}

bool Element::operator==(const Element& o) const {
  common_ring(*this, o);
  return coords_ == o.coords_;
}

std::map<int, Element> Element::degree_components() const {
  std::map<int, Coords> split;
  for (const auto& [i, c] : coords_) split[ring_->degree(i)].emplace(i, c);
  std::map<int, Element> out;
  for (auto& [d, c] : split) out.emplace(d, Element(ring_, std::move(c)));
  return out;
}

std::optional<int> Element::homogeneous_degree() const {
  if (coords_.empty()) return std::nullopt;
  const int d = ring_->degree(coords_.begin()->first);
  for (const auto& [i, c] : coords_)
    if (ring_->degree(i) != d) return std::nullopt;
  return d;
}

std::string Element::to_string() const {
  if (coords_.empty()) return "0";
  std::string out;
  const bool char0 = ring_->coeff().kind() != CoeffRing::Kind::PrimeField;
  for (const auto& [i, c] : coords_) {
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += c.to_string();
    } else if (c.is_one()) {
      out += ring_->label(i);
    } else if (char0 && (-c).is_one()) {
      out += "-" + ring_->label(i);
    } else {
      out += c.to_string() + "*" + ring_->label(i);
    }
  }
  return out;
}

// ---- construction + validation ----------------------------------------

RingPtr make_ring(const std::string& name, const CoeffRing& coeff,
                  std::vector<BasisElement> basis, const RawTable& raw,
                  std::optional<int> formal_dim, const RingLimits& limits,
                  Exec policy) {
  check_name(name);
  const int n = static_cast<int>(basis.size());
  if (n == 0) throw RingError(ValidationKind::Input, "empty basis");
  if (basis.size() > limits.max_basis)
    throw RingError(ValidationKind::Input,
                    "basis size " + std::to_string(n) + " exceeds cap " +
                        std::to_string(limits.max_basis) +
                        " (raise RingLimits::max_basis to override)");
  if (basis[0].label != "1" || basis[0].degree != 0)
    throw RingError(ValidationKind::Unit,
                    "basis[0] must be the unit '1' in degree 0");
  if (formal_dim && *formal_dim < 0)
    throw RingError(ValidationKind::Input, "negative formal dimension");

  std::map<std::string, int> index;
  int maxdeg = 0;
  for (int i = 0; i < n; ++i) {
    const BasisElement& b = basis[i];
    if (i > 0) {
      if (!valid_label(b.label))
        throw RingError(ValidationKind::Input, "bad label '" + b.label + "'");
      if (b.degree < 0)
        throw RingError(ValidationKind::Input,
                        "negative degree on '" + b.label + "'");
      if (b.degree == 0)
        throw RingError(ValidationKind::Input,
                        "second degree-0 element '" + b.label +
                            "' (the unit must be the only one)");
    }
    if (!index.emplace(b.label, i).second)
      throw RingError(ValidationKind::Input, "duplicate label '" + b.label + "'");
    if (formal_dim && b.degree > *formal_dim)
      throw RingError(ValidationKind::DegreeMismatch,
                      "'" + b.label + "' lives above the formal dimension");
    maxdeg = std::max(maxdeg, b.degree);
  }

  // Normalize every table entry to i <= j, checking graded commutativity
  // when both orientations were supplied.  Empty products participate too.
  std::map<std::pair<int, int>, Coords> given;
  for (const auto& [key, coords] : raw) {
    const auto [i, j] = key;
    if (i < 0 || j < 0 || i >= n || j >= n)
      throw RingError(ValidationKind::Input, "table index out of range");
    Coords clean;
    for (const auto& [r, c] : coords) {
      if (r < 0 || r >= n)
        throw RingError(ValidationKind::Input, "product index out of range");
      if (c.ring() != coeff)
        throw RingError(ValidationKind::Input,
                        "structure constant in wrong coefficient ring");
      if (!c.is_zero()) clean.emplace(r, c);
    }
    if (i == 0 || j == 0) {
      const int other = i + j;
      Coords expect{{other, Scalar::one(coeff)}};
      if (clean != expect)
        throw RingError(ValidationKind::Unit,
                        "1*" + basis[other].label + " must equal " +
                            basis[other].label);
      continue;
    }
    int a = i, b = j;
    Coords oriented = std::move(clean);
    if (a > b) {
      std::swap(a, b);
      if (basis[i].degree % 2 != 0 && basis[j].degree % 2 != 0)
        for (auto& [r, c] : oriented) c = -c;
    }
    auto [slot, fresh] = given.emplace(std::make_pair(a, b), oriented);
    if (!fresh && slot->second != oriented)
      throw RingError(ValidationKind::Commutativity,
                      basis[i].label + "*" + basis[j].label + " and " +
                          basis[j].label + "*" + basis[i].label +
                          " break the sign rule");
  }

  for (const auto& [key, coords] : given) {
    const int target = basis[key.first].degree + basis[key.second].degree;
    for (const auto& [r, c] : coords)
      if (basis[r].degree != target)
        throw RingError(ValidationKind::DegreeMismatch,
                        basis[key.first].label + "*" + basis[key.second].label +
                            " has a term in degree " +
                            std::to_string(basis[r].degree) + ", expected " +
                            std::to_string(target));
  }

  // 2x^2 = 0 for odd x, and 2 is invertible or regular away from char 2.
  if (!coeff.char_two()) {
    for (const auto& [key, coords] : given)
      if (key.first == key.second && basis[key.first].degree % 2 != 0 &&
          !coords.empty())
        throw RingError(ValidationKind::OddSquare,
                        basis[key.first].label +
                            "^2 must vanish in odd degree over " +
                            coeff.to_string());
  }

  auto ring = std::shared_ptr<GradedRing>(new GradedRing());
  ring->name_ = name;
  ring->coeff_ = coeff;
  ring->basis_ = std::move(basis);
  ring->index_ = std::move(index);
  ring->formal_dim_ = formal_dim;
  ring->max_degree_ = maxdeg;
  for (auto& [k, v] : given)
    if (!v.empty()) ring->table_.emplace(k, std::move(v));

  // Exhaustive associativity sweep over non-unit triples; parallel runs
  // record candidates and the smallest failing triple wins, so the report
  // matches the serial one.
  const std::int64_t nn = n - 1;
  if (nn > 0) {
    detail::MinIndex bad;
    for_each_index(policy, nn * nn * nn, [&](std::ptrdiff_t t) {
      if (static_cast<std::int64_t>(t) >= bad.value()) return;
      const int i = static_cast<int>(t / (nn * nn)) + 1;
      const int j = static_cast<int>((t / nn) % nn) + 1;
      const int k = static_cast<int>(t % nn) + 1;
      Coords lhs, rhs;
      for (const auto& [r, c] : ring->basis_product(i, j))
        add_scaled(lhs, ring->basis_product(r, k), c);
      for (const auto& [r, c] : ring->basis_product(j, k))
        add_scaled(rhs, ring->basis_product(i, r), c);
      if (lhs != rhs) bad.record(t);
    });
    if (bad.hit()) {
      const std::int64_t t = bad.value();
      const int i = static_cast<int>(t / (nn * nn)) + 1;
      const int j = static_cast<int>((t / nn) % nn) + 1;
      const int k = static_cast<int>(t % nn) + 1;
      throw RingError(ValidationKind::Associativity,
                      "(" + ring->label(i) + "*" + ring->label(j) + ")*" +
                          ring->label(k) + " != " + ring->label(i) + "*(" +
                          ring->label(j) + "*" + ring->label(k) + ")");
    }
  }
  return ring;
}

// ---- builders ---------------------------------------------------------

RingPtr exterior_algebra(const CoeffRing& coeff, const std::vector<int>& degrees,
                         const std::string& name, const RingLimits& limits,
                         Exec policy) {
  const int g = static_cast<int>(degrees.size());
  for (int d : degrees)
    if (d <= 0)
      throw RingError(ValidationKind::Input,
                      "generator degrees must be positive");
  if (coeff.kind() != CoeffRing::Kind::PrimeField)
    for (int d : degrees)
      if (d % 2 == 0)
        throw RingError(ValidationKind::Input,
                        "even-degree exterior generator needs F_p coefficients");
  if (g >= 20 || (std::size_t(1) << g) > limits.max_basis)
    throw RingError(ValidationKind::Input,
                    "2^" + std::to_string(g) + " basis elements exceed the cap");

  static const char* kPrefix[] = {"x", "y", "z", "w"};
  std::vector<std::string> glab(g);
  std::map<int, int> seen;
  for (int t = 0; t < g; ++t) {
    const int c = seen[degrees[t]]++;
    glab[t] = c < 4 ? kPrefix[c] + std::to_string(degrees[t])
                    : "x" + std::to_string(degrees[t]) + "_" +
                          std::to_string(c + 1);
  }

  struct Sub {
    unsigned mask;
    int deg;
    std::vector<int> idx;
  };
  std::vector<Sub> subs;
  subs.reserve(std::size_t(1) << g);
  for (unsigned mask = 0; mask < (1u << g); ++mask) {
    Sub s{mask, 0, {}};
    for (int t = 0; t < g; ++t)
      if (mask & (1u << t)) {
        s.deg += degrees[t];
        s.idx.push_back(t);
      }
    subs.push_back(std::move(s));
  }
  std::stable_sort(subs.begin(), subs.end(), [](const Sub& a, const Sub& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    return a.idx < b.idx;
  });

  int total = 0;
  for (int d : degrees) total += d;

  std::vector<BasisElement> basis;
  std::map<unsigned, int> at;
  for (std::size_t p = 0; p < subs.size(); ++p) {
    std::string lab;
    for (int t : subs[p].idx) lab += glab[t];
    if (lab.empty()) lab = "1";
    basis.push_back({lab, subs[p].deg});
    at[subs[p].mask] = static_cast<int>(p);
  }

  RawTable raw;
  const int nsub = static_cast<int>(subs.size());
  for (int p = 1; p < nsub; ++p)
    for (int q = p; q < nsub; ++q) {
      if (subs[p].mask & subs[q].mask) continue;  // repeated generator
      int par = 0;
      for (int t : subs[q].idx)
        for (int s : subs[p].idx)
          if (s > t) par += degrees[s] * degrees[t];
      raw[{p, q}] = {{at.at(subs[p].mask | subs[q].mask),
                      Scalar::of(coeff, par % 2 == 0 ? 1 : -1)}};
    }

  std::string rname = name;
  if (rname.empty()) {
    rname = "Ext(";
    for (int t = 0; t < g; ++t) rname += (t ? "," : "") + glab[t];
    rname += ")";
  }
  return make_ring(rname, coeff, std::move(basis), raw, total, limits, policy);
}

RingPtr sphere_ring(const CoeffRing& coeff, int k, const std::string& name) {
  if (k <= 0)
    throw RingError(ValidationKind::Input, "sphere dimension must be positive");
  std::vector<BasisElement> basis{{"1", 0}, {"x" + std::to_string(k), k}};
  return make_ring(name.empty() ? "S" + std::to_string(k) : name, coeff,
                   std::move(basis), {}, k);
}

RingPtr base_change(const RingPtr& r, const CoeffRing& target, Exec policy) {
  if (!r) throw ComputeError("null ring");
  if (r->coeff().kind() != CoeffRing::Kind::Integers)
    throw ComputeError("base_change starts from an integral ring");
  if (!target.is_field())
    throw ComputeError("base_change target must be Q or F_p");
  RawTable raw;
  for (const auto& [key, coords] : r->table()) {
    Coords mapped;
    for (const auto& [i, c] : coords)
      mapped.emplace(i, Scalar::of(target,
                                   boost::multiprecision::numerator(c.value())));
    raw.emplace(key, std::move(mapped));
  }
  RingLimits limits;
  limits.max_basis = std::max<std::size_t>(limits.max_basis, r->basis().size());
  return make_ring(r->name(), target, r->basis(), raw, r->formal_dim(), limits,
                   policy);
}

RingPtr connected_sum_ring(const RingPtr& a, const RingPtr& b, int m,
                           const std::string& name, const RingLimits& limits,
                           Exec policy) {
  if (!a || !b) throw ComputeError("null summand");
  if (m < 1) throw ComputeError("connected sum needs dimension >= 1");
  if (a->coeff() != b->coeff())
    throw ComputeError("summands over different coefficient rings");
  const RingPtr rings[2] = {a, b};
  int top[2];
  for (int s = 0; s < 2; ++s) {
    const RingPtr& r = rings[s];
    if (!r->formal_dim() || *r->formal_dim() != m)
      throw ComputeError("summand '" + r->name() +
                         "' does not have formal dimension " +
                         std::to_string(m));
    int found = -1;
    for (int i = 0; i < r->size(); ++i)
      if (r->degree(i) == m) {
        if (found >= 0)
          throw ComputeError("summand '" + r->name() +
                             "' has a top degree of rank > 1");
        found = i;
      }
    if (found < 0)
      throw ComputeError("summand '" + r->name() + "' has no top class");
    top[s] = found;
  }

  struct Src {
    int deg, s, orig;
  };
  std::vector<Src> mid;
  for (int s = 0; s < 2; ++s)
    for (int i = 1; i < rings[s]->size(); ++i)
      if (rings[s]->degree(i) < m) mid.push_back({rings[s]->degree(i), s, i});
  std::sort(mid.begin(), mid.end(), [](const Src& x, const Src& y) {
    return std::tie(x.deg, x.s, x.orig) < std::tie(y.deg, y.s, y.orig);
  });

  std::vector<BasisElement> basis{{"1", 0}};
  std::map<std::pair<int, int>, int> to_new;
  for (const Src& sc : mid) {
    basis.push_back({rings[sc.s]->label(sc.orig) + (sc.s == 0 ? "_1" : "_2"),
                     sc.deg});
    to_new[{sc.s, sc.orig}] = static_cast<int>(basis.size()) - 1;
  }
  const int gidx = static_cast<int>(basis.size());
  basis.push_back({"g", m});
  to_new[{0, top[0]}] = gidx;
  to_new[{1, top[1]}] = gidx;

  RawTable raw;
  for (int s = 0; s < 2; ++s)
    for (const auto& [key, coords] : rings[s]->table()) {
      const auto [i, j] = key;
      if (rings[s]->degree(i) >= m || rings[s]->degree(j) >= m) continue;
      Coords mapped;
      for (const auto& [r, c] : coords) mapped.emplace(to_new.at({s, r}), c);
      // make_ring accepts either orientation, so no sign bookkeeping here
      raw.emplace(std::make_pair(to_new.at({s, i}), to_new.at({s, j})),
                  std::move(mapped));
    }

  const std::string rname =
      name.empty() ? "sum_" + a->name() + "_" + b->name() : name;
  RingLimits lim = limits;
  lim.max_basis = std::max(lim.max_basis, basis.size());
  return make_ring(rname, a->coeff(), std::move(basis), raw, m, lim, policy);
}

}  // namespace tc
