#include "tc/classify.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "tc/errors.hpp"

namespace tc {

namespace {

Int smallest_prime_factor(const Int& q) {
  if (q % 2 == 0) return 2;
  for (Int p = 3; p * p <= q; p += 2)
    if (q % p == 0) return p;
  return q;
}

bool is_prime_power(const Int& q, Int* prime) {
  if (q < 2) return false;
  const Int p = smallest_prime_factor(q);
  Int rest = q;
  while (rest % p == 0) rest /= p;
  if (prime) *prime = p;
  return rest == 1;
}

int count_for_prime(const std::vector<Int>& tors, const Int& p) {
  int c = 0;
  for (const Int& q : tors)
    if (q % p == 0) ++c;
  return c;
}

std::vector<int> ring_dims(const RingPtr& r, int m) {
  std::vector<int> dims(m + 1, 0);
  for (const auto& b : r->basis())
    if (b.degree <= m) ++dims[b.degree];
  return dims;
}

// Exterior-on-two-generators shape: basis 1, a, b, top with |a| + |b| = m,
// a^2 = b^2 = 0 and a*b a unit multiple of the top class.  Returns the
// generator degrees (|a| <= |b|) when the ring has exactly this form.
std::optional<std::pair<int, int>> two_generator_exterior(const RingPtr& r) {
  if (r->size() != 4 || !r->formal_dim()) return std::nullopt;
  const int m = *r->formal_dim();
  int top = -1;
  std::vector<int> mids;
  for (int i = 1; i < 4; ++i) {
    if (r->degree(i) == m) {
      if (top >= 0) return std::nullopt;
      top = i;
    } else {
      mids.push_back(i);
    }
  }
  if (top < 0 || mids.size() != 2) return std::nullopt;
  int a = mids[0], b = mids[1];
  if (r->degree(a) > r->degree(b)) std::swap(a, b);
  if (r->degree(a) + r->degree(b) != m) return std::nullopt;
  if (!r->basis_product(a, a).empty() || !r->basis_product(b, b).empty())
    return std::nullopt;
  const Coords ab = r->basis_product(a, b);
  if (ab.size() != 1 || ab.begin()->first != top) return std::nullopt;
  const Scalar c = ab.begin()->second;
  if (r->coeff().kind() == CoeffRing::Kind::Integers) {
    if (!(c.is_one() || (-c).is_one())) return std::nullopt;
  } else if (c.is_zero()) {
    return std::nullopt;
  }
  return std::make_pair(r->degree(a), r->degree(b));
}

struct Found {
  Witness w;
  CoeffRing coeff;
};

// First ring (in Z < Q < F_p order) holding a nonzero k-fold product.
std::optional<Found> scan_witness(const ManifoldData& d, int k,
                                  const std::vector<CoeffRing>& preferred,
                                  const SearchOptions& opts) {
  std::vector<CoeffRing> order = preferred;
  for (const auto& [coeff, ring] : d.rings)
    if (std::find(order.begin(), order.end(), coeff) == order.end())
      order.push_back(coeff);
  for (const CoeffRing& coeff : order) {
    auto it = d.rings.find(coeff);
    if (it == d.rings.end()) continue;
    SquareRing sq(it->second, opts.limits, opts.policy);
    if (auto w = find_witness(sq, k, opts)) return Found{std::move(*w), coeff};
  }
  return std::nullopt;
}

struct ZclScan {
  int best = 1;
  std::optional<Witness> witness;  // certificate for the best, when >= 2
  std::optional<CoeffRing> coeff;
};

ZclScan max_zcl(const ManifoldData& d, const SearchOptions& opts) {
  ZclScan out;
  for (const auto& [coeff, ring] : d.rings) {
    SquareRing sq(ring, opts.limits, opts.policy);
    NilResult nr = zero_divisor_nilpotency(sq, opts);
    if (nr.nil > out.best) {
      out.best = nr.nil;
      out.witness = std::move(nr.witness);
      out.coeff = coeff;
    }
  }
  return out;
}

// Admissible verdicts must not coexist with a zero-divisor bound above 3;
// if one of the supplied presentations certifies TC >= 4, the certificate
// wins and the verdict flips to Excluded.
Verdict finish_admissible(Verdict v, const ManifoldData& d,
                          const SearchOptions& opts) {
  ZclScan scan = max_zcl(d, opts);
  v.tc_floor = std::max(v.tc_floor, scan.best);
  if (scan.best >= 4) {
    v.outcome = Alt::Excluded;
    v.k = v.l = 0;
    v.reason = "a " + std::to_string(scan.best - 1) +
               "-fold zero-divisor product is nonzero";
    v.witness = scan.witness;
    v.witness_coeff = scan.coeff;
  }
  return v;
}

Verdict excluded_or_undecided(const ManifoldData& d, const std::string& why,
                              const std::vector<CoeffRing>& preferred,
                              const SearchOptions& opts) {
  Verdict v;
  if (auto f = scan_witness(d, 3, preferred, opts)) {
    v.outcome = Alt::Excluded;
    v.tc_floor = 4;
    v.reason = why;
    v.witness = std::move(f->w);
    v.witness_coeff = f->coeff;
  } else {
    v.outcome = Alt::Undecided;
    v.tc_floor = max_zcl(d, opts).best;
    v.reason = why + "; no triple zero-divisor certificate in the supplied "
               "presentations";
  }
  return v;
}

}  // namespace

void validate_manifold_data(const ManifoldData& d) {
  if (d.name.empty()) throw ComputeError("manifold needs a name");
  for (char ch : d.name) {
    const unsigned char c = static_cast<unsigned char>(ch);
    if ((c < 128 && std::isspace(c)) || c == '#')
      throw ComputeError("manifold name contains reserved characters");
  }
  const HomologyProfile& p = d.profile;
  const int m = p.dimension;
  if (m < 1) throw ComputeError("dimension must be positive");
  if (static_cast<int>(p.free_ranks.size()) != m + 1 ||
      static_cast<int>(p.torsion.size()) != m + 1)
    throw ComputeError("homology arrays must have dimension+1 entries");
  for (int r : p.free_ranks)
    if (r < 0) throw ComputeError("negative homology rank");
  if (p.free_ranks[0] != 1 || !p.torsion[0].empty())
    throw ComputeError("H_0 must be Z for a closed connected manifold");
  for (const auto& tors : p.torsion)
    for (const Int& q : tors)
      if (!is_prime_power(q, nullptr))
        throw ComputeError("torsion coefficient " + q.str() +
                           " is not a prime power");
  if (d.pi1_free_rank < 0) throw ComputeError("negative pi1 rank");
  if (d.pi1_free_rank != p.free_ranks[1])
    throw ComputeError("pi1 free rank disagrees with the rank of H_1");

  if (d.orientable) {
    if (p.free_ranks[m] != 1 || !p.torsion[m].empty())
      throw ComputeError("closed orientable m-manifold needs H_m = Z");
    for (int i = 0; i <= m; ++i)
      if (p.free_ranks[i] != p.free_ranks[m - i])
        throw ComputeError("free ranks break the duality symmetry at degree " +
                           std::to_string(i));
    for (int i = 0; i + 1 <= m; ++i) {
      std::vector<Int> a = p.torsion[i], b = p.torsion[m - 1 - i];
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b)
        throw ComputeError("torsion breaks the duality symmetry at degree " +
                           std::to_string(i));
    }
  } else {
    if (p.free_ranks[m] != 0 || !p.torsion[m].empty())
      throw ComputeError("closed non-orientable m-manifold needs H_m = 0");
  }

  bool torsion_free = true;
  std::set<Int> primes;
  for (const auto& tors : p.torsion)
    for (const Int& q : tors) {
      torsion_free = false;
      Int prime;
      is_prime_power(q, &prime);
      primes.insert(prime);
    }

  for (const auto& [coeff, ring] : d.rings) {
    if (!ring) throw ComputeError("null ring in manifold data");
    if (ring->coeff() != coeff)
      throw ComputeError("ring stored under the wrong coefficient key");
    if (!ring->formal_dim() || *ring->formal_dim() != m)
      throw ComputeError("ring '" + ring->name() +
                         "' has the wrong formal dimension");
    const std::vector<int> dims = ring_dims(ring, m);
    switch (coeff.kind()) {
      case CoeffRing::Kind::Integers:
        if (!torsion_free)
          throw ComputeError(
              "integral presentation supplied but homology has torsion");
        [[fallthrough]];
      case CoeffRing::Kind::Rationals:
        for (int i = 0; i <= m; ++i)
          if (dims[i] != p.free_ranks[i])
            throw ComputeError("cohomology dimension over " +
                               coeff.to_string() + " disagrees at degree " +
                               std::to_string(i));
        break;
      case CoeffRing::Kind::PrimeField: {
        const Int& q = coeff.modulus();
        for (int i = 0; i <= m; ++i) {
          const int want = p.free_ranks[i] + count_for_prime(p.torsion[i], q) +
                           (i > 0 ? count_for_prime(p.torsion[i - 1], q) : 0);
          if (dims[i] != want)
            throw ComputeError("cohomology dimension over " +
                               coeff.to_string() + " disagrees at degree " +
                               std::to_string(i) +
                               " (universal coefficients)");
        }
        break;
      }
    }
  }

  if (torsion_free && !d.rings.count(CoeffRing::integers()))
    throw ComputeError("torsion-free homology needs the integral presentation");
  for (const Int& q : primes)
    if (!d.rings.count(CoeffRing::prime_field(q)))
      throw ComputeError("torsion prime " + q.str() + " needs an F_" +
                         q.str() + " presentation");
}

std::vector<std::vector<Scalar>> pairing_matrix(const RingPtr& r, int k) {
  if (!r) throw ComputeError("null ring");
  if (!r->formal_dim()) throw ComputeError("pairing needs a formal dimension");
  const int m = *r->formal_dim();
  int top = -1;
  for (int i = 0; i < r->size(); ++i)
    if (r->degree(i) == m) {
      if (top >= 0)
        throw ComputeError("pairing needs a one-dimensional top degree");
      top = i;
    }
  if (top < 0) throw ComputeError("pairing needs a top class");
  std::vector<int> rows, cols;
  for (int i = 0; i < r->size(); ++i) {
    if (r->degree(i) == k) rows.push_back(i);
    if (r->degree(i) == m - k) cols.push_back(i);
  }
  std::vector<std::vector<Scalar>> out;
  for (int a : rows) {
    std::vector<Scalar> row;
    for (int b : cols) {
      const Coords prod = r->basis_product(a, b);
      auto it = prod.find(top);
      row.push_back(it == prod.end() ? Scalar::zero(r->coeff()) : it->second);
    }
    out.push_back(std::move(row));
  }
  return out;
}

PDReport check_poincare_duality(const RingPtr& r) {
  if (!r) throw ComputeError("null ring");
  if (!r->coeff().is_field())
    throw ComputeError("duality check needs field coefficients");
  if (!r->formal_dim())
    throw ComputeError("duality check needs a formal dimension");
  const int m = *r->formal_dim();
  const std::vector<int> dims = ring_dims(r, m);
  PDReport rep;
  for (int k = 0; k <= m; ++k) {
    PDDegree deg;
    deg.k = k;
    deg.dim_k = dims[k];
    deg.dim_mk = dims[m - k];
    deg.rank = field_rank(pairing_matrix(r, k));
    deg.ok = (deg.dim_k == deg.dim_mk) && (deg.rank == deg.dim_k);
    rep.ok = rep.ok && deg.ok;
    rep.degrees.push_back(deg);
  }
  return rep;
}

std::string to_string(Alt a) {
  switch (a) {
    case Alt::Alternative1: return "Alternative1";
    case Alt::Alternative2: return "Alternative2";
    case Alt::Alternative3: return "Alternative3";
    case Alt::Excluded: return "Excluded";
    case Alt::Undecided: return "Undecided";
  }
  return "?";
}

std::string verdict_label(const Verdict& v) {
  switch (v.outcome) {
    case Alt::Alternative1:
      return "Alternative1(" + std::to_string(v.k) + ")";
    case Alt::Alternative2:
      return "Alternative2(" + std::to_string(v.k) + "," +
             std::to_string(v.l) + ")";
    case Alt::Alternative3:
      return "Alternative3(" + std::to_string(v.k) + ")";
    default:
      return to_string(v.outcome);
  }
}

Verdict classify_low_tc(const ManifoldData& d, const SearchOptions& opts) {
  validate_manifold_data(d);
  if (!d.orientable)
    throw ComputeError("classification applies to closed orientable manifolds");
  const HomologyProfile& p = d.profile;
  const int m = p.dimension;

  bool sphere_like = true;
  for (int i = 1; i < m; ++i)
    if (p.free_ranks[i] != 0 || !p.torsion[i].empty()) sphere_like = false;
  if (sphere_like) {
    Verdict v;
    v.outcome = Alt::Alternative1;
    v.k = m;
    v.reason = "integral homology of the sphere S^" + std::to_string(m);
    return finish_admissible(std::move(v), d, opts);
  }
  if (m < 3)
    throw ComputeError(
        "no closed surface besides S^2 satisfies the admissibility "
        "alternatives; dimension >= 3 required");

  const int r = d.pi1_free_rank;

  if (r >= 2) {
    auto zit = d.rings.find(CoeffRing::integers());
    if (zit == d.rings.end()) zit = d.rings.find(CoeffRing::rationals());
    if (zit == d.rings.end())
      throw ComputeError(
          "free rank >= 2 analysis needs an integral or rational "
          "presentation");
    SquareRing sq(zit->second, opts.limits, opts.policy);
    Verdict v;
    v.reason =
        "H_1 has rank >= 2: degree-1 classes pair nontrivially into long "
        "zero-divisor products";
    if (auto w4 = find_witness(sq, 4, opts)) {
      v.outcome = Alt::Excluded;
      v.tc_floor = 5;
      v.witness = std::move(w4);
      v.witness_coeff = zit->first;
      return v;
    }
    if (auto w3 = find_witness(sq, 3, opts)) {
      v.outcome = Alt::Excluded;
      v.tc_floor = 4;
      v.witness = std::move(w3);
      v.witness_coeff = zit->first;
      return v;
    }
    return excluded_or_undecided(
        d, "H_1 has rank >= 2 but no long product was found", {zit->first},
        opts);
  }

  if (r == 1) {
    bool shape = (m - 1) % 2 == 1 && m >= 4;
    for (int i = 0; i <= m && shape; ++i) {
      const int want = (i == 0 || i == 1 || i == m - 1 || i == m) ? 1 : 0;
      if (p.free_ranks[i] != want || !p.torsion[i].empty()) shape = false;
    }
    if (shape) {
      auto zit = d.rings.find(CoeffRing::integers());
      if (zit == d.rings.end())
        throw ComputeError("the (1, m-1) analysis needs the integral "
                           "presentation");
      if (auto degs = two_generator_exterior(zit->second);
          degs && *degs == std::make_pair(1, m - 1)) {
        Verdict v;
        v.outcome = Alt::Alternative2;
        v.k = 1;
        v.l = m - 1;
        v.tc_floor = 3;
        v.reason = "cohomology is exterior on degrees 1 and " +
                   std::to_string(m - 1);
        return finish_admissible(std::move(v), d, opts);
      }
    }
    return excluded_or_undecided(
        d,
        "H_1 = Z but the cohomology is not exterior on degrees (1, " +
            std::to_string(m - 1) + ")",
        {CoeffRing::integers(), CoeffRing::rationals()}, opts);
  }

  // r == 0: the middle homology H_i for 0 < i < m drives the split.
  bool mid_free = false;
  std::set<Int> mid_primes;
  for (int i = 1; i < m; ++i) {
    if (p.free_ranks[i] > 0) mid_free = true;
    for (const Int& q : p.torsion[i]) {
      Int prime;
      is_prime_power(q, &prime);
      mid_primes.insert(prime);
    }
  }

  if (mid_free) {
    // Candidate shape: betti (1, 0, .., 1 at k, .., 1 at l, .., 0, 1) with
    // k, l odd, k + l = m, and no torsion at all.
    int k = 0, l = 0;
    bool shape = mid_primes.empty();
    for (int i = 1; i < m && shape; ++i) {
      if (p.free_ranks[i] == 0) continue;
      if (p.free_ranks[i] == 1) {
        if (k == 0)
          k = i;
        else if (l == 0)
          l = i;
        else
          shape = false;
      } else if (p.free_ranks[i] == 2 && k == 0) {
        k = l = i;
      } else {
        shape = false;
      }
    }
    if (shape && l == 0) shape = false;  // a single rank-1 middle degree
    if (shape) shape = (k % 2 == 1) && (l % 2 == 1) && (k + l == m);
    if (shape) {
      auto zit = d.rings.find(CoeffRing::integers());
      if (zit == d.rings.end())
        throw ComputeError("the exterior-form analysis needs the integral "
                           "presentation");
      if (auto degs = two_generator_exterior(zit->second);
          degs && *degs == std::make_pair(k, l)) {
        Verdict v;
        v.outcome = Alt::Alternative2;
        v.k = k;
        v.l = l;
        v.tc_floor = 3;
        v.reason = "cohomology is exterior on odd degrees " +
                   std::to_string(k) + " and " + std::to_string(l);
        return finish_admissible(std::move(v), d, opts);
      }
    }
    return excluded_or_undecided(
        d, "middle homology is not an exterior pair of odd degrees",
        {CoeffRing::integers(), CoeffRing::rationals()}, opts);
  }

  bool has_odd_prime = false;
  Int smallest_odd = 0;
  for (const Int& q : mid_primes)
    if (q != 2 && (smallest_odd == 0 || q < smallest_odd)) {
      has_odd_prime = true;
      smallest_odd = q;
    }

  if (has_odd_prime) {
    return excluded_or_undecided(
        d,
        "odd-prime torsion in the middle homology forces a nonzero triple "
        "product",
        {CoeffRing::prime_field(smallest_odd)}, opts);
  }

  if (!mid_primes.empty()) {
    // only 2-torsion in the middle
    const CoeffRing f2 = CoeffRing::prime_field(2);
    int k = 0;
    bool shape = m % 2 == 1;
    if (shape) {
      k = (m - 1) / 2;
      for (int i = 1; i < m && shape; ++i) {
        if (p.free_ranks[i] != 0) shape = false;
        if (i != k && !p.torsion[i].empty()) shape = false;
      }
      if (p.torsion[k].empty()) shape = false;
    }
    if (shape) {
      auto fit = d.rings.find(f2);
      if (fit == d.rings.end())
        throw ComputeError("the 2-torsion analysis needs the F_2 presentation");
      if (auto degs = two_generator_exterior(fit->second);
          degs && *degs == std::make_pair(k, k + 1)) {
        Verdict v;
        v.outcome = Alt::Alternative3;
        v.k = k;
        v.tc_floor = 3;
        v.reason = "mod-2 cohomology is exterior on degrees " +
                   std::to_string(k) + " and " + std::to_string(k + 1) +
                   " with both squares zero";
        return finish_admissible(std::move(v), d, opts);
      }
    }
    return excluded_or_undecided(
        d, "2-torsion middle homology without the double-degree exterior form",
        {f2}, opts);
  }

  // No middle homology but not sphere-like: cannot happen for a valid
  // orientable profile, so treat it as undecidable rather than guessing.
  return excluded_or_undecided(d, "inconsistent middle homology", {}, opts);
}

}  // namespace tc
