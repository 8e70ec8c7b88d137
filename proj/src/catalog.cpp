#include "tc/catalog.hpp"

#include <algorithm>

#include "tc/errors.hpp"

namespace tc {

namespace {

const CoeffRing kZ = CoeffRing::integers();
const CoeffRing kQ = CoeffRing::rationals();
const CoeffRing kF2 = CoeffRing::prime_field(2);

HomologyProfile profile_of(int m, const std::vector<std::pair<int, int>>& ranks,
                           const std::vector<std::pair<int, Int>>& torsion = {}) {
  HomologyProfile p;
  p.dimension = m;
  p.free_ranks.assign(m + 1, 0);
  p.torsion.assign(m + 1, {});
  for (auto [deg, r] : ranks) p.free_ranks[deg] = r;
  for (const auto& [deg, q] : torsion) p.torsion[deg].push_back(q);
  return p;
}

}  // namespace

CatalogEntry sphere_entry(int k) {
  if (k < 1) throw ComputeError("sphere dimension must be positive");
  CatalogEntry e;
  e.data.name = "S" + std::to_string(k);
  e.data.orientable = true;
  e.data.pi1_free_rank = k == 1 ? 1 : 0;
  e.data.profile = profile_of(k, {{0, 1}, {k, 1}});
  e.data.rings[kZ] = sphere_ring(kZ, k, e.data.name);
  const bool odd = k % 2 != 0;
  e.known_tc = odd ? 2 : 3;
  e.known_cat = 2;
  e.expected_zcl[kZ] = odd ? 2 : 3;
  e.expected_zcl[kQ] = odd ? 2 : 3;
  e.expected_zcl[kF2] = 2;
  e.expected_verdict = ExpectedVerdict{Alt::Alternative1, k, 0, odd ? 2 : 3, 0};
  e.source_note = odd ? "TC(S^odd) = 2, cat = 2 (Farber)."
                      : "TC(S^even) = 3, cat = 2 (Farber); the square of the "
                        "diagonal zero-divisor is -2(x(x)x), so the mod-2 "
                        "bound drops to 2.";
  return e;
}

CatalogEntry circle_times_sphere_entry(int k) {
  if (k < 3 || k % 2 == 0)
    throw ComputeError("circle_times_sphere_entry wants odd k >= 3");
  CatalogEntry e;
  const int m = k + 1;
  e.data.name = "S1xS" + std::to_string(k);
  e.data.orientable = true;
  e.data.pi1_free_rank = 1;
  e.data.profile = profile_of(m, {{0, 1}, {1, 1}, {k, 1}, {m, 1}});
  e.data.rings[kZ] = exterior_algebra(kZ, {1, k}, e.data.name);
  e.known_tc = 3;
  e.known_cat = 3;
  e.expected_zcl[kZ] = 3;
  e.expected_zcl[kQ] = 3;
  e.expected_verdict = ExpectedVerdict{Alt::Alternative2, 1, k, 3, 0};
  e.source_note =
      "Product of odd spheres: TC = 3 (Farber), cat = 3 (cup length).";
  return e;
}

CatalogEntry product_of_spheres_entry(int k, int l) {
  if (k < 1 || l < k || k % 2 == 0 || l % 2 == 0)
    throw ComputeError("product_of_spheres_entry wants odd k <= l");
  CatalogEntry e;
  const int m = k + l;
  e.data.name = "S" + std::to_string(k) + "xS" + std::to_string(l);
  e.data.orientable = true;
  e.data.pi1_free_rank = 0;
  e.data.profile =
      k == l ? profile_of(m, {{0, 1}, {k, 2}, {m, 1}})
             : profile_of(m, {{0, 1}, {k, 1}, {l, 1}, {m, 1}});
  e.data.rings[kZ] = exterior_algebra(kZ, {k, l}, e.data.name);
  e.known_tc = 3;
  e.known_cat = 3;
  e.expected_zcl[kZ] = 3;
  e.expected_zcl[kQ] = 3;
  e.expected_verdict = ExpectedVerdict{Alt::Alternative2, k, l, 3, 0};
  e.source_note =
      "Product of odd spheres: TC = 3 (Farber), cat = 3 (cup length).";
  return e;
}

namespace {

CatalogEntry torus_entry() {
  CatalogEntry e;
  e.data.name = "T2";
  e.data.orientable = true;
  e.data.pi1_free_rank = 2;
  e.data.profile = profile_of(2, {{0, 1}, {1, 2}, {2, 1}});
  e.data.rings[kZ] = exterior_algebra(kZ, {1, 1}, "T2");
  e.known_tc = 3;
  e.known_cat = 3;
  e.expected_zcl[kZ] = 3;
  e.expected_zcl[kQ] = 3;
  e.expected_zcl[kF2] = 3;
  e.source_note =
      "TC(T^2) = 3 (Farber), cat = 3 (cup length).  pi_1 = Z x Z is free "
      "abelian, not free, so the rank >= 2 exclusion does not apply and no "
      "verdict is stored; the dimension-2 classification admits only S^2.";
  return e;
}

CatalogEntry lie_entry(const std::string& name, int k, int l, int known_tc,
                       int known_cat, const std::string& note) {
  CatalogEntry e;
  const int m = k + l;
  e.data.name = name;
  e.data.orientable = true;
  e.data.pi1_free_rank = 0;
  e.data.profile = profile_of(m, {{0, 1}, {k, 1}, {l, 1}, {m, 1}});
  e.data.rings[kZ] = exterior_algebra(kZ, {k, l}, name);
  if (known_tc > 0) e.known_tc = known_tc;
  if (known_cat > 0) e.known_cat = known_cat;
  e.expected_zcl[kZ] = 3;
  e.expected_zcl[kQ] = 3;
  e.expected_verdict = ExpectedVerdict{Alt::Alternative2, k, l, 3, 0};
  e.source_note = note;
  return e;
}

CatalogEntry wu_entry() {
  CatalogEntry e;
  e.data.name = "Wu";
  e.data.orientable = true;
  e.data.pi1_free_rank = 0;
  e.data.profile = profile_of(5, {{0, 1}, {5, 1}}, {{2, 2}});
  e.data.rings[kF2] = exterior_algebra(kF2, {2, 3}, "Wu");
  e.known_cat = 3;
  e.expected_zcl[kF2] = 3;
  e.expected_verdict = ExpectedVerdict{Alt::Alternative3, 2, 0, 3, 0};
  e.source_note =
      "Wu manifold SU(3)/SO(3): H^*(-; F_2) = Ext(x_2, x_3) with x_2^2 = 0; "
      "cat = 3.";
  return e;
}

CatalogEntry klein3_entry() {
  CatalogEntry e;
  e.data.name = "KleinGen3";
  e.data.orientable = false;
  e.data.pi1_free_rank = 1;
  e.data.profile = profile_of(3, {{0, 1}, {1, 1}}, {{2, 2}});
  e.data.rings[kF2] = exterior_algebra(kF2, {1, 2}, "KleinGen3");
  e.known_cat = 3;
  e.expected_zcl[kF2] = 3;
  e.source_note =
      "Nonorientable S^2-bundle over S^1 (3-dimensional generalized Klein "
      "bottle): outside the orientable classification, so only bounds are "
      "stored; cat = 3.";
  return e;
}

CatalogEntry connsum_entry() {
  CatalogEntry e;
  e.data.name = "ConnSum4";
  e.data.orientable = true;
  e.data.pi1_free_rank = 2;
  e.data.profile = profile_of(4, {{0, 1}, {1, 2}, {3, 2}, {4, 1}});
  RingPtr summand = exterior_algebra(kZ, {1, 3});
  e.data.rings[kZ] = connected_sum_ring(summand, summand, 4, "ConnSum4");
  e.expected_zcl[kZ] = 5;
  e.expected_zcl[kQ] = 5;
  e.expected_zcl[kF2] = 4;
  e.expected_verdict = ExpectedVerdict{Alt::Excluded, 0, 0, 5, 4};
  e.source_note =
      "(S^1 x S^3) # (S^1 x S^3): pi_1 free of rank 2; a 4-fold product of "
      "degree-1 and degree-3 zero-divisors equals 2(g(x)g), so TC >= 5 away "
      "from characteristic 2 and TC >= 4 mod 2.";
  return e;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;
  for (int k = 1; k <= 7; ++k) out.push_back(sphere_entry(k));
  out.push_back(circle_times_sphere_entry(3));
  out.push_back(circle_times_sphere_entry(5));
  out.push_back(product_of_spheres_entry(3, 3));
  out.push_back(product_of_spheres_entry(3, 5));
  out.push_back(torus_entry());
  out.push_back(lie_entry("SU3", 3, 5, 3, 3,
                          "SU(3): cat = 3 (Singhof), TC = 3; cohomology "
                          "Ext(x_3, x_5)."));
  out.push_back(lie_entry("Sp2", 3, 7, 4, 4,
                          "Sp(2): cat = 4 (Schweitzer), so TC >= 4 while the "
                          "ring data stays admissible -- the alternatives are "
                          "necessary, not sufficient.  The Hilton-Roitberg "
                          "manifolds (principal S^3-bundles over S^7) share "
                          "this ring."));
  out.push_back(lie_entry("V2C3", 3, 5, 3, 3,
                          "Complex Stiefel V_2(C^3) = SU(3); cat = 3."));
  out.push_back(lie_entry("V2C4", 5, 7, 0, 3,
                          "Complex Stiefel V_2(C^4): Ext(x_5, x_7), cat = 3."));
  out.push_back(lie_entry(
      "V2H3", 7, 11, 0, 3,
      "Quaternionic Stiefel V_2(H^3): Ext(x_(4n-5), x_(4n-1)) at n = 3, so "
      "degrees 7 and 11 (sometimes printed with degree 2n-5, which is "
      "dimensionally inconsistent); cat = 3."));
  out.push_back(wu_entry());
  out.push_back(klein3_entry());
  out.push_back(connsum_entry());
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry* find_entry(const std::string& name) {
  for (const auto& e : catalog_entries())
    if (e.data.name == name) return &e;
  return nullptr;
}

RingPtr catalog_ring(const CatalogEntry& e, const CoeffRing& coeff) {
  auto it = e.data.rings.find(coeff);
  if (it != e.data.rings.end()) return it->second;
  auto z = e.data.rings.find(kZ);
  if (z != e.data.rings.end() && coeff.is_field())
    return base_change(z->second, coeff);
  throw ComputeError("no presentation of " + e.data.name + " over " +
                     coeff.to_string());
}

namespace {

Element remultiply(const SquareRing& sq, const std::vector<int>& factor_idx) {
  const auto gens = sq.zero_divisor_generators();
  Element prod = Element::unit(sq.product());
  for (int g : factor_idx) {
    if (g < 0 || g >= static_cast<int>(gens.size()))
      throw ComputeError("witness factor index out of range");
    prod = prod * gens[g];
  }
  return prod;
}

}  // namespace

CatalogCheckResult catalog_check(const SearchOptions& opts) {
  return catalog_check(catalog_entries(), opts);
}

CatalogCheckResult catalog_check(const std::vector<CatalogEntry>& entries,
                                 const SearchOptions& opts) {
  CatalogCheckResult res;
  for (const CatalogEntry& e : entries) {
    CatalogCheckLine line;
    line.entry = e.data.name;
    std::vector<std::string> fails;
    std::string summary;
    auto fail = [&](const std::string& s) { fails.push_back(s); };

    try {
      validate_manifold_data(e.data);

      for (const auto& [coeff, want] : e.expected_zcl) {
        RingPtr r = catalog_ring(e, coeff);
        SquareRing sq(r, opts.limits, opts.policy);
        NilResult nr = zero_divisor_nilpotency(sq, opts);
        if (nr.nil != want)
          fail("zcl over " + coeff.to_string() + " = " +
               std::to_string(nr.nil) + ", expected " + std::to_string(want));
        else
          summary += (summary.empty() ? "" : " ") + std::string("zcl(") +
                     coeff.to_string() + ")=" + std::to_string(nr.nil);
        if (coeff.is_field()) {
          const int oracle = nilpotency_oracle(sq);
          if (oracle != nr.nil)
            fail("rank oracle over " + coeff.to_string() + " = " +
                 std::to_string(oracle) + " disagrees with the search");
        }
        if (nr.nil >= 2) {
          if (!nr.witness) {
            fail("missing witness over " + coeff.to_string());
          } else {
            const Element again = remultiply(sq, nr.witness->factor_indices);
            if (again.is_zero() || again != nr.witness->product)
              fail("witness does not remultiply over " + coeff.to_string());
          }
        }
        if (e.known_tc && nr.nil > *e.known_tc)
          fail("zcl exceeds the quoted TC");
        NilResult cup = cuplength_nilpotency(r, opts);
        if (e.known_cat && cup.nil > *e.known_cat)
          fail("cup-length bound exceeds the quoted cat");
      }

      // duality of every field presentation we can reach
      std::vector<CoeffRing> field_coeffs;
      for (const auto& [coeff, ring] : e.data.rings)
        if (coeff.is_field()) field_coeffs.push_back(coeff);
      if (e.data.rings.count(kZ)) field_coeffs.push_back(kQ);
      for (const CoeffRing& coeff : field_coeffs) {
        PDReport pd = check_poincare_duality(catalog_ring(e, coeff));
        if (!pd.ok) fail("duality fails over " + coeff.to_string());
      }

      if (e.expected_verdict) {
        const ExpectedVerdict& ex = *e.expected_verdict;
        Verdict v = classify_low_tc(e.data, opts);
        Verdict expect;
        expect.outcome = ex.outcome;
        expect.k = ex.k;
        expect.l = ex.l;
        if (verdict_label(v) != verdict_label(expect))
          fail("verdict " + verdict_label(v) + ", expected " +
               verdict_label(expect));
        else
          summary += (summary.empty() ? "" : " ") + std::string("verdict=") +
                     verdict_label(v);
        if (ex.tc_floor && v.tc_floor != ex.tc_floor)
          fail("tc floor " + std::to_string(v.tc_floor) + ", expected " +
               std::to_string(ex.tc_floor));
        if (ex.witness_len) {
          if (!v.witness ||
              static_cast<int>(v.witness->factor_indices.size()) !=
                  ex.witness_len)
            fail("expected a length-" + std::to_string(ex.witness_len) +
                 " certificate");
        }
        if (v.witness) {
          if (!v.witness_coeff) {
            fail("certificate without coefficients");
          } else {
            SquareRing sq(catalog_ring(e, *v.witness_coeff), opts.limits,
                          opts.policy);
            const Element again = remultiply(sq, v.witness->factor_indices);
            // the verdict's square is a distinct instance, so compare by
            // coordinates rather than Element equality
            if (again.is_zero() ||
                again.coords() != v.witness->product.coords())
              fail("verdict certificate does not remultiply");
          }
        }
        if (e.known_tc && *e.known_tc <= 3 && v.outcome == Alt::Excluded)
          fail("excluded although the quoted TC is <= 3");
        if (e.known_tc && v.tc_floor > *e.known_tc)
          fail("tc floor exceeds the quoted TC");
      }
    } catch (const std::exception& ex) {
      fail(std::string("error: ") + ex.what());
    }

    line.pass = fails.empty();
    if (line.pass) {
      line.detail = summary;
    } else {
      for (std::size_t i = 0; i < fails.size(); ++i)
        line.detail += (i ? "; " : "") + fails[i];
      res.all_pass = false;
    }
    res.lines.push_back(std::move(line));
  }
  return res;
}

}  // namespace tc
