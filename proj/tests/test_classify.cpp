#include "doctest.h"

#include "tc/catalog.hpp"
#include "tc/classify.hpp"

using namespace tc;

namespace {

const CoeffRing Z = CoeffRing::integers();
const CoeffRing Q = CoeffRing::rationals();
const CoeffRing F2 = CoeffRing::prime_field(2);
const CoeffRing F3 = CoeffRing::prime_field(3);

HomologyProfile profile(std::vector<int> ranks) {
  HomologyProfile p;
  p.dimension = static_cast<int>(ranks.size()) - 1;
  p.free_ranks = std::move(ranks);
  p.torsion.resize(p.free_ranks.size());
  return p;
}

ManifoldData sphere_data(int k) {
  ManifoldData d;
  d.name = "S" + std::to_string(k);
  d.profile = profile([&] {
    std::vector<int> r(k + 1, 0);
    r[0] = r[k] = 1;
    return r;
  }());
  d.pi1_free_rank = k == 1 ? 1 : 0;
  d.rings[Z] = sphere_ring(Z, k);
  return d;
}

ManifoldData s2xs2_data() {
  RawTable raw;
  raw[{1, 2}] = {{3, Scalar::of(Z, 1)}};
  ManifoldData d;
  d.name = "S2xS2";
  d.profile = profile({1, 0, 2, 0, 1});
  d.rings[Z] = make_ring("S2xS2", Z,
                         {{"1", 0}, {"u", 2}, {"v", 2}, {"g", 4}}, raw, 4);
  return d;
}

}  // namespace

TEST_CASE("manifold data validation") {
  ManifoldData good = sphere_data(3);
  CHECK_NOTHROW(validate_manifold_data(good));

  auto expect_reject = [](ManifoldData d, const std::string& fragment) {
    try {
      validate_manifold_data(d);
      FAIL("accepted bad data: " << fragment);
    } catch (const ComputeError& e) {
      CHECK_MESSAGE(std::string(e.what()).find(fragment) != std::string::npos,
                    e.what());
    }
  };

  {
    ManifoldData d = good;
    d.name = "";
    expect_reject(d, "name");
  }
  {
    ManifoldData d = good;
    d.name = "bad name";
    expect_reject(d, "reserved");
  }
  {
    ManifoldData d = good;
    d.profile.free_ranks[0] = 2;
    expect_reject(d, "H_0");
  }
  {
    ManifoldData d = good;
    d.profile.torsion.pop_back();
    expect_reject(d, "dimension+1");
  }
  {
    ManifoldData d = good;
    d.profile.torsion[1] = {Int(12)};  // 12 = 2^2 * 3
    expect_reject(d, "prime power");
  }
  {
    ManifoldData d = good;
    d.pi1_free_rank = 2;
    expect_reject(d, "pi1");
  }
  {
    ManifoldData d = good;
    d.profile.free_ranks[3] = 0;  // top class gone
    expect_reject(d, "H_m = Z");
  }
  {
    ManifoldData d = good;
    d.profile.free_ranks[1] = 1;  // asymmetric ranks
    d.pi1_free_rank = 1;
    expect_reject(d, "duality");
  }
  {
    ManifoldData d = good;
    d.rings.clear();
    expect_reject(d, "integral presentation");
  }
  {
    ManifoldData d = good;
    d.rings[Q] = sphere_ring(Z, 3);  // stored under the wrong key
    expect_reject(d, "wrong coefficient key");
  }
  {
    ManifoldData d = good;
    d.rings[Z] = sphere_ring(Z, 4);  // wrong dimension
    expect_reject(d, "formal dimension");
  }
  {
    ManifoldData d = good;
    d.rings[Z] = exterior_algebra(Z, {3, 5});  // profile claims rank 2
    d.profile = profile({1, 0, 0, 2, 0, 2, 0, 0, 1});
    expect_reject(d, "disagrees at degree");
  }

  // torsion obligations: an F_p ring for each torsion prime, no integral
  // presentation at all, and universal-coefficient dimensions
  {
    ManifoldData d;
    d.name = "RP3ish";
    d.profile = profile({1, 0, 0, 1});
    d.profile.torsion[1] = {Int(2)};
    expect_reject(d, "needs an F_2");
  }
  {
    ManifoldData d;
    d.name = "RP3ish";
    d.profile = profile({1, 0, 0, 1});
    d.profile.torsion[1] = {Int(2)};
    d.rings[Z] = make_ring("x", Z, {{"1", 0}, {"g", 3}}, {}, 3);
    expect_reject(d, "has torsion");
  }
  {
    ManifoldData d;
    d.name = "RP3ish";
    d.profile = profile({1, 0, 0, 1});
    d.profile.torsion[1] = {Int(2)};
    d.rings[F2] = base_change(sphere_ring(Z, 3), F2);  // misses degrees 1, 2
    expect_reject(d, "universal coefficients");
  }

  // non-orientable manifolds must not claim a fundamental class
  {
    ManifoldData d = good;
    d.orientable = false;
    expect_reject(d, "H_m = 0");
  }
}

TEST_CASE("pairing matrices and duality reports") {
  RingPtr t2q = base_change(exterior_algebra(Z, {1, 1}), Q);
  auto m1 = pairing_matrix(t2q, 1);
  REQUIRE(m1.size() == 2);
  CHECK(m1[0][0] == Scalar::zero(Q));
  CHECK(m1[0][1] == Scalar::one(Q));
  CHECK(m1[1][0] == -Scalar::one(Q));
  CHECK(m1[1][1] == Scalar::zero(Q));

  PDReport rep = check_poincare_duality(t2q);
  CHECK(rep.ok);
  REQUIRE(rep.degrees.size() == 3);
  CHECK(rep.degrees[1].dim_k == 2);
  CHECK(rep.degrees[1].rank == 2);

  // a ring whose middle pairing is degenerate
  RawTable raw;
  raw[{1, 3}] = {{5, Scalar::of(Q, 1)}};  // a*b = g, everything else zero
  RingPtr bad = make_ring(
      "bad", Q,
      {{"1", 0}, {"a", 1}, {"c", 1}, {"b", 2}, {"d", 2}, {"g", 3}}, raw, 3);
  PDReport rb = check_poincare_duality(bad);
  CHECK(!rb.ok);
  CHECK(rb.degrees[0].ok);
  CHECK(!rb.degrees[1].ok);
  CHECK(rb.degrees[1].rank == 1);
  CHECK(rb.degrees[1].dim_k == 2);

  CHECK_THROWS_AS(check_poincare_duality(exterior_algebra(Z, {1, 1})),
                  ComputeError);  // wants a field
  CHECK_THROWS_AS(
      check_poincare_duality(make_ring("nodim", Q, {{"1", 0}}, {})),
      ComputeError);  // wants a formal dimension
  // two top classes leave the pairing target ambiguous
  RingPtr twotop =
      make_ring("tt", Q, {{"1", 0}, {"g", 2}, {"h", 2}}, {}, 2);
  CHECK_THROWS_AS(pairing_matrix(twotop, 0), ComputeError);
}

TEST_CASE("spheres come out as the first alternative") {
  for (int k : {1, 2, 3, 6}) {
    Verdict v = classify_low_tc(sphere_data(k));
    CHECK(v.outcome == Alt::Alternative1);
    CHECK(v.k == k);
    CHECK(verdict_label(v) == "Alternative1(" + std::to_string(k) + ")");
    CHECK(v.tc_floor == (k % 2 == 0 ? 3 : 2));
  }
}

TEST_CASE("exterior pairs come out as the second alternative") {
  {
    ManifoldData d;
    d.name = "S1xS5";
    d.profile = profile({1, 1, 0, 0, 0, 1, 1});
    d.pi1_free_rank = 1;
    d.rings[Z] = exterior_algebra(Z, {1, 5});
    Verdict v = classify_low_tc(d);
    CHECK(verdict_label(v) == "Alternative2(1,5)");
    CHECK(v.tc_floor == 3);
  }
  {
    ManifoldData d;
    d.name = "S3xS5";
    d.profile = profile({1, 0, 0, 1, 0, 1, 0, 0, 1});
    d.rings[Z] = exterior_algebra(Z, {3, 5});
    Verdict v = classify_low_tc(d);
    CHECK(verdict_label(v) == "Alternative2(3,5)");
  }
  {
    // equal degrees: betti number 2 in the middle
    ManifoldData d;
    d.name = "S3xS3";
    d.profile = profile({1, 0, 0, 2, 0, 0, 1});
    d.rings[Z] = exterior_algebra(Z, {3, 3});
    Verdict v = classify_low_tc(d);
    CHECK(verdict_label(v) == "Alternative2(3,3)");
  }
}

TEST_CASE("the Wu-type double-degree form is the third alternative") {
  const CatalogEntry* wu = find_entry("Wu");
  REQUIRE(wu);
  Verdict v = classify_low_tc(wu->data);
  CHECK(verdict_label(v) == "Alternative3(2)");
  CHECK(v.k == 2);
  CHECK(v.tc_floor == 3);
}

TEST_CASE("certificates exclude low topological complexity") {
  {
    // rank-2 fundamental group: the connected sum carries a 4-fold product
    const CatalogEntry* cs = find_entry("ConnSum4");
    REQUIRE(cs);
    Verdict v = classify_low_tc(cs->data);
    CHECK(v.outcome == Alt::Excluded);
    CHECK(verdict_label(v) == "Excluded");
    CHECK(v.tc_floor == 5);
    REQUIRE(v.witness);
    CHECK(v.witness->factor_indices.size() == 4);
    REQUIRE(v.witness_coeff);
    CHECK(*v.witness_coeff == Z);
    // the certificate is the four hats pushed into the top class
    RingPtr r = cs->data.rings.at(Z);
    SquareRing sq(r);
    const int g = *r->index_of("g");
    CHECK(v.witness->product.coords() ==
          sq.tensor(Element::basis(r, g), Element::basis(r, g))
              .scaled(Scalar::of(Z, -2))
              .coords());
  }
  {
    // simply connected with an even intersection pattern: a triple product
    ManifoldData d = s2xs2_data();
    Verdict v = classify_low_tc(d);
    CHECK(v.outcome == Alt::Excluded);
    CHECK(v.tc_floor == 4);
    REQUIRE(v.witness);
    CHECK(v.witness->factors ==
          std::vector<std::string>{"hat(u)", "hat(u)", "hat(v)"});
    RingPtr r = d.rings.at(Z);
    SquareRing sq(r);
    Element u = Element::basis(r, 1), g = Element::basis(r, 3);
    CHECK(v.witness->product.coords() ==
          (sq.tensor(u, g) - sq.tensor(g, u))
              .scaled(Scalar::of(Z, 2))
              .coords());
  }
  {
    // odd-prime middle torsion: lens-space pattern over F_3
    RawTable raw;
    raw[{1, 2}] = {{3, Scalar::of(F3, 1)}};
    ManifoldData d;
    d.name = "Lens3";
    d.profile = profile({1, 0, 0, 1});
    d.profile.torsion[1] = {Int(3)};
    d.rings[F3] = make_ring("Lens3", F3,
                            {{"1", 0}, {"a", 1}, {"b", 2}, {"t", 3}}, raw, 3);
    Verdict v = classify_low_tc(d);
    CHECK(v.outcome == Alt::Excluded);
    CHECK(v.tc_floor == 4);
    REQUIRE(v.witness);
    CHECK(v.witness->factors ==
          std::vector<std::string>{"hat(a)", "hat(b)", "hat(b)"});
    CHECK(*v.witness_coeff == F3);
  }
  {
    // 2-torsion in the middle but a truncated-polynomial ring, not the
    // double-degree exterior form
    RawTable raw;
    raw[{1, 1}] = {{2, Scalar::of(F2, 1)}};
    raw[{1, 2}] = {{3, Scalar::of(F2, 1)}};
    ManifoldData d;
    d.name = "RP3ish";
    d.profile = profile({1, 0, 0, 1});
    d.profile.torsion[1] = {Int(2)};
    d.rings[F2] = make_ring("RP3", F2,
                            {{"1", 0}, {"x1", 1}, {"x2", 2}, {"x3", 3}}, raw,
                            3);
    Verdict v = classify_low_tc(d);
    CHECK(v.outcome == Alt::Excluded);
    CHECK(v.tc_floor == 4);
    REQUIRE(v.witness);
    CHECK(v.witness->factors ==
          std::vector<std::string>{"hat(x1)", "hat(x1)", "hat(x1)"});
  }
}

TEST_CASE("no certificate means undecided, not admissible") {
  // right homology for an exterior pair, wrong ring: the pairing hits 2
  RawTable raw;
  raw[{1, 2}] = {{3, Scalar::of(Z, 2)}};
  ManifoldData d;
  d.name = "Dbl";
  d.profile = profile({1, 1, 0, 1, 1});
  d.pi1_free_rank = 1;
  d.rings[Z] = make_ring("Dbl", Z, {{"1", 0}, {"u", 1}, {"v", 3}, {"g", 4}},
                         raw, 4);
  Verdict v = classify_low_tc(d);
  CHECK(v.outcome == Alt::Undecided);
  CHECK(verdict_label(v) == "Undecided");
  CHECK(v.tc_floor == 3);
  CHECK(!v.witness);
  CHECK(v.reason.find("no triple zero-divisor certificate") !=
        std::string::npos);

  // all products zero in odd/even degrees that cannot pair exteriorly
  RingPtr flat = make_ring("Flat", Z,
                           {{"1", 0}, {"a", 2}, {"b", 3}, {"g", 5}}, {}, 5);
  ManifoldData d2;
  d2.name = "Flat";
  d2.profile = profile({1, 0, 1, 1, 0, 1});
  d2.rings[Z] = flat;
  Verdict v2 = classify_low_tc(d2);
  CHECK(v2.outcome == Alt::Undecided);
  CHECK(v2.tc_floor == 3);
}

TEST_CASE("outside the classification's scope") {
  // no closed orientable surface but S^2 fits the alternatives
  ManifoldData t2;
  t2.name = "T2";
  t2.profile = profile({1, 2, 1});
  t2.pi1_free_rank = 2;
  t2.rings[Z] = exterior_algebra(Z, {1, 1});
  CHECK_THROWS_AS(classify_low_tc(t2), ComputeError);

  // non-orientable input is refused outright
  ManifoldData kb;
  kb.name = "K3gen";
  kb.orientable = false;
  kb.profile = profile({1, 1, 0, 0});
  kb.profile.torsion[2] = {Int(2)};
  kb.pi1_free_rank = 1;
  kb.rings[F2] = exterior_algebra(F2, {1, 2});
  CHECK_NOTHROW(validate_manifold_data(kb));
  CHECK_THROWS_AS(classify_low_tc(kb), ComputeError);
}
