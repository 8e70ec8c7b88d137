#include "doctest.h"

#include <random>

#include "tc/catalog.hpp"
#include "tc/ringfile.hpp"

using namespace tc;

namespace {

const CoeffRing Z = CoeffRing::integers();
const CoeffRing Q = CoeffRing::rationals();
const CoeffRing F2 = CoeffRing::prime_field(2);

void bad_ring(const std::string& text, int line, const std::string& what) {
  try {
    parse_ring_text(text);
    FAIL("accepted: " << text);
  } catch (const ParseError& e) {
    CHECK(e.line() == line);
    const std::string msg = e.what();
    CHECK_MESSAGE(msg.find(what) != std::string::npos, msg);
  }
}

void bad_manifold(const std::string& text, int line, const std::string& what) {
  try {
    parse_manifold_text(text);
    FAIL("accepted: " << text);
  } catch (const ParseError& e) {
    CHECK(e.line() == line);
    const std::string msg = e.what();
    CHECK_MESSAGE(msg.find(what) != std::string::npos, msg);
  }
}

}  // namespace

TEST_CASE("a small file parses to the expected ring") {
  const std::string text =
      "# S1 x S2, by hand\n"
      "ring demo\n"
      "coeff Z\n"
      "dim 3\n"
      "\n"
      "basis u:1 v:2 g:3\n"
      "mul u*v = g\n"
      "mul u*u = 0   # forced anyway\n";
  RingPtr r = parse_ring_text(text);
  CHECK(r->name() == "demo");
  CHECK(r->coeff() == Z);
  CHECK(r->size() == 4);
  REQUIRE(r->formal_dim());
  CHECK(*r->formal_dim() == 3);
  CHECK(r->label(2) == "v");
  CHECK(Element::basis(r, 1) * Element::basis(r, 2) == Element::basis(r, 3));
  CHECK((Element::basis(r, 1) * Element::basis(r, 1)).is_zero());
  // v*u picks up no sign (deg 1 * deg 2)
  CHECK(Element::basis(r, 2) * Element::basis(r, 1) == Element::basis(r, 3));
}

TEST_CASE("catalog presentations survive the round trip byte for byte") {
  for (const auto& e : catalog_entries()) {
    for (const auto& [coeff, ring] : e.data.rings) {
      const std::string s = serialize_ring(ring);
      RingPtr back = parse_ring_text(s);
      CHECK(back->coeff() == coeff);
      CHECK(back->size() == ring->size());
      CHECK(serialize_ring(back) == s);
    }
    const std::string s = serialize_manifold(e.data);
    ManifoldData back = parse_manifold_text(s);
    CHECK(serialize_manifold(back) == s);
    CHECK_NOTHROW(validate_manifold_data(back));
  }
}

TEST_CASE("fuzzed presentations survive the round trip") {
  std::mt19937 rng(20260822u);
  const std::vector<CoeffRing> coeffs{Z, Q, F2, CoeffRing::prime_field(3),
                                      CoeffRing::prime_field(5)};
  const int odd[4] = {1, 3, 5, 7};
  for (int iter = 0; iter < 25; ++iter) {
    const CoeffRing& coeff = coeffs[rng() % coeffs.size()];
    std::vector<int> degs;
    const int g = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < g; ++t) degs.push_back(odd[rng() % 4]);
    RingPtr r = exterior_algebra(coeff, degs);
    const std::string s = serialize_ring(r);
    RingPtr back = parse_ring_text(s);
    CHECK(serialize_ring(back) == s);

    RingPtr sp = sphere_ring(coeff, 1 + static_cast<int>(rng() % 8));
    const std::string ss = serialize_ring(sp);
    CHECK(serialize_ring(parse_ring_text(ss)) == ss);
  }
  for (int iter = 0; iter < 6; ++iter) {
    CatalogEntry e = sphere_entry(1 + static_cast<int>(rng() % 9));
    const std::string s = serialize_manifold(e.data);
    CHECK(serialize_manifold(parse_manifold_text(s)) == s);
  }
}

TEST_CASE("rational coefficients round trip over Q") {
  const std::string text =
      "ring halves\n"
      "coeff Q\n"
      "dim 2\n"
      "basis u:1 v:1 g:2\n"
      "mul u*v = 1/2*g\n";
  RingPtr r = parse_ring_text(text);
  const Element uv = Element::basis(r, 1) * Element::basis(r, 2);
  CHECK(uv.coords().at(3) == Scalar::of(Q, Rat(1) / Rat(2)));
  // sign rule fills in v*u
  const Element vu = Element::basis(r, 2) * Element::basis(r, 1);
  CHECK(vu == -uv);
  const std::string s = serialize_ring(r);
  CHECK(s.find("1/2*g") != std::string::npos);
  CHECK(serialize_ring(parse_ring_text(s)) == s);
}

TEST_CASE("ring grammar errors carry their line") {
  bad_ring("", 1, "empty ring file");
  bad_ring("coeff Z\n", 1, "expected 'ring <name>'");
  bad_ring("ring a\nring b\n", 2, "duplicate ring header");
  bad_ring("ring a\n# fine\nfrobnicate 3\n", 3, "unknown directive");
  bad_ring("ring a\ncoeff F_6\n", 2, "prime");
  bad_ring("ring a\ncoeff Z Q\n", 2, "usage: coeff");
  bad_ring("ring a\ncoeff Z\ncoeff Q\n", 3, "duplicate coeff");
  bad_ring("ring a\ndim x\n", 2, "expected an integer");
  bad_ring("ring a\ndim 2\ndim 3\n", 3, "duplicate dim");
  bad_ring("ring a\ncoeff Z\nbasis\n", 3, "basis line without items");
  bad_ring("ring a\ncoeff Z\nbasis u\n", 3, "not label:degree");
  bad_ring("ring a\ncoeff Z\nbasis u:\n", 3, "not label:degree");
  bad_ring("ring a\ncoeff Z\nbasis 42:1\n", 3, "bad label");
  bad_ring("ring a\ncoeff Z\nbasis u:0\n", 3, "degree 0 but is not the unit");
  bad_ring("ring a\ncoeff Z\nbasis u:1 1:0\n", 3, "unit must be the first");
  bad_ring("ring a\ncoeff Z\nbasis 1:2\n", 3, "unit must have degree 0");
  bad_ring("ring a\ncoeff Z\nbasis u:1\nbasis u:1\n", 1, "duplicate label");
  bad_ring("ring a\ncoeff Z\nbasis u:1\nmul uv = 0\n", 4, "is not a*b");
  bad_ring("ring a\ncoeff Z\nbasis u:1\nmul u*u 0\n", 4, "usage: mul");
  bad_ring("ring a\ncoeff Z\nbasis u:1\nmul u*w = 0\n", 4, "unknown label 'w'");
  bad_ring("ring a\ncoeff Z\nbasis u:1 g:2\nmul u*u = w\n", 4,
           "unknown label 'w'");
  bad_ring("ring a\ncoeff Z\nbasis u:1 g:2\nmul u*u = g +\n", 4, "dangling");
  bad_ring("ring a\ncoeff Z\nbasis u:1 g:2\nmul u*u = g g\n", 4,
           "expected '+'");
  bad_ring("ring a\ncoeff Q\nbasis u:1 g:2\nmul u*u = 1/0*g\n", 4,
           "zero denominator");
  bad_ring("ring a\ncoeff Z\nbasis u:1 g:2\nmul u*u = 0\nmul u*u = g\n", 5,
           "duplicate product u*u");
  bad_ring("ring a\ndim 2\n", 1, "has no coeff");
}

TEST_CASE("manifold grammar errors carry their line") {
  bad_manifold("", 1, "empty manifold file");
  bad_manifold("ring a\n", 1, "expected 'manifold <name>'");
  bad_manifold("manifold M\ndim 2\norientable maybe\n", 3,
               "usage: orientable");
  bad_manifold("manifold M\norientable true\norientable true\n", 3,
               "duplicate orientable");
  bad_manifold("manifold M\npi1rank\n", 2, "usage: pi1rank");
  bad_manifold("manifold M\ndim 2\ndim 2\n", 3, "duplicate dim");
  bad_manifold("manifold M\norientable true\n", 1, "without dim");
  bad_manifold("manifold M\ndim 2\nhomology 1\n", 3, "needs <i>:<rank>");
  bad_manifold("manifold M\ndim 2\nhomology 1:1,1\n", 3,
               "torsion order must be at least 2");
  bad_manifold("manifold M\ndim 2\nhomology 1:1\nhomology 1:2\n", 4,
               "duplicate homology degree 1");
  bad_manifold("manifold M\ndim 2\nhomology 5:1\n", 3,
               "degree above the dimension");
  bad_manifold("manifold M\ndim 2\nbogus 1\n", 3, "unknown directive");
  bad_manifold(
      "manifold M\ndim 1\nhomology 0:1\nhomology 1:1\n"
      "ring a\ncoeff Z\nbasis u:1\nmul u*u = 0\n"
      "ring b\ncoeff Z\nbasis u:1\nmul u*u = 0\n",
      9, "duplicate presentation over Z");
}

TEST_CASE("semantic violations surface as ring errors") {
  // seeded sign slip: both orders positive on odd generators
  const std::string sign =
      "ring bad\ncoeff Z\ndim 2\nbasis u:1 v:1 g:2\n"
      "mul u*v = g\nmul v*u = g\n";
  try {
    parse_ring_text(sign);
    FAIL("sign slip accepted");
  } catch (const RingError& e) {
    CHECK(e.kind() == ValidationKind::Commutativity);
    CHECK(std::string(e.what()).find("break the sign rule") !=
          std::string::npos);
  }

  const std::string oddsq =
      "ring bad\ncoeff Q\ndim 2\nbasis u:1 g:2\nmul u*u = g\n";
  try {
    parse_ring_text(oddsq);
    FAIL("odd square accepted");
  } catch (const RingError& e) {
    CHECK(e.kind() == ValidationKind::OddSquare);
  }
  // same table is fine in characteristic 2
  CHECK_NOTHROW(parse_ring_text(
      "ring ok\ncoeff F_2\ndim 2\nbasis u:1 g:2\nmul u*u = g\n"));

  const std::string degree =
      "ring bad\ncoeff Z\ndim 3\nbasis u:1 v:1 w:3\nmul u*v = w\n";
  try {
    parse_ring_text(degree);
    FAIL("degree slip accepted");
  } catch (const RingError& e) {
    CHECK(e.kind() == ValidationKind::DegreeMismatch);
  }
}
