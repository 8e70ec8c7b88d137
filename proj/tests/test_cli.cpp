#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "tc/catalog.hpp"
#include "tc/cli.hpp"
#include "tc/ringfile.hpp"

using namespace tc;

namespace {

struct CliResult {
  int code = -1;
  std::string out, err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliResult r;
  r.code = cli_run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("tctest_" + name);
  std::ofstream f(path);
  f << text;
  return path.string();
}

bool has(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

std::string t2_file() {
  const CatalogEntry* t2 = find_entry("T2");
  REQUIRE(t2);
  return temp_file("t2.ring",
                   serialize_ring(t2->data.rings.at(CoeffRing::integers())));
}

}  // namespace

TEST_CASE("bad invocations exit 2 and explain themselves") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"zcl"}).code == 2);

  CliResult missing = run({"zcl", "/no/such/file.ring"});
  CHECK(missing.code == 2);
  CHECK(has(missing.err, "cannot open"));
  CHECK(missing.out.empty());

  CliResult help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(has(help.out, "zcl"));
  CHECK(has(help.out, "catalog"));
}

TEST_CASE("validate accepts good files and points at bad lines") {
  const std::string good = temp_file("good.ring",
                                     "ring demo\ncoeff Z\ndim 3\n"
                                     "basis u:1 v:2 g:3\nmul u*v = g\n");
  CliResult ok = run({"validate", good});
  CHECK(ok.code == 0);
  CHECK(has(ok.out, "ring demo"));
  CHECK(has(ok.out, "valid true"));

  const std::string typo = temp_file("typo.ring",
                                     "ring demo\ncoeff Z\nfrobnicate 3\n");
  CliResult bad = run({"validate", typo});
  CHECK(bad.code == 2);
  CHECK(has(bad.err, "parse error: line 3"));

  const std::string sign = temp_file("sign.ring",
                                     "ring bad\ncoeff Z\ndim 2\n"
                                     "basis u:1 v:1 g:2\n"
                                     "mul u*v = g\nmul v*u = g\n");
  CliResult slip = run({"validate", sign});
  CHECK(slip.code == 2);
  CHECK(has(slip.err, "CommutativityViolation"));
}

TEST_CASE("info prints ring facts") {
  CliResult r = run({"info", t2_file()});
  CHECK(r.code == 0);
  CHECK(has(r.out, "coeff Z"));
  CHECK(has(r.out, "dim 2"));
  CHECK(has(r.out, "basis_size 4"));
  CHECK(has(r.out, "degrees 0 1 1 2"));
}

TEST_CASE("zcl and cuplength report bounds and certificates") {
  const std::string t2 = t2_file();
  CliResult z = run({"zcl", t2});
  CHECK(z.code == 0);
  CHECK(has(z.out, "zcl 3"));
  CHECK(has(z.out, "tc_lower_bound 3"));

  CliResult zw = run({"zcl", "--witness", t2});
  CHECK(zw.code == 0);
  CHECK(has(zw.out, "witness_factors hat(x1),hat(y1)"));
  CHECK(has(zw.out, "witness_product"));

  CliResult cw = run({"cuplength", "--witness", t2});
  CHECK(cw.code == 0);
  CHECK(has(cw.out, "cuplength_nil 3"));
  CHECK(has(cw.out, "cat_lower_bound 3"));
  CHECK(has(cw.out, "witness_factors x1,y1"));

  // a point has no zero-divisors at all: clean run, negative answer
  const std::string pt = temp_file("pt.ring", "ring pt\ncoeff Q\ndim 0\n");
  CliResult none = run({"zcl", "--witness", pt});
  CHECK(none.code == 1);
  CHECK(has(none.err, "no nonzero product"));
}

TEST_CASE("tsv output is stable across runs") {
  const std::string t2 = t2_file();
  CliResult a = run({"--format", "tsv", "tc-bound", t2});
  CliResult b = run({"--format", "tsv", "tc-bound", t2});
  CHECK(a.code == 0);
  CHECK(has(a.out, "zcl\t3"));
  CHECK(has(a.out, "cat_lower_bound\t3"));
  CHECK(a.out == b.out);

  // the serial kernels print the same bytes
  CliResult s = run({"--serial", "--format", "tsv", "tc-bound", t2});
  CHECK(s.out == a.out);
}

TEST_CASE("tc-bound changes coefficients on request") {
  const CatalogEntry* s2 = find_entry("S2");
  REQUIRE(s2);
  const std::string file = temp_file(
      "s2.ring", serialize_ring(s2->data.rings.at(CoeffRing::integers())));

  CliResult zr = run({"tc-bound", file});
  CHECK(zr.code == 0);
  CHECK(has(zr.out, "coeff Z"));
  CHECK(has(zr.out, "zcl 3"));

  CliResult f2 = run({"tc-bound", "--coeff", "F_2", file});
  CHECK(f2.code == 0);
  CHECK(has(f2.out, "coeff F_2"));
  CHECK(has(f2.out, "zcl 2"));

  CliResult f7 = run({"tc-bound", "--coeff", "F_7", file});
  CHECK(f7.code == 0);
  CHECK(has(f7.out, "zcl 3"));

  CHECK(run({"tc-bound", "--coeff", "F_6", file}).code == 2);
}

TEST_CASE("pd reports the pairing per degree") {
  const std::string t2 = temp_file(
      "t2q.ring", serialize_ring(catalog_ring(*find_entry("T2"),
                                              CoeffRing::rationals())));
  CliResult good = run({"pd", t2});
  CHECK(good.code == 0);
  CHECK(has(good.out, "degree_1"));
  CHECK(has(good.out, "duality ok"));

  // middle pairing identically zero
  const std::string broken = temp_file(
      "pdbad.ring", "ring bad\ncoeff Q\ndim 2\nbasis a:1 g:2\n");
  CliResult bad = run({"pd", broken});
  CHECK(bad.code == 1);
  CHECK(has(bad.out, "FAIL"));
  CHECK(has(bad.out, "duality failed"));
}

TEST_CASE("catalog show feeds validate and classify") {
  for (const CatalogEntry& e : catalog_entries()) {
    CliResult shown = run({"catalog", "show", e.data.name});
    CHECK(shown.code == 0);
    const std::string file = temp_file("shown.manifold", shown.out);
    CliResult ok = run({"validate", "--manifold", file});
    CHECK(ok.code == 0);
    CHECK(has(ok.out, "manifold " + e.data.name));
  }
  CHECK(run({"catalog", "show", "Nope"}).code == 2);

  CliResult wu = run({"catalog", "show", "Wu"});
  const std::string wufile = temp_file("wu.manifold", wu.out);
  CliResult cls = run({"classify", wufile});
  CHECK(cls.code == 0);
  CHECK(has(cls.out, "verdict Alternative3(2)"));
  CHECK(has(cls.out, "tc_floor 3"));

  CliResult cs = run({"classify", temp_file(
                                      "cs.manifold",
                                      run({"catalog", "show", "ConnSum4"}).out)});
  CHECK(cs.code == 0);
  CHECK(has(cs.out, "verdict Excluded"));
  CHECK(has(cs.out, "tc_floor 5"));
  CHECK(has(cs.out, "witness_coeff Z"));
  CHECK(has(cs.out, "witness_factors"));
}

TEST_CASE("catalog list and check") {
  CliResult list = run({"catalog", "list"});
  CHECK(list.code == 0);
  CHECK(has(list.out, "entry S1\n"));
  CHECK(has(list.out, "entry ConnSum4\n"));

  CliResult check = run({"catalog", "check"});
  CHECK(check.code == 0);
  CHECK(has(check.out, "PASS S1"));
  CHECK(has(check.out, "PASS ConnSum4"));
  CHECK(has(check.out, "catalog ok"));
  CHECK(!has(check.out, "FAIL"));
}
