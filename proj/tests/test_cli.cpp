#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hartogs/cli.hpp"
#include "hartogs/dsl.hpp"

using namespace hartogs;

namespace {

const char* kH1 =
    "hartogs(X=disc(1), X0=annulus(1/2,1), Y=disc(1), Y0=disc(1/2))";

DomainAst random_domain_ast(std::mt19937_64& rng, bool allow_product) {
  std::uniform_int_distribution<int> kind(0, allow_product ? 2 : 1);
  std::uniform_int_distribution<long long> num(1, 9);
  std::uniform_int_distribution<long long> den(1, 9);
  DomainAst d;
  switch (kind(rng)) {
    case 0:
      d.kind = DomainAst::Kind::Disc;
      d.a = Rational(num(rng), den(rng));
      break;
    case 1: {
      d.kind = DomainAst::Kind::Annulus;
      Rational a(num(rng), den(rng));
      d.a = a;
      d.b = a + Rational(num(rng), den(rng));
      break;
    }
    default: {
      d.kind = DomainAst::Kind::Product;
      std::uniform_int_distribution<int> nf(2, 4);
      int n = nf(rng);
      for (int i = 0; i < n; ++i)
        d.factors.push_back(random_domain_ast(rng, false));
      break;
    }
  }
  return d;
}

Ast random_ast(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> top(0, 3);
  Ast a;
  if (top(rng) == 0) {
    a.is_hartogs = true;
    for (int i = 0; i < 4; ++i)
      a.parts.push_back(random_domain_ast(rng, true));
  } else {
    a.domain = random_domain_ast(rng, true);
  }
  return a;
}

}  // namespace

TEST_CASE("parsing the example inputs") {
  Ast a = parse(kH1);
  REQUIRE(a.is_hartogs);
  REQUIRE(a.parts.size() == 4);
  CHECK(a.parts[0].kind == DomainAst::Kind::Disc);
  CHECK(a.parts[0].a == Rational(1));
  CHECK(a.parts[1].kind == DomainAst::Kind::Annulus);
  CHECK(a.parts[1].a == Rational(1, 2));
  CHECK(a.parts[1].b == Rational(1));
  CHECK(a.parts[3].a == Rational(1, 2));

  Ast b = parse("annulus(1/2,3/4)");
  CHECK(!b.is_hartogs);
  CHECK(b.domain.kind == DomainAst::Kind::Annulus);
  CHECK(b.domain.a == Rational(1, 2));
  CHECK(b.domain.b == Rational(3, 4));

  Ast c = parse("disc(0.75) x annulus(0.5, 2)");
  CHECK(c.domain.kind == DomainAst::Kind::Product);
  REQUIRE(c.domain.factors.size() == 2);
  CHECK(c.domain.factors[0].a == Rational(3, 4));
  CHECK(c.domain.factors[1].b == Rational(2));
}

TEST_CASE("syntax errors carry positions; semantic errors come later") {
  CHECK_THROWS_AS(parse("disk(1)"), ParseError);
  CHECK_THROWS_AS(parse("disc(1"), ParseError);
  CHECK_THROWS_AS(parse("disc(1) trailing"), ParseError);
  try {
    parse("disc(x)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
    CHECK(e.column == 6);
  }

  // "disc(0)" parses fine; rejecting the radius is a semantic check.
  Ast z = parse("disc(0)");
  CHECK_THROWS_AS(to_domain(z.domain), ValidationError);
  CHECK_THROWS_AS(to_domain(parse("annulus(1, 1/2)").domain), ValidationError);
  CHECK_THROWS_AS(to_figure(parse("disc(1)")), ValidationError);
}

TEST_CASE("print/parse round trip on random ASTs") {
  std::mt19937_64 rng(606);
  for (int it = 0; it < 300; ++it) {
    Ast a = random_ast(rng);
    REQUIRE(parse(print(a)) == a);
  }
  CHECK(print(parse(kH1)) ==
        "hartogs(X=disc(1), X0=annulus(1/2, 1), Y=disc(1), Y0=disc(1/2))");
}

TEST_CASE("report succeeds on all four example figures") {
  const char* figures[] = {
      "hartogs(X=disc(1), X0=disc(1/2), Y=disc(1), Y0=disc(1/2))",
      kH1,
      "hartogs(X=disc(1), X0=annulus(1/2,1), Y=disc(1), Y0=annulus(1/2,1))",
      "hartogs(X=disc(1), X0=annulus(1/2,1), Y=disc(1), Y0=annulus(1/2,3/4))",
  };
  for (const char* f : figures) {
    RunResult r = run({"report", f});
    REQUIRE(r.exit_code == 0);
    CHECK(r.doc["pass"] == true);
    CHECK(r.doc["schema_version"] == "1");
    CHECK(r.doc["checks"]["oracle_agreement"] == true);
    CHECK(!r.text.empty());
  }
}

TEST_CASE("JSON output is byte-stable across runs") {
  RunResult a = run({"report", kH1, "--json", "--seed", "7"});
  RunResult b = run({"report", kH1, "--json", "--seed", "7"});
  REQUIRE(a.exit_code == 0);
  CHECK(a.text == b.text);
  CHECK(a.doc.dump() == b.doc.dump());
}

TEST_CASE("exit codes follow the contract") {
  // Malformed DSL -> 2.
  CHECK(run({"report", "hartogs(X=disc(1)"}).exit_code == 2);
  CHECK(run({"cohomology", "disc(oops)"}).exit_code == 2);
  // Semantic violation -> 2.
  CHECK(run({"report",
             "hartogs(X=disc(1), X0=disc(2), Y=disc(1), Y0=disc(1/2))"})
            .exit_code == 2);
  // Unsupported mixed product pair -> 3.
  RunResult u = run({"classify-pair", "annulus(1/2,1) x disc(1/2)",
                     "disc(1) x disc(1)"});
  CHECK(u.exit_code == 3);
  RunResult u2 =
      run({"report",
           "hartogs(X=disc(1) x disc(1), X0=annulus(1/2,1) x disc(1/2), "
           "Y=disc(1), Y0=disc(1/2))"});
  CHECK(u2.exit_code == 3);
  // Unknown flags / missing arguments -> 2.
  CHECK(run({"report"}).exit_code == 2);
  CHECK(run({"no-such-command"}).exit_code == 2);
}

TEST_CASE("classify-pair and cohomology subcommands") {
  RunResult r = run({"classify-pair", "annulus(1/2,3/4)", "disc(1)"});
  REQUIRE(r.exit_code == 0);
  CHECK(r.doc["pair"]["tag"] == "quasi-split");
  CHECK(r.doc["pair"]["complement"]["spectrum"]["boxes"][0]["hi"][0] == "-1");

  RunResult c = run({"cohomology", kH1, "--p", "0", "--q", "2"});
  REQUIRE(c.exit_code == 0);
  CHECK(c.doc["cohomology"]["class"] == "zero");

  RunResult s = run({"spectrum", "annulus(1/2,1) x disc(1)"});
  REQUIRE(s.exit_code == 0);
  CHECK(s.doc["spectrum"]["boxes"][0]["lo"][0] == "-inf");

  RunResult v = run({"verify", "--seed", "3"});
  CHECK(v.exit_code == 0);

  RunResult e = run({"envelope", kH1});
  REQUIRE(e.exit_code == 0);
  CHECK(e.doc["certificate"]["is_stein"] == false);
}
