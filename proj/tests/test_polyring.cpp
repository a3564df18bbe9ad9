#include <random>

#include "doctest.h"
#include "test_util.hpp"

using namespace cires;
using testutil::P;

TEST_CASE("parse reads homogeneous binomial") {
  auto R = testutil::ring({"x", "y"});
  Poly p = P(R, "x^2+y^2");
  CHECK(p.size() == 2);
  CHECK(p.degree() == 2);
  CHECK(p.is_homogeneous());
}

TEST_CASE("parse zero and coefficient reduction") {
  auto R = testutil::ring({"x", "y"});
  CHECK(P(R, "0").is_zero());
  CHECK(P(R, "0").terms().empty());
  CHECK(P(R, "32004*x") == P(R, "x"));
  CHECK(P(R, " 3 * x ^ 2 - x*y ") == P(R, "3*x^2+32002*x*y"));
  CHECK(P(R, "-x") == P(R, "32002*x"));
  CHECK(P(R, "x*x*y") == P(R, "x^2*y"));
}

TEST_CASE("parse errors") {
  auto R = testutil::ring({"x", "y"});
  CHECK_THROWS_AS(P(R, "x+"), ParseError);
  CHECK_THROWS_AS(P(R, "x^"), ParseError);
  CHECK_THROWS_AS(P(R, "2x"), ParseError);
  CHECK_THROWS_AS(P(R, "x + z"), ParseError);
  CHECK_THROWS_AS(P(R, "x^70000"), ParseError);
  CHECK_THROWS_AS(P(R, "x^40000*x^40000"), ParseError);
  try {
    P(R, "x + * y");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("canonical printing") {
  auto R = testutil::ring({"x", "y"});
  CHECK(P(R, "x^2-y^2").to_string() == "x^2+32002*y^2");
  CHECK(P(R, "y^2+x*y+x^2+1").to_string() == "x^2+x*y+y^2+1");
  CHECK(P(R, "0").to_string() == "0");
  CHECK(P(R, "7").to_string() == "7");
  CHECK(P(R, "1").to_string() == "1");
  auto R3 = testutil::ring({"x", "y", "z"});
  // degrevlex: x*z^2 < y^3? degree tie broken by smallest power of last variable
  CHECK(P(R3, "x*z^2+y^3+x^2*y").to_string() == "x^2*y+y^3+x*z^2");
}

TEST_CASE("ord and initial form") {
  auto R = testutil::ring({"x", "y"});
  CHECK(ord_poly(P(R, "x^3+x*y")) == 2);
  CHECK(ord_poly(P(R, "0")) == kOrdInfinity);
  CHECK(ord_to_string(kOrdInfinity) == "inf");
  CHECK(ord_poly(P(R, "5")) == 0);
  CHECK(initial_form(P(R, "x^3+x*y")) == P(R, "x*y"));
  CHECK(initial_form(P(R, "x^2+y^2")) == P(R, "x^2+y^2"));
  CHECK(initial_form(P(R, "x^2+x^3+y^4")) == P(R, "x^2"));
  CHECK_THROWS_AS(initial_form(P(R, "0")), std::invalid_argument);
}

TEST_CASE("arithmetic examples") {
  auto R = testutil::ring({"x", "y"});
  CHECK(poly_mul(P(R, "x+y"), P(R, "x-y")) == P(R, "x^2-y^2"));
  CHECK(poly_mul(P(R, "x+y"), P(R, "0")).is_zero());
  auto R2 = testutil::ring({"x", "y"}, 2);
  CHECK(poly_mul(P(R2, "x+y"), P(R2, "x+y")) == P(R2, "x^2+y^2"));
  auto S = testutil::ring({"x", "z"});
  CHECK_THROWS_AS(poly_add(P(R, "x"), P(S, "x")), std::invalid_argument);
  CHECK_THROWS_AS(poly_mul(P(R, "x"), P(S, "x")), std::invalid_argument);
}

namespace {

Poly random_poly(const RingPtr& R, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(0, 4), nterms(0, 5), var(0, static_cast<int>(R->nvars()) - 1);
  std::uniform_int_distribution<std::int64_t> coeff(-40000, 40000);
  std::vector<Term> terms;
  int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    Monomial m;
    int d = deg(rng);
    for (int s = 0; s < d; ++s) {
      m.exp[static_cast<std::size_t>(var(rng))]++;
      m.deg++;
    }
    terms.push_back({m, R->field().reduce(coeff(rng))});
  }
  return Poly::from_terms(R, std::move(terms));
}

}  // namespace

TEST_CASE("property: ring axioms, ord, initial forms, round trip") {
  auto R = testutil::ring({"x", "y", "z"});
  std::mt19937_64 rng(20240611);
  for (int iter = 0; iter < 300; ++iter) {
    Poly a = random_poly(R, rng), b = random_poly(R, rng), c = random_poly(R, rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(poly_parse(a.to_string(), R) == a);
    if (!a.is_zero() && !b.is_zero()) {
      CHECK(ord_poly(a * b) == ord_poly(a) + ord_poly(b));
      CHECK(initial_form(a * b) == initial_form(a) * initial_form(b));
    }
  }
}

TEST_CASE("field element arithmetic") {
  PrimeFieldElement a(5, 7), b(4, 7);
  CHECK((a + b).value == 2);
  CHECK((a * b).value == 6);
  CHECK((a * a.inverse()).value == 1);
  CHECK_THROWS_AS(a + PrimeFieldElement(1, 11), std::invalid_argument);
  CHECK_THROWS(PrimeField(32004));
}
