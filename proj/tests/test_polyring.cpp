#include "doctest.h"
#include "kpasep/laurent_poly.hpp"

#include <random>

using namespace kpasep;

namespace {

LaurentPoly P(const char* s) { return parse_poly(s); }

Assignment at(const Rational& a, const Rational& b, const Rational& q) {
  Assignment as;
  as.set(Var::alpha, a).set(Var::beta, b).set(Var::q, q);
  return as;
}

LaurentPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 4), lexp(-2, 2), qexp(0, 3), coef(-5, 5);
  LaurentPoly p;
  const int t = nterms(rng);
  for (int i = 0; i < t; ++i) {
    Monomial m = Monomial::of(Var::alpha, lexp(rng)) * Monomial::of(Var::beta, lexp(rng)) *
                 Monomial::of(Var::q, qexp(rng)) * Monomial::of(Var::y1, qexp(rng));
    p.add_term(m, Rational(coef(rng), 1 + (i % 3)));
  }
  return p;
}

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4") == Rational(-4));
  CHECK(to_string(parse_rational("10/4")) == "5/2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 5) == 0);
  CHECK(factorial(5) == 120);
}

TEST_CASE("poly_add") {
  CHECK(P("alpha + beta") + P("-beta") == alpha());
  CHECK(P("alpha + beta") + LaurentPoly() == P("alpha + beta"));
  CHECK((qvar() + qvar()).to_string() == "2*q");
}

TEST_CASE("poly_mul") {
  CHECK(P("alpha + beta") * alpha() == P("alpha^2 + alpha*beta"));
  CHECK(P("beta^-1") * beta() == LaurentPoly(1));
  CHECK(P("1 + q") * P("1 + q") == P("1 + 2*q + q^2"));
}

TEST_CASE("poly_eval") {
  CHECK(P("alpha + beta + alpha*beta").eval(at(1, 1, 0)) == 3);
  CHECK(P("alpha^-1").eval(at(Rational(1, 2), 1, 0)) == 2);
  CHECK((P("alpha + beta") * P("alpha + beta + alpha*beta")).eval(at(1, 1, 0)) == 6);
  Assignment partial;
  partial.set(Var::alpha, 1);
  CHECK_THROWS_AS(P("alpha + q").eval(partial), std::invalid_argument);
  CHECK_THROWS_AS(P("alpha^-1").eval(at(0, 1, 1)), std::domain_error);
}

TEST_CASE("coeff_extract") {
  CHECK(P("1 + y1*alpha").pow(2).coeff_extract(Var::y1, 1) == P("2*alpha"));
  CHECK(P("alpha + y1*beta").coeff_extract(Var::y1, 0) == alpha());
  CHECK(P("alpha + y1*beta").coeff_extract(Var::y1, 2).is_zero());
}

TEST_CASE("qint") {
  CHECK(qint(0).is_zero());
  CHECK(qint(1) == LaurentPoly(1));
  CHECK(qint(3) == P("1 + q + q^2"));
  for (int j = 0; j <= 20; ++j) {
    CHECK((qvar() - LaurentPoly(1)) * qint(j) == LaurentPoly::variable(Var::q, j) - LaurentPoly(1));
  }
}

TEST_CASE("q and markers reject negative exponents") {
  CHECK_THROWS_AS(Monomial::of(Var::q, -1), std::domain_error);
  CHECK_THROWS_AS(parse_poly("y2^-1"), std::domain_error);
  CHECK_NOTHROW(Monomial::of(Var::beta, -3));
}

TEST_CASE("canonical string") {
  CHECK(LaurentPoly().to_string() == "0");
  CHECK(P("alpha*beta*q + alpha^2*beta + beta^2*alpha").to_string() ==
        "alpha^2*beta + alpha*beta^2 + alpha*beta*q");
  CHECK(P("1/2*alpha^-1 - 3").to_string() == "-3 + 1/2*alpha^-1");
  CHECK(P("q - alpha").to_string() == "-alpha + q");
}

TEST_CASE("homomorphism, linearity and round trip on random polynomials") {
  std::mt19937 rng(20261017);
  const Assignment as = at(Rational(2, 3), Rational(-5, 7), Rational(3, 11)).set(Var::y1, Rational(1, 2));
  for (int trial = 0; trial < 300; ++trial) {
    const LaurentPoly p = random_poly(rng), r = random_poly(rng);
    CHECK((p * r).eval(as) == p.eval(as) * r.eval(as));
    CHECK((p + r).eval(as) == p.eval(as) + r.eval(as));
    for (int k = 0; k <= 3; ++k) {
      CHECK((p + r).coeff_extract(Var::y1, k) == p.coeff_extract(Var::y1, k) + r.coeff_extract(Var::y1, k));
    }
    CHECK(parse_poly(p.to_string()) == p);
  }
}
