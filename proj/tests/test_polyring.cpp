#include <doctest.h>

#include <map>

#include "homsplit/polynomial.hpp"
#include "support.hpp"

using homsplit::ParseError;
using homsplit::Polynomial;
using homsplit::Rational;

namespace {

Polynomial P(const char* s) { return Polynomial::parse(s); }

const std::vector<std::string> kNames = {"a", "b", "eta", "theta21"};

Polynomial random_poly(homsplit::gen::Rng& g) {
  Polynomial p;
  const int terms = homsplit::gen::uniform(g, 0, 4);
  for (int t = 0; t < terms; ++t) {
    Polynomial m(Rational(homsplit::gen::uniform(g, -5, 5), homsplit::gen::uniform(g, 1, 4)));
    for (const auto& n : kNames) {
      const int e = homsplit::gen::uniform(g, 0, 2);
      for (int k = 0; k < e; ++k) m *= Polynomial::variable(n);
    }
    p += m;
  }
  return p;
}

// Exponent vector over kNames -> coefficient; multiplication by plain loops.
using Dense = std::map<std::vector<int>, Rational>;

Dense dense(const Polynomial& p) {
  Dense d;
  for (const auto& t : p.terms()) {
    std::vector<int> e;
    for (const auto& n : kNames) e.push_back(t.mono.exponent_of(n));
    d[e] += t.coeff;
  }
  return d;
}

Dense naive_mul(const Dense& a, const Dense& b) {
  Dense out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

} // namespace

TEST_SUITE("polyring") {

TEST_CASE("rational normal form") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(0, 5).str() == "0");
  CHECK(Rational::parse("-6/4") == Rational(-3, 2));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("parse examples") {
  CHECK(P("0").is_zero());
  const Polynomial half_a = P("1/2*a");
  REQUIRE(half_a.terms().size() == 1);
  CHECK(half_a.terms()[0].coeff == Rational(1, 2));
  CHECK(half_a.terms()[0].mono == homsplit::Monomial::variable("a"));
  CHECK(P("a^2 - a^2").is_zero());
  CHECK(P("-(a+1)") == P("-a - 1"));
  CHECK(P("2*(a-b)^2") == P("2*a^2 - 4*a*b + 2*b^2"));
  CHECK(P("-x^2") == -(P("x") * P("x")));
}

TEST_CASE("parse errors carry offsets") {
  for (const char* bad : {"2a", "a^0", "a^-1", "1/0", "(a", "a +", "a ** b", "", "a b", "3.5"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(P(bad), ParseError);
  }
  try {
    P("a + 2b");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 5);
  }
}

TEST_CASE("add examples") {
  CHECK(P("1") + P("1") == P("2"));
  CHECK((P("a") + P("-a")).is_zero());
  const Polynomial s = P("eta") + P("1/2");
  REQUIRE(s.terms().size() == 2);
  CHECK(s.terms()[0].mono == homsplit::Monomial::variable("eta"));
  CHECK(s.terms()[1].mono.is_one());
  CHECK(s.str() == "eta + 1/2");
}

TEST_CASE("mul examples") {
  CHECK((P("a") * P("0")).is_zero());
  CHECK(P("a+1") * P("a-1") == P("a^2 - 1"));
  const Polynomial t = P("theta21") * P("theta22");
  REQUIRE(t.terms().size() == 1);
  CHECK(t.str() == "theta21*theta22");
}

TEST_CASE("monomial order") {
  using homsplit::Monomial;
  const auto a = Monomial::variable("a"), b = Monomial::variable("b");
  CHECK(a * a > a * b);
  CHECK(a * b > a);
  CHECK(a > b * b);
  CHECK(b > Monomial());
  CHECK(P("1 + b + a*b + a^2").str() == "a^2 + a*b + b + 1");
}

TEST_CASE("specialize examples") {
  CHECK(P("a+1").specialize({{"a", Rational(1)}}) == P("2"));
  CHECK(P("eta").specialize({}) == P("eta"));
  CHECK(P("1/2*eta").specialize({{"eta", Rational(2)}}) == P("1"));
  CHECK(P("a*b + b").specialize({{"a", Rational(-1)}}).is_zero());
  CHECK(P("a*b").substitute({{"a", P("b+1")}}) == P("b^2 + b"));
}

TEST_CASE("is_zero examples") {
  CHECK(P("0").is_zero());
  CHECK((P("a") - P("a")).is_zero());
  CHECK_FALSE((P("eta") - P("1")).is_zero());
}

TEST_CASE("ring axioms on random triples") {
  auto g = test::rng(1);
  int failures = 0;
  for (int n = 0; n < 1000; ++n) {
    const Polynomial p = random_poly(g), q = random_poly(g), r = random_poly(g);
    failures += (p + q) + r != p + (q + r);
    failures += p + q != q + p;
    failures += (p * q) * r != p * (q * r);
    failures += p * q != q * p;
    failures += p * (q + r) != p * q + p * r;
    failures += p + Polynomial(0) != p;
    failures += p * Polynomial(1) != p;
    failures += !(p - p).is_zero();
  }
  CHECK(failures == 0);
}

TEST_CASE("product agrees with a naive multiplier") {
  auto g = test::rng(2);
  for (int n = 0; n < 300; ++n) {
    const Polynomial p = random_poly(g), q = random_poly(g);
    CHECK(dense(p * q) == naive_mul(dense(p), dense(q)));
  }
}

TEST_CASE("print and parse round trip") {
  auto g = test::rng(3);
  for (int n = 0; n < 1000; ++n) {
    const Polynomial p = random_poly(g);
    CAPTURE(p.str());
    CHECK(P(p.str().c_str()) == p);
  }
}

TEST_CASE("specialization is a ring homomorphism") {
  auto g = test::rng(4);
  for (int n = 0; n < 300; ++n) {
    const Polynomial p = random_poly(g), q = random_poly(g);
    std::map<std::string, Rational> bind;
    for (const auto& name : kNames)
      if (homsplit::gen::uniform(g, 0, 1)) bind[name] = Rational(homsplit::gen::uniform(g, -3, 3), homsplit::gen::uniform(g, 1, 3));
    CHECK((p * q).specialize(bind) == p.specialize(bind) * q.specialize(bind));
    CHECK((p + q).specialize(bind) == p.specialize(bind) + q.specialize(bind));
  }
}

TEST_CASE("canonical form has no zero or duplicate terms") {
  auto g = test::rng(5);
  for (int n = 0; n < 300; ++n) {
    const Polynomial p = random_poly(g) * random_poly(g);
    for (std::size_t i = 0; i < p.terms().size(); ++i) {
      CHECK_FALSE(p.terms()[i].coeff.is_zero());
      if (i) CHECK(p.terms()[i - 1].mono > p.terms()[i].mono);
    }
  }
}

}
