#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fsing/poly.hpp"

using namespace fsing;

namespace {

Poly parse2(const std::string& s, std::size_t nvars, std::uint32_t p) {
  return parsePoly(s, nvars, PrimeField(p));
}

// Independent oracle: k-fold repeated multiplication.
Poly naivePow(const Poly& f, int k) {
  Poly r = Poly::constant(f.field(), f.nvars(), 1);
  for (int i = 0; i < k; ++i) r = r * f;
  return r;
}

Poly randomPoly(std::mt19937& rng, PrimeField field, std::size_t nvars,
                int maxDeg, int terms) {
  Poly f(field, nvars);
  for (int t = 0; t < terms; ++t) {
    Monomial m(nvars);
    for (std::size_t i = 0; i < nvars; ++i)
      m.exps[i] = static_cast<std::int32_t>(rng() % (maxDeg + 1));
    Coeff c = 1 + static_cast<Coeff>(rng() % (field.p() - 1 == 0
                                                  ? 1
                                                  : field.p() - 1));
    f.addTerm(m, c);
  }
  return f;
}

}  // namespace

TEST_SUITE("poly") {

TEST_CASE("prime field construction") {
  CHECK_THROWS_AS(PrimeField(1), InvalidArgument);
  CHECK_THROWS_AS(PrimeField(4), InvalidArgument);
  CHECK_THROWS_AS(PrimeField(91), InvalidArgument);  // 7*13
  CHECK(PrimeField(2).p() == 2);
  CHECK(PrimeField(97).p() == 97);
  PrimeField f5(5);
  CHECK(f5.mul(3, 4) == 2);
  CHECK(f5.inv(3) == 2);
  CHECK(f5.neg(0) == 0);
  CHECK(f5.reduce(-7) == 3);
}

TEST_CASE("parse basic forms") {
  Poly f = parse2("x0^2*x1 + x5^6", 6, 2);
  CHECK(f.termCount() == 2);
  std::vector<std::int64_t> degs;
  for (const auto& [m, c] : f.terms()) degs.push_back(m.degree());
  CHECK(degs == std::vector<std::int64_t>{6, 3});
  CHECK_FALSE(f.isHomogeneous());

  CHECK(parse2("x0 + x0", 1, 2).isZero());
  CHECK(parse2("3*x0*x1", 2, 3).isZero());
  CHECK(parse2("2*x0 - 2*x0", 1, 5).isZero());
  CHECK(parse2("x0 - x1", 2, 3).toString() == "x0 + 2*x1");
  CHECK(parse2("5", 1, 3).toString() == "2");
  CHECK(parse2("  x1 ^ 2  *  x0 ", 2, 7).toString() == "x0*x1^2");
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse2("x0 + + x1", 2, 2), ParseError);
  CHECK_THROWS_AS(parse2("x9", 2, 2), ParseError);
  CHECK_THROWS_AS(parse2("x0 y1", 2, 2), ParseError);
  CHECK_THROWS_AS(parse2("", 1, 2), ParseError);
  CHECK_THROWS_AS(parse2("3 *", 1, 2), ParseError);
  try {
    parse2("x0 + x9^2", 2, 2);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position == 6);
  }
}

TEST_CASE("printing is canonical and parse round-trips") {
  Poly f = parse2("x1^2 + 2*x0*x1 + x0^2", 2, 5);
  CHECK(f.toString() == "x0^2 + 2*x0*x1 + x1^2");
  CHECK(parsePoly(f.toString(), 2, f.field()) == f);
  CHECK(Poly::zero(PrimeField(3), 2).toString() == "0");
  CHECK(Poly::constant(PrimeField(3), 2, 1).toString() == "1");
}

TEST_CASE("parsing inverts canonical printing on random polynomials") {
  std::mt19937 rng(150);
  for (std::uint32_t p : {2u, 3u, 7u}) {
    PrimeField field(p);
    for (int round = 0; round < 10; ++round) {
      Poly f = randomPoly(rng, field, 3, 4, 5);
      CHECK(parsePoly(f.toString(), f.nvars(), field) == f);
    }
  }
}

TEST_CASE("multiplication") {
  PrimeField f2(2);
  Poly xy = parse2("x0 + x1", 2, 2);
  CHECK((xy * xy).toString() == "x0^2 + x1^2");
  CHECK((xy * Poly::zero(f2, 2)).isZero());

  Poly a = parse2("x0 + x1", 2, 5);
  Poly b = parse2("x0 - x1", 2, 5);
  CHECK((a * b).toString() == "x0^2 + 4*x1^2");

  CHECK_THROWS_AS(parse2("x0", 1, 2) * parse2("x0", 1, 3), InvalidArgument);
  CHECK_THROWS_AS(parse2("x0", 1, 2) * parse2("x0", 2, 2), InvalidArgument);
}

TEST_CASE("powers") {
  Poly f = parse2("x0^2*x1 + x0*x1^2", 2, 2);
  CHECK(pow(f, 0) == Poly::constant(f.field(), 2, 1));
  CHECK(pow(parse2("x0 + x1", 2, 2), 2).toString() == "x0^2 + x1^2");
  CHECK(pow(f, 3) == naivePow(f, 3));
  CHECK(pow(f, 8) == naivePow(f, 8));
}

TEST_CASE("pow matches repeated multiplication on random inputs") {
  std::mt19937 rng(20240811);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    PrimeField field(p);
    for (int round = 0; round < 6; ++round) {
      Poly f = randomPoly(rng, field, 2 + round % 2, 3, 3);
      for (int k = 2; k <= 8; k += 3) CHECK(pow(f, k) == naivePow(f, k));
    }
  }
}

TEST_CASE("freshman's dream for p^e-th powers") {
  std::mt19937 rng(777);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    PrimeField field(p);
    for (int e = 1; e <= 2; ++e) {
      std::int64_t q = 1;
      for (int i = 0; i < e; ++i) q *= p;
      for (int round = 0; round < 4; ++round) {
        Poly a = randomPoly(rng, field, 2, 2, 3);
        Poly b = randomPoly(rng, field, 2, 2, 3);
        // Left side computed by the naive oracle, right by exponent scaling.
        CHECK(naivePow(a + b, q) == pow(a, q) + pow(b, q));
        CHECK(naivePow(a, q) == a.frobenius(e));
      }
    }
  }
}

TEST_CASE("resource guards fail loudly") {
  Poly big = parse2("x0^2000000000", 1, 2);
  CHECK_THROWS_AS(big.frobenius(1), ResourceLimitError);
  CHECK_THROWS_AS(big * big, ResourceLimitError);

  Limits tiny;
  tiny.maxTerms = 3;
  Poly f = parse2("x0 + x1 + x2", 3, 5);
  CHECK_THROWS_AS(mul(f, f, tiny), ResourceLimitError);
  tiny.maxTerms = 10'000'000;
  tiny.maxProducts = 4;
  CHECK_THROWS_AS(mul(f, f, tiny), ResourceLimitError);
}

}  // TEST_SUITE
