#include <doctest.h>

#include <array>
#include <random>
#include <thread>

#include "fsing/graded.hpp"

using namespace fsing;

namespace {

Poly parse2(const std::string& s, std::size_t nvars, std::uint32_t p) {
  return parsePoly(s, nvars, PrimeField(p));
}

Ideal idealOf(std::uint32_t p, std::size_t nvars,
              std::initializer_list<const char*> gens) {
  PrimeField field(p);
  std::vector<Poly> list;
  for (const char* g : gens) list.push_back(parsePoly(g, nvars, field));
  return Ideal(field, nvars, std::move(list));
}

// The six-variable reference polynomial's test ideal generators.
Ideal exampleTwoTau() {
  return idealOf(2, 6, {"x0", "x1", "x2", "x3", "x4", "x5^3"});
}

bool matEq(const la::MatF& a, const la::MatF& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         (a.array() == b.array()).all();
}

Poly randomHomogeneous(std::mt19937& rng, PrimeField field, std::size_t nvars,
                       std::int64_t d, int terms) {
  Poly f(field, nvars);
  auto monos = monomialsOfDegree(nvars, d);
  for (int t = 0; t < terms; ++t) {
    const Monomial& m = monos[rng() % monos.size()];
    Coeff c = 1 + static_cast<Coeff>(rng() % (field.p() - 1 == 0
                                                  ? 1
                                                  : field.p() - 1));
    f.addTerm(m, c);
  }
  return f;
}

}  // namespace

TEST_SUITE("graded") {

TEST_CASE("monomial enumeration") {
  auto basis = monomialsOfDegree(2, 2);
  REQUIRE(basis.size() == 3);
  CHECK(basis[0].exps == std::vector<std::int32_t>{2, 0});
  CHECK(basis[1].exps == std::vector<std::int32_t>{1, 1});
  CHECK(basis[2].exps == std::vector<std::int32_t>{0, 2});

  CHECK(monomialsOfDegree(2, 3, 1).empty());
  CHECK(monomialsOfDegree(6, 2, 3).size() == 21);
  CHECK(countMonomials(6, 2, {}) == 21);
  CHECK(countMonomials(3, 5, 2) == 3);  // coefficient of t^5 in (1+t+t^2)^3

  Limits tiny;
  tiny.maxDim = 10;
  CHECK_THROWS_AS(monomialsOfDegree(4, 10, {}, tiny), ResourceLimitError);
}

TEST_CASE("ideal canonicalization") {
  Ideal i = idealOf(5, 2, {"2*x1", "x0", "0", "x0", "3*x0^2 + x1^2"});
  REQUIRE(i.gens().size() == 3);
  CHECK(i.gens()[0].toString() == "x0");
  CHECK(i.gens()[1].toString() == "x1");
  CHECK(i.gens()[2].toString() == "x0^2 + 2*x1^2");  // scaled monic
  CHECK_FALSE(i.isUnit());
  CHECK(maxPowerIdeal(PrimeField(5), 2, 0).isUnit());
  CHECK_THROWS_AS(idealOf(5, 2, {"0"}), InvalidArgument);
  CHECK_THROWS_AS(idealOf(5, 2, {"x0 + x1^2"}), InvalidArgument);
}

TEST_CASE("frobenius powers of ideals") {
  Ideal m = maximalIdeal(PrimeField(2), 2);
  Ideal m1 = frobeniusPower(m, 1);
  REQUIRE(m1.gens().size() == 2);
  CHECK(m1.gens()[0].toString() == "x0^2");
  CHECK(m1.gens()[1].toString() == "x1^2");

  Ideal j = frobeniusPower(idealOf(2, 2, {"x0", "x1^3"}), 2);
  CHECK(j.gens()[0].toString() == "x0^4");
  CHECK(j.gens()[1].toString() == "x1^12");

  Ideal k = frobeniusPower(idealOf(3, 2, {"x0 + x1"}), 1);
  CHECK(k.gens()[0].toString() == "x0^3 + x1^3");
}

TEST_CASE("degree pieces") {
  CHECK(degreePiece(maximalIdeal(PrimeField(2), 2), 1).dim() == 2);
  CHECK(degreePiece(idealOf(2, 2, {"x0^2 + x1^2"}), 1).dim() == 0);
  CHECK(degreePiece(exampleTwoTau(), 2).dim() == 20);  // only x5^2 missing
  CHECK(countMonomials(6, 2, {}) == 21);

  Limits tiny;
  tiny.maxMatrixEntries = 16;
  CHECK_THROWS_AS(degreePiece(exampleTwoTau(), 4, tiny), ResourceLimitError);
}

TEST_CASE("membership") {
  Ideal sq = idealOf(2, 2, {"x0^2", "x1^2"});
  CHECK(contains(sq, parse2("x0^2*x1 + x0*x1^2", 2, 2)));
  CHECK_FALSE(contains(sq, parse2("x0*x1", 2, 2)));
  CHECK(contains(sq, Poly::zero(PrimeField(2), 2)));
  CHECK_THROWS_AS(contains(sq, parse2("x0 + x0^2", 2, 2)), InvalidArgument);
}

TEST_CASE("quotient dimensions") {
  CHECK(quotientDim(maximalIdeal(PrimeField(2), 2), 3) == 0);
  CHECK(quotientDim(idealOf(2, 2, {"x0^2", "x1^2"}), 2) == 1);  // socle x0*x1
  CHECK(quotientDim(exampleTwoTau(), 3) == 0);
  CHECK(quotientDim(exampleTwoTau(), 2) == 1);
}

TEST_CASE("once the quotient vanishes it stays zero") {
  std::mt19937 rng(42);
  for (std::uint32_t p : {2u, 3u}) {
    PrimeField field(p);
    for (int round = 0; round < 6; ++round) {
      std::size_t nvars = 2 + round % 2;
      std::vector<Poly> gens;
      for (int g = 0; g < 3; ++g)
        gens.push_back(randomHomogeneous(rng, field, nvars, 1 + rng() % 3, 2));
      bool allZero = true;
      for (const auto& g : gens) allZero &= g.isZero();
      if (allZero) continue;
      Ideal ideal(field, nvars, gens);
      std::int64_t firstZero = -1;
      for (std::int64_t t = 0; t <= 12; ++t) {
        if (quotientDim(ideal, t) == 0) {
          firstZero = t;
          break;
        }
      }
      if (firstZero < 0) continue;
      for (std::int64_t t = firstZero; t <= firstZero + nvars + 2; ++t)
        CHECK(quotientDim(ideal, t) == 0);
    }
  }
}

TEST_CASE("colon spaces against Frobenius powers of the maximal ideal") {
  Ideal m = maximalIdeal(PrimeField(2), 2);
  SubspaceBasis socle = colonSpace(1, m, 2);
  REQUIRE(socle.dim() == 1);
  CHECK(socle.rowPoly(PrimeField(2), 0).toString() == "x0*x1");

  // Degree 5 of the six-variable example: exactly the product of the five
  // unbounded variables.
  SubspaceBasis w = colonSpace(1, exampleTwoTau(), 5);
  REQUIRE(w.dim() == 1);
  CHECK(w.rowPoly(PrimeField(2), 0).toString() == "x0*x1*x2*x3*x4");

  Ideal unit = maxPowerIdeal(PrimeField(2), 2, 0);
  for (std::int64_t t = 0; t <= 2; ++t)
    CHECK(colonSpaceDim(1, unit, t) == 0);

  // Vanishing above the socle degree of R/m^[e].
  for (int e = 1; e <= 2; ++e) {
    std::int64_t top = 2 * ((1 << e) - 1);
    CHECK(colonSpaceDim(e, m, top) == 1);
    CHECK(colonSpaceDim(e, m, top + 1) == 0);
    CHECK(colonSpaceDim(e, m, top + 5) == 0);
  }
}

TEST_CASE("colon space vectors multiply generators into m^[e]") {
  std::mt19937 rng(99);
  for (std::uint32_t p : {2u, 3u}) {
    PrimeField field(p);
    for (int e = 1; e <= 2; ++e) {
      std::int64_t q = 1;
      for (int i = 0; i < e; ++i) q *= p;
      Poly g = randomHomogeneous(rng, field, 2, 2, 2);
      if (g.isZero()) continue;
      Ideal j(field, 2, {g});
      for (std::int64_t t = 0; t <= 2 * (q - 1); ++t) {
        SubspaceBasis space = colonSpace(e, j, t);
        for (Eigen::Index i = 0; i < space.dim(); ++i) {
          Poly v = space.rowPoly(field, i);
          CHECK((v * g).inFrobeniusPowerOfMax(e));
          CHECK_FALSE(v.inFrobeniusPowerOfMax(e));
        }
      }
    }
  }
}

// Flatness of Frobenius moves colons across bracket powers:
// f^{p-1} in (m^[e+1] : g^p) iff f^{p-1} in (m^[e] : g)^[p].
TEST_CASE("Kunz colon identity spot checks") {
  std::mt19937 rng(1234);
  int checked = 0;
  for (int round = 0; round < 24; ++round) {
    std::uint32_t p = (round % 2 == 0) ? 2 : 3;
    PrimeField field(p);
    std::size_t nvars = 2 + (round / 2) % 2;
    int e = 1 + round % 2;
    std::int64_t q = 1;
    for (int i = 0; i < e; ++i) q *= p;

    Poly f = randomHomogeneous(rng, field, nvars, 2 + rng() % 3, 3);
    Poly g = randomHomogeneous(rng, field, nvars, 1 + rng() % 2, 2);
    if (f.isZero() || g.isZero()) continue;
    Poly fp = pow(f, p - 1);

    // Left route: reduce f^{p-1} g^p against the monomial ideal m^[e+1].
    bool left = (fp * pow(g, p)).inFrobeniusPowerOfMax(e + 1);

    // Right route: generators of (m^[e] : g) from its degree-wise colon
    // spaces, then membership in the bracket power of that ideal.
    std::vector<Poly> colonGens;
    for (std::size_t i = 0; i < nvars; ++i) {
      Monomial m(nvars);
      m.exps[i] = static_cast<std::int32_t>(q);
      colonGens.push_back(Poly::monomial(field, m));
    }
    Ideal jg(field, nvars, {g});
    std::int64_t socle = static_cast<std::int64_t>(nvars) * (q - 1);
    for (std::int64_t t = 0; t <= socle; ++t) {
      SubspaceBasis space = colonSpace(e, jg, t);
      for (Eigen::Index i = 0; i < space.dim(); ++i)
        colonGens.push_back(space.rowPoly(field, i));
    }
    Ideal colon(field, nvars, std::move(colonGens));
    bool right = contains(frobeniusPower(colon, 1), fp);

    CHECK(left == right);
    ++checked;
  }
  CHECK(checked >= 20);
}

TEST_CASE("shared ideals admit concurrent degree-piece queries") {
  Ideal tau = exampleTwoTau();
  Poly probe = parse2("x0^2*x1*x2*x3*x4 + x5^6", 6, 2);
  std::vector<std::thread> workers;
  std::array<std::int64_t, 4> dims{};
  std::array<bool, 4> member{};
  for (int w = 0; w < 4; ++w) {
    workers.emplace_back([&, w] {
      dims[w] = quotientDim(tau, 2);
      member[w] = contains(tau, probe);
    });
  }
  for (auto& t : workers) t.join();
  for (int w = 0; w < 4; ++w) {
    CHECK(dims[w] == 1);
    CHECK(member[w]);
  }
}

TEST_CASE("degree pieces are deterministic and cached") {
  Ideal a = exampleTwoTau();
  SubspaceBasis first = degreePiece(a, 3);
  SubspaceBasis second = degreePiece(a, 3);  // cached copy
  CHECK(matEq(first.rows, second.rows));
  Ideal b = exampleTwoTau();  // fresh cache
  SubspaceBasis third = degreePiece(b, 3);
  CHECK(matEq(first.rows, third.rows));
  CHECK(first.pivots == third.pivots);
}

}  // TEST_SUITE
