#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lefkit/dual.hpp"
#include "lefkit/matrix.hpp"
#include "lefkit/poly.hpp"

using namespace lefkit;

namespace {

Poly reassemble(const std::vector<std::pair<Poly, int>>& factors, const Rat& lc) {
  Poly prod = Poly::constant(lc);
  for (const auto& [p, mult] : factors)
    for (int i = 0; i < mult; ++i) prod = prod * p;
  return prod;
}

Rat rat_pow(const Rat& x, int n) {
  Rat r(1);
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

}  // namespace

TEST_CASE("rational parse and print round trip") {
  CHECK(rat_str(rat(3, 4)) == "3/4");
  CHECK(rat_str(rat(-6, 4)) == "-3/2");
  CHECK(rat_str(Rat(7)) == "7");
  CHECK(parse_rat("22/7") == rat(22, 7));
  CHECK(parse_rat("-5") == Rat(-5));
  CHECK_THROWS(parse_rat("1/0"));
}

TEST_CASE("polynomial division and gcd") {
  Poly f{Rat(-1), Rat(0), Rat(1)};       // x^2 - 1
  Poly g{Rat(1), Rat(2), Rat(1)};        // (x+1)^2
  CHECK(poly_gcd(f, g) == Poly{Rat(1), Rat(1)});
  CHECK(poly_gcd(Poly(), Poly()).is_zero());
  CHECK(poly_gcd(f, Poly()) == f.monic());

  auto [q, r] = divmod(Poly{Rat(1), Rat(0), Rat(0), Rat(1)}, Poly{Rat(1), Rat(1)});
  CHECK(q == Poly{Rat(1), Rat(-1), Rat(1)});
  CHECK(r.is_zero());
}

TEST_CASE("extended gcd over the rationals") {
  Poly f{Rat(-2), Rat(0), Rat(1)};  // x^2 - 2
  Poly g{Rat(-3), Rat(1)};          // x - 3
  auto [d, s, t] = poly_xgcd(f, g);
  CHECK(d == Poly::constant(1));
  CHECK(s * f + t * g == d);
}

TEST_CASE("factor x^3 - 1") {
  Poly f{Rat(-1), Rat(0), Rat(0), Rat(1)};
  auto factors = factor_rational(f);
  REQUIRE(factors.size() == 2);
  CHECK(factors[0].first == Poly{Rat(-1), Rat(1)});
  CHECK(factors[0].second == 1);
  CHECK(factors[1].first == Poly{Rat(1), Rat(1), Rat(1)});
  CHECK(factors[1].second == 1);
}

TEST_CASE("factor x^2") {
  auto factors = factor_rational(Poly::x_power(2));
  REQUIRE(factors.size() == 1);
  CHECK(factors[0].first == Poly{Rat(0), Rat(1)});
  CHECK(factors[0].second == 2);
}

TEST_CASE("factor x^6 - 1 into four irreducibles") {
  Poly f = Poly::x_power(6) - Poly::constant(1);
  auto factors = factor_rational(f);
  REQUIRE(factors.size() == 4);
  for (const auto& [p, mult] : factors) CHECK(mult == 1);
  CHECK(reassemble(factors, f.lc()) == f);
}

TEST_CASE("irreducible quartic that splits modulo every prime") {
  // x^4 + 1 has no rational factor although it factors mod p for all p,
  // so it forces the recombination stage to merge modular factors.
  Poly f = Poly::x_power(4) + Poly::constant(1);
  auto factors = factor_rational(f);
  REQUIRE(factors.size() == 1);
  CHECK(factors[0].first == f);
  CHECK(factors[0].second == 1);
}

TEST_CASE("factor products of quadratic surds") {
  Poly a{Rat(-2), Rat(0), Rat(1)};
  Poly b{Rat(-3), Rat(0), Rat(1)};
  Poly c{Rat(-6), Rat(0), Rat(1)};
  Poly f = a * b * c;
  auto factors = factor_rational(f);
  REQUIRE(factors.size() == 3);
  // canonical order: by degree, then coefficients from the constant term up
  CHECK(factors[0].first == c);
  CHECK(factors[1].first == b);
  CHECK(factors[2].first == a);
  CHECK(reassemble(factors, f.lc()) == f);
}

TEST_CASE("factor with multiplicities and non-monic leading coefficient") {
  Poly f = Poly::constant(rat(3, 2)) * Poly{Rat(-3), Rat(1)} * Poly{Rat(-3), Rat(1)} *
           Poly{Rat(1), Rat(0), Rat(1)} * Poly::x_power(1);
  auto factors = factor_rational(f);
  REQUIRE(factors.size() == 3);
  CHECK(factors[0].first == Poly{Rat(-3), Rat(1)});
  CHECK(factors[0].second == 2);
  CHECK(factors[1].first == Poly{Rat(0), Rat(1)});
  CHECK(factors[1].second == 1);
  CHECK(factors[2].first == Poly{Rat(1), Rat(0), Rat(1)});
  CHECK(factors[2].second == 1);
  CHECK(reassemble(factors, f.lc()) == f);
}

TEST_CASE("factor group-algebra sized cyclotomic products") {
  for (int n : {4, 5, 7, 8, 9, 12, 24}) {
    Poly f = Poly::x_power(n) - Poly::constant(1);
    auto factors = factor_rational(f);
    CHECK(reassemble(factors, f.lc()) == f);
    int degsum = 0;
    for (const auto& [p, mult] : factors) degsum += p.degree() * mult;
    CHECK(degsum == n);
  }
}

TEST_CASE("random reassembly check") {
  Rng rng(42);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Rat> coeffs;
    int deg = int(rng.uniform(2, 8));
    for (int i = 0; i <= deg; ++i) coeffs.push_back(rng.rat_in(5));
    coeffs.back() = Rat(rng.uniform(1, 3));
    Poly f(coeffs);
    auto factors = factor_rational(f);
    CHECK(reassemble(factors, f.lc()) == f);
  }
}

TEST_CASE("squarefree part strips multiplicities") {
  Poly sq = Poly{Rat(-1), Rat(1)} * Poly{Rat(-1), Rat(1)} * Poly{Rat(2), Rat(1)};
  CHECK(squarefree_part(sq) == Poly{Rat(-1), Rat(1)} * Poly{Rat(2), Rat(1)});
}

TEST_CASE("dual numbers satisfy the power rule") {
  for (int n = 1; n <= 6; ++n) {
    Dual x(rat(3, 2), Rat(1));
    Dual y(Rat(1), Rat(0));
    for (int i = 0; i < n; ++i) y = y * x;
    CHECK(y.a == rat_pow(rat(3, 2), n));
    CHECK(y.b == Rat(n) * rat_pow(rat(3, 2), n - 1));
  }
}

TEST_CASE("dual division inverts multiplication") {
  Dual x(rat(2, 3), rat(5, 7));
  Dual y(rat(-1, 2), rat(1, 3));
  CHECK((x * y) / y == x);
  CHECK_THROWS(x / Dual(Rat(0), Rat(1)));
}

TEST_CASE("derivative of matrix squaring at the identity") {
  QMat a{{Rat(1), Rat(2)}, {Rat(3), Rat(4)}};
  QMat d = dual_apply([](const Mat<Dual>& m) { return m * m; }, a);
  CHECK(d == Rat(2) * a);
}

TEST_CASE("derivative of the identity map") {
  QMat a{{Rat(0), Rat(1)}, {Rat(-1), Rat(0)}};
  QMat d = dual_apply([](const Mat<Dual>& m) { return m; }, a);
  CHECK(d == a);
}

TEST_CASE("derivative of the 2x2 determinant is the trace") {
  QMat a{{Rat(5), Rat(-2)}, {Rat(7), Rat(11)}};
  QMat d = dual_apply(
      [](const Mat<Dual>& m) {
        Mat<Dual> r(1, 1);
        r(0, 0) = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
        return r;
      },
      a);
  CHECK(d(0, 0) == a.trace());
}
