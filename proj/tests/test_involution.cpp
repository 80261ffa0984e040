#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "lefkit/involution.hpp"

using namespace lefkit;

namespace {

QMat elem(int n, int i, int j) {
  QMat m = QMat::zero(n, n);
  m(i, j) = 1;
  return m;
}

QMat identity_fn(const QMat& x) { return x; }

// x and y interleaved as diag(x, y), spanning M_n x M_n inside End(Q^2n);
// the hyperbolic adjoint restricts to (x, y) |-> (y^T, x^T), the swap.
std::vector<QMat> swap_pair_basis(int n) {
  std::vector<QMat> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      QMat a = QMat::zero(2 * n, 2 * n);
      a(i, j) = 1;
      out.push_back(a);
      QMat b = QMat::zero(2 * n, 2 * n);
      b(n + i, n + j) = 1;
      out.push_back(b);
    }
  return out;
}

QMat hyperbolic(int n) {
  QMat b = QMat::zero(2 * n, 2 * n);
  b.set_block(0, n, QMat::identity(n));
  b.set_block(n, 0, QMat::identity(n));
  return b;
}

}  // namespace

TEST_CASE("adjoint involution of the identity form is transposition") {
  AlgebraWithInvolution a = adjoint_involution(QMat::identity(2));
  QMat x{{Rat(1), Rat(2)}, {Rat(3), Rat(4)}};
  CHECK(a.sigma(x) == x.transpose());
  CHECK(a.dim() == 4);
  CHECK(kind(a) == InvolutionKind::First);
  CHECK(classify_type(a) == InvolutionType::Orthogonal);
  SkewPair sp = skew_and_derived(a);
  CHECK(sp.skew.dim() == 1);
  CHECK(sp.s.dim() == 0);  // so(2) is abelian
}

TEST_CASE("hyperbolic adjoint swaps the diagonal entries") {
  QMat b{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
  AlgebraWithInvolution a = adjoint_involution(b);
  QMat x{{Rat(1), Rat(2)}, {Rat(3), Rat(4)}};
  QMat want{{Rat(4), Rat(2)}, {Rat(3), Rat(1)}};
  CHECK(a.sigma(x) == want);
  CHECK(classify_type(a) == InvolutionType::Orthogonal);
}

TEST_CASE("symplectic adjoint has the complementary skew dimension") {
  QMat b{{Rat(0), Rat(1)}, {Rat(-1), Rat(0)}};
  AlgebraWithInvolution a = adjoint_involution(b);
  CHECK(a.sigma(elem(2, 0, 0)) == elem(2, 1, 1));
  CHECK(classify_type(a) == InvolutionType::Symplectic);
  SkewPair sp = skew_and_derived(a);
  CHECK(sp.skew.dim() == 3);
  CHECK(sp.s.dim() == 3);  // sp(2) = sl(2) is perfect
}

TEST_CASE("malformed forms are rejected") {
  CHECK_THROWS_AS(adjoint_involution(QMat::zero(2, 2)), std::invalid_argument);
  QMat skewless{{Rat(1), Rat(1)}, {Rat(0), Rat(1)}};
  CHECK_THROWS_AS(adjoint_involution(skewless), std::invalid_argument);
  QMat degenerate{{Rat(1), Rat(1)}, {Rat(1), Rat(1)}};
  CHECK_THROWS_AS(adjoint_involution(degenerate), std::invalid_argument);
  CHECK_THROWS_AS(adjoint_involution(QMat(2, 3)), std::invalid_argument);
}

TEST_CASE("constructor verifies the algebra and involution axioms") {
  auto transpose_fn = [](const QMat& x) { return x.transpose(); };
  CHECK_THROWS_WITH_AS(AlgebraWithInvolution(2, {elem(2, 0, 1)}, transpose_fn),
                       "algebra does not contain the identity", std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      AlgebraWithInvolution(2, {QMat::identity(2), Rat(2) * QMat::identity(2)}, transpose_fn),
      "basis is not linearly independent", std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      AlgebraWithInvolution(2, {QMat::identity(2), elem(2, 0, 1), elem(2, 1, 0)}, transpose_fn),
      "algebra basis is not multiplicatively closed", std::invalid_argument);

  // linear but escaping the diagonal algebra
  auto escape = [](const QMat& x) {
    QMat r = x;
    r(0, 1) = x(0, 0);
    return r;
  };
  CHECK_THROWS_WITH_AS(AlgebraWithInvolution(2, {elem(2, 0, 0), elem(2, 1, 1)}, escape),
                       "involution does not map the algebra into itself",
                       std::invalid_argument);

  // conjugation by diag(1, 2): an automorphism of order infinity
  QMat g{{Rat(1), Rat(0)}, {Rat(0), Rat(2)}};
  QMat gi{{Rat(1), Rat(0)}, {Rat(0), Rat(1, 2)}};
  auto conj = [g, gi](const QMat& x) { return g * x * gi; };
  AlgebraWithInvolution full = adjoint_involution(QMat::identity(2));
  CHECK_THROWS_WITH_AS(AlgebraWithInvolution(2, full.basis(), conj),
                       "involution must square to the identity", std::invalid_argument);

  // the identity map squares to the identity but is not an anti-automorphism
  CHECK_THROWS_WITH_AS(AlgebraWithInvolution(2, full.basis(), identity_fn),
                       "involution is not an anti-automorphism", std::invalid_argument);
}

TEST_CASE("the double of the rationals is a hyperbolic plane") {
  AlgebraWithInvolution q(1, {QMat::identity(1)}, identity_fn);
  ModuleWithForm mv = build_v_tilde(q, {QMat::identity(1)});
  CHECK(mv.v_dim == 1);
  CHECK(mv.form == hyperbolic(1));
  REQUIRE(mv.action.size() == 1);
  CHECK(mv.action[0] == QMat::identity(2));
  QMat grading{{Rat(1), Rat(0)}, {Rat(0), Rat(-1)}};
  CHECK(mv.grading() == grading);
}

TEST_CASE("the sign representation doubles to minus the identity") {
  QMat p{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
  // regular representation of the order-two group; sigma(g) = g^{-1} = g
  AlgebraWithInvolution a(2, {QMat::identity(2), p}, identity_fn);
  ModuleWithForm mv = build_v_tilde(a, {QMat::identity(1), QMat{{Rat(-1)}}});
  CHECK(mv.action[1] == Rat(-1) * QMat::identity(2));
}

TEST_CASE("the full matrix algebra doubles with two hyperbolic pairings") {
  AlgebraWithInvolution a = adjoint_involution(QMat::identity(2));
  ModuleWithForm mv = build_v_tilde(a, a.basis());
  CHECK(mv.v_dim == 2);
  CHECK(mv.form == hyperbolic(2));
  // sigma(E01) = E10, so E01 acts on the dual side by E10^T = E01
  CHECK(mv.action[1].block(0, 0, 2, 2) == elem(2, 0, 1));
  CHECK(mv.action[1].block(2, 2, 2, 2) == elem(2, 0, 1));
  CHECK(mv.action[1].block(0, 2, 2, 2).is_zero());
}

TEST_CASE("module axioms are enforced") {
  QMat p{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
  AlgebraWithInvolution a(2, {QMat::identity(2), p}, identity_fn);
  CHECK_THROWS_WITH_AS(build_v_tilde(a, {QMat::identity(1), QMat{{Rat(2)}}}),
                       "module axioms violated: action is not multiplicative",
                       std::invalid_argument);
  CHECK_THROWS_AS(build_v_tilde(a, {QMat::identity(1)}), std::invalid_argument);

  AlgebraWithInvolution q(1, {QMat::identity(1)}, identity_fn);
  CHECK_THROWS_WITH_AS(build_v_tilde(q, {Rat(2) * QMat::identity(1)}),
                       "module axioms violated: identity does not act as identity",
                       std::invalid_argument);
}

TEST_CASE("scalars acting on the plane double to the full four-by-four algebra") {
  AlgebraWithInvolution q2(2, {QMat::identity(2)}, identity_fn);
  ModuleWithForm mv = build_v_tilde(q2, {QMat::identity(2)});
  AlgebraWithInvolution endo = endo_with_involution(mv);
  CHECK(endo.dim() == 16);
  CHECK(int(endo.center().size()) == 1);
  CHECK(kind(endo) == InvolutionKind::First);
  CHECK(classify_type(endo) == InvolutionType::Orthogonal);
  SkewPair sp = skew_and_derived(endo);
  CHECK(sp.skew.dim() == 6);  // so(4)
  CHECK(verify_skew_equals_so(mv));
}

TEST_CASE("standard factor of the symmetric group on three letters") {
  // the invariant pairing of the two-dimensional representation; its adjoint
  // inverts the group generators
  QMat beta{{Rat(2), Rat(-1)}, {Rat(-1), Rat(2)}};
  AlgebraWithInvolution a = adjoint_involution(beta);
  QMat rot{{Rat(0), Rat(-1)}, {Rat(1), Rat(-1)}};
  QMat flip{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
  CHECK(a.sigma(rot) == rot * rot);
  CHECK(a.sigma(flip) == flip);

  ModuleWithForm mv = build_v_tilde(a, a.basis());
  AlgebraWithInvolution endo = endo_with_involution(mv);
  CHECK(endo.dim() == 4);
  CHECK(kind(endo) == InvolutionKind::First);
  CHECK(classify_type(endo) == InvolutionType::Orthogonal);
  SkewPair sp = skew_and_derived(endo);
  CHECK(sp.skew.dim() == 1);
  CHECK(verify_skew_equals_so(mv));
}

TEST_CASE("gaussian integers double to a unitary algebra") {
  QMat j{{Rat(0), Rat(-1)}, {Rat(1), Rat(0)}};
  auto transpose_fn = [](const QMat& x) { return x.transpose(); };
  // span{1, j} with j^2 = -1; transposition is complex conjugation here
  AlgebraWithInvolution gauss(2, {QMat::identity(2), j}, transpose_fn);
  CHECK(int(central_idempotents(gauss).size()) == 1);
  CHECK(kind(gauss) == InvolutionKind::Second);
  CHECK(classify_type(gauss) == InvolutionType::Unitary);

  ModuleWithForm mv = build_v_tilde(gauss, {QMat::identity(2), j});
  AlgebraWithInvolution endo = endo_with_involution(mv);
  CHECK(endo.dim() == 8);
  CHECK(int(endo.center().size()) == 2);
  bool moved = false;
  for (const QMat& z : endo.center())
    if (endo.sigma(z) != z) moved = true;
  CHECK(moved);
  CHECK(kind(endo) == InvolutionKind::Second);
  CHECK(classify_type(endo) == InvolutionType::Unitary);
  CHECK(verify_skew_equals_so(mv));

  // Skew splits as the derived part plus the skew part of the center
  SkewPair sp = skew_and_derived(endo);
  CHECK(sp.skew.dim() == 4);
  CHECK(sp.s.dim() == 3);
  auto zs = endo.center();
  QMat zsys(16, int(zs.size()));
  for (size_t i = 0; i < zs.size(); ++i) {
    QVec f = flatten(endo.sigma(zs[i]) + zs[i]);
    for (int r = 0; r < 16; ++r) zsys(r, int(i)) = f[size_t(r)];
  }
  auto skew_central = std::vector<QVec>();
  for (const QVec& c : kernel_basis(zsys)) {
    QMat z = QMat::zero(4, 4);
    for (size_t i = 0; i < zs.size(); ++i) z = z + c[size_t(i)] * zs[size_t(i)];
    skew_central.push_back(flatten(z));
  }
  Subspace zpart = Subspace::from_vectors(skew_central, 16);
  CHECK(zpart.dim() == 1);
  CHECK(sp.s.span().intersect(zpart).dim() == 0);
  CHECK(sp.s.span().sum(zpart) == sp.skew.span());
}

TEST_CASE("swap involutions are unitary with special-linear derived algebras") {
  for (int n = 1; n <= 4; ++n) {
    QMat b = hyperbolic(n);
    auto swap_fn = [b](const QMat& x) { return b * x.transpose() * b; };
    AlgebraWithInvolution a(2 * n, swap_pair_basis(n), swap_fn);
    CHECK(kind(a) == InvolutionKind::Second);
    CHECK(classify_type(a) == InvolutionType::Unitary);
    SkewPair sp = skew_and_derived(a);
    CHECK(sp.skew.dim() == n * n);
    CHECK(sp.s.dim() == n * n - 1);
  }
}

TEST_CASE("first-kind skew dimensions follow the degree") {
  for (int n = 3; n <= 4; ++n) {
    AlgebraWithInvolution a = adjoint_involution(QMat::identity(n));
    CHECK(classify_type(a) == InvolutionType::Orthogonal);
    SkewPair sp = skew_and_derived(a);
    CHECK(sp.skew.dim() == n * (n - 1) / 2);
    CHECK(sp.s.dim() == n * (n - 1) / 2);  // so(n) is perfect from n = 3 on
  }
  for (int half : {1, 2}) {
    int n = 2 * half;
    QMat b = QMat::zero(n, n);
    b.set_block(0, half, QMat::identity(half));
    b.set_block(half, 0, Rat(-1) * QMat::identity(half));
    AlgebraWithInvolution a = adjoint_involution(b);
    CHECK(classify_type(a) == InvolutionType::Symplectic);
    SkewPair sp = skew_and_derived(a);
    CHECK(sp.skew.dim() == n * (n + 1) / 2);
    CHECK(sp.s.dim() == n * (n + 1) / 2);
  }
}

TEST_CASE("stable proper ideals make the kind undefined") {
  AlgebraWithInvolution diag2(2, {elem(2, 0, 0), elem(2, 1, 1)}, identity_fn);
  CHECK_THROWS_WITH_AS(
      kind(diag2),
      "not simple with involution: the ideal of central idempotent 0 is sigma-stable",
      std::runtime_error);
  CHECK_THROWS_AS(classify_type(diag2), std::runtime_error);

  QMat p{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
  auto swap_fn = [p](const QMat& x) { return p * x * p; };
  AlgebraWithInvolution swapped(2, {elem(2, 0, 0), elem(2, 1, 1)}, swap_fn);
  CHECK(kind(swapped) == InvolutionKind::Second);
  CHECK(classify_type(swapped) == InvolutionType::Unitary);

  // three factors, one of them necessarily fixed
  QMat p3 = QMat::zero(3, 3);
  p3(0, 1) = p3(1, 0) = p3(2, 2) = 1;
  auto swap3 = [p3](const QMat& x) { return p3 * x * p3; };
  AlgebraWithInvolution diag3(3, {elem(3, 0, 0), elem(3, 1, 1), elem(3, 2, 2)}, swap3);
  CHECK_THROWS_AS(kind(diag3), std::runtime_error);
}

TEST_CASE("isometry membership matches form preservation") {
  QMat b{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
  AlgebraWithInvolution a = adjoint_involution(b);
  CHECK(iso_membership(a, QMat::identity(2)));
  CHECK(iso_membership(a, Rat(-1) * QMat::identity(2)));
  QMat d{{Rat(2), Rat(0)}, {Rat(0), Rat(1, 2)}};
  CHECK(iso_membership(a, d));
  CHECK(d.transpose() * b * d == b);
  CHECK_FALSE(iso_membership(a, QMat{{Rat(2), Rat(0)}, {Rat(0), Rat(1)}}));
  CHECK_FALSE(iso_membership(a, elem(2, 0, 0)));  // singular

  AlgebraWithInvolution diag2(2, {elem(2, 0, 0), elem(2, 1, 1)}, identity_fn);
  CHECK_THROWS_AS(iso_membership(diag2, elem(2, 0, 1)), std::invalid_argument);

  Rng rng(0x696e766f);
  for (int trial = 0; trial < 20; ++trial) {
    Rat t(rng.uniform(1, 9), rng.uniform(1, 9));
    QMat m{{t, Rat(0)}, {Rat(0), Rat(1) / t}};
    CHECK(iso_membership(a, m));
    CHECK(m.transpose() * b * m == b);
  }
}

TEST_CASE("classification is stable under congruence") {
  Rng rng(0x636f6e67);
  for (int trial = 0; trial < 5; ++trial) {
    QMat p(3, 3);
    do {
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) p(i, j) = rng.rat_in(3);
    } while (determinant(p) == 0);
    QMat b = p.transpose() * p;  // congruent to the identity form
    CHECK(classify_type(adjoint_involution(b)) == InvolutionType::Orthogonal);
  }
  for (int trial = 0; trial < 5; ++trial) {
    QMat p(2, 2);
    do {
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) p(i, j) = rng.rat_in(3);
    } while (determinant(p) == 0);
    QMat j{{Rat(0), Rat(1)}, {Rat(-1), Rat(0)}};
    QMat b = p.transpose() * j * p;
    CHECK(classify_type(adjoint_involution(b)) == InvolutionType::Symplectic);
  }
}

TEST_CASE("doubled endomorphism algebras have even degree over the center") {
  auto check_even_degree = [](const AlgebraWithInvolution& endo) {
    int d = int(endo.center().size());
    REQUIRE(d > 0);
    REQUIRE(endo.dim() % d == 0);
    int over = endo.dim() / d;
    int deg = 0;
    while (deg * deg < over) ++deg;
    CHECK(deg * deg == over);
    CHECK(deg % 2 == 0);
  };

  AlgebraWithInvolution q2(2, {QMat::identity(2)}, identity_fn);
  check_even_degree(endo_with_involution(build_v_tilde(q2, {QMat::identity(2)})));

  QMat beta{{Rat(2), Rat(-1)}, {Rat(-1), Rat(2)}};
  AlgebraWithInvolution std3 = adjoint_involution(beta);
  check_even_degree(endo_with_involution(build_v_tilde(std3, std3.basis())));

  QMat j{{Rat(0), Rat(-1)}, {Rat(1), Rat(0)}};
  AlgebraWithInvolution gauss(2, {QMat::identity(2), j},
                              [](const QMat& x) { return x.transpose(); });
  check_even_degree(endo_with_involution(build_v_tilde(gauss, {QMat::identity(2), j})));
}

TEST_CASE("names for kinds and types") {
  CHECK(to_string(InvolutionKind::First) == "first");
  CHECK(to_string(InvolutionKind::Second) == "second");
  CHECK(to_string(InvolutionType::Orthogonal) == "orthogonal");
  CHECK(to_string(InvolutionType::Symplectic) == "symplectic");
  CHECK(to_string(InvolutionType::Unitary) == "unitary");
}
