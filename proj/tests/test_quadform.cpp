#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "lefkit/quadform.hpp"

using namespace lefkit;

namespace {

QMat diag(const std::vector<Rat>& d) {
  QMat m = QMat::zero(int(d.size()), int(d.size()));
  for (size_t i = 0; i < d.size(); ++i) m(int(i), int(i)) = d[i];
  return m;
}

std::vector<QVec> standard_basis(int n) {
  std::vector<QVec> out;
  for (int i = 0; i < n; ++i) out.push_back(unit_vec(n, i));
  return out;
}

}  // namespace

TEST_CASE("quadratic spaces validate their data") {
  CHECK_THROWS_AS(QuadraticSpace(QMat{{Rat(0), Rat(1)}, {Rat(0), Rat(0)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(QuadraticSpace(QMat::identity(2), {1}), std::invalid_argument);
  QuadraticSpace q(diag({Rat(1), Rat(2)}), {0, 0});
  CHECK(q.dimension() == 2);
  CHECK(q.form(QVec{Rat(1), Rat(1)}, QVec{Rat(1), Rat(-1)}) == -1);
  CHECK(q.q(QVec{Rat(1), Rat(1)}) == 3);
  CHECK(q.nondegenerate());
  CHECK_FALSE(QuadraticSpace(diag({Rat(1), Rat(0)})).nondegenerate());
}

TEST_CASE("the extended lattice frames the form with an isotropic pair") {
  MukaiLattice lat = mukai(QMat{{Rat(1)}});
  QMat want{{Rat(0), Rat(0), Rat(-1)},
            {Rat(0), Rat(1), Rat(0)},
            {Rat(-1), Rat(0), Rat(0)}};
  CHECK(lat.space.gram == want);
  CHECK(lat.alpha_index == 0);
  CHECK(lat.beta_index == 2);
  CHECK(lat.space.grading == std::vector<int>{-2, 0, 2});
  CHECK(signature(lat.space.gram) == Signature{2, 1, 0});

  QVec alpha = unit_vec(3, 0), beta = unit_vec(3, 2);
  CHECK(lat.space.q(alpha) == 0);
  CHECK(lat.space.q(beta) == 0);
  CHECK(lat.space.form(alpha, beta) == -1);
  CHECK(lat.space.form(alpha, unit_vec(3, 1)) == 0);
  CHECK(lat.middle() == QMat{{Rat(1)}});
}

TEST_CASE("signature moves from (3,19) to (4,20)") {
  auto d = std::vector<Rat>(22, Rat(-1));
  d[0] = d[1] = d[2] = Rat(1);
  MukaiLattice lat = mukai(diag(d));
  CHECK(signature(lat.space.gram) == Signature{4, 20, 0});
}

TEST_CASE("the empty form extends to a pure hyperbolic plane") {
  MukaiLattice lat = mukai(QMat(0, 0));
  CHECK(lat.space.dimension() == 2);
  QMat want{{Rat(0), Rat(-1)}, {Rat(-1), Rat(0)}};
  CHECK(lat.space.gram == want);
  CHECK(signature(lat.space.gram) == Signature{1, 1, 0});
  CHECK(lat.middle() == QMat(0, 0));
}

TEST_CASE("extension round-trips and rejects bad forms") {
  Rng rng(0x6d756b61);
  QMat b(3, 3);
  do {
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) b(i, j) = b(j, i) = rng.rat_in(4);
  } while (determinant(b) == 0);
  CHECK(mukai(b).middle() == b);

  CHECK_THROWS_AS(mukai(diag({Rat(1), Rat(0)})), std::invalid_argument);
  CHECK_THROWS_AS(mukai(QMat{{Rat(0), Rat(1)}, {Rat(0), Rat(0)}}), std::invalid_argument);
}

TEST_CASE("reflections follow the two-term formula") {
  QuadraticSpace q(QMat::identity(2));
  QVec u{Rat(1), Rat(-1)};
  CHECK(reflection(u, QVec{Rat(1), Rat(0)}, q) == QVec{Rat(0), Rat(1)});
  CHECK(reflection(u, QVec{Rat(1), Rat(1)}, q) == QVec{Rat(1), Rat(1)});  // u-perp
  CHECK(reflection(u, u, q) == Rat(-1) * u);

  QMat r = reflection_matrix(u, q);
  CHECK(r.transpose() * q.gram * r == q.gram);
  for (const QVec& z : {QVec{Rat(2), Rat(3)}, QVec{Rat(-1), Rat(5)}})
    CHECK(r.apply(z) == reflection(u, z, q));

  QuadraticSpace hyp(QMat{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}});
  CHECK_THROWS_AS(reflection(unit_vec(2, 0), unit_vec(2, 1), hyp), std::invalid_argument);
  CHECK_THROWS_AS(reflection_matrix(unit_vec(2, 0), hyp), std::invalid_argument);
}

TEST_CASE("matching bases cancel with the identity") {
  QuadraticSpace q(diag({Rat(1), Rat(2), Rat(-1)}));
  auto e = standard_basis(3);
  WittResult w = witt_cancel_equivariant(q, e, e, 3, {});
  CHECK(w.isometry == QMat::identity(3));
  CHECK(w.mirrors.empty());
  CHECK(w.complement_map.rows() == 0);
}

TEST_CASE("a sign flip needs exactly one reflection") {
  QuadraticSpace q(diag({Rat(1), Rat(1), Rat(2)}));
  auto e = standard_basis(3);
  auto f = e;
  f[0] = Rat(-1) * e[0];
  WittResult w = witt_cancel_equivariant(q, e, f, 1, {});
  REQUIRE(w.mirrors.size() == 1);
  CHECK(w.mirrors[0] == QVec{Rat(2), Rat(0), Rat(0)});  // parallel to e_1
  CHECK(w.isometry == diag({Rat(-1), Rat(1), Rat(1)}));
  CHECK(w.isometry.transpose() * q.gram * w.isometry == q.gram);
  CHECK(w.complement_map == QMat::identity(2));

  // complement Gram matrices are congruent through the restriction
  QMat comp_gram = diag({Rat(1), Rat(2)});
  CHECK(w.complement_map.transpose() * comp_gram * w.complement_map == comp_gram);
}

TEST_CASE("isotropic difference falls back to the two-step composite") {
  QuadraticSpace q(diag({Rat(1), Rat(-1), Rat(1)}));
  auto e = standard_basis(3);
  QVec f1{Rat(1), Rat(1), Rat(1)};
  QVec f2{Rat(1), Rat(2), Rat(1)};
  QVec f3{Rat(1), Rat(0), Rat(-1)};
  std::vector<QVec> f = {f1, f2, f3};
  CHECK(q.q(e[0] - f1) == 0);  // forces the fallback branch

  WittResult w = witt_cancel_equivariant(q, e, f, 1, {});
  REQUIRE(w.mirrors.size() == 2);
  CHECK(w.mirrors[0] == QVec{Rat(2), Rat(1), Rat(1)});  // e_1 + f_1
  CHECK(w.mirrors[1] == f1);
  CHECK(w.isometry.apply(e[0]) == f1);
  CHECK(w.isometry.transpose() * q.gram * w.isometry == q.gram);

  // the recorded mirrors rebuild the map
  QMat rebuilt = QMat::identity(3);
  for (const QVec& u : w.mirrors) rebuilt = reflection_matrix(u, q) * rebuilt;
  CHECK(rebuilt == w.isometry);

  // restriction between complements is a congruence of their Gram matrices
  QMat e_comp = diag({Rat(-1), Rat(1)});
  QMat f_comp(2, 2);
  f_comp(0, 0) = q.q(f2);
  f_comp(1, 1) = q.q(f3);
  CHECK(w.complement_map.transpose() * f_comp * w.complement_map == e_comp);
}

TEST_CASE("the cancellation commutes with a coordinate-negating action") {
  QuadraticSpace q(diag({Rat(1), Rat(1), Rat(2)}));
  QMat g = diag({Rat(1), Rat(1), Rat(-1)});
  auto e = standard_basis(3);
  auto f = e;
  f[0] = Rat(-1) * e[0];
  WittResult w = witt_cancel_equivariant(q, e, f, 1, {g});
  CHECK(bracket(w.isometry, g).is_zero());
  CHECK(w.isometry.apply(e[0]) == f[0]);
}

TEST_CASE("every precondition failure is reported individually") {
  auto e3 = standard_basis(3);
  CHECK_THROWS_WITH_AS(
      witt_cancel_equivariant(QuadraticSpace(diag({Rat(1), Rat(0), Rat(1)})), e3, e3, 0, {}),
      "form is degenerate", std::invalid_argument);

  QuadraticSpace q(diag({Rat(1), Rat(2), Rat(1)}));
  auto short_list = std::vector<QVec>(e3.begin(), e3.begin() + 2);
  CHECK_THROWS_WITH_AS(witt_cancel_equivariant(q, short_list, e3, 0, {}),
                       "e basis has the wrong size", std::invalid_argument);

  auto dependent = e3;
  dependent[1] = e3[0];
  CHECK_THROWS_WITH_AS(witt_cancel_equivariant(q, dependent, e3, 0, {}),
                       "e basis is not a basis", std::invalid_argument);

  auto slanted = e3;
  slanted[1] = e3[0] + e3[1];
  CHECK_THROWS_WITH_AS(witt_cancel_equivariant(q, e3, slanted, 0, {}),
                       "f basis is not orthogonal", std::invalid_argument);

  CHECK_THROWS_WITH_AS(witt_cancel_equivariant(q, e3, e3, 4, {}),
                       "prefix count out of range", std::invalid_argument);

  auto swapped = std::vector<QVec>{e3[1], e3[0], e3[2]};
  CHECK_THROWS_WITH_AS(witt_cancel_equivariant(q, e3, swapped, 1, {}),
                       "prefix values disagree at index 0", std::invalid_argument);

  CHECK_THROWS_WITH_AS(witt_cancel_equivariant(q, e3, e3, 0, {Rat(2) * QMat::identity(3)}),
                       "action is not by isometries", std::invalid_argument);

  QMat flip = diag({Rat(-1), Rat(1), Rat(1)});
  CHECK_THROWS_WITH_AS(witt_cancel_equivariant(q, e3, e3, 1, {flip}),
                       "prefix vector is not fixed by the action", std::invalid_argument);
}

TEST_CASE("random reflected bases cancel exactly") {
  Rng rng(0x77697474);
  for (int trial = 0; trial < 25; ++trial) {
    int n = int(rng.uniform(2, 4));
    auto d = std::vector<Rat>(size_t(n));
    for (Rat& x : d)
      do {
        x = rng.rat_in(3);
      } while (x == 0);
    QuadraticSpace q(diag(d));
    auto e = standard_basis(n);

    QMat map = QMat::identity(n);
    int twists = int(rng.uniform(2, 3));
    for (int t = 0; t < twists; ++t) {
      QVec u = zero_vec(n);
      do {
        for (size_t i = 0; i < u.size(); ++i) u[i] = rng.rat_in(2);
      } while (q.q(u) == 0);
      map = reflection_matrix(u, q) * map;
    }
    auto f = std::vector<QVec>();
    for (const QVec& v : e) f.push_back(map.apply(v));

    WittResult w = witt_cancel_equivariant(q, e, f, n, {});
    CHECK(w.isometry.transpose() * q.gram * w.isometry == q.gram);
    for (int i = 0; i < n; ++i) CHECK(w.isometry.apply(e[size_t(i)]) == f[size_t(i)]);
    CHECK(is_similitude(w.isometry, q) == Rat(1));
  }
}

TEST_CASE("random equivariant cancellations commute with the group") {
  Rng rng(0x65717569);
  QMat g = diag({Rat(1), Rat(1), Rat(-1), Rat(-1)});
  for (int trial = 0; trial < 15; ++trial) {
    auto d = std::vector<Rat>(4);
    for (Rat& x : d)
      do {
        x = rng.rat_in(3);
      } while (x == 0);
    QuadraticSpace q(diag(d));
    auto e = standard_basis(4);

    // one mirror fixed by g (front support), one anti-fixed (back support)
    QVec w_fix = zero_vec(4), w_move = zero_vec(4);
    do {
      w_fix[0] = rng.rat_in(2);
      w_fix[1] = rng.rat_in(2);
    } while (q.q(w_fix) == 0);
    do {
      w_move[2] = rng.rat_in(2);
      w_move[3] = rng.rat_in(2);
    } while (q.q(w_move) == 0);
    QMat map = reflection_matrix(w_move, q) * reflection_matrix(w_fix, q);
    auto f = std::vector<QVec>();
    for (const QVec& v : e) f.push_back(map.apply(v));

    WittResult w = witt_cancel_equivariant(q, e, f, 2, {g});
    CHECK(bracket(w.isometry, g).is_zero());
    for (int i = 0; i < 2; ++i) CHECK(w.isometry.apply(e[size_t(i)]) == f[size_t(i)]);
    CHECK(w.isometry.transpose() * q.gram * w.isometry == q.gram);
  }
}

TEST_CASE("similitude factors are recovered") {
  QuadraticSpace q(QMat::identity(2));
  CHECK(is_similitude(QMat::identity(2), q) == Rat(1));
  CHECK(is_similitude(Rat(2) * QMat::identity(2), q) == Rat(1, 4));
  QMat r = reflection_matrix(QVec{Rat(1), Rat(-1)}, q);
  CHECK(is_similitude(r, q) == Rat(1));
  CHECK(is_similitude(diag({Rat(1), Rat(2)}), q) == std::nullopt);
  CHECK(is_similitude(QMat::zero(2, 2), q) == std::nullopt);

  QuadraticSpace hyp(QMat{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}});
  CHECK(is_similitude(diag({Rat(2), Rat(1)}), hyp) == Rat(1, 2));
}
