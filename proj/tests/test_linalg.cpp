#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lefkit/linalg.hpp"

using namespace lefkit;

namespace {

QMat random_mat(Rng& rng, int rows, int cols, long bound) {
  QMat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = rng.rat_in(bound);
  return m;
}

}  // namespace

TEST_CASE("rref of an invertible matrix is the identity") {
  QMat m{{Rat(2), Rat(1)}, {Rat(1), Rat(1)}};
  RrefResult r = rref(m);
  CHECK(r.rank == 2);
  CHECK(r.mat == QMat::identity(2));
  CHECK(r.pivots == std::vector<int>{0, 1});
}

TEST_CASE("rank plus nullity equals the column count") {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    int rows = int(rng.uniform(1, 8));
    int cols = int(rng.uniform(1, 8));
    QMat m = random_mat(rng, rows, cols, 5);
    int rk = rank(m);
    auto ker = kernel_basis(m);
    CHECK(rk + int(ker.size()) == cols);
    for (const QVec& v : ker) CHECK(is_zero(m.apply(v)));
  }
}

TEST_CASE("solve returns a particular solution or reports inconsistency") {
  QMat a{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
  CHECK(!solve(a, QVec{Rat(1), Rat(3)}).has_value());
  auto x = solve(a, QVec{Rat(1), Rat(2)});
  REQUIRE(x.has_value());
  CHECK(a.apply(*x) == QVec{Rat(1), Rat(2)});
}

TEST_CASE("inverse of random invertible matrices") {
  Rng rng(11);
  int done = 0;
  while (done < 10) {
    int n = int(rng.uniform(1, 6));
    QMat m = random_mat(rng, n, n, 4);
    auto inv = inverse(m);
    if (!inv.has_value()) continue;
    CHECK(m * *inv == QMat::identity(n));
    CHECK(*inv * m == QMat::identity(n));
    ++done;
  }
  CHECK(!inverse(QMat{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}).has_value());
}

TEST_CASE("determinant matches eliminated diagonal") {
  QMat m{{Rat(2), Rat(3)}, {Rat(5), Rat(7)}};
  CHECK(determinant(m) == Rat(-1));
  CHECK(determinant(QMat::identity(4)) == Rat(1));
  CHECK(determinant(QMat{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}) == Rat(0));
}

TEST_CASE("commutant of the empty set is the full matrix space") {
  auto basis = commutant(3, {});
  CHECK(basis.size() == 9);
}

TEST_CASE("commutant of a distinct-eigenvalue diagonal matrix is diagonal") {
  QMat d{{Rat(1), Rat(0)}, {Rat(0), Rat(2)}};
  auto basis = commutant(2, {d});
  CHECK(basis.size() == 2);
  for (const QMat& x : basis) {
    CHECK(x(0, 1) == 0);
    CHECK(x(1, 0) == 0);
    CHECK(bracket(x, d).is_zero());
  }
}

TEST_CASE("commutant contains the identity and is closed under products") {
  QMat g{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};  // order-two permutation
  auto basis = commutant(2, {g});
  CHECK(basis.size() == 2);
  Subspace span = Subspace::from_vectors(
      {flatten(basis[0]), flatten(basis[1])}, 4);
  CHECK(span.contains(flatten(QMat::identity(2))));
  for (const QMat& x : basis)
    for (const QMat& y : basis) CHECK(span.contains(flatten(x * y)));
}

TEST_CASE("signature of simple diagonal forms") {
  CHECK(signature(QMat{{Rat(1), Rat(0), Rat(0)},
                       {Rat(0), Rat(1), Rat(0)},
                       {Rat(0), Rat(0), Rat(-1)}}) == Signature{2, 1, 0});
  CHECK(signature(QMat{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}}) == Signature{1, 1, 0});
  CHECK(signature(QMat{{Rat(0), Rat(0)}, {Rat(0), Rat(3)}}) == Signature{1, 0, 1});
}

TEST_CASE("signature is a congruence invariant") {
  Rng rng(13);
  QMat gram{{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(-2), Rat(0)}, {Rat(0), Rat(0), Rat(0)}};
  Signature expected{1, 1, 1};
  int done = 0;
  while (done < 5) {
    QMat s = random_mat(rng, 3, 3, 3);
    if (!inverse(s).has_value()) continue;
    CHECK(signature(s.transpose() * gram * s) == expected);
    ++done;
  }
}

TEST_CASE("subspace canonical form, sum, and intersection") {
  Subspace u = Subspace::from_vectors({{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}}, 3);
  Subspace w = Subspace::from_vectors({{Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}}, 3);
  CHECK(u.dim() == 2);
  CHECK(u.sum(w).dim() == 3);
  Subspace inter = u.intersect(w);
  CHECK(inter.dim() == 1);
  CHECK(inter.contains(QVec{Rat(0), Rat(5), Rat(0)}));

  // same span, different spanning sets
  Subspace u2 = Subspace::from_vectors({{Rat(2), Rat(3), Rat(0)}, {Rat(1), Rat(-1), Rat(0)}}, 3);
  CHECK(u2 == u);
}

TEST_CASE("zassenhaus intersection agrees with a dimension count") {
  Rng rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 6;
    std::vector<QVec> uv, wv;
    for (int i = 0; i < 3; ++i) {
      QVec a = zero_vec(n), b = zero_vec(n);
      for (int j = 0; j < n; ++j) {
        a[size_t(j)] = rng.rat_in(3);
        b[size_t(j)] = rng.rat_in(3);
      }
      uv.push_back(a);
      wv.push_back(b);
    }
    Subspace u = Subspace::from_vectors(uv, n);
    Subspace w = Subspace::from_vectors(wv, n);
    Subspace s = u.sum(w), i = u.intersect(w);
    CHECK(s.dim() + i.dim() == u.dim() + w.dim());
    for (const QVec& v : i.basis()) {
      CHECK(u.contains(v));
      CHECK(w.contains(v));
    }
  }
}

TEST_CASE("subspace coordinates reproduce the vector") {
  Subspace u = Subspace::from_vectors({{Rat(1), Rat(2), Rat(0)}, {Rat(0), Rat(0), Rat(1)}}, 3);
  QVec v{Rat(2), Rat(4), Rat(-3)};
  auto c = u.coordinates(v);
  REQUIRE(c.has_value());
  QVec rebuilt = zero_vec(3);
  for (size_t i = 0; i < c->size(); ++i)
    for (size_t j = 0; j < 3; ++j) rebuilt[j] += (*c)[i] * u.basis()[i][j];
  CHECK(rebuilt == v);
  CHECK(!u.coordinates(QVec{Rat(1), Rat(0), Rat(0)}).has_value());
}

TEST_CASE("integer span tracks rational span") {
  Rng rng(19);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 8;
    IntSpan span(n);
    std::vector<QVec> vecs;
    for (int i = 0; i < 12; ++i) {
      QVec v = zero_vec(n);
      for (int j = 0; j < n; ++j) v[size_t(j)] = rng.rat_in(4);
      vecs.push_back(v);
    }
    int dim_incremental = 0;
    for (const QVec& v : vecs)
      if (span.add(v)) ++dim_incremental;
    Subspace reference = Subspace::from_vectors(vecs, n);
    CHECK(span.dim() == dim_incremental);
    CHECK(span.dim() == reference.dim());
    for (const QVec& v : vecs) CHECK(span.contains(v));
  }
}
