#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "lefkit/graded.hpp"
#include "lefkit/subsets.hpp"

using namespace lefkit;

namespace {

// Algebra automorphism of an exterior algebra induced by a permutation of the
// generators: e_S -> sign * e_{p(S)}.
QMat exterior_permutation(int n, const std::vector<int>& p) {
  SubsetBasis b = SubsetBasis::make(n);
  QMat m = QMat::zero(int(b.sets.size()), int(b.sets.size()));
  for (int j = 0; j < int(b.sets.size()); ++j) {
    std::vector<int> image;
    for (int x : b.sets[size_t(j)]) image.push_back(p[size_t(x)]);
    int sign = 1;
    for (size_t a = 0; a < image.size(); ++a)
      for (size_t c = a + 1; c < image.size(); ++c)
        if (image[a] > image[c]) sign = -sign;
    std::sort(image.begin(), image.end());
    m(b.at(image), j) = sign;
  }
  return m;
}

QMat hyperbolic2() {
  QMat b = QMat::zero(2, 2);
  b(0, 1) = 1;
  b(1, 0) = 1;
  return b;
}

}  // namespace

TEST_CASE("exterior algebra of a 4-dimensional space has binomial dimensions") {
  GradedAlgebra r = exterior_algebra(4);
  CHECK(r.total_dim() == 16);
  CHECK(r.top() == 4);
  CHECK(r.depth() == 2);
  auto dims = r.space().dim_by_degree();
  CHECK(dims[0] == 1);
  CHECK(dims[1] == 4);
  CHECK(dims[2] == 6);
  CHECK(dims[3] == 4);
  CHECK(dims[4] == 1);
}

TEST_CASE("exterior generators anticommute and square to zero") {
  GradedAlgebra r = exterior_algebra(3);
  const int n = r.total_dim();
  QVec e1 = unit_vec(n, 1), e2 = unit_vec(n, 2);
  QVec a = r.mul(e1, e2), b = r.mul(e2, e1);
  CHECK(a == QVec(-1 * b));
  CHECK(!is_zero(a));
  CHECK(is_zero(r.mul(e1, e1)));
}

TEST_CASE("grading operator is the diagonal of degrees") {
  GradedAlgebra r = exterior_algebra(2);
  QMat h = grading_operator(r.space());
  CHECK(h(0, 0) == 0);
  CHECK(h(1, 1) == 1);
  CHECK(h(2, 2) == 1);
  CHECK(h(3, 3) == 2);
  QMat hs = grading_operator(r.shifted_space());
  CHECK(hs(0, 0) == -1);
  CHECK(hs(3, 3) == 1);
}

TEST_CASE("tensor of two exterior lines matches the exterior plane") {
  GradedAlgebra line = exterior_algebra(1);
  GradedAlgebra t = tensor(line, line);
  GradedAlgebra plane = exterior_algebra(2);
  CHECK(t.total_dim() == 4);
  CHECK(t.space().dim_by_degree() == plane.space().dim_by_degree());
  // Basis of t: 1*1, 1*f, e*1, e*f at indices 0..3; the Koszul sign makes
  // (1*f)(e*1) = -(e*f).
  QVec f = unit_vec(4, 1), e = unit_vec(4, 2);
  QVec ef = t.mul(e, f), fe = t.mul(f, e);
  CHECK(ef == QVec(-1 * fe));
  CHECK(ef == unit_vec(4, 3));
  // Odd generators square to zero on both sides of the identification.
  CHECK(is_zero(t.mul(e, e)));
  CHECK(is_zero(t.mul(f, f)));
}

TEST_CASE("tensor with the trivial algebra changes nothing") {
  GradedAlgebra r = surface_ring(QMat::identity(2));
  GradedAlgebra k = exterior_algebra(0);
  GradedAlgebra t = tensor(r, k);
  REQUIRE(t.total_dim() == r.total_dim());
  CHECK(t.space().degrees == r.space().degrees);
  for (int i = 0; i < r.total_dim(); ++i)
    for (int j = 0; j < r.total_dim(); ++j) CHECK(t.mul_basis(i, j) == r.mul_basis(i, j));
}

TEST_CASE("tensor is associative on the nose for these conventions") {
  GradedAlgebra a = exterior_algebra(1);
  GradedAlgebra bc = tensor(a, tensor(a, a));
  GradedAlgebra ab_c = tensor(tensor(a, a), a);
  REQUIRE(bc.total_dim() == ab_c.total_dim());
  CHECK(bc.space().degrees == ab_c.space().degrees);
  for (int i = 0; i < bc.total_dim(); ++i)
    for (int j = 0; j < bc.total_dim(); ++j) CHECK(bc.mul_basis(i, j) == ab_c.mul_basis(i, j));
}

TEST_CASE("surface ring with a rank-one form is the truncated polynomial ring") {
  GradedAlgebra r = surface_ring(QMat::identity(1));
  REQUIRE(r.total_dim() == 3);
  // h * h = vol, h * vol = 0.
  QVec h = unit_vec(3, 1);
  CHECK(r.mul(h, h) == unit_vec(3, 2));
  CHECK(is_zero(r.mul(h, unit_vec(3, 2))));
  CHECK(r.top() == 4);
  CHECK(r.depth() == 2);
}

TEST_CASE("hyperbolic surface ring multiplies as e f = vol with square-zero e, f") {
  GradedAlgebra r = surface_ring(hyperbolic2());
  QVec e = unit_vec(4, 1), f = unit_vec(4, 2);
  CHECK(r.mul(e, f) == unit_vec(4, 3));
  CHECK(is_zero(r.mul(e, e)));
  CHECK(is_zero(r.mul(f, f)));
}

TEST_CASE("surface ring of a large form has the expected size") {
  QMat b = QMat::identity(22);
  for (int i = 3; i < 22; ++i) b(i, i) = -1;
  GradedAlgebra r = surface_ring(b);
  CHECK(r.total_dim() == 24);
  CHECK(r.space().dim(2) == 22);
}

TEST_CASE("degenerate or asymmetric forms are rejected") {
  CHECK_THROWS(surface_ring(QMat::zero(2, 2)));
  QMat asym = QMat::zero(2, 2);
  asym(0, 1) = 1;
  CHECK_THROWS(surface_ring(asym));
}

TEST_CASE("hard Lefschetz holds for the volume form on the exterior plane") {
  GradedAlgebra r = exterior_algebra(2);
  QVec omega = unit_vec(4, 3);
  CHECK(has_hard_lefschetz(r.mult_operator(omega), r.shifted_space()));
  CHECK_FALSE(has_hard_lefschetz(QMat::zero(4, 4), r.shifted_space()));
}

TEST_CASE("hard Lefschetz for a surface class detects isotropy") {
  QMat b = QMat::identity(2);
  b(1, 1) = -1;
  GradedAlgebra r = surface_ring(b);
  QVec good = unit_vec(4, 1);           // b(h1, h1) = 1
  QVec isotropic = zero_vec(4);         // h1 + h2 has b = 0
  isotropic[1] = 1;
  isotropic[2] = 1;
  CHECK(has_hard_lefschetz(r.mult_operator(good), r.shifted_space()));
  CHECK_FALSE(has_hard_lefschetz(r.mult_operator(isotropic), r.shifted_space()));
}

TEST_CASE("operators of the wrong degree are rejected by the Lefschetz test") {
  GradedAlgebra r = exterior_algebra(2);
  CHECK_THROWS(has_hard_lefschetz(QMat::identity(4), r.shifted_space()));
}

TEST_CASE("degree-2 span of an exterior plane is the unit plus volume") {
  Subspace v = verbitsky(exterior_algebra(2));
  CHECK(v.dim() == 2);
  CHECK(v.contains(unit_vec(4, 0)));
  CHECK(v.contains(unit_vec(4, 3)));
}

TEST_CASE("degree-2 span of an exterior line is only the unit") {
  CHECK(verbitsky(exterior_algebra(1)).dim() == 1);
}

TEST_CASE("degree-2 span of a surface ring is everything") {
  QMat b = QMat::identity(3);
  GradedAlgebra r = surface_ring(b);
  CHECK(verbitsky(r).dim() == 5);
}

TEST_CASE("subalgebra induced on the degree-2 span multiplies consistently") {
  GradedAlgebra r = exterior_algebra(4);
  SubAlgebra sh = subalgebra_from(r, verbitsky(r));
  // 1, the six 2-forms, and the top form: the even rows generated by degree 2.
  CHECK(sh.algebra.total_dim() == 8);
  CHECK(sh.algebra.space().dim(0) == 1);
  CHECK(sh.algebra.space().dim(2) == 6);
  CHECK(sh.algebra.space().dim(4) == 1);
  // Embedding columns reproduce products: check (e1^e2)(e3^e4) = top.
  const int amb = r.total_dim();
  auto col = [&](int j) {
    QVec v = zero_vec(amb);
    for (int i = 0; i < amb; ++i) v[size_t(i)] = sh.embedding(i, j);
    return v;
  };
  QVec prod = r.mul(col(1), col(6));
  bool found = false;
  for (int j = 0; j < sh.algebra.total_dim(); ++j) found = found || col(j) == prod;
  CHECK(found);
}

TEST_CASE("non-graded spans are rejected as subalgebras") {
  GradedAlgebra r = exterior_algebra(2);
  QVec mixed = unit_vec(4, 0) + unit_vec(4, 1);  // 1 + e1 spans nothing graded
  CHECK_THROWS(subalgebra_from(r, Subspace::from_vectors({mixed}, 4)));
}

TEST_CASE("spans that are not closed under products are rejected") {
  GradedAlgebra r = exterior_algebra(2);
  // 1 and e1 are graded but e1 * e2 escapes; use 1, e1, e2 with missing top.
  Subspace s = Subspace::from_vectors({unit_vec(4, 0), unit_vec(4, 1), unit_vec(4, 2)}, 4);
  CHECK_THROWS(subalgebra_from(r, s));
}

TEST_CASE("trivial group leaves the whole algebra invariant") {
  GradedAlgebra r = surface_ring(QMat::identity(2));
  auto act = make_action(r, FiniteGroup::cyclic(1), {QMat::identity(4)});
  SubAlgebra inv = invariants(r, act);
  CHECK(inv.algebra.total_dim() == 4);
}

TEST_CASE("sign flip on odd degrees keeps the even part") {
  GradedAlgebra r = exterior_algebra(4);
  QMat flip = QMat::identity(16);
  for (int i = 0; i < 16; ++i)
    if (r.space().degrees[size_t(i)] % 2 == 1) flip(i, i) = -1;
  auto act = make_action(r, FiniteGroup::cyclic(2), {QMat::identity(16), flip});
  SubAlgebra inv = invariants(r, act);
  CHECK(inv.algebra.total_dim() == 8);
  CHECK(inv.algebra.space().dim(0) == 1);
  CHECK(inv.algebra.space().dim(2) == 6);
  CHECK(inv.algebra.space().dim(4) == 1);
}

TEST_CASE("swapping the two planes of a 4-dimensional exterior algebra") {
  GradedAlgebra r = exterior_algebra(4);
  QMat swap = exterior_permutation(4, {2, 3, 0, 1});
  auto act = make_action(r, FiniteGroup::cyclic(2), {QMat::identity(16), swap});
  SubAlgebra inv = invariants(r, act);
  // Degreewise fixed dimensions of the plane swap: 1, 2, 2, 2, 1.
  CHECK(inv.algebra.total_dim() == 8);
  CHECK(inv.algebra.space().dim(1) == 2);
  CHECK(inv.algebra.space().dim(2) == 2);
}

TEST_CASE("swap of two surface factors fixes the symmetric square") {
  GradedAlgebra s = surface_ring(QMat::identity(3));
  GradedAlgebra r = tensor(s, s);
  const int n = r.total_dim();
  REQUIRE(n == 25);
  // All degrees are even, so the braiding carries no sign.
  QMat swap = QMat::zero(n, n);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) swap(j * 5 + i, i * 5 + j) = 1;
  auto act = make_action(r, FiniteGroup::cyclic(2), {QMat::identity(n), swap});
  SubAlgebra inv = invariants(r, act);
  CHECK(inv.algebra.total_dim() == 15);
  auto dims = inv.algebra.space().dim_by_degree();
  CHECK(dims[0] == 1);
  CHECK(dims[2] == 3);
  CHECK(dims[4] == 7);
  CHECK(dims[6] == 3);
  CHECK(dims[8] == 1);
}

TEST_CASE("actions that break multiplicativity are rejected") {
  GradedAlgebra r = exterior_algebra(2);
  // Scaling e1 only: preserves grading and unit but not e1*e2 -> 2 e1 ^ e2.
  QMat bad = QMat::identity(4);
  bad(1, 1) = 2;
  CHECK_THROWS(make_action(r, FiniteGroup::cyclic(2), {QMat::identity(4), bad}));
}

TEST_CASE("structure tables failing associativity or the unit law are rejected") {
  GradedSpace space;
  space.degrees = {0, 2};
  std::vector<std::vector<SparseVec>> table(2, std::vector<SparseVec>(2));
  table[0][0] = {{0, Rat(1)}};
  table[0][1] = {{1, Rat(2)}};  // 1 * x = 2x breaks the unit law
  table[1][0] = {{1, Rat(1)}};
  CHECK_THROWS(GradedAlgebra(space, table, 0));
}

TEST_CASE("group construction from permutations and tables") {
  FiniteGroup s3 = FiniteGroup::symmetric3();
  CHECK(s3.order() == 6);
  CHECK(s3.identity() == 0);
  for (int a = 0; a < 6; ++a) CHECK(s3.mul(a, s3.inverse(a)) == s3.identity());
  FiniteGroup z4 = FiniteGroup::cyclic(4);
  CHECK(z4.mul(3, 2) == 1);
  CHECK(z4.inverse(1) == 3);
  // A non-associative Latin square is rejected.
  CHECK_THROWS(FiniteGroup::from_table({{0, 1, 2, 3, 4},
                                        {1, 0, 3, 4, 2},
                                        {2, 4, 0, 1, 3},
                                        {3, 2, 4, 0, 1},
                                        {4, 3, 1, 2, 0}}));
}

TEST_CASE("representation validation catches non-homomorphisms") {
  QMat flip = QMat::identity(2);
  flip(1, 1) = -1;
  CHECK_NOTHROW(make_rep(FiniteGroup::cyclic(2), {QMat::identity(2), flip}));
  QMat notinv = QMat::identity(2);
  notinv(0, 1) = 1;
  CHECK_THROWS(make_rep(FiniteGroup::cyclic(2), {QMat::identity(2), notinv}));
}
