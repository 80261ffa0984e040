#include "lefkit/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <ostream>
#include <string>
#include <vector>

#include "lefkit/clifford.hpp"
#include "lefkit/groupalg.hpp"
#include "lefkit/involution.hpp"
#include "lefkit/llv.hpp"
#include "lefkit/poly.hpp"
#include "lefkit/quadform.hpp"
#include "lefkit/spinor.hpp"
#include "lefkit/subsets.hpp"

namespace lefkit {
namespace {

struct Checker {
  std::ostream& out;
  int failures = 0;

  void fail(const char* file, int line, const std::string& msg) {
    out << "[FAIL] " << file << ":" << line << " " << msg << "\n";
    ++failures;
  }
};

#define ACC_CHECK(cond, msg)                        \
  do {                                              \
    if (!(cond)) c.fail(__FILE__, __LINE__, (msg)); \
  } while (0)

#define ACC_REQUIRE(cond, msg)                      \
  do {                                              \
    if (!(cond)) {                                  \
      c.fail(__FILE__, __LINE__, (msg));            \
      return;                                       \
    }                                               \
  } while (0)

// Failure accumulator for loops with many randomized cases, so a systematic
// breakage reports one line instead of hundreds.
struct Tally {
  int bad = 0;
  std::string first;

  void note(bool ok, const std::string& what) {
    if (ok) return;
    if (bad == 0) first = what;
    ++bad;
  }
  std::string report(const std::string& claim) const {
    return claim + " (" + std::to_string(bad) + " failing, first: " + first + ")";
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

QMat elem(int n, int i, int j) {
  QMat m = QMat::zero(n, n);
  m(i, j) = 1;
  return m;
}

GradedAlgebra x3_ring() { return surface_ring(QMat{{Rat(1)}}); }

// Gram matrix of the Mukai pairing in the basis (1, h_1..h_m, vol):
// hyperbolic plane on (1, vol) with b(1, vol) = -1, b on the middle.
QMat mukai_gram(const QMat& b) {
  const int m = b.rows();
  QMat g = QMat::zero(m + 2, m + 2);
  g(0, m + 1) = -1;
  g(m + 1, 0) = -1;
  g.set_block(1, 1, b);
  return g;
}

// Exterior extension of the permutation v_i -> v_{p[i]} on the subset basis.
QMat exterior_permutation(int n, const std::vector<int>& p) {
  SubsetBasis b = SubsetBasis::make(n);
  QMat m = QMat::zero(int(b.sets.size()), int(b.sets.size()));
  for (int j = 0; j < int(b.sets.size()); ++j) {
    std::vector<int> image;
    for (int x : b.sets[size_t(j)]) image.push_back(p[size_t(x)]);
    int sign = 1;
    for (size_t a = 0; a < image.size(); ++a)
      for (size_t d = a + 1; d < image.size(); ++d)
        if (image[a] > image[d]) sign = -sign;
    std::sort(image.begin(), image.end());
    m(b.at(image), j) = sign;
  }
  return m;
}

// Full basis of so(V + V*) for the split form: gl elements, 2-vector corners,
// 2-form corners. Dimension n^2 + n(n-1) = n(2n-1).
std::vector<QMat> split_so_basis(int n) {
  std::vector<QMat> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.push_back(gl_embedding(elem(n, i, j)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      QMat a = elem(n, i, j) - elem(n, j, i);
      out.push_back(assemble_so({QMat::zero(n, n), a, QMat::zero(n, n)}));
      out.push_back(assemble_so({QMat::zero(n, n), QMat::zero(n, n), a}));
    }
  return out;
}

QMat random_trace_zero(int n, Rng& rng) {
  QMat a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = rng.rat_in(4);
  Rat diag(0);
  for (int i = 0; i + 1 < n; ++i) diag += a(i, i);
  a(n - 1, n - 1) = -diag;
  return a;
}

QMat random_invertible(int n, Rng& rng) {
  for (;;) {
    QMat p(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) p(i, j) = rng.rat_in(3);
    if (determinant(p) != 0) return p;
  }
}

Rat nonzero_rat(Rng& rng, long bound) {
  Rat x = rng.rat_in(bound);
  while (x == 0) x = rng.rat_in(bound);
  return x;
}

// The standard generators of the symmetric group on three letters in its
// two-dimensional irreducible representation, plus the invariant form.
const QMat kStdRot{{Rat(0), Rat(-1)}, {Rat(1), Rat(-1)}};
const QMat kStdFlip{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
const QMat kStdPairing{{Rat(2), Rat(1)}, {Rat(1), Rat(2)}};

// Action of g on V + V* for V = rho^n: rho on each copy, inverse transpose on
// the dual side.
QMat tilde_action(const QMat& rho, int n) {
  int k = rho.rows();
  QMat dual = inverse(rho).value().transpose();
  QMat out = QMat::zero(2 * k * n, 2 * k * n);
  for (int j = 0; j < n; ++j) {
    out.set_block(j * k, j * k, rho);
    out.set_block(k * n + j * k, k * n + j * k, dual);
  }
  return out;
}

bool skew_for(const MatrixLieAlgebra& g, const QMat& gram) {
  for (const QMat& x : g.basis())
    if (!(x.transpose() * gram + gram * x).is_zero()) return false;
  return true;
}

std::vector<int> sorted_ideal_dims(const MatrixLieAlgebra& g) {
  std::vector<int> dims;
  for (const MatrixLieAlgebra& i : minimal_ideals(g).ideals) dims.push_back(i.dim());
  std::sort(dims.begin(), dims.end());
  return dims;
}

// 1. The LLV algebra of an exterior algebra is the spin image of so(V + V*):
//    equality in rank 4, and the even-part sl2 ideal in rank 2.
void criterion_exterior_llv(Checker& c) {
  MatrixLieAlgebra g1 = llv_algebra(exterior_algebra(2));
  ACC_CHECK(g1.dim() == 3, "rank-2 LLV algebra has dimension 3");
  ACC_CHECK(is_jordan_lefschetz(g1), "rank-2 LLV algebra is graded in {-2, 0, 2}");

  SpinorContext ctx1(2);
  std::vector<QMat> images1;
  for (const QMat& x : split_so_basis(2)) images1.push_back(spinor_rep(x, ctx1));
  MatrixLieAlgebra so1 = MatrixLieAlgebra::from_span(4, images1);
  ACC_CHECK(so1.dim() == 6, "spin image of so(V + V*) has dimension 6 for the plane");
  bool inside = true;
  for (const QMat& x : g1.basis()) inside = inside && so1.contains(x);
  ACC_CHECK(inside, "rank-2 LLV algebra lies inside the spin image");
  IdealDecomposition dec = minimal_ideals(so1);
  ACC_CHECK(dec.ideals.size() == 2, "so(V + V*) of the plane splits into two ideals");
  bool is_ideal = false;
  for (const MatrixLieAlgebra& i : dec.ideals) is_ideal = is_ideal || i.span() == g1.span();
  ACC_CHECK(is_ideal, "rank-2 LLV algebra is one minimal ideal, strictly smaller than so(V + V*)");

  const auto start = std::chrono::steady_clock::now();
  MatrixLieAlgebra g2 = llv_algebra(exterior_algebra(4));
  const double elapsed = seconds_since(start);
  ACC_CHECK(g2.dim() == 28, "rank-4 LLV algebra has dimension 28");
  ACC_CHECK(is_jordan_lefschetz(g2), "rank-4 LLV algebra is graded in {-2, 0, 2}");

  SpinorContext ctx2(4);
  std::vector<QMat> images2;
  for (const QMat& x : split_so_basis(4)) images2.push_back(spinor_rep(x, ctx2));
  MatrixLieAlgebra so2 = MatrixLieAlgebra::from_span(16, images2);
  ACC_CHECK(so2.dim() == 28, "spin image of so(V + V*) has dimension 28 in rank 4");
  ACC_CHECK(g2.span() == so2.span(), "rank-4 LLV algebra equals the spin image of so(V + V*)");
  ACC_CHECK(elapsed < 60.0,
            "rank-4 LLV computation stays under 60 s (took " + std::to_string(elapsed) + " s)");
}

// 2. Surface rings: the LLV algebra is the full orthogonal algebra of the
//    Mukai pairing, through b2 = 22 with signature (3, 19).
void criterion_surface_llv(Checker& c) {
  {
    MatrixLieAlgebra g = llv_algebra(surface_ring(QMat::identity(3)));
    ACC_CHECK(g.dim() == 10, "b2 = 3 surface ring gives dimension 10 = dim so(5)");
    ACC_CHECK(is_jordan_lefschetz(g), "b2 = 3 algebra is graded in {-2, 0, 2}");
    ACC_CHECK(skew_for(g, mukai_gram(QMat::identity(3))), "b2 = 3 algebra is skew for the Mukai pairing");
  }
  {
    MatrixLieAlgebra g = llv_algebra(surface_ring(QMat::identity(5)));
    ACC_CHECK(g.dim() == 21, "b2 = 5 surface ring gives dimension 21 = dim so(7)");
    ACC_CHECK(skew_for(g, mukai_gram(QMat::identity(5))), "b2 = 5 algebra is skew for the Mukai pairing");
  }

  QMat b = QMat::identity(22);
  for (int i = 3; i < 22; ++i) b(i, i) = -1;
  const QMat mukai = mukai_gram(b);
  const Signature sig = signature(mukai);
  ACC_CHECK(sig.positive == 4 && sig.negative == 20 && sig.zero == 0,
            "Mukai pairing of the (3, 19) lattice has signature (4, 20)");

  const auto start = std::chrono::steady_clock::now();
  MatrixLieAlgebra g = llv_algebra(surface_ring(b), {}, mukai);
  const double elapsed = seconds_since(start);
  ACC_CHECK(g.dim() == 276, "b2 = 22 surface ring gives dimension 276 = dim so(24)");
  ACC_CHECK(is_jordan_lefschetz(g), "b2 = 22 algebra is graded in {-2, 0, 2}");
  ACC_CHECK(skew_for(g, mukai), "b2 = 22 algebra is skew for the Mukai pairing");
  ACC_CHECK(elapsed < 120.0,
            "b2 = 22 computation stays under 120 s (took " + std::to_string(elapsed) + " s)");
}

// 3. The LLV algebra of a tensor product is the block sum of the factors.
void criterion_tensor_llv(Checker& c) {
  TensorLlvReport a = verify_tensor_llv(x3_ring(), x3_ring());
  ACC_CHECK(a.dim_left == 3 && a.dim_right == 3, "each x^3 factor contributes an sl2");
  ACC_CHECK(a.dim_product == 6 && a.dims_add, "product of two x^3 rings has dimension 3 + 3");
  ACC_CHECK(a.block_embedding_equal, "x^3 (x) x^3 algebra is the block embedding of the factors");

  TensorLlvReport s = verify_tensor_llv(surface_ring(QMat::identity(3)), x3_ring());
  ACC_CHECK(s.dim_left == 10 && s.dim_right == 3, "surface and x^3 factors have dimensions 10 and 3");
  ACC_CHECK(s.dim_product == 13 && s.dims_add, "mixed product has dimension 10 + 3");
  ACC_CHECK(s.block_embedding_equal, "mixed product algebra is the block embedding of the factors");
}

// 4. Equivariant route: restricting the centralizer algebra of a swap action
//    to the invariant ring agrees with computing on the invariant ring
//    directly, and the common answer splits with an sl2 ideal.
void criterion_equivariant_llv(Checker& c) {
  GradedAlgebra r = exterior_algebra(4);
  QMat sigma = exterior_permutation(4, {2, 3, 0, 1});
  GroupActionOnAlgebra act = make_action(r, FiniteGroup::cyclic(2), {QMat::identity(16), sigma});

  MatrixLieAlgebra gpre = llv_pre_G(r, act);
  ACC_CHECK(gpre.dim() == 6, "swap-invariant part of the rank-4 LLV algebra has dimension 6");

  SubAlgebra sub = invariants(r, act);
  ACC_CHECK(sub.algebra.total_dim() == 8, "invariant ring of the swap has total dimension 8");

  MatrixLieAlgebra down = restrict(gpre, sub.embedding);
  MatrixLieAlgebra direct = llv_algebra(sub.algebra);
  ACC_CHECK(down.span() == direct.span(),
            "restricted equivariant algebra equals the invariant-ring LLV algebra");

  std::vector<int> down_dims = sorted_ideal_dims(down);
  std::vector<int> direct_dims = sorted_ideal_dims(direct);
  ACC_CHECK(down_dims == direct_dims, "minimal ideal dimensions agree between the two routes");
  ACC_CHECK(std::count(down_dims.begin(), down_dims.end(), 3) > 0,
            "the common decomposition contains an sl2 ideal");
}

// 5. Adjoint involutions of randomized nondegenerate forms: symmetric forms
//    classify as orthogonal with skew dimension n(n-1)/2, alternating forms as
//    symplectic with skew dimension n(n+1)/2, all of the first kind.
void criterion_involution_types(Checker& c) {
  auto rng = Rng(0x696e7479);
  Tally kind_ok, type_ok, skew_ok;
  int symmetric_cases = 0, alternating_cases = 0;
  for (int t = 0; t < 50; ++t) {
    const bool alternating = t % 2 == 1;
    const int n = alternating ? (t % 4 == 1 ? 2 : 4) : 2 + t % 3;
    QMat p = random_invertible(n, rng);
    QMat seed = QMat::zero(n, n);
    if (alternating) {
      for (int i = 0; i + 1 < n; i += 2) {
        seed(i, i + 1) = 1;
        seed(i + 1, i) = -1;
      }
      ++alternating_cases;
    } else {
      for (int i = 0; i < n; ++i) seed(i, i) = nonzero_rat(rng, 3);
      ++symmetric_cases;
    }
    const QMat form = p.transpose() * seed * p;

    AlgebraWithInvolution a = adjoint_involution(form);
    const std::string tag = "case " + std::to_string(t) + " (n = " + std::to_string(n) + ")";
    kind_ok.note(kind(a) == InvolutionKind::First, tag);
    type_ok.note(classify_type(a) ==
                     (alternating ? InvolutionType::Symplectic : InvolutionType::Orthogonal),
                 tag);
    const int expected = alternating ? n * (n + 1) / 2 : n * (n - 1) / 2;
    skew_ok.note(skew_and_derived(a).skew.dim() == expected, tag);
  }
  ACC_CHECK(symmetric_cases >= 20 && alternating_cases >= 20,
            "both shapes of form are well represented");
  ACC_CHECK(kind_ok.bad == 0, kind_ok.report("adjoint involutions are of the first kind"));
  ACC_CHECK(type_ok.bad == 0,
            type_ok.report("symmetric forms read orthogonal, alternating forms symplectic"));
  ACC_CHECK(skew_ok.bad == 0,
            skew_ok.report("skew dimension is n(n-1)/2 resp. n(n+1)/2"));
}

// 6. The spin representation preserves brackets on all of so(V + V*) and its
//    gl corner is the exact derivative of the exterior-power action.
void criterion_spin_homomorphism(Checker& c) {
  for (int n = 1; n <= 3; ++n) {
    SpinorContext ctx(n);
    std::vector<QMat> basis = split_so_basis(n);
    std::vector<QMat> images;
    for (const QMat& x : basis) images.push_back(spinor_rep(x, ctx));
    bool hom = true;
    for (size_t i = 0; i < basis.size(); ++i)
      for (size_t j = 0; j < basis.size(); ++j)
        hom = hom && spinor_rep(bracket(basis[i], basis[j]), ctx) == bracket(images[i], images[j]);
    ACC_CHECK(hom, "spin representation preserves brackets for n = " + std::to_string(n));
  }

  auto rng = Rng(0x64657276);
  SpinorContext ctx(3);
  Tally deriv_ok;
  for (int t = 0; t < 20; ++t) {
    QMat a = random_trace_zero(3, rng);
    QMat lhs = dual_apply([&ctx](const Mat<Dual>& x) { return wedge_power(x, ctx); }, a);
    deriv_ok.note(lhs == spinor_rep(gl_embedding(a), ctx), "sample " + std::to_string(t));
  }
  ACC_CHECK(deriv_ok.bad == 0,
            deriv_ok.report("derivative of the exterior-power action matches the gl corner"));
}

// 7. Symmetric-power contraction: the harmonic kernel has dimension
//    sym_dim(m, d) - sym_dim(m, d - 2) and the contraction commutes with every
//    so(q) derivation.
void criterion_harmonic_kernel(Checker& c) {
  const Rat entries[6] = {Rat(1), Rat(-1), Rat(2), Rat(3), Rat(-2), Rat(5)};
  auto rng = Rng(0x6861726d);
  Tally dim_ok, equiv_ok;
  for (int m = 1; m <= 6; ++m) {
    QMat g = QMat::zero(m, m);
    QMat ginv = QMat::zero(m, m);
    for (int i = 0; i < m; ++i) {
      g(i, i) = entries[i];
      ginv(i, i) = Rat(1) / entries[i];
    }
    SymContext ctx(g);
    for (int d = 0; d <= 4; ++d) {
      const std::string tag = "m = " + std::to_string(m) + ", d = " + std::to_string(d);
      const int expected = sym_dim(m, d) - (d >= 2 ? sym_dim(m, d - 2) : 0);
      dim_ok.note(harmonic_kernel(d, ctx).dim() == expected, tag);
      if (d < 2) continue;
      for (int s = 0; s < 2; ++s) {
        QMat skew = QMat::zero(m, m);
        for (int i = 0; i < m; ++i)
          for (int j = i + 1; j < m; ++j) {
            skew(i, j) = rng.rat_in(2);
            skew(j, i) = -skew(i, j);
          }
        const QMat a = ginv * skew;
        equiv_ok.note(contraction(d, ctx) * sym_power_derivation(a, d, ctx) ==
                          sym_power_derivation(a, d - 2, ctx) * contraction(d, ctx),
                      tag);
      }
    }
  }
  ACC_CHECK(dim_ok.bad == 0,
            dim_ok.report("harmonic kernel dimension is sym_dim(m, d) - sym_dim(m, d - 2)"));
  ACC_CHECK(equiv_ok.bad == 0,
            equiv_ok.report("contraction commutes with so(q) derivations"));
}

// 8. Copy-sum Cartan operators weigh the extreme exterior vectors with
//    (k/2, ..., k/2), and the constructed invariant raising part annihilates
//    exactly the top vector.
void criterion_highest_weight(Checker& c) {
  {
    SpinorContext ctx(2);
    std::vector<QMat> ops;
    for (const QMat& h : cartan_copy_sums(1, 2)) ops.push_back(spinor_rep(h, ctx));
    const QVec top = unit_vec(4, ctx.ext.at({0, 1}));
    const QVec bottom = unit_vec(4, ctx.ext.at({}));
    ACC_CHECK((weight_of_vector(top, ops) == QVec{Rat(1, 2), Rat(1, 2)}),
              "k = 1 top vector has weight (1/2, 1/2)");
    ACC_CHECK((weight_of_vector(bottom, ops) == QVec{Rat(-1, 2), Rat(-1, 2)}),
              "k = 1 bottom vector has weight (-1/2, -1/2)");

    std::vector<QMat> raising = invariant_raising_part(1, 2, QMat::identity(1));
    ACC_CHECK(raising.size() == 2, "k = 1 raising part has two operators");
    std::vector<QMat> raised;
    for (const QMat& x : raising) raised.push_back(spinor_rep(x, ctx));
    MatrixLieAlgebra pos = MatrixLieAlgebra::from_span(4, raised);
    ACC_CHECK(highest_weight_check(pos, top), "k = 1 top vector is a highest weight vector");
    ACC_CHECK(!highest_weight_check(pos, bottom), "k = 1 bottom vector is raised, not highest");
  }
  {
    const int k = 2, n = 2;
    SpinorContext ctx(k * n);
    std::vector<QMat> cartan = cartan_copy_sums(k, n);
    std::vector<QMat> raising = invariant_raising_part(k, n, kStdPairing);

    const QMat rot = tilde_action(kStdRot, n);
    const QMat flip = tilde_action(kStdFlip, n);
    bool invariant = true;
    for (const QMat& x : cartan)
      invariant = invariant && bracket(x, rot).is_zero() && bracket(x, flip).is_zero();
    for (const QMat& x : raising)
      invariant = invariant && bracket(x, rot).is_zero() && bracket(x, flip).is_zero();
    ACC_CHECK(invariant, "k = 2 Cartan and raising operators commute with the group action");

    std::vector<QMat> ops;
    for (const QMat& h : cartan) ops.push_back(spinor_rep(h, ctx));
    const QVec top = unit_vec(16, ctx.ext.at({0, 1, 2, 3}));
    const QVec bottom = unit_vec(16, ctx.ext.at({}));
    ACC_CHECK((weight_of_vector(top, ops) == QVec{Rat(1), Rat(1)}),
              "k = 2 top vector has weight (1, 1)");
    ACC_CHECK((weight_of_vector(bottom, ops) == QVec{Rat(-1), Rat(-1)}),
              "k = 2 bottom vector has weight (-1, -1)");

    std::vector<QMat> raised;
    for (const QMat& x : raising) raised.push_back(spinor_rep(x, ctx));
    MatrixLieAlgebra pos = MatrixLieAlgebra::from_span(16, raised);
    ACC_CHECK(pos.dim() == 2, "k = 2 raising part spans two directions");
    ACC_CHECK(highest_weight_check(pos, top), "k = 2 top vector is a highest weight vector");
    ACC_CHECK(!highest_weight_check(pos, bottom), "k = 2 bottom vector is raised, not highest");
  }
}

// 9. Clifford layer: star is an anti-involution, sampled GSpin elements have
//    scalar norms with similitude factor 1/mu^2, and the induced action of
//    isometries passes the equivariance report.
void criterion_clifford_gspin(Checker& c) {
  const QMat grams[2] = {QMat{{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}},
                         QMat{{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(-1)}}};
  const unsigned long seeds[2] = {0x636c6630, 0x636c6631};
  for (int which = 0; which < 2; ++which) {
    const std::string space = which == 0 ? "definite space" : "indefinite space";
    CliffordAlgebra alg(grams[which]);
    const QuadraticSpace qs(grams[which]);
    auto rng = Rng(long(seeds[which]));

    auto random_element = [&]() {
      CliffordElement x = alg.zero();
      for (Rat& a : x.coeffs) a = rng.rat_in(3);
      return x;
    };
    auto random_vector = [&]() {
      QVec v(3, Rat(0));
      do {
        for (Rat& a : v) a = rng.rat_in(3);
      } while (qs.q(v) == 0);
      return v;
    };

    Tally star_ok;
    for (int t = 0; t < 200; ++t) {
      const CliffordElement a = random_element();
      const CliffordElement b = random_element();
      star_ok.note(star(cmul(a, b)) == cmul(star(b), star(a)) && star(star(a)) == a,
                   "pair " + std::to_string(t));
    }
    ACC_CHECK(star_ok.bad == 0, star_ok.report("star is an anti-involution on the " + space));

    Tally gspin_ok, simil_ok, iso_ok;
    for (int t = 0; t < 10; ++t) {
      const int factors = t % 2 == 0 ? 2 : 4;
      CliffordElement x = alg.one();
      for (int f = 0; f < factors; ++f) x = cmul(x, alg.vector_element(random_vector()));
      const std::string tag = "sample " + std::to_string(t);
      gspin_ok.note(is_gspin(x), tag);
      if (!is_gspin(x)) continue;
      const auto mu = as_scalar(cmul(x, star(x)));
      if (!mu.has_value() || *mu == 0) {
        gspin_ok.note(false, tag + " (norm not a nonzero scalar)");
        continue;
      }
      const QMat rep = vector_rep(alg, x);
      const auto lambda = is_similitude(rep, qs);
      simil_ok.note(lambda.has_value() && *lambda == Rat(1) / (*mu * *mu), tag);
      const auto unit = is_similitude((Rat(1) / *mu) * rep, qs);
      iso_ok.note(unit.has_value() && *unit == 1, tag);
    }
    ACC_CHECK(gspin_ok.bad == 0,
              gspin_ok.report("products of anisotropic vectors land in GSpin on the " + space));
    ACC_CHECK(simil_ok.bad == 0,
              simil_ok.report("vector representation is a similitude with factor 1/mu^2"));
    ACC_CHECK(iso_ok.bad == 0, iso_ok.report("rescaling by 1/mu gives an exact isometry"));

    QMat flip0 = QMat::identity(3);
    flip0(0, 0) = -1;
    QMat swap01 = QMat::zero(3, 3);
    swap01(0, 1) = 1;
    swap01(1, 0) = 1;
    swap01(2, 2) = 1;
    std::vector<CliffordElement> samples = {
        alg.one(), cmul(alg.vector_element(random_vector()), alg.vector_element(random_vector())),
        alg.one() + alg.monomial({0, 1})};
    EquivarianceReport report = equivariance_check(alg, {flip0, swap01}, samples);
    ACC_CHECK(report.ok() && report.identities_checked > 0,
              "induced isometry actions are equivariant on the " + space + " (" +
                  std::to_string(report.failures.size()) + " failures)");
  }
}

// 10. Randomized equivariant Witt cancellation: the returned map is an
//     isometry, matches the prefix, commutes with the group, sends the
//     complement where the report says, and uses group-fixed mirrors.
void criterion_witt_cancellation(Checker& c) {
  auto rng = Rng(0x77637463);
  Tally iso_ok, prefix_ok, comm_ok, comp_ok, mirror_ok;
  int with_group = 0;
  for (int t = 0; t < 100; ++t) {
    const int n = int(rng.uniform(2, 6));
    QMat g = QMat::zero(n, n);
    for (int i = 0; i < n; ++i) g(i, i) = nonzero_rat(rng, 3);
    const QuadraticSpace q(g);
    const int m = int(rng.uniform(1, n));

    // Group of diagonal sign flips supported on the complement coordinates.
    std::vector<bool> flipped(size_t(n), false);
    std::vector<QMat> action = {QMat::identity(n)};
    auto flip_matrix = [&](const std::vector<int>& s) {
      QMat f = QMat::identity(n);
      for (int x : s) f(x, x) = -1;
      return f;
    };
    auto random_flip_set = [&]() {
      std::vector<int> s;
      while (s.empty())
        for (int i = m; i < n; ++i)
          if (rng.uniform(0, 1) == 1) s.push_back(i);
      return s;
    };
    const long shape = rng.uniform(0, 2);
    if (shape >= 1 && n - m >= 1) {
      const std::vector<int> s1 = random_flip_set();
      for (int x : s1) flipped[size_t(x)] = true;
      action.push_back(flip_matrix(s1));
      if (shape == 2 && n - m >= 2) {
        std::vector<int> s2 = random_flip_set();
        while (s2 == s1) s2 = random_flip_set();
        for (int x : s2) flipped[size_t(x)] = true;
        action.push_back(flip_matrix(s2));
        action.push_back(flip_matrix(s1) * flip_matrix(s2));
      }
      ++with_group;
    }

    // Target basis: reflections in group-fixed anisotropic vectors applied to
    // the standard basis, so a cancelling isometry certainly exists.
    std::vector<int> fixed_coords;
    for (int i = 0; i < n; ++i)
      if (i < m || !flipped[size_t(i)]) fixed_coords.push_back(i);
    QMat mover = QMat::identity(n);
    const int reflections = 1 + int(rng.uniform(0, 2));
    for (int k = 0; k < reflections; ++k) {
      QVec w(size_t(n), Rat(0));
      do {
        for (int i : fixed_coords) w[size_t(i)] = rng.rat_in(2);
      } while (q.q(w) == 0);
      mover = reflection_matrix(w, q) * mover;
    }
    std::vector<QVec> e, f;
    for (int i = 0; i < n; ++i) {
      e.push_back(unit_vec(n, i));
      f.push_back(mover.apply(e.back()));
    }

    const WittResult res = witt_cancel_equivariant(q, e, f, m, action);
    const QMat& phi = res.isometry;
    const std::string tag = "case " + std::to_string(t);
    iso_ok.note(phi.transpose() * g * phi == g, tag);
    bool pre = true;
    for (int i = 0; i < m; ++i) pre = pre && phi.apply(e[size_t(i)]) == f[size_t(i)];
    prefix_ok.note(pre, tag);
    bool com = true;
    for (const QMat& a : action) com = com && phi * a == a * phi;
    comm_ok.note(com, tag);
    if (n > m) {
      QMat ec = QMat::zero(n, n - m);
      QMat fc = QMat::zero(n, n - m);
      for (int j = m; j < n; ++j)
        for (int i = 0; i < n; ++i) {
          ec(i, j - m) = e[size_t(j)][size_t(i)];
          fc(i, j - m) = f[size_t(j)][size_t(i)];
        }
      comp_ok.note(phi * ec == fc * res.complement_map, tag);
    }
    bool mir = true;
    for (const QVec& w : res.mirrors) {
      mir = mir && q.q(w) != 0;
      for (const QMat& a : action) mir = mir && a.apply(w) == w;
    }
    mirror_ok.note(mir, tag);
  }
  ACC_CHECK(with_group >= 30, "enough cases carry a nontrivial group");
  ACC_CHECK(iso_ok.bad == 0, iso_ok.report("returned maps preserve the form"));
  ACC_CHECK(prefix_ok.bad == 0, prefix_ok.report("returned maps match the prefix pointwise"));
  ACC_CHECK(comm_ok.bad == 0, comm_ok.report("returned maps commute with the group"));
  ACC_CHECK(comp_ok.bad == 0,
            comp_ok.report("complement images agree with the reported coordinates"));
  ACC_CHECK(mirror_ok.bad == 0, mirror_ok.report("all mirrors are anisotropic and group-fixed"));
}

// 11. Central idempotents of rational group algebras: one per divisor for
//     cyclic groups (cross-checked against the factors of x^n - 1), three for
//     the symmetric group on three letters, orthogonal and summing to 1, and
//     fixed by the inversion involution.
void criterion_central_idempotents(Checker& c) {
  auto system_ok = [](const FiniteGroup& g, const std::vector<QVec>& es) {
    const int n = g.order();
    QVec total(size_t(n), Rat(0));
    const QVec zero(size_t(n), Rat(0));
    for (size_t i = 0; i < es.size(); ++i) {
      if (groupalg_mul(g, es[i], es[i]) != es[i]) return false;
      for (size_t j = 0; j < es.size(); ++j)
        if (i != j && groupalg_mul(g, es[i], es[j]) != zero) return false;
      for (int k = 0; k < n; ++k) total[size_t(k)] += es[i][size_t(k)];
    }
    return total == unit_vec(n, g.identity());
  };

  for (int n = 1; n <= 8; ++n) {
    const FiniteGroup g = FiniteGroup::cyclic(n);
    const CentralIdempotentSet s = central_idempotents(g);
    int divisors = 0;
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) ++divisors;
    ACC_CHECK(int(s.idempotents.size()) == divisors,
              "cyclic group of order " + std::to_string(n) + " has one idempotent per divisor");

    std::vector<Rat> coeffs(size_t(n + 1), Rat(0));
    coeffs[0] = -1;
    coeffs[size_t(n)] = 1;
    const auto factors = factor_rational(Poly(coeffs));
    ACC_CHECK(factors.size() == s.idempotents.size(),
              "irreducible factor count of x^" + std::to_string(n) + " - 1 matches");
    ACC_CHECK(system_ok(g, s.idempotents),
              "cyclic idempotents are orthogonal and sum to 1 for n = " + std::to_string(n));
  }

  const FiniteGroup s3 = FiniteGroup::symmetric3();
  const CentralIdempotentSet s = central_idempotents(s3);
  ACC_CHECK(s.idempotents.size() == 3, "the symmetric group on three letters has three idempotents");
  ACC_CHECK(system_ok(s3, s.idempotents), "its idempotents are orthogonal and sum to 1");

  for (int n = 3; n <= 4; ++n) {
    const FiniteGroup g = FiniteGroup::cyclic(n);
    bool fixed = true;
    for (const QVec& e : central_idempotents(g).idempotents)
      fixed = fixed && group_involution(g, e) == e;
    ACC_CHECK(fixed, "inversion fixes every idempotent for the cyclic group of order " +
                         std::to_string(n));
  }
}

// 12. The alternating trace over exterior powers equals det(I - g); when that
//     determinant vanishes the map has a nonzero fixed vector.
void criterion_lefschetz_trace(Checker& c) {
  auto rng = Rng(0x6c656673);
  Tally identity_ok, fixed_ok;
  int zero_cases = 0;
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + t % 5;
    const QMat g = random_invertible(n, rng);
    const auto [lhs, rhs] = lefschetz_identity(g);
    identity_ok.note(lhs == rhs, "case " + std::to_string(t));
    if (lhs == 0) {
      ++zero_cases;
      fixed_ok.note(!kernel_basis(g - QMat::identity(n)).empty(), "case " + std::to_string(t));
    }
  }
  // Force the vanishing branch with maps that fix the first coordinate.
  for (int t = 0; t < 5; ++t) {
    const int n = 2 + t % 3;
    QMat g = QMat::identity(n);
    g.set_block(1, 1, random_invertible(n - 1, rng));
    const auto [lhs, rhs] = lefschetz_identity(g);
    identity_ok.note(lhs == rhs && lhs == 0, "constructed case " + std::to_string(t));
    fixed_ok.note(!kernel_basis(g - QMat::identity(n)).empty(),
                  "constructed case " + std::to_string(t));
    ++zero_cases;
  }
  ACC_CHECK(identity_ok.bad == 0,
            identity_ok.report("alternating trace equals det(I - g) on every sample"));
  ACC_CHECK(zero_cases >= 5, "the vanishing branch is exercised");
  ACC_CHECK(fixed_ok.bad == 0,
            fixed_ok.report("a vanishing alternating trace forces a fixed vector"));
}

struct Criterion {
  const char* id;
  const char* description;
  void (*fn)(Checker&);
};

constexpr Criterion kCriteria[] = {
    {"exterior-llv", "LLV algebras of exterior algebras match the spin image of so(V + V*)",
     criterion_exterior_llv},
    {"surface-llv", "surface rings give the full orthogonal algebra of the Mukai pairing",
     criterion_surface_llv},
    {"tensor-llv", "the LLV algebra of a tensor product is the block sum of the factors",
     criterion_tensor_llv},
    {"equivariant-llv", "equivariant restriction agrees with the invariant-ring computation",
     criterion_equivariant_llv},
    {"involution-types", "adjoint involutions classify with the expected skew dimensions",
     criterion_involution_types},
    {"spin-homomorphism", "the spin representation is a bracket homomorphism with exact derivative",
     criterion_spin_homomorphism},
    {"harmonic-kernel", "contraction kernels have the complementary dimension and are so(q)-equivariant",
     criterion_harmonic_kernel},
    {"highest-weight", "extreme exterior vectors are highest weight vectors for the copy-sum Cartan",
     criterion_highest_weight},
    {"clifford-gspin", "Clifford star, GSpin similitudes, and induced-action equivariance",
     criterion_clifford_gspin},
    {"witt-cancellation", "equivariant Witt cancellation returns commuting prefix-matching isometries",
     criterion_witt_cancellation},
    {"central-idempotents", "central idempotents of group algebras are counted by rational factors",
     criterion_central_idempotents},
    {"lefschetz-trace", "the alternating trace identity holds and vanishing forces a fixed vector",
     criterion_lefschetz_trace},
};

}  // namespace

int run_acceptance(const std::string& filter, std::ostream& out) {
  int selected = 0;
  int failed = 0;
  for (const Criterion& criterion : kCriteria) {
    if (!filter.empty() && std::string(criterion.id).find(filter) == std::string::npos) continue;
    ++selected;
    Checker c{out};
    try {
      criterion.fn(c);
    } catch (const std::exception& e) {
      c.fail(__FILE__, 0, std::string("unexpected exception: ") + e.what());
    } catch (...) {
      c.fail(__FILE__, 0, "unexpected non-standard exception");
    }
    out << (c.failures == 0 ? "[PASS] " : "[FAIL] ") << criterion.id << " "
        << criterion.description << "\n";
    if (c.failures != 0) ++failed;
  }
  out << (selected - failed) << "/" << selected << " acceptance criteria passed\n";
  return failed;
}

}  // namespace lefkit
