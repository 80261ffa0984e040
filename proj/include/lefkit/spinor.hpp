#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "lefkit/graded.hpp"
#include "lefkit/lie.hpp"
#include "lefkit/matrix.hpp"
#include "lefkit/subsets.hpp"

namespace lefkit {

// V + V* carries the split symmetric form b((v,f),(w,g)) = f(w) + g(v), with
// Gram matrix [[0,I],[I,0]] in the basis (e_1..e_n, e_1*..e_n*). Elements of
// so(V + V*) are exactly the block matrices [[A, L],[M, -A^t]] with L and M
// antisymmetric; L represents a 2-vector in /\^2 V, M a 2-form in /\^2 V*.
struct SpinorContext {
  int n = 0;
  SubsetBasis ext;  // basis of the exterior algebra, shared subset order

  explicit SpinorContext(int dim_v)
      : n(dim_v), ext(SubsetBasis::make(dim_v)) {}
  int ext_dim() const { return int(ext.sets.size()); }
};

struct SpinorBlocks {
  QMat gl;           // n x n, arbitrary
  QMat wedge2;       // n x n antisymmetric, the Hom(V*, V) corner
  QMat contraction2; // n x n antisymmetric, the Hom(V, V*) corner
};

// Splits x in so(V + V*) into its three blocks; rejects matrices that are not
// skew for the split form. assemble_so is the inverse.
SpinorBlocks split_so(const QMat& x, int n);
QMat assemble_so(const SpinorBlocks& blocks);

// gl(V) -> so(V + V*), A |-> [[A, 0],[0, -A^t]].
QMat gl_embedding(const QMat& a);

// Spin action of so(V + V*) on the exterior algebra of V: the gl block acts
// as its derivation extension minus tr(A)/2, the wedge block as left wedge
// with sum_{i<j} L_ij e_i e_j, the contraction block as the double interior
// product sum_{i<j} M_ij i_{e_i*} i_{e_j*}. A Lie algebra homomorphism.
QMat spinor_rep(const QMat& x, const SpinorContext& ctx);

// Derivation extension of a: V -> V to the whole exterior algebra.
QMat exterior_derivation(const QMat& a, const SpinorContext& ctx);
// Left wedge by the 2-vector with coefficients l(i,j), i < j.
QMat wedge_two_form(const QMat& l, const SpinorContext& ctx);
// Double contraction by the 2-form with coefficients m(i,j), i < j. The
// interior product by e_i* removes index i with sign (-1)^{position-1}.
QMat contraction_two_form(const QMat& m, const SpinorContext& ctx);

// lambda^k on the degree-k piece; zero is rejected.
QMat scalar_action(const Rat& lambda, const SpinorContext& ctx);

// Functorial exterior power of a over any commutative ring:
// e_S |-> (a e_{s_1}) ^ ... ^ (a e_{s_k}).
template <class T>
Mat<T> wedge_power(const Mat<T>& a, const SpinorContext& ctx) {
  if (a.rows() != ctx.n || a.cols() != ctx.n)
    throw std::invalid_argument("operator does not act on V");
  const int dim = ctx.ext_dim();
  Mat<T> out(dim, dim);
  for (int col = 0; col < dim; ++col) {
    const std::vector<int>& s = ctx.ext.sets[size_t(col)];
    auto acc = std::vector<T>(size_t(dim), T(0));
    acc[0] = T(1);
    for (int v : s) {
      auto next = std::vector<T>(size_t(dim), T(0));
      for (int idx = 0; idx < dim; ++idx) {
        if (acc[size_t(idx)] == T(0)) continue;
        const std::vector<int>& t = ctx.ext.sets[size_t(idx)];
        for (int i = 0; i < ctx.n; ++i) {
          if (a(i, v) == T(0)) continue;
          int sign = merge_sign(t, {i});
          if (sign == 0) continue;
          T term = acc[size_t(idx)] * a(i, v);
          int target = ctx.ext.at(merge_sets(t, {i}));
          if (sign < 0)
            next[size_t(target)] -= term;
          else
            next[size_t(target)] += term;
        }
      }
      acc = std::move(next);
    }
    for (int row = 0; row < dim; ++row) out(row, col) = acc[size_t(row)];
  }
  return out;
}

// Cartan operators of the centralizer of a k-dimensional representation
// repeated n times in V = rho^n (basis grouped copy by copy): the j-th
// operator is the sum over the j-th copy of E_ii - E_{kn+i,kn+i}.
std::vector<QMat> cartan_copy_sums(int k, int n);

// Raising part of the same centralizer: for every pair of copies j < j', the
// copy-shift gl block (I_k in position (j, j')) and the invariant wedge block
// built from a rho-equivariant pairing p (use the 1 x 1 identity for the
// trivial representation). Each element strictly raises the copy weights.
std::vector<QMat> invariant_raising_part(int k, int n, const QMat& p);

// Simultaneous eigenvalue tuple of v under the given operators; throws
// "not an eigenvector" naming the first operator that fails.
std::vector<Rat> weight_of_vector(const QVec& v, const std::vector<QMat>& cartan);

// True iff every basis element of positive_part annihilates v.
bool highest_weight_check(const MatrixLieAlgebra& positive_part, const QVec& v);

// ---------------------------------------------------------------------------
// Symmetric powers with a contraction operator.

// Exponent vectors of total degree d in m variables, degree-lex descending:
// (d, 0, ..., 0) comes first.
std::vector<std::vector<int>> sym_monomials(int m, int d);
int sym_dim(int m, int d);

struct SymContext {
  QMat gram;  // symmetric bilinear form on the m-dimensional space
  int m = 0;

  explicit SymContext(QMat gram_in);
};

// Contraction Sym^d -> Sym^{d-2}: pairs off two letters of a monomial through
// the form and sums over all letter pairs. Requires d >= 2.
QMat contraction(int degree, const SymContext& ctx);

// Kernel of the contraction; the whole space when degree <= 1.
Subspace harmonic_kernel(int degree, const SymContext& ctx);

// Derivation extension of an m x m matrix to Sym^degree.
QMat sym_power_derivation(const QMat& a, int degree, const SymContext& ctx);

struct ShEmbeddingReport {
  int copies = 0;
  int sh_dim = 0;        // dimension of the degree-2-generated subring
  int graph_dim = 0;     // dimension of the closed graph
  int sym_dim = 0;       // dim Sym^D of the extended space
  int expected_dim = 0;  // dim Sym^D - dim Sym^{D-2}
  bool well_defined = false;
  bool injective = false;
  bool image_in_kernel = false;
  bool dims_match = false;
  std::string witness;  // set when a check fails

  bool ok() const { return well_defined && injective && image_in_kernel && dims_match; }
};

// For a surface-type ring R (degrees 0, 2, 4 with one-dimensional ends) and
// copies in {0, 1, 2}: closes the graph of the equivariant map that sends the
// unit of the symmetrized copies-fold product of R to alpha^copies in
// Sym^copies of the hyperbolic extension Q*alpha + R_2 + Q*beta, by applying
// each degree-2 multiplication operator and its extension side by side.
// Verifies the graph is a function, injective, and lands in the contraction
// kernel of the expected dimension.
ShEmbeddingReport sh_embedding_check(const GradedAlgebra& factor, int copies);

}  // namespace lefkit
