#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lefkit/linalg.hpp"

namespace lefkit {

// A Lie subalgebra of gl_n presented by a basis of matrices. The basis is
// canonical: reduced row echelon form over flattened row-major coordinates.
// An optional integer grading (attached by grade_by) records eigenpieces of
// an ad-semisimple element.
class MatrixLieAlgebra {
 public:
  static MatrixLieAlgebra from_span(int n, const std::vector<QMat>& spanning);

  int matrix_size() const { return n_; }
  int dim() const { return int(basis_.size()); }
  const std::vector<QMat>& basis() const { return basis_; }
  const Subspace& span() const { return span_; }
  bool contains(const QMat& x) const;
  std::optional<QVec> coordinates(const QMat& x) const;
  // Full pairwise scan of basis brackets.
  bool is_bracket_closed() const;

  bool graded() const { return !grading_.empty(); }
  const std::map<int, std::vector<QMat>>& grading() const { return grading_; }
  std::map<int, int> graded_dims() const;

 private:
  friend MatrixLieAlgebra grade_by(const QMat& h, const MatrixLieAlgebra& g);
  MatrixLieAlgebra(int n, Subspace span, std::vector<QMat> basis)
      : n_(n), span_(std::move(span)), basis_(std::move(basis)) {}
  int n_;
  Subspace span_;
  std::vector<QMat> basis_;
  std::map<int, std::vector<QMat>> grading_;
};

// Smallest subalgebra containing the generators: repeated bracket rounds of
// new elements against everything, with integer-span membership tests.
MatrixLieAlgebra closure(const std::vector<QMat>& generators);

// Same, but stops as soon as the span reaches dimension `cap`. Only valid
// when the caller knows the closure lies inside a `cap`-dimensional algebra
// (e.g. all generators are skew for one nondegenerate form).
MatrixLieAlgebra closure_capped(const std::vector<QMat>& generators, int cap);

// Span of all brackets of basis pairs (the derived subalgebra [g, g]).
MatrixLieAlgebra derived(const MatrixLieAlgebra& g);

// Killing form in the given basis and its nondegeneracy.
std::pair<QMat, bool> killing_semisimple(const MatrixLieAlgebra& g);

// Basis of the commutant of ad(g) in End(g), i.e. the centroid, as matrices
// acting on basis coordinates. Uses the grading to restrict the ansatz when
// one is attached, since centroid elements commute with the grading element.
std::vector<QMat> centroid(const MatrixLieAlgebra& g);

struct IdealDecomposition {
  std::vector<MatrixLieAlgebra> ideals;
};

// Minimal ideals of a semisimple algebra: primitive idempotents of the
// centroid applied to g. Ideals whose centroid factor is a larger field stay
// unsplit over Q. Throws if the Killing form is degenerate.
IdealDecomposition minimal_ideals(const MatrixLieAlgebra& g);

// Eigenspace decomposition of g under ad(h). Requires h to normalize g and
// ad(h) to act diagonalizably with integer eigenvalues; throws otherwise.
MatrixLieAlgebra grade_by(const QMat& h, const MatrixLieAlgebra& g);

struct LieReport {
  int dim = 0;
  int centroid_dim = 0;
  int dim_over_centroid = 0;
  int rank_over_centroid = -1;  // -1 when undetermined
  bool rank_determined = false;
  Signature killing_signature;
  std::string note;
};

// Structure report for a semisimple algebra. The rank is the minimal nullity
// of ad(z) over seeded random z with squarefree minimal polynomial; if no
// sample qualifies the rank is reported undetermined.
LieReport invariants_report(const MatrixLieAlgebra& g);

}  // namespace lefkit
