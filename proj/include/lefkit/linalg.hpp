#pragma once

#include <optional>
#include <vector>

#include "lefkit/matrix.hpp"

namespace lefkit {

// Flattening convention used throughout: entry (i,j) of an r x c matrix sits
// at index i*c + j.
QVec flatten(const QMat& m);
QMat unflatten(const QVec& v, int rows, int cols);
QMat mat_from_rows(const std::vector<QVec>& rows, int ambient);

struct RrefResult {
  QMat mat;                // reduced row echelon form
  std::vector<int> pivots; // pivot column per nonzero row
  int rank = 0;
};

// Gauss-Jordan with exact pivoting; among candidate pivots in a column the
// entry with the fewest bits wins, which keeps intermediate numbers small.
RrefResult rref(QMat m);

int rank(const QMat& m);

// Basis of the right null space { v : m v = 0 }.
std::vector<QVec> kernel_basis(const QMat& m);

std::optional<QVec> solve(const QMat& a, const QVec& b);
std::optional<QMat> inverse(const QMat& a);
Rat determinant(QMat a);

// Basis of { x : g x = x g for every generator }, as n x n matrices.
// Solved as one stacked linear system over the n^2 entries of x.
std::vector<QMat> commutant(int n, const std::vector<QMat>& gens);

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  bool operator==(const Signature&) const = default;
};

// Sylvester signature of a symmetric matrix via symmetric congruence
// elimination; throws if the input is not symmetric.
Signature signature(QMat gram);

// A linear subspace of Q^n held in canonical form: the RREF of any spanning
// set. Equality of subspaces is literal equality of the canonical bases.
class Subspace {
 public:
  explicit Subspace(int ambient) : ambient_(ambient) {}
  static Subspace from_vectors(const std::vector<QVec>& vecs, int ambient);

  int ambient() const { return ambient_; }
  int dim() const { return int(basis_.size()); }
  const std::vector<QVec>& basis() const { return basis_; }

  bool contains(const QVec& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& other) const {
    return ambient_ == other.ambient_ && basis_ == other.basis_;
  }

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;  // Zassenhaus

  // Coefficients of v in the canonical basis, if v lies in the subspace.
  std::optional<QVec> coordinates(const QVec& v) const;

 private:
  int ambient_;
  std::vector<QVec> basis_;  // RREF rows, no zero rows
};

// Incremental integer span with fraction-free elimination, for closure loops
// where full rational RREF is too slow. Rows are kept content-normalized.
class IntSpan {
 public:
  explicit IntSpan(int ambient) : ambient_(ambient) {}

  // Returns true when v was independent of the current span (and was added).
  bool add(const QVec& v);
  bool contains(const QVec& v) const;
  int dim() const { return int(rows_.size()); }
  int ambient() const { return ambient_; }

 private:
  struct Row {
    std::vector<Int> e;
    int pivot;
  };
  // Reduces v against the stored rows; empty result means dependent.
  std::vector<Int> reduce(const QVec& v) const;

  int ambient_;
  std::vector<Row> rows_;  // sorted by pivot column
};

}  // namespace lefkit
