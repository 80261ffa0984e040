#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lefkit/groupalg.hpp"
#include "lefkit/linalg.hpp"

namespace lefkit {

// A finite-dimensional graded vector space: one integer degree per basis
// index. Indices need not be sorted by degree (tensor products interleave).
struct GradedSpace {
  std::vector<int> degrees;
  std::vector<std::string> labels;  // empty or one label per index

  int total_dim() const { return int(degrees.size()); }
  int dim(int d) const;
  std::vector<int> indices(int d) const;
  std::map<int, int> dim_by_degree() const;
  int min_degree() const;
  int max_degree() const;
  GradedSpace shifted(int n) const;  // lowers every degree by n
};

// Diagonal matrix of basis degrees.
QMat grading_operator(const GradedSpace& m);

// Sparse structure-constant row: (basis index, coefficient) pairs.
using SparseVec = std::vector<std::pair<int, Rat>>;

// A graded-commutative associative unital algebra with rational structure
// constants. Construction verifies degree additivity and the unit law on all
// pairs, plus associativity and graded commutativity (full scan up to total
// dimension 64, seeded samples beyond).
class GradedAlgebra {
 public:
  GradedAlgebra(GradedSpace space, std::vector<std::vector<SparseVec>> table, int unit_index);

  const GradedSpace& space() const { return space_; }
  int total_dim() const { return space_.total_dim(); }
  int unit_index() const { return unit_index_; }
  QVec unit() const { return unit_vec(total_dim(), unit_index_); }
  // Top nonzero degree; 2*depth. Degrees run 0..top with nonzero top piece.
  int top() const { return top_; }
  int depth() const { return top_ / 2; }
  // Degrees centered at zero by subtracting the depth.
  GradedSpace shifted_space() const { return space_.shifted(depth()); }

  const SparseVec& mul_basis(int i, int j) const { return table_[size_t(i)][size_t(j)]; }
  QVec mul(const QVec& x, const QVec& y) const;
  // Left multiplication by x as a matrix on the whole space.
  QMat mult_operator(const QVec& x) const;
  QVec component(const QVec& x, int degree) const;

 private:
  GradedSpace space_;
  std::vector<std::vector<SparseVec>> table_;
  int unit_index_;
  int top_;
};

// Whether exp(e) behaves like a Lefschetz structure: e must raise degree by 2
// and each e^k: M_{-k} -> M_k must be an isomorphism (degrees of m shifted,
// i.e. centered at zero).
bool has_hard_lefschetz(const QMat& e, const GradedSpace& shifted);

// A graded subalgebra of r presented on its own basis, together with the
// embedding matrix whose columns express that basis inside r.
struct SubAlgebra {
  GradedAlgebra algebra;
  QMat embedding;
};

// The subalgebra generated by degree 2: span of all products of R_2 elements
// (including the empty product, i.e. the unit), as a subspace of r.
Subspace verbitsky(const GradedAlgebra& r);

// Induced algebra structure on a graded, multiplicatively closed, unital
// subspace of r. Throws if the span is not graded or not closed.
SubAlgebra subalgebra_from(const GradedAlgebra& r, const Subspace& span);

// A finite group acting on r by degree-preserving algebra automorphisms.
struct GroupActionOnAlgebra {
  FiniteGroup group;
  std::vector<QMat> matrices;
};

// Validates: homomorphism, unit and degree preservation, multiplicativity.
GroupActionOnAlgebra make_action(const GradedAlgebra& r, FiniteGroup group,
                                 std::vector<QMat> matrices);

// Fixed subalgebra r^G via the Reynolds projector, with recorded embedding.
SubAlgebra invariants(const GradedAlgebra& r, const GroupActionOnAlgebra& act);

// Graded tensor product with Koszul signs; basis pair (i, j) of (r, s) sits
// at index i * dim(s) + j.
GradedAlgebra tensor(const GradedAlgebra& r, const GradedAlgebra& s);

// Exterior algebra on dim_v generators of degree 1; basis indexed by sorted
// subsets, ordered by size then lexicographically.
GradedAlgebra exterior_algebra(int dim_v);

// Graded ring Q*1 + H + Q*vol with H*H -> vol given by the symmetric
// nondegenerate form b, deg h_i = 2, degrees (0, 2, 4).
GradedAlgebra surface_ring(const QMat& b);

}  // namespace lefkit
