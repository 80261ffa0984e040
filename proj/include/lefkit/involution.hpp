#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lefkit/lie.hpp"
#include "lefkit/linalg.hpp"
#include "lefkit/matrix.hpp"

namespace lefkit {

enum class InvolutionKind { First, Second };
enum class InvolutionType { Orthogonal, Symplectic, Unitary };

std::string to_string(InvolutionKind k);
std::string to_string(InvolutionType t);

// A unital matrix subalgebra A of End(Q^n) with an anti-automorphism of order
// two. Construction verifies every axiom on the stored basis: independence,
// unitality, multiplicative closure, sigma(A) = A, sigma^2 = id, and
// sigma(xy) = sigma(y) sigma(x). The involution argument must be linear on A.
class AlgebraWithInvolution {
 public:
  AlgebraWithInvolution(int ambient_dim, std::vector<QMat> basis,
                        const std::function<QMat(const QMat&)>& involution);

  int ambient_dim() const { return ambient_; }
  int dim() const { return int(basis_.size()); }
  const std::vector<QMat>& basis() const { return basis_; }

  bool contains(const QMat& x) const;
  // Coefficients in the stored basis; throws when x lies outside A.
  QVec coordinates(const QMat& x) const;
  QMat element(const QVec& coords) const;
  QMat sigma(const QMat& x) const;
  // Action of sigma on basis coordinates (column i = coordinates of
  // sigma(basis[i])); the skew elements are the kernel of this plus id.
  const QMat& sigma_on_coordinates() const { return sigma_coords_; }

  // Basis of the center Z(A): elements of A commuting with all of A.
  std::vector<QMat> center() const;

 private:
  int ambient_;
  std::vector<QMat> basis_;
  Subspace span_;
  QMat sigma_coords_;
};

// The adjoint involution a |-> b^{-1} a^T b of a nondegenerate symmetric or
// alternating form b, on the full matrix algebra End(Q^n). It is the unique
// involution with b(a v, w) = b(v, sigma(a) w).
AlgebraWithInvolution adjoint_involution(const QMat& b);

// V + V* with the symmetric pairing b((v,eta),(v',eta')) = eta(v') + eta'(v)
// between the summands, and the algebra acting on V* through the involution:
// (a eta)(v) = eta(sigma(a) v). V sits in degree +1 and V* in degree -1.
struct ModuleWithForm {
  std::vector<QMat> action;  // one operator on V + V* per algebra basis element
  int v_dim = 0;
  QMat form;

  QMat grading() const;  // +1 on V, -1 on V*
};

// v_action[i] is the action of the i-th basis element of a on V; the
// assignment must be a unital algebra homomorphism, otherwise this throws.
ModuleWithForm build_v_tilde(const AlgebraWithInvolution& a,
                             const std::vector<QMat>& v_action);

// End_A(V + V*) via the commutant of the module action, carrying the
// restriction of the adjoint involution of mv.form.
AlgebraWithInvolution endo_with_involution(const ModuleWithForm& mv);

// Primitive central idempotents of A; these cut out the minimal two-sided
// ideals e_i A. Requires the center to be etale (A semisimple).
std::vector<QMat> central_idempotents(const AlgebraWithInvolution& a);

// First when sigma fixes the center pointwise, Second otherwise. Requires
// (A, sigma) simple as an algebra with involution: either one minimal ideal,
// or exactly two that sigma swaps. Throws "not simple with involution"
// naming the offending ideal otherwise.
InvolutionKind kind(const AlgebraWithInvolution& a);

// Second kind is Unitary. For the first kind, with F = Z(A) and degree
// n = sqrt(dim_F A), the skew dimension over F decides: n(n-1)/2 orthogonal,
// n(n+1)/2 symplectic. Throws "unclassifiable" when nothing matches.
InvolutionType classify_type(const AlgebraWithInvolution& a);

struct SkewPair {
  MatrixLieAlgebra skew;  // kernel of sigma + id, closed under brackets
  MatrixLieAlgebra s;     // derived subalgebra [Skew, Skew]
};
SkewPair skew_and_derived(const AlgebraWithInvolution& a);

// Checks Skew(End_A(V+V*), adjoint involution of mv.form) equals
// so(mv.form) intersected with the commutant of the action, as subspaces.
bool verify_skew_equals_so(const ModuleWithForm& mv);

// Isometry-group membership: x invertible with x sigma(x) = 1. Throws when
// x lies outside the algebra.
bool iso_membership(const AlgebraWithInvolution& a, const QMat& x);

}  // namespace lefkit
