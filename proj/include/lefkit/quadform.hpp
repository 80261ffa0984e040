#pragma once

#include <optional>
#include <vector>

#include "lefkit/linalg.hpp"
#include "lefkit/matrix.hpp"

namespace lefkit {

// A rational quadratic space: symmetric Gram matrix plus optional degree tags
// (one per basis vector). Degeneracy is allowed here; operations that need a
// nondegenerate form check for themselves.
struct QuadraticSpace {
  QMat gram;
  std::vector<int> grading;  // empty, or one degree tag per basis vector

  explicit QuadraticSpace(QMat g, std::vector<int> tags = {});

  int dimension() const { return gram.rows(); }
  Rat form(const QVec& v, const QVec& w) const;  // b(v, w)
  Rat q(const QVec& v) const { return form(v, v); }
  bool nondegenerate() const { return determinant(gram) != 0; }
};

// The middle block framed by a hyperbolic pair: alpha in degree -2, the input
// form in degree 0, beta in degree 2, with b(alpha, beta) = -1 and both ends
// isotropic and orthogonal to the middle.
struct MukaiLattice {
  QuadraticSpace space;
  int alpha_index = 0;
  int beta_index = 0;

  // Round trip: the middle block of the extended Gram matrix.
  QMat middle() const;
};

// Extend a nondegenerate symmetric form by the hyperbolic alpha/beta pair.
// An empty form is allowed and yields the pure hyperbolic plane.
MukaiLattice mukai(const QMat& b);

// tau_u(z) = z - (2 b(u,z) / q(u)) u. Rejects isotropic u.
QVec reflection(const QVec& u, const QVec& z, const QuadraticSpace& q);
QMat reflection_matrix(const QVec& u, const QuadraticSpace& q);

struct WittResult {
  QMat isometry;              // phi with phi^T gram phi = gram, phi(e_i) = f_i
  std::vector<QVec> mirrors;  // reflection vectors in application order
  QMat complement_map;        // phi(e_j), j > m, in coordinates of f_{m+1..n}
};

// Constructive equivariant Witt cancellation. Both bases must be orthogonal
// for q, the first m vectors must pair up (q(e_i) = q(f_i)) and be fixed by
// every action matrix, and the action must be by isometries. The returned
// isometry matches the prefix, maps the complement span of e onto that of f,
// commutes with the action, and is a product of reflections in fixed vectors
// (recorded in mirrors; d = e_i - f_i when anisotropic, otherwise the
// composite through e_i + f_i and f_i).
WittResult witt_cancel_equivariant(const QuadraticSpace& q,
                                   const std::vector<QVec>& e_basis,
                                   const std::vector<QVec>& f_basis, int m,
                                   const std::vector<QMat>& action);

// lambda with f^T gram f = (1/lambda) gram, when it exists; lambda = 1 means
// f is an isometry.
std::optional<Rat> is_similitude(const QMat& f, const QuadraticSpace& q);

}  // namespace lefkit
