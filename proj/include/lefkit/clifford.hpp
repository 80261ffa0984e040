#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lefkit/matrix.hpp"

namespace lefkit {

// Element of the Clifford algebra of a diagonal rational quadratic form.
// Coefficients are indexed by subset bitmask: bit i set means generator e_i
// occurs in the monomial, so coeffs[0] is the scalar part and coeffs[1 << i]
// the e_i part. The diagonal values ride along so that binary operations can
// reject operands from different algebras.
struct CliffordElement {
  std::vector<Rat> diag;
  QVec coeffs;

  bool operator==(const CliffordElement& other) const {
    return diag == other.diag && coeffs == other.coeffs;
  }
  bool operator!=(const CliffordElement& other) const { return !(*this == other); }
};

CliffordElement operator+(const CliffordElement& a, const CliffordElement& b);
CliffordElement operator-(const CliffordElement& a, const CliffordElement& b);
CliffordElement operator-(const CliffordElement& x);
CliffordElement operator*(const Rat& c, const CliffordElement& x);

// C(V, q) for a symmetric rational Gram matrix. The form is diagonalized once
// at construction by an exact congruence E^t G E = D; generators square to
// the diagonal values and anticommute. Vector-level inputs and outputs pass
// through the recorded change of basis, so callers stay in the original
// coordinates throughout.
class CliffordAlgebra {
 public:
  explicit CliffordAlgebra(const QMat& gram);

  int generators() const { return n_; }
  int dim() const { return int(1u << unsigned(n_)); }
  const QMat& gram() const { return gram_; }
  const std::vector<Rat>& diagonal() const { return diag_; }
  // Columns are the orthogonal basis written in the original coordinates.
  const QMat& basis_change() const { return change_; }
  const QMat& basis_change_inv() const { return change_inv_; }

  bool owns(const CliffordElement& x) const;

  CliffordElement zero() const;
  CliffordElement one() const;
  CliffordElement scalar(const Rat& c) const;
  CliffordElement generator(int i) const;
  // e_{s_1} ... e_{s_k} for strictly increasing orthogonal-basis indices.
  CliffordElement monomial(const std::vector<int>& indices) const;
  // Degree-1 element of a vector given in the original coordinates.
  CliffordElement vector_element(const QVec& v) const;
  // Inverse of vector_element; nullopt unless x is purely of degree 1.
  std::optional<QVec> vector_part(const CliffordElement& x) const;

 private:
  int n_ = 0;
  QMat gram_;
  std::vector<Rat> diag_;
  QMat change_;
  QMat change_inv_;
};

// Clifford product: e_S e_T = (-1)^{#{s > t}} (prod_{i in S cap T} q_i) e_{S xor T}.
CliffordElement cmul(const CliffordElement& a, const CliffordElement& b);

// The anti-involution e_{s_1}..e_{s_r} |-> (-1)^r e_{s_r}..e_{s_1}, which is
// the sign (-1)^{r(r+1)/2} on an r-monomial. star(xy) = star(y) star(x) and
// star(star(x)) = x.
CliffordElement star(const CliffordElement& x);

// Two-sided inverse, found by solving the left-multiplication linear system.
std::optional<CliffordElement> cinverse(const CliffordElement& x);

// True when every odd-length monomial coefficient vanishes.
bool is_even(const CliffordElement& x);
// The value of x when it is a multiple of 1, nullopt otherwise.
std::optional<Rat> as_scalar(const CliffordElement& x);
// True when x commutes with every generator.
bool is_central(const CliffordElement& x);

// Membership in GSpin(V, q): even, invertible, and x e_i star(x) of degree 1
// for every generator.
bool is_gspin(const CliffordElement& x);

// Matrix of v |-> x v star(x) on V, in the original coordinates. Requires
// is_gspin(x). Always a similitude of the form; when x star(x) is a scalar
// mu the multiplier is mu^2, so x star(x) = 1 gives an isometry.
QMat vector_rep(const CliffordAlgebra& alg, const CliffordElement& x);

// Algebra endomorphism of C(V, q) induced by an isometry g of the form,
// extended from V by multiplicativity on monomials.
CliffordElement induced_action(const CliffordAlgebra& alg, const QMat& g,
                               const CliffordElement& x);

struct EquivarianceReport {
  int identities_checked = 0;
  std::vector<std::string> failures;  // one witness line per violated identity
  bool ok() const { return failures.empty(); }
};

// For every invertible isometry g and sample x: the induced algebra map
// commutes with star, preserves GSpin membership, and intertwines the vector
// representation, pi(g x) = g pi(x) g^{-1}.
EquivarianceReport equivariance_check(const CliffordAlgebra& alg,
                                      const std::vector<QMat>& actions,
                                      const std::vector<CliffordElement>& samples);

}  // namespace lefkit
