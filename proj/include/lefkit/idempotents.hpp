#pragma once

#include <vector>

#include "lefkit/linalg.hpp"
#include "lefkit/poly.hpp"

namespace lefkit {

// Minimal polynomial of a square rational matrix (monic). Computed from a
// Krylov chain per seed vector, taking lcms until the candidate annihilates.
Poly min_poly(const QMat& a);

// Primitive idempotents of the unital commutative matrix algebra spanned by
// `basis` (n x n matrices). Requires the algebra to be etale (isomorphic to a
// product of number fields); throws if some minimal polynomial is not
// squarefree. Each product factor yields exactly one rational idempotent, so
// factors that are fields larger than Q stay unsplit.
std::vector<QMat> primitive_idempotents(int n, const std::vector<QMat>& basis);

}  // namespace lefkit
