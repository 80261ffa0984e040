#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lefkit/graded.hpp"
#include "lefkit/lie.hpp"

namespace lefkit {

// An sl2 triple inside gl(M) for a centered graded space M: h is the grading
// operator, e raises degree by 2, f lowers it, and [e,f] = h.
struct Sl2Triple {
  QMat e, h, f;
};

// Deterministic search policy for degree-2 hard Lefschetz elements: the
// standard basis first, then random combinations with coefficients drawn
// from [-coefficient_range, coefficient_range].
struct LefschetzSampler {
  std::uint64_t seed = 1;
  int max_attempts = 64;
  long coefficient_range = 3;
};

// Completes a degree-2 hard Lefschetz operator e on the centered space m to
// an sl2 triple whose h is the grading operator. The degree -2 partner f is
// the unique solution of [e, f] = h; [h, f] = -2f is verified afterwards.
// Throws "no hard Lefschetz" when the precondition fails.
Sl2Triple jacobson_morozov(const QMat& e, const GradedSpace& m);

// The Lie algebra generated by the sl2 triples of sampled hard Lefschetz
// elements of degree 2, acting on r centered at zero. Returned graded by the
// grading operator, which the algebra always contains. A zero degree-2 part
// yields the zero algebra plus a warning; failure to span R_2 within the
// budget yields a "span deficiency" warning. When invariant_form (a
// nondegenerate symmetric or alternating Gram matrix for which every
// generator must be skew) is supplied, the closure stops at the dimension of
// the full skew algebra instead of running a final confirming round.
MatrixLieAlgebra llv_algebra(const GradedAlgebra& r, LefschetzSampler sampler = {},
                             const std::optional<QMat>& invariant_form = std::nullopt,
                             std::vector<std::string>* warnings = nullptr);

// Equivariant variant: samples invariant degree-2 elements that have hard
// Lefschetz both on r and on the invariant subring, and closes their
// triples. Throws a "setup violation" when no such element exists within
// the budget.
MatrixLieAlgebra llv_pre_G(const GradedAlgebra& r, const GroupActionOnAlgebra& act,
                           LefschetzSampler sampler = {},
                           std::vector<std::string>* warnings = nullptr);

// Restriction of every basis element to the column span of embedding,
// expressed in embedding coordinates. Throws "not invariant" naming the
// first basis element that does not preserve the subspace.
MatrixLieAlgebra restrict(const MatrixLieAlgebra& g, const QMat& embedding);

// True when the attached grading lives entirely in degrees {-2, 0, 2}.
// The zero algebra counts as graded; otherwise a grading is required.
bool is_jordan_lefschetz(const MatrixLieAlgebra& g);

// Smallest g-invariant subspace of the ambient space of m containing seed.
Subspace invariant_closure(const MatrixLieAlgebra& g, const Subspace& seed,
                           const GradedSpace& m);

struct TensorLlvReport {
  int dim_left = 0;
  int dim_right = 0;
  int dim_product = 0;
  bool dims_add = false;
  bool block_embedding_equal = false;
};

// Computes llv(r), llv(s) and llv(r (x) s) and compares the block embedding
// {X (x) I} + {I (x) Y} with the product algebra as subspaces. Requires
// r or s to have zero degree-1 part, so that the degree-2 part of the
// product is the sum of the factors' degree-2 parts.
TensorLlvReport verify_tensor_llv(const GradedAlgebra& r, const GradedAlgebra& s,
                                  LefschetzSampler sampler = {});

}  // namespace lefkit
