#include "lefkit/llv.hpp"

#include <cstddef>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace lefkit {

namespace {

bool is_pure_degree(const QMat& x, const GradedSpace& m, int degree) {
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j)
      if (x(i, j) != 0 && m.degrees[size_t(i)] != m.degrees[size_t(j)] + degree) return false;
  return true;
}

// Skew algebra dimension for a nondegenerate symmetric or alternating form,
// after checking that every generator actually is skew for it.
int skew_cap(const QMat& b, const std::vector<QMat>& gens) {
  const int n = b.rows();
  if (b.cols() != n) throw std::invalid_argument("invariant form must be square");
  if (rank(b) != n) throw std::invalid_argument("invariant form must be nondegenerate");
  const QMat bt = b.transpose();
  const bool symmetric = bt == b;
  const bool alternating = !symmetric && bt == -b;
  if (!symmetric && !alternating)
    throw std::invalid_argument("invariant form must be symmetric or alternating");
  for (const QMat& x : gens)
    if (!(x.transpose() * b + b * x).is_zero())
      throw std::invalid_argument("generator is not skew for the invariant form");
  return symmetric ? n * (n - 1) / 2 : n * (n + 1) / 2;
}

}  // namespace

Sl2Triple jacobson_morozov(const QMat& e, const GradedSpace& m) {
  const int n = m.total_dim();
  if (e.rows() != n || e.cols() != n)
    throw std::invalid_argument("operator size does not match the space");
  if (!is_pure_degree(e, m, 2))
    throw std::invalid_argument("no hard Lefschetz: operator is not of pure degree 2");
  if (!has_hard_lefschetz(e, m)) throw std::invalid_argument("no hard Lefschetz");

  QMat h = grading_operator(m);

  // Unknown entries of f sit at positions of degree -2. The commutator with
  // e is linear in them: [e, E_ij] has column j equal to e's column i and
  // row i equal to minus e's row j.
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m.degrees[size_t(i)] == m.degrees[size_t(j)] - 2) slots.emplace_back(i, j);

  QMat sys = QMat::zero(n * n, int(slots.size()));
  for (size_t k = 0; k < slots.size(); ++k) {
    auto [i, j] = slots[k];
    for (int r = 0; r < n; ++r) sys(r * n + j, int(k)) += e(r, i);
    for (int c = 0; c < n; ++c) sys(i * n + c, int(k)) -= e(j, c);
  }

  auto sol = solve(sys, flatten(h));
  if (!sol) throw std::runtime_error("Lefschetz system is inconsistent");
  if (!kernel_basis(sys).empty()) throw std::runtime_error("non-unique solution");

  QMat f = QMat::zero(n, n);
  for (size_t k = 0; k < slots.size(); ++k) f(slots[k].first, slots[k].second) = (*sol)[k];

  if (bracket(e, f) != h || bracket(h, f) != Rat(-2) * f || bracket(h, e) != Rat(2) * e)
    throw std::runtime_error("non-unique solution");
  return Sl2Triple{e, h, f};
}

namespace {

// Shared sampling loop: candidates live in coordinates of `algebra`, are
// tested by `accept`, and the found elements are greedily kept while they
// enlarge the span of the degree-2 part.
struct SampleResult {
  std::vector<QVec> accepted;
  int span_dim = 0;
  int target_dim = 0;
};

SampleResult sample_lefschetz(const GradedAlgebra& algebra, const LefschetzSampler& sampler,
                              const std::function<bool(const QVec&)>& is_lefschetz) {
  const int n = algebra.total_dim();
  const auto deg2 = algebra.space().indices(2);
  SampleResult out;
  out.target_dim = int(deg2.size());
  IntSpan found(n);
  Rng rng(sampler.seed);
  int attempts = 0;
  auto consider = [&](const QVec& a) {
    ++attempts;
    if (is_zero(a) || !is_lefschetz(a)) return;
    if (found.add(a)) out.accepted.push_back(a);
  };
  for (size_t t = 0; t < deg2.size(); ++t) {
    if (attempts >= sampler.max_attempts || found.dim() >= out.target_dim) break;
    consider(unit_vec(n, deg2[t]));
  }
  while (attempts < sampler.max_attempts && found.dim() < out.target_dim) {
    QVec a = zero_vec(n);
    for (int idx : deg2) a[size_t(idx)] = rng.rat_in(sampler.coefficient_range);
    consider(a);
  }
  out.span_dim = found.dim();
  return out;
}

}  // namespace

MatrixLieAlgebra llv_algebra(const GradedAlgebra& r, LefschetzSampler sampler,
                             const std::optional<QMat>& invariant_form,
                             std::vector<std::string>* warnings) {
  const GradedSpace m = r.shifted_space();
  const int n = r.total_dim();
  if (r.space().dim(2) == 0) {
    if (warnings) warnings->push_back("degree-2 part is zero: returning the zero algebra");
    return MatrixLieAlgebra::from_span(n, {});
  }

  SampleResult found = sample_lefschetz(
      r, sampler, [&](const QVec& a) { return has_hard_lefschetz(r.mult_operator(a), m); });
  if (found.accepted.empty()) throw std::runtime_error("no Lefschetz element found");
  if (found.span_dim < found.target_dim && warnings) {
    std::ostringstream os;
    os << "span deficiency: hard Lefschetz elements span " << found.span_dim << " of "
       << found.target_dim << " degree-2 dimensions";
    warnings->push_back(os.str());
  }

  std::vector<QMat> gens;
  for (const QVec& a : found.accepted) {
    Sl2Triple t = jacobson_morozov(r.mult_operator(a), m);
    gens.push_back(std::move(t.e));
    gens.push_back(std::move(t.f));
  }

  MatrixLieAlgebra g =
      invariant_form ? closure_capped(gens, skew_cap(*invariant_form, gens)) : closure(gens);
  QMat h = grading_operator(m);
  if (!g.contains(h)) throw std::runtime_error("grading operator missing from the closure");
  return grade_by(h, g);
}

MatrixLieAlgebra llv_pre_G(const GradedAlgebra& r, const GroupActionOnAlgebra& act,
                           LefschetzSampler sampler, std::vector<std::string>* warnings) {
  const SubAlgebra sub = invariants(r, act);
  const GradedSpace m = r.shifted_space();
  const GradedSpace msub = sub.algebra.shifted_space();
  if (sub.algebra.space().dim(2) == 0)
    throw std::invalid_argument("setup violation: the invariant subring has zero degree-2 part");

  int failed_full = 0, failed_invariant = 0;
  SampleResult found = sample_lefschetz(sub.algebra, sampler, [&](const QVec& asub) {
    if (!has_hard_lefschetz(r.mult_operator(sub.embedding.apply(asub)), m)) {
      ++failed_full;
      return false;
    }
    if (!has_hard_lefschetz(sub.algebra.mult_operator(asub), msub)) {
      ++failed_invariant;
      return false;
    }
    return true;
  });
  if (found.accepted.empty()) {
    std::ostringstream os;
    os << "setup violation: no invariant degree-2 element has hard Lefschetz on both rings ("
       << failed_full << " failed on the full algebra, " << failed_invariant
       << " on the invariant subring)";
    throw std::runtime_error(os.str());
  }
  if (found.span_dim < found.target_dim && warnings) {
    std::ostringstream os;
    os << "span deficiency: invariant hard Lefschetz elements span " << found.span_dim << " of "
       << found.target_dim << " invariant degree-2 dimensions";
    warnings->push_back(os.str());
  }

  std::vector<QMat> gens;
  for (const QVec& asub : found.accepted) {
    Sl2Triple t = jacobson_morozov(r.mult_operator(sub.embedding.apply(asub)), m);
    gens.push_back(std::move(t.e));
    gens.push_back(std::move(t.f));
  }
  MatrixLieAlgebra g = closure(gens);
  QMat h = grading_operator(m);
  if (!g.contains(h)) throw std::runtime_error("grading operator missing from the closure");
  return grade_by(h, g);
}

MatrixLieAlgebra restrict(const MatrixLieAlgebra& g, const QMat& embedding) {
  const int n = g.matrix_size();
  const int nsub = embedding.cols();
  if (embedding.rows() != n)
    throw std::invalid_argument("embedding rows do not match the ambient space");
  std::vector<QVec> cols;
  for (int j = 0; j < nsub; ++j) {
    QVec c = zero_vec(n);
    for (int i = 0; i < n; ++i) c[size_t(i)] = embedding(i, j);
    cols.push_back(std::move(c));
  }
  if (Subspace::from_vectors(cols, n).dim() != nsub)
    throw std::invalid_argument("embedding columns are dependent");

  std::vector<QMat> restricted;
  for (int bi = 0; bi < g.dim(); ++bi) {
    const QMat& x = g.basis()[size_t(bi)];
    QMat y(nsub, nsub);
    for (int j = 0; j < nsub; ++j) {
      auto c = solve(embedding, x.apply(cols[size_t(j)]));
      if (!c)
        throw std::invalid_argument("not invariant: basis element " + std::to_string(bi) +
                                    " does not preserve the subspace");
      for (int i = 0; i < nsub; ++i) y(i, j) = (*c)[size_t(i)];
    }
    restricted.push_back(std::move(y));
  }
  return MatrixLieAlgebra::from_span(nsub, restricted);
}

bool is_jordan_lefschetz(const MatrixLieAlgebra& g) {
  if (g.dim() == 0) return true;
  if (!g.graded()) throw std::invalid_argument("algebra carries no grading");
  for (const auto& [d, piece] : g.grading())
    if (d != -2 && d != 0 && d != 2 && !piece.empty()) return false;
  return true;
}

Subspace invariant_closure(const MatrixLieAlgebra& g, const Subspace& seed,
                           const GradedSpace& m) {
  const int n = m.total_dim();
  if (seed.ambient() != n || g.matrix_size() != n)
    throw std::invalid_argument("ambient dimensions do not match");
  IntSpan span(n);
  std::vector<QVec> work;
  for (const QVec& v : seed.basis())
    if (span.add(v)) work.push_back(v);
  for (size_t head = 0; head < work.size(); ++head) {
    const QVec v = work[head];  // copy: work may reallocate
    for (const QMat& x : g.basis()) {
      QVec w = x.apply(v);
      if (span.add(w)) work.push_back(std::move(w));
    }
  }
  return Subspace::from_vectors(work, n);
}

TensorLlvReport verify_tensor_llv(const GradedAlgebra& r, const GradedAlgebra& s,
                                  LefschetzSampler sampler) {
  if (r.space().dim(1) != 0 && s.space().dim(1) != 0)
    throw std::invalid_argument("tensor factors both have nonzero degree-1 part");

  MatrixLieAlgebra gr = llv_algebra(r, sampler);
  MatrixLieAlgebra gs = llv_algebra(s, sampler);
  MatrixLieAlgebra gt = llv_algebra(tensor(r, s), sampler);

  const QMat idr = QMat::identity(r.total_dim());
  const QMat ids = QMat::identity(s.total_dim());
  std::vector<QVec> block;
  for (const QMat& x : gr.basis()) block.push_back(flatten(kron(x, ids)));
  for (const QMat& y : gs.basis()) block.push_back(flatten(kron(idr, y)));
  const int nt = r.total_dim() * s.total_dim();

  TensorLlvReport rep;
  rep.dim_left = gr.dim();
  rep.dim_right = gs.dim();
  rep.dim_product = gt.dim();
  rep.dims_add = rep.dim_left + rep.dim_right == rep.dim_product;
  rep.block_embedding_equal = Subspace::from_vectors(block, nt * nt) == gt.span();
  return rep;
}

}  // namespace lefkit
