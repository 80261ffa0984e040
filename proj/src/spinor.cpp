#include "lefkit/spinor.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "lefkit/linalg.hpp"

namespace lefkit {

namespace {

bool antisymmetric(const QMat& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j <= i; ++j)
      if (m(i, j) != -m(j, i)) return false;
  return true;
}

}  // namespace

SpinorBlocks split_so(const QMat& x, int n) {
  if (x.rows() != 2 * n || x.cols() != 2 * n)
    throw std::invalid_argument("matrix does not act on V + V*");
  SpinorBlocks b;
  b.gl = x.block(0, 0, n, n);
  b.wedge2 = x.block(0, n, n, n);
  b.contraction2 = x.block(n, 0, n, n);
  QMat d = x.block(n, n, n, n);
  if (!(d == -b.gl.transpose()) || !antisymmetric(b.wedge2) || !antisymmetric(b.contraction2))
    throw std::invalid_argument("matrix is not skew for the split form");
  return b;
}

QMat assemble_so(const SpinorBlocks& blocks) {
  int n = blocks.gl.rows();
  if (!blocks.gl.is_square() || blocks.wedge2.rows() != n || blocks.wedge2.cols() != n ||
      blocks.contraction2.rows() != n || blocks.contraction2.cols() != n)
    throw std::invalid_argument("block sizes disagree");
  if (!antisymmetric(blocks.wedge2) || !antisymmetric(blocks.contraction2))
    throw std::invalid_argument("corner blocks must be antisymmetric");
  QMat x = QMat::zero(2 * n, 2 * n);
  x.set_block(0, 0, blocks.gl);
  x.set_block(0, n, blocks.wedge2);
  x.set_block(n, 0, blocks.contraction2);
  x.set_block(n, n, -blocks.gl.transpose());
  return x;
}

QMat gl_embedding(const QMat& a) {
  if (!a.is_square()) throw std::invalid_argument("gl element must be square");
  int n = a.rows();
  SpinorBlocks b{a, QMat::zero(n, n), QMat::zero(n, n)};
  return assemble_so(b);
}

QMat exterior_derivation(const QMat& a, const SpinorContext& ctx) {
  if (a.rows() != ctx.n || a.cols() != ctx.n)
    throw std::invalid_argument("operator does not act on V");
  const int dim = ctx.ext_dim();
  QMat out = QMat::zero(dim, dim);
  for (int col = 0; col < dim; ++col) {
    const std::vector<int>& s = ctx.ext.sets[size_t(col)];
    for (size_t p = 0; p < s.size(); ++p) {
      int v = s[p];
      auto rest = std::vector<int>();
      for (size_t q = 0; q < s.size(); ++q)
        if (q != p) rest.push_back(s[q]);
      int out_sign = merge_sign({v}, rest);
      for (int i = 0; i < ctx.n; ++i) {
        if (a(i, v) == 0) continue;
        int in_sign = merge_sign({i}, rest);
        if (in_sign == 0) continue;
        int target = ctx.ext.at(merge_sets(rest, {i}));
        out(target, col) += Rat(out_sign * in_sign) * a(i, v);
      }
    }
  }
  return out;
}

QMat wedge_two_form(const QMat& l, const SpinorContext& ctx) {
  if (l.rows() != ctx.n || l.cols() != ctx.n || !antisymmetric(l))
    throw std::invalid_argument("2-vector block must be antisymmetric of size n");
  const int dim = ctx.ext_dim();
  QMat out = QMat::zero(dim, dim);
  for (int col = 0; col < dim; ++col) {
    const std::vector<int>& s = ctx.ext.sets[size_t(col)];
    for (int i = 0; i < ctx.n; ++i)
      for (int j = i + 1; j < ctx.n; ++j) {
        if (l(i, j) == 0) continue;
        int sign = merge_sign({i, j}, s);
        if (sign == 0) continue;
        int target = ctx.ext.at(merge_sets({i, j}, s));
        out(target, col) += Rat(sign) * l(i, j);
      }
  }
  return out;
}

QMat contraction_two_form(const QMat& m, const SpinorContext& ctx) {
  if (m.rows() != ctx.n || m.cols() != ctx.n || !antisymmetric(m))
    throw std::invalid_argument("2-form block must be antisymmetric of size n");
  const int dim = ctx.ext_dim();
  QMat out = QMat::zero(dim, dim);
  for (int col = 0; col < dim; ++col) {
    const std::vector<int>& s = ctx.ext.sets[size_t(col)];
    for (int i = 0; i < ctx.n; ++i)
      for (int j = i + 1; j < ctx.n; ++j) {
        if (m(i, j) == 0) continue;
        auto pi = std::find(s.begin(), s.end(), i);
        auto pj = std::find(s.begin(), s.end(), j);
        if (pi == s.end() || pj == s.end()) continue;
        // contract j first, then i; i sits before j, so removing j does not
        // shift i's position
        int sign = ((pj - s.begin()) + (pi - s.begin())) % 2 == 0 ? 1 : -1;
        auto target = std::vector<int>();
        for (int t : s)
          if (t != i && t != j) target.push_back(t);
        out(ctx.ext.at(target), col) += Rat(sign) * m(i, j);
      }
  }
  return out;
}

QMat spinor_rep(const QMat& x, const SpinorContext& ctx) {
  SpinorBlocks b = split_so(x, ctx.n);
  const int dim = ctx.ext_dim();
  QMat out = exterior_derivation(b.gl, ctx);
  Rat shift = Rat(-1, 2) * b.gl.trace();
  for (int i = 0; i < dim; ++i) out(i, i) += shift;
  out += wedge_two_form(b.wedge2, ctx);
  out += contraction_two_form(b.contraction2, ctx);
  return out;
}

QMat scalar_action(const Rat& lambda, const SpinorContext& ctx) {
  if (lambda == 0) throw std::invalid_argument("scalar action of zero");
  const int dim = ctx.ext_dim();
  QMat out = QMat::zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    Rat p(1);
    for (size_t k = 0; k < ctx.ext.sets[size_t(i)].size(); ++k) p *= lambda;
    out(i, i) = p;
  }
  return out;
}

std::vector<QMat> cartan_copy_sums(int k, int n) {
  if (k <= 0 || n <= 0) throw std::invalid_argument("copy layout must be positive");
  auto out = std::vector<QMat>();
  for (int j = 0; j < n; ++j) {
    QMat a = QMat::zero(k * n, k * n);
    for (int i = 0; i < k; ++i) a(j * k + i, j * k + i) = 1;
    out.push_back(gl_embedding(a));
  }
  return out;
}

std::vector<QMat> invariant_raising_part(int k, int n, const QMat& p) {
  if (p.rows() != k || p.cols() != k)
    throw std::invalid_argument("pairing must be k x k");
  const int kn = k * n;
  auto out = std::vector<QMat>();
  for (int j = 0; j < n; ++j)
    for (int j2 = j + 1; j2 < n; ++j2) {
      QMat a = QMat::zero(kn, kn);
      a.set_block(j * k, j2 * k, QMat::identity(k));
      out.push_back(gl_embedding(a));
      QMat l = QMat::zero(kn, kn);
      l.set_block(j * k, j2 * k, p);
      l.set_block(j2 * k, j * k, -p.transpose());
      out.push_back(assemble_so({QMat::zero(kn, kn), l, QMat::zero(kn, kn)}));
    }
  return out;
}

std::vector<Rat> weight_of_vector(const QVec& v, const std::vector<QMat>& cartan) {
  if (is_zero(v)) throw std::invalid_argument("zero vector has no weight");
  auto out = std::vector<Rat>();
  for (size_t idx = 0; idx < cartan.size(); ++idx) {
    QVec w = cartan[idx].apply(v);
    size_t lead = 0;
    while (v[lead] == 0) ++lead;
    Rat lambda = w[lead] / v[lead];
    if (!(w == lambda * v))
      throw std::runtime_error("not an eigenvector of operator " + std::to_string(idx));
    out.push_back(lambda);
  }
  return out;
}

bool highest_weight_check(const MatrixLieAlgebra& positive_part, const QVec& v) {
  for (const QMat& x : positive_part.basis())
    if (!is_zero(x.apply(v))) return false;
  return true;
}

// ---------------------------------------------------------------------------

namespace {

void fill_monomials(int m, int d, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
  if (int(cur.size()) == m - 1) {
    cur.push_back(d);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int a = d; a >= 0; --a) {
    cur.push_back(a);
    fill_monomials(m, d - a, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> sym_monomials(int m, int d) {
  if (m < 0 || d < 0) return {};
  if (m == 0) return d == 0 ? std::vector<std::vector<int>>{{}} : std::vector<std::vector<int>>{};
  auto out = std::vector<std::vector<int>>();
  auto cur = std::vector<int>();
  fill_monomials(m, d, cur, out);
  return out;
}

int sym_dim(int m, int d) {
  if (d < 0 || m < 0) return 0;
  if (m == 0) return d == 0 ? 1 : 0;
  // C(d + m - 1, m - 1)
  Int num(1), den(1);
  for (int i = 1; i <= m - 1; ++i) {
    num *= d + i;
    den *= i;
  }
  Int q = num / den;
  return int(q.get_si());
}

SymContext::SymContext(QMat gram_in) : gram(std::move(gram_in)) {
  if (!gram.is_square() || !(gram == gram.transpose()))
    throw std::invalid_argument("symmetric power context needs a symmetric form");
  m = gram.rows();
}

QMat contraction(int degree, const SymContext& ctx) {
  if (degree < 2) throw std::invalid_argument("contraction needs degree at least 2");
  auto cols = sym_monomials(ctx.m, degree);
  auto rows = sym_monomials(ctx.m, degree - 2);
  auto row_index = std::map<std::vector<int>, int>();
  for (size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = int(i);
  QMat out = QMat::zero(int(rows.size()), int(cols.size()));
  for (size_t c = 0; c < cols.size(); ++c) {
    const std::vector<int>& e = cols[c];
    for (int i = 0; i < ctx.m; ++i) {
      if (e[size_t(i)] == 0) continue;
      // paired letters of the same variable: C(a_i, 2) ways
      if (e[size_t(i)] >= 2 && ctx.gram(i, i) != 0) {
        auto t = e;
        t[size_t(i)] -= 2;
        Rat ways(long(e[size_t(i)]) * (e[size_t(i)] - 1) / 2);
        out(row_index.at(t), int(c)) += ways * ctx.gram(i, i);
      }
      for (int j = i + 1; j < ctx.m; ++j) {
        if (e[size_t(j)] == 0 || ctx.gram(i, j) == 0) continue;
        auto t = e;
        t[size_t(i)] -= 1;
        t[size_t(j)] -= 1;
        Rat ways(long(e[size_t(i)]) * e[size_t(j)]);
        out(row_index.at(t), int(c)) += ways * ctx.gram(i, j);
      }
    }
  }
  return out;
}

Subspace harmonic_kernel(int degree, const SymContext& ctx) {
  int full = sym_dim(ctx.m, degree);
  if (degree <= 1) {
    auto vecs = std::vector<QVec>();
    for (int i = 0; i < full; ++i) vecs.push_back(unit_vec(full, i));
    return Subspace::from_vectors(vecs, full);
  }
  QMat delta = contraction(degree, ctx);
  if (rank(delta) != sym_dim(ctx.m, degree - 2))
    throw std::runtime_error("contraction is not surjective: the form is degenerate");
  return Subspace::from_vectors(kernel_basis(delta), full);
}

QMat sym_power_derivation(const QMat& a, int degree, const SymContext& ctx) {
  if (a.rows() != ctx.m || a.cols() != ctx.m)
    throw std::invalid_argument("operator does not act on the base space");
  if (degree < 0) throw std::invalid_argument("negative symmetric power");
  auto mons = sym_monomials(ctx.m, degree);
  auto index = std::map<std::vector<int>, int>();
  for (size_t i = 0; i < mons.size(); ++i) index[mons[i]] = int(i);
  QMat out = QMat::zero(int(mons.size()), int(mons.size()));
  for (size_t c = 0; c < mons.size(); ++c) {
    const std::vector<int>& e = mons[c];
    for (int i = 0; i < ctx.m; ++i) {
      if (e[size_t(i)] == 0) continue;
      for (int j = 0; j < ctx.m; ++j) {
        if (a(j, i) == 0) continue;
        auto t = e;
        t[size_t(i)] -= 1;
        t[size_t(j)] += 1;
        out(index.at(t), int(c)) += Rat(long(e[size_t(i)])) * a(j, i);
      }
    }
  }
  return out;
}

namespace {

// Hyperbolic extension of the degree-2 pairing: basis (alpha, R_2, beta) with
// b(alpha, beta) = -1 and alpha, beta isotropic and orthogonal to R_2.
QMat extended_gram(const QMat& b) {
  int m = b.rows();
  QMat g = QMat::zero(m + 2, m + 2);
  g(0, m + 1) = -1;
  g(m + 1, 0) = -1;
  g.set_block(1, 1, b);
  return g;
}

// Degree-raising operator on the extended space attached to the t-th basis
// vector of R_2: alpha -> e_t, x -> b(e_t, x) beta, beta -> 0.
QMat extended_raise(const QMat& b, int t) {
  int m = b.rows();
  QMat e = QMat::zero(m + 2, m + 2);
  e(1 + t, 0) = 1;
  for (int s = 0; s < m; ++s) e(m + 1, 1 + s) = b(t, s);
  return e;
}

}  // namespace

ShEmbeddingReport sh_embedding_check(const GradedAlgebra& factor, int copies) {
  if (copies < 0 || copies > 2)
    throw std::invalid_argument("copies out of range: supported values are 0, 1, 2");
  const GradedSpace& sp = factor.space();
  int m = sp.dim(2);
  if (factor.top() != 4 || sp.dim(0) != 1 || sp.dim(4) != 1 || sp.dim(1) != 0 ||
      sp.dim(3) != 0 || m < 1)
    throw std::invalid_argument("factor is not a surface-type ring");

  auto deg2 = sp.indices(2);
  int top_index = sp.indices(4)[0];
  int nf = factor.total_dim();
  QMat b = QMat::zero(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      QVec p = factor.mul(unit_vec(nf, deg2[size_t(i)]), unit_vec(nf, deg2[size_t(j)]));
      b(i, j) = p[size_t(top_index)];
    }
  if (determinant(b) == 0)
    throw std::invalid_argument("degree-2 pairing is degenerate");

  ShEmbeddingReport rep;
  rep.copies = copies;
  SymContext ctx(extended_gram(b));
  rep.sym_dim = sym_dim(m + 2, copies);
  rep.expected_dim = rep.sym_dim - sym_dim(m + 2, copies - 2);
  if (copies == 0) {
    rep.sh_dim = 1;
    rep.graph_dim = 1;
    rep.well_defined = rep.injective = rep.image_in_kernel = rep.dims_match = true;
    return rep;
  }

  // the model ring and its paired operators
  auto ring_ops = std::vector<QMat>();
  auto sym_ops = std::vector<QMat>();
  int nm = 0;
  QVec start_ring;
  if (copies == 1) {
    nm = nf;
    start_ring = factor.unit();
    for (int t = 0; t < m; ++t) {
      ring_ops.push_back(factor.mult_operator(unit_vec(nf, deg2[size_t(t)])));
      sym_ops.push_back(extended_raise(b, t));
    }
  } else {
    GradedAlgebra model = tensor(factor, factor);
    nm = model.total_dim();
    start_ring = model.unit();
    int u = factor.unit_index();
    for (int t = 0; t < m; ++t) {
      QVec w = zero_vec(nm);
      w[size_t(deg2[size_t(t)] * nf + u)] = 1;
      w[size_t(u * nf + deg2[size_t(t)])] = 1;
      ring_ops.push_back(model.mult_operator(w));
      sym_ops.push_back(sym_power_derivation(extended_raise(b, t), 2, ctx));
    }
  }

  // close the graph of 1 |-> alpha^copies under the paired operators
  const int ambient = nm + rep.sym_dim;
  auto pool = std::vector<QVec>();
  IntSpan span(ambient);
  QVec start = start_ring;
  QVec alpha_power = unit_vec(rep.sym_dim, 0);
  start.insert(start.end(), alpha_power.begin(), alpha_power.end());
  span.add(start);
  pool.push_back(start);
  for (size_t head = 0; head < pool.size(); ++head) {
    const QVec v = pool[head];
    for (size_t k = 0; k < ring_ops.size(); ++k) {
      QVec ring_part(v.begin(), v.begin() + nm);
      QVec sym_part(v.begin() + nm, v.end());
      QVec rr = ring_ops[k].apply(ring_part);
      QVec rs = sym_ops[k].apply(sym_part);
      rr.insert(rr.end(), rs.begin(), rs.end());
      if (span.add(rr)) pool.push_back(rr);
    }
  }

  rep.graph_dim = span.dim();
  auto ring_rows = std::vector<QVec>();
  auto sym_rows = std::vector<QVec>();
  for (const QVec& v : pool) {
    ring_rows.emplace_back(v.begin(), v.begin() + nm);
    sym_rows.emplace_back(v.begin() + nm, v.end());
  }
  rep.sh_dim = rank(mat_from_rows(ring_rows, nm));
  int sym_rank = rank(mat_from_rows(sym_rows, rep.sym_dim));
  rep.well_defined = rep.sh_dim == rep.graph_dim;
  rep.injective = sym_rank == rep.graph_dim;
  rep.image_in_kernel = true;
  if (copies >= 2) {
    QMat delta = contraction(copies, ctx);
    for (size_t i = 0; i < sym_rows.size() && rep.image_in_kernel; ++i)
      if (!is_zero(delta.apply(sym_rows[i]))) {
        rep.image_in_kernel = false;
        rep.witness = "image vector " + std::to_string(i) + " escapes the contraction kernel";
      }
  }
  rep.dims_match = rep.graph_dim == rep.expected_dim && rep.sh_dim == rep.expected_dim;
  if (!rep.well_defined)
    rep.witness = "graph is not the graph of a function: ring projection drops rank";
  else if (!rep.injective)
    rep.witness = "a nonzero ring element maps to zero";
  else if (rep.witness.empty() && !rep.dims_match)
    rep.witness = "graph dimension differs from the contraction kernel dimension";
  return rep;
}

}  // namespace lefkit
