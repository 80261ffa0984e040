#include "lefkit/quadform.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace lefkit {

QuadraticSpace::QuadraticSpace(QMat g, std::vector<int> tags)
    : gram(std::move(g)), grading(std::move(tags)) {
  if (!gram.is_square() || gram.transpose() != gram)
    throw std::invalid_argument("gram matrix must be symmetric");
  if (!grading.empty() && int(grading.size()) != gram.rows())
    throw std::invalid_argument("one grading tag per basis vector");
}

Rat QuadraticSpace::form(const QVec& v, const QVec& w) const {
  if (int(v.size()) != dimension() || int(w.size()) != dimension())
    throw std::invalid_argument("vector length mismatch");
  QVec gw = gram.apply(w);
  Rat out(0);
  for (size_t i = 0; i < v.size(); ++i) out += v[i] * gw[i];
  return out;
}

QMat MukaiLattice::middle() const {
  int m = space.dimension() - 2;
  QMat b(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) b(i, j) = space.gram(alpha_index + 1 + i, alpha_index + 1 + j);
  return b;
}

MukaiLattice mukai(const QMat& b) {
  if (!b.is_square() || b.transpose() != b)
    throw std::invalid_argument("form must be symmetric");
  if (determinant(b) == 0) throw std::invalid_argument("form is degenerate");
  int m = b.rows();
  QMat g = QMat::zero(m + 2, m + 2);
  g(0, m + 1) = g(m + 1, 0) = -1;
  g.set_block(1, 1, b);
  auto tags = std::vector<int>(size_t(m) + 2, 0);
  tags.front() = -2;
  tags.back() = 2;
  MukaiLattice out{QuadraticSpace(std::move(g), std::move(tags)), 0, m + 1};
  return out;
}

QVec reflection(const QVec& u, const QVec& z, const QuadraticSpace& q) {
  Rat qu = q.q(u);
  if (qu == 0) throw std::invalid_argument("reflection vector is isotropic");
  Rat c = Rat(2) * q.form(u, z) / qu;
  QVec out = z;
  for (size_t i = 0; i < out.size(); ++i) out[i] -= c * u[i];
  return out;
}

QMat reflection_matrix(const QVec& u, const QuadraticSpace& q) {
  Rat qu = q.q(u);
  if (qu == 0) throw std::invalid_argument("reflection vector is isotropic");
  int n = q.dimension();
  QVec gu = q.gram.apply(u);  // row functional b(u, -)
  QMat r = QMat::identity(n);
  Rat c = Rat(2) / qu;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r(i, j) -= c * u[size_t(i)] * gu[size_t(j)];
  return r;
}

namespace {

void check_basis(const QuadraticSpace& q, const std::vector<QVec>& basis,
                 const std::string& name) {
  int n = q.dimension();
  if (int(basis.size()) != n)
    throw std::invalid_argument(name + " basis has the wrong size");
  for (const QVec& v : basis)
    if (int(v.size()) != n)
      throw std::invalid_argument(name + " basis has the wrong size");
  if (rank(mat_from_rows(basis, n)) != n)
    throw std::invalid_argument(name + " basis is not a basis");
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j)
      if (q.form(basis[i], basis[j]) != 0)
        throw std::invalid_argument(name + " basis is not orthogonal");
}

}  // namespace

WittResult witt_cancel_equivariant(const QuadraticSpace& q,
                                   const std::vector<QVec>& e_basis,
                                   const std::vector<QVec>& f_basis, int m,
                                   const std::vector<QMat>& action) {
  int n = q.dimension();
  if (!q.nondegenerate()) throw std::invalid_argument("form is degenerate");
  check_basis(q, e_basis, "e");
  check_basis(q, f_basis, "f");
  if (m < 0 || m > n) throw std::invalid_argument("prefix count out of range");
  for (int i = 0; i < m; ++i)
    if (q.q(e_basis[size_t(i)]) != q.q(f_basis[size_t(i)]))
      throw std::invalid_argument("prefix values disagree at index " + std::to_string(i));
  for (const QMat& g : action) {
    if (g.rows() != n || g.cols() != n || g.transpose() * q.gram * g != q.gram)
      throw std::invalid_argument("action is not by isometries");
    for (int i = 0; i < m; ++i)
      if (g.apply(e_basis[size_t(i)]) != e_basis[size_t(i)] ||
          g.apply(f_basis[size_t(i)]) != f_basis[size_t(i)])
        throw std::invalid_argument("prefix vector is not fixed by the action");
  }

  WittResult out;
  out.isometry = QMat::identity(n);
  for (int i = 0; i < m; ++i) {
    const QVec& target = f_basis[size_t(i)];
    QVec u = out.isometry.apply(e_basis[size_t(i)]);
    if (u == target) continue;
    QVec d = u - target;
    if (q.q(d) != 0) {
      out.isometry = reflection_matrix(d, q) * out.isometry;
      out.mirrors.push_back(std::move(d));
    } else {
      // q(u + f_i) = 4 q(e_i) != 0: send u to -f_i, then flip it back
      QVec s = u + target;
      out.isometry = reflection_matrix(s, q) * out.isometry;
      out.isometry = reflection_matrix(target, q) * out.isometry;
      out.mirrors.push_back(std::move(s));
      out.mirrors.push_back(target);
    }
  }

  const QMat& phi = out.isometry;
  if (phi.transpose() * q.gram * phi != q.gram)
    throw std::logic_error("constructed map is not an isometry");
  for (int i = 0; i < m; ++i)
    if (phi.apply(e_basis[size_t(i)]) != f_basis[size_t(i)])
      throw std::logic_error("constructed map misses a prefix vector");
  for (const QMat& g : action)
    if (!bracket(phi, g).is_zero())
      throw std::logic_error("constructed map is not equivariant");

  // phi(e_j) for j > m lies in the f-complement; read off its f-coordinates
  QMat fcols(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) fcols(i, j) = f_basis[size_t(j)][size_t(i)];
  QMat finv = *inverse(fcols);
  out.complement_map = QMat(n - m, n - m);
  for (int j = m; j < n; ++j) {
    QVec c = finv.apply(phi.apply(e_basis[size_t(j)]));
    for (int i = 0; i < m; ++i)
      if (c[size_t(i)] != 0)
        throw std::logic_error("complement image leaves the f-complement");
    for (int i = m; i < n; ++i) out.complement_map(i - m, j - m) = c[size_t(i)];
  }
  return out;
}

std::optional<Rat> is_similitude(const QMat& f, const QuadraticSpace& q) {
  if (f.rows() != q.dimension() || f.cols() != q.dimension())
    throw std::invalid_argument("matrix size mismatch");
  QMat pulled = f.transpose() * q.gram * f;
  int n = q.dimension();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (q.gram(i, j) != 0) {
        if (pulled(i, j) == 0) return std::nullopt;
        Rat lambda = q.gram(i, j) / pulled(i, j);
        if (lambda * pulled == q.gram) return lambda;
        return std::nullopt;
      }
  return Rat(1);  // the zero form: every map rescales it trivially
}

}  // namespace lefkit
