#include "lefkit/idempotents.hpp"

#include <stdexcept>

namespace lefkit {

namespace {

// Minimal polynomial of `a` restricted to the cyclic subspace of v.
Poly local_min_poly(const QMat& a, const QVec& v) {
  const int n = a.rows();
  std::vector<QVec> krylov;
  QVec w = v;
  for (int k = 0; k <= n; ++k) {
    // Is w dependent on the previous Krylov vectors?
    QMat sys(n, int(krylov.size()));
    for (int j = 0; j < int(krylov.size()); ++j)
      for (int i = 0; i < n; ++i) sys(i, j) = krylov[size_t(j)][size_t(i)];
    if (auto c = solve(sys, w)) {
      std::vector<Rat> coeffs(k + 1);
      for (int j = 0; j < k; ++j) coeffs[size_t(j)] = -(*c)[size_t(j)];
      coeffs[size_t(k)] = 1;
      return Poly(coeffs);
    }
    krylov.push_back(w);
    w = a.apply(w);
  }
  throw std::logic_error("min_poly: no dependency within dimension bound");
}

Poly poly_lcm(const Poly& f, const Poly& g) {
  if (f.degree() < 0) return g.monic();
  if (g.degree() < 0) return f.monic();
  Poly d = poly_gcd(f, g);
  return ((f / d) * g).monic();
}

}  // namespace

Poly min_poly(const QMat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("min_poly: square matrix required");
  const int n = a.rows();
  if (n == 0) return Poly::constant(1);
  Poly mu;  // zero
  for (int i = 0; i < n; ++i) {
    mu = poly_lcm(mu, local_min_poly(a, unit_vec(n, i)));
    if (mu.degree() == n) break;  // cannot grow further
  }
  return mu;
}

std::vector<QMat> primitive_idempotents(int n, const std::vector<QMat>& basis) {
  for (const auto& b : basis)
    if (b.rows() != n || b.cols() != n)
      throw std::invalid_argument("primitive_idempotents: basis dimension mismatch");

  std::vector<QMat> idems = {QMat::identity(n)};
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& c : basis) {
      std::vector<QMat> next;
      for (const auto& p : idems) {
        // Minimal polynomial of c on the image of p.
        Subspace image = Subspace::from_vectors(
            [&] {
              std::vector<QVec> cols;
              for (int j = 0; j < n; ++j) {
                QVec col = zero_vec(n);
                for (int i = 0; i < n; ++i) col[size_t(i)] = p(i, j);
                cols.push_back(col);
              }
              return cols;
            }(),
            n);
        const int k = image.dim();
        if (k == 0) continue;  // discard zero blocks
        QMat emb(n, k);
        for (int j = 0; j < k; ++j)
          for (int i = 0; i < n; ++i) emb(i, j) = image.basis()[size_t(j)][size_t(i)];
        // Coordinates of c * emb columns in the image basis.
        QMat restricted(k, k);
        for (int j = 0; j < k; ++j) {
          QVec img = zero_vec(n);
          for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) img[size_t(i)] += c(i, l) * emb(l, j);
          auto coords = image.coordinates(img);
          if (!coords)
            throw std::invalid_argument("primitive_idempotents: basis does not commute");
          for (int i = 0; i < k; ++i) restricted(i, j) = (*coords)[size_t(i)];
        }
        Poly mu = min_poly(restricted);
        auto factors = factor_rational(mu);
        for (const auto& [f, mult] : factors)
          if (mult > 1)
            throw std::runtime_error(
                "primitive_idempotents: algebra is not semisimple "
                "(minimal polynomial not squarefree)");
        if (factors.size() <= 1) {
          next.push_back(p);
          continue;
        }
        changed = true;
        for (const auto& [f, mult] : factors) {
          (void)mult;
          Poly g = mu / f;
          auto [d, s, t] = poly_xgcd(g, f);
          if (d.degree() != 0)
            throw std::logic_error("primitive_idempotents: squarefree factors not coprime");
          // s*g = 1 mod f after scaling by the (constant) gcd.
          Poly pi = (s * g) / d;
          pi = pi % mu;
          next.push_back(pi.eval_mat(c) * p);
        }
      }
      idems = std::move(next);
    }
  }

  // Resolution of identity: pairwise orthogonal, idempotent, summing to I.
  QMat total = QMat::zero(n, n);
  for (size_t i = 0; i < idems.size(); ++i) {
    total = total + idems[i];
    if (!(idems[i] * idems[i] == idems[i]))
      throw std::logic_error("primitive_idempotents: non-idempotent output");
    for (size_t j = i + 1; j < idems.size(); ++j)
      if (!(idems[i] * idems[j]).is_zero())
        throw std::logic_error("primitive_idempotents: outputs not orthogonal");
  }
  if (!(total == QMat::identity(n)))
    throw std::logic_error("primitive_idempotents: outputs do not sum to identity");
  return idems;
}

}  // namespace lefkit
