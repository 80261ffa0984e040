#include "lefkit/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace lefkit {

QVec flatten(const QMat& m) {
  QVec v;
  v.reserve(size_t(m.rows()) * size_t(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

QMat unflatten(const QVec& v, int rows, int cols) {
  if (int(v.size()) != rows * cols) throw std::invalid_argument("unflatten: size mismatch");
  QMat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = v[size_t(i) * cols + j];
  return m;
}

QMat mat_from_rows(const std::vector<QVec>& rows, int ambient) {
  QMat m(int(rows.size()), ambient);
  for (int i = 0; i < int(rows.size()); ++i) {
    if (int(rows[size_t(i)].size()) != ambient)
      throw std::invalid_argument("mat_from_rows: ragged input");
    for (int j = 0; j < ambient; ++j) m(i, j) = rows[size_t(i)][size_t(j)];
  }
  return m;
}

RrefResult rref(QMat m) {
  RrefResult res;
  int rows = m.rows(), cols = m.cols();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    size_t best_bits = 0;
    for (int i = r; i < rows; ++i) {
      if (m(i, c) == 0) continue;
      size_t bits = rat_bits(m(i, c));
      if (pivot < 0 || bits < best_bits) {
        pivot = i;
        best_bits = bits;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = c; j < cols; ++j) std::swap(m(r, j), m(pivot, j));
    Rat inv = 1 / m(r, c);
    for (int j = c; j < cols; ++j) m(r, j) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rat f = m(i, c);
      for (int j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  res.mat = std::move(m);
  return res;
}

int rank(const QMat& m) { return rref(m).rank; }

std::vector<QVec> kernel_basis(const QMat& m) {
  RrefResult r = rref(m);
  int cols = m.cols();
  std::vector<bool> is_pivot(size_t(cols), false);
  for (int p : r.pivots) is_pivot[size_t(p)] = true;
  std::vector<QVec> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[size_t(free)]) continue;
    QVec v = zero_vec(cols);
    v[size_t(free)] = 1;
    for (int i = 0; i < r.rank; ++i) v[size_t(r.pivots[size_t(i)])] = -r.mat(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVec> solve(const QMat& a, const QVec& b) {
  if (int(b.size()) != a.rows()) throw std::invalid_argument("solve: size mismatch");
  QMat aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[size_t(i)];
  }
  RrefResult r = rref(std::move(aug));
  QVec x = zero_vec(a.cols());
  for (int i = 0; i < r.rank; ++i) {
    int p = r.pivots[size_t(i)];
    if (p == a.cols()) return std::nullopt;  // inconsistent row 0 ... 0 | 1
    x[size_t(p)] = r.mat(i, a.cols());
  }
  return x;
}

std::optional<QMat> inverse(const QMat& a) {
  if (!a.is_square()) throw std::invalid_argument("inverse: not square");
  int n = a.rows();
  if (n == 0) return QMat(0, 0);
  QMat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  RrefResult r = rref(std::move(aug));
  if (r.rank < n || r.pivots[size_t(n) - 1] >= n) return std::nullopt;
  QMat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = r.mat(i, n + j);
  return inv;
}

Rat determinant(QMat a) {
  if (!a.is_square()) throw std::invalid_argument("determinant: not square");
  int n = a.rows();
  Rat det(1);
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int i = c; i < n; ++i)
      if (a(i, c) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) return Rat(0);
    if (pivot != c) {
      for (int j = c; j < n; ++j) std::swap(a(c, j), a(pivot, j));
      det = -det;
    }
    det *= a(c, c);
    Rat inv = 1 / a(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      Rat f = a(i, c) * inv;
      for (int j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

std::vector<QMat> commutant(int n, const std::vector<QMat>& gens) {
  // Unknown x, constraints g x - x g = 0 for each generator, stacked into one
  // system over the n^2 entries of x.
  for (const QMat& g : gens)
    if (g.rows() != n || g.cols() != n) throw std::invalid_argument("commutant: bad generator");
  int n2 = n * n;
  QMat sys(int(gens.size()) * n2, n2);
  int row = 0;
  for (const QMat& g : gens) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        // coefficient of x_{kl} in (g x - x g)_{ij}
        for (int k = 0; k < n; ++k) {
          sys(row, k * n + j) += g(i, k);   // g_{ik} x_{kj}
          sys(row, i * n + k) -= g(k, j);   // x_{ik} g_{kj}
        }
        ++row;
      }
  }
  std::vector<QMat> basis;
  for (const QVec& v : kernel_basis(sys)) basis.push_back(unflatten(v, n, n));
  return basis;
}

Signature signature(QMat gram) {
  if (!gram.is_square()) throw std::invalid_argument("signature: not square");
  int n = gram.rows();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (gram(i, j) != gram(j, i)) throw std::invalid_argument("signature: not symmetric");

  Signature sig;
  // Symmetric congruence elimination. When the whole diagonal vanishes but
  // some b_ij != 0, replace row/col i by their sum with row/col j, which
  // puts 2 b_ij on the diagonal.
  for (int step = 0; step < n; ++step) {
    int p = -1;
    for (int i = step; i < n; ++i)
      if (gram(i, i) != 0) {
        p = i;
        break;
      }
    if (p < 0) {
      int a = -1, b = -1;
      for (int i = step; i < n && a < 0; ++i)
        for (int j = i + 1; j < n; ++j)
          if (gram(i, j) != 0) {
            a = i;
            b = j;
            break;
          }
      if (a < 0) {
        sig.zero += n - step;
        break;
      }
      for (int j = 0; j < n; ++j) gram(a, j) += gram(b, j);
      for (int i = 0; i < n; ++i) gram(i, a) += gram(i, b);
      p = a;
    }
    if (p != step) {
      for (int j = 0; j < n; ++j) std::swap(gram(p, j), gram(step, j));
      for (int i = 0; i < n; ++i) std::swap(gram(i, p), gram(i, step));
    }
    Rat d = gram(step, step);
    if (d > 0)
      ++sig.positive;
    else
      ++sig.negative;
    for (int i = step + 1; i < n; ++i) {
      if (gram(i, step) == 0) continue;
      Rat f = gram(i, step) / d;
      for (int j = 0; j < n; ++j) gram(i, j) -= f * gram(step, j);
      for (int j = 0; j < n; ++j) gram(j, i) -= f * gram(j, step);
    }
  }
  return sig;
}

Subspace Subspace::from_vectors(const std::vector<QVec>& vecs, int ambient) {
  Subspace s(ambient);
  if (vecs.empty()) return s;
  RrefResult r = rref(mat_from_rows(vecs, ambient));
  for (int i = 0; i < r.rank; ++i) {
    QVec row = zero_vec(ambient);
    for (int j = 0; j < ambient; ++j) row[size_t(j)] = r.mat(i, j);
    s.basis_.push_back(std::move(row));
  }
  return s;
}

bool Subspace::contains(const QVec& v) const {
  if (int(v.size()) != ambient_) throw std::invalid_argument("contains: size mismatch");
  QVec w = v;
  for (size_t i = 0; i < basis_.size(); ++i) {
    // pivot of basis row i is its first nonzero (unit) entry
    size_t p = 0;
    while (p < w.size() && basis_[i][p] == 0) ++p;
    if (p == w.size()) continue;
    if (w[p] != 0) {
      Rat f = w[p];
      for (size_t j = p; j < w.size(); ++j) w[j] -= f * basis_[i][j];
    }
  }
  return is_zero(w);
}

bool Subspace::contains(const Subspace& other) const {
  for (const QVec& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw std::invalid_argument("sum: ambient mismatch");
  std::vector<QVec> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return from_vectors(all, ambient_);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw std::invalid_argument("intersect: ambient mismatch");
  // Zassenhaus: reduce rows [u | u] and [w | 0]; rows whose left half is zero
  // carry a basis of the intersection in the right half.
  int n = ambient_;
  QMat m(dim() + other.dim(), 2 * n);
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < n; ++j) {
      m(i, j) = basis_[size_t(i)][size_t(j)];
      m(i, n + j) = basis_[size_t(i)][size_t(j)];
    }
  for (int i = 0; i < other.dim(); ++i)
    for (int j = 0; j < n; ++j) m(dim() + i, j) = other.basis_[size_t(i)][size_t(j)];
  RrefResult r = rref(std::move(m));
  std::vector<QVec> inter;
  for (int i = 0; i < r.rank; ++i) {
    if (r.pivots[size_t(i)] < n) continue;
    QVec v = zero_vec(n);
    for (int j = 0; j < n; ++j) v[size_t(j)] = r.mat(i, n + j);
    inter.push_back(std::move(v));
  }
  return from_vectors(inter, n);
}

std::optional<QVec> Subspace::coordinates(const QVec& v) const {
  if (int(v.size()) != ambient_) throw std::invalid_argument("coordinates: size mismatch");
  // RREF basis: the coefficient of basis row i is v at that row's pivot.
  QVec coeff(basis_.size());
  QVec check = zero_vec(ambient_);
  for (size_t i = 0; i < basis_.size(); ++i) {
    size_t p = 0;
    while (p < basis_[i].size() && basis_[i][p] == 0) ++p;
    coeff[i] = v[p];
    for (size_t j = 0; j < check.size(); ++j) check[j] += coeff[i] * basis_[i][j];
  }
  if (check != v) return std::nullopt;
  return coeff;
}

std::vector<Int> IntSpan::reduce(const QVec& v) const {
  // Clear denominators and the content, then eliminate against stored rows
  // with fraction-free updates, renormalizing the content every step.
  Int l(1);
  for (const Rat& x : v) l = lcm(l, den(x));
  std::vector<Int> e(v.size());
  for (size_t i = 0; i < v.size(); ++i) e[i] = Int(num(v[i]) * (l / den(v[i])));
  auto normalize = [](std::vector<Int>& w) {
    Int g(0);
    for (const Int& x : w) {
      g = gcd(g, x);
      if (g == 1) break;
    }
    if (g > 1)
      for (Int& x : w) x /= g;
  };
  normalize(e);
  for (const Row& row : rows_) {
    if (e[size_t(row.pivot)] == 0) continue;
    Int c = e[size_t(row.pivot)];
    const Int& p = row.e[size_t(row.pivot)];
    for (size_t j = 0; j < e.size(); ++j) e[j] = e[j] * p - row.e[j] * c;
    normalize(e);
  }
  bool zero = true;
  for (const Int& x : e)
    if (x != 0) {
      zero = false;
      break;
    }
  if (zero) e.clear();
  return e;
}

bool IntSpan::add(const QVec& v) {
  if (int(v.size()) != ambient_) throw std::invalid_argument("IntSpan: size mismatch");
  std::vector<Int> e = reduce(v);
  if (e.empty()) return false;
  int pivot = 0;
  while (e[size_t(pivot)] == 0) ++pivot;
  Row row{std::move(e), pivot};
  auto pos = std::lower_bound(rows_.begin(), rows_.end(), row,
                              [](const Row& a, const Row& b) { return a.pivot < b.pivot; });
  rows_.insert(pos, std::move(row));
  return true;
}

bool IntSpan::contains(const QVec& v) const { return reduce(v).empty(); }

}  // namespace lefkit
