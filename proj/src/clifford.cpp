#include "lefkit/clifford.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

#include "lefkit/linalg.hpp"

namespace lefkit {

namespace {

// Parity of #{(s, t) in S x T : s > t}, the anticommutation sign exponent of
// e_S e_T.
int inversion_parity(unsigned s, unsigned t) {
  int inv = 0;
  for (unsigned rest = t; rest != 0; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    inv += std::popcount(s >> (j + 1));
  }
  return inv & 1;
}

// E^t G E = D with E invertible and D diagonal: symmetric elimination, with a
// basis swap to pull up a nonzero diagonal entry, or one transvection
// e_k += e_j when the whole trailing diagonal vanishes (then the new diagonal
// entry is 2 G(k, j) != 0).
std::pair<QMat, QMat> diagonalize_congruence(const QMat& g) {
  const int n = g.rows();
  QMat d = g;
  QMat e = QMat::identity(n);
  auto add_basis = [&](int dst, int src, const Rat& f) {
    for (int r = 0; r < n; ++r) e(r, dst) += f * e(r, src);
    for (int r = 0; r < n; ++r) d(r, dst) += f * d(r, src);
    for (int c = 0; c < n; ++c) d(dst, c) += f * d(src, c);
  };
  auto swap_basis = [&](int a, int b) {
    for (int r = 0; r < n; ++r) std::swap(e(r, a), e(r, b));
    for (int r = 0; r < n; ++r) std::swap(d(r, a), d(r, b));
    for (int c = 0; c < n; ++c) std::swap(d(a, c), d(b, c));
  };
  for (int k = 0; k < n; ++k) {
    if (d(k, k) == 0) {
      for (int i = k + 1; i < n; ++i)
        if (d(i, i) != 0) {
          swap_basis(k, i);
          break;
        }
    }
    if (d(k, k) == 0) {
      for (int j = k + 1; j < n; ++j)
        if (d(k, j) != 0) {
          add_basis(k, j, Rat(1));
          break;
        }
    }
    if (d(k, k) == 0) continue;  // row and column k vanish from k on
    for (int i = k + 1; i < n; ++i) {
      if (d(i, k) == 0) continue;
      add_basis(i, k, -d(i, k) / d(k, k));
    }
  }
  return {e, d};
}

void require_same_algebra(const CliffordElement& a, const CliffordElement& b) {
  if (a.diag != b.diag || a.coeffs.size() != b.coeffs.size())
    throw std::invalid_argument("elements live in different Clifford algebras");
}

CliffordElement generator_of(const CliffordElement& like, int i) {
  CliffordElement g{like.diag, zero_vec(int(like.coeffs.size()))};
  g.coeffs[size_t(1u << unsigned(i))] = 1;
  return g;
}

}  // namespace

CliffordElement operator+(const CliffordElement& a, const CliffordElement& b) {
  require_same_algebra(a, b);
  return {a.diag, a.coeffs + b.coeffs};
}

CliffordElement operator-(const CliffordElement& a, const CliffordElement& b) {
  require_same_algebra(a, b);
  return {a.diag, a.coeffs - b.coeffs};
}

CliffordElement operator-(const CliffordElement& x) { return Rat(-1) * x; }

CliffordElement operator*(const Rat& c, const CliffordElement& x) {
  return {x.diag, c * x.coeffs};
}

CliffordAlgebra::CliffordAlgebra(const QMat& gram) : gram_(gram) {
  if (!gram.is_square() || gram.transpose() != gram)
    throw std::invalid_argument("gram matrix must be symmetric");
  n_ = gram.rows();
  if (n_ > 12)
    throw std::invalid_argument("Clifford model limited to 12 generators");
  auto [e, d] = diagonalize_congruence(gram);
  change_ = std::move(e);
  change_inv_ = inverse(change_).value();
  diag_.reserve(size_t(n_));
  for (int i = 0; i < n_; ++i) diag_.push_back(d(i, i));
}

bool CliffordAlgebra::owns(const CliffordElement& x) const {
  return x.diag == diag_ && int(x.coeffs.size()) == dim();
}

CliffordElement CliffordAlgebra::zero() const {
  return {diag_, zero_vec(dim())};
}

CliffordElement CliffordAlgebra::one() const { return scalar(Rat(1)); }

CliffordElement CliffordAlgebra::scalar(const Rat& c) const {
  CliffordElement x = zero();
  x.coeffs[0] = c;
  return x;
}

CliffordElement CliffordAlgebra::generator(int i) const {
  if (i < 0 || i >= n_) throw std::out_of_range("generator index out of range");
  CliffordElement x = zero();
  x.coeffs[size_t(1u << unsigned(i))] = 1;
  return x;
}

CliffordElement CliffordAlgebra::monomial(const std::vector<int>& indices) const {
  unsigned mask = 0;
  int prev = -1;
  for (int i : indices) {
    if (i < 0 || i >= n_) throw std::out_of_range("generator index out of range");
    if (i <= prev)
      throw std::invalid_argument("monomial indices must be strictly increasing");
    mask |= 1u << unsigned(i);
    prev = i;
  }
  CliffordElement x = zero();
  x.coeffs[size_t(mask)] = 1;
  return x;
}

CliffordElement CliffordAlgebra::vector_element(const QVec& v) const {
  if (int(v.size()) != n_)
    throw std::invalid_argument("vector has the wrong dimension");
  const QVec u = change_inv_.apply(v);
  CliffordElement x = zero();
  for (int i = 0; i < n_; ++i) x.coeffs[size_t(1u << unsigned(i))] = u[size_t(i)];
  return x;
}

std::optional<QVec> CliffordAlgebra::vector_part(const CliffordElement& x) const {
  if (!owns(x))
    throw std::invalid_argument("element belongs to a different algebra");
  QVec u = zero_vec(n_);
  for (size_t s = 0; s < x.coeffs.size(); ++s) {
    if (std::popcount(unsigned(s)) == 1)
      u[size_t(std::countr_zero(unsigned(s)))] = x.coeffs[s];
    else if (x.coeffs[s] != 0)
      return std::nullopt;
  }
  return change_.apply(u);
}

CliffordElement cmul(const CliffordElement& a, const CliffordElement& b) {
  require_same_algebra(a, b);
  const unsigned dim = unsigned(a.coeffs.size());
  CliffordElement out{a.diag, zero_vec(int(dim))};
  for (unsigned s = 0; s < dim; ++s) {
    if (a.coeffs[s] == 0) continue;
    for (unsigned t = 0; t < dim; ++t) {
      if (b.coeffs[t] == 0) continue;
      Rat c = a.coeffs[s] * b.coeffs[t];
      if (inversion_parity(s, t)) c = -c;
      for (unsigned rest = s & t; rest != 0; rest &= rest - 1)
        c *= a.diag[size_t(std::countr_zero(rest))];
      out.coeffs[s ^ t] += c;
    }
  }
  return out;
}

CliffordElement star(const CliffordElement& x) {
  CliffordElement out = x;
  for (size_t s = 0; s < out.coeffs.size(); ++s) {
    const int r = std::popcount(unsigned(s));
    if ((r * (r + 1) / 2) % 2 != 0) out.coeffs[s] = -out.coeffs[s];
  }
  return out;
}

std::optional<CliffordElement> cinverse(const CliffordElement& x) {
  const unsigned dim = unsigned(x.coeffs.size());
  // Column t holds the coefficients of x e_T, so lmat y = e_0 solves x y = 1.
  auto lmat = QMat(int(dim), int(dim));
  for (unsigned s = 0; s < dim; ++s) {
    if (x.coeffs[s] == 0) continue;
    for (unsigned t = 0; t < dim; ++t) {
      Rat c = x.coeffs[s];
      if (inversion_parity(s, t)) c = -c;
      for (unsigned rest = s & t; rest != 0; rest &= rest - 1)
        c *= x.diag[size_t(std::countr_zero(rest))];
      lmat(int(s ^ t), int(t)) += c;
    }
  }
  const auto sol = solve(lmat, unit_vec(int(dim), 0));
  if (!sol) return std::nullopt;
  const CliffordElement y{x.diag, *sol};
  CliffordElement unit{x.diag, zero_vec(int(dim))};
  unit.coeffs[0] = 1;
  if (cmul(x, y) != unit || cmul(y, x) != unit)
    throw std::logic_error("one-sided Clifford inverse is not two-sided");
  return y;
}

bool is_even(const CliffordElement& x) {
  for (size_t s = 0; s < x.coeffs.size(); ++s)
    if (std::popcount(unsigned(s)) % 2 != 0 && x.coeffs[s] != 0) return false;
  return true;
}

std::optional<Rat> as_scalar(const CliffordElement& x) {
  for (size_t s = 1; s < x.coeffs.size(); ++s)
    if (x.coeffs[s] != 0) return std::nullopt;
  return x.coeffs[0];
}

bool is_central(const CliffordElement& x) {
  for (int i = 0; i < int(x.diag.size()); ++i) {
    const CliffordElement g = generator_of(x, i);
    if (cmul(x, g) != cmul(g, x)) return false;
  }
  return true;
}

bool is_gspin(const CliffordElement& x) {
  if (!is_even(x)) return false;
  if (!cinverse(x)) return false;
  const CliffordElement xs = star(x);
  for (int i = 0; i < int(x.diag.size()); ++i) {
    const CliffordElement w = cmul(cmul(x, generator_of(x, i)), xs);
    for (size_t s = 0; s < w.coeffs.size(); ++s)
      if (std::popcount(unsigned(s)) != 1 && w.coeffs[s] != 0) return false;
  }
  return true;
}

QMat vector_rep(const CliffordAlgebra& alg, const CliffordElement& x) {
  if (!alg.owns(x))
    throw std::invalid_argument("element belongs to a different algebra");
  if (!is_gspin(x)) throw std::invalid_argument("element is not in GSpin");
  const int n = alg.generators();
  const CliffordElement xs = star(x);
  QMat m(n, n);
  for (int i = 0; i < n; ++i) {
    const CliffordElement w = cmul(cmul(x, alg.generator(i)), xs);
    for (int j = 0; j < n; ++j) m(j, i) = w.coeffs[size_t(1u << unsigned(j))];
  }
  return alg.basis_change() * m * alg.basis_change_inv();
}

CliffordElement induced_action(const CliffordAlgebra& alg, const QMat& g,
                               const CliffordElement& x) {
  if (!alg.owns(x))
    throw std::invalid_argument("element belongs to a different algebra");
  if (!g.is_square() || g.rows() != alg.generators())
    throw std::invalid_argument("action matrix has the wrong size");
  if (g.transpose() * alg.gram() * g != alg.gram())
    throw std::invalid_argument("action matrix is not an isometry of the form");
  const QMat h = alg.basis_change_inv() * g * alg.basis_change();
  auto image = std::vector<CliffordElement>();
  image.reserve(size_t(alg.generators()));
  for (int i = 0; i < alg.generators(); ++i) {
    CliffordElement v = alg.zero();
    for (int j = 0; j < alg.generators(); ++j)
      v.coeffs[size_t(1u << unsigned(j))] = h(j, i);
    image.push_back(std::move(v));
  }
  CliffordElement out = alg.zero();
  for (unsigned s = 0; s < unsigned(alg.dim()); ++s) {
    if (x.coeffs[s] == 0) continue;
    CliffordElement prod = alg.one();
    for (unsigned rest = s; rest != 0; rest &= rest - 1)
      prod = cmul(prod, image[size_t(std::countr_zero(rest))]);
    out = out + x.coeffs[s] * prod;
  }
  return out;
}

EquivarianceReport equivariance_check(const CliffordAlgebra& alg,
                                      const std::vector<QMat>& actions,
                                      const std::vector<CliffordElement>& samples) {
  for (const CliffordElement& x : samples)
    if (!alg.owns(x))
      throw std::invalid_argument("sample element belongs to a different algebra");
  auto inverses = std::vector<QMat>();
  inverses.reserve(actions.size());
  for (const QMat& g : actions) {
    if (!g.is_square() || g.rows() != alg.generators())
      throw std::invalid_argument("action matrix has the wrong size");
    if (g.transpose() * alg.gram() * g != alg.gram())
      throw std::invalid_argument("action matrix is not an isometry of the form");
    const auto gi = inverse(g);
    if (!gi) throw std::invalid_argument("action matrix is not invertible");
    inverses.push_back(*gi);
  }
  EquivarianceReport report;
  for (size_t a = 0; a < actions.size(); ++a) {
    for (size_t s = 0; s < samples.size(); ++s) {
      const CliffordElement& x = samples[s];
      const CliffordElement gx = induced_action(alg, actions[a], x);
      ++report.identities_checked;
      if (star(gx) != induced_action(alg, actions[a], star(x)))
        report.failures.push_back("star does not commute with action " +
                                  std::to_string(a) + " on sample " +
                                  std::to_string(s));
      if (!is_gspin(x)) continue;
      ++report.identities_checked;
      if (!is_gspin(gx)) {
        report.failures.push_back("action " + std::to_string(a) +
                                  " carries sample " + std::to_string(s) +
                                  " outside GSpin");
        continue;
      }
      if (vector_rep(alg, gx) != actions[a] * vector_rep(alg, x) * inverses[a])
        report.failures.push_back("vector representation fails to intertwine action " +
                                  std::to_string(a) + " on sample " +
                                  std::to_string(s));
    }
  }
  return report;
}

}  // namespace lefkit
