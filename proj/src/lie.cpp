#include "lefkit/lie.hpp"

#include <algorithm>
#include <stdexcept>

#include "lefkit/idempotents.hpp"
#include "lefkit/rational.hpp"

namespace lefkit {

namespace {

int square_size(const std::vector<QMat>& mats) {
  if (mats.empty()) throw std::invalid_argument("cannot infer matrix size from empty list");
  const int n = mats[0].rows();
  for (const auto& m : mats)
    if (m.rows() != n || m.cols() != n)
      throw std::invalid_argument("matrices must be square of equal size");
  return n;
}

MatrixLieAlgebra close_impl(const std::vector<QMat>& generators, int cap) {
  const int n = square_size(generators);
  IntSpan span(n * n);
  std::vector<QMat> accepted;
  for (const auto& g : generators)
    if (span.add(flatten(g))) accepted.push_back(g);

  size_t round_start = 0;
  while (round_start < accepted.size() && (cap < 0 || span.dim() < cap)) {
    const size_t round_end = accepted.size();
    for (size_t i = round_start; i < round_end && (cap < 0 || span.dim() < cap); ++i)
      for (size_t j = 0; j < i && (cap < 0 || span.dim() < cap); ++j) {
        QMat b = bracket(accepted[i], accepted[j]);
        if (span.add(flatten(b))) accepted.push_back(std::move(b));
      }
    round_start = round_end;
  }
  MatrixLieAlgebra out = MatrixLieAlgebra::from_span(n, accepted);
  if (cap >= 0 && out.dim() != cap)
    throw std::runtime_error("capped closure did not reach the expected dimension");
  return out;
}

// ad(x) in basis coordinates: column k holds the coordinates of [x, X_k].
QMat ad_matrix(const MatrixLieAlgebra& g, const QMat& x) {
  const int d = g.dim();
  QMat a(d, d);
  for (int k = 0; k < d; ++k) {
    auto c = g.coordinates(bracket(x, g.basis()[size_t(k)]));
    if (!c) throw std::invalid_argument("algebra is not closed under brackets");
    for (int i = 0; i < d; ++i) a(i, k) = (*c)[size_t(i)];
  }
  return a;
}

}  // namespace

MatrixLieAlgebra MatrixLieAlgebra::from_span(int n, const std::vector<QMat>& spanning) {
  std::vector<QVec> flat;
  for (const auto& m : spanning) {
    if (m.rows() != n || m.cols() != n)
      throw std::invalid_argument("matrices must be square of equal size");
    flat.push_back(flatten(m));
  }
  Subspace span = Subspace::from_vectors(flat, n * n);
  std::vector<QMat> basis;
  for (const auto& v : span.basis()) basis.push_back(unflatten(v, n, n));
  return MatrixLieAlgebra(n, std::move(span), std::move(basis));
}

bool MatrixLieAlgebra::contains(const QMat& x) const {
  return x.rows() == n_ && x.cols() == n_ && span_.contains(flatten(x));
}

std::optional<QVec> MatrixLieAlgebra::coordinates(const QMat& x) const {
  if (x.rows() != n_ || x.cols() != n_) return std::nullopt;
  return span_.coordinates(flatten(x));
}

bool MatrixLieAlgebra::is_bracket_closed() const {
  for (size_t i = 0; i < basis_.size(); ++i)
    for (size_t j = i + 1; j < basis_.size(); ++j)
      if (!contains(bracket(basis_[i], basis_[j]))) return false;
  return true;
}

std::map<int, int> MatrixLieAlgebra::graded_dims() const {
  std::map<int, int> out;
  for (const auto& [d, mats] : grading_) out[d] = int(mats.size());
  return out;
}

MatrixLieAlgebra closure(const std::vector<QMat>& generators) {
  return close_impl(generators, -1);
}

MatrixLieAlgebra closure_capped(const std::vector<QMat>& generators, int cap) {
  if (cap < 0) throw std::invalid_argument("cap must be nonnegative");
  return close_impl(generators, cap);
}

MatrixLieAlgebra derived(const MatrixLieAlgebra& g) {
  std::vector<QMat> brackets;
  for (size_t i = 0; i < g.basis().size(); ++i)
    for (size_t j = i + 1; j < g.basis().size(); ++j)
      brackets.push_back(bracket(g.basis()[i], g.basis()[j]));
  return MatrixLieAlgebra::from_span(g.matrix_size(), brackets);
}

std::pair<QMat, bool> killing_semisimple(const MatrixLieAlgebra& g) {
  const int d = g.dim();
  std::vector<QMat> ads;
  ads.reserve(size_t(d));
  for (const auto& x : g.basis()) ads.push_back(ad_matrix(g, x));
  QMat kappa(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      Rat t = 0;
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) t += ads[size_t(i)](a, b) * ads[size_t(j)](b, a);
      kappa(i, j) = t;
      kappa(j, i) = t;
    }
  return {kappa, rank(kappa) == d};
}

std::vector<QMat> centroid(const MatrixLieAlgebra& g) {
  const int d = g.dim();
  if (d == 0) return {};

  // Candidate space: block-diagonal w.r.t. the grading when present (the
  // grading element's ad is semisimple, so its commutant is block-diagonal),
  // otherwise all of End(g).
  std::vector<QMat> space;
  if (g.graded()) {
    int offset = 0;
    std::vector<std::pair<int, int>> blocks;  // (offset, size) per degree
    for (const auto& [deg, mats] : g.grading()) {
      (void)deg;
      blocks.emplace_back(offset, int(mats.size()));
      offset += int(mats.size());
    }
    // Coordinates below refer to the concatenated graded basis; translate to
    // the canonical basis with the change-of-basis matrix P.
    QMat p(d, d);
    int col = 0;
    for (const auto& [deg, mats] : g.grading()) {
      (void)deg;
      for (const auto& m : mats) {
        auto c = g.coordinates(m);
        if (!c) throw std::logic_error("grading piece escapes the algebra");
        for (int i = 0; i < d; ++i) p(i, col) = (*c)[size_t(i)];
        ++col;
      }
    }
    auto pinv = inverse(p);
    if (!pinv) throw std::logic_error("graded basis is not a basis");
    for (const auto& [off, size] : blocks)
      for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) {
          QMat e = QMat::zero(d, d);
          e(off + i, off + j) = 1;
          space.push_back(p * e * *pinv);
        }
  } else {
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        QMat e = QMat::zero(d, d);
        e(i, j) = 1;
        space.push_back(e);
      }
  }

  // Constraints: commute with ad(z) for a random combination z first (it cuts
  // the space down fastest), then with every ad of a basis element.
  std::vector<QMat> ads;
  for (const auto& x : g.basis()) ads.push_back(ad_matrix(g, x));
  std::vector<QMat> constraints;
  {
    Rng rng(0x63656e74u);
    QMat z = QMat::zero(d, d);
    for (const auto& a : ads) z = z + Rat(rng.uniform(-3, 3)) * a;
    constraints.push_back(z);
  }
  for (const auto& a : ads) constraints.push_back(a);

  for (const auto& a : constraints) {
    if (space.empty()) break;
    QMat sys(d * d, int(space.size()));
    for (int k = 0; k < int(space.size()); ++k) {
      QMat c = a * space[size_t(k)] - space[size_t(k)] * a;
      QVec f = flatten(c);
      for (int r = 0; r < d * d; ++r) sys(r, k) = f[size_t(r)];
    }
    std::vector<QVec> ker = kernel_basis(sys);
    std::vector<QMat> next;
    for (const auto& c : ker) {
      QMat m = QMat::zero(d, d);
      for (int k = 0; k < int(space.size()); ++k)
        if (c[size_t(k)] != 0) m += c[size_t(k)] * space[size_t(k)];
      next.push_back(std::move(m));
    }
    space = std::move(next);
  }

  // Canonical basis of the solution space.
  std::vector<QVec> flat;
  for (const auto& m : space) flat.push_back(flatten(m));
  Subspace s = Subspace::from_vectors(flat, d * d);
  std::vector<QMat> out;
  for (const auto& v : s.basis()) out.push_back(unflatten(v, d, d));
  return out;
}

IdealDecomposition minimal_ideals(const MatrixLieAlgebra& g) {
  auto [kappa, ss] = killing_semisimple(g);
  (void)kappa;
  if (!ss) throw std::invalid_argument("minimal_ideals requires a semisimple algebra");
  const int d = g.dim();
  std::vector<QMat> c = centroid(g);
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = i + 1; j < c.size(); ++j)
      if (!(c[i] * c[j] == c[j] * c[i]))
        throw std::logic_error("centroid of a semisimple algebra should be commutative");
  std::vector<QMat> idems = primitive_idempotents(d, c);
  IdealDecomposition out;
  for (const auto& e : idems) {
    std::vector<QMat> vecs;
    for (int j = 0; j < d; ++j) {
      QMat m = QMat::zero(g.matrix_size(), g.matrix_size());
      for (int i = 0; i < d; ++i)
        if (e(i, j) != 0) m += e(i, j) * g.basis()[size_t(i)];
      vecs.push_back(std::move(m));
    }
    out.ideals.push_back(MatrixLieAlgebra::from_span(g.matrix_size(), vecs));
  }
  std::sort(out.ideals.begin(), out.ideals.end(),
            [](const MatrixLieAlgebra& a, const MatrixLieAlgebra& b) { return a.dim() < b.dim(); });
  return out;
}

MatrixLieAlgebra grade_by(const QMat& h, const MatrixLieAlgebra& g) {
  const int n = g.matrix_size();
  if (h.rows() != n || h.cols() != n) throw std::invalid_argument("grading element size mismatch");

  bool diagonal = true;
  for (int i = 0; i < n && diagonal; ++i)
    for (int j = 0; j < n && diagonal; ++j)
      if (i != j && h(i, j) != 0) diagonal = false;

  std::map<int, std::vector<QMat>> pieces;
  int total = 0;

  if (diagonal) {
    // Entry (i, j) of any operator is an ad(h) eigenvector with eigenvalue
    // h_ii - h_jj, so stable subspaces split entrywise.
    for (const auto& x : g.basis()) {
      std::map<Rat, QMat> comps;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (x(i, j) == 0) continue;
          Rat delta = h(i, i) - h(j, j);
          auto it = comps.find(delta);
          if (it == comps.end()) it = comps.emplace(delta, QMat::zero(n, n)).first;
          it->second(i, j) = x(i, j);
        }
      for (auto& [delta, comp] : comps) {
        if (delta.get_den() != 1)
          throw std::invalid_argument("ad(h) has non-integer eigenvalues");
        // Membership of each component is implied when the piece dimensions
        // add up (pieces have disjoint entry supports); test it directly only
        // while that is cheap.
        if (g.dim() <= 64 && !g.contains(comp))
          throw std::invalid_argument("g is not stable under ad(h)");
        pieces[int(delta.get_num().get_si())].push_back(comp);
      }
    }
    // Components of different basis vectors can overlap; reduce per degree.
    total = 0;
    for (auto& [deg, mats] : pieces) {
      MatrixLieAlgebra piece = MatrixLieAlgebra::from_span(n, mats);
      mats = piece.basis();
      total += piece.dim();
    }
  } else {
    // Generic path: diagonalize ad(h) on coordinates.
    const int d = g.dim();
    QMat adh(d, d);
    for (int k = 0; k < d; ++k) {
      auto c = g.coordinates(bracket(h, g.basis()[size_t(k)]));
      if (!c) throw std::invalid_argument("h does not normalize g");
      for (int i = 0; i < d; ++i) adh(i, k) = (*c)[size_t(i)];
    }
    Poly mu = min_poly(adh);
    for (const auto& [f, mult] : factor_rational(mu)) {
      if (mult > 1 || f.degree() != 1)
        throw std::invalid_argument("ad(h) is not diagonalizable with rational eigenvalues");
      Rat lambda = -f.coeff(0);
      if (lambda.get_den() != 1)
        throw std::invalid_argument("ad(h) has non-integer eigenvalues");
      std::vector<QVec> ker = kernel_basis(adh - lambda * QMat::identity(d));
      std::vector<QMat> mats;
      for (const auto& c : ker) {
        QMat m = QMat::zero(n, n);
        for (int i = 0; i < d; ++i)
          if (c[size_t(i)] != 0) m += c[size_t(i)] * g.basis()[size_t(i)];
        mats.push_back(std::move(m));
      }
      MatrixLieAlgebra piece = MatrixLieAlgebra::from_span(n, mats);
      pieces[int(lambda.get_num().get_si())] = piece.basis();
      total += piece.dim();
    }
  }

  if (total != g.dim())
    throw std::invalid_argument("ad(h) eigenspaces do not exhaust g");

  // Sanity: [g_a, g_b] subset of g_{a+b} (full scan when small, else seeded).
  std::map<int, Subspace> piece_spans;
  for (const auto& [deg, mats] : pieces) {
    std::vector<QVec> flat;
    for (const auto& m : mats) flat.push_back(flatten(m));
    piece_spans.emplace(deg, Subspace::from_vectors(flat, n * n));
  }
  auto check_pair = [&](const std::pair<const int, std::vector<QMat>>& pa,
                        const std::pair<const int, std::vector<QMat>>& pb, size_t i, size_t j) {
    QMat br = bracket(pa.second[i], pb.second[j]);
    if (br.is_zero()) return;
    auto it = piece_spans.find(pa.first + pb.first);
    if (it == piece_spans.end() || !it->second.contains(flatten(br)))
      throw std::invalid_argument("brackets escape the grading");
  };
  if (g.dim() <= 64) {
    for (const auto& pa : pieces)
      for (const auto& pb : pieces)
        for (size_t i = 0; i < pa.second.size(); ++i)
          for (size_t j = 0; j < pb.second.size(); ++j) check_pair(pa, pb, i, j);
  } else {
    Rng rng(0x67726164u);
    std::vector<const std::pair<const int, std::vector<QMat>>*> ptrs;
    for (const auto& p : pieces) ptrs.push_back(&p);
    for (int t = 0; t < 128; ++t) {
      const auto& pa = *ptrs[size_t(rng.uniform(0, long(ptrs.size()) - 1))];
      const auto& pb = *ptrs[size_t(rng.uniform(0, long(ptrs.size()) - 1))];
      check_pair(pa, pb, size_t(rng.uniform(0, long(pa.second.size()) - 1)),
                 size_t(rng.uniform(0, long(pb.second.size()) - 1)));
    }
  }

  MatrixLieAlgebra out = g;
  out.grading_ = std::move(pieces);
  return out;
}

LieReport invariants_report(const MatrixLieAlgebra& g) {
  LieReport rep;
  rep.dim = g.dim();
  auto [kappa, ss] = killing_semisimple(g);
  if (!ss) throw std::invalid_argument("invariants_report requires a semisimple algebra");
  rep.killing_signature = signature(kappa);

  std::vector<QMat> c = centroid(g);
  rep.centroid_dim = int(c.size());
  if (rep.centroid_dim == 0 || rep.dim % rep.centroid_dim != 0)
    throw std::logic_error("centroid dimension does not divide the algebra dimension");
  rep.dim_over_centroid = rep.dim / rep.centroid_dim;

  // Rank: minimal nullity of ad(z) over samples with squarefree minimal
  // polynomial (i.e. semisimple z).
  Rng rng(0x72616e6bu);
  const int d = g.dim();
  int best = -1;
  for (int attempt = 0; attempt < 32; ++attempt) {
    QMat z = QMat::zero(g.matrix_size(), g.matrix_size());
    for (const auto& x : g.basis()) z = z + Rat(rng.uniform(-3, 3)) * x;
    if (!g.contains(z)) continue;
    QMat adz = ad_matrix(g, z);
    Poly mu = min_poly(adz);
    if (poly_gcd(mu, mu.derivative()).degree() != 0) continue;  // not semisimple
    int nullity = d - rank(adz);
    if (best < 0 || nullity < best) best = nullity;
  }
  if (best >= 0 && best % rep.centroid_dim == 0) {
    rep.rank_determined = true;
    rep.rank_over_centroid = best / rep.centroid_dim;
    const int r = rep.rank_over_centroid;
    if (r >= 2 && rep.dim_over_centroid == r * (2 * r + 1))
      rep.note = "dimension and rank do not separate odd orthogonal from symplectic type";
  } else {
    rep.note = "rank undetermined: no sampled element had semisimple ad";
  }
  return rep;
}

}  // namespace lefkit
