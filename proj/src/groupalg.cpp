#include "lefkit/groupalg.hpp"

#include <map>
#include <stdexcept>

#include "lefkit/idempotents.hpp"
#include "lefkit/rational.hpp"

namespace lefkit {

namespace {

void check_table(const std::vector<std::vector<int>>& t) {
  const int n = int(t.size());
  if (n == 0) throw std::invalid_argument("group table is empty");
  for (const auto& row : t) {
    if (int(row.size()) != n) throw std::invalid_argument("group table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw std::invalid_argument("group table entry out of range");
  }
  // Latin square: rows and columns are permutations.
  for (int i = 0; i < n; ++i) {
    std::vector<bool> seen_row(size_t(n), false), seen_col(size_t(n), false);
    for (int j = 0; j < n; ++j) {
      if (seen_row[size_t(t[size_t(i)][size_t(j)])])
        throw std::invalid_argument("group table row is not a permutation");
      seen_row[size_t(t[size_t(i)][size_t(j)])] = true;
      if (seen_col[size_t(t[size_t(j)][size_t(i)])])
        throw std::invalid_argument("group table column is not a permutation");
      seen_col[size_t(t[size_t(j)][size_t(i)])] = true;
    }
  }
  // Associativity: full scan up to order 64, seeded samples beyond.
  auto assoc = [&](int a, int b, int c) {
    if (t[size_t(t[size_t(a)][size_t(b)])][size_t(c)] !=
        t[size_t(a)][size_t(t[size_t(b)][size_t(c)])])
      throw std::invalid_argument("group table is not associative");
  };
  if (n <= 64) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) assoc(a, b, c);
  } else {
    Rng rng(0x67726f75u);
    for (int k = 0; k < 4096; ++k)
      assoc(int(rng.uniform(0, n - 1)), int(rng.uniform(0, n - 1)), int(rng.uniform(0, n - 1)));
  }
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table) {
  check_table(table);
  const int n = int(table.size());
  FiniteGroup g;
  g.table_ = std::move(table);
  g.identity_ = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = g.table_[size_t(e)][size_t(x)] == x && g.table_[size_t(x)][size_t(e)] == x;
    if (ok) {
      g.identity_ = e;
      break;
    }
  }
  if (g.identity_ < 0) throw std::invalid_argument("group table has no identity");
  g.inverse_.assign(size_t(n), -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (g.table_[size_t(a)][size_t(b)] == g.identity_ &&
          g.table_[size_t(b)][size_t(a)] == g.identity_) {
        g.inverse_[size_t(a)] = b;
        break;
      }
    if (g.inverse_[size_t(a)] < 0) throw std::invalid_argument("group element has no inverse");
  }
  return g;
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n <= 0) throw std::invalid_argument("cyclic group order must be positive");
  auto t = std::vector<std::vector<int>>(size_t(n), std::vector<int>(size_t(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[size_t(i)][size_t(j)] = (i + j) % n;
  return from_table(std::move(t));
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<std::vector<int>>& gens) {
  if (gens.empty()) throw std::invalid_argument("no permutation generators");
  const int k = int(gens[0].size());
  for (const auto& p : gens) {
    if (int(p.size()) != k) throw std::invalid_argument("generator length mismatch");
    std::vector<bool> seen(size_t(k), false);
    for (int v : p) {
      if (v < 0 || v >= k || seen[size_t(v)])
        throw std::invalid_argument("generator is not a permutation");
      seen[size_t(v)] = true;
    }
  }
  auto id = std::vector<int>(size_t(k));
  for (int i = 0; i < k; ++i) id[size_t(i)] = i;
  std::vector<std::vector<int>> elems = {id};
  std::map<std::vector<int>, int> index = {{id, 0}};
  // Breadth-first closure; element order is deterministic in the generators.
  for (size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : gens) {
      auto prod = std::vector<int>(size_t(k));
      for (int i = 0; i < k; ++i) prod[size_t(i)] = g[size_t(elems[head][size_t(i)])];
      if (index.emplace(prod, int(elems.size())).second) {
        elems.push_back(prod);
        if (elems.size() > 10000) throw std::invalid_argument("permutation group too large");
      }
    }
  }
  const int n = int(elems.size());
  auto t = std::vector<std::vector<int>>(size_t(n), std::vector<int>(size_t(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto prod = std::vector<int>(size_t(k));
      for (int i = 0; i < k; ++i) prod[size_t(i)] = elems[size_t(a)][size_t(elems[size_t(b)][size_t(i)])];
      t[size_t(a)][size_t(b)] = index.at(prod);
    }
  return from_table(std::move(t));
}

FiniteGroup FiniteGroup::symmetric3() { return from_permutations({{1, 0, 2}, {0, 2, 1}}); }

RepMat make_rep(FiniteGroup group, std::vector<QMat> rho) {
  const int n = group.order();
  if (int(rho.size()) != n) throw std::invalid_argument("one matrix per group element required");
  const int d = rho.empty() ? 0 : rho[0].rows();
  for (const auto& m : rho)
    if (m.rows() != d || m.cols() != d) throw std::invalid_argument("representation matrices must be square of equal size");
  if (!(rho[size_t(group.identity())] == QMat::identity(d)))
    throw std::invalid_argument("identity must act as the identity matrix");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!(rho[size_t(a)] * rho[size_t(b)] == rho[size_t(group.mul(a, b))]))
        throw std::invalid_argument("matrices do not define a homomorphism");
  return RepMat{std::move(group), std::move(rho)};
}

RepMat regular_representation(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<QMat> rho;
  rho.reserve(size_t(n));
  for (int a = 0; a < n; ++a) {
    QMat m = QMat::zero(n, n);
    for (int b = 0; b < n; ++b) m(g.mul(a, b), b) = 1;
    rho.push_back(std::move(m));
  }
  return make_rep(g, std::move(rho));
}

QVec groupalg_mul(const FiniteGroup& g, const QVec& x, const QVec& y) {
  const int n = g.order();
  if (int(x.size()) != n || int(y.size()) != n)
    throw std::invalid_argument("group algebra element size mismatch");
  QVec out = zero_vec(n);
  for (int a = 0; a < n; ++a) {
    if (x[size_t(a)] == 0) continue;
    for (int b = 0; b < n; ++b) out[size_t(g.mul(a, b))] += x[size_t(a)] * y[size_t(b)];
  }
  return out;
}

CentralIdempotentSet central_idempotents(const FiniteGroup& g) {
  const int n = g.order();
  RepMat reg = regular_representation(g);
  // Conjugacy class sums span the center of Q[G].
  std::vector<int> cls(size_t(n), -1);
  std::vector<QMat> sums;
  for (int x = 0; x < n; ++x) {
    if (cls[size_t(x)] >= 0) continue;
    QMat sum = QMat::zero(n, n);
    const int id = int(sums.size());
    for (int h = 0; h < n; ++h) {
      int y = g.mul(g.mul(h, x), g.inverse(h));
      if (cls[size_t(y)] < 0) {
        cls[size_t(y)] = id;
        sum = sum + reg.rho[size_t(y)];
      }
    }
    sums.push_back(std::move(sum));
  }
  std::vector<QMat> idems = primitive_idempotents(n, sums);
  CentralIdempotentSet out;
  for (const auto& e : idems) {
    // e = sum c_g L_g; the identity column of L_g is the unit vector at g.
    QVec coeffs = zero_vec(n);
    for (int i = 0; i < n; ++i) coeffs[size_t(i)] = e(i, g.identity());
    // Idempotency in the group algebra itself.
    if (!(groupalg_mul(g, coeffs, coeffs) == coeffs))
      throw std::logic_error("central idempotent extraction failed");
    out.idempotents.push_back(std::move(coeffs));
  }
  return out;
}

std::vector<std::pair<int, Subspace>> isotypic_components(const RepMat& rep) {
  const FiniteGroup& g = rep.group;
  const int d = rep.rho.empty() ? 0 : rep.rho[0].rows();
  CentralIdempotentSet ids = central_idempotents(g);
  std::vector<std::pair<int, Subspace>> out;
  for (size_t k = 0; k < ids.idempotents.size(); ++k) {
    QMat proj = QMat::zero(d, d);
    for (int a = 0; a < g.order(); ++a) {
      const Rat& c = ids.idempotents[k][size_t(a)];
      if (c == 0) continue;
      proj = proj + c * rep.rho[size_t(a)];
    }
    std::vector<QVec> cols;
    for (int j = 0; j < d; ++j) {
      QVec col = zero_vec(d);
      for (int i = 0; i < d; ++i) col[size_t(i)] = proj(i, j);
      cols.push_back(std::move(col));
    }
    out.emplace_back(int(k), Subspace::from_vectors(cols, d));
  }
  return out;
}

QVec group_involution(const FiniteGroup& g, const QVec& x) {
  if (int(x.size()) != g.order()) throw std::invalid_argument("element size mismatch");
  QVec out = zero_vec(g.order());
  for (int a = 0; a < g.order(); ++a) out[size_t(g.inverse(a))] = x[size_t(a)];
  return out;
}

int invariant_dimension(const RepMat& rep) {
  const int d = rep.rho.empty() ? 0 : rep.rho[0].rows();
  QMat reynolds = QMat::zero(d, d);
  for (const auto& m : rep.rho) reynolds = reynolds + m;
  reynolds = Rat(1, rep.group.order()) * reynolds;
  return rank(reynolds);
}

int wedge2_invariant_dimension(const RepMat& rep) {
  const FiniteGroup& g = rep.group;
  const int d = rep.rho.empty() ? 0 : rep.rho[0].rows();
  // Pairs (i, j) with i < j index the basis of wedge^2.
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) pairs.emplace_back(i, j);
  const int w = int(pairs.size());
  QMat reynolds = QMat::zero(w, w);
  for (const auto& m : rep.rho) {
    QMat wedge(w, w);
    for (int col = 0; col < w; ++col) {
      auto [i, j] = pairs[size_t(col)];
      for (int row = 0; row < w; ++row) {
        auto [k, l] = pairs[size_t(row)];
        wedge(row, col) = m(k, i) * m(l, j) - m(l, i) * m(k, j);
      }
    }
    reynolds = reynolds + wedge;
  }
  reynolds = Rat(1, g.order()) * reynolds;
  int by_action = rank(reynolds);

  Rat by_character = 0;
  for (int a = 0; a < g.order(); ++a) {
    Rat chi = rep.rho[size_t(a)].trace();
    Rat chi_sq = rep.rho[size_t(g.mul(a, a))].trace();
    by_character += (chi * chi - chi_sq) / 2;
  }
  by_character /= g.order();
  if (by_character != by_action)
    throw std::logic_error("wedge^2 invariant count disagrees with character formula");
  return by_action;
}

std::pair<Rat, Rat> lefschetz_identity(const QMat& g) {
  if (g.rows() != g.cols()) throw std::invalid_argument("square matrix required");
  const int n = g.rows();
  if (n > 16) throw std::invalid_argument("lefschetz_identity: matrix too large");
  // Trace of wedge^i g = sum of principal i x i minors.
  Rat lhs = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    QMat sub(int(idx.size()), int(idx.size()));
    for (size_t i = 0; i < idx.size(); ++i)
      for (size_t j = 0; j < idx.size(); ++j) sub(int(i), int(j)) = g(idx[i], idx[j]);
    Rat minor = determinant(sub);
    if (idx.size() % 2 == 1) minor = -minor;
    lhs += minor;
  }
  Rat rhs = determinant(QMat::identity(n) - g);
  return {lhs, rhs};
}

}  // namespace lefkit
