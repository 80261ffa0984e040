#include "lefkit/graded.hpp"

#include <algorithm>
#include <stdexcept>

#include "lefkit/rational.hpp"
#include "lefkit/subsets.hpp"

namespace lefkit {

int GradedSpace::dim(int d) const {
  int c = 0;
  for (int x : degrees)
    if (x == d) ++c;
  return c;
}

std::vector<int> GradedSpace::indices(int d) const {
  std::vector<int> out;
  for (int i = 0; i < total_dim(); ++i)
    if (degrees[size_t(i)] == d) out.push_back(i);
  return out;
}

std::map<int, int> GradedSpace::dim_by_degree() const {
  std::map<int, int> out;
  for (int x : degrees) ++out[x];
  return out;
}

int GradedSpace::min_degree() const {
  if (degrees.empty()) throw std::domain_error("empty graded space");
  return *std::min_element(degrees.begin(), degrees.end());
}

int GradedSpace::max_degree() const {
  if (degrees.empty()) throw std::domain_error("empty graded space");
  return *std::max_element(degrees.begin(), degrees.end());
}

GradedSpace GradedSpace::shifted(int n) const {
  GradedSpace out = *this;
  for (int& d : out.degrees) d -= n;
  return out;
}

QMat grading_operator(const GradedSpace& m) {
  QMat h = QMat::zero(m.total_dim(), m.total_dim());
  for (int i = 0; i < m.total_dim(); ++i) h(i, i) = m.degrees[size_t(i)];
  return h;
}

namespace {

SparseVec normalized(SparseVec row) {
  std::sort(row.begin(), row.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  for (auto& [i, c] : row) {
    if (!out.empty() && out.back().first == i)
      out.back().second += c;
    else
      out.emplace_back(i, c);
    if (out.back().second == 0) out.pop_back();
  }
  return out;
}

}  // namespace

GradedAlgebra::GradedAlgebra(GradedSpace space, std::vector<std::vector<SparseVec>> table,
                             int unit_index)
    : space_(std::move(space)), table_(std::move(table)), unit_index_(unit_index) {
  const int n = space_.total_dim();
  if (n == 0) throw std::invalid_argument("graded algebra must be nonzero");
  if (space_.min_degree() < 0) throw std::invalid_argument("negative degrees not allowed");
  if (int(table_.size()) != n) throw std::invalid_argument("structure table size mismatch");
  for (auto& row : table_) {
    if (int(row.size()) != n) throw std::invalid_argument("structure table size mismatch");
    for (auto& entry : row) {
      entry = normalized(std::move(entry));
      for (auto& [k, c] : entry) {
        (void)c;
        if (k < 0 || k >= n) throw std::invalid_argument("structure constant index out of range");
      }
    }
  }
  if (unit_index_ < 0 || unit_index_ >= n) throw std::invalid_argument("unit index out of range");
  if (space_.degrees[size_t(unit_index_)] != 0)
    throw std::invalid_argument("unit must sit in degree 0");
  top_ = space_.max_degree();

  // Degree additivity of every structure constant.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const auto& [k, c] : table_[size_t(i)][size_t(j)]) {
        (void)c;
        if (space_.degrees[size_t(k)] != space_.degrees[size_t(i)] + space_.degrees[size_t(j)])
          throw std::invalid_argument("product does not respect the grading");
      }

  // Unit law on every basis vector.
  for (int j = 0; j < n; ++j) {
    SparseVec expect = {{j, Rat(1)}};
    if (table_[size_t(unit_index_)][size_t(j)] != expect ||
        table_[size_t(j)][size_t(unit_index_)] != expect)
      throw std::invalid_argument("unit law fails");
  }

  // Graded commutativity: x y = (-1)^{|x||y|} y x.
  auto check_comm = [&](int i, int j) {
    SparseVec other = table_[size_t(j)][size_t(i)];
    if ((space_.degrees[size_t(i)] * space_.degrees[size_t(j)]) % 2 != 0)
      for (auto& [k, c] : other) {
        (void)k;
        c = -c;
      }
    if (table_[size_t(i)][size_t(j)] != other)
      throw std::invalid_argument("graded commutativity fails");
  };
  // Associativity via sparse accumulation of (x_i x_j) x_k and x_i (x_j x_k).
  auto check_assoc = [&](int i, int j, int k) {
    std::map<int, Rat> lhs, rhs;
    for (const auto& [l, c] : table_[size_t(i)][size_t(j)])
      for (const auto& [m, d] : table_[size_t(l)][size_t(k)]) lhs[m] += c * d;
    for (const auto& [l, c] : table_[size_t(j)][size_t(k)])
      for (const auto& [m, d] : table_[size_t(i)][size_t(l)]) rhs[m] += c * d;
    std::erase_if(lhs, [](const auto& kv) { return kv.second == 0; });
    std::erase_if(rhs, [](const auto& kv) { return kv.second == 0; });
    if (lhs != rhs) throw std::invalid_argument("associativity fails");
  };

  if (n <= 64) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        check_comm(i, j);
        for (int k = 0; k < n; ++k) check_assoc(i, j, k);
      }
  } else {
    Rng rng(0x67726164u);
    for (int t = 0; t < 4096; ++t) {
      int i = int(rng.uniform(0, n - 1)), j = int(rng.uniform(0, n - 1)),
          k = int(rng.uniform(0, n - 1));
      check_comm(i, j);
      check_assoc(i, j, k);
    }
  }
}

QVec GradedAlgebra::mul(const QVec& x, const QVec& y) const {
  const int n = total_dim();
  if (int(x.size()) != n || int(y.size()) != n)
    throw std::invalid_argument("element size mismatch");
  QVec out = zero_vec(n);
  for (int i = 0; i < n; ++i) {
    if (x[size_t(i)] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (y[size_t(j)] == 0) continue;
      const Rat c = x[size_t(i)] * y[size_t(j)];
      for (const auto& [k, d] : table_[size_t(i)][size_t(j)]) out[size_t(k)] += c * d;
    }
  }
  return out;
}

QMat GradedAlgebra::mult_operator(const QVec& x) const {
  const int n = total_dim();
  if (int(x.size()) != n) throw std::invalid_argument("element size mismatch");
  QMat m = QMat::zero(n, n);
  for (int i = 0; i < n; ++i) {
    if (x[size_t(i)] == 0) continue;
    for (int j = 0; j < n; ++j)
      for (const auto& [k, d] : table_[size_t(i)][size_t(j)]) m(k, j) += x[size_t(i)] * d;
  }
  return m;
}

QVec GradedAlgebra::component(const QVec& x, int degree) const {
  QVec out = zero_vec(total_dim());
  for (int i = 0; i < total_dim(); ++i)
    if (space_.degrees[size_t(i)] == degree) out[size_t(i)] = x[size_t(i)];
  return out;
}

bool has_hard_lefschetz(const QMat& e, const GradedSpace& shifted) {
  const int n = shifted.total_dim();
  if (e.rows() != n || e.cols() != n) throw std::invalid_argument("operator size mismatch");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (e(i, j) != 0 && shifted.degrees[size_t(i)] != shifted.degrees[size_t(j)] + 2)
        throw std::invalid_argument("operator does not have degree 2");
  const int topk = std::max(shifted.max_degree(), -shifted.min_degree());
  QMat power = QMat::identity(n);
  for (int k = 1; k <= topk; ++k) {
    power = e * power;
    auto lo = shifted.indices(-k), hi = shifted.indices(k);
    if (lo.empty() && hi.empty()) continue;
    if (lo.size() != hi.size()) return false;
    QMat block(int(hi.size()), int(lo.size()));
    for (size_t i = 0; i < hi.size(); ++i)
      for (size_t j = 0; j < lo.size(); ++j) block(int(i), int(j)) = power(hi[i], lo[j]);
    if (rank(block) != int(lo.size())) return false;
  }
  return true;
}

Subspace verbitsky(const GradedAlgebra& r) {
  const int n = r.total_dim();
  IntSpan span(n);
  std::vector<QVec> vectors;
  std::vector<QVec> queue;
  QVec one = r.unit();
  span.add(one);
  vectors.push_back(one);
  queue.push_back(one);
  auto deg2 = r.space().indices(2);
  while (!queue.empty()) {
    QVec v = std::move(queue.back());
    queue.pop_back();
    for (int t : deg2) {
      QVec w = r.mul(unit_vec(n, t), v);
      if (is_zero(w)) continue;
      if (span.add(w)) {
        vectors.push_back(w);
        queue.push_back(w);
      }
    }
  }
  return Subspace::from_vectors(vectors, n);
}

SubAlgebra subalgebra_from(const GradedAlgebra& r, const Subspace& span) {
  const int n = r.total_dim();
  if (span.ambient() != n) throw std::invalid_argument("subspace ambient mismatch");
  if (!span.contains(r.unit())) throw std::invalid_argument("subalgebra must contain the unit");

  // Split the span into homogeneous pieces; graded means components stay in.
  std::map<int, std::vector<QVec>> by_degree;
  for (const auto& v : span.basis())
    for (auto [d, count] : r.space().dim_by_degree()) {
      (void)count;
      QVec comp = r.component(v, d);
      if (is_zero(comp)) continue;
      if (!span.contains(comp))
        throw std::invalid_argument("subspace is not graded");
      by_degree[d].push_back(comp);
    }

  std::vector<QVec> basis;
  GradedSpace sub_space;
  std::map<int, std::pair<int, Subspace>> blocks;  // degree -> (offset, space)
  for (auto& [d, vecs] : by_degree) {
    Subspace piece = Subspace::from_vectors(vecs, n);
    blocks.emplace(d, std::make_pair(int(basis.size()), piece));
    for (const auto& v : piece.basis()) {
      basis.push_back(v);
      sub_space.degrees.push_back(d);
      sub_space.labels.push_back("p" + std::to_string(basis.size() - 1));
    }
  }
  const int k = int(basis.size());

  // Degree-0 piece must be exactly the line through the unit.
  auto it0 = blocks.find(0);
  if (it0 == blocks.end() || it0->second.second.dim() != 1 ||
      !(basis[size_t(it0->second.first)] == r.unit()))
    throw std::invalid_argument("subalgebra must be connected (degree 0 = unit line)");
  const int unit_index = it0->second.first;

  // Homogeneous components have disjoint supports, so coordinates split by
  // degree and each block solves independently.
  auto coords_of = [&](const QVec& v) {
    SparseVec out;
    for (const auto& [d, blk] : blocks) {
      QVec comp = r.component(v, d);
      if (is_zero(comp)) continue;
      auto c = blk.second.coordinates(comp);
      if (!c) throw std::invalid_argument("subspace is not multiplicatively closed");
      for (int i = 0; i < int(c->size()); ++i)
        if ((*c)[size_t(i)] != 0) out.emplace_back(blk.first + i, (*c)[size_t(i)]);
    }
    // Anything left outside the graded blocks means the product escaped.
    QVec rebuilt = zero_vec(n);
    for (const auto& [idx, c] : out)
      for (int row = 0; row < n; ++row) rebuilt[size_t(row)] += c * basis[size_t(idx)][size_t(row)];
    if (!(rebuilt == v)) throw std::invalid_argument("subspace is not multiplicatively closed");
    return out;
  };

  auto table = std::vector<std::vector<SparseVec>>(size_t(k), std::vector<SparseVec>(size_t(k)));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) table[size_t(i)][size_t(j)] = coords_of(r.mul(basis[size_t(i)], basis[size_t(j)]));

  QMat embedding(n, k);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < n; ++i) embedding(i, j) = basis[size_t(j)][size_t(i)];
  return SubAlgebra{GradedAlgebra(std::move(sub_space), std::move(table), unit_index),
                    std::move(embedding)};
}

GroupActionOnAlgebra make_action(const GradedAlgebra& r, FiniteGroup group,
                                 std::vector<QMat> matrices) {
  const int n = r.total_dim();
  if (int(matrices.size()) != group.order())
    throw std::invalid_argument("one matrix per group element required");
  for (const auto& m : matrices)
    if (m.rows() != n || m.cols() != n) throw std::invalid_argument("action matrix size mismatch");
  if (!(matrices[size_t(group.identity())] == QMat::identity(n)))
    throw std::invalid_argument("identity must act trivially");
  for (int a = 0; a < group.order(); ++a)
    for (int b = 0; b < group.order(); ++b)
      if (!(matrices[size_t(a)] * matrices[size_t(b)] == matrices[size_t(group.mul(a, b))]))
        throw std::invalid_argument("action is not a homomorphism");
  for (const auto& m : matrices) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (m(i, j) != 0 && r.space().degrees[size_t(i)] != r.space().degrees[size_t(j)])
          throw std::invalid_argument("action does not preserve the grading");
    if (!(m.apply(r.unit()) == r.unit()))
      throw std::invalid_argument("action must fix the unit");
  }
  // Multiplicativity g(xy) = g(x) g(y) on basis pairs (sampled when large).
  auto check_pair = [&](const QMat& m, int i, int j) {
    QVec lhs = m.apply(r.mul(unit_vec(n, i), unit_vec(n, j)));
    QVec gi = zero_vec(n), gj = zero_vec(n);
    for (int row = 0; row < n; ++row) {
      gi[size_t(row)] = m(row, i);
      gj[size_t(row)] = m(row, j);
    }
    if (!(lhs == r.mul(gi, gj)))
      throw std::invalid_argument("action is not by algebra automorphisms");
  };
  if (n <= 64) {
    for (const auto& m : matrices)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) check_pair(m, i, j);
  } else {
    Rng rng(0x616374u);
    for (const auto& m : matrices)
      for (int t = 0; t < 2048; ++t)
        check_pair(m, int(rng.uniform(0, n - 1)), int(rng.uniform(0, n - 1)));
  }
  return GroupActionOnAlgebra{std::move(group), std::move(matrices)};
}

SubAlgebra invariants(const GradedAlgebra& r, const GroupActionOnAlgebra& act) {
  const int n = r.total_dim();
  QMat reynolds = QMat::zero(n, n);
  for (const auto& m : act.matrices) reynolds = reynolds + m;
  reynolds = Rat(1, act.group.order()) * reynolds;
  std::vector<QVec> cols;
  for (int j = 0; j < n; ++j) {
    QVec col = zero_vec(n);
    for (int i = 0; i < n; ++i) col[size_t(i)] = reynolds(i, j);
    cols.push_back(std::move(col));
  }
  return subalgebra_from(r, Subspace::from_vectors(cols, n));
}

GradedAlgebra tensor(const GradedAlgebra& r, const GradedAlgebra& s) {
  const int nr = r.total_dim(), ns = s.total_dim();
  const int n = nr * ns;
  GradedSpace space;
  space.degrees.resize(size_t(n));
  space.labels.resize(size_t(n));
  auto label_of = [](const GradedAlgebra& a, int i) {
    return a.space().labels.empty() ? std::to_string(i) : a.space().labels[size_t(i)];
  };
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < ns; ++j) {
      space.degrees[size_t(i * ns + j)] =
          r.space().degrees[size_t(i)] + s.space().degrees[size_t(j)];
      space.labels[size_t(i * ns + j)] = "(" + label_of(r, i) + ")*(" + label_of(s, j) + ")";
    }
  auto table = std::vector<std::vector<SparseVec>>(size_t(n), std::vector<SparseVec>(size_t(n)));
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < ns; ++j)
      for (int i2 = 0; i2 < nr; ++i2)
        for (int j2 = 0; j2 < ns; ++j2) {
          // Koszul sign from moving b_j past a_{i2}.
          int sign =
              (s.space().degrees[size_t(j)] * r.space().degrees[size_t(i2)]) % 2 == 0 ? 1 : -1;
          SparseVec out;
          for (const auto& [k, c] : r.mul_basis(i, i2))
            for (const auto& [l, d] : s.mul_basis(j, j2))
              out.emplace_back(k * ns + l, sign * c * d);
          table[size_t(i * ns + j)][size_t(i2 * ns + j2)] = std::move(out);
        }
  return GradedAlgebra(std::move(space), std::move(table),
                       r.unit_index() * ns + s.unit_index());
}

GradedAlgebra exterior_algebra(int dim_v) {
  if (dim_v < 0 || dim_v > 12) throw std::invalid_argument("exterior algebra size out of range");
  SubsetBasis b = SubsetBasis::make(dim_v);
  const int n = int(b.sets.size());
  GradedSpace space;
  for (const auto& s : b.sets) {
    space.degrees.push_back(int(s.size()));
    std::string label = "1";
    for (size_t i = 0; i < s.size(); ++i)
      label = (i == 0 ? "" : label + "^") + ("e" + std::to_string(s[i] + 1));
    space.labels.push_back(label);
  }
  auto table = std::vector<std::vector<SparseVec>>(size_t(n), std::vector<SparseVec>(size_t(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int sign = merge_sign(b.sets[size_t(i)], b.sets[size_t(j)]);
      if (sign != 0)
        table[size_t(i)][size_t(j)] = {{b.at(merge_sets(b.sets[size_t(i)], b.sets[size_t(j)])),
                                        Rat(sign)}};
    }
  return GradedAlgebra(std::move(space), std::move(table), b.at({}));
}

GradedAlgebra surface_ring(const QMat& b) {
  const int m = b.rows();
  if (b.cols() != m) throw std::invalid_argument("form must be square");
  if (!(b == b.transpose())) throw std::invalid_argument("form must be symmetric");
  if (rank(b) != m) throw std::invalid_argument("form must be nondegenerate");
  const int n = m + 2;
  GradedSpace space;
  space.degrees.assign(size_t(n), 2);
  space.degrees[0] = 0;
  space.degrees[size_t(n - 1)] = 4;
  space.labels.assign(size_t(n), "");
  space.labels[0] = "1";
  for (int i = 1; i <= m; ++i) space.labels[size_t(i)] = "h" + std::to_string(i);
  space.labels[size_t(n - 1)] = "vol";
  auto table = std::vector<std::vector<SparseVec>>(size_t(n), std::vector<SparseVec>(size_t(n)));
  for (int j = 0; j < n; ++j) {
    table[0][size_t(j)] = {{j, Rat(1)}};
    table[size_t(j)][0] = {{j, Rat(1)}};
  }
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      if (b(i - 1, j - 1) != 0) table[size_t(i)][size_t(j)] = {{n - 1, b(i - 1, j - 1)}};
  return GradedAlgebra(std::move(space), std::move(table), 0);
}

}  // namespace lefkit
