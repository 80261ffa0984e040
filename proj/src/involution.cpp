#include "lefkit/involution.hpp"

#include <stdexcept>
#include <utility>

#include "lefkit/idempotents.hpp"

namespace lefkit {

namespace {

QMat basis_columns(int ambient, const std::vector<QMat>& basis) {
  QMat cols(ambient * ambient, int(basis.size()));
  for (size_t i = 0; i < basis.size(); ++i) {
    QVec f = flatten(basis[i]);
    for (int r = 0; r < int(f.size()); ++r) cols(r, int(i)) = f[size_t(r)];
  }
  return cols;
}

}  // namespace

std::string to_string(InvolutionKind k) {
  return k == InvolutionKind::First ? "first" : "second";
}

std::string to_string(InvolutionType t) {
  switch (t) {
    case InvolutionType::Orthogonal: return "orthogonal";
    case InvolutionType::Symplectic: return "symplectic";
    default: return "unitary";
  }
}

AlgebraWithInvolution::AlgebraWithInvolution(
    int ambient_dim, std::vector<QMat> basis,
    const std::function<QMat(const QMat&)>& involution)
    : ambient_(ambient_dim), basis_(std::move(basis)), span_(0), sigma_coords_(0, 0) {
  if (ambient_ <= 0) throw std::invalid_argument("ambient dimension must be positive");
  if (basis_.empty()) throw std::invalid_argument("algebra basis is empty");
  for (const QMat& m : basis_)
    if (m.rows() != ambient_ || m.cols() != ambient_)
      throw std::invalid_argument("basis matrices must match the ambient dimension");

  auto flat = std::vector<QVec>();
  for (const QMat& m : basis_) flat.push_back(flatten(m));
  span_ = Subspace::from_vectors(flat, ambient_ * ambient_);
  if (span_.dim() != int(basis_.size()))
    throw std::invalid_argument("basis is not linearly independent");
  if (!span_.contains(flatten(QMat::identity(ambient_))))
    throw std::invalid_argument("algebra does not contain the identity");
  for (const QMat& x : basis_)
    for (const QMat& y : basis_)
      if (!span_.contains(flatten(x * y)))
        throw std::invalid_argument("algebra basis is not multiplicatively closed");

  auto images = std::vector<QMat>();
  for (const QMat& x : basis_) {
    QMat s = involution(x);
    if (s.rows() != ambient_ || s.cols() != ambient_ || !span_.contains(flatten(s)))
      throw std::invalid_argument("involution does not map the algebra into itself");
    images.push_back(std::move(s));
  }
  for (size_t i = 0; i < basis_.size(); ++i)
    if (involution(images[i]) != basis_[i])
      throw std::invalid_argument("involution must square to the identity");
  for (const QMat& x : basis_)
    for (const QMat& y : basis_)
      if (involution(x * y) != involution(y) * involution(x))
        throw std::invalid_argument("involution is not an anti-automorphism");

  QMat cols = basis_columns(ambient_, basis_);
  sigma_coords_ = QMat(dim(), dim());
  for (int i = 0; i < dim(); ++i) {
    QVec c = *solve(cols, flatten(images[size_t(i)]));
    for (int r = 0; r < dim(); ++r) sigma_coords_(r, i) = c[size_t(r)];
  }
}

bool AlgebraWithInvolution::contains(const QMat& x) const {
  return x.rows() == ambient_ && x.cols() == ambient_ && span_.contains(flatten(x));
}

QVec AlgebraWithInvolution::coordinates(const QMat& x) const {
  if (x.rows() != ambient_ || x.cols() != ambient_)
    throw std::invalid_argument("element is outside the algebra");
  auto c = solve(basis_columns(ambient_, basis_), flatten(x));
  if (!c) throw std::invalid_argument("element is outside the algebra");
  return *c;
}

QMat AlgebraWithInvolution::element(const QVec& coords) const {
  if (int(coords.size()) != dim())
    throw std::invalid_argument("coordinate vector has the wrong length");
  QMat out = QMat::zero(ambient_, ambient_);
  for (int i = 0; i < dim(); ++i) out = out + coords[size_t(i)] * basis_[size_t(i)];
  return out;
}

QMat AlgebraWithInvolution::sigma(const QMat& x) const {
  return element(sigma_coords_.apply(coordinates(x)));
}

std::vector<QMat> AlgebraWithInvolution::center() const {
  // one block of equations per basis element: [x, b_j] = 0 with x in A
  QMat sys(dim() * ambient_ * ambient_, dim());
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j) {
      QVec f = flatten(bracket(basis_[size_t(i)], basis_[size_t(j)]));
      for (int r = 0; r < int(f.size()); ++r)
        sys(j * ambient_ * ambient_ + r, i) = f[size_t(r)];
    }
  auto out = std::vector<QMat>();
  for (const QVec& c : kernel_basis(sys)) out.push_back(element(c));
  return out;
}

AlgebraWithInvolution adjoint_involution(const QMat& b) {
  if (!b.is_square()) throw std::invalid_argument("form must be square");
  if (b.transpose() != b && b.transpose() != Rat(-1) * b)
    throw std::invalid_argument("form must be symmetric or alternating");
  auto binv = inverse(b);
  if (!binv) throw std::invalid_argument("form is degenerate");
  int n = b.rows();
  auto basis = std::vector<QMat>();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      QMat e = QMat::zero(n, n);
      e(i, j) = 1;
      basis.push_back(e);
    }
  QMat bi = *binv;
  return AlgebraWithInvolution(
      n, basis, [bi, b](const QMat& x) { return bi * x.transpose() * b; });
}

QMat ModuleWithForm::grading() const {
  QMat g = QMat::zero(2 * v_dim, 2 * v_dim);
  for (int i = 0; i < v_dim; ++i) {
    g(i, i) = 1;
    g(v_dim + i, v_dim + i) = -1;
  }
  return g;
}

ModuleWithForm build_v_tilde(const AlgebraWithInvolution& a,
                             const std::vector<QMat>& v_action) {
  if (int(v_action.size()) != a.dim())
    throw std::invalid_argument("one action matrix per algebra basis element");
  int k = v_action.empty() ? 0 : v_action.front().rows();
  if (k <= 0) throw std::invalid_argument("module must have positive dimension");
  for (const QMat& m : v_action)
    if (m.rows() != k || m.cols() != k)
      throw std::invalid_argument("action matrices must be square and of equal size");

  auto act = [&](const QMat& x) {
    QVec c = a.coordinates(x);
    QMat out = QMat::zero(k, k);
    for (int i = 0; i < a.dim(); ++i) out = out + c[size_t(i)] * v_action[size_t(i)];
    return out;
  };
  if (act(QMat::identity(a.ambient_dim())) != QMat::identity(k))
    throw std::invalid_argument("module axioms violated: identity does not act as identity");
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      if (act(a.basis()[size_t(i)] * a.basis()[size_t(j)]) !=
          v_action[size_t(i)] * v_action[size_t(j)])
        throw std::invalid_argument("module axioms violated: action is not multiplicative");

  ModuleWithForm mv;
  mv.v_dim = k;
  mv.form = QMat::zero(2 * k, 2 * k);
  mv.form.set_block(0, k, QMat::identity(k));
  mv.form.set_block(k, 0, QMat::identity(k));
  for (int i = 0; i < a.dim(); ++i) {
    QMat big = QMat::zero(2 * k, 2 * k);
    big.set_block(0, 0, v_action[size_t(i)]);
    big.set_block(k, k, act(a.sigma(a.basis()[size_t(i)])).transpose());
    mv.action.push_back(big);
  }
  // b(a x, y) = b(x, sigma(a) y) by construction; guard against regressions
  for (int i = 0; i < a.dim(); ++i) {
    QVec sc = a.sigma_on_coordinates().apply(unit_vec(a.dim(), i));
    QMat rhs = QMat::zero(2 * k, 2 * k);
    for (int l = 0; l < a.dim(); ++l) rhs = rhs + sc[size_t(l)] * mv.action[size_t(l)];
    if (mv.action[size_t(i)].transpose() * mv.form != mv.form * rhs)
      throw std::logic_error("form is not equivariant for the dual action");
  }
  return mv;
}

AlgebraWithInvolution endo_with_involution(const ModuleWithForm& mv) {
  int n = 2 * mv.v_dim;
  std::vector<QMat> comm = commutant(n, mv.action);
  auto binv = inverse(mv.form);
  if (!binv) throw std::invalid_argument("form is degenerate");
  QMat bi = *binv;
  QMat b = mv.form;
  return AlgebraWithInvolution(
      n, comm, [bi, b](const QMat& x) { return bi * x.transpose() * b; });
}

std::vector<QMat> central_idempotents(const AlgebraWithInvolution& a) {
  return primitive_idempotents(a.ambient_dim(), a.center());
}

InvolutionKind kind(const AlgebraWithInvolution& a) {
  std::vector<QMat> idems = central_idempotents(a);
  if (idems.size() > 1) {
    // sigma permutes the minimal ideals e_i A in orbits of size at most two,
    // and every orbit sum is a sigma-stable ideal; simplicity with involution
    // therefore allows only a single swapped pair
    for (size_t i = 0; i < idems.size(); ++i)
      if (a.sigma(idems[i]) == idems[i])
        throw std::runtime_error(
            "not simple with involution: the ideal of central idempotent " +
            std::to_string(i) + " is sigma-stable");
    if (idems.size() != 2) {
      size_t partner = 0;
      for (size_t j = 1; j < idems.size(); ++j)
        if (a.sigma(idems[0]) == idems[j]) partner = j;
      throw std::runtime_error(
          "not simple with involution: central idempotents 0 and " +
          std::to_string(partner) + " span a proper sigma-stable ideal");
    }
  }
  for (const QMat& z : a.center())
    if (a.sigma(z) != z) return InvolutionKind::Second;
  return InvolutionKind::First;
}

InvolutionType classify_type(const AlgebraWithInvolution& a) {
  if (kind(a) == InvolutionKind::Second) return InvolutionType::Unitary;
  int d = int(a.center().size());
  if (d <= 0 || a.dim() % d != 0) throw std::runtime_error("unclassifiable");
  int over_center = a.dim() / d;
  int n = 0;
  while (n * n < over_center) ++n;
  if (n * n != over_center) throw std::runtime_error("unclassifiable");

  QMat fix = a.sigma_on_coordinates() + QMat::identity(a.dim());
  int skew_q = int(kernel_basis(fix).size());
  if (skew_q % d != 0) throw std::runtime_error("unclassifiable");
  int skew_f = skew_q / d;
  if (skew_f == n * (n - 1) / 2) return InvolutionType::Orthogonal;
  if (skew_f == n * (n + 1) / 2) return InvolutionType::Symplectic;
  throw std::runtime_error("unclassifiable");
}

SkewPair skew_and_derived(const AlgebraWithInvolution& a) {
  QMat fix = a.sigma_on_coordinates() + QMat::identity(a.dim());
  auto mats = std::vector<QMat>();
  for (const QVec& c : kernel_basis(fix)) mats.push_back(a.element(c));
  MatrixLieAlgebra skew = MatrixLieAlgebra::from_span(a.ambient_dim(), mats);
  MatrixLieAlgebra s = derived(skew);
  return {skew, s};
}

bool verify_skew_equals_so(const ModuleWithForm& mv) {
  if (mv.form.transpose() != mv.form)
    throw std::invalid_argument("form must be symmetric");
  AlgebraWithInvolution endo = endo_with_involution(mv);
  SkewPair pair = skew_and_derived(endo);

  int n = 2 * mv.v_dim;
  // so(form): kernel of x |-> x^T b + b x over the matrix entries
  QMat sys(n * n, n * n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      QMat e = QMat::zero(n, n);
      e(p, q) = 1;
      QVec f = flatten(e.transpose() * mv.form + mv.form * e);
      for (int r = 0; r < n * n; ++r) sys(r, p * n + q) = f[size_t(r)];
    }
  Subspace so_part = Subspace::from_vectors(kernel_basis(sys), n * n);
  auto comm_flat = std::vector<QVec>();
  for (const QMat& m : commutant(n, mv.action)) comm_flat.push_back(flatten(m));
  Subspace comm = Subspace::from_vectors(comm_flat, n * n);
  return pair.skew.span() == so_part.intersect(comm);
}

bool iso_membership(const AlgebraWithInvolution& a, const QMat& x) {
  if (!a.contains(x)) throw std::invalid_argument("element is outside the algebra");
  if (!inverse(x)) return false;
  return x * a.sigma(x) == QMat::identity(a.ambient_dim());
}

}  // namespace lefkit
