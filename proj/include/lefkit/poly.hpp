#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lefkit/rational.hpp"

namespace lefkit {

// Univariate polynomial over the rationals, dense coefficients, c[i] on x^i.
// The zero polynomial has an empty coefficient list; otherwise the leading
// coefficient is nonzero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }
  static Poly constant(const Rat& a) { return Poly(std::vector<Rat>{a}); }
  static Poly x_power(int k, const Rat& a = Rat(1)) {
    std::vector<Rat> c(size_t(k) + 1, Rat(0));
    c[size_t(k)] = a;
    return Poly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return int(c_.size()) - 1; }  // -1 for zero
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(int i) const { return i >= 0 && i < int(c_.size()) ? c_[size_t(i)] : Rat(0); }
  const Rat& lc() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  friend Poly operator+(const Poly& f, const Poly& g) {
    std::vector<Rat> c(std::max(f.c_.size(), g.c_.size()), Rat(0));
    for (size_t i = 0; i < f.c_.size(); ++i) c[i] += f.c_[i];
    for (size_t i = 0; i < g.c_.size(); ++i) c[i] += g.c_[i];
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& f, const Poly& g) {
    std::vector<Rat> c(std::max(f.c_.size(), g.c_.size()), Rat(0));
    for (size_t i = 0; i < f.c_.size(); ++i) c[i] += f.c_[i];
    for (size_t i = 0; i < g.c_.size(); ++i) c[i] -= g.c_[i];
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& f) {
    std::vector<Rat> c(f.c_);
    for (auto& x : c) x = -x;
    return Poly(std::move(c));
  }
  friend Poly operator*(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) return Poly();
    std::vector<Rat> c(f.c_.size() + g.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < f.c_.size(); ++i) {
      if (f.c_[i] == 0) continue;
      for (size_t j = 0; j < g.c_.size(); ++j) c[i + j] += f.c_[i] * g.c_[j];
    }
    return Poly(std::move(c));
  }
  friend Poly operator*(const Rat& a, const Poly& f) {
    std::vector<Rat> c(f.c_);
    for (auto& x : c) x *= a;
    return Poly(std::move(c));
  }
  friend bool operator==(const Poly& f, const Poly& g) { return f.c_ == g.c_; }

  // Euclidean division; g must be nonzero.
  friend std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g) {
    if (g.is_zero()) throw std::domain_error("division by zero polynomial");
    std::vector<Rat> r = f.c_;
    int dg = g.degree();
    if (f.degree() < dg) return {Poly(), f};
    std::vector<Rat> q(size_t(f.degree() - dg) + 1, Rat(0));
    Rat inv_lc = 1 / g.lc();
    for (int i = f.degree(); i >= dg; --i) {
      Rat t = r[size_t(i)] * inv_lc;
      if (t == 0) continue;
      q[size_t(i - dg)] = t;
      for (int j = 0; j <= dg; ++j) r[size_t(i - dg + j)] -= t * g.c_[size_t(j)];
    }
    return {Poly(std::move(q)), Poly(std::move(r))};
  }
  friend Poly operator/(const Poly& f, const Poly& g) { return divmod(f, g).first; }
  friend Poly operator%(const Poly& f, const Poly& g) { return divmod(f, g).second; }

  bool divides(const Poly& f) const { return divmod(f, *this).second.is_zero(); }

  Poly monic() const {
    if (is_zero()) return *this;
    return (1 / lc()) * *this;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rat> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = Rat(long(i)) * c_[i];
    return Poly(std::move(c));
  }

  Rat eval(const Rat& x) const {
    Rat v(0);
    for (size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
    return v;
  }

  // Evaluate at a square matrix (Horner).
  template <class M>
  M eval_mat(const M& x) const {
    M v = M::zero(x.rows(), x.cols());
    for (size_t i = c_.size(); i-- > 0;) v = v * x + c_[i] * M::identity(x.rows());
    return v;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
      if (c_[size_t(i)] == 0) continue;
      if (!s.empty()) s += " + ";
      s += rat_str(c_[size_t(i)]);
      if (i > 0) s += "*x^" + std::to_string(i);
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;
};

// Monic gcd; divides both inputs exactly. gcd(0,0) = 0.
inline Poly poly_gcd(Poly f, Poly g) {
  while (!g.is_zero()) {
    Poly r = f % g;
    f = std::move(g);
    g = std::move(r);
  }
  return f.monic();
}

// Extended gcd: returns (d, u, v) monic d with u*f + v*g = d.
std::tuple<Poly, Poly, Poly> poly_xgcd(const Poly& f, const Poly& g);

// Irreducible factorization over Q: returns monic irreducible factors with
// multiplicities, sorted by (degree, coefficient sequence). The product of
// factor^multiplicity times lc(f) reproduces f exactly.
std::vector<std::pair<Poly, int>> factor_rational(const Poly& f);

// Squarefree part helper exposed for tests: f / gcd(f, f').
Poly squarefree_part(const Poly& f);

}  // namespace lefkit
