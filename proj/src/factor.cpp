#include <algorithm>
#include <cstdint>
#include <numeric>
#include <tuple>

#include "lefkit/poly.hpp"

// Factorization over Q: squarefree (Yun), then per squarefree part a monic
// reduction to Z[x], distinct/equal-degree splitting mod a small prime,
// linear Hensel lifting to a coefficient bound, and subset recombination.
// Degrees stay small (group algebras of order <= 24), so the classical
// pipeline with conservative bounds is fast enough.

namespace lefkit {
namespace {

// ---------------------------------------------------------------- F_p[x] ---

using i64 = long;  // gmpxx has no long long overloads

struct FpPoly {
  // coefficients in [0, p), trimmed
  std::vector<i64> c;
  int deg() const { return int(c.size()) - 1; }
  bool zero() const { return c.empty(); }
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
};

i64 mulmod(i64 a, i64 b, i64 p) { return i64((__int128)a * b % p); }

i64 invmod(i64 a, i64 p) {
  i64 t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    i64 q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  return t < 0 ? t + p : t;
}

FpPoly fp_mul(const FpPoly& f, const FpPoly& g, i64 p) {
  if (f.zero() || g.zero()) return {};
  FpPoly r;
  r.c.assign(f.c.size() + g.c.size() - 1, 0);
  for (size_t i = 0; i < f.c.size(); ++i) {
    if (f.c[i] == 0) continue;
    for (size_t j = 0; j < g.c.size(); ++j)
      r.c[i + j] = (r.c[i + j] + (__int128)f.c[i] * g.c[j]) % p;
  }
  r.trim();
  return r;
}

FpPoly fp_sub(FpPoly f, const FpPoly& g, i64 p) {
  if (f.c.size() < g.c.size()) f.c.resize(g.c.size(), 0);
  for (size_t i = 0; i < g.c.size(); ++i) f.c[i] = ((f.c[i] - g.c[i]) % p + p) % p;
  f.trim();
  return f;
}

// Remainder of f by monic-normalized g.
FpPoly fp_rem(FpPoly f, const FpPoly& g, i64 p) {
  i64 inv = invmod(g.c.back(), p);
  while (f.deg() >= g.deg()) {
    i64 t = mulmod(f.c.back(), inv, p);
    int shift = f.deg() - g.deg();
    if (t != 0)
      for (size_t j = 0; j < g.c.size(); ++j)
        f.c[size_t(shift) + j] = ((f.c[size_t(shift) + j] - (__int128)t * g.c[j]) % p + p) % p;
    f.c.pop_back();
    f.trim();
    if (f.zero()) break;
  }
  return f;
}

std::pair<FpPoly, FpPoly> fp_divmod(FpPoly f, const FpPoly& g, i64 p) {
  FpPoly q;
  if (f.deg() < g.deg()) return {q, f};
  q.c.assign(size_t(f.deg() - g.deg()) + 1, 0);
  i64 inv = invmod(g.c.back(), p);
  while (!f.zero() && f.deg() >= g.deg()) {
    i64 t = mulmod(f.c.back(), inv, p);
    int shift = f.deg() - g.deg();
    q.c[size_t(shift)] = t;
    for (size_t j = 0; j < g.c.size(); ++j)
      f.c[size_t(shift) + j] = ((f.c[size_t(shift) + j] - (__int128)t * g.c[j]) % p + p) % p;
    f.trim();
  }
  q.trim();
  return {q, f};
}

FpPoly fp_monic(FpPoly f, i64 p) {
  if (f.zero()) return f;
  i64 inv = invmod(f.c.back(), p);
  for (auto& x : f.c) x = mulmod(x, inv, p);
  return f;
}

FpPoly fp_gcd(FpPoly f, FpPoly g, i64 p) {
  while (!g.zero()) {
    FpPoly r = fp_rem(f, g, p);
    f = std::move(g);
    g = std::move(r);
  }
  return fp_monic(f, p);
}

FpPoly fp_deriv(const FpPoly& f, i64 p) {
  FpPoly d;
  if (f.c.size() <= 1) return d;
  d.c.resize(f.c.size() - 1);
  for (size_t i = 1; i < f.c.size(); ++i) d.c[i - 1] = (i64(i) % p) * f.c[i] % p;
  d.trim();
  return d;
}

FpPoly fp_x() { return FpPoly{{0, 1}}; }

FpPoly fp_powmod(FpPoly base, const Int& e, const FpPoly& mod, i64 p) {
  FpPoly r{{1}};
  base = fp_rem(std::move(base), mod, p);
  size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    r = fp_rem(fp_mul(r, r, p), mod, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = fp_rem(fp_mul(r, base, p), mod, p);
  }
  return r;
}

// Extended gcd in F_p[x]: s*f + t*g = 1, requires gcd(f,g) = 1.
std::pair<FpPoly, FpPoly> fp_xgcd_coprime(const FpPoly& f, const FpPoly& g, i64 p) {
  FpPoly r0 = f, r1 = g;
  FpPoly s0{{1}}, s1{}, t0{}, t1{{1}};
  while (!r1.zero()) {
    auto [q, r] = fp_divmod(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(r);
    FpPoly s2 = fp_sub(s0, fp_mul(q, s1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    FpPoly t2 = fp_sub(t0, fp_mul(q, t1, p), p);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  i64 inv = invmod(r0.c.back(), p);
  for (auto& x : s0.c) x = mulmod(x, inv, p);
  for (auto& x : t0.c) x = mulmod(x, inv, p);
  return {s0, t0};
}

// Cantor-Zassenhaus equal-degree splitting: f is a product of r >= 1 monic
// irreducibles of degree d mod odd p.
void fp_edf(const FpPoly& f, int d, i64 p, std::vector<FpPoly>& out) {
  if (f.deg() == d) {
    out.push_back(fp_monic(f, p));
    return;
  }
  Int exponent(1);
  for (int i = 0; i < d; ++i) exponent *= p;
  exponent = (exponent - 1) / 2;
  Rng rng(std::uint64_t(p) * 1000003u + std::uint64_t(d) * 101u + std::uint64_t(f.deg()));
  for (int attempt = 0;; ++attempt) {
    FpPoly a;
    a.c.resize(size_t(f.deg()));
    for (auto& x : a.c) x = i64(rng.next() % std::uint64_t(p));
    a.trim();
    if (a.zero() || a.deg() == 0) continue;
    FpPoly b = fp_powmod(a, exponent, f, p);
    if (b.zero()) continue;
    b.c[0] = (b.c[0] + p - 1) % p;  // b - 1
    b.trim();
    FpPoly g = fp_gcd(b, f, p);
    if (!g.zero() && g.deg() > 0 && g.deg() < f.deg()) {
      fp_edf(g, d, p, out);
      fp_edf(fp_divmod(f, g, p).first, d, p, out);
      return;
    }
    if (attempt > 200) throw std::runtime_error("equal-degree splitting failed to converge");
  }
}

// Full factorization of a squarefree monic f mod odd p.
std::vector<FpPoly> fp_factor_squarefree(FpPoly f, i64 p) {
  std::vector<FpPoly> out;
  FpPoly w = fp_x();
  for (int d = 1; f.deg() > 0 && 2 * d <= f.deg(); ++d) {
    w = fp_powmod(w, Int(p), f, p);
    FpPoly g = fp_gcd(fp_sub(w, fp_x(), p), f, p);
    if (!g.zero() && g.deg() > 0) {
      fp_edf(g, d, p, out);
      f = fp_divmod(f, g, p).first;
      if (f.deg() > 0) w = fp_rem(w, f, p);
    }
  }
  if (f.deg() > 0) out.push_back(fp_monic(f, p));
  return out;
}

// ------------------------------------------------------------- Z[x] side ---

struct ZPoly {
  std::vector<Int> c;  // trimmed
  int deg() const { return int(c.size()) - 1; }
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
};

ZPoly z_mul(const ZPoly& f, const ZPoly& g) {
  ZPoly r;
  if (f.c.empty() || g.c.empty()) return r;
  r.c.assign(f.c.size() + g.c.size() - 1, Int(0));
  for (size_t i = 0; i < f.c.size(); ++i)
    for (size_t j = 0; j < g.c.size(); ++j) r.c[i + j] += f.c[i] * g.c[j];
  r.trim();
  return r;
}

ZPoly z_sub(ZPoly f, const ZPoly& g) {
  if (f.c.size() < g.c.size()) f.c.resize(g.c.size(), Int(0));
  for (size_t i = 0; i < g.c.size(); ++i) f.c[i] -= g.c[i];
  f.trim();
  return f;
}

ZPoly z_add(ZPoly f, const ZPoly& g) {
  if (f.c.size() < g.c.size()) f.c.resize(g.c.size(), Int(0));
  for (size_t i = 0; i < g.c.size(); ++i) f.c[i] += g.c[i];
  f.trim();
  return f;
}

ZPoly z_mod(ZPoly f, const Int& m) {
  for (auto& x : f.c) {
    x %= m;
    if (x < 0) x += m;
  }
  f.trim();
  return f;
}

// Map coefficients to the symmetric range (-m/2, m/2].
ZPoly z_symmetric(ZPoly f, const Int& m) {
  Int half = m / 2;
  for (auto& x : f.c) {
    x %= m;
    if (x < 0) x += m;
    if (x > half) x -= m;
  }
  f.trim();
  return f;
}

ZPoly from_fp(const FpPoly& f) {
  ZPoly r;
  r.c.reserve(f.c.size());
  for (i64 x : f.c) r.c.emplace_back(x);
  return r;
}

FpPoly to_fp(const ZPoly& f, i64 p) {
  FpPoly r;
  r.c.reserve(f.c.size());
  for (const Int& x : f.c) {
    Int m = x % p;
    if (m < 0) m += p;
    r.c.push_back(m.get_si());
  }
  r.trim();
  return r;
}

Poly to_qpoly(const ZPoly& f) {
  std::vector<Rat> c;
  c.reserve(f.c.size());
  for (const Int& x : f.c) c.emplace_back(x);
  return Poly(std::move(c));
}

ZPoly to_zpoly_primitive(const Poly& f, Int* content_out = nullptr) {
  Int l(1);
  for (const Rat& x : f.coeffs()) l = lcm(l, den(x));
  ZPoly r;
  r.c.reserve(f.coeffs().size());
  for (const Rat& x : f.coeffs()) r.c.push_back(Int(num(x) * (l / den(x))));
  Int g(0);
  for (const Int& x : r.c) g = gcd(g, x);
  if (g != 0)
    for (auto& x : r.c) x /= g;
  if (!r.c.empty() && r.c.back() < 0)
    for (auto& x : r.c) x = -x;
  if (content_out) *content_out = g;
  r.trim();
  return r;
}

// Exact division test over Z via rational division.
bool z_divides(const ZPoly& h, const ZPoly& f) {
  auto [q, r] = divmod(to_qpoly(f), to_qpoly(h));
  (void)q;
  return r.is_zero();
}

// --------------------------------------------------------- Hensel lifting ---

// Lift G = U*V (monic, coprime mod p) from mod p to mod target = p^K.
// Linear steps with the Bezout pair fixed mod p.
void hensel_pair(const ZPoly& g, ZPoly& u, ZPoly& v, i64 p, const Int& target) {
  FpPoly u0 = to_fp(u, p), v0 = to_fp(v, p);
  auto [s, t] = fp_xgcd_coprime(u0, v0, p);  // s*u0 + t*v0 = 1 mod p
  Int modulus(p);
  while (modulus < target) {
    // invariant: g = u*v mod modulus; err = (g - u*v)/modulus mod p
    ZPoly diff = z_sub(g, z_mul(u, v));
    for (auto& x : diff.c) x /= modulus;
    FpPoly d = to_fp(diff, p);
    if (!d.zero()) {
      // corrections A = (t*d) rem u0 and B = (d - A*v0)/u0, both mod p
      FpPoly a = fp_rem(fp_mul(t, d, p), u0, p);
      auto [b, rem] = fp_divmod(fp_sub(d, fp_mul(a, v0, p), p), u0, p);
      if (!rem.zero()) throw std::runtime_error("hensel: correction not divisible");
      ZPoly za = from_fp(a), zb = from_fp(b);
      for (auto& x : za.c) x *= modulus;
      for (auto& x : zb.c) x *= modulus;
      u = z_add(std::move(u), za);
      v = z_add(std::move(v), zb);
    }
    modulus *= p;
    u = z_mod(std::move(u), modulus);
    v = z_mod(std::move(v), modulus);
  }
}

// Lift the list of monic factors of monic g from mod p to mod p^K, bisecting.
void hensel_tree(const ZPoly& g, const std::vector<FpPoly>& factors, size_t lo, size_t hi,
                 i64 p, const Int& target, std::vector<ZPoly>& out) {
  if (hi - lo == 1) {
    out.push_back(z_mod(g, target));
    return;
  }
  size_t mid = lo + (hi - lo) / 2;
  FpPoly u0{{1}}, v0{{1}};
  for (size_t i = lo; i < mid; ++i) u0 = fp_mul(u0, factors[i], p);
  for (size_t i = mid; i < hi; ++i) v0 = fp_mul(v0, factors[i], p);
  ZPoly u = from_fp(u0), v = from_fp(v0);
  hensel_pair(g, u, v, p, target);
  hensel_tree(u, factors, lo, mid, p, target, out);
  hensel_tree(v, factors, mid, hi, p, target, out);
}

// -------------------------------------------------- squarefree Z factor ---

const i64 kPrimes[] = {3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,
                       43,  47,  53,  59,  61,  67,  71,  73,  79,  83,  89,  97,
                       101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157,
                       163, 167, 173, 179, 181, 191, 193, 197, 199, 211, 223, 227};

// Factor a squarefree monic rational polynomial into monic irreducibles.
std::vector<Poly> factor_squarefree_monic(const Poly& f) {
  if (f.degree() <= 1) return {f.monic()};

  // Scale to a primitive integer polynomial, then force monicity by the
  // substitution M(y) = L^(n-1) * F(y/L): factors of M map back to factors
  // of F via h(y) -> primitive part of h(L x).
  ZPoly zf = to_zpoly_primitive(f);
  int n = zf.deg();
  Int big_l = zf.c.back();
  ZPoly m;
  m.c.assign(size_t(n) + 1, Int(0));
  {
    Int scale(1);  // L^(n-1-i) on coefficient i
    for (int i = n; i >= 0; --i) {
      m.c[size_t(i)] = zf.c[size_t(i)] * scale;
      if (i > 0) scale *= big_l;
    }
  }

  // Choose an odd prime where M stays squarefree.
  i64 p = 0;
  std::vector<FpPoly> modular;
  for (i64 cand : kPrimes) {
    FpPoly fm = to_fp(m, cand);
    if (fm.deg() != n) continue;
    FpPoly d = fp_deriv(fm, cand);
    if (d.zero()) continue;
    FpPoly g = fp_gcd(fm, d, cand);
    if (g.deg() == 0) {
      p = cand;
      modular = fp_factor_squarefree(fp_monic(fm, cand), cand);
      break;
    }
  }
  if (p == 0) throw std::runtime_error("no usable prime for factorization");

  std::sort(modular.begin(), modular.end(),
            [](const FpPoly& a, const FpPoly& b) { return a.c < b.c; });

  std::vector<ZPoly> z_factors;
  if (modular.size() == 1) {
    z_factors.push_back(m);
  } else {
    // Mignotte-style bound: coefficients of any monic factor of M are below
    // 2^n * (1 + sum |m_i|); lift until the modulus exceeds twice that.
    Int bound(1);
    for (const Int& x : m.c) bound += abs(x);
    bound <<= unsigned(n + 1);
    Int target(1);
    while (target <= 2 * bound) target *= p;
    hensel_tree(m, modular, 0, modular.size(), p, target, z_factors);
    for (auto& zp : z_factors) zp = z_symmetric(std::move(zp), target);

    // Subset recombination over the lifted factors.
    std::vector<ZPoly> found;
    std::vector<ZPoly> pool = z_factors;
    ZPoly rem = m;
    Int modulus = target;
    bool progress = true;
    for (size_t subset_size = 1; !pool.empty() && subset_size <= pool.size();) {
      if (2 * subset_size > pool.size()) {
        found.push_back(rem);
        pool.clear();
        break;
      }
      progress = false;
      std::vector<size_t> idx(subset_size);
      std::iota(idx.begin(), idx.end(), 0);
      while (true) {
        ZPoly cand{{Int(1)}};
        for (size_t i : idx) cand = z_symmetric(z_mul(cand, pool[i]), modulus);
        if (z_divides(cand, rem)) {
          found.push_back(cand);
          auto [q, r] = divmod(to_qpoly(rem), to_qpoly(cand));
          (void)r;
          rem = to_zpoly_primitive(q);
          std::vector<ZPoly> next;
          for (size_t i = 0, k = 0; i < pool.size(); ++i) {
            if (k < idx.size() && idx[k] == i) {
              ++k;
              continue;
            }
            next.push_back(pool[i]);
          }
          pool = std::move(next);
          progress = true;
          break;
        }
        // next combination
        size_t i = subset_size;
        while (i > 0 && idx[i - 1] == pool.size() - subset_size + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (size_t j = i; j < subset_size; ++j) idx[j] = idx[j - 1] + 1;
      }
      if (!progress) ++subset_size;
    }
    if (rem.deg() > 0 && (found.empty() || found.back().c != rem.c)) found.push_back(rem);
    z_factors = std::move(found);
    int degsum = 0;
    for (const ZPoly& h : z_factors) degsum += h.deg();
    if (degsum != n) throw std::runtime_error("recombination lost degree");
  }

  // Undo the monic substitution and return monic rational factors.
  std::vector<Poly> out;
  for (const ZPoly& h : z_factors) {
    ZPoly g;
    g.c.resize(h.c.size());
    Int scale(1);
    for (size_t i = 0; i < h.c.size(); ++i) {
      g.c[i] = h.c[i] * scale;
      scale *= big_l;
    }
    g.trim();
    out.push_back(to_qpoly(to_zpoly_primitive(to_qpoly(g))).monic());
  }
  return out;
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = 0; i <= a.degree(); ++i) {
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  }
  return false;
}

}  // namespace

std::tuple<Poly, Poly, Poly> poly_xgcd(const Poly& f, const Poly& g) {
  Poly r0 = f, r1 = g;
  Poly s0 = Poly::constant(1), s1, t0, t1 = Poly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = r1;
    r1 = r;
    Poly s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
    Poly t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rat inv = 1 / r0.lc();
  return {inv * r0, inv * s0, inv * t0};
}

Poly squarefree_part(const Poly& f) {
  if (f.is_zero()) return f;
  Poly g = poly_gcd(f, f.derivative());
  return (f / g).monic();
}

std::vector<std::pair<Poly, int>> factor_rational(const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
  std::vector<std::pair<Poly, int>> result;
  if (f.degree() == 0) return result;

  Poly work = f.monic();

  // Pull out the power of x first.
  int xk = 0;
  while (work.coeff(0) == 0) {
    work = work / Poly{Rat(0), Rat(1)};
    ++xk;
  }
  if (xk > 0) result.push_back({Poly{Rat(0), Rat(1)}, xk});

  // Yun's squarefree decomposition: work = prod a_i^i.
  if (work.degree() > 0) {
    Poly g = poly_gcd(work, work.derivative());
    Poly c = (work / g).monic();
    Poly d = (work.derivative() / g) - c.derivative();
    for (int i = 1; c.degree() > 0; ++i) {
      Poly a = poly_gcd(c, d);
      if (a.degree() > 0)
        for (const Poly& irr : factor_squarefree_monic(a)) result.push_back({irr, i});
      c = (c / a).monic();
      d = (d / a) - c.derivative();
    }
  }

  std::sort(result.begin(), result.end(),
            [](const auto& x, const auto& y) { return poly_less(x.first, y.first); });
  return result;
}

}  // namespace lefkit
