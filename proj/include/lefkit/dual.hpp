#pragma once

#include <stdexcept>

#include "lefkit/rational.hpp"

namespace lefkit {

// a + b*eps with eps^2 = 0. The eps part of f(x + eps) is f'(x), exactly.
struct Dual {
  Rat a;  // value
  Rat b;  // derivative

  Dual() : a(0), b(0) {}
  Dual(Rat value) : a(std::move(value)), b(0) {}  // NOLINT: implicit by design
  Dual(Rat value, Rat deriv) : a(std::move(value)), b(std::move(deriv)) {}

  friend Dual operator+(const Dual& x, const Dual& y) { return {x.a + y.a, x.b + y.b}; }
  friend Dual operator-(const Dual& x, const Dual& y) { return {x.a - y.a, x.b - y.b}; }
  friend Dual operator-(const Dual& x) { return {-x.a, -x.b}; }
  friend Dual operator*(const Dual& x, const Dual& y) {
    return {x.a * y.a, x.a * y.b + x.b * y.a};
  }
  Dual& operator+=(const Dual& y) { a += y.a; b += y.b; return *this; }
  Dual& operator-=(const Dual& y) { a -= y.a; b -= y.b; return *this; }
  Dual& operator*=(const Dual& y) { b = a * y.b + b * y.a; a *= y.a; return *this; }
  friend bool operator==(const Dual& x, const Dual& y) { return x.a == y.a && x.b == y.b; }

  Dual inv() const {
    if (a == 0) throw std::domain_error("dual number with zero value part has no inverse");
    Rat ia = 1 / a;
    return {ia, -b * ia * ia};
  }
};

inline Dual operator/(const Dual& x, const Dual& y) { return x * y.inv(); }

}  // namespace lefkit
