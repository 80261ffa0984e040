#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lefkit {

// Exact scalars. mpq_class values are kept canonical (lowest terms,
// positive denominator) by GMP itself; every constructor below canonicalizes.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Int num(const Rat& r) { return r.get_num(); }
inline Int den(const Rat& r) { return r.get_den(); }
inline bool is_int(const Rat& r) { return r.get_den() == 1; }

// "p" when the denominator is 1, otherwise "p/q"; q > 0 and gcd(p,q)=1.
inline std::string rat_str(const Rat& r) { return r.get_str(); }

// Accepts "p" or "p/q" with optional sign; canonicalizes.
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rat r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

// Bit-size proxy used for pivot selection: smaller means cheaper to multiply.
inline size_t rat_bits(const Rat& r) {
  return mpz_sizeinbase(r.get_num().get_mpz_t(), 2) +
         mpz_sizeinbase(r.get_den().get_mpz_t(), 2);
}

// Deterministic splitmix64 generator. std::uniform_int_distribution is not
// reproducible across standard libraries, so sampling is done by hand.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed + 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi], inclusive. Rejection-free modulo is fine here: the
  // ranges are tiny and bias is irrelevant for sampling regular elements.
  long uniform(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Rat rat_in(long bound) { return Rat(uniform(-bound, bound)); }

 private:
  std::uint64_t state_;
};

}  // namespace lefkit
