#pragma once

#include <cstdint>
#include <random>

#include <gmpxx.h>

#include "bgnlab/error.hpp"

namespace bgnlab {

using BigInt = mpz_class;

// Every randomized operation takes the generator explicitly. Seeded runs are
// reproducible within this implementation.
using Rng = std::mt19937_64;

struct ExtGcdResult {
  BigInt g;  // gcd, always >= 0
  BigInt s;
  BigInt t;
};

// Bezout coefficients with s*a + t*b == g. When b != 0 the coefficient s is
// normalized into [0, |b|/g), so ext_gcd(7, 5) yields (1, 3, -4).
ExtGcdResult ext_gcd(const BigInt& a, const BigInt& b);

// Thrown by mod_inverse. The gcd is a nontrivial factor of the modulus
// whenever it is not the modulus itself.
class NotInvertible : public Error {
 public:
  NotInvertible(const BigInt& value, const BigInt& modulus, const BigInt& gcd);

  const BigInt& gcd() const noexcept { return gcd_; }

 private:
  BigInt gcd_;
};

// Representative of a in [0, n). Requires n > 0.
BigInt mod(const BigInt& a, const BigInt& n);

// Inverse of a modulo n in [1, n). Requires n > 1.
BigInt mod_inverse(const BigInt& a, const BigInt& n);

// base^exp mod modulus in [0, modulus). Requires modulus > 0 and exp >= 0.
BigInt mod_exp(const BigInt& base, const BigInt& exp, const BigInt& modulus);

// Uniform in [0, bound). Requires bound > 0.
BigInt random_below(const BigInt& bound, Rng& rng);

// Uniform in [lo, hi). Requires lo < hi.
BigInt random_range(const BigInt& lo, const BigInt& hi, Rng& rng);

inline constexpr int kMillerRabinRounds = 40;

bool is_probable_prime(const BigInt& n, Rng& rng, int rounds = kMillerRabinRounds);

// Probable prime with exactly `bits` bits. Requires bits >= 2.
BigInt gen_prime(unsigned bits, Rng& rng);

inline BigInt big(std::int64_t v) { return BigInt(static_cast<long>(v)); }

}  // namespace bgnlab
