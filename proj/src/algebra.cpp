#include "bgnlab/algebra.hpp"

#include <array>
#include <string>

namespace bgnlab {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument: return "InvalidArgument";
    case ErrorKind::not_invertible: return "NotInvertible";
    case ErrorKind::context_mismatch: return "ContextMismatch";
    case ErrorKind::malformed: return "Malformed";
    case ErrorKind::off_curve: return "OffCurve";
    case ErrorKind::wrong_order: return "WrongOrder";
    case ErrorKind::not_extractable: return "NotExtractable";
    case ErrorKind::opening_mismatch: return "OpeningMismatch";
    case ErrorKind::setup_failed: return "SetupFailed";
    case ErrorKind::degenerate_pairing: return "DegeneratePairing";
  }
  return "Unknown";
}

namespace {

constexpr std::array<unsigned, 25> kSmallPrimes = {
    2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
    43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

BigInt abs_value(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

}  // namespace

NotInvertible::NotInvertible(const BigInt& value, const BigInt& modulus, const BigInt& gcd)
    : Error(ErrorKind::not_invertible,
            value.get_str() + " is not invertible modulo " + modulus.get_str() +
                " (gcd " + gcd.get_str() + ")"),
      gcd_(gcd) {}

ExtGcdResult ext_gcd(const BigInt& a, const BigInt& b) {
  if (a == 0 && b == 0) {
    throw Error(ErrorKind::invalid_argument, "ext_gcd: both inputs are zero");
  }
  BigInt r0 = abs_value(a), r1 = abs_value(b);
  BigInt s0 = 1, s1 = 0;
  BigInt t0 = 0, t1 = 1;
  while (r1 != 0) {
    BigInt quot = r0 / r1;
    BigInt tmp = r0 - quot * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - quot * s1;
    s0 = s1;
    s1 = tmp;
    tmp = t0 - quot * t1;
    t0 = t1;
    t1 = tmp;
  }
  // r0 = s0*|a| + t0*|b|; move signs onto the coefficients.
  if (a < 0) s0 = -s0;
  if (b < 0) t0 = -t0;

  ExtGcdResult out{r0, s0, t0};
  if (b != 0) {
    const BigInt step = abs_value(b) / out.g;
    out.s = mod(out.s, step);
    out.t = (out.g - out.s * a) / b;
  }
  return out;
}

BigInt mod(const BigInt& a, const BigInt& n) {
  if (n <= 0) {
    throw Error(ErrorKind::invalid_argument, "mod: modulus must be positive");
  }
  BigInt r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  return r;
}

BigInt mod_inverse(const BigInt& a, const BigInt& n) {
  if (n <= 1) {
    throw Error(ErrorKind::invalid_argument, "mod_inverse: modulus must exceed 1");
  }
  const BigInt reduced = mod(a, n);
  if (reduced == 0) {
    throw NotInvertible(a, n, n);
  }
  const ExtGcdResult eg = ext_gcd(reduced, n);
  if (eg.g != 1) {
    throw NotInvertible(a, n, eg.g);
  }
  return mod(eg.s, n);
}

BigInt mod_exp(const BigInt& base, const BigInt& exp, const BigInt& modulus) {
  if (modulus <= 0) {
    throw Error(ErrorKind::invalid_argument, "mod_exp: modulus must be positive");
  }
  if (exp < 0) {
    throw Error(ErrorKind::invalid_argument, "mod_exp: exponent must be non-negative");
  }
  BigInt r;
  const BigInt b = mod(base, modulus);
  mpz_powm(r.get_mpz_t(), b.get_mpz_t(), exp.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

BigInt random_below(const BigInt& bound, Rng& rng) {
  if (bound <= 0) {
    throw Error(ErrorKind::invalid_argument, "random_below: bound must be positive");
  }
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const std::size_t words = (bits + 63) / 64;
  const std::size_t excess = words * 64 - bits;
  for (;;) {
    BigInt candidate = 0;
    for (std::size_t i = 0; i < words; ++i) {
      std::uint64_t w = rng();
      if (i == 0 && excess > 0) w >>= excess;
      candidate <<= 64;
      mpz_class part;
      mpz_import(part.get_mpz_t(), 1, 1, sizeof(w), 0, 0, &w);
      candidate += part;
    }
    if (candidate < bound) return candidate;
  }
}

BigInt random_range(const BigInt& lo, const BigInt& hi, Rng& rng) {
  if (lo >= hi) {
    throw Error(ErrorKind::invalid_argument, "random_range: empty range");
  }
  return lo + random_below(hi - lo, rng);
}

bool is_probable_prime(const BigInt& n, Rng& rng, int rounds) {
  if (n < 2) return false;
  for (unsigned sp : kSmallPrimes) {
    if (n == sp) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), sp) != 0) return false;
  }
  // n - 1 = d * 2^s with d odd
  const BigInt n_minus_1 = n - 1;
  BigInt d = n_minus_1;
  unsigned s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d >>= 1;
    ++s;
  }
  for (int round = 0; round < rounds; ++round) {
    const BigInt a = random_range(2, n_minus_1, rng);
    BigInt x = mod_exp(a, d, n);
    if (x == 1 || x == n_minus_1) continue;
    bool witness = true;
    for (unsigned i = 1; i < s; ++i) {
      x = x * x % n;
      if (x == n_minus_1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

BigInt gen_prime(unsigned bits, Rng& rng) {
  if (bits < 2) {
    throw Error(ErrorKind::invalid_argument,
                "gen_prime: need at least 2 bits, got " + std::to_string(bits));
  }
  BigInt lo = 1;
  lo <<= bits - 1;
  const BigInt hi = lo * 2;
  for (;;) {
    BigInt candidate = random_range(lo, hi, rng);
    if (bits > 2) candidate |= 1;
    if (is_probable_prime(candidate, rng)) return candidate;
  }
}

}  // namespace bgnlab
