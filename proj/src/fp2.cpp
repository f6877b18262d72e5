#include "bgnlab/fp2.hpp"

#include <utility>

namespace bgnlab {

Fp2Field::Fp2Field(BigInt p) : p_(std::move(p)) {
  if (p_ < 3 || mod(p_, 4) != 3) {
    throw Error(ErrorKind::invalid_argument,
                "Fp2Field: characteristic must be 3 mod 4, got " + p_.get_str());
  }
}

Fp2 Fp2Field::add(const Fp2& a, const Fp2& b) const {
  return {mod(a.re + b.re, p_), mod(a.im + b.im, p_)};
}

Fp2 Fp2Field::sub(const Fp2& a, const Fp2& b) const {
  return {mod(a.re - b.re, p_), mod(a.im - b.im, p_)};
}

Fp2 Fp2Field::mul(const Fp2& a, const Fp2& b) const {
  return {mod(a.re * b.re - a.im * b.im, p_), mod(a.re * b.im + a.im * b.re, p_)};
}

Fp2 Fp2Field::conj(const Fp2& a) const { return {a.re, mod(-a.im, p_)}; }

Fp2 Fp2Field::inv(const Fp2& a) const {
  // (re + im i)^-1 = (re - im i) / (re^2 + im^2)
  const BigInt norm = mod(a.re * a.re + a.im * a.im, p_);
  if (norm == 0) {
    throw Error(ErrorKind::invalid_argument, "Fp2Field: inverse of zero");
  }
  const BigInt ninv = mod_inverse(norm, p_);
  return {mod(a.re * ninv, p_), mod(-a.im * ninv, p_)};
}

Fp2 Fp2Field::pow(const Fp2& a, const BigInt& e) const {
  if (e < 0) return pow(inv(a), -e);
  Fp2 result = one();
  Fp2 base = reduce(a);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = sqr(result);
    if (mpz_tstbit(e.get_mpz_t(), i) != 0) result = mul(result, base);
  }
  return result;
}

}  // namespace bgnlab
