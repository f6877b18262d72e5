#pragma once

#include "bgnlab/algebra.hpp"

namespace bgnlab {

// re + im*i with i^2 = -1. Only meaningful relative to an Fp2Field.
struct Fp2 {
  BigInt re;
  BigInt im;

  friend bool operator==(const Fp2&, const Fp2&) = default;
};

// GF(p^2) = GF(p)[i]/(i^2 + 1), valid when p = 3 mod 4.
class Fp2Field {
 public:
  explicit Fp2Field(BigInt p);

  const BigInt& characteristic() const { return p_; }

  Fp2 one() const { return {1, 0}; }
  Fp2 zero() const { return {0, 0}; }
  Fp2 from_base(const BigInt& v) const { return {mod(v, p_), 0}; }
  Fp2 reduce(const Fp2& a) const { return {mod(a.re, p_), mod(a.im, p_)}; }

  Fp2 add(const Fp2& a, const Fp2& b) const;
  Fp2 sub(const Fp2& a, const Fp2& b) const;
  Fp2 mul(const Fp2& a, const Fp2& b) const;
  Fp2 sqr(const Fp2& a) const { return mul(a, a); }
  Fp2 conj(const Fp2& a) const;
  Fp2 inv(const Fp2& a) const;
  Fp2 pow(const Fp2& a, const BigInt& e) const;

  bool is_zero(const Fp2& a) const { return a.re == 0 && a.im == 0; }

 private:
  BigInt p_;
};

}  // namespace bgnlab
