#pragma once

#include <optional>

#include "bgnlab/algebra.hpp"
#include "bgnlab/fp2.hpp"

namespace bgnlab {

// Affine point; `infinity` marks the group identity and then x, y are unused.
struct CurvePoint {
  BigInt x;
  BigInt y;
  bool infinity = true;

  static CurvePoint at_infinity() { return {}; }
  static CurvePoint affine(BigInt x, BigInt y) { return {std::move(x), std::move(y), false}; }

  friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
    if (a.infinity || b.infinity) return a.infinity == b.infinity;
    return a.x == b.x && a.y == b.y;
  }
};

// The supersingular curve y^2 = x^3 + x over GF(p) with p = 3 mod 4. It has
// p + 1 rational points and embedding degree 2; the distortion map
// (x, y) -> (-x, i*y) sends rational points into GF(p^2) outside the rational
// subgroup, which yields a symmetric pairing.
class SupersingularCurve {
 public:
  explicit SupersingularCurve(BigInt field_prime);

  const BigInt& field_prime() const { return p_; }
  const Fp2Field& extension() const { return ext_; }

  bool on_curve(const CurvePoint& pt) const;

  CurvePoint neg(const CurvePoint& a) const;
  CurvePoint add(const CurvePoint& a, const CurvePoint& b) const;
  CurvePoint dbl(const CurvePoint& a) const { return add(a, a); }
  // Double-and-add; negative k multiplies the negated point.
  CurvePoint mul(const CurvePoint& a, const BigInt& k) const;

  // Point with abscissa x, choosing the root of matching parity, if any.
  std::optional<CurvePoint> lift_x(const BigInt& x, bool odd_y) const;
  CurvePoint random_point(Rng& rng) const;

  // Miller function f_{order,P} evaluated at the distortion image of Q, with
  // vertical-line denominators kept. Throws degenerate_pairing if a line
  // vanishes at the evaluation point.
  Fp2 miller(const CurvePoint& P, const CurvePoint& Q, const BigInt& order) const;

  // Modified Tate pairing: miller(P, Q, order)^((p^2 - 1) / order).
  Fp2 tate(const CurvePoint& P, const CurvePoint& Q, const BigInt& order) const;

 private:
  BigInt p_;
  Fp2Field ext_;
};

}  // namespace bgnlab
