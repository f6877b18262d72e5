#include "bgnlab/curve.hpp"

#include <utility>

namespace bgnlab {

SupersingularCurve::SupersingularCurve(BigInt field_prime)
    : p_(std::move(field_prime)), ext_(p_) {}

bool SupersingularCurve::on_curve(const CurvePoint& pt) const {
  if (pt.infinity) return true;
  if (pt.x < 0 || pt.x >= p_ || pt.y < 0 || pt.y >= p_) return false;
  return mod(pt.y * pt.y - pt.x * pt.x * pt.x - pt.x, p_) == 0;
}

CurvePoint SupersingularCurve::neg(const CurvePoint& a) const {
  if (a.infinity) return a;
  return CurvePoint::affine(a.x, mod(-a.y, p_));
}

CurvePoint SupersingularCurve::add(const CurvePoint& a, const CurvePoint& b) const {
  if (a.infinity) return b;
  if (b.infinity) return a;
  BigInt lambda;
  if (a.x == b.x) {
    if (mod(a.y + b.y, p_) == 0) return CurvePoint::at_infinity();
    lambda = mod((3 * a.x * a.x + 1) * mod_inverse(2 * a.y, p_), p_);
  } else {
    lambda = mod((b.y - a.y) * mod_inverse(b.x - a.x, p_), p_);
  }
  BigInt x3 = mod(lambda * lambda - a.x - b.x, p_);
  BigInt y3 = mod(lambda * (a.x - x3) - a.y, p_);
  return CurvePoint::affine(std::move(x3), std::move(y3));
}

CurvePoint SupersingularCurve::mul(const CurvePoint& a, const BigInt& k) const {
  if (k < 0) return mul(neg(a), -k);
  CurvePoint result = CurvePoint::at_infinity();
  if (k == 0 || a.infinity) return result;
  const std::size_t bits = mpz_sizeinbase(k.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = dbl(result);
    if (mpz_tstbit(k.get_mpz_t(), i) != 0) result = add(result, a);
  }
  return result;
}

std::optional<CurvePoint> SupersingularCurve::lift_x(const BigInt& x, bool odd_y) const {
  const BigInt xr = mod(x, p_);
  const BigInt rhs = mod(xr * xr * xr + xr, p_);
  // p = 3 mod 4, so rhs^((p+1)/4) is a square root whenever one exists.
  BigInt y = mod_exp(rhs, (p_ + 1) / 4, p_);
  if (mod(y * y, p_) != rhs) return std::nullopt;
  if ((mpz_odd_p(y.get_mpz_t()) != 0) != odd_y && y != 0) y = p_ - y;
  return CurvePoint::affine(xr, std::move(y));
}

CurvePoint SupersingularCurve::random_point(Rng& rng) const {
  for (;;) {
    const BigInt x = random_below(p_, rng);
    const bool odd = (rng() & 1U) != 0;
    if (auto pt = lift_x(x, odd)) return *pt;
  }
}

namespace {

// Accumulates numerator and denominator separately so the loop needs a
// single extension-field inversion at the end.
struct MillerAccumulator {
  const Fp2Field& ext;
  Fp2 num;
  Fp2 den;

  void square() {
    num = ext.sqr(num);
    den = ext.sqr(den);
  }
};

}  // namespace

Fp2 SupersingularCurve::miller(const CurvePoint& P, const CurvePoint& Q,
                               const BigInt& order) const {
  if (P.infinity || Q.infinity) return ext_.one();
  if (order <= 0) {
    throw Error(ErrorKind::invalid_argument, "miller: order must be positive");
  }

  // Distortion image phi(Q) = (-xq, i*yq).
  const BigInt qx = mod(-Q.x, p_);
  const BigInt& qy = Q.y;

  auto degenerate = [] {
    return Error(ErrorKind::degenerate_pairing,
                 "miller: line function vanishes at the evaluation point");
  };

  // Line with slope lambda through T evaluated at phi(Q):
  //   Y - yT - lambda (X - xT)  ->  (lambda (xT - X) - yT) + yq i
  auto line = [&](const CurvePoint& T, const BigInt& lambda) {
    Fp2 v{mod(lambda * (T.x - qx) - T.y, p_), mod(qy, p_)};
    if (ext_.is_zero(v)) throw degenerate();
    return v;
  };
  // Vertical line X - xS at phi(Q).
  auto vertical = [&](const CurvePoint& S) {
    Fp2 v{mod(qx - S.x, p_), 0};
    if (ext_.is_zero(v)) throw degenerate();
    return v;
  };

  // Multiplies the accumulator by l_{T,U}(phi Q) / v_{T+U}(phi Q) and returns T+U.
  auto step = [&](MillerAccumulator& acc, const CurvePoint& T, const CurvePoint& U) {
    if (T.infinity || U.infinity) return add(T, U);
    if (T.x == U.x && mod(T.y + U.y, p_) == 0) {
      // T = -U: the chord is vertical and the sum is the identity.
      acc.num = ext_.mul(acc.num, vertical(T));
      return CurvePoint::at_infinity();
    }
    BigInt lambda;
    if (T == U) {
      lambda = mod((3 * T.x * T.x + 1) * mod_inverse(2 * T.y, p_), p_);
    } else {
      lambda = mod((U.y - T.y) * mod_inverse(U.x - T.x, p_), p_);
    }
    const CurvePoint S = add(T, U);
    acc.num = ext_.mul(acc.num, line(T, lambda));
    acc.den = ext_.mul(acc.den, vertical(S));
    return S;
  };

  MillerAccumulator acc{ext_, ext_.one(), ext_.one()};
  CurvePoint T = P;
  const std::size_t bits = mpz_sizeinbase(order.get_mpz_t(), 2);
  for (std::size_t i = bits - 1; i-- > 0;) {
    acc.square();
    T = step(acc, T, T);
    if (mpz_tstbit(order.get_mpz_t(), i) != 0) T = step(acc, T, P);
  }
  return ext_.mul(acc.num, ext_.inv(acc.den));
}

Fp2 SupersingularCurve::tate(const CurvePoint& P, const CurvePoint& Q,
                             const BigInt& order) const {
  const BigInt field_order = p_ * p_ - 1;
  if (mpz_divisible_p(field_order.get_mpz_t(), order.get_mpz_t()) == 0) {
    throw Error(ErrorKind::invalid_argument, "tate: order does not divide p^2 - 1");
  }
  return ext_.pow(miller(P, Q, order), field_order / order);
}

}  // namespace bgnlab
