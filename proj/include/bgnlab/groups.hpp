#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "bgnlab/algebra.hpp"
#include "bgnlab/curve.hpp"
#include "bgnlab/fp2.hpp"
#include "bgnlab/textio.hpp"

namespace bgnlab {

// transparent: elements are exponents relative to g, so discrete logs are
// known by construction. Non-cryptographic; it exists for test oracles.
// curve: points on y^2 = x^3 + x with the modified Tate pairing.
enum class Backend { transparent, curve };

std::string_view to_string(Backend backend);
Backend parse_backend(std::string_view text);

struct CurveParams {
  BigInt field_prime;  // p' with p' + 1 = cofactor * n, p' = 3 mod 4
  BigInt cofactor;
};

class GroupContext;
using GroupPtr = std::shared_ptr<const GroupContext>;

// Element of the order-n group G. Holds a reference to its group; mixing
// elements of different groups is an error.
class GElement {
 public:
  const GroupPtr& group() const { return group_; }
  bool is_identity() const;

  // Discrete log relative to g; transparent backend only.
  const BigInt& exponent() const;
  // Affine point; curve backend only.
  const CurvePoint& point() const;

  // Equal iff both live in the same public group and carry the same value.
  friend bool operator==(const GElement& a, const GElement& b);

 private:
  friend class GroupContext;
  GElement(GroupPtr group, std::variant<BigInt, CurvePoint> value)
      : group_(std::move(group)), value_(std::move(value)) {}

  GroupPtr group_;
  std::variant<BigInt, CurvePoint> value_;
};

// Element of the order-n subgroup of the target group G_T.
class GTElement {
 public:
  const GroupPtr& group() const { return group_; }
  bool is_identity() const;

  const BigInt& exponent() const;  // relative to e(g, g); transparent only
  const Fp2& value() const;        // curve only

  friend bool operator==(const GTElement& a, const GTElement& b);

 private:
  friend class GroupContext;
  GTElement(GroupPtr group, std::variant<BigInt, Fp2> value)
      : group_(std::move(group)), value_(std::move(value)) {}

  GroupPtr group_;
  std::variant<BigInt, Fp2> value_;
};

struct CurveSetupOptions {
  // Number of even cofactors tried before giving up.
  std::uint64_t max_cofactor_candidates = std::uint64_t{1} << 20;
  // Generator resampling attempts.
  unsigned max_generator_attempts = 1000;
};

// A realized composite-order symmetric bilinear group of order n = p*q.
// Immutable once built. The factorization is present when the context was
// generated locally and absent when loaded from public key material.
class GroupContext : public std::enable_shared_from_this<GroupContext> {
  struct Passkey {};

 public:
  static GroupPtr setup_transparent(const BigInt& p, const BigInt& q);
  static GroupPtr setup_curve(const BigInt& p, const BigInt& q, Rng& rng,
                              const CurveSetupOptions& options = {});

  // Rebuilds a context from its text fields (see to_fields). Validates the
  // prime structure and generator order; p and q are optional.
  static GroupPtr from_fields(const KeyValues& fields);

  Backend backend() const { return backend_; }
  const BigInt& n() const { return n_; }
  bool has_factorization() const { return p_.has_value(); }
  const BigInt& p() const;  // throws if unknown
  const BigInt& q() const;

  const CurveParams* curve_params() const { return curve_params_ ? &*curve_params_ : nullptr; }
  const SupersingularCurve* curve() const { return curve_ ? &*curve_ : nullptr; }

  GElement generator() const;
  GElement identity() const;
  // g^e for any integer e.
  GElement g_pow(const BigInt& e) const;
  GTElement gt() const;  // cached e(g, g)
  GTElement gt_identity() const;

  // Same public description: backend, n, curve parameters and generator.
  bool same_group(const GroupContext& other) const;

  std::string encode(const GElement& a) const;
  std::string encode(const GTElement& a) const;
  // Errors: malformed text, off_curve, wrong_order.
  GElement decode_g(std::string_view text) const;
  GTElement decode_gt(std::string_view text) const;

  // Public fields always; p and q only when requested and known.
  KeyValues to_fields(bool include_factorization) const;

  // Group law and pairing; all check that operands share this group.
  GElement mul(const GElement& a, const GElement& b) const;
  GElement inv(const GElement& a) const;
  GElement pow(const GElement& a, const BigInt& e) const;
  GTElement pair(const GElement& a, const GElement& b) const;
  GTElement gt_mul(const GTElement& a, const GTElement& b) const;
  GTElement gt_inv(const GTElement& a) const;
  GTElement gt_pow(const GTElement& a, const BigInt& e) const;

  GroupContext(Passkey, Backend backend, BigInt n, std::optional<BigInt> p,
               std::optional<BigInt> q, std::optional<CurveParams> curve_params,
               CurvePoint g_point);

 private:
  void check_member(const GElement& a) const;
  void check_member(const GTElement& a) const;
  GElement make(BigInt exponent) const;
  GElement make(CurvePoint pt) const;
  GTElement make_gt(BigInt exponent) const;
  GTElement make_gt(Fp2 value) const;
  void compute_gt();

  Backend backend_;
  BigInt n_;
  std::optional<BigInt> p_;
  std::optional<BigInt> q_;
  std::optional<CurveParams> curve_params_;
  std::optional<SupersingularCurve> curve_;
  CurvePoint g_point_;  // curve backend generator
  Fp2 gt_value_;        // curve backend e(g, g)
};

// Free-function forms of the group operations.
GElement operator*(const GElement& a, const GElement& b);
GElement inverse(const GElement& a);
GElement pow(const GElement& a, const BigInt& e);
GTElement pair(const GElement& a, const GElement& b);
GTElement operator*(const GTElement& a, const GTElement& b);
GTElement inverse(const GTElement& a);
GTElement pow(const GTElement& a, const BigInt& e);

// True iff a^q is the identity, i.e. a lies in the order-q subgroup G_q.
// Requires q to divide n.
bool is_in_subgroup_q(const GElement& a, const BigInt& q);

std::string encode(const GElement& a);
std::string encode(const GTElement& a);

}  // namespace bgnlab
