#include "bgnlab/groups.hpp"

#include <utility>

namespace bgnlab {

namespace {

// Validation-only randomness for Miller-Rabin witnesses; kept separate from
// caller RNGs so that loading a file never perturbs a seeded stream.
bool validated_prime(const BigInt& v) {
  Rng local(0x6267'6e6c'6162ULL);
  return is_probable_prime(v, local);
}

void require_prime_pair(const BigInt& p, const BigInt& q) {
  if (!validated_prime(p)) {
    throw Error(ErrorKind::invalid_argument, "p = " + p.get_str() + " is not prime");
  }
  if (!validated_prime(q)) {
    throw Error(ErrorKind::invalid_argument, "q = " + q.get_str() + " is not prime");
  }
  if (p >= q) {
    throw Error(ErrorKind::invalid_argument,
                "primes must satisfy p < q, got p = " + p.get_str() + ", q = " + q.get_str());
  }
}

bool has_exact_order(const SupersingularCurve& curve, const CurvePoint& pt, const BigInt& n,
                     const BigInt& p, const BigInt& q) {
  return curve.mul(pt, n).infinity && !curve.mul(pt, n / p).infinity &&
         !curve.mul(pt, n / q).infinity;
}

bool gt_has_exact_order(const Fp2Field& ext, const Fp2& z, const BigInt& n,
                        const std::optional<BigInt>& p, const std::optional<BigInt>& q) {
  const Fp2 one = ext.one();
  if (ext.pow(z, n) != one || z == one) return false;
  if (p && q) return ext.pow(z, n / *p) != one && ext.pow(z, n / *q) != one;
  return true;
}

Error mismatch() {
  return Error(ErrorKind::context_mismatch, "elements belong to different groups");
}

std::string_view strip_prefix(std::string_view text, std::string_view prefix) {
  if (text.substr(0, prefix.size()) != prefix) {
    throw Error(ErrorKind::malformed, "element '" + std::string(text) + "' lacks prefix '" +
                                          std::string(prefix) + "'");
  }
  return text.substr(prefix.size());
}

std::pair<BigInt, BigInt> split_pair(std::string_view body, std::string_view what) {
  const std::size_t comma = body.find(',');
  if (comma == std::string_view::npos) {
    throw Error(ErrorKind::malformed, std::string(what) + ": expected '<a>,<b>'");
  }
  return {parse_decimal(body.substr(0, comma), what), parse_decimal(body.substr(comma + 1), what)};
}

CurvePoint parse_point(std::string_view text) {
  const std::string_view body = strip_prefix(text, "G:");
  if (body == "inf") return CurvePoint::at_infinity();
  auto [x, y] = split_pair(body, "curve point");
  return CurvePoint::affine(std::move(x), std::move(y));
}

}  // namespace

std::string_view to_string(Backend backend) {
  return backend == Backend::transparent ? "transparent" : "curve";
}

Backend parse_backend(std::string_view text) {
  if (text == "transparent") return Backend::transparent;
  if (text == "curve") return Backend::curve;
  throw Error(ErrorKind::malformed, "unknown backend '" + std::string(text) + "'");
}

// --- elements --------------------------------------------------------------

bool GElement::is_identity() const {
  if (const auto* e = std::get_if<BigInt>(&value_)) return *e == 0;
  return std::get<CurvePoint>(value_).infinity;
}

const BigInt& GElement::exponent() const {
  if (const auto* e = std::get_if<BigInt>(&value_)) return *e;
  throw Error(ErrorKind::invalid_argument, "exponent() requires the transparent backend");
}

const CurvePoint& GElement::point() const {
  if (const auto* pt = std::get_if<CurvePoint>(&value_)) return *pt;
  throw Error(ErrorKind::invalid_argument, "point() requires the curve backend");
}

bool operator==(const GElement& a, const GElement& b) {
  if (a.group_ != b.group_ && !a.group_->same_group(*b.group_)) return false;
  if (const auto* ea = std::get_if<BigInt>(&a.value_)) return *ea == std::get<BigInt>(b.value_);
  return std::get<CurvePoint>(a.value_) == std::get<CurvePoint>(b.value_);
}

bool GTElement::is_identity() const {
  if (const auto* e = std::get_if<BigInt>(&value_)) return *e == 0;
  const Fp2& z = std::get<Fp2>(value_);
  return z.re == 1 && z.im == 0;
}

const BigInt& GTElement::exponent() const {
  if (const auto* e = std::get_if<BigInt>(&value_)) return *e;
  throw Error(ErrorKind::invalid_argument, "exponent() requires the transparent backend");
}

const Fp2& GTElement::value() const {
  if (const auto* z = std::get_if<Fp2>(&value_)) return *z;
  throw Error(ErrorKind::invalid_argument, "value() requires the curve backend");
}

bool operator==(const GTElement& a, const GTElement& b) {
  if (a.group_ != b.group_ && !a.group_->same_group(*b.group_)) return false;
  if (const auto* ea = std::get_if<BigInt>(&a.value_)) return *ea == std::get<BigInt>(b.value_);
  return std::get<Fp2>(a.value_) == std::get<Fp2>(b.value_);
}

// --- construction ----------------------------------------------------------

GroupContext::GroupContext(Passkey, Backend backend, BigInt n, std::optional<BigInt> p,
                           std::optional<BigInt> q, std::optional<CurveParams> curve_params,
                           CurvePoint g_point)
    : backend_(backend),
      n_(std::move(n)),
      p_(std::move(p)),
      q_(std::move(q)),
      curve_params_(std::move(curve_params)),
      g_point_(std::move(g_point)) {
  if (backend_ == Backend::curve) {
    curve_.emplace(curve_params_->field_prime);
    compute_gt();
  }
}

void GroupContext::compute_gt() {
  gt_value_ = curve_->tate(g_point_, g_point_, n_);
  if (!gt_has_exact_order(curve_->extension(), gt_value_, n_, p_, q_)) {
    throw Error(ErrorKind::setup_failed, "e(g, g) does not have order n");
  }
}

GroupPtr GroupContext::setup_transparent(const BigInt& p, const BigInt& q) {
  require_prime_pair(p, q);
  return std::make_shared<const GroupContext>(Passkey{}, Backend::transparent, p * q, p, q,
                                              std::nullopt, CurvePoint::at_infinity());
}

GroupPtr GroupContext::setup_curve(const BigInt& p, const BigInt& q, Rng& rng,
                                   const CurveSetupOptions& options) {
  require_prime_pair(p, q);
  const BigInt n = p * q;
  if (mpz_even_p(n.get_mpz_t()) != 0) {
    throw Error(ErrorKind::invalid_argument, "curve backend needs odd n, got " + n.get_str());
  }

  // Smallest even cofactor with c*n - 1 prime and = 3 mod 4.
  std::optional<CurveParams> params;
  BigInt cofactor = 2;
  for (std::uint64_t i = 0; i < options.max_cofactor_candidates; ++i, cofactor += 2) {
    const BigInt candidate = cofactor * n - 1;
    if (mod(candidate, 4) == 3 && is_probable_prime(candidate, rng)) {
      params = CurveParams{candidate, cofactor};
      break;
    }
  }
  if (!params) {
    throw Error(ErrorKind::setup_failed,
                "no cofactor c with c*n - 1 prime and 3 mod 4 among the first " +
                    std::to_string(options.max_cofactor_candidates) +
                    " even candidates; choose different (p, q)");
  }

  const SupersingularCurve curve(params->field_prime);
  for (unsigned attempt = 0; attempt < options.max_generator_attempts; ++attempt) {
    const CurvePoint g = curve.mul(curve.random_point(rng), params->cofactor);
    if (!has_exact_order(curve, g, n, p, q)) continue;
    try {
      return std::make_shared<const GroupContext>(Passkey{}, Backend::curve, n, p, q, params, g);
    } catch (const Error& e) {
      // Degenerate evaluation or a pairing of wrong order; resample g.
      if (e.kind() != ErrorKind::degenerate_pairing && e.kind() != ErrorKind::setup_failed) {
        throw;
      }
    }
  }
  throw Error(ErrorKind::setup_failed, "could not find a generator of order n");
}

GroupPtr GroupContext::from_fields(const KeyValues& fields) {
  const Backend backend = parse_backend(fields.get("backend"));
  const BigInt n = fields.get_int("n");
  if (n < 2) throw Error(ErrorKind::malformed, "field 'n': must be at least 2");

  std::optional<BigInt> p, q;
  if (fields.contains("p") || fields.contains("q")) {
    p = fields.get_int("p");
    q = fields.get_int("q");
    require_prime_pair(*p, *q);
    if (*p * *q != n) throw Error(ErrorKind::malformed, "field 'n': n != p*q");
  }

  const std::string& g_text = fields.get("g");
  if (backend == Backend::transparent) {
    if (g_text != "G:1") {
      throw Error(ErrorKind::malformed, "field 'g': transparent generator must be G:1");
    }
    return std::make_shared<const GroupContext>(Passkey{}, backend, n, p, q, std::nullopt,
                                                CurvePoint::at_infinity());
  }

  CurveParams params{fields.get_int("field_prime"), fields.get_int("cofactor")};
  if (!validated_prime(params.field_prime) || mod(params.field_prime, 4) != 3) {
    throw Error(ErrorKind::malformed, "field 'field_prime': must be a prime = 3 mod 4");
  }
  if (params.cofactor <= 0 || params.cofactor * n != params.field_prime + 1) {
    throw Error(ErrorKind::malformed, "field 'cofactor': cofactor * n != field_prime + 1");
  }
  const SupersingularCurve curve(params.field_prime);
  const CurvePoint g = parse_point(g_text);
  if (!curve.on_curve(g)) throw Error(ErrorKind::off_curve, "field 'g': point not on curve");
  if (g.infinity || !curve.mul(g, n).infinity) {
    throw Error(ErrorKind::wrong_order, "field 'g': generator order does not divide n");
  }
  if (p && !has_exact_order(curve, g, n, *p, *q)) {
    throw Error(ErrorKind::wrong_order, "field 'g': generator order is not exactly n");
  }
  return std::make_shared<const GroupContext>(Passkey{}, backend, n, p, q, params, g);
}

const BigInt& GroupContext::p() const {
  if (!p_) throw Error(ErrorKind::invalid_argument, "factorization of n is not known");
  return *p_;
}

const BigInt& GroupContext::q() const {
  if (!q_) throw Error(ErrorKind::invalid_argument, "factorization of n is not known");
  return *q_;
}

bool GroupContext::same_group(const GroupContext& other) const {
  if (this == &other) return true;
  if (backend_ != other.backend_ || n_ != other.n_) return false;
  if (backend_ == Backend::transparent) return true;
  return curve_params_->field_prime == other.curve_params_->field_prime &&
         g_point_ == other.g_point_;
}

// --- element factories -----------------------------------------------------

GElement GroupContext::make(BigInt exponent) const {
  return GElement(shared_from_this(), std::move(exponent));
}

GElement GroupContext::make(CurvePoint pt) const {
  return GElement(shared_from_this(), std::move(pt));
}

GTElement GroupContext::make_gt(BigInt exponent) const {
  return GTElement(shared_from_this(), std::move(exponent));
}

GTElement GroupContext::make_gt(Fp2 value) const {
  return GTElement(shared_from_this(), std::move(value));
}

GElement GroupContext::generator() const {
  return backend_ == Backend::transparent ? make(BigInt(1)) : make(g_point_);
}

GElement GroupContext::identity() const {
  return backend_ == Backend::transparent ? make(BigInt(0)) : make(CurvePoint::at_infinity());
}

GElement GroupContext::g_pow(const BigInt& e) const { return pow(generator(), e); }

GTElement GroupContext::gt() const {
  return backend_ == Backend::transparent ? make_gt(BigInt(1)) : make_gt(gt_value_);
}

GTElement GroupContext::gt_identity() const {
  return backend_ == Backend::transparent ? make_gt(BigInt(0)) : make_gt(curve_->extension().one());
}

// --- operations ------------------------------------------------------------

void GroupContext::check_member(const GElement& a) const {
  if (a.group().get() != this && !same_group(*a.group())) throw mismatch();
}

void GroupContext::check_member(const GTElement& a) const {
  if (a.group().get() != this && !same_group(*a.group())) throw mismatch();
}

GElement GroupContext::mul(const GElement& a, const GElement& b) const {
  check_member(a);
  check_member(b);
  if (backend_ == Backend::transparent) return make(mod(a.exponent() + b.exponent(), n_));
  return make(curve_->add(a.point(), b.point()));
}

GElement GroupContext::inv(const GElement& a) const {
  check_member(a);
  if (backend_ == Backend::transparent) return make(mod(-a.exponent(), n_));
  return make(curve_->neg(a.point()));
}

GElement GroupContext::pow(const GElement& a, const BigInt& e) const {
  check_member(a);
  const BigInt reduced = mod(e, n_);
  if (backend_ == Backend::transparent) return make(mod(a.exponent() * reduced, n_));
  return make(curve_->mul(a.point(), reduced));
}

GTElement GroupContext::pair(const GElement& a, const GElement& b) const {
  check_member(a);
  check_member(b);
  if (backend_ == Backend::transparent) return make_gt(mod(a.exponent() * b.exponent(), n_));
  return make_gt(curve_->tate(a.point(), b.point(), n_));
}

GTElement GroupContext::gt_mul(const GTElement& a, const GTElement& b) const {
  check_member(a);
  check_member(b);
  if (backend_ == Backend::transparent) return make_gt(mod(a.exponent() + b.exponent(), n_));
  return make_gt(curve_->extension().mul(a.value(), b.value()));
}

GTElement GroupContext::gt_inv(const GTElement& a) const {
  check_member(a);
  if (backend_ == Backend::transparent) return make_gt(mod(-a.exponent(), n_));
  return make_gt(curve_->extension().inv(a.value()));
}

GTElement GroupContext::gt_pow(const GTElement& a, const BigInt& e) const {
  check_member(a);
  const BigInt reduced = mod(e, n_);
  if (backend_ == Backend::transparent) return make_gt(mod(a.exponent() * reduced, n_));
  return make_gt(curve_->extension().pow(a.value(), reduced));
}

// --- text encoding ---------------------------------------------------------

std::string GroupContext::encode(const GElement& a) const {
  check_member(a);
  if (backend_ == Backend::transparent) return "G:" + a.exponent().get_str();
  const CurvePoint& pt = a.point();
  if (pt.infinity) return "G:inf";
  return "G:" + pt.x.get_str() + "," + pt.y.get_str();
}

std::string GroupContext::encode(const GTElement& a) const {
  check_member(a);
  if (backend_ == Backend::transparent) return "GT:" + a.exponent().get_str();
  return "GT:" + a.value().re.get_str() + "," + a.value().im.get_str();
}

GElement GroupContext::decode_g(std::string_view text) const {
  if (backend_ == Backend::transparent) {
    BigInt e = parse_decimal(strip_prefix(text, "G:"), "element");
    if (e < 0 || e >= n_) {
      throw Error(ErrorKind::malformed, "element exponent " + e.get_str() + " outside [0, n)");
    }
    return make(std::move(e));
  }
  CurvePoint pt = parse_point(text);
  if (!curve_->on_curve(pt)) {
    throw Error(ErrorKind::off_curve, "point " + std::string(text) + " is not on the curve");
  }
  if (!curve_->mul(pt, n_).infinity) {
    throw Error(ErrorKind::wrong_order,
                "point " + std::string(text) + " is not in the order-n subgroup");
  }
  return make(std::move(pt));
}

GTElement GroupContext::decode_gt(std::string_view text) const {
  const std::string_view body = strip_prefix(text, "GT:");
  if (backend_ == Backend::transparent) {
    BigInt e = parse_decimal(body, "target element");
    if (e < 0 || e >= n_) {
      throw Error(ErrorKind::malformed, "target exponent " + e.get_str() + " outside [0, n)");
    }
    return make_gt(std::move(e));
  }
  auto [re, im] = split_pair(body, "target element");
  const BigInt& pp = curve_params_->field_prime;
  if (re < 0 || re >= pp || im < 0 || im >= pp) {
    throw Error(ErrorKind::malformed, "target element coordinates outside [0, p')");
  }
  Fp2 z{std::move(re), std::move(im)};
  if (curve_->extension().pow(z, n_) != curve_->extension().one()) {
    throw Error(ErrorKind::wrong_order, "target element is not in the order-n subgroup");
  }
  return make_gt(std::move(z));
}

KeyValues GroupContext::to_fields(bool include_factorization) const {
  KeyValues kv;
  kv.set("backend", std::string(to_string(backend_)));
  if (include_factorization && p_) {
    kv.set("p", *p_);
    kv.set("q", *q_);
  }
  kv.set("n", n_);
  if (curve_params_) {
    kv.set("field_prime", curve_params_->field_prime);
    kv.set("cofactor", curve_params_->cofactor);
  }
  kv.set("g", encode(generator()));
  return kv;
}

// --- free functions --------------------------------------------------------

GElement operator*(const GElement& a, const GElement& b) { return a.group()->mul(a, b); }
GElement inverse(const GElement& a) { return a.group()->inv(a); }
GElement pow(const GElement& a, const BigInt& e) { return a.group()->pow(a, e); }
GTElement pair(const GElement& a, const GElement& b) { return a.group()->pair(a, b); }
GTElement operator*(const GTElement& a, const GTElement& b) { return a.group()->gt_mul(a, b); }
GTElement inverse(const GTElement& a) { return a.group()->gt_inv(a); }
GTElement pow(const GTElement& a, const BigInt& e) { return a.group()->gt_pow(a, e); }

bool is_in_subgroup_q(const GElement& a, const BigInt& q) {
  const BigInt& n = a.group()->n();
  if (q <= 0 || mpz_divisible_p(n.get_mpz_t(), q.get_mpz_t()) == 0) {
    throw Error(ErrorKind::invalid_argument, q.get_str() + " does not divide n = " + n.get_str());
  }
  return pow(a, q).is_identity();
}

std::string encode(const GElement& a) { return a.group()->encode(a); }
std::string encode(const GTElement& a) { return a.group()->encode(a); }

}  // namespace bgnlab
