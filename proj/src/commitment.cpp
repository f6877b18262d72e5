#include "bgnlab/commitment.hpp"

namespace bgnlab {

namespace {

void require_mode(const CommitmentKey& ck, KeyMode mode, const char* op) {
  if (ck.mode != mode) {
    throw Error(ErrorKind::invalid_argument,
                std::string(op) + " requires a " + std::string(to_string(mode)) + " key");
  }
}

void require_same_key(const std::optional<GElement>& a, const std::optional<GElement>& b) {
  if (a && b && !(*a == *b)) {
    throw Error(ErrorKind::context_mismatch, "commitments were made under different keys");
  }
}

void require_key(const CommitmentKey& ck, const std::optional<GElement>& key_h) {
  if (key_h && !(*key_h == ck.h)) {
    throw Error(ErrorKind::context_mismatch, "element was produced under a different key");
  }
}

BigInt sample_unit_mod_q(const GroupPtr& group, Rng& rng) {
  return random_range(1, group->q(), rng);
}

}  // namespace

std::string_view to_string(KeyMode mode) {
  return mode == KeyMode::binding ? "binding" : "hiding";
}

KeyMode parse_key_mode(std::string_view text) {
  if (text == "binding") return KeyMode::binding;
  if (text == "hiding") return KeyMode::hiding;
  throw Error(ErrorKind::malformed, "unknown key mode '" + std::string(text) + "'");
}

std::pair<CommitmentKey, ExtractionKey> binding_keygen(const GroupPtr& group, Rng& rng) {
  return binding_keygen_with(group, sample_unit_mod_q(group, rng));
}

std::pair<CommitmentKey, ExtractionKey> binding_keygen_with(const GroupPtr& group,
                                                            const BigInt& x) {
  const BigInt& q = group->q();
  if (mod(x, q) == 0) {
    throw Error(ErrorKind::invalid_argument, "binding key: x must be a unit mod q");
  }
  CommitmentKey ck{group, group->g_pow(group->p() * x), KeyMode::binding};
  return {ck, ExtractionKey{ck, q}};
}

std::pair<CommitmentKey, TrapdoorKey> hiding_keygen(const GroupPtr& group, Rng& rng) {
  const BigInt& n = group->n();
  for (;;) {
    const BigInt x = sample_unit_mod_q(group, rng);
    if (ext_gcd(x, n).g == 1) return hiding_keygen_with(group, x);
  }
}

std::pair<CommitmentKey, TrapdoorKey> hiding_keygen_with(const GroupPtr& group,
                                                         const BigInt& x) {
  const BigInt& n = group->n();
  const BigInt reduced = mod(x, n);
  if (reduced == 0 || ext_gcd(reduced, n).g != 1) {
    throw Error(ErrorKind::invalid_argument,
                "hiding key: x = " + x.get_str() + " must be coprime to n");
  }
  CommitmentKey ck{group, group->g_pow(reduced), KeyMode::hiding};
  return {ck, TrapdoorKey{ck, reduced}};
}

Commitment commit(const CommitmentKey& ck, const BigInt& m, const BigInt& r) {
  const BigInt& limit = ck.group->has_factorization() ? ck.group->p() : ck.group->n();
  if (m < 0 || m >= limit) {
    throw Error(ErrorKind::invalid_argument,
                "message " + m.get_str() + " outside [0, " + limit.get_str() + ")");
  }
  return {ck.group->g_pow(m) * pow(ck.h, r), ck.h};
}

BigInt extract(const ExtractionKey& xk, const Commitment& c, const BigInt& bound) {
  require_mode(xk.ck, KeyMode::binding, "extract");
  require_key(xk.ck, c.key_h);
  const GElement target = pow(c.c, xk.q);
  const GElement step = xk.ck.group->g_pow(xk.q);
  GElement acc = xk.ck.group->identity();
  for (BigInt m = 0; m < bound; ++m) {
    if (acc == target) return m;
    acc = acc * step;
  }
  throw Error(ErrorKind::not_extractable,
              "no message below " + bound.get_str() + " matches the commitment");
}

Opening trapdoor_open(const TrapdoorKey& tk, const Commitment& c, const Opening& current,
                      const BigInt& m_new) {
  require_mode(tk.ck, KeyMode::hiding, "trapdoor_open");
  require_key(tk.ck, c.key_h);
  const GroupPtr& group = tk.ck.group;
  if (!(group->g_pow(current.m) * pow(tk.ck.h, current.r) == c.c)) {
    throw Error(ErrorKind::opening_mismatch, "supplied opening does not match the commitment");
  }
  const BigInt& n = group->n();
  const BigInt r_new = mod(current.r - (m_new - current.m) * mod_inverse(tk.x, n), n);
  return {m_new, r_new};
}

WIProof wi_prove(const CommitmentKey& ck, const BigInt& m, const BigInt& r) {
  if (m != 0 && m != 1) {
    throw Error(ErrorKind::invalid_argument, "wi_prove: message must be 0 or 1, got " + m.get_str());
  }
  return detail::wi_prove_unchecked(ck, m, r);
}

WIProof detail::wi_prove_unchecked(const CommitmentKey& ck, const BigInt& m, const BigInt& r) {
  const GElement base = ck.group->g_pow(2 * m - 1) * pow(ck.h, r);
  return {pow(base, r), ck.h};
}

bool verify(const CommitmentKey& ck, const Commitment& c, const WIProof& pi) {
  require_key(ck, c.key_h);
  require_key(ck, pi.key_h);
  const GElement c_over_g = c.c * inverse(ck.group->generator());
  return ck.group->pair(c.c, c_over_g) == ck.group->pair(ck.h, pi.pi);
}

Commitment homomorphic_combine(const Commitment& c1, const Commitment& c2) {
  require_same_key(c1.key_h, c2.key_h);
  return {c1.c * c2.c, c1.key_h ? c1.key_h : c2.key_h};
}

}  // namespace bgnlab
