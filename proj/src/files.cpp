#include "bgnlab/files.hpp"

namespace bgnlab {

namespace {

std::string flag(bool b) { return b ? "true" : "false"; }

Error bad_field(const std::string& field, const std::string& why) {
  return Error(ErrorKind::malformed, "field '" + field + "': " + why);
}

// Decode an element field, naming the field in any error.
GElement element_field(const KeyValues& kv, const std::string& field, const CommitmentKey& ck) {
  try {
    return ck.group->decode_g(kv.get(field));
  } catch (const Error& e) {
    throw Error(e.kind(), "field '" + field + "': " + e.what());
  }
}

}  // namespace

KeyValues context_fields(const GroupContext& group) { return group.to_fields(true); }

KeyValues key_fields(const CommitmentKey& ck) {
  KeyValues kv = ck.group->to_fields(false);
  kv.set("mode", std::string(to_string(ck.mode)));
  kv.set("h", encode(ck.h));
  return kv;
}

CommitmentKey parse_key(const KeyValues& kv) {
  if (kv.contains("p") || kv.contains("q")) {
    throw bad_field("p", "public keys must not carry the factorization of n");
  }
  const GroupPtr group = GroupContext::from_fields(kv);
  const KeyMode mode = parse_key_mode(kv.get("mode"));
  const GElement h = [&] {
    try {
      return group->decode_g(kv.get("h"));
    } catch (const Error& e) {
      throw Error(e.kind(), std::string("field 'h': ") + e.what());
    }
  }();
  if (h.is_identity()) throw bad_field("h", "must not be the identity");
  return {group, h, mode};
}

KeyValues secret_fields(const ExtractionKey& xk) {
  KeyValues kv;
  kv.set("kind", std::string("xk"));
  kv.set("q", xk.q);
  return kv;
}

KeyValues secret_fields(const TrapdoorKey& tk) {
  KeyValues kv;
  kv.set("kind", std::string("tk"));
  kv.set("x", tk.x);
  return kv;
}

SecretKey parse_secret(const KeyValues& kv) {
  const std::string& kind = kv.get("kind");
  if (kind == "xk") return {SecretKind::extraction, kv.get_int("q")};
  if (kind == "tk") return {SecretKind::trapdoor, kv.get_int("x")};
  throw bad_field("kind", "expected 'xk' or 'tk', got '" + kind + "'");
}

ExtractionKey bind_extraction_key(const CommitmentKey& ck, const SecretKey& secret) {
  if (secret.kind != SecretKind::extraction) {
    throw bad_field("kind", "an extraction key (kind=xk) is required");
  }
  const BigInt& n = ck.group->n();
  const BigInt& q = secret.value;
  if (q <= 1 || q >= n || mpz_divisible_p(n.get_mpz_t(), q.get_mpz_t()) == 0) {
    throw bad_field("q", "must be a proper divisor of n");
  }
  if (ck.mode != KeyMode::binding) throw bad_field("mode", "extraction keys need a binding key");
  if (!pow(ck.h, q).is_identity()) throw bad_field("q", "h^q is not the identity");
  return {ck, q};
}

TrapdoorKey bind_trapdoor_key(const CommitmentKey& ck, const SecretKey& secret) {
  if (secret.kind != SecretKind::trapdoor) {
    throw bad_field("kind", "a trapdoor key (kind=tk) is required");
  }
  if (ck.mode != KeyMode::hiding) throw bad_field("mode", "trapdoor keys need a hiding key");
  const BigInt& x = secret.value;
  if (x <= 0 || x >= ck.group->n() || ext_gcd(x, ck.group->n()).g != 1) {
    throw bad_field("x", "must be a unit modulo n");
  }
  if (!(ck.group->g_pow(x) == ck.h)) throw bad_field("x", "h != g^x");
  return {ck, x};
}

KeyValues commitment_fields(const Commitment& c) {
  KeyValues kv;
  kv.set("c", encode(c.c));
  return kv;
}

Commitment parse_commitment(const KeyValues& kv, const CommitmentKey& ck) {
  return {element_field(kv, "c", ck), ck.h};
}

KeyValues proof_fields(const WIProof& pi) {
  KeyValues kv;
  kv.set("pi", encode(pi.pi));
  return kv;
}

WIProof parse_proof(const KeyValues& kv, const CommitmentKey& ck) {
  return {element_field(kv, "pi", ck), ck.h};
}

KeyValues opening_fields(const Opening& o) {
  KeyValues kv;
  kv.set("m", o.m);
  kv.set("r", o.r);
  return kv;
}

Opening parse_opening(const KeyValues& kv) { return {kv.get_int("m"), kv.get_int("r")}; }

KeyValues forgery_fields(const ForgeryRecord& fr) {
  KeyValues kv;
  kv.set("k_a", fr.k_a);
  kv.set("ell", fr.ell);
  kv.set("alpha1", fr.alpha1);
  kv.set("alpha2", fr.alpha2);
  kv.set("beta1", fr.beta1);
  kv.set("beta2", fr.beta2);
  kv.set("c", encode(fr.c.c));
  kv.set("pi", encode(fr.pi.pi));
  return kv;
}

ForgeryRecord parse_forgery(const KeyValues& kv, const CommitmentKey& ck) {
  return {kv.get_int("k_a"),   kv.get_int("ell"),   kv.get_int("alpha1"),
          kv.get_int("alpha2"), kv.get_int("beta1"), kv.get_int("beta2"),
          parse_commitment(kv, ck), parse_proof(kv, ck)};
}

KeyValues verdict_fields(const Verdict& v) {
  KeyValues kv;
  kv.set("verdict", std::string(to_string(v.verdict)));
  kv.set("c_in_Gq", flag(v.c_in_gq));
  kv.set("c_over_g_in_Gq", flag(v.c_over_g_in_gq));
  kv.set("c_pow_q", encode(v.c_pow_q));
  kv.set("c_over_g_pow_q", encode(v.c_over_g_pow_q));
  return kv;
}

KeyValues claim_report_fields(const ClaimReport& report) {
  KeyValues kv;
  kv.set("verification_passes", flag(report.verification_passes));
  kv.set("alpha1_is_bit", flag(report.alpha1_is_bit));
  kv.set("g_alpha1_in_Gq", flag(report.g_alpha1_in_gq));
  kv.set("g_alpha1_pow_q", encode(report.g_alpha1_pow_q));
  const KeyValues verdict = verdict_fields(report.verdict);
  for (const auto& [k, v] : verdict.entries()) kv.set(k, v);
  kv.set("asserted_verdict", std::string(to_string(report.asserted_verdict)));
  kv.set("asserted_verdict_holds", flag(report.asserted_verdict_holds));
  return kv;
}

std::string format_census(const Census& census) {
  std::string out;
  for (const CensusRow& row : census.rows) {
    out += "c=" + row.c_exponent.get_str() +
           " accepting_pi_count=" + std::to_string(row.accepting_pi_count) +
           " verdict=" + std::string(to_string(row.verdict)) + "\n";
  }
  out += "accepting_pairs=" + std::to_string(census.accepting_pairs) + "\n";
  out += "accepting_c=" + std::to_string(census.accepting_c) + "\n";
  for (VerdictClass v : {VerdictClass::commits_to_0, VerdictClass::commits_to_1,
                         VerdictClass::invalid}) {
    out += "accepting_c_" + std::string(to_string(v)) + "=" +
           std::to_string(census.accepting_c_by_verdict[static_cast<std::size_t>(v)]) + "\n";
  }
  out += "consistent=" + flag(census.consistent()) + "\n";
  return out;
}

}  // namespace bgnlab
