#pragma once

#include <string>

#include "bgnlab/commitment.hpp"
#include "bgnlab/cryptanalysis.hpp"
#include "bgnlab/textio.hpp"

namespace bgnlab {

// Text formats for every artifact the CLI reads or writes. All are
// `key=value` lines with decimal integers and group elements in the
// encodings of GroupContext::encode.
//
//   context      backend, p, q, n, [field_prime, cofactor], g
//   public key   backend, n, [field_prime, cofactor], g, mode, h
//   secret key   kind=xk, q      or   kind=tk, x
//   commitment   c        proof  pi        opening  m, r
//   forgery      k_a, ell, alpha1, alpha2, beta1, beta2, c, pi

KeyValues context_fields(const GroupContext& group);

KeyValues key_fields(const CommitmentKey& ck);
CommitmentKey parse_key(const KeyValues& kv);

enum class SecretKind { extraction, trapdoor };

struct SecretKey {
  SecretKind kind;
  BigInt value;  // q for extraction keys, x for trapdoor keys
};

KeyValues secret_fields(const ExtractionKey& xk);
KeyValues secret_fields(const TrapdoorKey& tk);
SecretKey parse_secret(const KeyValues& kv);

// Attach a parsed secret to a public key, checking they belong together.
ExtractionKey bind_extraction_key(const CommitmentKey& ck, const SecretKey& secret);
TrapdoorKey bind_trapdoor_key(const CommitmentKey& ck, const SecretKey& secret);

KeyValues commitment_fields(const Commitment& c);
Commitment parse_commitment(const KeyValues& kv, const CommitmentKey& ck);

KeyValues proof_fields(const WIProof& pi);
WIProof parse_proof(const KeyValues& kv, const CommitmentKey& ck);

KeyValues opening_fields(const Opening& o);
Opening parse_opening(const KeyValues& kv);

KeyValues forgery_fields(const ForgeryRecord& fr);
ForgeryRecord parse_forgery(const KeyValues& kv, const CommitmentKey& ck);

KeyValues verdict_fields(const Verdict& v);
KeyValues claim_report_fields(const ClaimReport& report);

// One `c=<e> accepting_pi_count=<k> verdict=<class>` row per exponent,
// followed by summary lines.
std::string format_census(const Census& census);

}  // namespace bgnlab
