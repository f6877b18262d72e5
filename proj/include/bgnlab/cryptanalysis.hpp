#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "bgnlab/commitment.hpp"

namespace bgnlab {

// The exponent tuple of a forged (c, pi) pair built from the factorization
// of n. k_a and ell satisfy k_a*q - ell*p = 1.
struct ForgeryRecord {
  BigInt k_a;
  BigInt ell;
  BigInt alpha1;  // k_a*q mod n
  BigInt alpha2;  // beta1 * (2*k_a*q - 1)^-1 mod n
  BigInt beta1;
  BigInt beta2;   // alpha2^2 mod n
  Commitment c;   // g^alpha1 h^alpha2
  WIProof pi;     // g^beta1 h^beta2
};

struct ForgeOptions {
  // The attack targets binding keys; hiding keys are accepted only on request.
  bool allow_hiding = false;
};

// beta1 is drawn uniformly from [1, n) when absent; a pinned beta1 must lie
// in [0, n).
ForgeryRecord forge(const CommitmentKey& ck, const BigInt& p, const BigInt& q,
                    const std::optional<BigInt>& beta1, Rng& rng,
                    const ForgeOptions& options = {});

enum class VerdictClass { commits_to_0, commits_to_1, invalid };

std::string_view to_string(VerdictClass v);
VerdictClass parse_verdict_class(std::string_view text);

// Classification by the holder of q. commits_to_0 iff c^q = 1;
// commits_to_1 iff c^q != 1 and (c/g)^q = 1; invalid otherwise.
struct Verdict {
  VerdictClass verdict;
  bool c_in_gq;
  bool c_over_g_in_gq;
  GElement c_pow_q;
  GElement c_over_g_pow_q;
};

Verdict audit(const BigInt& q, const CommitmentKey& ck, const Commitment& c);

// Everything here is computed from group operations on the record.
// asserted_verdict is the classification the forged pair is asserted to
// have (neither h^w1 nor g h^w2, i.e. invalid); asserted_verdict_holds
// records whether the audit agrees.
struct ClaimReport {
  bool verification_passes;
  bool alpha1_is_bit;
  bool g_alpha1_in_gq;
  GElement g_alpha1_pow_q;
  Verdict verdict;
  VerdictClass asserted_verdict = VerdictClass::invalid;
  bool asserted_verdict_holds;
};

ClaimReport claim_report(const ForgeryRecord& fr, const CommitmentKey& ck, const BigInt& p,
                         const BigInt& q);

struct CensusRow {
  BigInt c_exponent;
  std::size_t accepting_pi_count;
  VerdictClass verdict;
};

struct Census {
  std::vector<CensusRow> rows;  // one per c exponent in [0, n)
  std::size_t accepting_pairs = 0;
  // Accepting c (at least one accepting pi), indexed by VerdictClass.
  std::array<std::size_t, 3> accepting_c_by_verdict{};
  std::size_t accepting_c = 0;

  // {c : some pi accepts} == {c : verdict != invalid}
  bool consistent() const;
};

inline const BigInt kCensusMaxOrder = 4096;

// Enumerates all (c, pi) in G x G on a transparent group with n <= 4096,
// joining each c with audit(q, ck, c). Splits c over `threads` workers
// (0 = hardware concurrency).
Census accepting_census(const CommitmentKey& ck, const BigInt& q, unsigned threads = 0);

}  // namespace bgnlab
