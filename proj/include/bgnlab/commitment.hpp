#pragma once

#include <optional>
#include <utility>

#include "bgnlab/groups.hpp"

namespace bgnlab {

// binding: h lies in G_q, so c = g^m h^r fixes m mod p.
// hiding: h generates G, so c reveals nothing about m and the trapdoor x
// equivocates.
enum class KeyMode { binding, hiding };

std::string_view to_string(KeyMode mode);
KeyMode parse_key_mode(std::string_view text);

struct CommitmentKey {
  GroupPtr group;
  GElement h;
  KeyMode mode;
};

struct ExtractionKey {
  CommitmentKey ck;
  BigInt q;
};

struct TrapdoorKey {
  CommitmentKey ck;
  BigInt x;
};

// Commitments and proofs remember the h of the key that produced them when
// known, so combining material from two different keys is caught.
struct Commitment {
  GElement c;
  std::optional<GElement> key_h;
};

struct WIProof {
  GElement pi;
  std::optional<GElement> key_h;
};

struct Opening {
  BigInt m;
  BigInt r;

  friend bool operator==(const Opening&, const Opening&) = default;
};

inline const BigInt kDefaultExtractionBound = BigInt(1) << 16;

// h = g^(p*x) with x uniform in Z_q^*. Requires the factorization.
std::pair<CommitmentKey, ExtractionKey> binding_keygen(const GroupPtr& group, Rng& rng);
std::pair<CommitmentKey, ExtractionKey> binding_keygen_with(const GroupPtr& group,
                                                            const BigInt& x);

// h = g^x with x drawn from Z_q^* and resampled until gcd(x, n) = 1, since
// trapdoor opening divides by x modulo n.
std::pair<CommitmentKey, TrapdoorKey> hiding_keygen(const GroupPtr& group, Rng& rng);
std::pair<CommitmentKey, TrapdoorKey> hiding_keygen_with(const GroupPtr& group,
                                                         const BigInt& x);

// c = g^m h^r. m must lie in [0, p) when p is known, otherwise in [0, n).
Commitment commit(const CommitmentKey& ck, const BigInt& m, const BigInt& r);

// Finds the unique m in [0, bound) with (g^q)^m = c^q by exhaustive search.
BigInt extract(const ExtractionKey& xk, const Commitment& c,
               const BigInt& bound = kDefaultExtractionBound);

// Reopens c (opening `current`) to m_new: r' = r - (m_new - m)/x mod n.
Opening trapdoor_open(const TrapdoorKey& tk, const Commitment& c, const Opening& current,
                      const BigInt& m_new);

// pi = (g^(2m-1) h^r)^r for m in {0, 1}.
WIProof wi_prove(const CommitmentKey& ck, const BigInt& m, const BigInt& r);

// Accepts iff e(c, c g^-1) = e(h, pi).
bool verify(const CommitmentKey& ck, const Commitment& c, const WIProof& pi);

// c1 * c2, a commitment to (m1 + m2, r1 + r2).
Commitment homomorphic_combine(const Commitment& c1, const Commitment& c2);

namespace detail {
// The proof formula without the m in {0, 1} guard; used to exercise the
// verification identity for arbitrary messages.
WIProof wi_prove_unchecked(const CommitmentKey& ck, const BigInt& m, const BigInt& r);
}  // namespace detail

}  // namespace bgnlab
