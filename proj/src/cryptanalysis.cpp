#include "bgnlab/cryptanalysis.hpp"

#include <algorithm>
#include <thread>

namespace bgnlab {

std::string_view to_string(VerdictClass v) {
  switch (v) {
    case VerdictClass::commits_to_0: return "CommitsTo0";
    case VerdictClass::commits_to_1: return "CommitsTo1";
    case VerdictClass::invalid: return "Invalid";
  }
  return "Invalid";
}

VerdictClass parse_verdict_class(std::string_view text) {
  if (text == "CommitsTo0") return VerdictClass::commits_to_0;
  if (text == "CommitsTo1") return VerdictClass::commits_to_1;
  if (text == "Invalid") return VerdictClass::invalid;
  throw Error(ErrorKind::malformed, "unknown verdict '" + std::string(text) + "'");
}

ForgeryRecord forge(const CommitmentKey& ck, const BigInt& p, const BigInt& q,
                    const std::optional<BigInt>& beta1, Rng& rng, const ForgeOptions& options) {
  if (ck.mode != KeyMode::binding && !options.allow_hiding) {
    throw Error(ErrorKind::invalid_argument,
                "forge targets binding keys; set allow_hiding to run it on a hiding key");
  }
  const BigInt& n = ck.group->n();
  if (p * q != n) {
    throw Error(ErrorKind::invalid_argument, "forge: p*q does not equal n");
  }

  BigInt b1;
  if (beta1) {
    if (*beta1 < 0 || *beta1 >= n) {
      throw Error(ErrorKind::invalid_argument, "forge: beta1 outside [0, n)");
    }
    b1 = *beta1;
  } else {
    b1 = random_range(1, n, rng);
  }

  // k_a*q + t*p = 1 with k_a in [0, p); ell = -t.
  const ExtGcdResult eg = ext_gcd(q, p);
  if (eg.g != 1) {
    throw Error(ErrorKind::invalid_argument, "forge: p and q are not coprime");
  }
  const BigInt kq = eg.s * q;
  const BigInt alpha1 = mod(kq, n);
  const BigInt alpha2 = mod(b1 * mod_inverse(2 * kq - 1, n), n);
  const BigInt beta2 = mod(alpha2 * alpha2, n);

  const GroupPtr& group = ck.group;
  Commitment c{group->g_pow(alpha1) * pow(ck.h, alpha2), ck.h};
  WIProof pi{group->g_pow(b1) * pow(ck.h, beta2), ck.h};
  return {eg.s, -eg.t, alpha1, alpha2, b1, beta2, std::move(c), std::move(pi)};
}

Verdict audit(const BigInt& q, const CommitmentKey& ck, const Commitment& c) {
  const GroupPtr& group = ck.group;
  const GElement c_over_g = c.c * inverse(group->generator());
  Verdict v{VerdictClass::invalid, is_in_subgroup_q(c.c, q), is_in_subgroup_q(c_over_g, q),
            pow(c.c, q), pow(c_over_g, q)};
  if (v.c_in_gq) {
    v.verdict = VerdictClass::commits_to_0;
  } else if (v.c_over_g_in_gq) {
    v.verdict = VerdictClass::commits_to_1;
  }
  return v;
}

ClaimReport claim_report(const ForgeryRecord& fr, const CommitmentKey& ck, const BigInt& p,
                         const BigInt& q) {
  if (p * q != ck.group->n()) {
    throw Error(ErrorKind::invalid_argument, "claim_report: p*q does not equal n");
  }
  const BigInt& n = ck.group->n();
  const BigInt a1 = mod(fr.alpha1, n);
  const GElement g_alpha1 = ck.group->g_pow(fr.alpha1);
  ClaimReport report{verify(ck, fr.c, fr.pi),
                     a1 == 0 || a1 == 1,
                     is_in_subgroup_q(g_alpha1, q),
                     pow(g_alpha1, q),
                     audit(q, ck, fr.c),
                     VerdictClass::invalid,
                     false};
  report.asserted_verdict_holds = report.verdict.verdict == report.asserted_verdict;
  return report;
}

bool Census::consistent() const {
  return std::all_of(rows.begin(), rows.end(), [](const CensusRow& row) {
    return (row.accepting_pi_count > 0) == (row.verdict != VerdictClass::invalid);
  });
}

Census accepting_census(const CommitmentKey& ck, const BigInt& q, unsigned threads) {
  const GroupPtr& group = ck.group;
  if (group->backend() != Backend::transparent) {
    throw Error(ErrorKind::invalid_argument, "census requires the transparent backend");
  }
  const BigInt& n_big = group->n();
  if (n_big > kCensusMaxOrder) {
    throw Error(ErrorKind::invalid_argument,
                "census: n = " + n_big.get_str() + " exceeds " + kCensusMaxOrder.get_str());
  }
  const std::size_t n = n_big.get_ui();
  const GElement g = group->generator();

  // e(h, pi) does not depend on c; evaluate it once per pi.
  std::vector<GTElement> rhs;
  rhs.reserve(n);
  GElement pi = group->identity();
  for (std::size_t b = 0; b < n; ++b, pi = pi * g) rhs.push_back(group->pair(ck.h, pi));

  Census census;
  census.rows.resize(n);
  const GElement g_inv = inverse(g);

  auto scan = [&](std::size_t begin, std::size_t end) {
    GElement c = group->g_pow(BigInt(static_cast<unsigned long>(begin)));
    for (std::size_t a = begin; a < end; ++a, c = c * g) {
      const GTElement lhs = group->pair(c, c * g_inv);
      std::size_t count = 0;
      for (const GTElement& r : rhs) count += (lhs == r) ? 1 : 0;
      census.rows[a] = {BigInt(static_cast<unsigned long>(a)), count,
                        audit(q, ck, Commitment{c, ck.h}).verdict};
    }
  };

  unsigned workers = threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : threads;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));
  if (workers <= 1) {
    scan(0, n);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t begin = 0; begin < n; begin += chunk) {
      pool.emplace_back(scan, begin, std::min(n, begin + chunk));
    }
  }

  for (const CensusRow& row : census.rows) {
    census.accepting_pairs += row.accepting_pi_count;
    if (row.accepting_pi_count > 0) {
      ++census.accepting_c;
      ++census.accepting_c_by_verdict[static_cast<std::size_t>(row.verdict)];
    }
  }
  return census;
}

}  // namespace bgnlab
