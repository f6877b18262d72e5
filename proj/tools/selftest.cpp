#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <string>

#include "bgnlab/cryptanalysis.hpp"
#include "cli.hpp"

namespace bgnlab::cli {

namespace {

class Runner {
 public:
  explicit Runner(std::ostream& out) : out_(out) {}

  void check(const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    std::string detail;
    try {
      ok = body();
    } catch (const std::exception& e) {
      detail = std::string(" (") + e.what() + ")";
    }
    out_ << (ok ? "PASS " : "FAIL ") << name << detail << "\n";
    if (!ok) ++failures_;
  }

  int failures() const { return failures_; }

 private:
  std::ostream& out_;
  int failures_ = 0;
};

bool algebra_suite(Rng& rng) {
  for (int i = 0; i < 200; ++i) {
    const BigInt a = random_below(BigInt(1) << 80, rng) - (BigInt(1) << 79);
    const BigInt b = random_below(BigInt(1) << 80, rng) + 1;
    const ExtGcdResult r = ext_gcd(a, b);
    if (r.s * a + r.t * b != r.g) return false;
    if (r.g == 1 && mod(mod_inverse(a, b) * a, b) != mod(BigInt(1), b)) return false;
    const BigInt m = random_range(2, 1000, rng), base = random_below(m, rng);
    const unsigned long e = rng() % 300;
    BigInt naive = 1;
    for (unsigned long k = 0; k < e; ++k) naive = naive * base % m;
    if (mod_exp(base, e, m) != naive % m) return false;
  }
  return true;
}

bool group_suite(const GroupPtr& grp, Rng& rng) {
  const BigInt& n = grp->n();
  const GElement g = grp->generator();
  for (int i = 0; i < 30; ++i) {
    const BigInt s = random_below(n, rng), t = random_below(n, rng);
    const GElement a = grp->g_pow(random_below(n, rng)), b = grp->g_pow(random_below(n, rng));
    if (!(pair(pow(a, s), pow(b, t)) == pow(pair(a, b), s * t))) return false;
    if (!(pair(a, b) == pair(b, a))) return false;
  }
  const GTElement e = grp->gt();
  if (!pow(g, n).is_identity() || pow(g, n / grp->p()).is_identity() ||
      pow(g, n / grp->q()).is_identity()) {
    return false;
  }
  if (!pow(e, n).is_identity() || pow(e, n / grp->p()).is_identity() ||
      pow(e, n / grp->q()).is_identity()) {
    return false;
  }
  // G_q has exactly q elements: the multiples of p in the exponent.
  unsigned long members = 0;
  for (unsigned long k = 0; k < n.get_ui(); ++k) {
    const bool in = is_in_subgroup_q(grp->g_pow(k), grp->q());
    if (in != (k % grp->p().get_ui() == 0)) return false;
    members += in ? 1 : 0;
  }
  return members == grp->q().get_ui();
}

bool commitment_suite(const GroupPtr& grp, Rng& rng) {
  const BigInt& n = grp->n();
  const auto [bind, xk] = binding_keygen(grp, rng);
  const auto [hide, tk] = hiding_keygen(grp, rng);
  for (const CommitmentKey* ck : {&bind, &hide}) {
    for (int i = 0; i < 40; ++i) {
      const BigInt m = rng() & 1U, r = random_below(n, rng);
      if (!verify(*ck, commit(*ck, m, r), wi_prove(*ck, m, r))) return false;
    }
    for (BigInt m = 0; m < grp->p(); ++m) {
      const BigInt r = random_below(n, rng);
      const Commitment c = commit(*ck, m, r);
      const WIProof pi = detail::wi_prove_unchecked(*ck, m, r);
      const GElement c_over_g = c.c * inverse(grp->generator());
      if (!(pair(c.c, c_over_g) == pow(grp->gt(), m * (m - 1)) * pair(ck->h, pi.pi))) return false;
      if (verify(*ck, c, pi) != (mod(m * (m - 1), n) == 0)) return false;
    }
  }
  for (BigInt m = 0; m < grp->p(); ++m) {
    if (extract(xk, commit(bind, m, random_below(n, rng)), grp->p()) != m) return false;
  }
  for (int i = 0; i < 40; ++i) {
    const Opening o{random_below(grp->p(), rng), random_below(n, rng)};
    const Commitment c = commit(hide, o.m, o.r);
    const Opening moved = trapdoor_open(tk, c, o, random_below(grp->p(), rng));
    if (!(commit(hide, moved.m, moved.r).c == c.c)) return false;
    if (!(trapdoor_open(tk, c, moved, o.m) == o)) return false;
  }
  // No commitment under the binding key has two openings with distinct m < p.
  std::map<std::string, std::set<unsigned long>> openings;
  for (unsigned long m = 0; m < grp->p().get_ui(); ++m) {
    for (unsigned long r = 0; r < n.get_ui(); ++r) {
      openings[encode(commit(bind, m, r).c)].insert(m);
    }
  }
  for (const auto& [c, ms] : openings) {
    if (ms.size() != 1) return false;
  }
  return true;
}

bool cryptanalysis_suite(const GroupPtr& grp, Rng& rng) {
  const BigInt &p = grp->p(), &q = grp->q();
  const CommitmentKey ck = binding_keygen(grp, rng).first;
  for (int i = 0; i < 20; ++i) {
    const ForgeryRecord fr = forge(ck, p, q, std::nullopt, rng);
    const ClaimReport report = claim_report(fr, ck, p, q);
    if (!report.verification_passes || report.alpha1_is_bit || report.g_alpha1_in_gq) return false;
    if (fr.k_a * q - fr.ell * p != 1) return false;
  }
  for (int i = 0; i < 20; ++i) {
    const int m = static_cast<int>(rng() & 1U);
    const VerdictClass v = audit(q, ck, commit(ck, m, random_below(grp->n(), rng))).verdict;
    if (v != (m == 0 ? VerdictClass::commits_to_0 : VerdictClass::commits_to_1)) return false;
  }
  if (grp->backend() == Backend::transparent) {
    if (!accepting_census(ck, q).consistent()) return false;
  }
  return true;
}

}  // namespace

int run_selftest(std::ostream& out) {
  Runner runner(out);
  Rng rng(20240601);
  runner.check("algebra: bezout, inverse, modexp", [&] { return algebra_suite(rng); });
  for (auto [p, q] : {std::pair{5, 7}, std::pair{3, 5}}) {
    for (Backend backend : {Backend::transparent, Backend::curve}) {
      const std::string tag = "(" + std::to_string(p) + "," + std::to_string(q) + ") " +
                              std::string(to_string(backend));
      GroupPtr grp;
      runner.check("setup " + tag, [&] {
        grp = backend == Backend::transparent ? GroupContext::setup_transparent(p, q)
                                              : GroupContext::setup_curve(p, q, rng);
        return true;
      });
      if (!grp) continue;
      runner.check("groups " + tag, [&] { return group_suite(grp, rng); });
      runner.check("commitment " + tag, [&] { return commitment_suite(grp, rng); });
      runner.check("cryptanalysis " + tag, [&] { return cryptanalysis_suite(grp, rng); });
    }
  }
  out << (runner.failures() == 0 ? "selftest: all checks passed\n"
                                 : "selftest: " + std::to_string(runner.failures()) + " failed\n");
  return runner.failures();
}

}  // namespace bgnlab::cli
