#include <map>
#include <set>

#include "bgnlab/commitment.hpp"
#include "doctest.h"

using namespace bgnlab;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::invalid_argument;
}

std::vector<GroupPtr> both_backends(const BigInt& p, const BigInt& q, Rng& rng) {
  return {GroupContext::setup_transparent(p, q), GroupContext::setup_curve(p, q, rng)};
}

}  // namespace

TEST_SUITE("commitment") {

TEST_CASE("binding keygen") {
  const GroupPtr grp = GroupContext::setup_transparent(5, 7);
  const auto [ck, xk] = binding_keygen_with(grp, 3);
  CHECK(ck.h == grp->g_pow(15));
  CHECK(ck.mode == KeyMode::binding);
  CHECK(xk.q == 7);
  CHECK(kind_of([&] { binding_keygen_with(grp, 7); }) == ErrorKind::invalid_argument);

  Rng rng(41);
  for (const GroupPtr& g : both_backends(5, 7, rng)) {
    for (int i = 0; i < 20; ++i) {
      const auto [k, x] = binding_keygen(g, rng);
      CHECK(pow(k.h, 7).is_identity());
      CHECK_FALSE(k.h.is_identity());
    }
  }
}

TEST_CASE("hiding keygen") {
  const GroupPtr grp = GroupContext::setup_transparent(5, 7);
  const auto [ck, tk] = hiding_keygen_with(grp, 3);
  CHECK(ck.h == grp->g_pow(3));
  CHECK(tk.x == 3);
  CHECK(kind_of([&] { hiding_keygen_with(grp, 5); }) == ErrorKind::invalid_argument);

  Rng rng(42);
  for (const GroupPtr& g : both_backends(5, 7, rng)) {
    for (int i = 0; i < 50; ++i) {
      const auto [k, t] = hiding_keygen(g, rng);
      CHECK(ext_gcd(t.x, 35).g == 1);
      CHECK_FALSE(pow(k.h, 7).is_identity());
      CHECK_FALSE(pow(k.h, 5).is_identity());
    }
  }
}

TEST_CASE("commit examples") {
  const GroupPtr grp = GroupContext::setup_transparent(5, 7);
  const CommitmentKey bind = binding_keygen_with(grp, 3).first;
  const CommitmentKey hide = hiding_keygen_with(grp, 3).first;
  CHECK(commit(bind, 1, 2).c == grp->g_pow(31));
  CHECK(commit(bind, 0, 0).c.is_identity());
  CHECK(commit(hide, 0, 4).c == grp->g_pow(12));
  CHECK(kind_of([&] { commit(bind, 5, 0); }) == ErrorKind::invalid_argument);
  CHECK(kind_of([&] { commit(bind, -1, 0); }) == ErrorKind::invalid_argument);
}

TEST_CASE("extract examples") {
  const GroupPtr grp = GroupContext::setup_transparent(5, 7);
  const auto [ck, xk] = binding_keygen_with(grp, 3);
  CHECK(extract(xk, Commitment{grp->g_pow(31), {}}, 16) == 1);
  CHECK(extract(xk, Commitment{grp->identity(), {}}, 16) == 0);
  CHECK(extract(xk, Commitment{grp->g_pow(2), {}}, 5) == 2);
  CHECK(kind_of([&] { extract(xk, Commitment{grp->g_pow(4), {}}, 3); }) ==
        ErrorKind::not_extractable);
  const auto hide = hiding_keygen_with(grp, 3);
  CHECK(kind_of([&] {
          extract(ExtractionKey{hide.first, 7}, Commitment{grp->g_pow(2), {}});
        }) == ErrorKind::invalid_argument);
}

TEST_CASE("extraction round trip") {
  Rng rng(43);
  for (const GroupPtr& g : both_backends(11, 13, rng)) {
    const auto [ck, xk] = binding_keygen(g, rng);
    for (int m = 0; m < 11; ++m) {
      for (int i = 0; i < 5; ++i) {
        const BigInt r = random_below(g->n(), rng);
        CHECK(extract(xk, commit(ck, m, r), 11) == m);
      }
    }
  }
}

TEST_CASE("trapdoor open examples") {
  const GroupPtr grp = GroupContext::setup_transparent(5, 7);
  const auto [ck, tk] = hiding_keygen_with(grp, 3);
  const Commitment c = commit(ck, 0, 4);
  const Opening o = trapdoor_open(tk, c, {0, 4}, 1);
  CHECK(o == Opening{1, 27});
  CHECK(commit(ck, 1, 27).c == c.c);
  CHECK(trapdoor_open(tk, c, {0, 4}, 0) == Opening{0, 4});
  CHECK(trapdoor_open(tk, c, o, 0) == Opening{0, 4});
  CHECK(kind_of([&] { trapdoor_open(tk, c, {0, 5}, 1); }) == ErrorKind::opening_mismatch);
}

TEST_CASE("trapdoor opening property") {
  Rng rng(44);
  for (const GroupPtr& g : both_backends(5, 7, rng)) {
    const auto [ck, tk] = hiding_keygen(g, rng);
    for (int i = 0; i < 50; ++i) {
      const Opening o{random_below(5, rng), random_below(35, rng)};
      const Commitment c = commit(ck, o.m, o.r);
      const BigInt m_new = random_below(5, rng);
      const Opening moved = trapdoor_open(tk, c, o, m_new);
      CHECK(commit(ck, moved.m, moved.r).c == c.c);
      CHECK(trapdoor_open(tk, c, moved, o.m) == o);
    }
    // Perfect hiding spot check: one commitment, openings to both bits.
    const Commitment c = commit(ck, 0, 9);
    CHECK(commit(ck, 1, trapdoor_open(tk, c, {0, 9}, 1).r).c == c.c);
  }
}

TEST_CASE("wi_prove examples") {
  const GroupPtr grp = GroupContext::setup_transparent(5, 7);
  const CommitmentKey ck = binding_keygen_with(grp, 3).first;
  CHECK(wi_prove(ck, 1, 2).pi == grp->g_pow(27));
  CHECK(wi_prove(ck, 0, 2).pi == grp->g_pow(23));
  CHECK(wi_prove(ck, 0, 0).pi.is_identity());
  CHECK(kind_of([&] { wi_prove(ck, 2, 1); }) == ErrorKind::invalid_argument);
}

TEST_CASE("verify examples") {
  const GroupPtr grp = GroupContext::setup_transparent(5, 7);
  const CommitmentKey ck = binding_keygen_with(grp, 3).first;
  CHECK(verify(ck, {grp->g_pow(31), {}}, {grp->g_pow(27), {}}));
  CHECK(verify(ck, {grp->generator(), {}}, {grp->identity(), {}}));
  CHECK_FALSE(verify(ck, {grp->g_pow(31), {}}, {grp->g_pow(26), {}}));

  const GroupPtr other = GroupContext::setup_transparent(3, 5);
  CHECK(kind_of([&] { verify(ck, {other->g_pow(1), {}}, {grp->identity(), {}}); }) ==
        ErrorKind::context_mismatch);
  const CommitmentKey ck2 = binding_keygen_with(grp, 2).first;
  CHECK(kind_of([&] { verify(ck, commit(ck2, 1, 1), wi_prove(ck, 1, 1)); }) ==
        ErrorKind::context_mismatch);
}

TEST_CASE("completeness on both backends and key modes") {
  Rng rng(45);
  for (const GroupPtr& g : both_backends(5, 7, rng)) {
    for (KeyMode mode : {KeyMode::binding, KeyMode::hiding}) {
      const CommitmentKey ck =
          mode == KeyMode::binding ? binding_keygen(g, rng).first : hiding_keygen(g, rng).first;
      for (int i = 0; i < 100; ++i) {
        const BigInt m = rng() & 1U;
        const BigInt r = random_below(g->n(), rng);
        CHECK(verify(ck, commit(ck, m, r), wi_prove(ck, m, r)));
      }
    }
  }
}

TEST_CASE("verification identity holds for every message") {
  Rng rng(46);
  for (const GroupPtr& g : both_backends(11, 13, rng)) {
    for (KeyMode mode : {KeyMode::binding, KeyMode::hiding}) {
      const CommitmentKey ck =
          mode == KeyMode::binding ? binding_keygen(g, rng).first : hiding_keygen(g, rng).first;
      for (int m = 0; m < 11; ++m) {
        const BigInt r = random_below(g->n(), rng);
        const Commitment c = commit(ck, m, r);
        const WIProof pi = detail::wi_prove_unchecked(ck, m, r);
        const GElement c_over_g = c.c * inverse(g->generator());
        CHECK(pair(c.c, c_over_g) == pow(g->gt(), BigInt(m) * (m - 1)) * pair(ck.h, pi.pi));
        CHECK(verify(ck, c, pi) == (mod(BigInt(m) * (m - 1), g->n()) == 0));
      }
    }
  }
}

TEST_CASE("homomorphic combine") {
  const GroupPtr grp = GroupContext::setup_transparent(5, 7);
  const CommitmentKey ck = binding_keygen_with(grp, 3).first;
  CHECK(homomorphic_combine(commit(ck, 1, 2), commit(ck, 2, 3)).c == commit(ck, 3, 5).c);
  const Commitment c = commit(ck, 4, 11);
  CHECK(homomorphic_combine(c, commit(ck, 0, 0)).c == c.c);
  const Commitment sum = homomorphic_combine(commit(ck, 1, 2), commit(ck, 0, 4));
  CHECK(sum.c == grp->g_pow(21));
  CHECK(sum.c == commit(ck, 1, 6).c);

  const CommitmentKey other = binding_keygen_with(grp, 2).first;
  CHECK(kind_of([&] { homomorphic_combine(commit(ck, 1, 1), commit(other, 1, 1)); }) ==
        ErrorKind::context_mismatch);
}

TEST_CASE("binding key admits no double openings at n = 15") {
  const GroupPtr grp = GroupContext::setup_transparent(3, 5);
  for (int x = 1; x < 5; ++x) {
    const CommitmentKey ck = binding_keygen_with(grp, x).first;
    std::map<unsigned long, std::set<int>> messages_by_c;
    for (int m = 0; m < 3; ++m) {
      for (int r = 0; r < 15; ++r) messages_by_c[commit(ck, m, r).c.exponent().get_ui()].insert(m);
    }
    for (const auto& [c, ms] : messages_by_c) CHECK(ms.size() == 1);
  }
}

}
