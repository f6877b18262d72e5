#include <vector>

#include "bgnlab/groups.hpp"
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

}  // namespace

TEST_SUITE("groups.transparent") {

TEST_CASE("setup validates the prime pair") {
  const GroupPtr g57 = GroupContext::setup_transparent(5, 7);
  CHECK(g57->n() == 35);
  CHECK(g57->p() == 5);
  CHECK(g57->q() == 7);
  CHECK(g57->generator().exponent() == 1);
  CHECK(GroupContext::setup_transparent(3, 5)->n() == 15);
  CHECK(kind_of([] { GroupContext::setup_transparent(7, 5); }) == ErrorKind::invalid_argument);
  CHECK(kind_of([] { GroupContext::setup_transparent(4, 7); }) == ErrorKind::invalid_argument);
  CHECK(kind_of([] { GroupContext::setup_transparent(5, 5); }) == ErrorKind::invalid_argument);
}

TEST_CASE("group law examples") {
  const GroupPtr grp = GroupContext::setup_transparent(5, 7);
  const GElement g = grp->generator();
  CHECK(pow(g, 0).is_identity());
  CHECK((grp->g_pow(31) * grp->g_pow(30)) == grp->g_pow(26));
  CHECK(inverse(grp->g_pow(3)).exponent() == 32);
  CHECK(pow(g, -1) == inverse(g));
  CHECK(pow(g, 35).is_identity());
}

TEST_CASE("pairing examples") {
  const GroupPtr grp = GroupContext::setup_transparent(5, 7);
  CHECK(pair(grp->g_pow(2), grp->g_pow(3)) == pow(grp->gt(), 6));
  CHECK(pair(grp->identity(), grp->g_pow(9)).is_identity());
  CHECK(pair(grp->g_pow(9), grp->identity()) == grp->gt_identity());
}

TEST_CASE("subgroup membership") {
  const GroupPtr grp = GroupContext::setup_transparent(5, 7);
  CHECK_FALSE(is_in_subgroup_q(grp->g_pow(7), 7));
  CHECK(is_in_subgroup_q(grp->g_pow(5), 7));
  CHECK(is_in_subgroup_q(grp->identity(), 7));
  CHECK(kind_of([&] { is_in_subgroup_q(grp->g_pow(5), 3); }) == ErrorKind::invalid_argument);

  std::vector<unsigned long> members;
  for (unsigned long e = 0; e < 35; ++e) {
    if (is_in_subgroup_q(grp->g_pow(e), 7)) members.push_back(e);
  }
  CHECK(members == std::vector<unsigned long>{0, 5, 10, 15, 20, 25, 30});
}

TEST_CASE("mixing groups is an error") {
  const GroupPtr a = GroupContext::setup_transparent(5, 7);
  const GroupPtr b = GroupContext::setup_transparent(3, 5);
  CHECK(kind_of([&] { (void)(a->generator() * b->generator()); }) == ErrorKind::context_mismatch);
  CHECK(kind_of([&] { pair(a->generator(), b->generator()); }) == ErrorKind::context_mismatch);
  CHECK_FALSE(a->generator() == b->generator());

  // Independently built contexts with the same description are one group.
  const GroupPtr a2 = GroupContext::setup_transparent(5, 7);
  CHECK((a->g_pow(3) * a2->g_pow(4)) == a->g_pow(7));
}

TEST_CASE("element text round trip and errors") {
  const GroupPtr grp = GroupContext::setup_transparent(5, 7);
  for (unsigned long e = 0; e < 35; ++e) {
    const GElement x = grp->g_pow(e);
    CHECK(grp->decode_g(encode(x)) == x);
    const GTElement t = pow(grp->gt(), e);
    CHECK(grp->decode_gt(encode(t)) == t);
  }
  CHECK(encode(grp->g_pow(26)) == "G:26");
  CHECK(kind_of([&] { grp->decode_g("G:35"); }) == ErrorKind::malformed);
  CHECK(kind_of([&] { grp->decode_g("G:x"); }) == ErrorKind::malformed);
  CHECK(kind_of([&] { grp->decode_g("26"); }) == ErrorKind::malformed);
  CHECK(kind_of([&] { grp->decode_gt("G:3"); }) == ErrorKind::malformed);
}

TEST_CASE("context fields round trip") {
  const GroupPtr grp = GroupContext::setup_transparent(5, 7);
  const GroupPtr full = GroupContext::from_fields(grp->to_fields(true));
  CHECK(full->has_factorization());
  CHECK(full->same_group(*grp));
  const GroupPtr pub = GroupContext::from_fields(grp->to_fields(false));
  CHECK_FALSE(pub->has_factorization());
  CHECK(pub->same_group(*grp));
  CHECK(kind_of([&] { pub->p(); }) == ErrorKind::invalid_argument);

  KeyValues bad = grp->to_fields(true);
  bad.set("n", "36");
  CHECK(kind_of([&] { GroupContext::from_fields(bad); }) == ErrorKind::malformed);
  KeyValues bad_g = grp->to_fields(false);
  bad_g.set("g", "G:2");
  CHECK(kind_of([&] { GroupContext::from_fields(bad_g); }) == ErrorKind::malformed);
}

TEST_CASE("bilinearity, non-degeneracy and symmetry") {
  Rng rng(21);
  const GroupPtr grp = GroupContext::setup_transparent(gen_prime(16, rng), gen_prime(17, rng));
  const BigInt& n = grp->n();
  for (int i = 0; i < 100; ++i) {
    const GElement a = grp->g_pow(random_below(n, rng));
    const GElement b = grp->g_pow(random_below(n, rng));
    const BigInt s = random_below(n, rng), t = random_below(n, rng);
    CHECK(pair(pow(a, s), pow(b, t)) == pow(pair(a, b), s * t));
    CHECK(pair(a, b) == pair(b, a));
  }
  const GTElement e = grp->gt();
  CHECK(pow(e, n).is_identity());
  CHECK_FALSE(pow(e, n / grp->p()).is_identity());
  CHECK_FALSE(pow(e, n / grp->q()).is_identity());
}

}
