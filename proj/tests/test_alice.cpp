#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_support.hpp"

#include <random>

#include "baker/alice.hpp"
#include "baker/certificate.hpp"

using namespace baker;

namespace {

auto rationals() { return make_domain("rationals"); }
const ExtRat kInf = ExtRat::pos_inf();

// sigma(beta, a) = (a + beta)/2 with a + 1 while beta is infinite.
BobCodingPtr midpoint_coder() { return midpoint_bob(); }

// Full-information history midpointer (a + previous Bob move)/2.
BobFullPtr history_midpointer() { return lift_full(midpoint_bob()); }

}  // namespace

TEST_CASE("witness probes accumulate at x") {
  CHECK(witness_probe(Rat(0), Rat(9, 10), 1) == Rat(9, 20));
  CHECK(witness_probe(Rat(0), Rat(9, 10), 4) == Rat(27, 32));
  CHECK(witness_probe(Rat(1, 2), Rat(1), 3) == Rat(15, 16));
}

TEST_CASE("witness search against the midpoint coder") {
  // Algebra: x < (a + 1)/2 iff a > 2x - 1 = 4/5. First probe past 4/5 is k = 4.
  WitnessQuery wq{Rat(0), ExtRat(Rat(1)), Rat(9, 10)};
  const Rat a = witness_search(*midpoint_coder(), wq);
  CHECK(a == Rat(27, 32));
  CHECK(Rat(9, 10) < midpoint_coder()->respond(ExtRat(Rat(1)), a));
  // target_move picks q = 1/2 from (0, 9/10); probes 7/10, 4/5, 17/20.
  CHECK(target_move(*midpoint_coder(), ExtRat(Rat(0)), ExtRat(Rat(1)), Rat(9, 10)) == Rat(17, 20));
  CHECK_THROWS_AS(target_move(*midpoint_coder(), ExtRat(Rat(0)), ExtRat(Rat(1)), Rat(2)), TargetIllegal);
  wq.budget = 3;
  CHECK_THROWS_AS(witness_search(*midpoint_coder(), wq), NotFound);
  wq.budget = 0;
  try {
    witness_search(*midpoint_coder(), wq);
    FAIL("expected NotFound");
  } catch (const NotFound& e) {
    CHECK(e.budget == 0);
  }
}

TEST_CASE("witness search finds nothing when sigma answers x itself") {
  // Enumeration-coding Bob on {1/2} replies below 1/2 to any a < 1/2.
  auto bob = enumeration_coding_bob(finite_payoff({Rat(1, 2)}));
  WitnessQuery wq{Rat(0), kInf, Rat(1, 2)};
  CHECK_THROWS_AS(witness_search(*bob, wq), NotFound);
}

TEST_CASE("e_probe against enumeration coding Bob") {
  auto bob = enumeration_coding_bob(finite_payoff({Rat(1, 2), Rat(1, 4), Rat(3, 4)}));
  EProbeResult hit = e_probe(*bob, Rat(0), kInf, Rat(1, 2));
  CHECK_FALSE(hit.escapes());
  CHECK(hit.probes_used == 64);
  // Probes 3/10 and 9/20 are answered below 1/2; 21/40 passes w_0 and Bob
  // falls back into (a, a + 1).
  EProbeResult esc = e_probe(*bob, Rat(0), kInf, Rat(3, 5));
  REQUIRE(esc.escapes());
  CHECK(*esc.witness == Rat(21, 40));
  CHECK(esc.probes_used == 3);
  CHECK(Rat(3, 5) < bob->respond(kInf, *esc.witness));
}

TEST_CASE("midpoint family never eliminates") {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<long> num(1, 999);
  for (int i = 0; i < 300; ++i) {
    Rat q(num(rng), 1000), x(num(rng), 1000);
    if (!(q < x)) continue;
    ExtRat beta = (i % 3 == 0) ? kInf : ExtRat(x + Rat(num(rng), 1000));
    for (const Rat& f : {Rat(1, 2), Rat(1, 3), Rat(9, 10)}) {
      EProbeResult r = e_probe(*fraction_bob(f), q, beta, x);
      REQUIRE(r.escapes());
      REQUIRE(q < *r.witness);
      REQUIRE(*r.witness < x);
      REQUIRE(x < fraction_bob(f)->respond(beta, *r.witness));
    }
  }
}

TEST_CASE("presumed eliminated grid matches the reply-table oracle") {
  // Reply-table oracle for round-indexed enumeration at round 0 (q = 0,
  // beta = +inf): sigma answers w_0 = 1/2 to any a < 1/2 and a + 1 above it,
  // so the only trapped grid point is w_0 itself.
  PayoffSet w = finite_payoff({Rat(1, 2), Rat(1, 4), Rat(3, 4)});
  auto bob = enumeration_bob(w);
  Position start(rationals());
  std::vector<Rat> eliminated;
  for (long k = 1; k < 1024; ++k) {
    const Rat x(k, 1024);
    Position pos = start;
    EProbeResult r = e_probe(reply_probe(*bob, pos), Rat(0), x);
    if (!r.escapes()) eliminated.push_back(x);
  }
  REQUIRE(eliminated.size() == 1);
  CHECK(eliminated[0] == Rat(1, 2));
}

TEST_CASE("full information target move") {
  auto sigma = history_midpointer();
  // Empty history: Bob answers a + 1 > x for every probe.
  CHECK(full_info_target_move(*sigma, {}, Rat(3, 4)) == Rat(3, 8));
  // After a_0 = 0 Bob played 1, so x < (a + 1)/2 iff a > 4/5. Here
  // q = 1/2 and the probes are 7/10, 4/5, 17/20.
  std::vector<Rat> t{Rat(0)};
  CHECK(full_info_target_move(*sigma, t, Rat(9, 10)) == Rat(17, 20));

  auto enumeration = as_full(enumeration_bob(finite_payoff({Rat(1, 2)})));
  const Rat a = full_info_target_move(*enumeration, {}, Rat(3, 5));
  std::vector<Rat> ta{a};
  CHECK(Rat(3, 5) < enumeration->respond(ta));
  CHECK_THROWS_AS(full_info_target_move(*enumeration, {}, Rat(1, 2)), NotFound);
}

TEST_CASE("target Alice keeps x legal against the midpoint coder") {
  std::mt19937_64 rng(12);
  auto bob = midpoint_coder();
  for (int i = 0; i < 40; ++i) {
    const Rat x(1 + static_cast<long>(rng() % 999), 1000);
    TargetAlice alice(bob, x);
    Transcript tr = play_truncated(alice, *bob, 30, rationals(), 0);
    REQUIRE(alice.misses() == 0);
    auto st = survival_status(tr.moves, x);
    REQUIRE(st.certificate.has_value());
    REQUIRE(check(*st.certificate, tr.moves));
  }
}

TEST_CASE("target Alice against coded Bob") {
  auto tau = coding_transform(lift_full(midpoint_bob()));
  TargetAlice alice(tau, Rat(1, 3));
  Transcript tr = play_truncated(alice, *tau, 8, rationals(), 0);
  CHECK(alice.misses() == 0);
  auto st = survival_status(tr.moves, Rat(1, 3));
  REQUIRE(st.certificate.has_value());
  CHECK(check(*st.certificate, tr.moves));
}

TEST_CASE("target Alice records misses instead of faulting") {
  auto bob = enumeration_coding_bob(finite_payoff({Rat(1, 2)}));
  TargetAlice alice(bob, Rat(1, 2), 8);
  Transcript tr = play_truncated(alice, *bob, 3, rationals(), 0);
  CHECK(alice.misses() >= 1);
  CHECK(survival_status(tr.moves, Rat(1, 2)).eliminated_at == 0u);
}

TEST_CASE("perfect move") {
  PerfectMove m = perfect_move({}, ExtRat::neg_inf(), kInf);
  CHECK(m.value == Rat(0));
  CHECK(m.state.core.depth == 1);
  PerfectMove first = perfect_move({}, ExtRat(Rat(0)), ExtRat(Rat(1)));
  CHECK(first.value == Rat(2, 9));
  CHECK((first.state.core == CantorCore{2, Rat(2, 9)}));
  // Bob answers 3/10: the next core must fit in (2/9, 3/10).
  PerfectMove second = perfect_move(first.state, ExtRat(first.value), ExtRat(Rat(3, 10)));
  CHECK(Rat(2, 9) < second.value);
  CHECK(second.state.core.right() < Rat(3, 10));
  CHECK(second.state.core.depth > first.state.core.depth);
  CHECK(cantor_contains(second.value));
  CHECK(second.state.rounds == 2);
  CHECK_THROWS_AS(perfect_move(first.state, ExtRat(Rat(1, 2)), ExtRat(Rat(3, 5))), NoRefinement);
}

TEST_CASE("perfect Cantor Alice survives random Bobs") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    PerfectCantorAlice alice;
    auto bob = random_bob(seed);
    Transcript tr = play_truncated(alice, *bob, 40, rationals(), seed);
    REQUIRE(tr.completed_rounds() == 40);
    for (const auto& mv : tr.moves)
      if (mv.player == Player::Alice) REQUIRE(cantor_contains(mv.value));
    CoreChainCertificate c = core_chain_certificate(tr.moves, alice.chain());
    REQUIRE(check(c, tr.moves));
  }
}

TEST_CASE("random Alice is reproducible and legal") {
  RandomAlice a(3), b(3);
  auto bob = midpoint_bob();
  Transcript t1 = play_truncated(a, *bob, 20, rationals(), 5);
  Transcript t2 = play_truncated(b, *bob, 20, rationals(), 5);
  CHECK(t1.moves == t2.moves);
  CHECK(t1.completed_rounds() == 20);
}
