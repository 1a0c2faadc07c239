#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_support.hpp"

#include "baker/banach_mazur.hpp"

using namespace baker;

namespace {

const BmInterval kUnit{Rat(0), Rat(1)};

MeagerPresentation single(NowhereDensePtr f) {
  return {[f](std::size_t n) { return n == 0 ? f : nullptr; }};
}

// Plays a fixed interval regardless of the position.
class FixedBm final : public BmStrategy {
 public:
  explicit FixedBm(BmInterval i) : i_(std::move(i)) {}
  std::string name() const override { return "fixed"; }
  BmInterval move(std::size_t, const BmInterval&) const override { return i_; }

 private:
  BmInterval i_;
};

}  // namespace

TEST_CASE("shrink_to_closure keeps the middle half") {
  CHECK((shrink_to_closure(kUnit) == BmInterval{Rat(1, 4), Rat(3, 4)}));
  BmInterval i{Rat(1, 3), Rat(2, 3)};
  CHECK(i.holds_closure_of(shrink_to_closure(i)));
}

TEST_CASE("halves-left trace") {
  auto h = halves_left_bm();
  BmTranscript tr = bm_play_truncated(*h, *h, 2, kUnit);
  REQUIRE(tr.moves.size() == 4);
  CHECK(tr.moves[0].player == Player::Bob);
  CHECK((tr.moves[0].interval == BmInterval{Rat(1, 8), Rat(3, 8)}));
  CHECK(tr.moves[1].player == Player::Alice);
  CHECK((tr.moves[1].interval == BmInterval{Rat(5, 32), Rat(7, 32)}));
  CHECK((tr.moves[2].interval == BmInterval{Rat(21, 128), Rat(23, 128)}));
  CHECK((tr.moves[3].interval == BmInterval{Rat(85, 512), Rat(87, 512)}));
  CHECK(tr.moves[3].round == 1);
  CHECK_NOTHROW(bm_replay(tr));
}

TEST_CASE("zero rounds and illegal intervals") {
  auto h = halves_left_bm();
  BmTranscript empty = bm_play_truncated(*h, *h, 0, kUnit);
  CHECK(empty.moves.empty());
  CHECK(empty.current() == kUnit);

  FixedBm wide({Rat(0), Rat(2)});
  try {
    bm_play_truncated(wide, *h, 2, kUnit);
    FAIL("expected IllegalInterval");
  } catch (const IllegalInterval& e) {
    CHECK(e.player == Player::Alice);
    CHECK(e.round == 0);
  }
  // Touching the boundary is not closure containment.
  FixedBm touching({Rat(0), Rat(1, 2)});
  CHECK_THROWS_AS(bm_play_truncated(*h, touching, 1, kUnit), IllegalInterval);

  BmTranscript tampered = bm_play_truncated(*h, *h, 2, kUnit);
  tampered.moves[2].interval = {Rat(0), Rat(1)};
  CHECK_THROWS_AS(bm_replay(tampered), IllegalInterval);
}

TEST_CASE("meager Bob dodges one cover piece") {
  auto half = single(std::make_shared<FinitePointSet>(std::vector<Rat>{Rat(1, 2)}));
  CHECK((meager_bob_move(half, 0, kUnit) == BmInterval{Rat(1, 8), Rat(3, 8)}));
  CHECK((meager_bob_move(cantor_presentation(), 0, kUnit) == BmInterval{Rat(5, 12), Rat(7, 12)}));
  BmInterval inside_gap = meager_bob_move(cantor_presentation(), 0, kUnit);
  CHECK(BmInterval{Rat(1, 3), Rat(2, 3)}.holds_closure_of(inside_gap));
  // Past the end of the cover: plain shrink.
  CHECK((meager_bob_move(half, 1, kUnit) == BmInterval{Rat(1, 4), Rat(3, 4)}));
  auto ints = single(std::make_shared<IntegerPointSet>());
  CHECK((meager_bob_move(ints, 0, {Rat(1, 4), Rat(1, 2)}) == BmInterval{Rat(5, 16), Rat(7, 16)}));
}

TEST_CASE("comeager Alice dodges the complement") {
  auto quarter = single(std::make_shared<FinitePointSet>(std::vector<Rat>{Rat(1, 4)}));
  CHECK((comeager_alice_move(quarter, 0, kUnit) == BmInterval{Rat(1, 16), Rat(3, 16)}));
  BmInterval c = comeager_alice_move(cantor_presentation(), 0, kUnit);
  CHECK(BmInterval{Rat(1, 3), Rat(2, 3)}.holds_closure_of(c));
  CHECK((comeager_alice_move(MeagerPresentation{}, 0, kUnit) == BmInterval{Rat(1, 4), Rat(3, 4)}));
}

TEST_CASE("meager Bob beats halves-left Alice on the Cantor set") {
  auto bob = meager_bob_bm(cantor_presentation());
  BmTranscript tr = bm_play_truncated(*halves_left_bm(), *bob, 6, kUnit);
  BmDisjointCertificate cert = bm_disjoint_certificate(tr);
  CHECK(check(cert, tr));
  CHECK_FALSE(cantor_meets({ExtRat(tr.current().lo), ExtRat(tr.current().hi)}));
  BmDisjointCertificate back = bm_certificate_from_json(to_json(cert));
  CHECK(back.intervals == cert.intervals);
  BmDisjointCertificate forged = cert;
  forged.intervals.back() = {Rat(0), Rat(1)};
  CHECK_FALSE(check(forged, tr));
}

TEST_CASE("no certificate while the interval still meets the set") {
  FixedBm bob({Rat(1, 5), Rat(3, 10)});
  FixedBm alice({Rat(6, 25), Rat(13, 50)});
  BmTranscript tr = bm_play_truncated(alice, bob, 1, kUnit);
  REQUIRE(tr.current().lo < Rat(1, 4));  // 1/4 is in the Cantor set
  CHECK_FALSE(check(bm_disjoint_certificate(tr), tr));
}

TEST_CASE("compare on the Cantor set") {
  CHECK_THROWS_AS(compare_on_cantor(0), std::invalid_argument);
  for (std::size_t n : {1u, 10u}) {
    CantorComparison cmp = compare_on_cantor(n);
    CHECK(cmp.rounds == n);
    CHECK(cmp.bm.moves.size() == 2 * n);
    CHECK(cmp.bm_check);
    REQUIRE(cmp.baker.size() == 3);
    for (const auto& run : cmp.baker) {
      CHECK_MESSAGE(run.check, run.bob);
      CHECK(run.transcript.completed_rounds() == n);
    }
    CHECK(cmp.valid());
    auto j = to_json(cmp);
    CHECK(j["N"] == n);
    CHECK(j["valid"] == true);
    CHECK(j["banachMazur"]["valid"] == true);
    CHECK(j.contains("baker"));
  }
}
