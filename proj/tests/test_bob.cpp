#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_support.hpp"

#include <random>

#include "baker/alice.hpp"
#include "baker/bob.hpp"
#include "baker/certificate.hpp"

using namespace baker;

namespace {

Rat R(const char* s) { return Rat::parse(s); }
auto rationals() { return make_domain("rationals"); }
const ExtRat kInf = ExtRat::pos_inf();

PayoffSet three() { return finite_payoff({Rat(1, 2), Rat(1, 4), Rat(3, 4)}); }

// Inner full strategy that always answers a fixed value.
class FixedFull final : public BobFullStrategy {
 public:
  explicit FixedFull(Rat v) : v_(std::move(v)) {}
  std::string name() const override { return "fixed"; }
  Rat respond(std::span<const Rat>) const override { return v_; }

 private:
  Rat v_;
};

class FaultyFull final : public BobFullStrategy {
 public:
  std::string name() const override { return "faulty"; }
  Rat respond(std::span<const Rat>) const override { throw std::runtime_error("inner fault"); }
};

// Legal Alice history of length n against `bob`, driven by a RandomAlice.
std::vector<Rat> random_history(const BobStrategy& bob, std::uint64_t seed, std::size_t n) {
  RandomAlice alice(seed);
  Transcript tr = play_truncated(alice, bob, n, rationals(), seed);
  std::vector<Rat> out;
  for (const auto& m : tr.moves)
    if (m.player == Player::Alice) out.push_back(m.value);
  return out;
}

}  // namespace

TEST_CASE("enumeration_move examples") {
  auto q = rationals();
  PayoffSet w = three();
  CHECK(enumeration_move(w, 0, ExtRat(Rat(0)), kInf, *q) == Rat(1, 2));
  CHECK(enumeration_move(w, 1, ExtRat(Rat(3, 10)), ExtRat(Rat(1, 2)), *q) == Rat(2, 5));
  CHECK(enumeration_move(w, 3, ExtRat(R("0.4")), ExtRat(R("0.45")), *q) == Rat(17, 40));
  CHECK(enumeration_move(w, 2, ExtRat(Rat(1, 2)), ExtRat(Rat(1)), *q) == Rat(3, 4));
}

TEST_CASE("shrink examples") {
  CHECK(shrink_move(Rat(10), Rat(0), kInf, 0) == Rat(1));
  CHECK(shrink_move(Rat(1, 5), Rat(0), ExtRat(Rat(1)), 0) == Rat(1, 5));
  CHECK(shrink_move(Rat(3, 4), Rat(1, 2), ExtRat(Rat(1)), 1) == Rat(3, 4));
  // The cap itself lands on Bob's last move: re-legalized to the midpoint.
  CHECK(shrink_move(Rat(9, 10), Rat(1, 2), ExtRat(Rat(1)), 1) == Rat(3, 4));
  CHECK(shrink_move(Rat(9, 10), Rat(0), ExtRat(Rat(1)), 3) == Rat(1, 4));
}

TEST_CASE("rationalize examples") {
  CHECK(rationalize_move(Rat(1, 2), ExtRat(Rat(0))) == Rat(1, 2));
  Rat r = rationalize_move(Rat(2, 3), ExtRat(Rat(0)));
  CHECK(r == Rat(1, 2));
  CHECK(rationalize_move(Rat(7, 10), ExtRat(Rat(2, 3))) == Rat(11, 16));
  CHECK(rationalize_move(Rat(5), ExtRat::neg_inf()) == Rat(5));

  auto wrapped = rationalize_wrap_full(std::make_shared<FixedFull>(Rat(2, 3)));
  std::vector<Rat> h{Rat(0)};
  CHECK(wrapped->respond(h) == Rat(1, 2));
  auto faulty = rationalize_wrap_full(std::make_shared<FaultyFull>());
  CHECK_THROWS_WITH(faulty->respond(h), "inner fault");
  auto faulty_shrink = shrink_wrap_full(std::make_shared<FaultyFull>());
  CHECK_THROWS_WITH(faulty_shrink->respond(h), "inner fault");
}

TEST_CASE("coding transform examples") {
  auto sigma = lift_full(midpoint_bob());
  auto tau = coding_transform(sigma);
  std::vector<Rat> h0{Rat(0)};
  REQUIRE(sigma->respond(h0) == Rat(1));
  const Rat b0 = tau->respond(kInf, Rat(0));
  CHECK(b0 == R("59644862314725701679/100000000000000000000"));  // Python oracle
  CHECK(decode_alice_history(ExtRat(b0)) == h0);
  CHECK(Rat(0) < b0);
  CHECK(b0 < Rat(1));

  std::vector<Rat> h1{Rat(0), Rat(1, 4)};
  CHECK(sigma->respond(h1) == Rat(5, 8));
  const Rat b1 = tau->respond(ExtRat(b0), Rat(1, 4));
  CHECK(b1 == R("492215026238585705387547440101069/1000000000000000000000000000000000"));
  CHECK(decode_alice_history(ExtRat(b1)) == h1);
  CHECK(Rat(1, 4) < b1);
  CHECK(b1 < Rat(5, 8));

  CHECK_THROWS_AS(tau->respond(ExtRat(Rat(1, 3)), Rat(0)), DecodeFault);
  CHECK(decode_alice_history(kInf).empty());
}

TEST_CASE("enumeration coding Bob") {
  auto bob = enumeration_coding_bob(finite_payoff({Rat(1, 2)}));
  const Rat b0 = bob->respond(kInf, Rat(0));
  CHECK(b0 == R("29449/100000"));  // Python oracle: encodes "1" in (0, 1/2)
  CHECK(decode_round(ExtRat(b0)) == 1u);
  CHECK(decode_round(kInf) == 0u);
  CHECK_THROWS_AS(decode_round(ExtRat(Rat(1, 3))), DecodeFault);
  // Past the end of W it still counts rounds.
  const Rat b1 = bob->respond(ExtRat(b0), Rat(1, 4));
  CHECK(decode_round(ExtRat(b1)) == 2u);
  CHECK(Rat(1, 4) < b1);
  CHECK(b1 < b0);
}

TEST_CASE("enumeration play eliminates every w_n") {
  std::mt19937_64 rng(99);
  PayoffSet w = rationals_payoff(Rat(0), Rat(1));
  std::vector<BobPtr> bobs{enumeration_bob(w), enumeration_coding_bob(w), shrink_wrap(enumeration_bob(w)),
                           rationalize_wrap(enumeration_bob(w))};
  for (const auto& bob : bobs) {
    for (int g = 0; g < 5; ++g) {
      RandomAlice alice(rng());
      Transcript tr = play_truncated(alice, *bob, 40, rationals(), static_cast<std::uint64_t>(g));
      REQUIRE(tr.completed_rounds() == 40);
      EliminationReport rep = eliminate_all(tr.moves, w, 40);
      REQUIRE_MESSAGE(rep.certificates.size() == 40, bob->name());
      for (const auto& c : rep.certificates) REQUIRE(check(c, tr.moves));
    }
  }
}

TEST_CASE("shrink bound holds for every round") {
  std::mt19937_64 rng(5);
  std::vector<BobPtr> inners{midpoint_bob(), random_bob(3), enumeration_bob(three()),
                             enumeration_coding_bob(rationals_payoff(Rat(0), Rat(1)))};
  for (const auto& inner : inners) {
    BobPtr bob = shrink_wrap(inner);
    CHECK(bob->kind() != BobKind::Coding);
    RandomAlice alice(rng());
    Transcript tr = play_truncated(alice, *bob, 60, rationals(), 1);
    auto b = round_bounds(tr.moves);
    for (std::size_t n = 0; n < b.size(); ++n) REQUIRE(b[n].bob - b[n].alice <= Rat(1, static_cast<long>(n + 1)));
  }
}

TEST_CASE("wrapped moves never exceed the inner move") {
  std::mt19937_64 rng(1234);
  auto sigma = random_bob(77);
  auto shrunk = shrink_wrap_full(sigma);
  auto rational = rationalize_wrap_full(sigma);
  auto tau = coding_transform(sigma);
  std::size_t probes = 0;
  while (probes < 1000) {
    // Each wrapper is probed on histories legal against itself, hence
    // against sigma, whose replies are never smaller.
    for (const auto& wrapped : {shrunk, rational}) {
      std::vector<Rat> h = random_history(*wrapped, rng(), 1 + rng() % 8);
      for (std::size_t k = 1; k <= h.size(); ++k, ++probes) {
        std::span<const Rat> t(h.data(), k);
        const Rat w = wrapped->respond(t);
        REQUIRE(w <= sigma->respond(t));
        REQUIRE(t.back() < w);
      }
    }
    std::vector<Rat> hist = random_history(*tau, rng(), 1 + rng() % 8);
    // The coded replies along the same play stay below sigma's.
    ExtRat beta = kInf;
    for (std::size_t k = 1; k <= hist.size(); ++k) {
      std::span<const Rat> t(hist.data(), k);
      const Rat b = tau->respond(beta, t.back());
      REQUIRE(b < sigma->respond(t));
      REQUIRE(ExtRat(b) < beta);
      beta = ExtRat(b);
    }
  }
}

TEST_CASE("coded Bob carries Alice's exact history") {
  std::mt19937_64 rng(31);
  std::vector<BobFullPtr> sigmas{lift_full(midpoint_bob()), random_bob(5), as_full(enumeration_bob(three())),
                                 shrink_wrap_full(random_bob(9))};
  for (const auto& sigma : sigmas) {
    auto tau = coding_transform(sigma);
    for (int g = 0; g < 4; ++g) {
      RandomAlice alice(rng());
      Transcript tr = play_truncated(alice, *tau, 25, rationals(), static_cast<std::uint64_t>(g));
      std::vector<Rat> prefix;
      for (const auto& m : tr.moves) {
        if (m.player == Player::Alice) {
          prefix.push_back(m.value);
        } else {
          REQUIRE(decode_alice_history(ExtRat(m.value)) == prefix);
        }
      }
    }
  }
}

TEST_CASE("folded strategies reject illegal histories") {
  auto sigma = lift_full(midpoint_bob());
  CHECK_THROWS_AS(sigma->respond(std::vector<Rat>{}), IllegalHistory);
  // Alice's second move is not below Bob's first reply of 1.
  CHECK_THROWS_AS(sigma->respond(std::vector<Rat>{Rat(0), Rat(2)}), IllegalHistory);
  CHECK(sigma->respond(std::vector<Rat>{Rat(0), Rat(1, 2)}) == Rat(3, 4));
}

TEST_CASE("min_of and fraction Bob") {
  auto f = fraction_bob(Rat(1, 3));
  CHECK(f->respond(ExtRat(Rat(1)), Rat(0)) == Rat(1, 3));
  CHECK(f->respond(kInf, Rat(2)) == Rat(3));
  auto m = min_of(lift_full(midpoint_bob()), lift_full(f));
  std::vector<Rat> h{Rat(0), Rat(1, 2)};
  // fraction: 1, then 1/2 + (1 - 1/2)/3 = 2/3; midpoint would give 3/4.
  CHECK(m->respond(h) == Rat(2, 3));
}

TEST_CASE("random Bob is a pure function of the history") {
  auto bob = random_bob(8);
  std::vector<Rat> h{Rat(0)};
  const Rat first = bob->respond(h);
  CHECK(bob->respond(h) == first);
  CHECK(random_bob(8)->respond(h) == first);
  h.push_back(first / 2);
  const Rat second = bob->respond(h);
  CHECK(first / 2 < second);
  CHECK(second < first);
}
