#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_support.hpp"

#include <random>
#include <set>

#include "baker/codec.hpp"
#include "baker/domain.hpp"
#include "baker/numeric.hpp"

using namespace baker;

static Rat R(const char* s) { return Rat::parse(s); }

TEST_CASE("rationals are kept in lowest terms") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(2, 4).str() == "1/2");
  CHECK(Rat(-3, -6).str() == "1/2");
  CHECK(Rat(3, -6).str() == "-1/2");
  CHECK(Rat(5).str() == "5/1");
  CHECK(R("6/8").num() == 3);
  CHECK(R("6/8").den() == 4);
  CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
}

TEST_CASE("rational parsing") {
  CHECK(R("599/1000") == Rat(599, 1000));
  CHECK(R("0.599") == Rat(599, 1000));
  CHECK(R("-2") == Rat(-2));
  CHECK(R("-0.25") == Rat(-1, 4));
  CHECK(R(" 3/9 ") == Rat(1, 3));
  for (const char* bad : {"", "abc", "1/", "/2", "1/0", "1.2.3", "1/2/3", "0x10"})
    CHECK_THROWS_AS(Rat::parse(bad), ParseError);
}

TEST_CASE("extended rationals order and parse") {
  CHECK(ExtRat::neg_inf() < ExtRat(Rat(-1000)));
  CHECK(ExtRat(Rat(1000)) < ExtRat::pos_inf());
  CHECK(ExtRat::parse("+inf") == ExtRat::pos_inf());
  CHECK(ExtRat::parse("-inf") == ExtRat::neg_inf());
  CHECK(ExtRat::parse("1/2") == ExtRat(Rat(1, 2)));
  CHECK(ExtRat::pos_inf().str() == "+inf");
  CHECK_THROWS_AS(ExtRat::pos_inf().finite(), std::logic_error);
}

TEST_CASE("intervals") {
  Interval i{ExtRat(Rat(0)), ExtRat(Rat(1))};
  CHECK_FALSE(i.empty());
  CHECK(i.contains(Rat(1, 2)));
  CHECK_FALSE(i.contains(Rat(0)));
  CHECK_FALSE(i.contains(Rat(1)));
  CHECK(Interval{ExtRat(Rat(1)), ExtRat(Rat(1))}.empty());
  CHECK(*i.width() == Rat(1));
  CHECK_FALSE(Interval{}.width().has_value());
}

TEST_CASE("pick_between examples") {
  auto q = make_domain("rationals");
  auto z = make_domain("integers");
  auto d = make_domain("dyadics");
  CHECK(*q->pick_between(ExtRat(Rat(0)), ExtRat(Rat(1))) == Rat(1, 2));
  CHECK_FALSE(z->pick_between(ExtRat(Rat(3)), ExtRat(Rat(4))).has_value());
  CHECK(*q->pick_between(ExtRat(Rat(0)), ExtRat::pos_inf()) == Rat(1));
  CHECK(*q->pick_between(ExtRat::neg_inf(), ExtRat(Rat(0))) == Rat(-1));
  CHECK(*q->pick_between(ExtRat::neg_inf(), ExtRat::pos_inf()) == Rat(0));
  CHECK(*z->pick_between(ExtRat(Rat(0)), ExtRat(Rat(10))) == Rat(5));
  CHECK(*z->pick_between(ExtRat(Rat(1, 2)), ExtRat(Rat(3, 2))) == Rat(1));
  CHECK(*d->pick_between(ExtRat(Rat(1, 3)), ExtRat(Rat(2, 5))) == Rat(3, 8));
  CHECK_FALSE(q->pick_between(ExtRat(Rat(1)), ExtRat(Rat(1))).has_value());
  CHECK_THROWS(make_domain("reals"));
}

TEST_CASE("pick_between respects bounds on random inputs") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-500, 500), den(1, 60);
  for (const auto& name : domain_names()) {
    auto dom = make_domain(name);
    for (int i = 0; i < 10000; ++i) {
      Rat a(num(rng), den(rng)), b(num(rng), den(rng));
      if (b < a) std::swap(a, b);
      ExtRat lo = (i % 17 == 0) ? ExtRat::neg_inf() : ExtRat(a);
      ExtRat hi = (i % 13 == 0) ? ExtRat::pos_inf() : ExtRat(b);
      auto p = dom->pick_between(lo, hi);
      if (p) {
        REQUIRE(lo < ExtRat(*p));
        REQUIRE(ExtRat(*p) < hi);
        REQUIRE(dom->contains(*p));
        REQUIRE(*dom->pick_between(lo, hi) == *p);
      } else {
        // Only a discrete domain may come up empty, and only with no integer inside.
        REQUIRE_FALSE((dom->dense() && lo < hi));
        if (lo.is_finite() && hi.is_finite()) REQUIRE(lo.finite().floor() + 1 >= hi.finite().ceil());
      }
    }
  }
}

TEST_CASE("rational_witness") {
  CHECK(rational_witness(Rat(0), Rat(1)) == Rat(1, 2));
  CHECK(rational_witness(Rat(1, 3), Rat(2, 3)) == Rat(1, 2));
  CHECK(rational_witness(Rat(5, 8), Rat(11, 16)) == Rat(21, 32));  // brute-force oracle
  CHECK(rational_witness(Rat(-3, 2), Rat(7, 3)) == Rat(-1));
  CHECK(rational_witness(ExtRat::neg_inf(), ExtRat(Rat(3, 5))) == Rat(0));
  CHECK(rational_witness(ExtRat::neg_inf(), ExtRat(Rat(2))) == Rat(1));
  CHECK(rational_witness(ExtRat(Rat(2)), ExtRat::pos_inf()) == Rat(3));
}

TEST_CASE("codec examples") {
  CHECK(encode_history({}, Rat(0), Rat(1)) == Rat(599, 1000));
  CHECK(encode_history(Bytes{0}, Rat(0), Rat(1)) == Rat(5909, 10000));
  CHECK(decode_history(Rat(599, 1000)).empty());
  CHECK(decode_history(Rat(5909, 10000)) == Bytes{0});
  CHECK_THROWS_AS(decode_history(Rat(1, 3)), NotEncoded);
  CHECK_THROWS_AS(encode_history({}, Rat(1), Rat(1)), IntervalEmpty);
  CHECK_THROWS_AS(encode_history({}, Rat(2), Rat(1)), IntervalEmpty);
  // Values from the independent Python encoder.
  CHECK(encode_history(to_bytes("abc"), Rat(1, 3), Rat(1, 2)) == R("49020057429/100000000000"));
  CHECK(encode_history(Bytes{0}, Rat(-7, 3), Rat(-2)) == R("-21091/10000"));
  CHECK(encode_history(to_bytes("1"), Rat(0), Rat(1, 2)) == R("29449/100000"));
}

TEST_CASE("codec rejects malformed frames") {
  CHECK_THROWS_AS(decode_history(Rat(1, 2)), NotEncoded);           // no sentinel
  CHECK_THROWS_AS(decode_history(R("0.59")), NotEncoded);           // unclosed
  CHECK_THROWS_AS(decode_history(R("0.99")), NotEncoded);           // no anchor
}

TEST_CASE("anchors may contain the digit 9") {
  // Every number in this interval starts 0.19..., so no 9-free anchor exists.
  const Rat lo = R("191/1000"), hi = R("1927/10000");
  const Rat v = encode_history({}, lo, hi);
  CHECK(v == R("0.19199"));  // Python oracle
  CHECK(decode_history(v).empty());
  CHECK(decode_history(R("0.599599")).empty());  // anchor 5995
}

TEST_CASE("base-9 shortlex bijection") {
  CHECK(bytes_to_base9({}).empty());
  CHECK(bytes_to_base9(Bytes{0}) == "0");
  CHECK(bytes_to_base9(Bytes{8}) == "8");
  CHECK(bytes_to_base9(Bytes{9}) == "00");
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    Bytes b(rng() % 20);
    for (auto& x : b) x = static_cast<std::uint8_t>(rng());
    REQUIRE(base9_to_bytes(bytes_to_base9(b)) == b);
  }
}

TEST_CASE("codec round trip on random payloads and intervals") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> num(-10000, 10000), den(1, 5000);
  for (int i = 0; i < 400; ++i) {
    Bytes payload(rng() % 65);
    for (auto& x : payload) x = static_cast<std::uint8_t>(rng());
    Rat lo(num(rng), den(rng));
    Rat hi = lo + Rat(1 + static_cast<long>(rng() % 1000), 1 + static_cast<long>(rng() % 100000));
    Rat v = encode_history(payload, lo, hi);
    REQUIRE(lo < v);
    REQUIRE(v < hi);
    REQUIRE(decode_history(v) == payload);
  }
}

TEST_CASE("codec is injective for a fixed interval") {
  std::set<std::string> seen;
  for (int a = 0; a < 40; ++a) {
    Bytes p{static_cast<std::uint8_t>(a)};
    if (a % 3 == 0) p.push_back(7);
    REQUIRE(seen.insert(encode_history(p, Rat(1, 7), Rat(2, 7)).str()).second);
  }
}

TEST_CASE("history serialization") {
  std::vector<Rat> h{Rat(0), Rat(1, 4), Rat(-22, 7)};
  auto bytes = serialize_history(h);
  CHECK(std::string(bytes.begin(), bytes.end()) == "3;3:0/13:1/45:-22/7");
  CHECK(deserialize_history(bytes) == h);
  CHECK(deserialize_history(serialize_history({})).empty());
  for (const char* bad : {"", "1;", "2;3:0/1", "1;9:0/1", "x;", "1;3:0/0", "1;3:0/1junk"})
    CHECK_THROWS_AS(deserialize_history(to_bytes(bad)), NotEncoded);
}

TEST_CASE("terminating digits") {
  CHECK(*terminating_fraction_digits(Rat(599, 1000)) == "599");
  CHECK(*terminating_fraction_digits(Rat(-1, 4)) == "75");
  CHECK(terminating_fraction_digits(Rat(3)) == std::string());
  CHECK_FALSE(terminating_fraction_digits(Rat(1, 3)).has_value());
}
