#include <doctest.h>

#include "gsflow/gen.hpp"
#include "gsflow/json_io.hpp"
#include "support/cli_runner.hpp"
#include "support/example1.hpp"

using namespace gsflow;
using nlohmann::json;

namespace {

Valuation parse_valuation(const std::string& text) {
  return io::valuation_from_json(json::parse(text), "test");
}

}  // namespace

TEST_CASE("fixture files load to the expected tables") {
  Valuation alice = io::load_valuation(cli::fixture("alice.json"));
  CHECK(alice == static_cast<const SetFunction&>(ex1::alice()));
  CHECK(alice.label() == "alice");

  Valuation bob = io::load_valuation(cli::fixture("bob.json"));
  CHECK(bob == static_cast<const SetFunction&>(ex1::bob()));

  PriceVector p = io::load_prices(cli::fixture("example1-prices-p.json"), alice.items());
  CHECK(p == ex1::prices_p());
  PriceVector q = io::load_prices(cli::fixture("example1-prices-q.json"), alice.items());
  CHECK(q == ex1::prices_q());

  io::ObservationData obs = io::load_observations(cli::fixture("bob-observations.json"));
  CHECK(obs.items == ex1::items());
  REQUIRE(obs.observations.size() == 2);
  CHECK(obs.observations[0].chosen == Bundle::from_mask(0b011));
  CHECK(obs.observations[1].chosen == Bundle::single(2));
}

TEST_CASE("the empty bundle defaults to zero and accepts overrides") {
  Valuation defaulted = parse_valuation(
      R"({"items":["a"],"type":"table","values":{"a":"5"}})");
  CHECK(defaulted.value(Bundle()) == Rational(0));

  Valuation overridden = parse_valuation(
      R"({"items":["a"],"type":"table","values":{"":"2","a":"5"}})");
  CHECK(overridden.value(Bundle()) == Rational(2));
}

TEST_CASE("rationals parse from strings and bare integers") {
  Valuation u = parse_valuation(
      R"({"items":["a","b"],"type":"table","values":{"a":1,"b":"3/2","ab":"5/2"}})");
  CHECK(u.value(Bundle::single(0)) == Rational(1));
  CHECK(u.value(Bundle::single(1)) == Rational(3, 2));
  CHECK(u.value(Bundle::from_mask(0b11)) == Rational(5, 2));
}

TEST_CASE("additive and unit-demand documents map single items") {
  Valuation add = parse_valuation(
      R"({"items":["x","y","z"],"type":"additive","values":{"x":"1","y":"2","z":"3"}})");
  CHECK(add.value(Bundle::full(3)) == Rational(6));

  Valuation ud = parse_valuation(
      R"({"items":["x","y","z"],"type":"unit-demand","values":{"x":"65","y":"70","z":"75"}})");
  CHECK(ud == static_cast<const SetFunction&>(ex1::alice()));

  CHECK_THROWS_AS(parse_valuation(
                      R"({"items":["x","y"],"type":"additive","values":{"x":"1","xy":"2"}})"),
                  io::InputError);
  CHECK_THROWS_AS(parse_valuation(
                      R"({"items":["x","y"],"type":"additive","values":{"x":"1"}})"),
                  io::InputError);
}

TEST_CASE("malformed valuation documents are rejected with the offending field") {
  // missing table entry
  CHECK_THROWS_WITH_AS(parse_valuation(
                           R"({"items":["a","b"],"type":"table","values":{"a":"1","b":"1"}})"),
                       doctest::Contains("missing table entry for bundle 'ab'"), io::InputError);
  // bad rational
  CHECK_THROWS_WITH_AS(parse_valuation(
                           R"({"items":["a"],"type":"table","values":{"a":"1.5"}})"),
                       doctest::Contains("values.a"), io::InputError);
  // unknown bundle key
  CHECK_THROWS_AS(parse_valuation(
                      R"({"items":["a","b"],"type":"table","values":{"a":"1","b":"1","ab":"2","c":"9"}})"),
                  io::InputError);
  // unknown type
  CHECK_THROWS_AS(parse_valuation(R"({"items":["a"],"type":"weird","values":{"a":"1"}})"),
                  io::InputError);
  // missing fields
  CHECK_THROWS_AS(parse_valuation(R"({"type":"table","values":{}})"), io::InputError);
  CHECK_THROWS_AS(parse_valuation(R"({"items":["a"],"values":{"a":"1"}})"), io::InputError);
  // cap
  std::string many = R"({"items":[)";
  for (int i = 0; i < 17; ++i) many += (i ? "," : "") + std::string("\"i") + std::to_string(i) + "\"";
  many += R"(],"type":"additive","values":{}})";
  CHECK_THROWS_WITH_AS(parse_valuation(many), doctest::Contains("more than 16 items"),
                       io::InputError);
  // non-monotone tables surface the witness pair
  CHECK_THROWS_WITH_AS(parse_valuation(
                           R"({"items":["a","b"],"type":"table","values":{"a":"5","b":"4","ab":"3"}})"),
                       doctest::Contains("not weakly increasing"), MonotonicityViolation);
}

TEST_CASE("bundle keys are sorted concatenations of item names") {
  std::vector<std::string> items{"z", "x", "y"};  // universe order differs from name order
  CHECK(io::bundle_key(items, Bundle::from_mask(0b011)) == "xz");
  CHECK(io::bundle_key(items, Bundle()) == "");
  CHECK(io::parse_bundle_key(items, "xz", "t") == Bundle::from_mask(0b011));
  CHECK(io::parse_bundle_key(items, "", "t") == Bundle());
  CHECK_THROWS_AS(io::parse_bundle_key(items, "zx", "t"), io::InputError);  // unsorted
  CHECK_THROWS_AS(io::parse_bundle_key(items, "xx", "t"), io::InputError);  // repeated
  CHECK_THROWS_AS(io::parse_bundle_key(items, "w", "t"), io::InputError);   // unknown

  SUBCASE("multi-character names parse unambiguously when possible") {
    std::vector<std::string> multi{"alpha", "beta"};
    CHECK(io::parse_bundle_key(multi, "alphabeta", "t") == Bundle::from_mask(0b11));
  }
  SUBCASE("genuinely ambiguous keys are rejected") {
    std::vector<std::string> tricky{"a", "ab", "b"};
    // "ab" is both {ab} and {a,b}
    CHECK_THROWS_WITH_AS(io::parse_bundle_key(tricky, "ab", "t"),
                         doctest::Contains("ambiguous"), io::InputError);
    // unambiguous keys in the same universe still work
    CHECK(io::parse_bundle_key(tricky, "aab", "t") == Bundle::from_mask(0b011));
    CHECK(io::parse_bundle_key(tricky, "abb", "t") == Bundle::from_mask(0b110));
  }
}

TEST_CASE("price documents must cover the universe exactly") {
  auto items = ex1::items();
  CHECK_THROWS_WITH_AS(
      io::prices_from_json(json::parse(R"({"x":"1","y":"2"})"), items, "t"),
      doctest::Contains("missing price for item 'z'"), io::InputError);
  CHECK_THROWS_WITH_AS(
      io::prices_from_json(json::parse(R"({"x":"1","y":"2","z":"3","w":"4"})"), items, "t"),
      doctest::Contains("unknown item 'w'"), io::InputError);
  PriceVector p = io::prices_from_json(json::parse(R"({"x":"-5","y":"1/2","z":"3"})"), items, "t");
  CHECK(p[0] == Rational(-5));  // negative prices are allowed
  CHECK(p[1] == Rational(1, 2));
}

TEST_CASE("serialized valuations round-trip") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Valuation u = gen_valuation({4, seed, ValuationFamily::monotone_random, 0, 60});
    Valuation back = io::valuation_from_json(io::valuation_to_json(u), "round-trip");
    CHECK(back == static_cast<const SetFunction&>(u));
    CHECK(back.label() == u.label());  // seed-carrying label survives
  }
}

TEST_CASE("missing files and broken JSON report the path") {
  CHECK_THROWS_WITH_AS(io::load_valuation("/nonexistent/v.json"),
                       doctest::Contains("/nonexistent/v.json"), io::InputError);
}
