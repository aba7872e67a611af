#include <doctest.h>

#include <algorithm>
#include <random>

#include "curvecal/cobordism.hpp"
#include "curvecal/error.hpp"

using namespace curvecal;

namespace {

CriticalRecord rec(std::string id, int index, std::map<std::string, std::int64_t> inc = {}) {
  return {std::move(id), index, std::move(inc)};
}

// Sorted (index, id, incidence) triples; order independent.
std::vector<CriticalRecord> as_multiset(const CobordismChain& c) {
  std::vector<CriticalRecord> v = c.records();
  std::sort(v.begin(), v.end(),
            [](const auto& a, const auto& b) { return std::tie(a.index, a.id) < std::tie(b.index, b.id); });
  return v;
}

CobordismChain lens_chain(std::int64_t pairing) {
  return build_chain({rec("m", 0), rec("h", 1, {{"c", pairing}}), rec("c", 2), rec("M", 3)});
}

}  // namespace

TEST_CASE("build_chain") {
  CobordismChain s3 = build_chain({rec("m", 0), rec("M", 3)});
  CHECK(s3.type() == MorseType{1, 0, 0, 1});
  CHECK(s3.closed());
  CHECK(s3.euler_characteristic() == 0);

  CobordismChain lens = lens_chain(5);
  CHECK(lens.type() == MorseType{1, 1, 1, 1});
  CHECK(lens.incidence("h", "c") == 5);
  CHECK(lens.incidence("c", "h") == 5);
  CHECK(lens.incidence("m", "c") == 0);

  CobordismChain open = build_chain({rec("m", 0), rec("h", 1)});
  CHECK_FALSE(open.closed());

  CHECK_THROWS_AS(build_chain({rec("x", 4)}), Error);
  CHECK_THROWS_AS(build_chain({rec("x", -1)}), Error);
  CHECK_THROWS_AS(build_chain({rec("x", 0), rec("x", 3)}), Error);
  CHECK_THROWS_AS(build_chain({rec("", 0)}), Error);
  CHECK_THROWS_AS(build_chain({rec("m", 0, {{"ghost", 1}}), rec("M", 3)}), Error);
  // Incidence must point one index up.
  CHECK_THROWS_AS(build_chain({rec("m", 0, {{"c", 1}}), rec("h", 1), rec("c", 2), rec("M", 3)}),
                  Error);
  CHECK_THROWS_AS(build_chain({rec("m", 0), rec("h", 1), rec("c", 2, {{"h", 1}}), rec("M", 3)}),
                  Error);
  // Closed with nonzero Euler characteristic.
  CHECK_THROWS_AS(build_chain({rec("m", 0), rec("h", 1), rec("M", 3)}), Error);
}

TEST_CASE("boundary_genus_profile") {
  CHECK(boundary_genus_profile(lens_chain(5)) == std::vector<int>{0, 1, 0});
  CobordismChain g2 = build_chain({rec("m", 0), rec("h1", 1), rec("h2", 1, {{"c2", 1}}),
                                   rec("c1", 2), rec("c2", 2), rec("M", 3)});
  CHECK(boundary_genus_profile(g2) == std::vector<int>{0, 1, 2, 1, 0});
  CHECK(boundary_genus_profile(build_chain({rec("m", 0), rec("M", 3)})) == std::vector<int>{0});

  CHECK_THROWS_AS(
      boundary_genus_profile(build_chain({rec("m", 0), rec("c", 2), rec("h", 1), rec("M", 3)})),
      Error);
  CHECK_THROWS_AS(boundary_genus_profile(build_chain({rec("m1", 0), rec("m2", 0),
                                                      rec("h", 1), rec("M", 3)})),
                  Error);
}

TEST_CASE("rearrange") {
  CobordismChain g2 = build_chain({rec("m", 0), rec("h1", 1, {{"c1", 2}}), rec("h2", 1),
                                   rec("c1", 2), rec("c2", 2), rec("M", 3)});
  CobordismChain swapped = rearrange(g2, {0, 2, 1, 3, 4, 5});
  CHECK(swapped.records()[1].id == "h2");
  CHECK(swapped.type() == g2.type());
  CHECK(as_multiset(swapped) == as_multiset(g2));

  CHECK(rearrange(g2, {0, 1, 2, 3, 4, 5}) == g2);

  // c1 is paired with h1 and may not move ahead of it.
  CHECK_THROWS_AS(rearrange(g2, {0, 3, 1, 2, 4, 5}), Error);
  // c2 has no pairing with h2, so it may pass both 1-points.
  CHECK_NOTHROW(rearrange(g2, {0, 4, 1, 2, 3, 5}));

  CHECK_THROWS_AS(rearrange(g2, {0, 1, 2}), Error);
  CHECK_THROWS_AS(rearrange(g2, {0, 0, 1, 2, 3, 4}), Error);
}

TEST_CASE("cancel_pair") {
  SUBCASE("unit pairing between 1- and 2-points") {
    CobordismChain c = cancel_pair(lens_chain(1), "h", "c");
    CHECK(c.type() == MorseType{1, 0, 0, 1});
    CHECK(cancel_pair(lens_chain(-1), "h", "c").type() == MorseType{1, 0, 0, 1});
  }
  SUBCASE("extra minimum") {
    CobordismChain c = build_chain({rec("m1", 0), rec("m2", 0, {{"h", 1}}), rec("h", 1),
                                    rec("M", 3)});
    CHECK(c.type() == MorseType{2, 1, 0, 1});
    CobordismChain after = cancel_pair(c, "m2", "h");
    CHECK(after.type() == MorseType{1, 0, 0, 1});
  }
  SUBCASE("obstructions") {
    CHECK_THROWS_AS(cancel_pair(lens_chain(5), "h", "c"), Error);
    CHECK(cancel_obstruction(lens_chain(5), "h", "c")->find("5") != std::string::npos);
    CHECK_THROWS_AS(cancel_pair(lens_chain(1), "m", "c"), Error);
    CHECK_THROWS_AS(cancel_pair(lens_chain(1), "c", "h"), Error);
    CHECK_THROWS_AS(cancel_pair(lens_chain(1), "h", "zz"), Error);
  }
  SUBCASE("slides past independent records and leaves others alone") {
    CobordismChain c = build_chain({rec("m", 0), rec("h1", 1, {{"c1", 1}}),
                                    rec("h2", 1, {{"c2", 3}}), rec("c2", 2), rec("c1", 2),
                                    rec("M", 3)});
    CobordismChain after = cancel_pair(c, "h1", "c1");
    CHECK(after.type() == MorseType{1, 1, 1, 1});
    CHECK(after.incidence("h2", "c2") == 3);
  }
  SUBCASE("blocked slide") {
    // x sits between the pair and is paired with both.
    CobordismChain c = build_chain({rec("m", 0), rec("h", 1, {{"x", 2}, {"c", 1}}),
                                    rec("x", 2, {{"M", 1}}), rec("h2", 1, {{"x", 1}}),
                                    rec("c", 2), rec("M", 3)});
    CHECK_THROWS_AS(cancel_pair(c, "h", "c"), Error);
    CHECK(cancel_obstruction(c, "h", "c").has_value());
  }
  SUBCASE("dangling incidence is stripped") {
    CobordismChain c = build_chain({rec("m", 0, {{"h", 1}, {"h2", 1}}), rec("m2", 0, {{"h", 1}}),
                                    rec("h", 1), rec("h2", 1), rec("c", 2), rec("M", 3)});
    CobordismChain after = cancel_pair(c, "m2", "h");
    CHECK(after.find("m")->incidence.count("h") == 0);
    CHECK(after.incidence("m", "h2") == 1);
  }
}

TEST_CASE("normalize") {
  SUBCASE("extra minimum") {
    CobordismChain c = build_chain({rec("m1", 0), rec("m2", 0, {{"h1", 1}}), rec("h1", 1),
                                    rec("h2", 1, {{"c", 5}}), rec("c", 2), rec("M", 3)});
    CHECK(c.type() == MorseType{2, 2, 1, 1});
    Normalization n = normalize(c);
    CHECK(n.chain.type() == MorseType{1, 1, 1, 1});
    REQUIRE(n.moves.size() == 1);
    CHECK(n.moves[0].lower == "m2");
    CHECK(n.moves[0].upper == "h1");
    CHECK(n.moves[0].type_after == MorseType{1, 1, 1, 1});
  }
  SUBCASE("unit pairing cancels to the sphere") {
    Normalization n = normalize(lens_chain(-1));
    CHECK(n.chain.type() == MorseType{1, 0, 0, 1});
    REQUIRE(n.moves.size() == 1);
    CHECK(n.moves[0].pairing == -1);
  }
  SUBCASE("lens chain is already minimal") {
    Normalization n = normalize(lens_chain(5));
    CHECK(n.chain == lens_chain(5));
    CHECK(n.moves.empty());
  }
  SUBCASE("last minimum and maximum survive") {
    CobordismChain c = build_chain({rec("m", 0, {{"h", 1}}), rec("h", 1, {{"c", 1}}), rec("c", 2, {{"M", 1}}),
                                    rec("M", 3)});
    Normalization n = normalize(c);
    CHECK(n.chain.type() == MorseType{1, 0, 0, 1});
    REQUIRE(n.moves.size() == 1);
    CHECK(n.moves[0].lower == "h");
  }
  SUBCASE("lowest pair first") {
    CobordismChain c = build_chain({rec("m", 0), rec("a", 1, {{"y", 1}}), rec("b", 1, {{"x", 1}}),
                                    rec("x", 2), rec("y", 2), rec("M", 3)});
    Normalization n = normalize(c);
    REQUIRE(n.moves.size() == 2);
    CHECK(n.moves[0].lower == "a");
    CHECK(n.moves[0].upper == "y");
  }
}

TEST_CASE("dual_chain") {
  CobordismChain c = build_chain({rec("m1", 0), rec("m2", 0, {{"h", 1}}), rec("h", 1, {{"c", 4}}),
                                  rec("h0", 1), rec("c", 2), rec("M", 3)});
  CobordismChain d = dual_chain(c);
  CHECK(d.type() == MorseType{1, 1, 2, 2});
  CHECK(d.records().front().id == "M");
  CHECK(d.find("c")->index == 1);
  CHECK(d.incidence("c", "h") == 4);
  CHECK(d.find("c")->incidence.at("h") == 4);
  CHECK(dual_chain(d) == c);
}

TEST_CASE("moves preserve Euler characteristic on random chains") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = static_cast<int>(rng() % 4);
    const int extra_min = static_cast<int>(rng() % 3);
    const int extra_max = static_cast<int>(rng() % 3);
    std::vector<CriticalRecord> recs;
    recs.push_back(rec("m0", 0));
    for (int e = 0; e < extra_min; ++e) {
      recs.push_back(rec("m" + std::to_string(e + 1), 0, {{"p" + std::to_string(e), 1}}));
      recs.push_back(rec("p" + std::to_string(e), 1));
    }
    for (int i = 0; i < k; ++i) {
      const std::int64_t v = static_cast<std::int64_t>(rng() % 5) - 2;
      std::map<std::string, std::int64_t> inc;
      if (v != 0) inc["c" + std::to_string(i)] = v;
      recs.push_back(rec("h" + std::to_string(i), 1, inc));
    }
    for (int i = 0; i < k; ++i) recs.push_back(rec("c" + std::to_string(i), 2));
    for (int e = 0; e < extra_max; ++e) {
      recs.push_back(rec("q" + std::to_string(e), 2, {{"M" + std::to_string(e + 1), -1}}));
      recs.push_back(rec("M" + std::to_string(e + 1), 3));
    }
    recs.push_back(rec("M0", 3));
    CobordismChain c = build_chain(recs);
    CHECK(c.euler_characteristic() == 0);

    Normalization n = normalize(c);
    CHECK(n.chain.euler_characteristic() == 0);
    CHECK(n.chain.type()[0] == 1);
    CHECK(n.chain.type()[3] == 1);
    CHECK(n.chain.type()[1] == n.chain.type()[2]);
    CHECK(n.moves.size() <= c.records().size() / 2);
    CHECK(n.chain.records().size() == c.records().size() - 2 * n.moves.size());
    for (const auto& m : n.moves) {
      CHECK(m.type_after[0] - m.type_after[1] + m.type_after[2] - m.type_after[3] == 0);
    }
    // Sorted chains keep a consistent profile after normalization.
    std::vector<CriticalRecord> sorted = n.chain.records();
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const auto& a, const auto& b) { return a.index < b.index; });
    auto profile = boundary_genus_profile(build_chain(sorted));
    CHECK(profile.size() == 1 + 2 * static_cast<std::size_t>(n.chain.type()[1]));
    CHECK(profile.back() == 0);

    CHECK(dual_chain(dual_chain(c)) == c);
    CHECK(normalize(dual_chain(c)).chain.type()[1] == n.chain.type()[1]);
  }
}
