#include "closc/cyclic.hpp"

#include "support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace closc;
using testsupport::rand_in_open;

namespace {

CyclicSpectrumSpec make_spec(Rational w0, Rational w1, Rational w2) {
  return CyclicSpectrumSpec(3, {std::move(w0), std::move(w1), std::move(w2)});
}

// Random positive spacing triple normalized to Omega = 3.
CyclicSpectrumSpec random_spec(std::mt19937& gen) {
  for (;;) {
    const Rational u = rand_in_open(gen, 0, 1, 97);
    const Rational v = rand_in_open(gen, 0, 1, 89);
    const Rational w = rand_in_open(gen, 0, 1, 83);
    const Rational total = u + v + w;
    CyclicSpectrumSpec spec =
        make_spec(3 * u / total, 3 * v / total, 3 * w / total);
    if (spec.omega_sum == 3) return spec;
  }
}

}  // namespace

TEST_CASE("rescaled spectrum examples") {
  SECTION("alpha=(0,1,-1)") {
    const auto levels =
        rescaled_spectrum(AlgebraParams(3, {Rational(0), Rational(1)}), 7);
    const Rational expected[] = {0,           Rational(3, 2), Rational(5, 2),
                                 3,           Rational(9, 2), Rational(11, 2),
                                 6};
    REQUIRE(levels.size() == 7);
    for (int i = 0; i < 7; ++i) CHECK(levels[i] == expected[i]);
  }
  SECTION("alpha=(4,-3,-1)") {
    const auto levels =
        rescaled_spectrum(AlgebraParams(3, {Rational(4), Rational(-3)}), 7);
    const Rational expected[] = {0, Rational(1, 2), Rational(3, 2), 3,
                                 Rational(7, 2), Rational(9, 2), 6};
    for (int i = 0; i < 7; ++i) CHECK(levels[i] == expected[i]);
  }
  SECTION("lambda=2: integers") {
    const auto levels = rescaled_spectrum(AlgebraParams(2, {Rational(5, 7)}), 6);
    for (int i = 0; i < 6; ++i) CHECK(levels[i] == Rational(i));
  }
  SECTION("degenerate spectra collapse to distinct values") {
    const auto levels =
        rescaled_spectrum(AlgebraParams(3, {Rational(2), Rational(2)}), 4);
    const Rational expected[] = {0, 3, 6, 9};
    for (int i = 0; i < 4; ++i) CHECK(levels[i] == expected[i]);
  }
}

TEST_CASE("extract_omegas") {
  SECTION("figure datasets") {
    const auto a = extract_omegas(AlgebraParams(3, {Rational(0), Rational(1)}));
    REQUIRE(a);
    CHECK(a->omega == std::vector<Rational>{Rational(3, 2), 1, Rational(1, 2)});
    CHECK(a->omega_sum == 3);

    const auto b = extract_omegas(AlgebraParams(3, {Rational(4), Rational(-3)}));
    REQUIRE(b);
    CHECK(b->omega == std::vector<Rational>{Rational(1, 2), 1, Rational(3, 2)});

    const auto c = extract_omegas(AlgebraParams(3, {Rational(6), Rational(-7)}));
    REQUIRE(c);
    CHECK(c->omega == std::vector<Rational>{Rational(3, 2), Rational(1, 2), 1});
  }
  SECTION("degenerate spectrum throws") {
    CHECK_THROWS_AS(extract_omegas(AlgebraParams(3, {Rational(2), Rational(2)})),
                    DegenerateSpectrum);
  }
  SECTION("wide sector spread is not periodic from the ground state") {
    const auto result =
        extract_omegas(AlgebraParams(3, {Rational(0), Rational(9)}));
    CHECK_FALSE(result.has_value());
  }
  SECTION("lambda=2 served with omega=(1,1)") {
    const auto result = extract_omegas(AlgebraParams(2, {Rational(3, 2)}));
    REQUIRE(result);
    CHECK(result->omega == std::vector<Rational>{1, 1});
    CHECK(result->omega_sum == 2);
  }
  SECTION("lambda=4 unsupported") {
    CHECK_THROWS_AS(
        extract_omegas(AlgebraParams(4, {Rational(0), Rational(0), Rational(0)})),
        UnsupportedLambda);
  }
}

TEST_CASE("match_omegas examples") {
  SECTION("(3/2,1,1/2) -> alpha=(0,1,-1)") {
    const auto result = match_omegas(make_spec(Rational(3, 2), 1, Rational(1, 2)));
    REQUIRE(result);
    CHECK(result->primary.params == AlgebraParams(3, {Rational(0), Rational(1)}));
    CHECK(result->primary.branch == GroundOrder::I);
  }
  SECTION("(1,1,1) -> undeformed oscillator") {
    const auto result = match_omegas(make_spec(1, 1, 1));
    REQUIRE(result);
    CHECK(result->primary.params == AlgebraParams(3, {Rational(0), Rational(0)}));
  }
  SECTION("(1/2,1,3/2): case-II preimage (4,-3,-1) is reported") {
    const auto result = match_omegas(make_spec(Rational(1, 2), 1, Rational(3, 2)));
    REQUIRE(result);
    const AlgebraParams figure_1b(3, {Rational(4), Rational(-3)});
    bool found = result->primary.params == figure_1b;
    for (const auto& alt : result->alternatives)
      found = found || alt.params == figure_1b;
    CHECK(found);
    // every reported solution must round-trip exactly
    const CyclicSpectrumSpec spec = make_spec(Rational(1, 2), 1, Rational(3, 2));
    const auto check_roundtrip = [&](const OmegaMatch& m) {
      const auto extracted = extract_omegas(m.params);
      REQUIRE(extracted);
      CHECK(*extracted == spec);
    };
    check_roundtrip(result->primary);
    for (const auto& alt : result->alternatives) check_roundtrip(alt);
  }
  SECTION("invalid specs rejected") {
    CHECK_THROWS_AS(make_spec(1, 1, Rational(-1)), InvalidSpec);
    CHECK_THROWS_AS(match_omegas(make_spec(1, 1, 2)), InvalidSpec);
  }
}

TEST_CASE("round trip extract(match(spec)) = spec") {
  std::mt19937 gen(10001);
  for (int trial = 0; trial < 60; ++trial) {
    const CyclicSpectrumSpec spec = random_spec(gen);
    const auto result = match_omegas(spec);
    REQUIRE(result);
    const auto extracted = extract_omegas(result->primary.params);
    REQUIRE(extracted);
    CHECK(*extracted == spec);
    for (const auto& alt : result->alternatives) {
      const auto alt_extracted = extract_omegas(alt.params);
      REQUIRE(alt_extracted);
      CHECK(*alt_extracted == spec);
    }
  }
}

TEST_CASE("round trip match(extract(p)) reproduces the rescaled spectrum") {
  std::mt19937 gen(10002);
  int matched = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const AlgebraParams p = testsupport::rand_admissible_l3(gen, 6, 2);
    const Spectrum probe = compute_spectrum(p, 12);
    if (!probe.degeneracy_groups.empty()) continue;
    const auto spec = extract_omegas(p);
    if (!spec) continue;
    ++matched;
    const auto result = match_omegas(*spec);
    REQUIRE(result);
    CHECK(rescaled_spectrum(result->primary.params, 12) ==
          rescaled_spectrum(p, 12));
  }
  CHECK(matched > 10);
}

TEST_CASE("gap periodicity holds for every nondegenerate admitted pattern") {
  std::mt19937 gen(10003);
  for (int trial = 0; trial < 40; ++trial) {
    const CyclicSpectrumSpec spec = random_spec(gen);
    const auto result = match_omegas(spec);
    REQUIRE(result);
    const auto levels = rescaled_spectrum(result->primary.params, 16);
    for (std::size_t i = 0; i + 4 < levels.size(); ++i) {
      CHECK(levels[i + 4] - levels[i + 3] == levels[i + 1] - levels[i]);
    }
  }
}
