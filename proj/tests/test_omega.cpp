#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>

#include <thread>

#include "omega/halting.hpp"
#include "omega/machine.hpp"
#include "omega/omega.hpp"

using namespace omega;
using boost::multiprecision::cpp_rational;

namespace {

cpp_rational as_rational(const DyadicRational& d) {
  return cpp_rational(d.numerator(), pow2(d.exponent()));
}

cpp_rational weight(const Program& p) {
  return cpp_rational(1, pow2(static_cast<unsigned>(p.length())));
}

// Literal definition: every program with |p| <= i, simulated for i steps.
cpp_rational brute_force_approx(std::uint64_t i) {
  cpp_rational sum = 0;
  if (i == 0) return sum;
  for (const auto& p : enumerate_programs(static_cast<unsigned>((i - 1) / 2))) {
    if (p.length() <= i && run(p, i).halted()) sum += weight(p);
  }
  return sum;
}

cpp_rational brute_force_lower(unsigned n0) {
  cpp_rational sum = 0;
  for (const auto& p : enumerate_programs(n0)) {
    if (decide_halting(p).halts()) sum += weight(p);
  }
  return sum;
}

}  // namespace

TEST_CASE("omega_approx: pinned examples") {
  OmegaEngine engine;
  CHECK(engine.omega_approx(0) == DyadicRational::zero());
  CHECK(engine.omega_approx(1) == DyadicRational::unit(1));
  CHECK(engine.omega_approx(2) == DyadicRational::unit(1));
}

TEST_CASE("omega_approx: counting and enumeration routes match brute force") {
  OmegaEngine counting;
  OmegaEngine enumeration(default_limits(), CensusRoute::Enumeration);
  for (std::uint64_t i = 0; i <= 25; ++i) {
    const cpp_rational expected = brute_force_approx(i);
    CHECK(as_rational(counting.omega_approx(i)) == expected);
    CHECK(as_rational(enumeration.omega_approx(i)) == expected);
  }
}

TEST_CASE("omega_approx: monotone") {
  OmegaEngine engine;
  DyadicRational prev = engine.omega_approx(0);
  for (std::uint64_t i = 1; i <= 400; ++i) {
    const DyadicRational cur = engine.omega_approx(i);
    CHECK(prev <= cur);
    prev = cur;
  }
}

TEST_CASE("omega_enclosure: pinned examples and structure") {
  OmegaEngine engine;
  CHECK(engine.omega_enclosure(0) ==
        DyadicInterval{DyadicRational::unit(1), DyadicRational::one()});
  CHECK(engine.omega_enclosure(1) ==
        DyadicInterval{DyadicRational(3, 2), DyadicRational::one()});

  DyadicInterval prev = engine.omega_enclosure(0);
  for (unsigned n0 = 0; n0 <= 40; ++n0) {
    const DyadicInterval enc = engine.omega_enclosure(n0);
    CHECK(enc.width() == DyadicRational::unit(n0 + 1));
    CHECK(prev.contains(enc));
    CHECK(enc.upper <= DyadicRational::one());
    prev = enc;
  }
}

TEST_CASE("omega_enclosure: lower end equals the analyzer's halting mass") {
  OmegaEngine counting;
  for (unsigned n0 = 0; n0 <= 12; ++n0) {
    CHECK(as_rational(counting.omega_enclosure(n0).lower) ==
          brute_force_lower(n0));
  }
  OmegaEngine enumeration(default_limits(), CensusRoute::Enumeration);
  for (unsigned n0 = 13; n0 <= 18; ++n0) {
    CHECK(counting.omega_enclosure(n0) == enumeration.omega_enclosure(n0));
  }
}

TEST_CASE("omega_enclosure: dominates every admissible partial sum") {
  OmegaEngine engine;
  for (unsigned n0 = 0; n0 <= 12; ++n0) {
    const auto upper = engine.omega_enclosure(n0).upper;
    for (std::uint64_t i = 0; i <= 2 * n0 + 1; ++i) {
      CHECK(engine.omega_approx(i) <= upper);
    }
  }
}

TEST_CASE("omega_enclosure: strictly inside (0, 1) eventually") {
  OmegaEngine engine;
  std::optional<unsigned> found;
  for (unsigned n0 = 0; n0 <= 24 && !found; ++n0) {
    const auto enc = engine.omega_enclosure(n0);
    if (DyadicRational::zero() < enc.lower && enc.upper < DyadicRational::one()) {
      found = n0;
    }
  }
  REQUIRE(found);
  CHECK(*found == 4);
}

TEST_CASE("certified_bits") {
  OmegaEngine engine;
  const OmegaBits one = engine.certified_bits(1, 8);
  CHECK(one.certified);
  CHECK(one.bits.str() == "1");

  BitString prev;
  for (unsigned k = 1; k <= 12; ++k) {
    const OmegaBits b = engine.certified_bits(k, 24);
    REQUIRE(b.certified);
    CHECK(b.bits.size() == k);
    CHECK(prev.is_prefix_of(b.bits));
    // Every point of the certifying enclosure has these k bits.
    CHECK(b.enclosure.lower.floor_scaled(2, k) == b.bits.to_integer());
    CHECK(b.enclosure.upper.floor_scaled(2, k) == b.bits.to_integer());
    prev = b.bits;
  }
  CHECK(prev.str() == "111111101100");
}

TEST_CASE("certified_bits: stalls surface as uncertified") {
  OmegaEngine engine;
  const OmegaBits b = engine.certified_bits(12, 3);
  CHECK_FALSE(b.certified);
  CHECK(b.n0 == 3);
  CHECK(b.enclosure == engine.omega_enclosure(3));
  CHECK_THROWS_AS(engine.certified_bits(0, 3), Error);
}

TEST_CASE("bit_of_approx: pinned examples") {
  OmegaEngine engine;
  CHECK(engine.bit_of_approx(1, 1));
  CHECK_FALSE(engine.bit_of_approx(2, 1));
  for (unsigned k = 1; k <= 20; ++k) CHECK_FALSE(engine.bit_of_approx(k, 0));
}

TEST_CASE("flip_census") {
  OmegaEngine engine;
  const FlipCensus first = engine.flip_census(1, 1);
  CHECK(first.flips == 1);
  CHECK(first.final_bit);

  for (unsigned k = 1; k <= 7; ++k) {
    for (std::uint64_t n_max : {std::uint64_t{1} << k, std::uint64_t{1} << (k + 2)}) {
      const FlipCensus c = engine.flip_census(k, n_max);
      CHECK(c.flips <= (std::uint64_t{1} << k) - 1);
      if (c.settled) {
        CHECK(c.final_bit == engine.certified_bits(k, 24).bits[k - 1]);
      }
    }
  }
}

TEST_CASE("resource guards") {
  Limits small;
  small.max_count_payload = 10;
  small.max_enum_payload = 10;
  OmegaEngine engine(small);
  CHECK_NOTHROW(engine.omega_approx(21));
  try {
    engine.omega_approx(23);
    FAIL("expected ResourceGuard");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ResourceGuard);
  }
  CHECK_THROWS_AS(engine.omega_enclosure(11), Error);
}

TEST_CASE("concurrent refinement agrees with sequential") {
  OmegaEngine shared;
  OmegaEngine reference;
  std::vector<std::thread> workers;
  std::vector<DyadicInterval> got(8);
  for (unsigned t = 0; t < got.size(); ++t) {
    workers.emplace_back([&, t] { got[t] = shared.omega_enclosure(20 + t); });
  }
  for (auto& w : workers) w.join();
  for (unsigned t = 0; t < got.size(); ++t) {
    CHECK(got[t] == reference.omega_enclosure(20 + t));
  }
}

TEST_CASE("census: step-bounded counts match enumeration") {
  HaltingCensus census;
  for (unsigned n = 0; n <= 14; ++n) {
    const std::uint64_t instructions = n / 2;
    for (std::uint64_t budget = 0; budget <= instructions + 2; ++budget) {
      CHECK(census.halting_within(n, budget) == enumerate_halting_within(n, budget));
    }
    CHECK(census.halting_programs(n) == enumerate_halting_programs(n));
  }
}
