#include <doctest.h>

#include "omega/error.hpp"
#include "omega/halting.hpp"
#include "omega/machine.hpp"
#include "omega/reductions.hpp"

using namespace omega;

namespace {

constexpr unsigned kN0Max = 24;

std::string digit_string(const std::vector<unsigned>& ds) {
  std::string s;
  for (unsigned d : ds) s += static_cast<char>('0' + d);
  return s;
}

}  // namespace

TEST_CASE("tau_bits: pinned examples") {
  CHECK(tau_bits(1, TauMode::Decided).bits.str() == "1");
  CHECK(tau_bits(3, TauMode::Decided).bits.str() == "111");
}

TEST_CASE("tau_bits: decided bits follow shortlex analyzer verdicts") {
  const TauBits t = tau_bits(1023, TauMode::Decided);
  const auto ps = enumerate_programs(9);
  REQUIRE(ps.size() == 1023);
  for (std::size_t i = 0; i < ps.size(); ++i) {
    CHECK(t.bits[i] == decide_halting(ps[i]).halts());
  }
}

TEST_CASE("tau_bits: step-bounded bits never exceed decided bits") {
  const TauBits decided = tau_bits(2047, TauMode::Decided);
  for (std::uint64_t budget : {1u, 2u, 5u, 50u}) {
    const TauBits bounded = tau_bits(2047, TauMode::StepBounded, budget);
    CHECK(bounded.budget == budget);
    for (std::size_t i = 0; i < decided.bits.size(); ++i) {
      if (bounded.bits[i]) CHECK(decided.bits[i]);
    }
  }
  // With a generous budget they coincide (halting runs are short here).
  CHECK(tau_bits(2047, TauMode::StepBounded, 1000).bits == decided.bits);
}

TEST_CASE("q_oracle") {
  OmegaEngine engine;
  CHECK(q_oracle(engine, 1, 1, kN0Max));
  CHECK_THROWS_AS(q_oracle(engine, 3, 0, kN0Max), Error);
  CHECK_THROWS_AS(q_oracle(engine, 3, 8, kN0Max), Error);

  // Threshold structure: true then false.
  for (unsigned k = 1; k <= 9; ++k) {
    bool seen_false = false;
    for (BigInt n = 1; n < pow2(k); ++n) {
      const bool a = q_oracle(engine, k, n, kN0Max);
      if (seen_false) CHECK_FALSE(a);
      if (!a) seen_false = true;
    }
  }
}

TEST_CASE("q_oracle: boundary stall is an error, not a loop") {
  OmegaEngine engine;
  try {
    q_oracle(engine, 12, 4076, 5);
    FAIL("expected Unresolved");
  } catch (const UnresolvedError& e) {
    CHECK(e.kind() == ErrorKind::Unresolved);
    CHECK(e.n0_max() == 5);
    CHECK(e.witness() == engine.omega_enclosure(5));
  }
}

TEST_CASE("linear_scan and bisect agree with certified bits") {
  OmegaEngine engine;
  BigInt prev_q = 0;
  for (unsigned k = 1; k <= 12; ++k) {
    const auto lin = linear_scan(engine, k, kN0Max);
    const auto bis = bisect(engine, k, kN0Max);
    const auto cert = engine.certified_bits(k, kN0Max);
    REQUIRE(cert.certified);
    CHECK(lin.log.count() == (std::size_t{1} << k) - 1);
    CHECK(bis.log.count() <= k);
    REQUIRE_FALSE(bis.log.entries.empty());
    CHECK(bis.log.entries.front().n == pow2(k - 1));
    CHECK(lin.q == bis.q);
    CHECK(lin.bits == cert.bits);
    CHECK(bis.bits == cert.bits);
    CHECK(decode_bits(bis.q, k) == cert.bits);
    CHECK(((bis.q % 2) == 1) == cert.bits[k - 1]);
    if (k > 1) CHECK((bis.q == 2 * prev_q || bis.q == 2 * prev_q + 1));
    prev_q = bis.q;
  }
}

TEST_CASE("linear_scan: k = 1 asks exactly N = 1") {
  OmegaEngine engine;
  const auto r = linear_scan(engine, 1, kN0Max);
  REQUIRE(r.log.count() == 1);
  CHECK(r.log.entries[0].n == 1);
}

TEST_CASE("bisect: query count up to k = 16 and adaptive replay") {
  OmegaEngine engine;
  for (unsigned k = 1; k <= 16; ++k) {
    const auto r = bisect(engine, k, 40);
    CHECK(r.log.count() <= k);
    // Each query is the midpoint implied by the answers before it.
    BigInt lo = 0;
    BigInt hi = pow2(k);
    for (const auto& q : r.log.entries) {
      CHECK(q.n == (lo + hi) / 2);
      (q.answer ? lo : hi) = q.n;
    }
    CHECK(hi - lo == 1);
    CHECK(lo == r.q);
  }
}

TEST_CASE("decode_bits") {
  CHECK(decode_bits(6, 5).str() == "00110");
  CHECK(decode_bits(0, 3).str() == "000");
  CHECK(decode_bits(pow2(7) - 1, 7).str() == "1111111");
  try {
    decode_bits(8, 3);
    FAIL("expected RangeError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RangeError);
  }
}

TEST_CASE("digits_base_b") {
  OmegaEngine engine;
  for (unsigned k = 1; k <= 10; ++k) {
    const auto two = digits_base_b(engine, k, 2, kN0Max);
    const auto bis = bisect(engine, k, kN0Max);
    CHECK(two.q == bis.q);
    CHECK(two.log.entries == bis.log.entries);
  }
  for (unsigned base : {3u, 10u}) {
    BigInt prev = 0;
    for (unsigned k = 1; k <= 6; ++k) {
      const auto d = digits_base_b(engine, k, base, kN0Max);
      CHECK(d.q >= base * prev);
      CHECK(d.q <= base * prev + (base - 1));
      CHECK(d.digit == d.digits.back());
      prev = d.q;
    }
  }
  // 0.99519656...
  CHECK(digit_string(digits_base_b(engine, 3, 10, kN0Max).digits) == "995");
  CHECK(decode_digits(5, 3, 4) == std::vector<unsigned>{0, 0, 1, 2});
  CHECK_THROWS_AS(decode_digits(81, 3, 4), Error);
}
