#include "omega/reductions.hpp"

#include <string>

#include "omega/error.hpp"
#include "omega/halting.hpp"
#include "omega/machine.hpp"

namespace omega {

namespace {

void require_k(unsigned k) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "k must be at least 1");
}

// Greatest N in [0, base^k) with N / base^k < Omega. N = 0 and N = base^k
// are never asked: they bracket the search as known-true and known-false.
BigInt search_threshold(ThresholdOracle& oracle, unsigned base, unsigned k) {
  BigInt lo = 0;
  BigInt hi = ipow(BigInt(base), k);
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) / 2;
    if (oracle.below_omega(mid, base, k)) {
      lo = std::move(mid);
    } else {
      hi = std::move(mid);
    }
  }
  return lo;
}

}  // namespace

TauBits tau_bits(std::uint64_t n, TauMode mode, std::uint64_t budget,
                 const Limits& limits) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "n must be at least 1");
  if (n > limits.max_enum_programs) {
    throw Error(ErrorKind::ResourceGuard,
                "tau prefix of " + std::to_string(n) +
                    " bits exceeds the enumeration cap");
  }
  TauBits out;
  out.n = n;
  out.mode = mode;
  out.budget = mode == TauMode::StepBounded ? budget : 0;
  for (std::uint64_t i = 1; i <= n; ++i) {
    const Program p = program_at_index(i);
    const bool halts = mode == TauMode::Decided ? decide_halting(p).halts()
                                                : run(p, budget).halted();
    out.bits.push_back(halts);
  }
  return out;
}

ThresholdOracle::ThresholdOracle(OmegaEngine& engine, unsigned n0_max)
    : engine_(engine), n0_max_(n0_max) {}

bool ThresholdOracle::below_omega(const BigInt& n, unsigned base, unsigned k) {
  DyadicInterval enc;
  for (unsigned n0 = 0; n0 <= n0_max_; ++n0) {
    enc = engine_.omega_enclosure(n0);
    if (enc.lower.compare_fraction(n, base, k) > 0) {
      log_.entries.push_back({n, true});
      return true;
    }
    if (enc.upper.compare_fraction(n, base, k) <= 0) {
      log_.entries.push_back({n, false});
      return false;
    }
  }
  throw UnresolvedError("threshold " + to_decimal(n) + "/" +
                            std::to_string(base) + "^" + std::to_string(k) +
                            " not separated from Omega by n0 = " +
                            std::to_string(n0_max_),
                        n0_max_, enc);
}

bool q_oracle(OmegaEngine& engine, unsigned k, const BigInt& n,
              unsigned n0_max) {
  require_k(k);
  if (n < 1 || n >= pow2(k)) {
    throw Error(ErrorKind::RangeError, "N must lie in 1..2^k-1");
  }
  ThresholdOracle oracle(engine, n0_max);
  return oracle.below_omega(n, 2, k);
}

ReductionResult linear_scan(OmegaEngine& engine, unsigned k, unsigned n0_max) {
  require_k(k);
  if (k > engine.limits().max_linear_k) {
    throw Error(ErrorKind::ResourceGuard,
                "linear scan over 2^" + std::to_string(k) +
                    " - 1 queries exceeds the cap");
  }
  ThresholdOracle oracle(engine, n0_max);
  ReductionResult out;
  out.k = k;
  out.q = 0;
  const BigInt end = pow2(k);
  for (BigInt n = 1; n < end; ++n) {
    if (oracle.below_omega(n, 2, k)) out.q = n;
  }
  out.bits = decode_bits(out.q, k);
  out.log = oracle.take_log();
  return out;
}

ReductionResult bisect(OmegaEngine& engine, unsigned k, unsigned n0_max) {
  require_k(k);
  ThresholdOracle oracle(engine, n0_max);
  ReductionResult out;
  out.k = k;
  out.q = search_threshold(oracle, 2, k);
  out.bits = decode_bits(out.q, k);
  out.log = oracle.take_log();
  return out;
}

BitString decode_bits(const BigInt& q, unsigned k) {
  require_k(k);
  if (q < 0 || q >= pow2(k)) {
    throw Error(ErrorKind::RangeError,
                to_decimal(q) + " does not fit in " + std::to_string(k) +
                    " binary digits");
  }
  return BitString::from_integer(q, k);
}

std::vector<unsigned> decode_digits(const BigInt& q, unsigned base,
                                    unsigned k) {
  require_k(k);
  if (base < 2) throw Error(ErrorKind::InvalidArgument, "base must be >= 2");
  if (q < 0 || q >= ipow(BigInt(base), k)) {
    throw Error(ErrorKind::RangeError,
                to_decimal(q) + " does not fit in " + std::to_string(k) +
                    " base-" + std::to_string(base) + " digits");
  }
  std::vector<unsigned> digits(k, 0);
  BigInt rest = q;
  for (unsigned i = k; i-- > 0;) {
    digits[i] = static_cast<unsigned>(rest % base);
    rest /= base;
  }
  return digits;
}

BaseDigits digits_base_b(OmegaEngine& engine, unsigned k, unsigned base,
                         unsigned n0_max) {
  require_k(k);
  if (base < 2) throw Error(ErrorKind::InvalidArgument, "base must be >= 2");
  ThresholdOracle oracle(engine, n0_max);
  BaseDigits out;
  out.k = k;
  out.base = base;
  out.q = search_threshold(oracle, base, k);
  out.digit = static_cast<unsigned>(out.q % base);
  out.digits = decode_digits(out.q, base, k);
  out.log = oracle.take_log();
  return out;
}

}  // namespace omega
