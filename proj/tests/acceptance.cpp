// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "omega/bits.hpp"
#include "omega/dio/family.hpp"
#include "omega/dio/lab.hpp"
#include "omega/error.hpp"
#include "omega/halting.hpp"
#include "omega/machine.hpp"
#include "omega/omega.hpp"
#include "omega/reductions.hpp"

using namespace omega;
using Clock = std::chrono::steady_clock;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream why;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) why << what;
    ok = ok && cond;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Independent description of a well-formed program: 1^n 0 followed by n bits.
bool is_header_form(const BitString& s) {
  std::size_t n = 0;
  while (n < s.size() && s[n]) ++n;
  return n < s.size() && s.size() == 2 * n + 1;
}

bool decodes(const BitString& s) {
  try {
    decode_program(s);
    return true;
  } catch (const Error&) {
    return false;
  }
}

void prefix_free(Check& c) {
  const auto start = Clock::now();
  std::size_t valid = 0;
  for (unsigned len = 0; len <= 17; ++len) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
      const BitString s = BitString::from_integer(v, len);
      const bool ok = decodes(s);
      c.expect(ok == is_header_form(s), "decoder disagrees on " + s.str());
      if (!ok) continue;
      ++valid;
      for (std::size_t cut = 0; cut < len; ++cut) {
        c.expect(!decodes(s.prefix(cut)), "proper prefix of " + s.str() + " is valid");
      }
    }
  }
  const double t = seconds_since(start);
  c.expect(valid == (std::size_t{1} << 9) - 1, "unexpected number of valid programs");
  c.expect(t < 10.0, "runtime " + std::to_string(t) + " s");
  c.why << (c.ok ? std::to_string(valid) + " programs, " + std::to_string(t) + " s" : "");
}

void kraft(Check& c) {
  using boost::multiprecision::cpp_rational;
  for (unsigned n0 = 0; n0 <= 12; ++n0) {
    cpp_rational sum = 0;
    for (const auto& p : enumerate_programs(n0)) {
      sum += cpp_rational(1, BigInt(1) << p.raw().size());
    }
    c.expect(sum == 1 - cpp_rational(1, BigInt(1) << (n0 + 1)),
             "Kraft sum wrong at n0=" + std::to_string(n0));
  }
}

void soundness(Check& c) {
  const auto start = Clock::now();
  const std::uint64_t budget = 100000;
  std::size_t halts = 0;
  const auto programs = enumerate_programs(12);
  for (const auto& p : programs) {
    const auto v = decide_halting(p);
    const auto r = run(p, budget);
    if (v.kind == HaltingVerdict::Kind::Halts) {
      ++halts;
      c.expect(r.kind == RunOutcome::Kind::Halted && BigInt(r.steps) == v.steps,
               "Halts verdict does not replay for " + p.raw().str());
    } else {
      c.expect(r.kind == RunOutcome::Kind::OutOfBudget,
               "Diverges verdict but run halted for " + p.raw().str());
    }
  }
  const double t = seconds_since(start);
  c.expect(t < 60.0, "runtime " + std::to_string(t) + " s");
  if (c.ok) {
    c.why << programs.size() << " programs, " << halts << " halt, " << t << " s";
  }
}

void omega_machinery(Check& c) {
  OmegaEngine engine;
  for (std::uint64_t i = 1; i <= 24; ++i) {
    c.expect(engine.omega_approx(i - 1) <= engine.omega_approx(i),
             "omega_approx not monotone at i=" + std::to_string(i));
  }
  for (unsigned n0 = 0; n0 <= 24; ++n0) {
    const auto e = engine.omega_enclosure(n0);
    c.expect(e.width() == DyadicRational(1, n0 + 1), "enclosure width at n0=" + std::to_string(n0));
    if (n0 > 0) {
      const auto prev = engine.omega_enclosure(n0 - 1);
      c.expect(prev.lower <= e.lower && e.upper <= prev.upper,
               "enclosures not nested at n0=" + std::to_string(n0));
    }
  }
  for (unsigned k = 1; k <= 12; ++k) {
    const auto b = engine.certified_bits(k, 24);
    c.expect(b.certified, "certified_bits stalled at k=" + std::to_string(k));
    if (k == 12 && c.ok) c.why << "bits " << b.bits.str() << " certified by n0=" << b.n0;
  }
}

void reductions(Check& c) {
  OmegaEngine engine;
  for (unsigned k = 1; k <= 12; ++k) {
    const auto lin = linear_scan(engine, k, 24);
    const auto bis = bisect(engine, k, 24);
    const auto cert = engine.certified_bits(k, 24);
    const std::string ks = " at k=" + std::to_string(k);
    c.expect(lin.bits == bis.bits && bis.bits == cert.bits, "bit strings differ" + ks);
    c.expect(bis.log.count() <= k, "bisect used too many queries" + ks);
    c.expect(BigInt(lin.log.count()) == (BigInt(1) << k) - 1, "linear query count" + ks);
    c.expect(!bis.log.entries.empty() && bis.log.entries.front().n == (BigInt(1) << (k - 1)),
             "first bisect query" + ks);
  }
}

void parity(Check& c) {
  OmegaEngine engine;
  BigInt prev = 0;
  for (unsigned k = 1; k <= 12; ++k) {
    const auto r = bisect(engine, k, 24);
    const auto cert = engine.certified_bits(k, 24);
    const std::string ks = " at k=" + std::to_string(k);
    c.expect(((r.q & 1) == 1) == static_cast<bool>(cert.bits[k - 1]), "parity" + ks);
    c.expect(r.q == 2 * prev || r.q == 2 * prev + 1, "recurrence" + ks);
    c.expect(decode_bits(r.q, k) == cert.bits, "decode" + ks);
    prev = r.q;
  }
  c.expect(decode_bits(6, 5).str() == "00110", "decode_bits(6, 5)");
}

void finitude(Check& c) {
  OmegaEngine engine;
  for (unsigned k = 1; k <= 8; ++k) {
    const auto f = engine.flip_census(k, std::uint64_t{1} << (k + 2));
    const std::string ks = " at k=" + std::to_string(k);
    c.expect(f.flips <= (std::uint64_t{1} << k) - 1, "too many flips" + ks);
    if (f.settled) {
      c.expect(f.final_bit == static_cast<bool>(engine.certified_bits(k, 24).bits[k - 1]),
               "final bit" + ks);
    }
  }
}

std::set<BigInt> solvable_set(const dio::ParityCensus& census) {
  std::set<BigInt> out;
  for (std::size_t i = 0; i < census.solvable.size(); ++i) {
    if (census.solvable[i]) out.insert(i + 1);
  }
  return out;
}

void lemma(Check& c) {
  const auto start = Clock::now();
  const std::string dir = OMEGALAB_FAMILIES_DIR;
  const std::uint64_t bound = 32;
  std::size_t families = 0;
  for (const auto* name : {"below_k", "multiple_of_k", "square_offset", "sum_with_product",
                           "power_of_k"}) {
    const auto d = dio::load_family(dir + "/" + name + ".dpe");
    const auto p = dio::build_value_poly(dio::promote_parameter(d));
    for (unsigned k = 1; k <= 8; ++k) {
      const auto census =
          dio::parity_census(d, k, bound, dio::Box::uniform(d.unknowns.size(), bound));
      const auto values = dio::positive_values(p, k, dio::Box::uniform(p.unknowns.size(), bound));
      const std::string where = std::string(" for ") + name + " k=" + std::to_string(k);
      c.expect(values == solvable_set(census), "value set differs" + where);
      c.expect((values.size() % 2 == 1) == census.odd, "parity differs" + where);
    }
    ++families;
  }
  const double t = seconds_since(start);
  c.expect(t < 30.0, "runtime " + std::to_string(t) + " s");
  if (c.ok) c.why << families << " families, " << t << " s";
}

void base_digits(Check& c) {
  OmegaEngine engine;
  for (unsigned base : {2u, 3u, 10u}) {
    BigInt prev = 0;
    for (unsigned k = 1; k <= 6; ++k) {
      const auto d = digits_base_b(engine, k, base, 24);
      const std::string where = " base " + std::to_string(base) + " k=" + std::to_string(k);
      c.expect(d.q >= base * prev && d.q <= base * prev + (base - 1), "recurrence" + where);
      prev = d.q;
      // Find an enclosure whose every point shares its first k base-b digits.
      bool found = false;
      for (unsigned n0 = 0; n0 <= 24 && !found; ++n0) {
        const auto e = engine.omega_enclosure(n0);
        const BigInt lo = e.lower.floor_scaled(base, k);
        const BigInt hi = e.upper.floor_scaled(base, k);
        if (lo != hi) continue;
        found = true;
        std::vector<unsigned> expected(k);
        BigInt rest = lo;
        for (unsigned i = k; i-- > 0;) {
          expected[i] = static_cast<unsigned>(rest % base);
          rest /= base;
        }
        c.expect(expected == d.digits, "digits disagree with enclosure" + where);
      }
      c.expect(found, "no certifying enclosure" + where);
    }
  }
}

std::string capture(const std::string& args, int& status) {
  const std::string cmd = std::string("'") + OMEGALAB_CLI + "' " + args + " 2>&1";
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return out;
}

void determinism(Check& c) {
  const std::string fam = std::string("'") + OMEGALAB_FAMILIES_DIR + "/";
  const std::vector<std::string> commands{
      "prog list --n0 4",
      "--format csv prog list --n0 4",
      "prog run 1110001100 --budget 1000",
      "prog decide 111100010",
      "omega approx --index 21",
      "omega enclose --n0 16",
      "omega bits --k 12",
      "omega bits --k 12 --n0-max 3",
      "omega flips --k 6 --nmax 256",
      "tau bits --index 64 --mode decided",
      "tau bits --index 64 --mode bounded --budget 20",
      "reduce linear --k 6 --log",
      "reduce bisect --k 12 --log",
      "reduce base --k 6 --base 3 --log",
      "--format csv reduce bisect --k 8 --log",
      "dio solve --file " + fam + "sum_with_product.dpe' --param k=2 --param N=12 --box 12",
      "dio parity --file " + fam + "below_k.dpe' --k 5 --nmax 16 --box 16",
      "--format csv dio parity --file " + fam + "multiple_of_k.dpe' --k 3 --nmax 16 --box 16",
      "dio finitude --file " + fam + "square_offset.dpe' --k 2 --nmax 40 --box 8",
      "dio valuepoly --file " + fam + "power_of_k.dpe'",
      "dio values --file " + fam + "multiple_of_k.dpe' --k 3 --box 12 --lemma",
      "prog run 10",
      "prog list --n0 30",
  };
  for (const auto& args : commands) {
    int s1 = 0;
    int s2 = 0;
    const std::string a = capture(args, s1);
    const std::string b = capture(args, s2);
    c.expect(s1 >= 0 && s1 == s2 && a == b, "output differs for: " + args);
    c.expect(!a.empty(), "no output for: " + args);
  }
  if (c.ok) c.why << commands.size() << " commands";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"prefix-free code over bitstrings of length <= 17", prefix_free},
      {"Kraft identity for n0 = 0..12", kraft},
      {"halting analyzer consistent with run at budget 1e5", soundness},
      {"omega approximations, enclosures and certified bits", omega_machinery},
      {"linear scan, bisection and certified bits agree", reductions},
      {"parity, recurrence and decoding of q_k", parity},
      {"flip census bounded by 2^k - 1", finitude},
      {"value polynomial reproduces solvable sets", lemma},
      {"base-b digits for b = 2, 3, 10", base_digits},
      {"CLI output is byte-identical across runs", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.why << "exception: " << e.what();
    }
    if (!c.ok) ++failures;
    std::cout << (c.ok ? "PASS" : "FAIL") << "  criterion " << (i + 1) << ": "
              << criteria[i].first;
    if (!c.why.str().empty()) std::cout << " (" << c.why.str() << ")";
    std::cout << "\n";
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
