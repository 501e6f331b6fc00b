#pragma once

// Bounded search over Diophantine families, and the value-polynomial
// construction x0 * (1 - D^2) whose positive values are exactly the x0 for
// which D = 0 is solvable.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "omega/bigint.hpp"
#include "omega/dio/family.hpp"
#include "omega/limits.hpp"

namespace omega::dio {

using Assignment = std::map<std::string, BigInt>;

/// Inclusive upper bound per unknown; lower bounds are 1. A bound of 0 makes
/// the box empty.
struct Box {
  std::vector<std::uint64_t> upper;

  static Box uniform(std::size_t dims, std::uint64_t bound) {
    return Box{std::vector<std::uint64_t>(dims, bound)};
  }
  /// Number of points, saturating at UINT64_MAX.
  std::uint64_t volume() const;
};

struct SolutionSet {
  Assignment params;
  Box box;
  std::vector<std::vector<std::uint64_t>> solutions;  // lexicographic
};

/// Every point of the box where D = 0, in lexicographic order of unknowns.
SolutionSet solve_in_box(const Family& d, const Assignment& params,
                         const Box& box,
                         const Limits& limits = default_limits());

struct ParityCensus {
  BigInt k;
  std::uint64_t n_max = 0;
  std::vector<bool> solvable;                  // index N - 1
  std::vector<std::uint64_t> solution_counts;  // index N - 1
  std::uint64_t count = 0;
  bool odd = false;
};

/// For N = 1..n_max, whether D(k, N, x) = 0 has a solution in the box. D
/// must declare parameters k and N; other parameters come from `extra`.
ParityCensus parity_census(const Family& d, const BigInt& k,
                           std::uint64_t n_max, const Box& box,
                           const Assignment& extra = {},
                           const Limits& limits = default_limits());

/// Bounded stand-in for "finitely vs infinitely many N": only N <= n_max and
/// solutions inside the box are seen.
struct FinitudeCensus {
  std::uint64_t n_max = 0;
  std::uint64_t solvable_count = 0;
  std::optional<std::uint64_t> last_solvable;
};

FinitudeCensus finitude_census(const Family& d, const BigInt& k,
                               std::uint64_t n_max, const Box& box,
                               const Assignment& extra = {},
                               const Limits& limits = default_limits());

/// Turns parameter `param` into the unknown x0, placed first.
Family promote_parameter(const Family& d, const std::string& param = "N");

/// P = x0 * (1 - D^2). D must declare parameter k and unknown x0.
Family build_value_poly(const Family& d);

/// Positive values P takes over the box (which spans all of P's unknowns).
std::set<BigInt> positive_values(const Family& p, const BigInt& k,
                                 const Box& box,
                                 const Assignment& extra = {},
                                 const Limits& limits = default_limits());

}  // namespace omega::dio
