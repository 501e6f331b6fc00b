#include "omega/dio/lab.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include "omega/dio/eval.hpp"
#include "omega/error.hpp"

namespace omega::dio {

namespace {

std::vector<std::string> slot_names(const Family& f) {
  std::vector<std::string> names = f.params;
  names.insert(names.end(), f.unknowns.begin(), f.unknowns.end());
  return names;
}

std::vector<BigInt> bind_params(const Family& f, const Assignment& params) {
  std::vector<BigInt> slots;
  slots.reserve(f.params.size() + f.unknowns.size());
  for (const auto& name : f.params) {
    const auto it = params.find(name);
    if (it == params.end()) {
      throw Error(ErrorKind::InvalidArgument,
                  "no value given for parameter '" + name + "'");
    }
    slots.push_back(it->second);
  }
  slots.resize(f.params.size() + f.unknowns.size(), 1);
  return slots;
}

void check_box(const Family& f, const Box& box, std::uint64_t repeats,
               const Limits& limits) {
  if (box.upper.size() != f.unknowns.size()) {
    throw Error(ErrorKind::InvalidArgument,
                "box has " + std::to_string(box.upper.size()) +
                    " bounds for " + std::to_string(f.unknowns.size()) +
                    " unknowns");
  }
  const std::uint64_t volume = box.volume();
  if (volume > limits.max_box_points ||
      (repeats > 0 && volume > limits.max_box_points / repeats)) {
    throw Error(ErrorKind::ResourceGuard,
                "search volume exceeds the cap of " +
                    std::to_string(limits.max_box_points) + " points");
  }
}

// Calls fn() at every point of the box, unknown slots starting at `first`,
// last unknown varying fastest. fn returns false to stop early.
template <typename Fn>
void scan_box(const Box& box, std::vector<BigInt>& slots, std::size_t first,
              Fn&& fn) {
  if (std::any_of(box.upper.begin(), box.upper.end(),
                  [](std::uint64_t b) { return b == 0; })) {
    return;
  }
  std::vector<std::uint64_t> point(box.upper.size(), 1);
  for (std::size_t i = 0; i < point.size(); ++i) slots[first + i] = 1;
  for (;;) {
    if (!fn(std::as_const(point))) return;
    std::size_t d = point.size();
    for (;;) {
      if (d == 0) return;
      --d;
      if (point[d] < box.upper[d]) {
        ++point[d];
        slots[first + d] = point[d];
        break;
      }
      point[d] = 1;
      slots[first + d] = 1;
    }
  }
}

void require_census_params(const Family& d) {
  if (!d.has_param("k") || !d.has_param("N")) {
    throw Error(ErrorKind::InvalidArgument,
                "census families must declare parameters k and N");
  }
}

}  // namespace

std::uint64_t Box::volume() const {
  std::uint64_t v = 1;
  for (const std::uint64_t b : upper) {
    if (b == 0) return 0;
  }
  for (const std::uint64_t b : upper) {
    if (v > std::numeric_limits<std::uint64_t>::max() / b) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    v *= b;
  }
  return v;
}

SolutionSet solve_in_box(const Family& d, const Assignment& params,
                         const Box& box, const Limits& limits) {
  check_box(d, box, 1, limits);
  const CompiledExpr code(*d.expr, slot_names(d), limits);
  std::vector<BigInt> slots = bind_params(d, params);
  std::vector<BigInt> stack;

  SolutionSet out{params, box, {}};
  scan_box(box, slots, d.params.size(), [&](const auto& point) {
    if (code.evaluate(slots, stack) == 0) out.solutions.push_back(point);
    return true;
  });
  return out;
}

ParityCensus parity_census(const Family& d, const BigInt& k,
                           std::uint64_t n_max, const Box& box,
                           const Assignment& extra, const Limits& limits) {
  require_census_params(d);
  check_box(d, box, std::max<std::uint64_t>(n_max, 1), limits);
  const CompiledExpr code(*d.expr, slot_names(d), limits);
  Assignment params = extra;
  params["k"] = k;
  params["N"] = 0;
  std::vector<BigInt> slots = bind_params(d, params);
  const auto n_slot = static_cast<std::size_t>(
      std::find(d.params.begin(), d.params.end(), "N") - d.params.begin());
  std::vector<BigInt> stack;

  ParityCensus out;
  out.k = k;
  out.n_max = n_max;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    slots[n_slot] = n;
    std::uint64_t solutions = 0;
    scan_box(box, slots, d.params.size(), [&](const auto&) {
      if (code.evaluate(slots, stack) == 0) ++solutions;
      return true;
    });
    out.solvable.push_back(solutions > 0);
    out.solution_counts.push_back(solutions);
    if (solutions > 0) ++out.count;
  }
  out.odd = (out.count % 2) == 1;
  return out;
}

FinitudeCensus finitude_census(const Family& d, const BigInt& k,
                               std::uint64_t n_max, const Box& box,
                               const Assignment& extra, const Limits& limits) {
  require_census_params(d);
  check_box(d, box, std::max<std::uint64_t>(n_max, 1), limits);
  const CompiledExpr code(*d.expr, slot_names(d), limits);
  Assignment params = extra;
  params["k"] = k;
  params["N"] = 0;
  std::vector<BigInt> slots = bind_params(d, params);
  const auto n_slot = static_cast<std::size_t>(
      std::find(d.params.begin(), d.params.end(), "N") - d.params.begin());
  std::vector<BigInt> stack;

  FinitudeCensus out;
  out.n_max = n_max;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    slots[n_slot] = n;
    bool solvable = false;
    scan_box(box, slots, d.params.size(), [&](const auto&) {
      solvable = code.evaluate(slots, stack) == 0;
      return !solvable;
    });
    if (solvable) {
      ++out.solvable_count;
      out.last_solvable = n;
    }
  }
  return out;
}

Family promote_parameter(const Family& d, const std::string& param) {
  if (!d.has_param(param)) {
    throw Error(ErrorKind::InvalidArgument,
                "family has no parameter '" + param + "'");
  }
  if (d.has_unknown("x0") || d.has_param("x0")) {
    throw Error(ErrorKind::InvalidArgument, "family already uses x0");
  }
  Family out;
  for (const auto& p : d.params) {
    if (p != param) out.params.push_back(p);
  }
  out.unknowns.push_back("x0");
  out.unknowns.insert(out.unknowns.end(), d.unknowns.begin(), d.unknowns.end());
  out.expr = rename(d.expr, param, "x0");
  return out;
}

Family build_value_poly(const Family& d) {
  if (!d.has_param("k") || !d.has_unknown("x0")) {
    throw Error(ErrorKind::InvalidArgument,
                "value polynomial needs parameter k and unknown x0");
  }
  Family out = d;
  out.expr = mul(variable("x0"), sub(literal(1), pow(d.expr, literal(2))));
  return out;
}

std::set<BigInt> positive_values(const Family& p, const BigInt& k,
                                 const Box& box, const Assignment& extra,
                                 const Limits& limits) {
  check_box(p, box, 1, limits);
  const CompiledExpr code(*p.expr, slot_names(p), limits);
  Assignment params = extra;
  if (p.has_param("k")) params["k"] = k;
  std::vector<BigInt> slots = bind_params(p, params);
  std::vector<BigInt> stack;

  std::set<BigInt> values;
  scan_box(box, slots, p.params.size(), [&](const auto&) {
    BigInt v = code.evaluate(slots, stack);
    if (v > 0) values.insert(std::move(v));
    return true;
  });
  return values;
}

}  // namespace omega::dio
