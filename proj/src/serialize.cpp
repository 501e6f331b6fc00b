#include "omega/serialize.hpp"

namespace omega {

Json to_json(const Program& p) {
  Json instructions = Json::array();
  for (Opcode op : p.instructions()) instructions.push_back(opcode_name(op));
  return {{"raw", p.raw().str()},
          {"payload_len", p.payload_len()},
          {"instructions", std::move(instructions)}};
}

Json to_json(const RunOutcome& r) {
  if (r.halted()) return {{"kind", "halted"}, {"steps", r.steps}};
  return {{"kind", "out_of_budget"}, {"budget", r.steps}};
}

Json to_json(const PassOutcome& r) {
  switch (r.kind) {
    case PassOutcome::Kind::HaltInPass:
      return {{"kind", "halt_in_pass"}, {"steps_in_pass", r.steps_in_pass}};
    case PassOutcome::Kind::FallOff:
      return {{"kind", "fall_off"}, {"steps_in_pass", r.steps_in_pass}};
    case PassOutcome::Kind::BranchBack:
      break;
  }
  return {{"kind", "branch_back"},
          {"steps_in_pass", r.steps_in_pass},
          {"next_r", to_decimal(r.next_r)}};
}

Json to_json(const HaltingVerdict& v) {
  // Verdict step counts and witnesses are bounded by a small polynomial in
  // the program size, so they are emitted as plain integers.
  if (v.halts()) {
    return {{"kind", "halts"}, {"steps", v.steps.convert_to<std::int64_t>()}};
  }
  return {{"kind", "diverges"},
          {"reason", v.reason == HaltingVerdict::Reason::CycleDetected
                         ? "cycle_detected"
                         : "escape_nonnegative_delta"},
          {"witness", v.witness.convert_to<std::int64_t>()}};
}

Json to_json(const DyadicRational& d) {
  return {{"num", to_decimal(d.numerator())}, {"exp", d.exponent()}};
}

Json to_json(const DyadicInterval& i) {
  return {{"lower", to_json(i.lower)}, {"upper", to_json(i.upper)}};
}

Json to_json(const OmegaBits& b) {
  return {{"k", b.k},
          {"bits", b.bits.str()},
          {"certified", b.certified},
          {"n0", b.n0},
          {"enclosure", to_json(b.enclosure)}};
}

Json to_json(const FlipCensus& f) {
  return {{"flips", f.flips},
          {"final_bit", f.final_bit ? 1 : 0},
          {"settled", f.settled}};
}

Json to_json(const TauBits& t) {
  Json j = {{"n", t.n},
            {"bits", t.bits.str()},
            {"mode", t.mode == TauMode::Decided ? "decided" : "bounded"}};
  if (t.mode == TauMode::StepBounded) j["budget"] = t.budget;
  return j;
}

Json to_json(const OracleLog& log) {
  Json queries = Json::array();
  for (const auto& q : log.entries) {
    queries.push_back({{"N", to_decimal(q.n)}, {"answer", q.answer}});
  }
  return queries;
}

Json to_json(const ReductionResult& r, bool with_log) {
  Json j = {{"k", r.k},
            {"q", to_decimal(r.q)},
            {"bits", r.bits.str()},
            {"query_count", r.log.count()}};
  if (with_log) j["queries"] = to_json(r.log);
  return j;
}

Json to_json(const BaseDigits& r, bool with_log) {
  std::string digits;
  for (unsigned d : r.digits) {
    if (!digits.empty() && r.base > 10) digits += ',';
    digits += std::to_string(d);
  }
  Json j = {{"k", r.k},
            {"base", r.base},
            {"q", to_decimal(r.q)},
            {"digit", r.digit},
            {"digits", digits},
            {"query_count", r.log.count()}};
  if (with_log) j["queries"] = to_json(r.log);
  return j;
}

namespace dio {

Json to_json(const Family& f) {
  return {{"params", f.params},
          {"unknowns", f.unknowns},
          {"expr", to_string(*f.expr)},
          {"exponential", f.exponential()}};
}

Json to_json(const SolutionSet& s, const Family& f) {
  Json params = Json::object();
  for (const auto& [name, value] : s.params) params[name] = to_decimal(value);
  Json solutions = Json::array();
  for (const auto& point : s.solutions) {
    Json row = Json::object();
    for (std::size_t i = 0; i < point.size(); ++i) {
      row[f.unknowns[i]] = point[i];
    }
    solutions.push_back(std::move(row));
  }
  return {{"family", to_json(f)},
          {"params", std::move(params)},
          {"box", s.box.upper},
          {"count", s.solutions.size()},
          {"solutions", std::move(solutions)}};
}

Json to_json(const ParityCensus& c) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < c.solvable.size(); ++i) {
    rows.push_back({{"N", i + 1},
                    {"solvable", static_cast<bool>(c.solvable[i])},
                    {"solutions", c.solution_counts[i]}});
  }
  return {{"k", to_decimal(c.k)},
          {"n_max", c.n_max},
          {"count", c.count},
          {"parity", c.odd ? "odd" : "even"},
          {"flags", std::move(rows)}};
}

Json to_json(const FinitudeCensus& c) {
  Json j = {{"n_max", c.n_max},
            {"solvable_count", c.solvable_count},
            {"last_solvable", nullptr},
            {"bounded_proxy", true}};
  if (c.last_solvable) j["last_solvable"] = *c.last_solvable;
  return j;
}

}  // namespace dio

}  // namespace omega
