// omegalab: command-line front end.
//
//   omegalab prog list|run|decide
//   omegalab omega approx|enclose|bits|flips
//   omegalab tau bits
//   omegalab reduce linear|bisect|base
//   omegalab dio solve|parity|finitude|valuepoly|values
//
// Output is JSON on stdout (or CSV with --format csv). Failures print a JSON
// error object on stderr and exit with 2 (usage/input), 3 (resource guard)
// or 4 (unresolved certification).

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "omega/dio/family.hpp"
#include "omega/dio/lab.hpp"
#include "omega/error.hpp"
#include "omega/halting.hpp"
#include "omega/machine.hpp"
#include "omega/omega.hpp"
#include "omega/reductions.hpp"
#include "omega/serialize.hpp"

namespace {

using omega::Json;

constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitUnresolved = 4;

struct Report {
  Json doc;
  std::string table;  // array member rendered as CSV rows, if any
  int exit_code = 0;
};

std::string csv_cell(const Json& v) {
  std::string s;
  if (v.is_null()) return s;
  if (v.is_string()) {
    s = v.get<std::string>();
  } else if (v.is_array()) {
    for (const auto& item : v) {
      if (!s.empty()) s += ';';
      s += item.is_string() ? item.get<std::string>() : item.dump();
    }
  } else {
    s = v.dump();
  }
  if (s.find_first_of(",\"\n") != std::string::npos) {
    std::string quoted = "\"";
    for (char c : s) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    return quoted + "\"";
  }
  return s;
}

void flatten(const Json& obj, const std::string& prefix,
             std::vector<std::pair<std::string, Json>>& out) {
  for (const auto& [key, value] : obj.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object()) {
      flatten(value, name, out);
    } else {
      out.emplace_back(name, value);
    }
  }
}

std::string render_csv(const Report& r) {
  std::ostringstream out;
  if (!r.table.empty() && r.doc.contains(r.table) &&
      r.doc[r.table].is_array()) {
    const Json& rows = r.doc[r.table];
    if (!rows.empty() && rows.front().is_object()) {
      std::vector<std::pair<std::string, Json>> cols;
      flatten(rows.front(), "", cols);
      for (std::size_t i = 0; i < cols.size(); ++i) {
        out << (i ? "," : "") << cols[i].first;
      }
      out << '\n';
      for (const auto& row : rows) {
        std::vector<std::pair<std::string, Json>> cells;
        flatten(row, "", cells);
        for (std::size_t i = 0; i < cells.size(); ++i) {
          out << (i ? "," : "") << csv_cell(cells[i].second);
        }
        out << '\n';
      }
    } else {
      out << r.table << '\n';
      for (const auto& v : rows) out << csv_cell(v) << '\n';
    }
    return out.str();
  }
  std::vector<std::pair<std::string, Json>> cells;
  flatten(r.doc, "", cells);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    out << (i ? "," : "") << cells[i].first;
  }
  out << '\n';
  for (std::size_t i = 0; i < cells.size(); ++i) {
    out << (i ? "," : "") << csv_cell(cells[i].second);
  }
  out << '\n';
  return out.str();
}

void print_error(std::string_view kind, const std::string& message,
                 const Json& extra = Json::object()) {
  Json err = {{"error", kind}, {"message", message}};
  for (const auto& [k, v] : extra.items()) err[k] = v;
  std::cerr << err.dump() << '\n';
}

struct Options {
  std::string format = "json";
  bool meta = false;

  std::string program;
  unsigned n0 = 0;
  std::optional<unsigned> n0_max;
  std::uint64_t index = 0;
  std::uint64_t budget = 100000;
  unsigned k = 0;
  unsigned base = 2;
  std::uint64_t n_max = 0;
  std::uint64_t box = 0;
  std::string file;
  std::string expr;
  std::vector<std::string> params;
  std::string mode = "decided";
  bool log = false;
  bool lemma = false;
};

omega::dio::Family load_family(const Options& o) {
  if (!o.file.empty() && !o.expr.empty()) {
    throw omega::Error(omega::ErrorKind::InvalidArgument,
                       "give either --file or --expr, not both");
  }
  if (!o.file.empty()) return omega::dio::load_family(o.file);
  if (!o.expr.empty()) return omega::dio::parse_family(o.expr);
  throw omega::Error(omega::ErrorKind::InvalidArgument,
                     "a family is required (--file or --expr)");
}

omega::dio::Assignment parse_params(const Options& o, bool include_k) {
  omega::dio::Assignment out;
  for (const auto& item : o.params) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw omega::Error(omega::ErrorKind::InvalidArgument,
                         "--param expects name=value, got '" + item + "'");
    }
    try {
      out[item.substr(0, eq)] = omega::BigInt(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw omega::Error(omega::ErrorKind::InvalidArgument,
                         "--param value is not an integer: '" + item + "'");
    }
  }
  if (include_k) out["k"] = o.k;
  return out;
}

omega::dio::Assignment without(omega::dio::Assignment a,
                               std::initializer_list<const char*> names) {
  for (const char* n : names) a.erase(n);
  return a;
}

unsigned n0_max_of(const Options& o, const omega::OmegaEngine& engine) {
  return o.n0_max.value_or(engine.limits().default_n0_max);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Halting-probability workbench for a toy self-delimiting machine"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--meta", o.meta, "Print provenance to stderr");

  omega::OmegaEngine engine;
  std::function<Report()> action;

  auto add_family_flags = [&](CLI::App* cmd) {
    cmd->add_option("--file", o.file, "Family file");
    cmd->add_option("--expr", o.expr, "Inline family expression");
    cmd->add_option("--param", o.params, "Extra parameter, name=value");
  };

  // prog
  auto* prog = app.add_subcommand("prog", "Programs of the toy language");
  prog->require_subcommand(1);
  auto* prog_list = prog->add_subcommand("list", "Enumerate programs in shortlex order");
  prog_list->add_option("--n0", o.n0, "Largest payload length")->required();
  prog_list->callback([&] {
    action = [&] {
      Json programs = Json::array();
      for (const auto& p : omega::enumerate_programs(o.n0)) {
        Json j = omega::to_json(p);
        programs.push_back(std::move(j));
      }
      const std::size_t count = programs.size();
      return Report{{{"max_payload", o.n0},
                     {"count", count},
                     {"programs", std::move(programs)}},
                    "programs"};
    };
  });

  auto* prog_run = prog->add_subcommand("run", "Run a program under a step budget");
  prog_run->add_option("program", o.program, "Program bits")->required();
  prog_run->add_option("--budget", o.budget, "Step budget")
      ->check(CLI::PositiveNumber);
  prog_run->callback([&] {
    action = [&] {
      const auto p = omega::decode_program(o.program);
      Json j = {{"program", p.raw().str()}};
      j.update(omega::to_json(omega::run(p, o.budget)));
      return Report{std::move(j), ""};
    };
  });

  auto* prog_decide = prog->add_subcommand("decide", "Decide halting");
  prog_decide->add_option("program", o.program, "Program bits")->required();
  prog_decide->callback([&] {
    action = [&] {
      const auto p = omega::decode_program(o.program);
      Json j = {{"program", p.raw().str()}};
      j.update(omega::to_json(omega::decide_halting(p)));
      return Report{std::move(j), ""};
    };
  });

  // omega
  auto* om = app.add_subcommand("omega", "Halting probability of the toy machine");
  om->require_subcommand(1);
  auto* om_approx = om->add_subcommand("approx", "Length- and step-bounded partial sum");
  om_approx->add_option("--index", o.index, "Bound i on length and steps")->required();
  om_approx->callback([&] {
    action = [&] {
      return Report{{{"i", o.index},
                     {"value", omega::to_json(engine.omega_approx(o.index))}},
                    ""};
    };
  });

  auto* om_enclose = om->add_subcommand("enclose", "Certified enclosure");
  om_enclose->add_option("--n0", o.n0, "Payload bound")->required();
  om_enclose->callback([&] {
    action = [&] {
      Json j = {{"n0", o.n0}};
      j.update(omega::to_json(engine.omega_enclosure(o.n0)));
      return Report{std::move(j), ""};
    };
  });

  auto* om_bits = om->add_subcommand("bits", "Certified leading bits");
  om_bits->add_option("--k", o.k, "Number of bits")->required()->check(CLI::PositiveNumber);
  om_bits->add_option("--n0-max", o.n0_max, "Refinement budget");
  om_bits->callback([&] {
    action = [&] {
      const auto bits = engine.certified_bits(o.k, n0_max_of(o, engine));
      return Report{omega::to_json(bits), "",
                    bits.certified ? 0 : kExitUnresolved};
    };
  });

  auto* om_flips = om->add_subcommand("flips", "Changes of bit k over the partial sums");
  om_flips->add_option("--k", o.k, "Bit position")->required()->check(CLI::PositiveNumber);
  om_flips->add_option("--nmax", o.n_max, "Last partial-sum index")->required();
  om_flips->add_option("--n0-max", o.n0_max, "Settlement check level");
  om_flips->callback([&] {
    action = [&] {
      Json j = {{"k", o.k}, {"n_max", o.n_max}};
      j.update(omega::to_json(engine.flip_census(o.k, o.n_max, o.n0_max)));
      return Report{std::move(j), ""};
    };
  });

  // tau
  auto* tau = app.add_subcommand("tau", "Halting bits in shortlex order");
  tau->require_subcommand(1);
  auto* tau_bits = tau->add_subcommand("bits", "First n bits of tau");
  tau_bits->add_option("--index", o.index, "Number of bits")->required()->check(CLI::PositiveNumber);
  tau_bits->add_option("--mode", o.mode, "decided|bounded")
      ->check(CLI::IsMember({"decided", "bounded"}));
  tau_bits->add_option("--budget", o.budget, "Step budget in bounded mode");
  tau_bits->callback([&] {
    action = [&] {
      const auto mode = o.mode == "decided" ? omega::TauMode::Decided
                                            : omega::TauMode::StepBounded;
      return Report{omega::to_json(omega::tau_bits(o.index, mode, o.budget)), ""};
    };
  });

  // reduce
  auto* reduce = app.add_subcommand("reduce", "Omega bits from threshold queries");
  reduce->require_subcommand(1);
  auto* red_linear = reduce->add_subcommand("linear", "Ask all 2^k - 1 thresholds");
  auto* red_bisect = reduce->add_subcommand("bisect", "Adaptive search, at most k queries");
  auto* red_base = reduce->add_subcommand("base", "Base-b digits by bisection");
  for (auto* cmd : {red_linear, red_bisect, red_base}) {
    cmd->add_option("--k", o.k, "Number of digits")->required()->check(CLI::PositiveNumber);
    cmd->add_option("--n0-max", o.n0_max, "Refinement budget per query");
    cmd->add_flag("--log", o.log, "Include the query log");
  }
  red_base->add_option("--base", o.base, "Base b >= 2")->required()->check(CLI::Range(2u, 1u << 16));
  red_linear->callback([&] {
    action = [&] {
      return Report{omega::to_json(omega::linear_scan(engine, o.k, n0_max_of(o, engine)), o.log),
                    o.log ? "queries" : ""};
    };
  });
  red_bisect->callback([&] {
    action = [&] {
      return Report{omega::to_json(omega::bisect(engine, o.k, n0_max_of(o, engine)), o.log),
                    o.log ? "queries" : ""};
    };
  });
  red_base->callback([&] {
    action = [&] {
      return Report{omega::to_json(omega::digits_base_b(engine, o.k, o.base, n0_max_of(o, engine)), o.log),
                    o.log ? "queries" : ""};
    };
  });

  // dio
  auto* dio = app.add_subcommand("dio", "Diophantine family laboratory");
  dio->require_subcommand(1);
  auto* dio_solve = dio->add_subcommand("solve", "All solutions inside a box");
  add_family_flags(dio_solve);
  dio_solve->add_option("--k", o.k, "Value of parameter k");
  dio_solve->add_option("--box", o.box, "Upper bound for every unknown")->required();
  dio_solve->callback([&] {
    action = [&] {
      const auto fam = load_family(o);
      auto params = parse_params(o, fam.has_param("k"));
      const auto box = omega::dio::Box::uniform(fam.unknowns.size(), o.box);
      return Report{omega::dio::to_json(omega::dio::solve_in_box(fam, params, box), fam),
                    "solutions"};
    };
  });

  auto* dio_parity = dio->add_subcommand("parity", "Count solvable N and report parity");
  auto* dio_finitude = dio->add_subcommand("finitude", "Bounded count of solvable N");
  for (auto* cmd : {dio_parity, dio_finitude}) {
    add_family_flags(cmd);
    cmd->add_option("--k", o.k, "Value of parameter k")->required();
    cmd->add_option("--nmax", o.n_max, "Largest N")->required();
    cmd->add_option("--box", o.box, "Upper bound for every unknown")->required();
  }
  dio_parity->callback([&] {
    action = [&] {
      const auto fam = load_family(o);
      const auto box = omega::dio::Box::uniform(fam.unknowns.size(), o.box);
      const auto extra = without(parse_params(o, false), {"k", "N"});
      return Report{omega::dio::to_json(
                        omega::dio::parity_census(fam, o.k, o.n_max, box, extra)),
                    "flags"};
    };
  });
  dio_finitude->callback([&] {
    action = [&] {
      const auto fam = load_family(o);
      const auto box = omega::dio::Box::uniform(fam.unknowns.size(), o.box);
      const auto extra = without(parse_params(o, false), {"k", "N"});
      return Report{omega::dio::to_json(
                        omega::dio::finitude_census(fam, o.k, o.n_max, box, extra)),
                    ""};
    };
  });

  auto* dio_valuepoly = dio->add_subcommand("valuepoly", "Build x0*(1 - D^2)");
  add_family_flags(dio_valuepoly);
  dio_valuepoly->callback([&] {
    action = [&] {
      auto fam = load_family(o);
      if (!fam.has_unknown("x0") && fam.has_param("N")) {
        fam = omega::dio::promote_parameter(fam, "N");
      }
      const auto poly = omega::dio::build_value_poly(fam);
      Json j = omega::dio::to_json(poly);
      j["text"] = poly.to_text();
      return Report{std::move(j), ""};
    };
  });

  auto* dio_values = dio->add_subcommand("values", "Positive values over a box");
  add_family_flags(dio_values);
  dio_values->add_option("--k", o.k, "Value of parameter k");
  dio_values->add_option("--box", o.box, "Upper bound for every unknown")->required();
  dio_values->add_flag("--lemma", o.lemma, "Build the value polynomial first");
  dio_values->callback([&] {
    action = [&] {
      auto fam = load_family(o);
      if (o.lemma) {
        if (!fam.has_unknown("x0") && fam.has_param("N")) {
          fam = omega::dio::promote_parameter(fam, "N");
        }
        fam = omega::dio::build_value_poly(fam);
      }
      const auto box = omega::dio::Box::uniform(fam.unknowns.size(), o.box);
      const auto extra = without(parse_params(o, false), {"k"});
      Json values = Json::array();
      for (const auto& v : omega::dio::positive_values(fam, o.k, box, extra)) {
        values.push_back(omega::to_decimal(v));
      }
      const std::size_t count = values.size();
      return Report{{{"expr", omega::dio::to_string(*fam.expr)},
                     {"count", count},
                     {"parity", count % 2 ? "odd" : "even"},
                     {"values", std::move(values)}},
                    "values"};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (o.meta) {
    Json argv_json = Json::array();
    for (int i = 0; i < argc; ++i) argv_json.push_back(argv[i]);
    std::cerr << Json{{"tool", "omegalab"}, {"version", "0.1.0"}, {"argv", argv_json}}.dump()
              << '\n';
  }

  try {
    const Report report = action();
    if (o.format == "csv") {
      std::cout << render_csv(report);
    } else {
      std::cout << report.doc.dump(2) << '\n';
    }
    return report.exit_code;
  } catch (const omega::UnresolvedError& e) {
    print_error("Unresolved", e.what(),
                {{"n0_max", e.n0_max()}, {"witness", omega::to_json(e.witness())}});
    return kExitUnresolved;
  } catch (const omega::Error& e) {
    print_error(omega::error_kind_name(e.kind()), e.what());
    return e.kind() == omega::ErrorKind::ResourceGuard ? kExitResource : kExitUsage;
  }
}
