// Copyright 2026 The ufrac Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ufrac/applications.hpp"
#include "ufrac/denom_spec.hpp"
#include "ufrac/search.hpp"

namespace ufrac::cli {
namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

json to_json(const DenomMultiset& d) { return json(d.elements()); }

json to_json(const std::vector<DenomMultiset>& reps) {
  json arr = json::array();
  for (const auto& rep : reps) arr.push_back(to_json(rep));
  return arr;
}

SearchOptions progress_options(bool enabled, std::ostream& err) {
  SearchOptions options;
  if (enabled) {
    options.progress = [&err](const SearchStats& s) {
      err << "branches=" << s.branches_expanded << " representations=" << s.representations_found
          << std::endl;
    };
  }
  return options;
}

std::vector<std::uint64_t> parse_bounds(const std::string& text) {
  std::vector<std::uint64_t> out;
  for (const auto& e : parse_denom_spec(text).elements()) out.push_back(e);
  return out;
}

struct SolveArgs {
  std::string denoms;
  std::string target;
  bool first = false;
  bool json = false;
  bool progress = false;
};

int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
  const DenomMultiset d = parse_denom_spec(args.denoms);
  const Rational r = Rational::parse(args.target);
  const SearchOptions options = progress_options(args.progress, err);
  const auto start = Clock::now();
  SearchStats stats;
  std::vector<DenomMultiset> reps;
  if (args.first) {
    if (auto rep = ufrac_early_stopping(d, r, options, &stats)) reps.push_back(std::move(*rep));
  } else {
    reps = ufrac(d, r, options, &stats);
  }
  if (args.json) {
    json doc = {{"target", r.to_string()},
                {"complete", !args.first},
                {"count", reps.size()},
                {"representations", to_json(reps)},
                {"stats",
                 {{"branches_expanded", stats.branches_expanded},
                  {"elapsed_ms", elapsed_ms(start)}}}};
    out << doc.dump() << "\n";
  } else {
    for (const auto& rep : reps) out << format_denom_spec(rep) << "\n";
    if (reps.empty()) err << "no representation of " << r << "\n";
  }
  return reps.empty() ? kNotFound : kFound;
}

struct GValueArgs {
  std::string target;
  std::optional<std::uint64_t> n_start;
  std::uint64_t n_max = 100'000;
  bool first = false;
  bool json = false;
  bool progress = false;
};

int cmd_gvalue(const GValueArgs& args, std::ostream& out, std::ostream& err) {
  const Rational r = Rational::parse(args.target);
  if (r.sign() <= 0) throw InvalidInput("gvalue needs a positive target");
  const std::uint64_t n_start = args.n_start.value_or(harmonic_lower_bound(r));
  const auto start = Clock::now();
  std::optional<GValue> g =
      compute_g(r, n_start, args.n_max, !args.first, progress_options(args.progress, err));
  if (args.json) {
    json doc = {{"target", r.to_string()}, {"found", g.has_value()}};
    if (g) {
      doc["g"] = g->g;
      doc["minimal"] = g->minimal;
      doc["complete"] = g->all_witnesses;
      doc["count"] = g->witnesses.size();
      doc["witnesses"] = to_json(g->witnesses);
    }
    doc["stats"] = {{"elapsed_ms", elapsed_ms(start)}};
    out << doc.dump() << "\n";
  } else if (g) {
    out << "G=" << g->g << "\n";
    out << (g->all_witnesses ? "witnesses: " : "witnesses (first only): ") << g->witnesses.size()
        << "\n";
    for (const auto& w : g->witnesses) out << format_denom_spec(w) << "\n";
    if (!g->minimal) err << "note: {1.." << g->g - 1 << "} was not searched\n";
  } else {
    err << "no representation of " << r << " in {1.." << args.n_max << "}\n";
  }
  return g ? kFound : kNotFound;
}

struct ConjectureArgs {
  std::uint64_t d_lo = 0;
  std::uint64_t d_hi = 0;
  std::uint64_t c_max = 1000;
  std::string bounds = "100,200,400";
  std::size_t candidates = 10;
  bool json = false;
};

int cmd_conjecture(const ConjectureArgs& args, std::ostream& out) {
  const auto rows = verify_conjecture_range(args.d_lo, args.d_hi, args.c_max,
                                            parse_bounds(args.bounds), args.candidates);
  bool all_found = true;
  json doc = json::array();
  for (const auto& row : rows) {
    all_found = all_found && row.witness.has_value();
    if (args.json) {
      json j = {{"d", row.d}, {"bound", row.bound}};
      j["c"] = row.c ? json(*row.c) : json(nullptr);
      j["witness"] = row.witness ? to_json(*row.witness) : json(nullptr);
      doc.push_back(std::move(j));
    } else {
      out << row.to_string() << "\n";
    }
  }
  if (args.json) out << json{{"rows", doc}}.dump() << "\n";
  return all_found ? kFound : kNotFound;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unit fraction representations with restricted denominators", "ufrac"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "All (or one) submultisets with reciprocal sum equal to a target");
  solve_cmd->add_option("--denoms", solve.denoms, "Denominators, e.g. '2,3,4,12', '1..10', 'squares(1..35)'")
      ->required();
  solve_cmd->add_option("--target", solve.target, "Target rational p/q >= 0")->required();
  solve_cmd->add_flag("--first", solve.first, "Stop at the first representation");
  solve_cmd->add_flag("--json", solve.json, "Machine-readable output");
  solve_cmd->add_flag("--progress", solve.progress, "Report branch counts on stderr");

  GValueArgs gvalue;
  auto* g_cmd = app.add_subcommand("gvalue", "Smallest n such that a subset of {1..n} represents r");
  auto* g_pos = g_cmd->add_option("r", gvalue.target, "Target rational r > 0");
  auto* g_opt = g_cmd->add_option("--target", gvalue.target, "Target rational r > 0");
  g_pos->excludes(g_opt);
  g_cmd->add_option("--n-start", gvalue.n_start, "First n to try (default: harmonic lower bound)");
  g_cmd->add_option("--n-max", gvalue.n_max, "Last n to try")->capture_default_str();
  g_cmd->add_flag("--first", gvalue.first, "Report one witness instead of all");
  g_cmd->add_flag("--json", gvalue.json, "Machine-readable output");
  g_cmd->add_flag("--progress", gvalue.progress, "Report branch counts on stderr");

  ConjectureArgs conj;
  auto* c_cmd = app.add_subcommand("conjecture", "Witnesses with second-largest denominator d");
  c_cmd->add_option("d_lo", conj.d_lo, "First d (>= 5)")->required();
  c_cmd->add_option("d_hi", conj.d_hi, "Last d")->required();
  c_cmd->add_option("--c-max", conj.c_max, "Largest multiplier c considered")->capture_default_str();
  c_cmd->add_option("--bounds", conj.bounds, "Increasing bound schedule")->capture_default_str();
  c_cmd->add_option("--candidates", conj.candidates, "Multipliers tried per d")->capture_default_str();
  c_cmd->add_flag("--json", conj.json, "Machine-readable output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kInvalidInput;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve, out, err);
    if (*g_cmd) {
      if (gvalue.target.empty()) throw InvalidInput("gvalue needs a target");
      return cmd_gvalue(gvalue, out, err);
    }
    return cmd_conjecture(conj, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const ResourceLimit& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
}

}  // namespace ufrac::cli
