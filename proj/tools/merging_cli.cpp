// Copyright 2026 The merging-paths Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line driver for the merging library.
//
// Exit status: 0 success, 1 a verification reported a failure, 2 usage or
// input error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "merging/merging.hpp"

namespace {

using merging::ArrivalSequence;
using merging::Format;
using merging::OutputSpec;
using merging::io::Json;

constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

struct OutputOptions {
  std::string format;
  std::string destination;
  std::optional<int> digits;

  OutputSpec spec(const merging::Artifact& artifact) const {
    OutputSpec s{merging::parse_format(format), destination, digits};
    s.validate(artifact);
    return s;
  }
};

void add_output_options(CLI::App* cmd, OutputOptions& out, const std::string& default_format) {
  out.format = default_format;
  cmd->add_option("--format", out.format, "text, csv, json, oeis-bfile or svg")->capture_default_str();
  cmd->add_option("-o,--output", out.destination, "Write to this file instead of standard output");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string join(const std::vector<std::size_t>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

std::string render_rational(const merging::ExactRational& q, const std::optional<int>& digits) {
  return digits ? q.to_decimal(*digits) : q.str();
}

void require_format(const OutputSpec& s, std::initializer_list<Format> allowed, const char* command) {
  for (Format f : allowed) {
    if (s.format == f) return;
  }
  throw merging::ValidationError(std::string(command) + ": --format " + merging::format_name(s.format) +
                                 " is not supported here");
}

std::string grid_output(const merging::tables::Grid& g, const OutputSpec& s) {
  require_format(s, {Format::kText, Format::kCsv, Format::kJson}, "table");
  if (s.format == Format::kCsv) return merging::tables::to_csv(g);
  if (s.format == Format::kJson) return dump(merging::tables::to_json(g));
  return merging::tables::to_text(g);
}

std::string grids_output(const std::vector<merging::tables::Grid>& grids, const OutputSpec& s) {
  if (s.format == Format::kJson) {
    Json j = Json::array();
    for (const auto& g : grids) j.push_back(merging::tables::to_json(g));
    return dump(j);
  }
  std::string out;
  for (std::size_t i = 0; i < grids.size(); ++i) {
    if (i) out += "\n";
    if (s.format == Format::kCsv) out += "# " + grids[i].title + "\n";
    out += grid_output(grids[i], s);
  }
  return out;
}

std::string reports_output(const std::vector<merging::oracle::VerificationReport>& reports, int& status) {
  if (!merging::oracle::all_passed(reports)) status = kExitVerificationFailed;
  return dump(merging::io::to_json(reports));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Merging-lane arrival sequences: simulation, counts, expectations, bijections, trails"};
  app.require_subcommand(1);
  int status = 0;
  std::string result;

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Run the merging rule on an arrival sequence");
  std::string sim_bits;
  OutputOptions sim_out;
  simulate->add_option("bits", sim_bits, "Arrival sequence over {0,1}")->required();
  add_output_options(simulate, sim_out, "json");

  // count
  auto* count = app.add_subcommand("count", "Count merging paths");
  count->require_subcommand(1);
  auto* count_mn = count->add_subcommand("mn", "Paths ending at (n,m)");
  auto* count_mnk = count->add_subcommand("mnk", "Paths ending at (n,m) with exactly k zeros");
  std::vector<std::int64_t> count_args;
  std::optional<std::int64_t> count_max;
  std::optional<std::int64_t> count_k;
  std::string count_method = "closed";
  OutputOptions count_out;
  count_mn->add_option("point", count_args, "n m")->expected(0, 2);
  count_mn->add_option("--max", count_max, "Print the grid 0 <= n <= m <= max");
  count_mnk->add_option("point", count_args, "n m k")->expected(0, 3);
  count_mnk->add_option("--max", count_max, "Print the grid for one k up to n = max");
  count_mnk->add_option("--k", count_k, "k for the grid");
  for (auto* c : {count_mn, count_mnk}) {
    c->add_option("--method", count_method, "closed or recursive")
        ->check(CLI::IsMember({"closed", "recursive"}))
        ->capture_default_str();
    add_output_options(c, count_out, "csv");
  }

  // table
  auto* table = app.add_subcommand("table", "Emit a reference table");
  std::int64_t table_id = 0;
  std::optional<std::int64_t> table_max;
  std::optional<std::int64_t> table_k;
  OutputOptions table_out;
  table->add_option("id", table_id, "1 paths to (n,m); 2 phi listing; 3 lane sums; 4 small-k blocks; "
                                    "5 one k; 6 color-blind classes")
      ->required()
      ->check(CLI::Range(1, 6));
  table->add_option("--max", table_max, "Largest index (or length for tables 2 and 6)");
  table->add_option("--k", table_k, "k for table 5, largest k for table 4");
  add_output_options(table, table_out, "csv");

  // expect
  auto* expect = app.add_subcommand("expect", "Expected right-lane length");
  std::optional<std::int64_t> expect_len;
  std::optional<std::int64_t> expect_k;
  std::optional<std::int64_t> expect_max;
  bool expect_grid = false;
  bool expect_sum = false;
  OutputOptions expect_out;
  expect->add_option("length", expect_len, "Sequence length");
  expect->add_option("--k", expect_k, "Restrict to sequences with exactly k zeros");
  expect->add_option("--digits", expect_out.digits, "Print decimals instead of exact fractions");
  expect->add_flag("--sum", expect_sum, "Print the integer lane sum instead of the expectation");
  expect->add_flag("--grid", expect_grid, "Print the lane-sum grid up to --max");
  expect->add_option("--max", expect_max, "Largest length for --grid and oeis-bfile");
  add_output_options(expect, expect_out, "text");

  // bijection
  auto* bijection = app.add_subcommand("bijection", "Apply or verify phi, psi and the step map");
  bijection->require_subcommand(1);
  std::string bij_input;
  bool bij_inverse = false;
  std::optional<std::int64_t> bij_s;
  std::optional<std::int64_t> bij_table;
  std::optional<std::int64_t> bij_verify;
  OutputOptions bij_out;
  auto* bij_phi = bijection->add_subcommand("phi", "Arrival sequence <-> coin flips (H/T)");
  auto* bij_psi = bijection->add_subcommand("psi", "Complement after the s-th bounce");
  auto* bij_step = bijection->add_subcommand("step", "Zero the two 1s ending at the last bounce");
  for (auto* c : {bij_phi, bij_psi, bij_step}) {
    c->add_option("input", bij_input, "Arrival sequence, or coin flips for phi --inverse");
    c->add_flag("--inverse", bij_inverse, "Apply the inverse map");
    c->add_option("--verify", bij_verify, "Exhaustively verify up to this length and print a JSON report");
    add_output_options(c, bij_out, "text");
  }
  bij_psi->add_option("--s", bij_s, "Bounce index s >= 1");
  bij_phi->add_option("--table", bij_table, "List b, r, p, c, max for every sequence of this length");

  // trail
  auto* trail = app.add_subcommand("trail", "Longest trail in the complete graph with loops");
  std::int64_t trail_len = 0;
  bool trail_snake = false;
  bool trail_edges = false;
  bool trail_partition = false;
  OutputOptions trail_out;
  trail->add_option("length", trail_len, "Number of vertices")->required();
  trail->add_flag("--snake", trail_snake, "Print as a domino snake");
  trail->add_flag("--edges", trail_edges, "Print the edge list as JSON");
  trail->add_flag("--check-partition", trail_partition, "Verify the one-zero sequences partition the trail");
  add_output_options(trail, trail_out, "text");

  // classes
  auto* classes = app.add_subcommand("classes", "Color-blind classes of all sequences of a length");
  std::int64_t classes_len = 0;
  std::int64_t classes_cap = merging::kDefaultPartitionCap;
  OutputOptions classes_out;
  classes->add_option("length", classes_len, "Sequence length")->required();
  classes->add_option("--cap", classes_cap, "Enumeration limit")->capture_default_str();
  add_output_options(classes, classes_out, "text");

  // render
  auto* render = app.add_subcommand("render", "Draw the merging path");
  std::string render_bits;
  OutputOptions render_out;
  render->add_option("bits", render_bits, "Arrival sequence over {0,1}")->required();
  add_output_options(render, render_out, "svg");

  // oracle-verify
  auto* verify = app.add_subcommand("oracle-verify", "Run the exhaustive verification suite");
  std::int64_t verify_len = 12;
  std::int64_t verify_phi_len = 16;
  std::int64_t verify_trail_len = 14;
  unsigned verify_workers = merging::oracle::default_workers();
  OutputOptions verify_out;
  verify->add_option("--max", verify_len, "Length limit for counts, lane sums, psi, step map and classes")
      ->capture_default_str();
  verify->add_option("--phi-max", verify_phi_len, "Length limit for phi")->capture_default_str();
  verify->add_option("--trail-max", verify_trail_len, "Length limit for trails")->capture_default_str();
  verify->add_option("--workers", verify_workers, "Threads for enumeration")->check(CLI::Range(1U, 256U));
  add_output_options(verify, verify_out, "json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    std::optional<OutputSpec> spec;

    if (simulate->parsed()) {
      spec = sim_out.spec({});
      require_format(*spec, {Format::kJson, Format::kText}, "simulate");
      const ArrivalSequence b = ArrivalSequence::parse(sim_bits);
      const merging::MergeResult r = merging::simulate(b);
      if (spec->format == Format::kJson) {
        result = dump(merging::io::to_json(b, r));
      } else {
        std::ostringstream out;
        out << "bits      " << b.str() << "\n"
            << "right     " << join(r.right_lane) << "\n"
            << "left      " << join(r.left_lane) << "\n"
            << "bounces   " << join(r.bounce_positions) << "\n"
            << "touches   " << join(r.touch_positions) << "\n"
            << "parity    " << r.parity.str() << "\n"
            << "endpoint  (" << r.endpoint.n << "," << r.endpoint.m << ")\n"
            << "r         " << r.r() << "\n"
            << "path      " << merging::merging_path(b).str() << "\n";
        result = out.str();
      }
    } else if (count_mn->parsed() || count_mnk->parsed()) {
      spec = count_out.spec({});
      const bool closed = count_method == "closed";
      if (count_mn->parsed()) {
        if (count_max) {
          if (!count_args.empty()) throw merging::ValidationError("count mn: give either n m or --max");
          result = grid_output(merging::tables::path_counts(*count_max), *spec);
        } else {
          if (count_args.size() != 2) throw merging::ValidationError("count mn: expected n m or --max");
          const auto n = count_args[0];
          const auto m = count_args[1];
          result = (closed ? merging::m_count_closed(n, m) : merging::m_count_recursive(n, m)).str() + "\n";
        }
      } else {
        if (count_max) {
          if (!count_k || !count_args.empty()) throw merging::ValidationError("count mnk: --max needs --k");
          result = grid_output(merging::tables::fixed_k_block(*count_k, *count_max), *spec);
        } else {
          if (count_args.size() != 3) throw merging::ValidationError("count mnk: expected n m k or --k K --max N");
          const auto n = count_args[0];
          const auto m = count_args[1];
          const auto k = count_args[2];
          result = (closed ? merging::m_count_k_closed(n, m, k) : merging::m_count_k_recursive(n, m, k)).str() + "\n";
        }
      }
    } else if (table->parsed()) {
      spec = table_out.spec({});
      switch (table_id) {
        case 1:
          result = grid_output(merging::tables::path_counts(table_max.value_or(7)), *spec);
          break;
        case 2:
          require_format(*spec, {Format::kCsv}, "table 2");
          result = merging::tables::phi_table_csv(table_max.value_or(4));
          break;
        case 3:
          result = grid_output(merging::tables::lane_sums(table_max.value_or(8)), *spec);
          break;
        case 4:
          result = grids_output(merging::tables::small_k_blocks(table_k.value_or(3), table_max.value_or(5)), *spec);
          break;
        case 5:
          result = grid_output(merging::tables::fixed_k_block(table_k.value_or(6), table_max.value_or(10)), *spec);
          break;
        default: {
          const std::int64_t len = table_max.value_or(6);
          const auto parts = merging::partition(len);
          if (spec->format == Format::kJson) {
            result = dump(merging::io::to_json(parts, len));
          } else if (spec->format == Format::kCsv) {
            result = merging::tables::classes_csv(parts);
          } else {
            result = merging::tables::classes_text(parts);
          }
        }
      }
    } else if (expect->parsed()) {
      spec = expect_out.spec({false, expect_grid || expect_sum || expect_out.format == "oeis-bfile"});
      if (spec->format == Format::kOeisBfile) {
        if (!expect_max) throw merging::ValidationError("expect: oeis-bfile needs --max");
        if (expect_k) throw merging::ValidationError("expect: oeis-bfile covers all k; drop --k");
        result = merging::tables::lane_sum_bfile(*expect_max);
      } else if (expect_grid) {
        result = grid_output(merging::tables::lane_sums(expect_max.value_or(8)), *spec);
      } else {
        if (!expect_len) throw merging::ValidationError("expect: length is required");
        const std::int64_t len = *expect_len;
        std::string value;
        if (expect_sum) {
          value = (expect_k ? merging::right_lane_sum_k(len, *expect_k) : merging::right_lane_sum(len)).str();
        } else {
          const auto q = expect_k ? merging::expected_length_k(len, *expect_k) : merging::expected_length(len);
          value = render_rational(q, spec->digits);
        }
        require_format(*spec, {Format::kText, Format::kJson}, "expect");
        if (spec->format == Format::kJson) {
          Json j;
          j["length"] = len;
          j["k"] = expect_k ? Json(*expect_k) : Json(nullptr);
          j[expect_sum ? "sum" : "expectation"] = value;
          result = dump(j);
        } else {
          result = value + "\n";
        }
      }
    } else if (bij_phi->parsed() || bij_psi->parsed() || bij_step->parsed()) {
      spec = bij_out.spec({});
      namespace oracle = merging::oracle;
      if (bij_verify) {
        std::vector<oracle::VerificationReport> reports;
        if (bij_phi->parsed()) reports = oracle::verify_phi(*bij_verify);
        if (bij_psi->parsed()) reports = {oracle::verify_psi(*bij_verify)};
        if (bij_step->parsed()) reports = {oracle::verify_step_map(*bij_verify)};
        result = reports_output(reports, status);
      } else if (bij_table) {
        result = merging::tables::phi_table_csv(*bij_table);
      } else {
        if (bij_input.empty() && !bij_phi->parsed()) throw merging::ValidationError("bijection: input is required");
        if (bij_phi->parsed()) {
          if (bij_inverse) {
            result = merging::phi_inverse(merging::CoinSequence::parse(bij_input)).str();
          } else {
            result = merging::phi(ArrivalSequence::parse(bij_input)).str();
          }
        } else if (bij_psi->parsed()) {
          if (!bij_s) throw merging::ValidationError("bijection psi: --s is required");
          const ArrivalSequence b = ArrivalSequence::parse(bij_input);
          result = (bij_inverse ? merging::psi_inverse(b, *bij_s) : merging::psi(b, *bij_s)).str();
        } else {
          const ArrivalSequence b = ArrivalSequence::parse(bij_input);
          result = (bij_inverse ? merging::step_map_inverse(b) : merging::step_map(b)).str();
        }
        result += "\n";
      }
    } else if (trail->parsed()) {
      spec = trail_out.spec({});
      if (trail_partition) {
        result = reports_output(merging::oracle::verify_trails(trail_len), status);
      } else {
        const merging::Trail t = merging::longest_trail(trail_len);
        if (trail_edges || spec->format == Format::kJson) {
          Json j;
          j["schema"] = merging::io::kTrailSchema;
          j["length"] = trail_len;
          j["edge_count"] = t.length();
          j["vertices"] = t.vertices;
          j["edges"] = merging::io::edges_json(t.edges);
          j["snake"] = merging::trail_to_snake(t).str();
          result = dump(j);
        } else {
          result = (trail_snake ? merging::trail_to_snake(t).str() : t.str()) + "\n";
        }
      }
    } else if (classes->parsed()) {
      spec = classes_out.spec({});
      const auto parts = merging::partition(classes_len, classes_cap);
      if (spec->format == Format::kJson) {
        result = dump(merging::io::to_json(parts, classes_len));
      } else if (spec->format == Format::kCsv) {
        result = merging::tables::classes_csv(parts);
      } else {
        result = merging::tables::classes_text(parts);
      }
    } else if (render->parsed()) {
      spec = render_out.spec({true, false});
      require_format(*spec, {Format::kSvg}, "render");
      result = merging::svg::render_path(ArrivalSequence::parse(render_bits));
    } else if (verify->parsed()) {
      spec = verify_out.spec({});
      require_format(*spec, {Format::kJson}, "oracle-verify");
      namespace oracle = merging::oracle;
      auto reports = oracle::verify_counts(verify_len, verify_len, verify_workers);
      reports.push_back(oracle::verify_lane_sums(verify_len, verify_workers));
      oracle::BijectionLimits limits = oracle::BijectionLimits::uniform(verify_len);
      limits.phi = verify_phi_len;
      limits.trails = verify_trail_len;
      for (auto& r : oracle::verify_bijections(limits)) reports.push_back(std::move(r));
      result = reports_output(reports, status);
    }

    if (spec) spec->emit(result);
  } catch (const merging::ValidationError& e) {
    std::cerr << "error: invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const merging::DomainError& e) {
    std::cerr << "error: outside the domain: " << e.what() << "\n";
    return kExitUsage;
  } catch (const merging::ResourceError& e) {
    std::cerr << "error: over the enumeration limit: " << e.what() << "\n";
    return kExitUsage;
  }
  return status;
}
