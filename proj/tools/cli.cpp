// Copyright 2026 The supernorm Authors
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

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "supernorm/error.hpp"
#include "supernorm/io.hpp"
#include "supernorm/norm_opt.hpp"
#include "supernorm/schatten.hpp"
#include "supernorm/suite.hpp"

namespace supernorm::cli {

namespace {

using nlohmann::json;

std::string fixed12(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::fixed, 12);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

struct Flags {
  std::string file;
  std::string q = "1";
  std::string p = "1";
  bool hermitian = false;
  std::size_t stabilize = 0;
  std::uint64_t seed = 42;
  std::size_t restarts = 32;
  std::size_t trials = 50;
  std::string suite;
  int question = 1;
  std::size_t remixings = 16;
  std::string example;
  std::string part = "difference";
};

OptimizerConfig config_from(const Flags& f) {
  OptimizerConfig cfg;
  cfg.seed = f.seed;
  cfg.restarts = f.restarts;
  cfg.validate();
  return cfg;
}

json estimate_json(const NormEstimate& e, std::uint64_t seed) {
  return json{{"value", e.value}, {"converged", e.converged}, {"restarts_used", e.restarts_used}, {"seed", seed}};
}

int cmd_schatten(const Flags& f, std::ostream& out) {
  const SchattenExponent p = SchattenExponent::parse(f.p);
  const ComplexMatrix m = io::load_matrix(f.file);
  out << fixed12(schatten_norm(m, p)) << '\n';
  return kSuccess;
}

int cmd_norm(const Flags& f, std::ostream& out) {
  NormQuery query;
  query.q = SchattenExponent::parse(f.q);
  query.p = SchattenExponent::parse(f.p);
  query.hermitian_restricted = f.hermitian;
  query.stabilize_dim = f.stabilize;
  const OptimizerConfig cfg = config_from(f);
  const SuperOp phi = io::load_channel(f.file);
  out << estimate_json(norm_q_to_p(phi, query, cfg), f.seed).dump() << '\n';
  return kSuccess;
}

int cmd_stabilized(const Flags& f, std::ostream& out) {
  const SchattenExponent p = SchattenExponent::parse(f.p);
  const OptimizerConfig cfg = config_from(f);
  const SuperOp phi = io::load_channel(f.file);
  out << estimate_json(stabilized_norm(phi, p, f.hermitian, cfg), f.seed).dump() << '\n';
  return kSuccess;
}

int cmd_verify(const Flags& f, std::ostream& out) {
  std::vector<std::string> ids;
  if (f.suite == "all") {
    ids = suite::claim_ids();
  } else {
    suite::claim_tolerance(f.suite);  // rejects unknown ids before running anything
    ids.push_back(f.suite);
  }
  if (f.trials == 0) throw InvalidInput("--trials must be at least 1");
  if (f.restarts == 0) throw InvalidInput("--restarts must be at least 1");
  suite::SuiteOptions options{f.seed, f.trials, f.restarts};
  bool all_passed = true;
  for (const std::string& id : ids) {
    const suite::VerificationReport report = suite::verify(id, options);
    all_passed = all_passed && report.passed;
    out << suite::report_to_json(report).dump() << std::endl;
  }
  return all_passed ? kSuccess : kVerificationFailed;
}

int cmd_explore(const Flags& f, std::ostream& out) {
  NormQuery query;
  query.q = SchattenExponent::parse(f.q);
  query.p = SchattenExponent::parse(f.p);
  query.hermitian_restricted = f.hermitian;
  const OptimizerConfig cfg = config_from(f);
  const SuperOp phi = io::load_channel(f.file);
  const ExplorationReport report = explore_open_question(phi, f.question, query, cfg, f.remixings);
  json samples = json::array();
  for (const ExplorationSample& s : report.samples) {
    samples.push_back({{"label", s.label}, {"ancilla", s.ancilla}, {"value", s.value}});
  }
  out << json{{"question", report.question},
              {"reference", report.reference},
              {"extremum", report.extremum},
              {"completely_positive", report.completely_positive},
              {"seed", f.seed},
              {"samples", std::move(samples)}}
             .dump()
      << '\n';
  return kSuccess;
}

int cmd_example(const Flags& f, std::ostream& out) {
  const suite::Example ex = suite::build_example(f.example);
  const SuperOp* chosen = &ex.map;
  if (f.part != "difference") {
    if (!ex.pair) throw InvalidInput("example '" + f.example + "' is not a pair; --part must be 'difference'");
    chosen = f.part == "first" ? &ex.pair->first : &ex.pair->second;
  }
  out << io::channel_to_json(*chosen).dump() << '\n';
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schatten norms and induced super-operator norms"};
  app.require_subcommand(1);
  Flags f;

  const std::string exponent_help = "decimal >= 1 or 'inf'";
  auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", f.seed, "random seed")->capture_default_str();
    sub->add_option("--restarts", f.restarts, "optimizer restarts")->capture_default_str();
  };

  CLI::App* schatten = app.add_subcommand("schatten", "Schatten p-norm of a matrix file");
  schatten->add_option("matrix_file", f.file, "matrix JSON file")->required();
  schatten->add_option("--p", f.p, exponent_help)->capture_default_str();

  CLI::App* norm = app.add_subcommand("norm", "induced q->p norm of a channel file");
  norm->add_option("channel_file", f.file, "channel JSON file")->required();
  norm->add_option("--q", f.q, exponent_help)->capture_default_str();
  norm->add_option("--p", f.p, exponent_help)->capture_default_str();
  norm->add_flag("--hermitian", f.hermitian, "restrict to Hermitian inputs");
  norm->add_option("--stabilize", f.stabilize, "tensor with the identity on C^k first (0: off)")
      ->capture_default_str();
  add_seed(norm);

  CLI::App* stabilized = app.add_subcommand("stabilized", "1->p norm of the channel tensored with I_{dim_in}");
  stabilized->add_option("channel_file", f.file, "channel JSON file")->required();
  stabilized->add_option("--p", f.p, exponent_help)->capture_default_str();
  stabilized->add_flag("--hermitian", f.hermitian, "restrict to Hermitian inputs");
  add_seed(stabilized);

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", f.suite, "claim id or 'all'")->required();
  verify->add_option("--seed", f.seed, "random seed")->capture_default_str();
  verify->add_option("--trials", f.trials, "random instances per suite")->capture_default_str();
  verify->add_option("--restarts", f.restarts, "optimizer restarts")->capture_default_str();

  CLI::App* explore = app.add_subcommand("explore", "numeric data for the open questions (no verdict)");
  explore->add_option("channel_file", f.file, "channel JSON file")->required();
  explore->add_option("--question", f.question, "1, 2 or 3")->capture_default_str()->check(CLI::Range(1, 3));
  explore->add_option("--q", f.q, exponent_help)->capture_default_str();
  explore->add_option("--p", f.p, exponent_help)->capture_default_str();
  explore->add_flag("--hermitian", f.hermitian, "restrict to Hermitian inputs");
  explore->add_option("--remixings", f.remixings, "random Kraus remixings (question 1)")->capture_default_str();
  add_seed(explore);

  CLI::App* example = app.add_subcommand("example", "print a built-in channel as JSON");
  example->add_option("name", f.example,
                      "simple_nonhermitian, qinf_nonhermitian, depolarizing_pair, dim4_pair, transpose(n)")
      ->required();
  example->add_option("--part", f.part, "for pairs: difference, first or second")
      ->capture_default_str()
      ->check(CLI::IsMember({"difference", "first", "second"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (schatten->parsed()) return cmd_schatten(f, out);
    if (norm->parsed()) return cmd_norm(f, out);
    if (stabilized->parsed()) return cmd_stabilized(f, out);
    if (verify->parsed()) return cmd_verify(f, out);
    if (explore->parsed()) return cmd_explore(f, out);
    if (example->parsed()) return cmd_example(f, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const UnsupportedInstance& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace supernorm::cli
