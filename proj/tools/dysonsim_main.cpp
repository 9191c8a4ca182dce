// Copyright 2026 The dysonsim Authors.
// SPDX-License-Identifier: Apache-2.0

// Command-line front end: verify, simulate, estimate, sweep.

#include <charconv>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dysonsim/cli/harness.hpp"

namespace {

using namespace dysonsim;

constexpr int kExitPass = 0;
constexpr int kExitInvariant = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitIo = 4;

std::map<std::string, double> parse_tolerances(const std::vector<std::string>& items) {
  std::map<std::string, double> out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw InvalidArgument("tolerance override must be NAME=VALUE, got '" + item + "'");
    }
    double v = 0.0;
    const char* begin = item.data() + eq + 1;
    const char* end = item.data() + item.size();
    const auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end) {
      throw InvalidArgument("tolerance value in '" + item + "' is not a number");
    }
    out[item.substr(0, eq)] = v;
  }
  return out;
}

std::vector<double> parse_values(const std::string& text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    const std::string item = text.substr(pos, next - pos);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw InvalidArgument("sweep value '" + item + "' is not a number");
    }
    out.push_back(v);
    pos = next + 1;
  }
  return out;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_text(path, text);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dysonsim: truncated Dyson series Hamiltonian simulation"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "Run property suites");
  std::string suite = "all";
  std::uint64_t seed = 42;
  std::vector<std::string> tolerance_items;
  std::string verify_out;
  verify->add_option("--suite", suite, "Suite name")
      ->check(CLI::IsMember(verify_suites()))
      ->capture_default_str();
  verify->add_option("--seed", seed, "Random seed")->capture_default_str();
  verify->add_option("--tolerance", tolerance_items, "Override a check tolerance, NAME=VALUE");
  verify->add_option("--output", verify_out, "Write the JSON summary here instead of stdout");

  std::string model_path;
  double t = 1.0;
  double eps = 0.01;
  bool timing = false;

  auto* simulate = app.add_subcommand("simulate", "Simulate a model and write a run report");
  std::string picture = "schrodinger";
  std::string backend = "automatic";
  std::string report_path;
  simulate->add_option("--model", model_path, "Model-spec JSON")->required();
  simulate->add_option("--time", t, "Evolution time")->required();
  simulate->add_option("--eps", eps, "Target error")->required();
  simulate->add_option("--picture", picture, "schrodinger, interaction or taylor")
      ->check(CLI::IsMember({"schrodinger", "interaction", "taylor"}))
      ->capture_default_str();
  simulate->add_option("--backend", backend, "automatic, circuit or block_algebra")
      ->check(CLI::IsMember({"automatic", "circuit", "block_algebra"}))
      ->capture_default_str();
  simulate->add_option("--report", report_path, "Report path (stdout if omitted)");
  simulate->add_flag("--timing", timing, "Record wall-clock time in the report");

  auto* estimate = app.add_subcommand("estimate", "Closed-form resource estimates as CSV");
  std::string csv_path;
  estimate->add_option("--model", model_path, "Model-spec JSON")->required();
  estimate->add_option("--time", t, "Evolution time")->required();
  estimate->add_option("--eps", eps, "Target error")->required();
  estimate->add_option("--csv", csv_path, "CSV path (stdout if omitted)");

  auto* sweep = app.add_subcommand("sweep", "Estimates over a list of parameter values");
  std::string param;
  std::string values_text;
  sweep->add_option("--model", model_path, "Model-spec JSON")->required();
  sweep->add_option("--param", param, "t, eps, alpha_A, alpha_B, d or N")
      ->required()
      ->check(CLI::IsMember(sweep_parameters()));
  sweep->add_option("--values", values_text, "Comma-separated values")->required();
  sweep->add_option("--time", t, "Evolution time when not swept")->capture_default_str();
  sweep->add_option("--eps", eps, "Target error when not swept")->capture_default_str();
  sweep->add_option("--csv", csv_path, "CSV path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (verify->parsed()) {
      const auto result = run_verify(suite, seed, parse_tolerances(tolerance_items));
      emit(verify_out, result.summary.dump(2) + "\n");
      if (!result.pass) {
        for (const auto& c : result.summary.at("checks")) {
          if (!c.at("pass").get<bool>()) {
            std::cerr << "invariant failed: " << c.at("name").get<std::string>() << "\n";
          }
        }
        return kExitInvariant;
      }
      return kExitPass;
    }
    if (simulate->parsed()) {
      SimulateOptions opts;
      opts.picture = picture;
      opts.backend = backend;
      opts.timing = timing;
      const auto out = simulate_model(build_model(load_model(model_path)), t, eps, opts);
      emit(report_path, out.report.dump(2) + "\n");
      if (!out.within_bound) {
        std::cerr << "invariant failed: achieved error exceeds 4 eps\n";
        return kExitInvariant;
      }
      return kExitPass;
    }
    if (estimate->parsed()) {
      const auto rows = estimate_model(build_model(load_model(model_path)), t, eps);
      emit(csv_path, estimates_to_csv(rows));
      return kExitPass;
    }
    if (sweep->parsed()) {
      const auto values = parse_values(values_text);
      const auto spec = load_model(model_path);
      emit(csv_path, estimates_to_csv(sweep_model(spec, param, values, t, eps)));
      return kExitPass;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << " (required " << e.required()
              << ", available " << e.available() << ")\n";
    return kExitBudget;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const InvalidArgument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvariant;
  }
  return kExitUsage;
}
