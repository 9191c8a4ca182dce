// Copyright 2026 The dysonsim Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "dysonsim/core/error.hpp"
#include "dysonsim/core/types.hpp"
#include "dysonsim/models/hubbard.hpp"
#include "dysonsim/models/plane_wave.hpp"
#include "dysonsim/models/sparse.hpp"
#include "dysonsim/resources/resources.hpp"

namespace dysonsim {

/// Unreadable input or unwritable output.
class IoError : public Error {
 public:
  using Error::Error;
};

/// One Pauli-string term c(s) P of a spin model. `modulation` is "const",
/// "cos" or "sin"; time-dependent terms use coeff * cos(omega s) or
/// coeff * sin(omega s).
struct PauliTerm {
  std::string name;
  std::string pauli;
  double coeff = 0.0;
  std::string modulation = "const";
  double omega = 0.0;
};

/// Parsed model-spec document.
struct ModelSpec {
  std::string type;
  std::vector<PauliTerm> terms;
  HubbardSpec hubbard;
  PlaneWaveSpec plane_wave;
  std::uint64_t dim = 0;
  int d = 1;
  double Hmax = -1.0;
  std::vector<std::tuple<std::uint64_t, std::uint64_t, Complex>> entries;
  /// Term names of the A and B parts.
  std::optional<std::pair<std::vector<std::string>, std::vector<std::string>>> split;
};

/// Dense realization of a model.
struct BuiltModel {
  std::string type;
  int system_qubits = 1;
  Eigen::Index dimension = 0;
  bool time_dependent = false;
  HamiltonianFunction generator;
  /// H(0); equals H for time-independent models.
  ComplexOperator h0;
  std::optional<ComplexOperator> A;
  std::optional<ComplexOperator> B;
  bool a_diagonal = false;
  std::optional<SparseHamiltonianSpec> sparse;
};

ModelSpec parse_model(const nlohmann::json& doc);
/// Throws IoError when unreadable, InvalidArgument when malformed.
ModelSpec load_model(const std::string& path);
BuiltModel build_model(const ModelSpec& spec);

enum class Picture { schrodinger, interaction, taylor };
Picture parse_picture(const std::string& name);

struct SimulateOptions {
  std::string picture = "schrodinger";
  std::string backend = "automatic";
  bool timing = false;
  /// Largest dimension for which the achieved error is computed.
  Eigen::Index oracle_max_dim = 64;
};

struct SimulateOutcome {
  nlohmann::json report;
  /// False when a bound-backed run misses the 4 eps bound.
  bool within_bound = true;
};

SimulateOutcome simulate_model(const BuiltModel& model, double t, double eps,
                               const SimulateOptions& options);

/// One row per strategy the model supports.
std::vector<ResourceEstimate> estimate_model(const BuiltModel& model, double t, double eps);

/// Estimate rows for each value of `param` in input order.
std::vector<ResourceEstimate> sweep_model(const ModelSpec& spec, const std::string& param,
                                          const std::vector<double>& values, double t,
                                          double eps);

const std::vector<std::string>& sweep_parameters();

/// CSV text with header and one line per row.
std::string estimates_to_csv(const std::vector<ResourceEstimate>& rows);

/// Writes `text` to `path`; throws IoError.
void write_text(const std::string& path, const std::string& text);

struct VerifyResult {
  nlohmann::json summary;
  bool pass = true;
};

const std::vector<std::string>& verify_suites();

/// Runs property suites deterministically under `seed`. `tolerances`
/// overrides named check tolerances.
VerifyResult run_verify(const std::string& suite, std::uint64_t seed,
                        const std::map<std::string, double>& tolerances = {});

}  // namespace dysonsim
