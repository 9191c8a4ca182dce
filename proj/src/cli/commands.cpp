// Copyright 2026 The dysonsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>

#include "dysonsim/cli/harness.hpp"
#include "dysonsim/core/linalg.hpp"
#include "dysonsim/core/tolerances.hpp"
#include "dysonsim/dyson/dyson.hpp"
#include "dysonsim/gadgets/simulation.hpp"
#include "dysonsim/models/sampled_hamiltonian.hpp"

namespace dysonsim {
namespace {

using nlohmann::json;

constexpr std::uint64_t kNormPoints = 1024;
constexpr std::uint64_t kDerivPointsPerSegment = 512;

Backend parse_backend(const std::string& name) {
  if (name == "automatic") return Backend::automatic;
  if (name == "circuit") return Backend::circuit;
  if (name == "block_algebra") return Backend::block_algebra;
  throw InvalidArgument("backend must be automatic, circuit or block_algebra");
}

void require_split(const BuiltModel& model) {
  if (!model.A || !model.B) {
    throw InvalidArgument("interaction picture needs an alpha_split into A and B");
  }
}

void require_static(const BuiltModel& model, const char* what) {
  if (model.time_dependent) {
    throw InvalidArgument(std::string(what) + " needs a time-independent model");
  }
}

double taylor_alpha(const ComplexOperator& h) {
  return spectral_norm(h) * (1.0 + tol::kAlphaHeadroom);
}

json record_json(const ResourceRecord& r) {
  return json{{"backend", r.backend},
              {"queries_ham_t", r.queries_ham_t},
              {"queries_eA", r.queries_eA},
              {"queries_eA_oracle", r.queries_eA_oracle},
              {"qubits", r.qubits},
              {"counted", r.counted}};
}

json parameters_json(double t, double eps, const ResourceRecord& r) {
  return json{{"t", t},         {"eps", eps},           {"L", r.L},
              {"K", r.K},       {"M", r.M},             {"tau", r.tau},
              {"beta", 2.0},    {"beta_prime", r.beta_prime},
              {"alpha", r.alpha}, {"alpha_A", r.alpha_A}, {"alpha_B", r.alpha_B},
              {"avg_deriv", r.avg_deriv}};
}

ResourceEstimate schrodinger_row(const BuiltModel& model, double t, double eps) {
  if (!model.time_dependent) {
    // Same values the norm measurement yields for a constant generator.
    const double alpha = taylor_alpha(model.h0);
    return estimate_tds(alpha, t, eps, 0.0, alpha, {model.system_qubits, 1});
  }
  const auto meta = measure_hamiltonian(model.generator, t, kNormPoints);
  if (t == 0.0 || meta.max_norm == 0.0) {
    return estimate_tds(0.0, t, eps, 0.0, 0.0, {model.system_qubits, 1});
  }
  const auto sched = segment_schedule(t, meta.alpha);
  const double avg = max_segment_avg_deriv(model.generator, t, sched.L, kDerivPointsPerSegment);
  return estimate_tds(meta.alpha, t, eps, avg, meta.alpha, {model.system_qubits, 1});
}

void label_split(const BuiltModel& model, ResourceEstimate& e) {
  if (model.A && model.B) {
    e.alpha_A = spectral_norm(*model.A);
    e.alpha_B = spectral_norm(*model.B) * (1.0 + tol::kAlphaHeadroom);
  }
}

}  // namespace

SimulateOutcome simulate_model(const BuiltModel& model, double t, double eps,
                               const SimulateOptions& options) {
  const Picture picture = parse_picture(options.picture);
  EvolveOptions opts;
  opts.backend = parse_backend(options.backend);
  const auto start = std::chrono::steady_clock::now();
  ComplexOperator u;
  json params;
  json resources;
  bool backed = true;
  switch (picture) {
    case Picture::schrodinger: {
      const auto r = model.sparse ? sparse_evolve(*model.sparse, t, eps, opts)
                                  : multi_segment_evolve(model.generator, t, eps, opts);
      u = r.U;
      params = parameters_json(t, eps, r.resources);
      resources = record_json(r.resources);
      backed = r.resources.bound_backed;
      break;
    }
    case Picture::interaction: {
      require_split(model);
      std::optional<SparseHamiltonianSpec> diag;
      if (model.a_diagonal) diag = sparse_from_matrices({*model.A}, 1);
      const auto r = interaction_evolve(*model.A, *model.B, t, eps, opts,
                                        diag ? &*diag : nullptr);
      u = r.U;
      params = parameters_json(t, eps, r.resources);
      resources = record_json(r.resources);
      resources["diagonal_fast_forward"] = diag.has_value();
      backed = r.resources.bound_backed;
      break;
    }
    case Picture::taylor: {
      require_static(model, "taylor picture");
      const double alpha = taylor_alpha(model.h0);
      if (alpha == 0.0 || t == 0.0) {
        u = ComplexOperator::Identity(model.dimension, model.dimension);
        params = json{{"t", t}, {"eps", eps}, {"L", 0}, {"K", 0}, {"alpha", alpha}};
        resources = json{{"backend", "none"}, {"queries_ham_t", 0}, {"qubits", 0},
                         {"counted", false}};
        break;
      }
      const auto enc = unitary_completion(model.h0, alpha);
      const auto r = tts_evolve(enc, t, eps, opts);
      u = r.U.topLeftCorner(model.dimension, model.dimension);
      params = json{{"t", t},      {"eps", eps},       {"L", r.segments},
                    {"K", r.K},    {"alpha", alpha},   {"beta", 2.0},
                    {"beta_prime", r.beta_prime}};
      resources = json{{"backend", r.backend}, {"queries_ham_t", r.queries},
                       {"qubits", r.qubits},   {"counted", r.counted}};
      break;
    }
  }
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  SimulateOutcome out;
  json& rep = out.report;
  rep["model"] = model.type;
  rep["picture"] = options.picture;
  rep["dimension"] = model.dimension;
  rep["parameters"] = params;
  rep["resources"] = resources;
  json flags{{"bound_backed", backed}};
  if (model.dimension <= options.oracle_max_dim) {
    const auto exact = exact_propagator_detailed(model.generator, t);
    const double err = spectral_norm(u - exact.U);
    rep["achieved_error"] = err;
    rep["oracle_delta"] = exact.delta;
    rep["oracle_steps"] = exact.steps;
    flags["within_4eps"] = err <= 4.0 * eps;
    out.within_bound = !backed || err <= 4.0 * eps;
  }
  rep["bound_flags"] = flags;
  if (options.timing) rep["wall_clock_s"] = wall;
  return out;
}

std::vector<ResourceEstimate> estimate_model(const BuiltModel& model, double t, double eps) {
  std::vector<ResourceEstimate> rows;
  if (model.sparse) {
    const auto& sp = *model.sparse;
    rows.push_back(estimate_tts(sp.d * sp.Hmax, t, eps, {model.system_qubits, model.system_qubits + 2}));
    rows.back().alpha_B = sp.d * sp.Hmax;
    rows.push_back(estimate_sparse(sp.d, sp.Hmax, model.system_qubits, t, eps));
    return rows;
  }
  if (!model.time_dependent) {
    rows.push_back(estimate_tts(taylor_alpha(model.h0), t, eps, {model.system_qubits, 1}));
    label_split(model, rows.back());
  }
  rows.push_back(schrodinger_row(model, t, eps));
  label_split(model, rows.back());
  if (model.A && model.B) {
    rows.push_back(estimate_interaction(spectral_norm(*model.A),
                                        spectral_norm(*model.B) * (1.0 + tol::kAlphaHeadroom),
                                        t, eps, {model.system_qubits, 1}));
    if (model.a_diagonal) rows.back().notes.emplace_back("A fast-forwarded with 2 queries");
  }
  return rows;
}

const std::vector<std::string>& sweep_parameters() {
  static const std::vector<std::string> p{"t", "eps", "alpha_A", "alpha_B", "d", "N"};
  return p;
}

std::vector<ResourceEstimate> sweep_model(const ModelSpec& spec, const std::string& param,
                                          const std::vector<double>& values, double t,
                                          double eps) {
  const auto& allowed = sweep_parameters();
  if (std::find(allowed.begin(), allowed.end(), param) == allowed.end()) {
    throw InvalidArgument("sweep parameter must be one of t, eps, alpha_A, alpha_B, d, N");
  }
  const auto integral = [&](double v) {
    if (v != std::floor(v) || v < 1.0 || v > 1e6) {
      throw InvalidArgument("sweep values for '" + param + "' must be positive integers");
    }
    return static_cast<int>(v);
  };
  std::vector<ResourceEstimate> rows;
  std::optional<BuiltModel> base;
  if (param == "t" || param == "eps" || param == "alpha_A" || param == "alpha_B") {
    base = build_model(spec);
  }
  for (double v : values) {
    std::vector<ResourceEstimate> part;
    if (param == "t") {
      part = estimate_model(*base, v, eps);
    } else if (param == "eps") {
      part = estimate_model(*base, t, v);
    } else if (param == "alpha_A" || param == "alpha_B") {
      require_split(*base);
      if (!(v >= 0.0) || !std::isfinite(v)) throw InvalidArgument("alpha values must be >= 0");
      BuiltModel m = *base;
      auto& target = param == "alpha_A" ? *m.A : *m.B;
      const double norm = spectral_norm(target);
      if (norm == 0.0) throw InvalidArgument("cannot rescale a zero " + param.substr(6) + " part");
      // B carries the alpha headroom, so its norm is set to v / (1 + headroom).
      const double goal = param == "alpha_A" ? v : v / (1.0 + tol::kAlphaHeadroom);
      target *= goal / norm;
      m.h0 = *m.A + *m.B;
      const ComplexOperator h = m.h0;
      m.generator = [h](double) { return h; };
      part = estimate_model(m, t, eps);
    } else if (param == "d") {
      if (spec.type != "sparse") throw InvalidArgument("the d sweep needs a sparse model");
      const int d = integral(v);
      const auto m = build_model(spec);
      const auto& sp = *m.sparse;
      part.push_back(estimate_tts(d * sp.Hmax, t, eps, {m.system_qubits, m.system_qubits + 2}));
      part.back().alpha_B = d * sp.Hmax;
      part.push_back(estimate_sparse(d, sp.Hmax, m.system_qubits, t, eps));
    } else {
      const int N = integral(v);
      ModelSpec s = spec;
      if (spec.type == "plane_wave") {
        s.plane_wave.N = N;
      } else if (spec.type == "hubbard") {
        const int old = spec.hubbard.N;
        s.hubbard.N = N;
        s.hubbard.T.assign(N, 0.0);
        s.hubbard.V.assign(N, 0.0);
        s.hubbard.U.assign(N, {0.0, 0.0});
        // Couplings keep their value at each displacement |s|; U repeats periodically.
        for (int k = 0; k < N; ++k) {
          const int dist = std::min(k, N - k);
          if (dist <= old / 2) {
            s.hubbard.T[k] = spec.hubbard.T[dist];
            s.hubbard.V[k] = spec.hubbard.V[dist];
          }
          s.hubbard.U[k] = spec.hubbard.U[k % old];
        }
      } else {
        throw InvalidArgument("the N sweep needs a hubbard or plane_wave model");
      }
      part = estimate_model(build_model(s), t, eps);
    }
    rows.insert(rows.end(), part.begin(), part.end());
  }
  return rows;
}

std::string estimates_to_csv(const std::vector<ResourceEstimate>& rows) {
  std::string out;
  const auto& cols = estimate_csv_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) out += (i ? "," : "") + cols[i];
  out += "\n";
  for (const auto& r : rows) out += estimate_csv_row(r) + "\n";
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << text;
  out.flush();
  if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace dysonsim
