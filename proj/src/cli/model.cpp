// Copyright 2026 The dysonsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "dysonsim/cli/harness.hpp"
#include "dysonsim/core/linalg.hpp"
#include "dysonsim/core/tolerances.hpp"

namespace dysonsim {
namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) { throw InvalidArgument("model: " + what); }

double number(const json& doc, const char* key) {
  if (!doc.contains(key)) bad(std::string("missing field '") + key + "'");
  const auto& v = doc.at(key);
  if (!v.is_number()) bad(std::string("field '") + key + "' must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) bad(std::string("field '") + key + "' must be finite");
  return x;
}

int integer(const json& doc, const char* key) {
  if (!doc.contains(key)) bad(std::string("missing field '") + key + "'");
  const auto& v = doc.at(key);
  if (!v.is_number_integer()) bad(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

std::vector<double> numbers(const json& doc, const char* key, std::size_t n) {
  std::vector<double> out(n, 0.0);
  if (!doc.contains(key)) return out;
  const auto& v = doc.at(key);
  if (!v.is_array() || v.size() != n) {
    bad(std::string("field '") + key + "' must be an array of length " + std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!v[i].is_number() || !std::isfinite(v[i].get<double>())) {
      bad(std::string("field '") + key + "' must hold finite numbers");
    }
    out[i] = v[i].get<double>();
  }
  return out;
}

std::vector<std::string> names(const json& v, const char* what) {
  if (!v.is_array()) bad(std::string(what) + " must be an array of term names");
  std::vector<std::string> out;
  for (const auto& x : v) {
    if (!x.is_string()) bad(std::string(what) + " must be an array of term names");
    out.push_back(x.get<std::string>());
  }
  return out;
}

HubbardSpec parse_hubbard(const json& doc) {
  HubbardSpec spec;
  spec.N = integer(doc, "N");
  spec.dims = doc.contains("dims") ? integer(doc, "dims") : 1;
  if (spec.N < 1) bad("N must be >= 1");
  const auto n = static_cast<std::size_t>(spec.N);
  spec.T = numbers(doc, "T", n);
  spec.V = numbers(doc, "V", n);
  spec.U.assign(n, {0.0, 0.0});
  if (doc.contains("U")) {
    const auto& u = doc.at("U");
    if (!u.is_array() || u.size() != n) bad("field 'U' must be an array of length N");
    for (std::size_t i = 0; i < n; ++i) {
      if (u[i].is_number()) {
        spec.U[i] = {u[i].get<double>(), u[i].get<double>()};
      } else if (u[i].is_array() && u[i].size() == 2 && u[i][0].is_number() &&
                 u[i][1].is_number()) {
        spec.U[i] = {u[i][0].get<double>(), u[i][1].get<double>()};
      } else {
        bad("entries of 'U' must be numbers or [spin up, spin down] pairs");
      }
    }
  }
  validate_hubbard(spec);
  return spec;
}

ComplexOperator term_matrix(const PauliTerm& term) { return pauli::from_string(term.pauli); }

bool is_diagonal(const ComplexOperator& a) {
  for (Eigen::Index c = 0; c < a.cols(); ++c) {
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      if (r != c && a(r, c) != Complex(0.0, 0.0)) return false;
    }
  }
  return true;
}

void build_split(const ModelSpec& spec, const std::map<std::string, ComplexOperator>& parts,
                 const std::set<std::string>& time_dependent, BuiltModel& out) {
  if (!spec.split) return;
  const auto sum = [&](const std::vector<std::string>& list) {
    ComplexOperator acc = ComplexOperator::Zero(out.dimension, out.dimension);
    for (const auto& name : list) {
      const auto it = parts.find(name);
      if (it == parts.end()) bad("alpha_split names unknown term '" + name + "'");
      if (time_dependent.count(name) != 0) {
        bad("alpha_split term '" + name + "' is time dependent");
      }
      acc += it->second;
    }
    return acc;
  };
  std::set<std::string> seen;
  for (const auto* list : {&spec.split->first, &spec.split->second}) {
    for (const auto& name : *list) {
      if (!seen.insert(name).second) bad("alpha_split lists term '" + name + "' twice");
    }
  }
  if (seen.size() != parts.size()) bad("alpha_split must assign every term to A or B");
  out.A = sum(spec.split->first);
  out.B = sum(spec.split->second);
  out.a_diagonal = is_diagonal(*out.A);
}

BuiltModel build_fock(const ModelSpec& spec, const HubbardSpec& hubbard) {
  const auto parts = build_hubbard(hubbard);
  BuiltModel out;
  out.type = spec.type;
  out.dimension = parts.total.rows();
  out.system_qubits = parts.n_modes;
  out.h0 = parts.total;
  const ComplexOperator h = parts.total;
  out.generator = [h](double) { return h; };
  std::map<std::string, ComplexOperator> named{
      {"T", parts.kinetic}, {"U", parts.onsite}, {"V", parts.interaction}};
  ModelSpec with_split = spec;
  if (!with_split.split) {
    with_split.split = std::make_pair(std::vector<std::string>{"U", "V"},
                                      std::vector<std::string>{"T"});
  }
  build_split(with_split, named, {}, out);
  return out;
}

}  // namespace

ModelSpec parse_model(const json& doc) {
  if (!doc.is_object()) bad("document must be a JSON object");
  if (!doc.contains("type") || !doc.at("type").is_string()) bad("missing string field 'type'");
  ModelSpec spec;
  spec.type = doc.at("type").get<std::string>();
  if (spec.type == "spins") {
    if (!doc.contains("terms") || !doc.at("terms").is_array()) bad("spins need a 'terms' array");
    std::set<std::string> seen;
    std::size_t width = 0;
    for (const auto& t : doc.at("terms")) {
      if (!t.is_object()) bad("each term must be an object");
      PauliTerm term;
      if (!t.contains("pauli") || !t.at("pauli").is_string()) bad("term needs a 'pauli' string");
      term.pauli = t.at("pauli").get<std::string>();
      term.name = t.contains("name") && t.at("name").is_string()
                      ? t.at("name").get<std::string>()
                      : term.pauli + "#" + std::to_string(spec.terms.size());
      term.coeff = number(t, "coeff");
      if (t.contains("modulation")) {
        if (!t.at("modulation").is_string()) bad("'modulation' must be a string");
        term.modulation = t.at("modulation").get<std::string>();
        if (term.modulation != "const" && term.modulation != "cos" && term.modulation != "sin") {
          bad("modulation must be const, cos or sin");
        }
        if (term.modulation != "const") term.omega = number(t, "omega");
      }
      if (term.pauli.empty() ||
          term.pauli.find_first_not_of("IXYZ") != std::string::npos) {
        bad("pauli string '" + term.pauli + "' must use I, X, Y, Z");
      }
      if (width == 0) width = term.pauli.size();
      if (term.pauli.size() != width) bad("all pauli strings must have the same length");
      if (!seen.insert(term.name).second) bad("duplicate term name '" + term.name + "'");
      spec.terms.push_back(term);
    }
    if (spec.terms.empty()) bad("spins need at least one term");
    if (width > static_cast<std::size_t>(tol::kDenseQubits)) {
      throw BudgetExceeded("model: spin system exceeds the dense budget",
                           static_cast<int>(width), tol::kDenseQubits);
    }
  } else if (spec.type == "hubbard") {
    spec.hubbard = parse_hubbard(doc);
  } else if (spec.type == "plane_wave") {
    spec.plane_wave.N = integer(doc, "N");
    spec.plane_wave.Omega = number(doc, "Omega");
    spec.plane_wave.dims = doc.contains("dims") ? integer(doc, "dims") : 1;
    if (doc.contains("nuclei")) {
      if (!doc.at("nuclei").is_array()) bad("'nuclei' must be an array");
      for (const auto& n : doc.at("nuclei")) {
        Nucleus nuc;
        nuc.charge = number(n, "charge");
        const auto pos = numbers(n, "position", 3);
        nuc.position = {pos[0], pos[1], pos[2]};
        spec.plane_wave.nuclei.push_back(nuc);
      }
    }
  } else if (spec.type == "sparse") {
    const int dim = integer(doc, "dim");
    if (dim < 1) bad("dim must be >= 1");
    spec.dim = static_cast<std::uint64_t>(dim);
    spec.d = integer(doc, "d");
    if (doc.contains("Hmax")) spec.Hmax = number(doc, "Hmax");
    if (!doc.contains("entries") || !doc.at("entries").is_array()) {
      bad("sparse needs an 'entries' array of [row, col, re, im]");
    }
    for (const auto& e : doc.at("entries")) {
      if (!e.is_array() || e.size() < 3 || e.size() > 4 || !e[0].is_number_integer() ||
          !e[1].is_number_integer() || !e[2].is_number() || (e.size() == 4 && !e[3].is_number())) {
        bad("sparse entries must be [row, col, re] or [row, col, re, im]");
      }
      const auto row = e[0].get<std::int64_t>();
      const auto col = e[1].get<std::int64_t>();
      if (row < 0 || col < 0 || static_cast<std::uint64_t>(row) >= spec.dim ||
          static_cast<std::uint64_t>(col) >= spec.dim) {
        bad("sparse entry index out of range");
      }
      spec.entries.emplace_back(static_cast<std::uint64_t>(row), static_cast<std::uint64_t>(col),
                                Complex(e[2].get<double>(), e.size() == 4 ? e[3].get<double>() : 0.0));
    }
  } else {
    bad("unknown type '" + spec.type + "'");
  }
  if (doc.contains("alpha_split")) {
    const auto& s = doc.at("alpha_split");
    if (!s.is_object() || !s.contains("A") || !s.contains("B")) {
      bad("alpha_split must be {\"A\": [...], \"B\": [...]}");
    }
    spec.split = std::make_pair(names(s.at("A"), "alpha_split.A"), names(s.at("B"), "alpha_split.B"));
  }
  return spec;
}

ModelSpec load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read model file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  json doc;
  try {
    doc = json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw InvalidArgument("model: '" + path + "' is not valid JSON: " + e.what());
  }
  return parse_model(doc);
}

BuiltModel build_model(const ModelSpec& spec) {
  if (spec.type == "hubbard") return build_fock(spec, spec.hubbard);
  if (spec.type == "plane_wave") return build_fock(spec, plane_wave_to_hubbard(spec.plane_wave));
  BuiltModel out;
  out.type = spec.type;
  if (spec.type == "sparse") {
    ComplexOperator h = ComplexOperator::Zero(static_cast<Eigen::Index>(spec.dim),
                                              static_cast<Eigen::Index>(spec.dim));
    for (const auto& [r, c, v] : spec.entries) {
      h(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = v;
    }
    if (spec.split) bad("sparse models do not take an alpha_split");
    out.sparse = sparse_from_matrices({h}, spec.d, spec.Hmax);
    validate_sparse(*out.sparse);
    out.h0 = sparse_matrix_materialize(*out.sparse, 0);
    out.dimension = out.h0.rows();
    out.system_qubits = std::max(1, ceil_log2(spec.dim));
    const ComplexOperator hh = out.h0;
    out.generator = [hh](double) { return hh; };
    return out;
  }
  // Spin model.
  std::map<std::string, ComplexOperator> parts;
  std::set<std::string> dependent;
  std::vector<std::pair<PauliTerm, ComplexOperator>> terms;
  for (const auto& term : spec.terms) {
    const ComplexOperator p = term_matrix(term);
    terms.emplace_back(term, p);
    parts[term.name] = term.coeff * p;
    if (term.modulation != "const") dependent.insert(term.name);
  }
  out.system_qubits = static_cast<int>(spec.terms.front().pauli.size());
  out.dimension = terms.front().second.rows();
  out.time_dependent = !dependent.empty();
  out.generator = [terms](double s) {
    ComplexOperator h = ComplexOperator::Zero(terms.front().second.rows(),
                                              terms.front().second.cols());
    for (const auto& [term, p] : terms) {
      double c = term.coeff;
      if (term.modulation == "cos") c *= std::cos(term.omega * s);
      if (term.modulation == "sin") c *= std::sin(term.omega * s);
      h += c * p;
    }
    return h;
  };
  out.h0 = out.generator(0.0);
  build_split(spec, parts, dependent, out);
  return out;
}

Picture parse_picture(const std::string& name) {
  if (name == "schrodinger") return Picture::schrodinger;
  if (name == "interaction") return Picture::interaction;
  if (name == "taylor") return Picture::taylor;
  throw InvalidArgument("picture must be schrodinger, interaction or taylor");
}

}  // namespace dysonsim
