// Copyright 2026 The Steerkit Authors
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

#include "steerkit/report.hpp"

#include <cstdio>

#include "steerkit/fine_structure.hpp"
#include "steerkit/state_io.hpp"
#include "steerkit/steering.hpp"
#include "steerkit/verify.hpp"

namespace steerkit {

namespace {

using Json = nlohmann::ordered_json;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void escape_string(const std::string& s, std::string& out) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

void render_value(const Json& value, int indent, int depth, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent) * (depth + 1), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent) * depth, ' ');

  switch (value.type()) {
    case Json::value_t::null:
      out += "null";
      break;
    case Json::value_t::boolean:
      out += value.get<bool>() ? "true" : "false";
      break;
    case Json::value_t::number_integer:
      out += std::to_string(value.get<std::int64_t>());
      break;
    case Json::value_t::number_unsigned:
      out += std::to_string(value.get<std::uint64_t>());
      break;
    case Json::value_t::number_float:
      out += format_double(value.get<double>());
      break;
    case Json::value_t::string:
      escape_string(value.get<std::string>(), out);
      break;
    case Json::value_t::array: {
      if (value.empty()) {
        out += "[]";
        break;
      }
      out += "[\n";
      for (std::size_t i = 0; i < value.size(); ++i) {
        out += pad;
        render_value(value[i], indent, depth + 1, out);
        if (i + 1 < value.size()) out += ',';
        out += '\n';
      }
      out += close_pad + "]";
      break;
    }
    case Json::value_t::object: {
      if (value.empty()) {
        out += "{}";
        break;
      }
      out += "{\n";
      std::size_t i = 0;
      for (const auto& [key, member] : value.items()) {
        out += pad;
        escape_string(key, out);
        out += ": ";
        render_value(member, indent, depth + 1, out);
        if (++i < value.size()) out += ',';
        out += '\n';
      }
      out += close_pad + "}";
      break;
    }
    default:
      out += "null";
      break;
  }
}

void add_residual(Report& report, const std::string& name, double value, double tolerance) {
  report.residuals[name] = value;
  if (!(value <= tolerance)) report.within_tolerance = false;
}

Json vector_json(const ComplexVector& v) {
  Json re = Json::array();
  Json im = Json::array();
  for (Index i = 0; i < v.size(); ++i) {
    re.push_back(v[i].real());
    im.push_back(v[i].imag());
  }
  return Json{{"re", re}, {"im", im}};
}

template <typename Body>
Report run_command(const std::string& command, Json inputs, const Body& body) {
  Report report;
  report.command = command;
  report.inputs = std::move(inputs);
  try {
    body(report);
  } catch (const Error& e) {
    report.ok = false;
    report.error_code = e.code_name();
    report.error_message = e.what();
  } catch (const std::exception& e) {
    report.ok = false;
    report.error_code = "InternalError";
    report.error_message = e.what();
  }
  return report;
}

}  // namespace

std::string render_json(const Json& value, int indent) {
  std::string out;
  render_value(value, indent, 0, out);
  out += '\n';
  return out;
}

Json Report::to_json() const {
  Json status;
  if (ok) {
    status = Json{{"ok", true}};
  } else {
    status = Json{{"error", Json{{"code", error_code}, {"message", error_message}}}};
  }
  return Json{{"command", command},
              {"inputs", inputs},
              {"results", results},
              {"residuals", residuals},
              {"status", status}};
}

std::string Report::render() const { return render_json(to_json()); }

Report cmd_schmidt(const std::filesystem::path& state_file) {
  return run_command("schmidt", Json{{"state_file", state_file.string()}},
                     [&](Report& report) {
                       BipartiteState state = load_state(state_file);
                       SchmidtDecomposition sd = schmidt(state);

                       Json coefficients = Json::array();
                       for (Index k = 0; k < sd.rank; ++k)
                         coefficients.push_back(sd.coefficients[k]);

                       report.results["d1"] = state.d1();
                       report.results["d2"] = state.d2();
                       report.results["rank"] = sd.rank;
                       report.results["coefficients"] = coefficients;
                       add_residual(report, "schmidt_reconstruction",
                                    max_abs(schmidt_reconstruct(sd) - state.coeffs), 1e-10);
                     });
}

Report cmd_steer(const std::filesystem::path& state_file, const std::string& psi_text,
                 bool normalize_psi) {
  Json inputs{{"state_file", state_file.string()},
              {"psi", psi_text},
              {"normalize", normalize_psi}};
  return run_command("steer", std::move(inputs), [&](Report& report) {
    BipartiteState state = load_state(state_file);
    ComplexVector psi = parse_inline_vector(psi_text);
    require(psi.size() == state.d1(), ErrorCode::DimensionMismatch,
            "psi has dimension " + std::to_string(psi.size()) + ", expected " +
                std::to_string(state.d1()));
    if (normalize_psi && psi.norm() > 0.0) psi /= psi.norm();

    SteeringOutcome outcome = steer_elementary(state, psi);
    report.results["probability"] = outcome.probability;
    report.results["possible"] = outcome.possible;
    if (outcome.possible) {
      report.results["distant_state"] = vector_json(*outcome.distant_vector);

      SteeringOutcome oracle = trace_rule_oracle(state, projector_onto(psi));
      add_residual(report, "oracle_probability",
                   std::abs(outcome.probability - oracle.probability), 1e-12);
      add_residual(report, "oracle_state",
                   max_abs(*outcome.distant_vector * outcome.distant_vector->adjoint() -
                           oracle.distant_density->matrix),
                   1e-10);
    }
  });
}

Report cmd_polar(const std::filesystem::path& state_file) {
  return run_command(
      "polar", Json{{"state_file", state_file.string()}}, [&](Report& report) {
        BipartiteState state = load_state(state_file);
        AntilinearOp a = from_state(state);
        PolarData polar = polar_factorize(a, state);
        PolarResiduals residuals = polar_residuals(a, state, polar);

        Json coefficients = Json::array();
        for (Index k = 0; k < polar.schmidt.rank; ++k)
          coefficients.push_back(polar.schmidt.coefficients[k]);

        report.results["d1"] = state.d1();
        report.results["d2"] = state.d2();
        report.results["rank"] = polar.schmidt.rank;
        report.results["coefficients"] = coefficients;
        add_residual(report, "factorization_left", residuals.left_factorization, 1e-10);
        add_residual(report, "factorization_right", residuals.right_factorization, 1e-10);
        add_residual(report, "similarity_transport", residuals.similarity, 1e-10);
        add_residual(report, "antiunitarity", residuals.antiunitarity, 1e-10);
      });
}

Report cmd_classify(const std::string& spectrum_text, const std::string& coeffs_text) {
  Json inputs{{"spectrum", spectrum_text}, {"coeffs", coeffs_text}};
  return run_command("classify", std::move(inputs), [&](Report& report) {
    SpectralModel spectrum = SpectralModel::from(parse_decay_model(spectrum_text));
    DecayModel coeffs = parse_decay_model(coeffs_text);

    report.results["spectrum"] = spectrum.decay.str();
    report.results["coeffs"] = coeffs.str();
    report.results["summable"] = Json{{"s0", summable(spectrum, coeffs, 0)},
                                      {"s1", summable(spectrum, coeffs, 1)},
                                      {"s2", summable(spectrum, coeffs, 2)}};
    const Tier tier = classify_vector(spectrum, coeffs);
    report.results["tier"] = tier_name(tier);

    if (tier != Tier::NotInSpace) {
      SteeringImage image = steering_image(spectrum, coeffs);
      report.results["steering_image"] = Json{{"image", image.image.str()},
                                              {"input_tier", tier_name(image.input_tier)},
                                              {"output_tier", tier_name(image.output_tier)}};
    } else {
      report.results["steering_image"] = nullptr;
    }
  });
}

Report cmd_verify(const std::filesystem::path& state_file, std::uint64_t seed, int trials) {
  Json inputs{{"state_file", state_file.string()},
              {"seed", seed},
              {"trials", trials}};
  return run_command("verify", std::move(inputs), [&](Report& report) {
    BipartiteState state = load_state(state_file);
    std::vector<InvariantResult> results = run_invariant_suite(state, seed, trials);

    bool all_pass = true;
    Json invariants = Json::array();
    for (const InvariantResult& r : results) {
      invariants.push_back(Json{{"name", r.name},
                                {"max_residual", r.max_residual},
                                {"tolerance", r.tolerance},
                                {"trials", r.trials},
                                {"pass", r.pass}});
      report.residuals[r.name] = r.max_residual;
      all_pass = all_pass && r.pass;
    }
    report.results["d1"] = state.d1();
    report.results["d2"] = state.d2();
    report.results["invariants"] = invariants;
    report.results["all_pass"] = all_pass;
    report.within_tolerance = all_pass;
  });
}

}  // namespace steerkit
