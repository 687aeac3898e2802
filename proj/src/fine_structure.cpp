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

#include "steerkit/fine_structure.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

namespace steerkit {

namespace {

std::string format_number(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, end);
}

double parse_number(std::string_view text) {
  double value = 0.0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  require(ec == std::errc() && end == text.data() + text.size(), ErrorCode::ParseError,
          "bad decimal literal '" + std::string(text) + "'");
  require(std::isfinite(value), ErrorCode::ParseError,
          "non-finite literal '" + std::string(text) + "'");
  return value;
}

/// Pointwise product of two models. A finite factor bounds the support of the
/// product; with two infinite factors exponents add and log-bases add.
DecayModel product(const DecayModel& x, const DecayModel& y) {
  if (x.kind() == DecayKind::FiniteSupport || y.kind() == DecayKind::FiniteSupport) {
    std::size_t len = 0;
    if (x.kind() == DecayKind::FiniteSupport) len = x.values().size();
    if (y.kind() == DecayKind::FiniteSupport) {
      len = (len == 0) ? y.values().size() : std::min(len, y.values().size());
    }
    std::vector<double> values(len);
    for (std::size_t k = 1; k <= len; ++k) values[k - 1] = x.term(k) * y.term(k);
    return DecayModel::finite_support(std::move(values));
  }

  return DecayModel::from_exponents(x.exponent() + y.exponent(),
                                    x.log_base() + y.log_base());
}

DecayModel sqrt_model(const DecayModel& x) {
  if (x.kind() == DecayKind::FiniteSupport) {
    std::vector<double> values(x.values().size());
    for (std::size_t i = 0; i < values.size(); ++i) values[i] = std::sqrt(x.values()[i]);
    return DecayModel::finite_support(std::move(values));
  }
  return DecayModel::from_exponents(x.exponent() / 2.0, x.log_base() / 2.0);
}

}  // namespace

DecayModel DecayModel::power_law(double exponent) {
  require(std::isfinite(exponent), ErrorCode::InvalidInput,
          "power-law exponent must be finite");
  DecayModel m;
  m.kind_ = DecayKind::PowerLaw;
  m.exponent_ = exponent;
  return m;
}

DecayModel DecayModel::exponential(double base) {
  require(std::isfinite(base) && base > 0.0 && base < 1.0, ErrorCode::InvalidInput,
          "exponential base must lie in (0,1)");
  DecayModel m;
  m.kind_ = DecayKind::Exponential;
  m.log_base_ = std::log(base);
  return m;
}

DecayModel DecayModel::power_exp(double exponent, double base) {
  require(std::isfinite(exponent), ErrorCode::InvalidInput,
          "power exponent must be finite");
  require(std::isfinite(base) && base > 0.0 && base < 1.0, ErrorCode::InvalidInput,
          "exponential base must lie in (0,1)");
  DecayModel m;
  m.kind_ = DecayKind::PowerExp;
  m.exponent_ = exponent;
  m.log_base_ = std::log(base);
  return m;
}

DecayModel DecayModel::from_exponents(double exponent, double log_base) {
  require(std::isfinite(exponent) && std::isfinite(log_base) && log_base <= 0.0,
          ErrorCode::InvalidInput, "need a finite exponent and log base <= 0");
  DecayModel m;
  m.exponent_ = exponent;
  m.log_base_ = log_base;
  if (log_base == 0.0) {
    m.kind_ = DecayKind::PowerLaw;
  } else {
    m.kind_ = (exponent == 0.0) ? DecayKind::Exponential : DecayKind::PowerExp;
  }
  return m;
}

DecayModel DecayModel::finite_support(std::vector<double> values) {
  for (double v : values) {
    require(std::isfinite(v), ErrorCode::InvalidInput,
            "finite-support values must be finite");
  }
  DecayModel m;
  m.kind_ = DecayKind::FiniteSupport;
  m.values_ = std::move(values);
  return m;
}

double DecayModel::base() const { return std::exp(log_base_); }

double DecayModel::term(std::size_t k) const {
  switch (kind_) {
    case DecayKind::PowerLaw:
      return std::pow(static_cast<double>(k), -exponent_);
    case DecayKind::Exponential:
      return std::exp(log_base_ * static_cast<double>(k));
    case DecayKind::PowerExp:
      return std::pow(static_cast<double>(k), -exponent_) *
             std::exp(log_base_ * static_cast<double>(k));
    case DecayKind::FiniteSupport:
      return (k >= 1 && k <= values_.size()) ? values_[k - 1] : 0.0;
  }
  return 0.0;
}

std::string DecayModel::str() const {
  switch (kind_) {
    case DecayKind::PowerLaw:
      return "pow:" + format_number(exponent_);
    case DecayKind::Exponential:
      return "exp:" + format_number(base());
    case DecayKind::PowerExp:
      return "powexp:" + format_number(exponent_) + "," + format_number(base());
    case DecayKind::FiniteSupport: {
      std::string out = "finite:";
      for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i > 0) out += ",";
        out += format_number(values_[i]);
      }
      return out;
    }
  }
  return {};
}

DecayModel parse_decay_model(std::string_view text) {
  std::string lowered(text);
  while (!lowered.empty() && std::isspace(static_cast<unsigned char>(lowered.front())))
    lowered.erase(lowered.begin());
  while (!lowered.empty() && std::isspace(static_cast<unsigned char>(lowered.back())))
    lowered.pop_back();
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });

  const auto colon = lowered.find(':');
  require(colon != std::string::npos, ErrorCode::ParseError,
          "decay model needs the form kind:params, got '" + lowered + "'");
  const std::string kind = lowered.substr(0, colon);
  const std::string params = lowered.substr(colon + 1);

  std::vector<std::string> parts;
  std::stringstream stream(params);
  std::string piece;
  while (std::getline(stream, piece, ',')) parts.push_back(piece);
  require(!parts.empty(), ErrorCode::ParseError, "decay model has no parameters");

  try {
    if (kind == "pow") {
      require(parts.size() == 1, ErrorCode::ParseError, "pow takes one parameter");
      return DecayModel::power_law(parse_number(parts[0]));
    }
    if (kind == "exp") {
      require(parts.size() == 1, ErrorCode::ParseError, "exp takes one parameter");
      return DecayModel::exponential(parse_number(parts[0]));
    }
    if (kind == "powexp") {
      require(parts.size() == 2, ErrorCode::ParseError, "powexp takes two parameters");
      return DecayModel::power_exp(parse_number(parts[0]), parse_number(parts[1]));
    }
    if (kind == "finite") {
      std::vector<double> values;
      values.reserve(parts.size());
      for (const std::string& p : parts) values.push_back(parse_number(p));
      return DecayModel::finite_support(std::move(values));
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    throw Error(ErrorCode::ParseError, e.what());
  }
  throw Error(ErrorCode::ParseError, "unknown decay kind '" + kind + "'");
}

SpectralModel SpectralModel::from(DecayModel decay) {
  switch (decay.kind()) {
    case DecayKind::PowerLaw:
      require(decay.exponent() > 1.0, ErrorCode::InvalidInput,
              "power-law spectrum needs exponent > 1 to be summable");
      break;
    case DecayKind::Exponential:
    case DecayKind::PowerExp:
      break;  // base in (0,1) is always summable
    case DecayKind::FiniteSupport:
      require(!decay.values().empty(), ErrorCode::InvalidInput,
              "finite spectrum must be nonempty");
      for (double v : decay.values()) {
        require(v > 0.0, ErrorCode::InvalidInput,
                "spectrum terms must be strictly positive");
      }
      break;
  }
  return SpectralModel{std::move(decay)};
}

const char* tier_name(Tier tier) {
  switch (tier) {
    case Tier::Range: return "Range";
    case Tier::SqrtRangeOnly: return "SqrtRangeOnly";
    case Tier::ClosureOnly: return "ClosureOnly";
    case Tier::NotInSpace: return "NotInSpace";
  }
  return "Unknown";
}

bool summable(const SpectralModel& spectrum, const DecayModel& coeffs, int inverse_power) {
  require(inverse_power >= 0 && inverse_power <= 2, ErrorCode::InvalidInput,
          "inverse power must be 0, 1 or 2");
  const double s = static_cast<double>(inverse_power);

  // A finite index set decides immediately: the coefficients vanish beyond
  // their own support, and the eigenbasis ends with a finite spectrum.
  if (coeffs.kind() == DecayKind::FiniteSupport ||
      spectrum.decay.kind() == DecayKind::FiniteSupport) {
    return true;
  }

  const double log_ratio = 2.0 * coeffs.log_base() - s * spectrum.decay.log_base();
  if (log_ratio < 0.0) return true;
  if (log_ratio > 0.0) return false;
  const double total_exponent = 2.0 * coeffs.exponent() - s * spectrum.decay.exponent();
  return total_exponent > 1.0;
}

Tier classify_vector(const SpectralModel& spectrum, const DecayModel& coeffs) {
  if (!summable(spectrum, coeffs, 0)) return Tier::NotInSpace;
  if (summable(spectrum, coeffs, 2)) return Tier::Range;
  if (summable(spectrum, coeffs, 1)) return Tier::SqrtRangeOnly;
  return Tier::ClosureOnly;
}

DecayModel sqrt_image(const SpectralModel& spectrum, const DecayModel& coeffs) {
  require(classify_vector(spectrum, coeffs) != Tier::NotInSpace, ErrorCode::NotInDomain,
          "vector is outside the space; the square root map is not defined");
  return product(sqrt_model(spectrum.decay), coeffs);
}

DecayModel correlation_image(const DecayModel& coeffs) {
  return coeffs;
}

SteeringImage steering_image(const SpectralModel& spectrum, const DecayModel& coeffs) {
  SteeringImage out{correlation_image(coeffs), classify_vector(spectrum, coeffs),
                    Tier::NotInSpace};
  require(out.input_tier != Tier::NotInSpace, ErrorCode::NotInDomain,
          "vector is outside the closed range of rho_1");
  out.image = sqrt_image(spectrum, out.image);
  out.output_tier = classify_vector(spectrum, out.image);
  return out;
}

DecompositionReport decomposition_report(const SpectralModel& spectrum,
                                         const std::vector<DecayModel>& samples) {
  require(!samples.empty(), ErrorCode::InvalidInput, "sample list must be nonempty");

  DecompositionReport report;
  report.exhaustive_and_disjoint = true;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const Tier tier = classify_vector(spectrum, samples[i]);
    report.entries.push_back({samples[i], tier});
    report.groups[static_cast<std::size_t>(tier)].push_back(i);

    // Consistency of the decision with the inclusion chain: deeper
    // summability must imply the shallower ones.
    const bool s0 = summable(spectrum, samples[i], 0);
    const bool s1 = summable(spectrum, samples[i], 1);
    const bool s2 = summable(spectrum, samples[i], 2);
    if ((s2 && !s1) || (s1 && !s0)) report.exhaustive_and_disjoint = false;
  }
  return report;
}

std::string DecompositionReport::table() const {
  std::size_t width = 5;
  for (const Entry& e : entries) width = std::max(width, e.model.str().size());

  std::ostringstream out;
  out << "model";
  out << std::string(width - 5, ' ') << "  tier\n";
  for (const Entry& e : entries) {
    const std::string m = e.model.str();
    out << m << std::string(width - m.size(), ' ') << "  " << tier_name(e.tier) << "\n";
  }
  return out.str();
}

}  // namespace steerkit
