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

#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "steerkit/errors.hpp"

namespace steerkit {

enum class DecayKind { PowerLaw, Exponential, PowerExp, FiniteSupport };

/// Symbolic magnitude sequence over k = 1, 2, ...:
///
///   PowerLaw(q)       term_k = k^{-q}
///   Exponential(d)    term_k = d^k,          d in (0,1)
///   PowerExp(q,d)     term_k = k^{-q} d^k
///   FiniteSupport(v)  term_k = v[k-1], zero beyond the listed values
///
/// The exponential factor is carried as log(d) so that products and square
/// roots of a model stay exactly comparable: halving and doubling a log are
/// exact, so a base built as sqrt(d) cancels d exactly in later convergence
/// decisions. Summability over these families is decidable without any
/// tolerance.
class DecayModel {
 public:
  static DecayModel power_law(double exponent);
  static DecayModel exponential(double base);
  static DecayModel power_exp(double exponent, double base);
  static DecayModel finite_support(std::vector<double> values);

  /// Model k^{-exponent} * e^{log_base * k} with the log of the base given
  /// directly. This is how products and square roots of models are composed;
  /// going through the base itself would lose the exact log arithmetic the
  /// convergence decisions rely on. The kind is canonicalized.
  static DecayModel from_exponents(double exponent, double log_base);

  DecayKind kind() const { return kind_; }
  double exponent() const { return exponent_; }
  double log_base() const { return log_base_; }
  double base() const;
  const std::vector<double>& values() const { return values_; }

  /// Magnitude of term k (1-based).
  double term(std::size_t k) const;

  /// Canonical text form: pow:q, exp:d, powexp:q,d, finite:v1,v2,...
  std::string str() const;

 private:
  DecayModel() = default;

  DecayKind kind_ = DecayKind::PowerLaw;
  double exponent_ = 0.0;
  double log_base_ = 0.0;  // log of the exponential base; 0 means no factor
  std::vector<double> values_;
};

DecayModel parse_decay_model(std::string_view text);

/// Positive spectrum {r_k} of a density operator: a decay model restricted to
/// strictly positive, summable terms. The eigenbasis is indexed by the
/// spectrum's support, so a FiniteSupport spectrum bounds the index set.
struct SpectralModel {
  DecayModel decay;

  static SpectralModel from(DecayModel decay);
};

/// Position of a vector with coefficients {a_k} in the operator-range chain
/// range(rho) ⊂ range(rho^{1/2}) ⊂ closure(range(rho)), or outside the space
/// entirely when sum |a_k|^2 diverges.
enum class Tier { Range, SqrtRangeOnly, ClosureOnly, NotInSpace };

const char* tier_name(Tier tier);

/// Exact decision of  sum_k |a_k|^2 r_k^{-s} < infinity  for s = 0, 1, 2.
/// Geometric factors decide first (combined base < 1 converges, > 1
/// diverges); a combined base of exactly 1 defers to the p-series criterion,
/// where total exponent exactly 1 counts as divergent.
bool summable(const SpectralModel& spectrum, const DecayModel& coeffs, int inverse_power);

Tier classify_vector(const SpectralModel& spectrum, const DecayModel& coeffs);

/// Coefficient model of the image under rho^{1/2}: {r_k^{1/2} a_k}. Lifts a
/// vector one tier: ClosureOnly -> SqrtRangeOnly -> Range -> Range.
DecayModel sqrt_image(const SpectralModel& spectrum, const DecayModel& coeffs);

/// Coefficient model of the image under the correlation operator. Only the
/// phases change, so the model is returned unchanged and the tier is fixed.
DecayModel correlation_image(const DecayModel& coeffs);

struct SteeringImage {
  DecayModel image;
  Tier input_tier;
  Tier output_tier;
};

/// Image model of steering by the antilinear representative (square root
/// after correlation, equal spectra on both sides), with the tier arrow.
SteeringImage steering_image(const SpectralModel& spectrum, const DecayModel& coeffs);

struct DecompositionReport {
  struct Entry {
    DecayModel model;
    Tier tier;
  };
  std::vector<Entry> entries;
  std::array<std::vector<std::size_t>, 4> groups;  // entry indices by tier
  bool exhaustive_and_disjoint = false;

  std::string table() const;
};

DecompositionReport decomposition_report(const SpectralModel& spectrum,
                                         const std::vector<DecayModel>& samples);

}  // namespace steerkit
