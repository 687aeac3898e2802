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

#include <doctest.h>

#include <cmath>
#include <vector>

#include "steerkit/fine_structure.hpp"

using namespace steerkit;

namespace {

SpectralModel spectrum(const std::string& text) {
  return SpectralModel::from(parse_decay_model(text));
}

DecayModel coeffs(const std::string& text) { return parse_decay_model(text); }

/// Partial sum of |a_k|^2 r_k^{-s} up to K terms, for the numerical shadow.
double partial_sum(const SpectralModel& sp, const DecayModel& cf, int s, std::size_t K) {
  double total = 0.0;
  for (std::size_t k = 1; k <= K; ++k) {
    const double a = cf.term(k);
    const double r = sp.decay.term(k);
    total += a * a * std::pow(r, -static_cast<double>(s));
  }
  return total;
}

const std::vector<double> kSpectrumExponents{1.5, 2.0, 3.0};
const std::vector<double> kCoeffExponents{0.6, 0.8, 1.0, 1.5, 2.0, 2.5, 3.0};

}  // namespace

TEST_CASE("summable decides the stated p-series and geometric cases") {
  CHECK(summable(spectrum("pow:2"), coeffs("pow:2"), 1));       // k^-2
  CHECK_FALSE(summable(spectrum("pow:2"), coeffs("pow:2"), 2)); // k^0
  CHECK(summable(spectrum("exp:0.5"), coeffs("exp:0.6"), 1));   // base 0.72
  CHECK_FALSE(summable(spectrum("exp:0.5"), coeffs("exp:0.6"), 2));  // base 1.44
  CHECK_THROWS_AS(summable(spectrum("pow:2"), coeffs("pow:2"), 3), Error);
}

TEST_CASE("a total exponent of exactly one diverges") {
  // 2q - s p = 1 with s = 1: q = 1.5, p = 2.
  CHECK_FALSE(summable(spectrum("pow:2"), coeffs("pow:1.5"), 1));
  // and with s = 0: q = 0.5.
  CHECK_FALSE(summable(spectrum("pow:2"), coeffs("pow:0.5"), 0));
}

TEST_CASE("a geometric base of exactly one defers to the power factor") {
  // |a_k|^2 r_k^{-1} with a = powexp(1, sqrt(0.5)) and r = exp(0.5):
  // bases cancel exactly, leaving k^-2.
  SpectralModel sp = spectrum("exp:0.5");
  DecayModel image = sqrt_image(sp, coeffs("pow:1"));
  CHECK(image.kind() == DecayKind::PowerExp);
  CHECK(summable(sp, image, 1));
  CHECK_FALSE(summable(sp, image, 2));
}

TEST_CASE("classify_vector truth table for a pow:2 spectrum") {
  SpectralModel sp = spectrum("pow:2");
  CHECK(classify_vector(sp, coeffs("pow:0.4")) == Tier::NotInSpace);
  CHECK(classify_vector(sp, coeffs("pow:1")) == Tier::ClosureOnly);
  CHECK(classify_vector(sp, coeffs("pow:2")) == Tier::SqrtRangeOnly);
  CHECK(classify_vector(sp, coeffs("pow:3")) == Tier::Range);
}

TEST_CASE("sqrt_image shifts the tier one step toward the range") {
  SpectralModel sp = spectrum("pow:2");

  DecayModel from_closure = sqrt_image(sp, coeffs("pow:1"));
  CHECK(from_closure.kind() == DecayKind::PowerLaw);
  CHECK(from_closure.exponent() == doctest::Approx(2.0));
  CHECK(classify_vector(sp, from_closure) == Tier::SqrtRangeOnly);

  DecayModel from_sqrt = sqrt_image(sp, coeffs("pow:2"));
  CHECK(from_sqrt.exponent() == doctest::Approx(3.0));
  CHECK(classify_vector(sp, from_sqrt) == Tier::Range);

  SpectralModel exp_sp = spectrum("exp:0.5");
  DecayModel finite = sqrt_image(exp_sp, coeffs("finite:1"));
  CHECK(finite.kind() == DecayKind::FiniteSupport);
  REQUIRE(finite.values().size() == 1);
  CHECK(finite.values()[0] == doctest::Approx(std::sqrt(0.5)));
  CHECK(classify_vector(exp_sp, finite) == Tier::Range);

  CHECK_THROWS_AS(sqrt_image(sp, coeffs("pow:0.4")), Error);
}

TEST_CASE("correlation_image keeps the model and the tier") {
  DecayModel power = coeffs("pow:2");
  DecayModel power_image = correlation_image(power);
  CHECK(power_image.kind() == DecayKind::PowerLaw);
  CHECK(power_image.exponent() == power.exponent());

  DecayModel expo = coeffs("exp:0.7");
  DecayModel expo_image = correlation_image(expo);
  CHECK(expo_image.kind() == DecayKind::Exponential);
  CHECK(expo_image.log_base() == expo.log_base());

  for (double p : kSpectrumExponents) {
    SpectralModel sp = SpectralModel::from(DecayModel::power_law(p));
    for (double q : {0.6, 1.0, 2.0, 3.0}) {
      DecayModel c = DecayModel::power_law(q);
      CHECK(classify_vector(sp, correlation_image(c)) == classify_vector(sp, c));
    }
  }
}

TEST_CASE("steering_image composes correlation and square root") {
  SpectralModel sp = spectrum("pow:2");

  SteeringImage closure_case = steering_image(sp, coeffs("pow:1"));
  CHECK(closure_case.input_tier == Tier::ClosureOnly);
  CHECK(closure_case.output_tier == Tier::SqrtRangeOnly);
  CHECK(closure_case.image.kind() == DecayKind::PowerLaw);
  CHECK(closure_case.image.exponent() == doctest::Approx(2.0));

  SteeringImage sqrt_case = steering_image(sp, coeffs("pow:2"));
  CHECK(sqrt_case.input_tier == Tier::SqrtRangeOnly);
  CHECK(sqrt_case.output_tier == Tier::Range);

  CHECK_THROWS_AS(steering_image(sp, coeffs("pow:0.4")), Error);
}

TEST_CASE("steering_image of pow:1 under an exponential spectrum") {
  SpectralModel sp = spectrum("exp:0.5");
  DecayModel c = coeffs("pow:1");

  // In the space, but sum k^-2 * 2^k diverges: closure only.
  CHECK(summable(sp, c, 0));
  CHECK_FALSE(summable(sp, c, 1));
  SteeringImage image = steering_image(sp, c);
  CHECK(image.input_tier == Tier::ClosureOnly);

  // Image model is powexp:1,sqrt(0.5); classify it independently.
  CHECK(image.image.kind() == DecayKind::PowerExp);
  CHECK(image.image.exponent() == doctest::Approx(1.0));
  CHECK(image.image.base() == doctest::Approx(std::sqrt(0.5)));
  CHECK(summable(sp, image.image, 0));
  CHECK(summable(sp, image.image, 1));
  CHECK_FALSE(summable(sp, image.image, 2));
  CHECK(image.output_tier == Tier::SqrtRangeOnly);
}

TEST_CASE("summability chain holds over a parameter grid") {
  for (double p : kSpectrumExponents) {
    SpectralModel sp = SpectralModel::from(DecayModel::power_law(p));
    for (double q : kCoeffExponents) {
      DecayModel c = DecayModel::power_law(q);
      const bool s0 = summable(sp, c, 0);
      const bool s1 = summable(sp, c, 1);
      const bool s2 = summable(sp, c, 2);
      CHECK((!s2 || s1));  // s2 => s1
      CHECK((!s1 || s0));  // s1 => s0
    }
  }
}

TEST_CASE("tier arrows hold on every grid cell") {
  for (double p : kSpectrumExponents) {
    SpectralModel sp = SpectralModel::from(DecayModel::power_law(p));
    for (double q : kCoeffExponents) {
      DecayModel c = DecayModel::power_law(q);
      const Tier tier = classify_vector(sp, c);
      if (tier == Tier::NotInSpace) continue;

      const Tier image_tier = classify_vector(sp, sqrt_image(sp, c));
      switch (tier) {
        case Tier::ClosureOnly: CHECK(image_tier == Tier::SqrtRangeOnly); break;
        case Tier::SqrtRangeOnly: CHECK(image_tier == Tier::Range); break;
        case Tier::Range: CHECK(image_tier == Tier::Range); break;
        default: FAIL("unexpected tier");
      }

      SteeringImage si = steering_image(sp, c);
      CHECK(si.input_tier == tier);
      CHECK(si.output_tier == image_tier);
      // Composition at the model level: same kind and parameters as the
      // square-root image of the correlation image.
      DecayModel composed = sqrt_image(sp, correlation_image(c));
      CHECK(si.image.kind() == composed.kind());
      CHECK(si.image.exponent() == composed.exponent());
      CHECK(si.image.log_base() == composed.log_base());
    }
  }
}

TEST_CASE("a finite spectrum collapses the chain") {
  SpectralModel sp = SpectralModel::from(DecayModel::finite_support({0.5, 0.3, 0.2}));
  CHECK(classify_vector(sp, coeffs("finite:1,2")) == Tier::Range);
  CHECK(classify_vector(sp, coeffs("finite:0.1,0.2,0.3")) == Tier::Range);
  // Coefficients from an infinite family classify over the finite index set.
  CHECK(classify_vector(sp, coeffs("pow:1")) == Tier::Range);
}

TEST_CASE("decomposition_report partitions the four p-series samples") {
  SpectralModel sp = spectrum("pow:2");
  std::vector<DecayModel> samples{coeffs("pow:0.4"), coeffs("pow:1"), coeffs("pow:2"),
                                  coeffs("pow:3")};
  DecompositionReport report = decomposition_report(sp, samples);
  CHECK(report.exhaustive_and_disjoint);
  for (const auto& group : report.groups) CHECK(group.size() == 1);
  CHECK(report.entries[0].tier == Tier::NotInSpace);
  CHECK(report.entries[1].tier == Tier::ClosureOnly);
  CHECK(report.entries[2].tier == Tier::SqrtRangeOnly);
  CHECK(report.entries[3].tier == Tier::Range);
  CHECK(report.table().find("pow:3") != std::string::npos);
}

TEST_CASE("decomposition_report with every sample in the range") {
  SpectralModel sp = spectrum("pow:2");
  std::vector<DecayModel> samples{coeffs("pow:5"), coeffs("pow:5")};
  DecompositionReport report = decomposition_report(sp, samples);
  CHECK(report.groups[static_cast<std::size_t>(Tier::Range)].size() == 2);
  CHECK(report.groups[static_cast<std::size_t>(Tier::ClosureOnly)].empty());
  CHECK_THROWS_AS(decomposition_report(sp, {}), Error);
}

TEST_CASE("decomposition_report is exhaustive and disjoint on a mixed grid") {
  SpectralModel sp = spectrum("exp:0.5");
  std::vector<DecayModel> samples;
  for (double q : kCoeffExponents) samples.push_back(DecayModel::power_law(q));
  for (double d : {0.3, 0.6, 0.8}) samples.push_back(DecayModel::exponential(d));

  DecompositionReport report = decomposition_report(sp, samples);
  CHECK(report.exhaustive_and_disjoint);
  std::size_t total = 0;
  for (const auto& group : report.groups) total += group.size();
  CHECK(total == samples.size());
}

TEST_CASE("numerical shadow confirms the symbolic decisions") {
  SpectralModel sp = spectrum("pow:2");
  for (double q : kCoeffExponents) {
    DecayModel c = DecayModel::power_law(q);
    for (int s : {0, 1, 2}) {
      // Exclude cells too close to the p-series boundary for finite sums.
      const double total_exponent = 2.0 * q - static_cast<double>(s) * 2.0;
      if (std::abs(total_exponent - 1.0) < 0.5) continue;

      const double at_half = partial_sum(sp, c, s, 1u << 11);
      const double at_full = partial_sum(sp, c, s, 1u << 12);
      const double doubling_ratio = at_full / at_half;
      if (summable(sp, c, s)) {
        CHECK(doubling_ratio < 1.01);
      } else {
        CHECK(doubling_ratio > 1.05);
      }
    }
  }
}

TEST_CASE("decay model parsing and printing") {
  CHECK(parse_decay_model("pow:2").str() == "pow:2");
  CHECK(parse_decay_model("POW:2.5").str() == "pow:2.5");
  CHECK(parse_decay_model(" exp:0.25 ").str() == "exp:0.25");
  CHECK(parse_decay_model("PowExp:1,0.5").str() == "powexp:1,0.5");
  CHECK(parse_decay_model("finite:1,0.5,0.25").values().size() == 3);

  CHECK_THROWS_AS(parse_decay_model("pow"), Error);
  CHECK_THROWS_AS(parse_decay_model("pow:abc"), Error);
  CHECK_THROWS_AS(parse_decay_model("powexp:1"), Error);
  CHECK_THROWS_AS(parse_decay_model("gauss:1"), Error);
  CHECK_THROWS_AS(parse_decay_model("exp:1.5"), Error);
  try {
    parse_decay_model("exp:1.5");
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
  }
}

TEST_CASE("spectral model validation") {
  CHECK_THROWS_AS(SpectralModel::from(parse_decay_model("pow:1")), Error);
  CHECK_THROWS_AS(SpectralModel::from(parse_decay_model("finite:0.5,0")), Error);
  CHECK_NOTHROW(SpectralModel::from(parse_decay_model("pow:1.5")));
  CHECK_NOTHROW(SpectralModel::from(parse_decay_model("powexp:-3,0.9")));
}

TEST_CASE("decay model terms follow their law") {
  CHECK(parse_decay_model("pow:2").term(3) == doctest::Approx(1.0 / 9.0));
  CHECK(parse_decay_model("exp:0.5").term(3) == doctest::Approx(0.125));
  CHECK(parse_decay_model("powexp:1,0.5").term(2) == doctest::Approx(0.125));
  CHECK(parse_decay_model("finite:0.7,0.3").term(2) == doctest::Approx(0.3));
  CHECK(parse_decay_model("finite:0.7,0.3").term(3) == 0.0);
}
