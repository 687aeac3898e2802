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

#include <cstdint>
#include <filesystem>
#include <string>

#include <json.hpp>

#include "steerkit/errors.hpp"

namespace steerkit {

/// Machine-readable result of one CLI command. Serialization is deterministic:
/// identical inputs and seed produce byte-identical text.
struct Report {
  std::string command;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  nlohmann::ordered_json results = nlohmann::ordered_json::object();
  nlohmann::ordered_json residuals = nlohmann::ordered_json::object();
  bool ok = true;
  bool within_tolerance = true;
  std::string error_code;
  std::string error_message;

  nlohmann::ordered_json to_json() const;
  std::string render() const;
  /// 0 iff status is ok and every checked residual is under its tolerance.
  int exit_code() const { return (ok && within_tolerance) ? 0 : 1; }
};

/// JSON text with every floating-point number printed to 17 significant
/// digits, so binary64 values survive a round trip.
std::string render_json(const nlohmann::ordered_json& value, int indent = 2);

Report cmd_schmidt(const std::filesystem::path& state_file);
Report cmd_steer(const std::filesystem::path& state_file, const std::string& psi_text,
                 bool normalize_psi);
Report cmd_polar(const std::filesystem::path& state_file);
Report cmd_classify(const std::string& spectrum_text, const std::string& coeffs_text);
Report cmd_verify(const std::filesystem::path& state_file, std::uint64_t seed, int trials);

}  // namespace steerkit
