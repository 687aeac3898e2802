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

#include <filesystem>
#include <string>
#include <string_view>

#include "steerkit/bipartite_state.hpp"

namespace steerkit {

/// State file format: UTF-8 JSON with integer fields d1, d2, row-major
/// arrays re and im of d1*d2 numbers, and an optional boolean normalize
/// (default true).
BipartiteState parse_state_json(const std::string& text);

BipartiteState load_state(const std::filesystem::path& file);

/// Inline vector syntax: components separated by ';', each component written
/// as re,im.
ComplexVector parse_inline_vector(std::string_view text);

std::string format_inline_vector(const ComplexVector& v);

}  // namespace steerkit
