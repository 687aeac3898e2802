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

#include "steerkit/state_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace steerkit {

namespace {

double parse_component(std::string_view text) {
  double value = 0.0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  require(ec == std::errc() && end == text.data() + text.size(), ErrorCode::ParseError,
          "bad vector component '" + std::string(text) + "'");
  return value;
}

std::string format_number(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, end);
}

}  // namespace

BipartiteState parse_state_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }

  require(doc.is_object(), ErrorCode::ParseError, "state file must be a JSON object");
  for (const char* field : {"d1", "d2", "re", "im"}) {
    require(doc.contains(field), ErrorCode::ParseError,
            std::string("state file is missing field '") + field + "'");
  }
  require(doc["d1"].is_number_integer() && doc["d2"].is_number_integer(),
          ErrorCode::ParseError, "d1 and d2 must be integers");

  const auto d1 = doc["d1"].get<Index>();
  const auto d2 = doc["d2"].get<Index>();
  require(d1 >= 1 && d2 >= 1, ErrorCode::ParseError, "d1 and d2 must be positive");

  const auto& re = doc["re"];
  const auto& im = doc["im"];
  require(re.is_array() && im.is_array(), ErrorCode::ParseError,
          "re and im must be arrays");
  const auto count = static_cast<std::size_t>(d1 * d2);
  require(re.size() == count && im.size() == count, ErrorCode::ParseError,
          "re and im must each hold d1*d2 numbers");

  ComplexMatrix coeffs(d1, d2);
  for (Index k = 0; k < d1; ++k) {
    for (Index n = 0; n < d2; ++n) {
      const auto at = static_cast<std::size_t>(k * d2 + n);
      require(re[at].is_number() && im[at].is_number(), ErrorCode::ParseError,
              "re and im entries must be numbers");
      coeffs(k, n) = Complex(re[at].get<double>(), im[at].get<double>());
    }
  }

  bool normalize = true;
  if (doc.contains("normalize")) {
    require(doc["normalize"].is_boolean(), ErrorCode::ParseError,
            "normalize must be a boolean");
    normalize = doc["normalize"].get<bool>();
  }
  return make_state(coeffs, normalize);
}

BipartiteState load_state(const std::filesystem::path& file) {
  std::ifstream in(file);
  require(in.good(), ErrorCode::FileNotFound, "cannot open '" + file.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_state_json(buffer.str());
}

ComplexVector parse_inline_vector(std::string_view text) {
  std::vector<Complex> components;
  std::stringstream stream{std::string(text)};
  std::string piece;
  while (std::getline(stream, piece, ';')) {
    const auto comma = piece.find(',');
    require(comma != std::string::npos, ErrorCode::ParseError,
            "component '" + piece + "' must have the form re,im");
    components.emplace_back(parse_component(std::string_view(piece).substr(0, comma)),
                            parse_component(std::string_view(piece).substr(comma + 1)));
  }
  require(!components.empty(), ErrorCode::ParseError, "vector has no components");

  ComplexVector v(static_cast<Index>(components.size()));
  for (std::size_t i = 0; i < components.size(); ++i) v[static_cast<Index>(i)] = components[i];
  return v;
}

std::string format_inline_vector(const ComplexVector& v) {
  std::string out;
  for (Index i = 0; i < v.size(); ++i) {
    if (i > 0) out += ";";
    out += format_number(v[i].real()) + "," + format_number(v[i].imag());
  }
  return out;
}

}  // namespace steerkit
