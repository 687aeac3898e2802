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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "steerkit/report.hpp"

namespace {

int emit(const steerkit::Report& report, const std::string& json_file) {
  const std::string text = report.render();
  std::cout << text;
  if (!json_file.empty()) {
    std::ofstream out(json_file);
    if (!out.good()) {
      std::cerr << "cannot write " << json_file << "\n";
      return 2;
    }
    out << text;
  }
  return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schrodinger steering of bipartite pure states"};
  app.set_help_all_flag("--help-all");
  app.require_subcommand(1);

  std::string state_file;
  std::string psi_text;
  std::string spectrum_text;
  std::string coeffs_text;
  std::string json_file;
  bool normalize = false;
  std::uint64_t seed = 0;
  int trials = 100;

  CLI::App* schmidt = app.add_subcommand("schmidt", "Schmidt data of a state file");
  schmidt->add_option("state", state_file, "state JSON file")->required();
  schmidt->add_option("--json", json_file, "also write the report to this file");

  CLI::App* steer = app.add_subcommand("steer", "steer by an elementary nearby event");
  steer->add_option("state", state_file, "state JSON file")->required();
  steer->add_option("psi", psi_text, "nearby vector, components 're,im' joined by ';'")
      ->required();
  steer->add_flag("--normalize", normalize, "normalize psi before steering");
  steer->add_option("--json", json_file, "also write the report to this file");

  CLI::App* polar = app.add_subcommand("polar", "polar factorizations and residuals");
  polar->add_option("state", state_file, "state JSON file")->required();
  polar->add_option("--json", json_file, "also write the report to this file");

  CLI::App* classify =
      app.add_subcommand("classify", "operator-range tier of a symbolic vector");
  classify->add_option("spectrum", spectrum_text, "spectrum decay model")->required();
  classify->add_option("coeffs", coeffs_text, "coefficient decay model")->required();
  classify->add_option("--json", json_file, "also write the report to this file");

  CLI::App* verify = app.add_subcommand("verify", "run the invariant suite on a state");
  verify->add_option("state", state_file, "state JSON file")->required();
  verify->add_option("--seed", seed, "base seed for the trials");
  verify->add_option("--trials", trials, "number of randomized trials");
  verify->add_option("--json", json_file, "also write the report to this file");

  CLI11_PARSE(app, argc, argv);

  if (schmidt->parsed()) return emit(steerkit::cmd_schmidt(state_file), json_file);
  if (steer->parsed())
    return emit(steerkit::cmd_steer(state_file, psi_text, normalize), json_file);
  if (polar->parsed()) return emit(steerkit::cmd_polar(state_file), json_file);
  if (classify->parsed())
    return emit(steerkit::cmd_classify(spectrum_text, coeffs_text), json_file);
  if (verify->parsed())
    return emit(steerkit::cmd_verify(state_file, seed, trials), json_file);
  return 1;
}
