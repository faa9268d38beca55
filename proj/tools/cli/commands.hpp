// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qwalk/qwalk.hpp"

namespace qwalk::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kFailure = 2,
  kEmptySpectrum = 3,
};

/// Bad flag values that are only detectable after parsing (unknown graph
/// name, malformed phi, missing seed). Maps to kUsageError.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Radians, or a multiple of pi written "<x>pi" (also "pi", "-pi").
double parse_phi(std::string_view text);

/// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

struct RunConfig {
  std::string graph = "k8";  // catalog name or path to a graph file
  std::string phi = "0";
  std::size_t steps = 500;
  std::string initial = "equal";  // equal | random
  std::optional<std::uint64_t> seed;
  double alpha = kDefaultAlpha;
  std::filesystem::path out_dir = ".";
  bool plot = false;
};

/// Catalog lookup first; otherwise the string is read as a graph file.
Graph resolve_graph(const std::string& name_or_path);
InitialStateSpec resolve_initial(const RunConfig& config);

int cmd_graph(const std::string& name, const std::string& export_path, std::ostream& out,
              std::ostream& err);
int cmd_simulate(const RunConfig& config, std::ostream& err);
int cmd_spectrum(const RunConfig& config, const std::optional<std::filesystem::path>& input,
                 std::ostream& err);

struct PhiGrid {
  std::string min = "0";
  std::string max = "pi";
  std::size_t count = 200;
  std::size_t threads = 0;
};

/// count == 1 yields {min}; otherwise count points spanning [min, max].
std::vector<double> make_phi_grid(double min, double max, std::size_t count);

int cmd_feigenbaum(const RunConfig& config, const PhiGrid& grid, std::ostream& err);
int cmd_perturb(const RunConfig& config, const std::string& phi2, std::ostream& err);

/// Full command-line entry point; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qwalk::cli
