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

#include "commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "svg_plot.hpp"

namespace qwalk::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<double> parse_double(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) {
    return std::nullopt;
  }
  return v;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

void finish_output(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

void prepare_out_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create output directory " + dir.string());
}

struct Simulation {
  std::shared_ptr<const WalkSpace> space;
  double phi = 0.0;
  SeriesRecord record;
};

Simulation simulate(const RunConfig& config, double phi) {
  Simulation sim;
  sim.space = make_space(resolve_graph(config.graph));
  sim.phi = phi;
  sim.record = record_series(make_initial_state(sim.space, resolve_initial(config)),
                             InteractionScheme(phi), config.steps);
  return sim;
}

std::vector<double> read_series_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read series file " + path.string());
  std::vector<double> series;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto comma = line.rfind(',');
    const std::string_view field =
        comma == std::string::npos ? std::string_view(line) : std::string_view(line).substr(comma + 1);
    if (auto v = parse_double(field)) {
      series.push_back(*v);
    } else if (!series.empty() || line_no > 1) {
      throw std::invalid_argument("series file line " + std::to_string(line_no) +
                                  ": not a number '" + std::string(field) + "'");
    }
  }
  return series;
}

}  // namespace

double parse_phi(std::string_view text) {
  std::string_view s = trim(text);
  double multiplier = 1.0;
  if (s.size() >= 2 && s.substr(s.size() - 2) == "pi") {
    s.remove_suffix(2);
    s = trim(s);
    if (!s.empty() && s.back() == '*') s.remove_suffix(1);
    multiplier = std::numbers::pi;
    if (s.empty() || s == "+") return multiplier;
    if (s == "-") return -multiplier;
  }
  const auto v = parse_double(s);
  if (!v) throw UsageError("cannot parse phi '" + std::string(text) + "'");
  return *v * multiplier;
}

std::string format_double(double v) {
  if (v == 0.0) return "0";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

Graph resolve_graph(const std::string& name_or_path) {
  const auto& names = catalog_names();
  if (std::find(names.begin(), names.end(), name_or_path) != names.end()) {
    return catalog(name_or_path);
  }
  std::ifstream in(name_or_path);
  if (!in) {
    throw UsageError("unknown graph '" + name_or_path +
                     "' (not a catalog name or a readable graph file)");
  }
  return read_graph(in, std::filesystem::path(name_or_path).stem().string());
}

InitialStateSpec resolve_initial(const RunConfig& config) {
  if (config.initial == "equal") return {InitialStateSpec::Kind::kEqual, 0};
  if (config.initial == "random") {
    if (!config.seed) throw UsageError("--initial random requires --seed");
    return {InitialStateSpec::Kind::kRandom, *config.seed};
  }
  throw UsageError("--initial must be 'equal' or 'random'");
}

int cmd_graph(const std::string& name, const std::string& export_path, std::ostream& out,
              std::ostream& err) {
  const auto& names = catalog_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    std::string known;
    for (const auto& n : names) known += " " + n;
    err << "error: unknown graph '" << name << "'; known:" << known << '\n';
    return kUsageError;
  }
  const Graph g = catalog(name);
  if (export_path == "-") {
    write_graph(out, g);
    return kSuccess;
  }
  std::ofstream file = open_output(export_path);
  write_graph(file, g);
  finish_output(file, export_path);
  return kSuccess;
}

int cmd_simulate(const RunConfig& config, std::ostream& err) {
  const Simulation sim = simulate(config, parse_phi(config.phi));
  prepare_out_dir(config.out_dir);
  const std::size_t n = sim.space->vertex_count();
  const SeriesRecord& rec = sim.record;

  const auto ent_path = config.out_dir / "entanglement.csv";
  auto ent = open_output(ent_path);
  ent << "t,E_bits\n";
  for (std::size_t t = 0; t < rec.entanglement.size(); ++t) {
    ent << t << ',' << format_double(rec.entanglement[t]) << '\n';
  }
  finish_output(ent, ent_path);

  const auto marg_path = config.out_dir / "marginals.csv";
  auto marg = open_output(marg_path);
  marg << 't';
  for (std::size_t v = 0; v < n; ++v) marg << ",P1_v" << v;
  for (std::size_t v = 0; v < n; ++v) marg << ",P2_v" << v;
  marg << '\n';
  for (std::size_t t = 0; t < rec.entanglement.size(); ++t) {
    marg << t;
    for (std::size_t v = 0; v < n; ++v) marg << ',' << format_double(rec.marginal1[v][t]);
    for (std::size_t v = 0; v < n; ++v) marg << ',' << format_double(rec.marginal2[v][t]);
    marg << '\n';
  }
  finish_output(marg, marg_path);

  if (config.plot) {
    const std::string tag = sim.space->graph().name() + ", phi = " + config.phi;
    write_line_plot(config.out_dir / "entanglement.svg", "Entanglement (" + tag + ")", "t",
                    "E (bits)", {{"E", rec.entanglement}});
    std::vector<LineSeries> lines;
    for (std::size_t v = 0; v < n; ++v) lines.push_back({"P1 v" + std::to_string(v), rec.marginal1[v]});
    write_line_plot(config.out_dir / "marginals.svg", "Particle 1 marginals (" + tag + ")", "t",
                    "probability", lines);
  }
  err << "wrote " << ent_path.string() << " and " << marg_path.string() << '\n';
  return kSuccess;
}

int cmd_spectrum(const RunConfig& config, const std::optional<std::filesystem::path>& input,
                 std::ostream& err) {
  std::vector<double> series;
  if (input) {
    series = read_series_csv(*input);
  } else {
    series = simulate(config, parse_phi(config.phi)).record.entanglement;
  }
  if (series.size() < kMinSpectrumLength) {
    throw UsageError("spectrum needs at least " + std::to_string(kMinSpectrumLength) +
                     " samples, got " + std::to_string(series.size()));
  }
  const PowerSpectrum spec = power_spectrum(series, config.alpha);

  prepare_out_dir(config.out_dir);
  const auto path = config.out_dir / "spectrum.csv";
  auto out = open_output(path);
  out << "freq_cycles_per_step,power,tier\n";
  if (spec.empty) {
    finish_output(out, path);
    err << "empty spectrum: the detrended, windowed series is identically zero "
           "(no oscillation to analyze); wrote header-only "
        << path.string() << '\n';
    return kEmptySpectrum;
  }

  std::vector<int> tier(spec.bins.size(), 0);
  for (const auto& f : prominent_frequencies(spec)) tier[f.bin] = f.tier;
  for (std::size_t k = 0; k < spec.bins.size(); ++k) {
    out << format_double(spec.frequency(k)) << ',' << format_double(spec.bins[k]) << ','
        << tier[k] << '\n';
  }
  finish_output(out, path);

  if (config.plot) {
    write_line_plot(config.out_dir / "spectrum.svg", "Normalized power spectrum",
                    "bin (frequency = bin / " + std::to_string(spec.series_length) + ")",
                    "|E|^2", {{"power", spec.bins}});
  }
  err << "wrote " << path.string() << '\n';
  return kSuccess;
}

std::vector<double> make_phi_grid(double min, double max, std::size_t count) {
  if (count == 0) throw UsageError("--phi-count must be >= 1");
  if (count == 1) return {min};
  std::vector<double> grid(count);
  for (std::size_t i = 0; i < count; ++i) {
    grid[i] = min + (max - min) * static_cast<double>(i) / static_cast<double>(count - 1);
  }
  grid.back() = max;
  return grid;
}

int cmd_feigenbaum(const RunConfig& config, const PhiGrid& grid_flags, std::ostream& err) {
  auto space = make_space(resolve_graph(config.graph));
  const std::vector<double> grid =
      make_phi_grid(parse_phi(grid_flags.min), parse_phi(grid_flags.max), grid_flags.count);
  if (config.steps < kMinSpectrumLength) {
    throw UsageError("--steps must be >= " + std::to_string(kMinSpectrumLength) +
                     " for spectral analysis");
  }
  SweepOptions opts;
  opts.steps = config.steps;
  opts.alpha = config.alpha;
  opts.initial = resolve_initial(config);
  opts.threads = grid_flags.threads;
  const FeigenbaumData data = feigenbaum_sweep(space, grid, opts);

  prepare_out_dir(config.out_dir);
  const auto path = config.out_dir / "feigenbaum.csv";
  auto out = open_output(path);
  out << "phi_radians,freq_cycles_per_step,tier\n";
  for (const auto& p : data.points) {
    out << format_double(p.phi) << ',' << format_double(p.frequency) << ',' << p.tier << '\n';
  }
  finish_output(out, path);

  if (config.plot) {
    std::vector<ScatterPoint> pts;
    for (const auto& p : data.points) pts.push_back({p.phi / std::numbers::pi, p.frequency, p.tier});
    write_scatter_plot(config.out_dir / "feigenbaum.svg",
                       "Prominent frequencies vs phi (" + space->graph().name() + ")",
                       "phi / pi", "frequency (cycles/step)", pts);
  }
  err << "wrote " << path.string() << " (" << data.points.size() << " points over "
      << grid.size() << " phi values)\n";
  return kSuccess;
}

int cmd_perturb(const RunConfig& config, const std::string& phi2_text, std::ostream& err) {
  const double phi1 = parse_phi(config.phi);
  const double phi2 = parse_phi(phi2_text);
  const Simulation a = simulate(config, phi1);
  const Simulation b = simulate(config, phi2);

  prepare_out_dir(config.out_dir);
  const auto path = config.out_dir / "perturb.csv";
  auto out = open_output(path);
  out << "t,E_phi1,E_phi2,P1v0_phi1,P1v0_phi2\n";
  double max_de = 0.0, max_dp = 0.0;
  const auto& ea = a.record.entanglement;
  const auto& eb = b.record.entanglement;
  const auto& pa = a.record.marginal1[0];
  const auto& pb = b.record.marginal1[0];
  for (std::size_t t = 0; t < ea.size(); ++t) {
    out << t << ',' << format_double(ea[t]) << ',' << format_double(eb[t]) << ','
        << format_double(pa[t]) << ',' << format_double(pb[t]) << '\n';
    max_de = std::max(max_de, std::abs(ea[t] - eb[t]));
    max_dp = std::max(max_dp, std::abs(pa[t] - pb[t]));
  }
  finish_output(out, path);

  if (config.plot) {
    write_line_plot(config.out_dir / "perturb.svg", "Entanglement, phi1 vs phi2", "t", "E (bits)",
                    {{"phi1 = " + config.phi, ea}, {"phi2 = " + phi2_text, eb}});
  }
  err << "max_abs_dE=" << format_double(max_de) << " max_abs_dP1v0=" << format_double(max_dp)
      << '\n';
  return kSuccess;
}

namespace {

void add_shared_flags(CLI::App* cmd, RunConfig& config) {
  cmd->add_option("--graph", config.graph, "catalog name or graph file path")
      ->capture_default_str();
  cmd->add_option("--phi", config.phi, "interaction phase: radians or <x>pi")
      ->capture_default_str();
  cmd->add_option("--steps", config.steps, "number of walk steps")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--initial", config.initial, "initial state")
      ->check(CLI::IsMember({"equal", "random"}))
      ->capture_default_str();
  cmd->add_option("--seed", config.seed, "seed for --initial random");
  cmd->add_option("--alpha", config.alpha, "taper parameter of the cosine window")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  cmd->add_option("--out", config.out_dir, "output directory")->capture_default_str();
  cmd->add_flag("--plot", config.plot, "also write SVG plots");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Interacting two-particle discrete-time quantum walks"};
  app.require_subcommand(1);

  RunConfig config;

  std::string graph_name, export_path = "-";
  auto* graph = app.add_subcommand("graph", "print or export a catalog graph");
  graph->add_option("name", graph_name, "catalog name")->required();
  graph->add_option("--export", export_path, "output file, or - for stdout")->capture_default_str();

  auto* simulate_cmd = app.add_subcommand("simulate", "write entanglement and marginal time series");
  add_shared_flags(simulate_cmd, config);

  std::optional<std::filesystem::path> input;
  auto* spectrum = app.add_subcommand("spectrum", "power spectrum of the entanglement series");
  add_shared_flags(spectrum, config);
  spectrum->add_option("--input", input, "analyze the last column of this CSV instead");

  PhiGrid grid;
  auto* feigenbaum = app.add_subcommand("feigenbaum", "prominent frequencies over a phi grid");
  add_shared_flags(feigenbaum, config);
  feigenbaum->add_option("--phi-min", grid.min, "first phi of the grid")->capture_default_str();
  feigenbaum->add_option("--phi-max", grid.max, "last phi of the grid")->capture_default_str();
  feigenbaum->add_option("--phi-count", grid.count, "number of grid points")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  feigenbaum->add_option("--threads", grid.threads, "worker threads, 0 = all cores")
      ->capture_default_str();

  std::string phi2;
  auto* perturb = app.add_subcommand("perturb", "compare series at two nearby phi values");
  add_shared_flags(perturb, config);
  perturb->add_option("--phi2", phi2, "second phase")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*graph) return cmd_graph(graph_name, export_path, out, err);
    if (*simulate_cmd) return cmd_simulate(config, err);
    if (*spectrum) return cmd_spectrum(config, input, err);
    if (*feigenbaum) return cmd_feigenbaum(config, grid, err);
    if (*perturb) return cmd_perturb(config, phi2, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsageError;
}

}  // namespace qwalk::cli
