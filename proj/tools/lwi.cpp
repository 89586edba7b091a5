// Copyright 2026 The LWI Simulator Authors
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

// lwi: steady-state solves and figure-preset sweeps for the four-level
// probe-gain model.
//
//   lwi solve --config params.json [--format csv|json] [--out PATH]
//   lwi sweep (--preset NAME | --config sweep.json) [--points N]
//             [--format csv|json] [--out PATH] [--threads N]

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "lwi/config.hpp"
#include "lwi/kernels.hpp"
#include "lwi/output.hpp"
#include "lwi/sweep.hpp"

namespace {

void logParams(std::ostream& log, const lwi::SystemParams& p) {
  log << "# params: omega=" << p.omega << " g=" << p.g << " delta1=" << p.delta1
      << " delta2=" << p.delta2 << " gamma_ab=" << p.gamma_ab << " gamma_ac=" << p.gamma_ac
      << " gamma_bd=" << p.gamma_bd << " gamma_cd=" << p.gamma_cd << " r_bd=" << p.r_bd
      << " r_cd=" << p.r_cd;
  if (!p.unit_label.empty()) log << " (units of " << p.unit_label << ")";
  log << '\n';
}

void logSweep(std::ostream& log, const lwi::SweepSpec& spec) {
  log << "# sweep: " << spec.name << ", parameter " << lwi::parameterName(spec.parameter)
      << " over [" << spec.grid.front() << ", " << spec.grid.back() << "], "
      << spec.grid.size() << " points";
  if (spec.coupling_rule != lwi::CouplingRule::kNone) {
    log << ", " << lwi::couplingRuleText(spec.coupling_rule);
  }
  log << '\n';
  logParams(log, spec.base);
}

// Provenance goes to stdout unless stdout carries the data.
std::ostream& provenanceStream(const std::string& out) {
  return out == "-" ? std::cerr : std::cout;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Four-level lasing-without-inversion simulator"};
  app.require_subcommand(1);

  std::string format = "csv";
  std::string out = "-";

  auto* solve = app.add_subcommand("solve", "Steady state and observables for one parameter set");
  std::string solve_config;
  solve->add_option("--config", solve_config, "JSON parameter file")->required();
  solve->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  solve->add_option("--out", out, "Output path ('-' for stdout)");

  auto* sweep = app.add_subcommand("sweep", "Parameter sweep from a preset or config file");
  std::string preset_name;
  std::string sweep_config;
  std::optional<std::size_t> points;
  unsigned threads = 1;
  auto* preset_opt = sweep->add_option("--preset", preset_name, "fig3, fig4, fig5 or fig6");
  auto* config_opt = sweep->add_option("--config", sweep_config, "JSON sweep file");
  preset_opt->excludes(config_opt);
  sweep->add_option("--points", points, "Regrid the range uniformly to N points")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--out", out, "Output path ('-' for stdout)");
  sweep->add_option("--threads", threads, "Worker threads (0 = all cores)");

  CLI11_PARSE(app, argc, argv);

  try {
    const lwi::OutputFormat fmt = lwi::parseFormat(format);
    std::ostream& log = provenanceStream(out);

    if (*solve) {
      const lwi::Config cfg = lwi::loadConfig(solve_config);
      const auto* params = std::get_if<lwi::SystemParams>(&cfg);
      if (!params) throw lwi::Error("solve expects a config without a 'sweep' block");
      logParams(log, *params);
      const lwi::SweepRow row =
          lwi::evaluatePoint(*params, std::numeric_limits<double>::quiet_NaN());
      if (!row.ok) throw lwi::Error(row.error);
      lwi::writeOutput({row}, fmt, out);
      return 0;
    }

    if (preset_name.empty() == sweep_config.empty()) {
      throw lwi::Error("sweep needs exactly one of --preset or --config");
    }
    lwi::SweepSpec spec;
    if (!preset_name.empty()) {
      spec = lwi::preset(preset_name);
    } else {
      const lwi::Config cfg = lwi::loadConfig(sweep_config);
      const auto* s = std::get_if<lwi::SweepSpec>(&cfg);
      if (!s) throw lwi::Error("config has no 'sweep' block; use 'lwi solve' instead");
      spec = *s;
    }
    if (points) spec = lwi::regrid(spec, *points);
    logSweep(log, spec);
    log << "# kernels: " << lwi::kernels::activeKernels().name << '\n';

    const std::vector<lwi::SweepRow> rows = lwi::runSweep(spec, {threads});
    const auto failed = std::count_if(rows.begin(), rows.end(), [](const auto& r) { return !r.ok; });
    if (failed > 0) log << "# warning: " << failed << " point(s) failed; see the error column\n";
    lwi::writeOutput(rows, fmt, out);
    return 0;
  } catch (const lwi::ConfigError& e) {
    std::cerr << "lwi: config error: " << e.what() << '\n';
  } catch (const lwi::ValidationError& e) {
    std::cerr << "lwi: invalid parameter '" << e.field() << "': " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "lwi: " << e.what() << '\n';
  }
  return 1;
}
