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

#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lwi/errors.hpp"
#include "lwi/model.hpp"

namespace lwi {

/// Malformed config text; line() is 1-based (0 when unknown).
class ConfigError : public Error {
 public:
  ConfigError(const std::string& what, std::size_t line = 0) : Error(what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

enum class SweptParameter {
  kDelta1,
  kDelta2,
  kDeltaCommon,  // sets delta1 and delta2 together
  kOmega,
  kG,
  kGammaAb,
  kGammaAc,
  kGammaBd,
  kGammaCd,
  kRBd,
  kRCd,
};

enum class CouplingRule {
  kNone,
  kDelta2EqualsLambdaPlus,  // delta2 = (delta1 - sqrt(delta1^2 + omega^2)) / 2
  kDelta2EqualsDelta1,
};

std::string_view parameterName(SweptParameter s) noexcept;
SweptParameter parseParameter(std::string_view name);
std::string_view couplingRuleText(CouplingRule r) noexcept;
CouplingRule parseCouplingRule(std::string_view text);

struct SweepSpec {
  std::string name;  // preset name or config stem; informational
  SystemParams base;
  SweptParameter parameter = SweptParameter::kDelta1;
  std::vector<double> grid;  // strictly monotone
  CouplingRule coupling_rule = CouplingRule::kNone;
};

inline constexpr std::size_t kDefaultGridPoints = 401;

/// `points` values from start to stop inclusive, evenly spaced.
std::vector<double> uniformGrid(double start, double stop, std::size_t points);

/// Same range as spec.grid, resampled uniformly to `points` values.
SweepSpec regrid(const SweepSpec& spec, std::size_t points);

/// Throws ConfigError for an empty or non-monotone grid, then validates base.
void validateSweep(const SweepSpec& spec);

/// Parameters for one grid point: sets the swept field, then applies the
/// coupling rule. The result is re-validated.
SystemParams pointParams(const SweepSpec& spec, double value);

/// fig3, fig4, fig5, fig6. Throws ConfigError for any other name.
SweepSpec preset(std::string_view name);
std::vector<std::string> presetNames();

using Config = std::variant<SystemParams, SweepSpec>;

/// JSON text -> config. A document with a "sweep" block is a SweepSpec,
/// otherwise a single-point SystemParams. Unknown keys are rejected.
Config parseConfig(std::string_view json_text, std::string name = "config");
Config loadConfig(const std::filesystem::path& path);

/// Inverse of parseConfig for sweeps (pump channels written as rates).
std::string sweepToJson(const SweepSpec& spec);

}  // namespace lwi
