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

#include "lwi/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace lwi {

namespace {

using nlohmann::json;

struct ParameterEntry {
  SweptParameter id;
  std::string_view name;
};

constexpr ParameterEntry kParameters[] = {
    {SweptParameter::kDelta1, "delta1"},     {SweptParameter::kDelta2, "delta2"},
    {SweptParameter::kDeltaCommon, "delta_common"},
    {SweptParameter::kOmega, "omega"},       {SweptParameter::kG, "g"},
    {SweptParameter::kGammaAb, "gamma_ab"},  {SweptParameter::kGammaAc, "gamma_ac"},
    {SweptParameter::kGammaBd, "gamma_bd"},  {SweptParameter::kGammaCd, "gamma_cd"},
    {SweptParameter::kRBd, "r_bd"},          {SweptParameter::kRCd, "r_cd"},
};

constexpr std::string_view kRuleLambdaPlus = "delta2 = lambda_plus(delta1)";
constexpr std::string_view kRuleEqual = "delta2 = delta1";

std::size_t lineOf(std::string_view text, std::size_t byte) {
  const std::size_t end = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + end, '\n'));
}

double number(const json& j, const std::string& key) {
  if (!j.is_number()) throw ConfigError("field '" + key + "' must be a number");
  return j.get<double>();
}

void rejectUnknown(const json& obj, std::initializer_list<std::string_view> allowed,
                   const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ConfigError("unknown key '" + key + "' in " + where);
    }
  }
}

SystemParams parseParams(const json& j) {
  if (!j.is_object()) throw ConfigError("'params' must be an object");
  rejectUnknown(j,
                {"omega", "g", "delta1", "delta2", "gamma_ab", "gamma_ac", "gamma_bd", "gamma_cd",
                 "r_bd", "r_cd", "n_bd", "n_cd", "unit_label"},
                "'params'");
  RawParams raw;
  auto read = [&](const char* key, std::optional<double>& slot) {
    if (auto it = j.find(key); it != j.end()) slot = number(*it, key);
  };
  read("omega", raw.omega);
  read("g", raw.g);
  read("delta1", raw.delta1);
  read("delta2", raw.delta2);
  read("gamma_ab", raw.gamma_ab);
  read("gamma_ac", raw.gamma_ac);
  read("gamma_bd", raw.gamma_bd);
  read("gamma_cd", raw.gamma_cd);
  read("r_bd", raw.r_bd);
  read("r_cd", raw.r_cd);
  read("n_bd", raw.n_bd);
  read("n_cd", raw.n_cd);
  if (auto it = j.find("unit_label"); it != j.end()) {
    if (!it->is_string()) throw ConfigError("field 'unit_label' must be a string");
    raw.unit_label = it->get<std::string>();
  }
  return validateParams(raw);
}

SweepSpec parseSweep(const json& j, SystemParams base, std::string name) {
  if (!j.is_object()) throw ConfigError("'sweep' must be an object");
  rejectUnknown(j, {"parameter", "start", "stop", "points", "values", "coupling_rule"},
                "'sweep'");
  SweepSpec spec;
  spec.name = std::move(name);
  spec.base = std::move(base);

  auto param = j.find("parameter");
  if (param == j.end() || !param->is_string()) {
    throw ConfigError("'sweep.parameter' must be a string");
  }
  spec.parameter = parseParameter(param->get<std::string>());

  if (auto rule = j.find("coupling_rule"); rule != j.end()) {
    if (!rule->is_string()) throw ConfigError("'sweep.coupling_rule' must be a string");
    spec.coupling_rule = parseCouplingRule(rule->get<std::string>());
  }

  const bool has_values = j.contains("values");
  const bool has_range = j.contains("start") || j.contains("stop") || j.contains("points");
  if (has_values == has_range) {
    throw ConfigError("'sweep' needs either 'values' or 'start'/'stop'/'points'");
  }
  if (has_values) {
    const json& values = j.at("values");
    if (!values.is_array()) throw ConfigError("'sweep.values' must be an array");
    for (const json& v : values) spec.grid.push_back(number(v, "sweep.values[]"));
  } else {
    if (!j.contains("start") || !j.contains("stop")) {
      throw ConfigError("'sweep' range needs both 'start' and 'stop'");
    }
    const double start = number(j.at("start"), "sweep.start");
    const double stop = number(j.at("stop"), "sweep.stop");
    std::size_t points = kDefaultGridPoints;
    if (auto it = j.find("points"); it != j.end()) {
      if (!it->is_number_integer() || it->get<long long>() < 1) {
        throw ConfigError("'sweep.points' must be a positive integer");
      }
      points = it->get<std::size_t>();
    }
    spec.grid = uniformGrid(start, stop, points);
  }
  validateSweep(spec);
  return spec;
}

SystemParams fig4Base() {
  SystemParams p;
  p.omega = 10.0;
  p.g = 1.0;
  p.gamma_ab = 2.0;
  p.gamma_ac = 2.0;
  p.gamma_bd = 1.0;
  p.gamma_cd = 1.5;
  p.r_bd = 0.0;
  p.r_cd = 1.0;
  p.unit_label = "gamma_bd";
  return p;
}

}  // namespace

std::string_view parameterName(SweptParameter s) noexcept {
  for (const auto& e : kParameters) {
    if (e.id == s) return e.name;
  }
  return "unknown";
}

SweptParameter parseParameter(std::string_view name) {
  for (const auto& e : kParameters) {
    if (e.name == name) return e.id;
  }
  throw ConfigError("unknown swept parameter '" + std::string(name) + "'");
}

std::string_view couplingRuleText(CouplingRule r) noexcept {
  switch (r) {
    case CouplingRule::kNone:
      return "";
    case CouplingRule::kDelta2EqualsLambdaPlus:
      return kRuleLambdaPlus;
    case CouplingRule::kDelta2EqualsDelta1:
      return kRuleEqual;
  }
  return "";
}

CouplingRule parseCouplingRule(std::string_view text) {
  std::string compact;
  for (char ch : text) {
    if (ch != ' ' && ch != '\t') compact.push_back(ch);
  }
  if (compact.empty() || compact == "none") return CouplingRule::kNone;
  if (compact == "delta2=lambda_plus(delta1)") return CouplingRule::kDelta2EqualsLambdaPlus;
  if (compact == "delta2=delta1") return CouplingRule::kDelta2EqualsDelta1;
  throw ConfigError("unknown coupling rule '" + std::string(text) + "' (expected '" +
                    std::string(kRuleLambdaPlus) + "' or '" + std::string(kRuleEqual) + "')");
}

std::vector<double> uniformGrid(double start, double stop, std::size_t points) {
  if (points == 0) throw ConfigError("grid needs at least one point");
  std::vector<double> grid(points);
  if (points == 1) {
    grid[0] = start;
    return grid;
  }
  const double step = (stop - start) / static_cast<double>(points - 1);
  for (std::size_t k = 0; k < points; ++k) grid[k] = start + static_cast<double>(k) * step;
  grid.back() = stop;
  return grid;
}

SweepSpec regrid(const SweepSpec& spec, std::size_t points) {
  if (spec.grid.empty()) throw ConfigError("cannot regrid an empty sweep");
  SweepSpec out = spec;
  out.grid = uniformGrid(spec.grid.front(), spec.grid.back(), points);
  validateSweep(out);
  return out;
}

void validateSweep(const SweepSpec& spec) {
  if (spec.grid.empty()) throw ConfigError("sweep grid is empty");
  for (double v : spec.grid) {
    if (!std::isfinite(v)) throw ConfigError("sweep grid contains a non-finite value");
  }
  if (spec.grid.size() > 1) {
    const bool up = spec.grid[1] > spec.grid[0];
    for (std::size_t k = 1; k < spec.grid.size(); ++k) {
      const bool ok = up ? spec.grid[k] > spec.grid[k - 1] : spec.grid[k] < spec.grid[k - 1];
      if (!ok) throw ConfigError("sweep grid must be strictly monotone");
    }
  }
  validate(spec.base);
}

SystemParams pointParams(const SweepSpec& spec, double value) {
  SystemParams p = spec.base;
  switch (spec.parameter) {
    case SweptParameter::kDelta1:
      p.delta1 = value;
      break;
    case SweptParameter::kDelta2:
      p.delta2 = value;
      break;
    case SweptParameter::kDeltaCommon:
      p.delta1 = value;
      p.delta2 = value;
      break;
    case SweptParameter::kOmega:
      p.omega = value;
      break;
    case SweptParameter::kG:
      p.g = value;
      break;
    case SweptParameter::kGammaAb:
      p.gamma_ab = value;
      break;
    case SweptParameter::kGammaAc:
      p.gamma_ac = value;
      break;
    case SweptParameter::kGammaBd:
      p.gamma_bd = value;
      break;
    case SweptParameter::kGammaCd:
      p.gamma_cd = value;
      break;
    case SweptParameter::kRBd:
      p.r_bd = value;
      break;
    case SweptParameter::kRCd:
      p.r_cd = value;
      break;
  }
  switch (spec.coupling_rule) {
    case CouplingRule::kNone:
      break;
    case CouplingRule::kDelta2EqualsLambdaPlus:
      p.delta2 = 0.5 * (p.delta1 - std::hypot(p.delta1, p.omega));
      break;
    case CouplingRule::kDelta2EqualsDelta1:
      p.delta2 = p.delta1;
      break;
  }
  validate(p);
  return p;
}

SweepSpec preset(std::string_view name) {
  SweepSpec spec;
  spec.name = std::string(name);
  if (name == "fig3") {
    RawParams raw;
    raw.omega = 10.0;
    raw.g = 1.0;
    raw.delta1 = 0.0;
    raw.delta2 = 0.0;
    raw.gamma_ab = 1.0;
    raw.gamma_ac = 12.0;
    raw.gamma_bd = 0.5;
    raw.gamma_cd = 0.5;
    raw.n_bd = 2.0;
    raw.n_cd = 1.0;
    raw.unit_label = "gamma_ab";
    spec.base = validateParams(raw);
    spec.parameter = SweptParameter::kGammaAc;
    spec.grid = uniformGrid(0.0, 30.0, kDefaultGridPoints);
  } else if (name == "fig4") {
    spec.base = fig4Base();
    spec.parameter = SweptParameter::kDelta1;
    spec.coupling_rule = CouplingRule::kDelta2EqualsLambdaPlus;
    spec.grid = uniformGrid(-100.0, 100.0, kDefaultGridPoints);
  } else if (name == "fig5" || name == "fig6") {
    spec.base = fig4Base();
    spec.parameter = SweptParameter::kDelta1;
    spec.coupling_rule = CouplingRule::kDelta2EqualsDelta1;
    spec.grid = uniformGrid(-100.0, 100.0, kDefaultGridPoints);
  } else {
    throw ConfigError("unknown preset '" + std::string(name) + "' (expected fig3, fig4, fig5, fig6)");
  }
  spec.base = pointParams(spec, spec.parameter == SweptParameter::kGammaAc ? spec.base.gamma_ac
                                                                            : 0.0);
  return spec;
}

std::vector<std::string> presetNames() { return {"fig3", "fig4", "fig5", "fig6"}; }

Config parseConfig(std::string_view text, std::string name) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::size_t line = lineOf(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ConfigError("config parse error at line " + std::to_string(line) + ": " + e.what(),
                      line);
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  rejectUnknown(doc, {"name", "params", "sweep"}, "top level");
  if (auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) throw ConfigError("'name' must be a string");
    name = it->get<std::string>();
  }
  auto params = doc.find("params");
  if (params == doc.end()) throw ConfigError("config needs a 'params' object");
  SystemParams base = parseParams(*params);
  if (auto sweep = doc.find("sweep"); sweep != doc.end()) {
    return parseSweep(*sweep, std::move(base), std::move(name));
  }
  return base;
}

Config loadConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parseConfig(buf.str(), path.stem().string());
}

std::string sweepToJson(const SweepSpec& spec) {
  const SystemParams& p = spec.base;
  json doc;
  doc["name"] = spec.name;
  doc["params"] = {{"omega", p.omega},       {"g", p.g},
                   {"delta1", p.delta1},     {"delta2", p.delta2},
                   {"gamma_ab", p.gamma_ab}, {"gamma_ac", p.gamma_ac},
                   {"gamma_bd", p.gamma_bd}, {"gamma_cd", p.gamma_cd},
                   {"r_bd", p.r_bd},         {"r_cd", p.r_cd},
                   {"unit_label", p.unit_label}};
  json sweep;
  sweep["parameter"] = std::string(parameterName(spec.parameter));
  sweep["values"] = spec.grid;
  if (spec.coupling_rule != CouplingRule::kNone) {
    sweep["coupling_rule"] = std::string(couplingRuleText(spec.coupling_rule));
  }
  doc["sweep"] = std::move(sweep);
  return doc.dump(2);
}

}  // namespace lwi
