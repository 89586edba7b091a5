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

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "lwi/config.hpp"

namespace lwi {

/// Every observable for one grid point. Undefined observables (e.g. the
/// dressed populations at omega = 0) are NaN. A failed solve leaves ok = false,
/// the error text set, and all observables NaN.
struct SweepRow {
  double value = 0.0;
  double delta1 = 0.0;
  double delta2 = 0.0;
  double im_rho_ba = 0.0;
  double re_rho_ba = 0.0;
  double re_rho_bc = 0.0;
  double rho_aa = 0.0;
  double rho_bb = 0.0;
  double rho_cc = 0.0;
  double rho_dd = 0.0;
  double rho_pp = 0.0;
  double rho_mm = 0.0;
  double rho_upup = 0.0;
  double rho_00 = 0.0;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double residual = 0.0;
  bool ok = true;
  std::string error;
};

/// Column names, in output order.
inline constexpr std::array<std::string_view, 19> kSweepRowFields = {
    "value",    "delta1", "delta2", "im_rho_ba", "re_rho_ba", "re_rho_bc", "rho_aa",
    "rho_bb",   "rho_cc", "rho_dd", "rho_pp",    "rho_mm",    "rho_upup",  "rho_00",
    "lambda1",  "lambda2", "residual", "ok",      "error"};

/// Numeric columns (everything except ok/error) as an array, in field order.
std::array<double, 17> numericFields(const SweepRow& row);
void setNumericFields(SweepRow& row, const std::array<double, 17>& values);

/// Steady state plus every observable for one parameter set. Solver errors are
/// caught and recorded in the row.
SweepRow evaluatePoint(const SystemParams& p, double value);

class SweepError : public Error {
 public:
  using Error::Error;
};

struct SweepOptions {
  /// Worker threads; 0 means std::thread::hardware_concurrency().
  unsigned threads = 1;
};

/// Rows in grid order. Points are independent, so the output does not depend
/// on the thread count. Throws SweepError if more than half the points fail.
std::vector<SweepRow> runSweep(const SweepSpec& spec, const SweepOptions& options = {});

}  // namespace lwi
