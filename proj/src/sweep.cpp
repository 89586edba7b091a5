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

#include "lwi/sweep.hpp"

#include <algorithm>
#include <limits>
#include <thread>

#include "lwi/analysis.hpp"
#include "lwi/solve.hpp"

namespace lwi {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

}  // namespace

std::array<double, 17> numericFields(const SweepRow& r) {
  return {r.value,  r.delta1, r.delta2, r.im_rho_ba, r.re_rho_ba, r.re_rho_bc,
          r.rho_aa, r.rho_bb, r.rho_cc, r.rho_dd,    r.rho_pp,    r.rho_mm,
          r.rho_upup, r.rho_00, r.lambda1, r.lambda2, r.residual};
}

void setNumericFields(SweepRow& r, const std::array<double, 17>& v) {
  double* fields[] = {&r.value,  &r.delta1, &r.delta2, &r.im_rho_ba, &r.re_rho_ba, &r.re_rho_bc,
                      &r.rho_aa, &r.rho_bb, &r.rho_cc, &r.rho_dd,    &r.rho_pp,    &r.rho_mm,
                      &r.rho_upup, &r.rho_00, &r.lambda1, &r.lambda2, &r.residual};
  for (std::size_t k = 0; k < v.size(); ++k) *fields[k] = v[k];
}

SweepRow evaluatePoint(const SystemParams& p, double value) {
  SweepRow row;
  row.value = value;
  row.delta1 = p.delta1;
  row.delta2 = p.delta2;
  try {
    const SteadyStateResult ss = steadyState(p);
    const DensityMatrix& rho = ss.rho;

    const ProbeResponse probe = probeResponse(rho);
    row.im_rho_ba = probe.im_rho_ba;
    row.re_rho_ba = probe.re_rho_ba;
    row.re_rho_bc = probe.re_rho_bc;
    row.rho_aa = rho.population(Level::a);
    row.rho_bb = rho.population(Level::b);
    row.rho_cc = rho.population(Level::c);
    row.rho_dd = rho.population(Level::d);

    if (p.omega > 0.0) {
      const DressedPopulations dressed = dressedPopulations(rho, autlerTownes(p));
      row.rho_pp = dressed.plus;
      row.rho_mm = dressed.minus;
    } else {
      row.rho_pp = row.rho_mm = kNaN;
    }

    // |up> and |E0> depend only on the mixing angle, so they are defined for
    // any detunings.
    if (p.g > 0.0 || p.omega > 0.0) {
      const double theta = mixingAngle(p.g, p.omega);
      row.rho_upup = brightStatePopulation(rho, theta);
      row.rho_00 = darkStatePopulation(rho, theta);
    } else {
      row.rho_upup = row.rho_00 = kNaN;
    }

    const SubmatrixEigs eigs = lowerSubmatrixEigs(rho);
    row.lambda1 = eigs.lambda1;
    row.lambda2 = eigs.lambda2;
    row.residual = ss.residual;
  } catch (const Error& e) {
    std::array<double, 17> values = numericFields(row);
    std::fill(values.begin() + 3, values.end(), kNaN);
    setNumericFields(row, values);
    row.ok = false;
    row.error = e.what();
  }
  return row;
}

std::vector<SweepRow> runSweep(const SweepSpec& spec, const SweepOptions& options) {
  validateSweep(spec);
  const std::size_t n = spec.grid.size();
  std::vector<SweepRow> rows(n);

  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t k = first; k < n; k += stride) {
      const double value = spec.grid[k];
      try {
        rows[k] = evaluatePoint(pointParams(spec, value), value);
      } catch (const Error& e) {
        rows[k] = SweepRow{};
        rows[k].value = value;
        std::array<double, 17> values = numericFields(rows[k]);
        std::fill(values.begin() + 1, values.end(), kNaN);
        setNumericFields(rows[k], values);
        rows[k].ok = false;
        rows[k].error = e.what();
      }
    }
  };

  unsigned threads = options.threads == 0 ? std::thread::hardware_concurrency() : options.threads;
  threads = static_cast<unsigned>(std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(n, 1)));
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
  }

  const std::size_t failed =
      static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const SweepRow& r) {
        return !r.ok;
      }));
  if (2 * failed > n) {
    const auto first = std::find_if(rows.begin(), rows.end(), [](const SweepRow& r) {
      return !r.ok;
    });
    throw SweepError(std::to_string(failed) + " of " + std::to_string(n) +
                     " sweep points failed; first failure at value " +
                     std::to_string(first->value) + ": " + first->error);
  }
  return rows;
}

}  // namespace lwi
