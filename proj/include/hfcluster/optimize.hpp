// Copyright 2026 The hfcluster Authors
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

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <vector>

namespace hfcluster::optimize {

struct Bounds {
  std::vector<double> lower, upper;

  double clamp(size_t i, double v) const {
    if (!lower.empty()) v = std::max(v, lower[i]);
    if (!upper.empty()) v = std::min(v, upper[i]);
    return v;
  }
  void project(std::vector<double>& x) const {
    for (size_t i = 0; i < x.size(); ++i) x[i] = clamp(i, x[i]);
  }
};

struct NelderMeadOptions {
  double initial_step = 0.1;  // absolute, per coordinate
  double x_tol = 1e-12;
  double f_tol = 1e-15;
  long max_evals = 20000;
};

struct MinimizeResult {
  std::vector<double> x;
  double f = std::numeric_limits<double>::infinity();
  long evals = 0;
};

/// Adaptive Nelder-Mead (dimension-dependent coefficients) with vertices
/// projected onto the box. Minimises f.
inline MinimizeResult nelder_mead(const std::function<double(const std::vector<double>&)>& f, std::vector<double> x0,
                                  const Bounds& bounds = {}, const NelderMeadOptions& opt = {}) {
  const size_t n = x0.size();
  MinimizeResult res;
  if (n == 0) {
    res.x = x0;
    res.f = f(x0);
    res.evals = 1;
    return res;
  }
  const double dn = static_cast<double>(n);
  const double alpha = 1.0, beta = 1.0 + 2.0 / dn, gamma = 0.75 - 1.0 / (2.0 * dn), delta = 1.0 - 1.0 / dn;

  long evals = 0;
  auto eval = [&](std::vector<double>& x) {
    bounds.project(x);
    ++evals;
    return f(x);
  };

  std::vector<std::vector<double>> simplex(n + 1, x0);
  std::vector<double> fv(n + 1);
  fv[0] = eval(simplex[0]);
  for (size_t i = 0; i < n; ++i) {
    auto& v = simplex[i + 1];
    v[i] += opt.initial_step;
    if (bounds.clamp(i, v[i]) != v[i]) v[i] = x0[i] - opt.initial_step;
    fv[i + 1] = eval(v);
  }

  std::vector<size_t> order(n + 1);
  std::vector<double> centroid(n), xr(n), xe(n), xc(n);
  while (evals < opt.max_evals) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return fv[a] < fv[b]; });
    const size_t best = order.front(), worst = order.back(), second = order[n - 1];

    double spread = 0;
    for (size_t i = 0; i <= n; ++i)
      for (size_t d = 0; d < n; ++d) spread = std::max(spread, std::abs(simplex[i][d] - simplex[best][d]));
    if (spread < opt.x_tol || std::abs(fv[worst] - fv[best]) < opt.f_tol) break;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (size_t i = 0; i <= n; ++i)
      if (i != worst)
        for (size_t d = 0; d < n; ++d) centroid[d] += simplex[i][d] / dn;

    for (size_t d = 0; d < n; ++d) xr[d] = centroid[d] + alpha * (centroid[d] - simplex[worst][d]);
    const double fr = eval(xr);
    if (fr < fv[best]) {
      for (size_t d = 0; d < n; ++d) xe[d] = centroid[d] + beta * (xr[d] - centroid[d]);
      const double fe = eval(xe);
      if (fe < fr) {
        simplex[worst] = xe;
        fv[worst] = fe;
      } else {
        simplex[worst] = xr;
        fv[worst] = fr;
      }
      continue;
    }
    if (fr < fv[second]) {
      simplex[worst] = xr;
      fv[worst] = fr;
      continue;
    }
    const bool outside = fr < fv[worst];
    for (size_t d = 0; d < n; ++d)
      xc[d] = outside ? centroid[d] + gamma * (xr[d] - centroid[d]) : centroid[d] - gamma * (centroid[d] - simplex[worst][d]);
    const double fc = eval(xc);
    if (fc < std::min(fr, fv[worst])) {
      simplex[worst] = xc;
      fv[worst] = fc;
      continue;
    }
    // shrink
    for (size_t i = 0; i <= n; ++i) {
      if (i == best) continue;
      for (size_t d = 0; d < n; ++d) simplex[i][d] = simplex[best][d] + delta * (simplex[i][d] - simplex[best][d]);
      fv[i] = eval(simplex[i]);
    }
  }
  const size_t best = static_cast<size_t>(std::min_element(fv.begin(), fv.end()) - fv.begin());
  res.x = simplex[best];
  res.f = fv[best];
  res.evals = evals;
  return res;
}

/// Golden-section refinement of a bracketed 1-D minimum.
inline double golden_section(const std::function<double(double)>& f, double a, double b, double tol, int max_iter = 200) {
  const double g = (std::sqrt(5.0) - 1) / 2;
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < max_iter && std::abs(b - a) > tol; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = f(d);
    }
  }
  return fc < fd ? c : d;
}

}  // namespace hfcluster::optimize
