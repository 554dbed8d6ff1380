// Copyright 2026 The paintshop Authors
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

#include "paintshop/nelder_mead.hpp"

#include <algorithm>
#include <numeric>

#include "paintshop/error.hpp"

namespace paintshop {

namespace {

constexpr double kReflect = 1.0;
constexpr double kExpand = 2.0;
constexpr double kContract = 0.5;
constexpr double kShrink = 0.5;

using Point = std::vector<double>;

Point affine(const Point& c, const Point& x, double t) {
  // c + t (x - c)
  Point out(c.size());
  for (std::size_t d = 0; d < c.size(); ++d) out[d] = c[d] + t * (x[d] - c[d]);
  return out;
}

}  // namespace

NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                             std::vector<double> x0, const NelderMeadOptions& options) {
  if (x0.empty()) throw Error(ErrorKind::invalid_argument, "Nelder-Mead needs a non-empty start");
  if (!(options.xatol > 0.0)) throw Error(ErrorKind::invalid_argument, "tolerance must be positive");
  if (options.max_evaluations < 1)
    throw Error(ErrorKind::invalid_argument, "evaluation budget must be positive");

  const std::size_t dim = x0.size();
  NelderMeadResult result;
  auto eval = [&](const Point& x) {
    ++result.evaluations;
    return f(x);
  };

  std::vector<Point> simplex{x0};
  for (std::size_t d = 0; d < dim; ++d) {
    Point v = x0;
    v[d] += options.initial_step;
    simplex.push_back(std::move(v));
  }
  std::vector<double> values;
  for (const auto& v : simplex) {
    values.push_back(eval(v));
    if (result.evaluations >= options.max_evaluations) break;
  }
  simplex.resize(values.size());

  std::vector<std::size_t> order(simplex.size());
  auto sort_simplex = [&] {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<Point> s2;
    std::vector<double> v2;
    for (auto i : order) {
      s2.push_back(simplex[i]);
      v2.push_back(values[i]);
    }
    simplex = std::move(s2);
    values = std::move(v2);
  };
  auto spread = [&] {
    double worst = 0.0;
    for (std::size_t d = 0; d < dim; ++d) {
      double lo = simplex[0][d], hi = simplex[0][d];
      for (const auto& v : simplex) {
        lo = std::min(lo, v[d]);
        hi = std::max(hi, v[d]);
      }
      worst = std::max(worst, hi - lo);
    }
    return worst;
  };

  while (simplex.size() == dim + 1) {
    sort_simplex();
    if (spread() < options.xatol) {
      result.converged = true;
      break;
    }
    if (result.evaluations >= options.max_evaluations) break;

    Point centroid(dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t d = 0; d < dim; ++d) centroid[d] += simplex[i][d] / static_cast<double>(dim);
    const Point& worst = simplex[dim];

    const Point xr = affine(centroid, worst, -kReflect);
    const double fr = eval(xr);
    if (fr < values[0]) {
      if (result.evaluations < options.max_evaluations) {
        const Point xe = affine(centroid, worst, -kReflect * kExpand);
        const double fe = eval(xe);
        if (fe < fr) {
          simplex[dim] = xe;
          values[dim] = fe;
          continue;
        }
      }
      simplex[dim] = xr;
      values[dim] = fr;
      continue;
    }
    if (fr < values[dim - 1]) {
      simplex[dim] = xr;
      values[dim] = fr;
      continue;
    }
    if (result.evaluations >= options.max_evaluations) {
      if (fr < values[dim]) {
        simplex[dim] = xr;
        values[dim] = fr;
      }
      continue;
    }
    bool shrink = false;
    if (fr < values[dim]) {
      const Point xc = affine(centroid, xr, kContract);
      const double fc = eval(xc);
      if (fc <= fr) {
        simplex[dim] = xc;
        values[dim] = fc;
      } else {
        simplex[dim] = xr;
        values[dim] = fr;
        shrink = true;
      }
    } else {
      const Point xcc = affine(centroid, worst, kContract);
      const double fcc = eval(xcc);
      if (fcc < values[dim]) {
        simplex[dim] = xcc;
        values[dim] = fcc;
      } else {
        shrink = true;
      }
    }
    if (shrink) {
      for (std::size_t i = 1; i <= dim && result.evaluations < options.max_evaluations; ++i) {
        simplex[i] = affine(simplex[0], simplex[i], kShrink);
        values[i] = eval(simplex[i]);
      }
    }
  }

  const auto best = std::min_element(values.begin(), values.end()) - values.begin();
  result.x = simplex[best];
  result.value = values[best];
  return result;
}

}  // namespace paintshop
