// Copyright 2026 The ghzw Authors
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

#ifndef GHZW_ROOTS_HPP_
#define GHZW_ROOTS_HPP_

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <utility>

namespace ghzw {

/// Plain bisection on a sign-changing bracket [lo, hi].
template <typename F>
double bisect(F&& f, double lo, double hi, double tol) {
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw std::invalid_argument("bisect: bracket does not change sign");
  }
  while (hi - lo > tol) {
    const double mid = lo + (hi - lo) / 2.0;
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return lo + (hi - lo) / 2.0;
}

/// Scans [start, stop] in steps of `step` and returns the first bracket in
/// which f goes from positive to negative. Grid points where f is exactly
/// zero are skipped over rather than counted as crossings.
template <typename F>
std::optional<std::pair<double, double>> first_downward_crossing(F&& f, double start, double stop,
                                                                 double step) {
  std::optional<double> last_positive;
  if (f(start) > 0.0) last_positive = start;
  const int count = static_cast<int>(std::ceil((stop - start) / step));
  for (int i = 1; i <= count; ++i) {
    const double x = std::min(stop, start + i * step);
    const double fx = f(x);
    if (fx > 0.0) {
      last_positive = x;
    } else if (fx < 0.0 && last_positive) {
      return std::make_pair(*last_positive, x);
    }
  }
  return std::nullopt;
}

}  // namespace ghzw

#endif  // GHZW_ROOTS_HPP_
