// Copyright 2026 The aiitl authors
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

#include "aiitl/linalg.hpp"

#include <cmath>
#include <cstddef>

#include "aiitl/error.hpp"

namespace aiitl {

std::vector<double> cholesky_factor(std::span<const double> a, int n) {
  if (n <= 0 || a.size() != static_cast<std::size_t>(n) * n) {
    fail(ErrorKind::InputShape, "cholesky_factor: bad matrix shape");
  }
  std::vector<double> l(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      double s = a[static_cast<std::size_t>(i) * n + j];
      for (int k = 0; k < j; ++k) {
        s -= l[static_cast<std::size_t>(i) * n + k] *
             l[static_cast<std::size_t>(j) * n + k];
      }
      if (i == j) {
        if (!(s > 0.0) || !std::isfinite(s)) {
          fail(ErrorKind::Numeric, "cholesky_factor: matrix not positive definite");
        }
        l[static_cast<std::size_t>(i) * n + j] = std::sqrt(s);
      } else {
        l[static_cast<std::size_t>(i) * n + j] =
            s / l[static_cast<std::size_t>(j) * n + j];
      }
    }
  }
  return l;
}

std::vector<double> spd_inverse(std::span<const double> a, int n) {
  const std::vector<double> l = cholesky_factor(a, n);
  // Invert L in place (forward substitution on the identity).
  std::vector<double> linv(static_cast<std::size_t>(n) * n, 0.0);
  for (int j = 0; j < n; ++j) {
    linv[static_cast<std::size_t>(j) * n + j] =
        1.0 / l[static_cast<std::size_t>(j) * n + j];
    for (int i = j + 1; i < n; ++i) {
      double s = 0.0;
      for (int k = j; k < i; ++k) {
        s += l[static_cast<std::size_t>(i) * n + k] *
             linv[static_cast<std::size_t>(k) * n + j];
      }
      linv[static_cast<std::size_t>(i) * n + j] =
          -s / l[static_cast<std::size_t>(i) * n + i];
    }
  }
  // A^-1 = L^-T L^-1; fill both triangles so the result is exactly symmetric.
  std::vector<double> inv(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      double s = 0.0;
      for (int k = i; k < n; ++k) {
        s += linv[static_cast<std::size_t>(k) * n + i] *
             linv[static_cast<std::size_t>(k) * n + j];
      }
      inv[static_cast<std::size_t>(i) * n + j] = s;
      inv[static_cast<std::size_t>(j) * n + i] = s;
    }
  }
  return inv;
}

double quadratic_form(std::span<const double> m, std::span<const double> d) {
  const std::size_t n = d.size();
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) row += m[i * n + j] * d[j];
    acc += d[i] * row;
  }
  return acc;
}

std::vector<double> matvec(std::span<const double> m, std::span<const double> x) {
  const std::size_t n = x.size();
  std::vector<double> y(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += m[i * n + j] * x[j];
    y[i] = s;
  }
  return y;
}

bool is_symmetric(std::span<const double> m, int n, double tol) {
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      const double diff = m[static_cast<std::size_t>(i) * n + j] -
                          m[static_cast<std::size_t>(j) * n + i];
      if (std::abs(diff) > tol) return false;
    }
  }
  return true;
}

}  // namespace aiitl
