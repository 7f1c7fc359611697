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

#pragma once

#include <span>
#include <vector>

namespace aiitl {

// Minimal dense helpers for the small symmetric systems that show up in the
// Mahalanobis detector (feature dims are a few dozen at most). Matrices are
// row-major n*n std::vector<double>.

// Lower-triangular Cholesky factor of a symmetric positive definite matrix.
// Throws Error(Numeric) when the matrix is not positive definite.
std::vector<double> cholesky_factor(std::span<const double> a, int n);

// Inverse of a symmetric positive definite matrix via its Cholesky factor.
// The result is exactly symmetric.
std::vector<double> spd_inverse(std::span<const double> a, int n);

// d^T M d
double quadratic_form(std::span<const double> m, std::span<const double> d);

// y = M x
std::vector<double> matvec(std::span<const double> m, std::span<const double> x);

bool is_symmetric(std::span<const double> m, int n, double tol);

}  // namespace aiitl
