// Copyright 2026 The helmsource Authors
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

#ifndef HELMSOURCE_SPECFUN_HPP
#define HELMSOURCE_SPECFUN_HPP

#include <complex>

namespace helmsource::specfun {

// Cylinder functions of order zero and one on the positive real axis,
// self-contained (no libm Bessel dependency). Evaluation strategy: the
// ascending power series below the switchover x = 12, accumulated in
// extended precision, and the Hankel large-argument expansion with
// adaptive truncation above it. Worst case absolute error is ~1e-12,
// right at the switchover; away from it the error is a few ulp.
//
// All functions are pure and thread-safe. Non-finite arguments throw
// std::domain_error, as do arguments outside the stated domains.

/// J0(x) for x >= 0.
double bessel_j0(double x);

/// J1(x) for x >= 0.
double bessel_j1(double x);

/// Y0(x) for x > 0 (diverges to -inf as x -> 0+).
double bessel_y0(double x);

/// Y1(x) for x > 0.
double bessel_y1(double x);

/// H0^(1)(x) = J0(x) + i Y0(x) for x > 0.
std::complex<double> hankel1_0(double x);

/// H1^(1)(x) = J1(x) + i Y1(x) for x > 0.
std::complex<double> hankel1_1(double x);

}  // namespace helmsource::specfun

#endif  // HELMSOURCE_SPECFUN_HPP
