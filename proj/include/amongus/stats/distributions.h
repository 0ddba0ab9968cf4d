// Copyright 2026 The amongus-sim Authors
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

namespace amongus::stats {

// Regularized lower/upper incomplete gamma P(a, x) and Q(a, x) for a > 0,
// x >= 0. Series below x = a + 1, Lentz continued fraction above; relative
// error near machine precision.
double gamma_p(double a, double x);
double gamma_q(double a, double x);

// Regularized incomplete beta I_x(a, b), continued fraction with the usual
// symmetry switch.
double beta_inc(double a, double b, double x);

double normal_cdf(double z);
// Upper tail, computed without cancellation for large z.
double normal_sf(double z);

// Upper tail of chi-squared with `df` degrees of freedom.
double chi2_sf(double x, double df);

// Two-sided p-value of a t statistic with `df` degrees of freedom.
double student_t_two_sided(double t, double df);

}  // namespace amongus::stats
