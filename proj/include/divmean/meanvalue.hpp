// Copyright 2026 The divmean Authors
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

#include <cstdint>
#include <string>
#include <vector>

#include "divmean/division_points.hpp"

namespace divmean {

enum class CheckStatus { ok, fail, skipped };

/// One identity check with both sides rendered for reporting. Every check in
/// this module is an exact field equality; there are no tolerances anywhere.
struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::ok;
    std::string lhs, rhs;
    std::string note;

    bool failed() const { return status == CheckStatus::fail; }
};

/// The multiplication-by-n map written as [n](x, y) = (R_n(x), y*S_n(x))
/// with R_n = r_num/r_den and S_n = s_num/s_den pure-x rational functions:
/// r_num = phi_n, r_den = psi_n^2, and S_n derived from omega_n/psi_n^3 by
/// parity (odd n: w_n/psi_n^3 with omega_n = y*w_n; even n with
/// psi_n = y*p_n: omega_n/((x^3+ax+b)^2 p_n^3)).
struct NormalizedMap {
    int n;
    Polynomial r_num, r_den, s_num, s_den;
};

NormalizedMap normalized_map(const DivPolyTable& table, int n);

/// sum of x_P over Lambda equals n^2 * x_Q (exact, over the extension).
CheckResult verify_mean_x(const DivisionSet& ds);

/// sum of y_P over Lambda equals n^3 * y_Q.
CheckResult verify_mean_y(const DivisionSet& ds);

/// Coefficient route: x^{n^2-1} coefficient of phi_n - x_Q psi_n^2 equals
/// -n^2 x_Q. No root finding, no extension construction.
CheckResult vieta_x_check(const DivPolyTable& table, const Point& q, int n);

/// With lambda_i the chord slope through P_i and Q:
/// n^2 y_Q = (sum lambda)(sum x)/n^2 - sum(lambda x) + sum y.
/// Skipped (not failed) when some x_P = x_Q, where the chord degenerates.
CheckResult slope_average_check(const DivisionSet& ds);

/// The endomorphism-coefficient identities over Lambda:
///   sum 1/S_n(x_P) = n^3, sum 1/R'_n(x_P) = n^2,
///   sum x_Q/R'_n(x_P) = sum x_P,
/// plus the pointwise agreement S_n(x_P) = y_Q/y_P of the symbolic and
/// coordinate routes. Skipped with a reason when y_Q = 0.
std::vector<CheckResult> application_identities(const DivisionSet& ds, const NormalizedMap& nm);

/// R'_n(x)/S_n(x) = n at `samples` random points avoiding denominator
/// roots, in cross-multiplied exact form. Sampling runs over eval_ctx when
/// given (useful when the base field is tiny), otherwise the map's own field.
CheckResult c_n_check(const NormalizedMap& nm, int samples, std::uint64_t seed,
                      const FieldCtxPtr& eval_ctx = nullptr);

/// Everything above for one (curve, Q, n) instance.
struct VerificationReport {
    Curve curve;
    Point q;
    int n;
    FieldCtxPtr ext;
    std::size_t lambda_size = 0;
    std::vector<CheckResult> checks;
    bool all_ok = true;  // no check failed (skips are not failures)
};

VerificationReport verify_instance(const DivPolyTable& table, const Point& q, int n,
                                   std::uint64_t seed, int c_n_samples = 20);

}  // namespace divmean
