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

#include <string>
#include <vector>

#include "divmean/curve.hpp"
#include "divmean/poly.hpp"

namespace divmean {

/// Parity of a polynomial on the curve coordinate ring: either a pure
/// polynomial in x, or y times a polynomial in x. Higher powers of y are
/// always reduced through y^2 = x^3 + ax + b, so these two shapes are the
/// whole normal form.
enum class YParity { pure_x, y_times_x };

/// f(x) or y*f(x) with f the stored x-part.
class CurvePoly {
public:
    CurvePoly(YParity parity, Polynomial xpart) : parity_(parity), xpart_(std::move(xpart)) {}

    YParity parity() const { return parity_; }
    const Polynomial& xpart() const { return xpart_; }
    bool is_zero() const { return xpart_.is_zero(); }

    /// Value at an affine point, substituting x and (for y-parity) y.
    FieldElement eval(const Point& p) const;

    bool operator==(const CurvePoly& rhs) const {
        return (parity_ == rhs.parity_ || xpart_.is_zero()) && xpart_ == rhs.xpart_;
    }

private:
    YParity parity_;
    Polynomial xpart_;
};

struct LeadingCoeffCheck {
    struct Item {
        std::string label;
        bool ok = true;
        bool vacuous = false;
        std::string expected, actual;
    };
    int n = 0;
    bool ok = true;
    std::vector<Item> items;
};

/// Division polynomials psi_0..psi_N on a fixed curve, in y-parity normal
/// form, together with the derived phi_n (pure x, monic of degree n^2) and
/// omega_n, and the multiplication-by-n rational map they induce.
///
/// The even-index recursion divides by 2y; on pure-x content that is an
/// exact division by 2(x^3 + ax + b), asserted remainder-free. omega_n uses
/// the extension psi_{-1} = -1 so that n = 1 is defined and [1] is the
/// identity.
class DivPolyTable {
public:
    DivPolyTable(Curve curve, int max_index);  // max_index >= 4

    const Curve& curve() const { return curve_; }
    const Polynomial& cubic() const { return cubic_; }  // x^3 + ax + b
    int max_index() const { return static_cast<int>(psi_.size()) - 1; }

    const CurvePoly& psi(int n) const;           // -1 <= n <= N
    const Polynomial& psi_squared(int n) const;  // 0 <= n <= N, pure x
    const Polynomial& phi(int n) const;          // 1 <= n <= N-1
    const CurvePoly& omega(int n) const;         // 1 <= n <= N-2

    /// nP via (phi_n/psi_n^2, omega_n/psi_n^3); O when psi_n vanishes at P.
    /// Requires an affine point and 1 <= n <= N-2.
    Point mul_by_n(int n, const Point& p) const;

    /// Compares the top coefficients of psi_n (parity-adjusted), psi_n^2,
    /// and phi_n against their closed forms, with the /60, /30, /6 constants
    /// mapped into the field. Requires p >= 7. Degenerate small-n terms are
    /// reported as vacuous, not failed.
    LeadingCoeffCheck leading_coeffs_check(int n) const;

private:
    Curve curve_;
    Polynomial cubic_;
    CurvePoly psi_minus_one_;
    std::vector<CurvePoly> psi_;
    std::vector<Polynomial> psi_sq_;
    std::vector<Polynomial> phi_;
    std::vector<CurvePoly> omega_;
};

}  // namespace divmean
