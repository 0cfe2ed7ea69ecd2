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
#include <utility>
#include <vector>

#include "divmean/divpoly.hpp"

namespace divmean {

/// The full preimage of Q under multiplication by n: exactly n^2 points over
/// a splitting extension of the base field, plus the multiset of their
/// x-coordinates as roots of the degree-n^2 x-polynomial. Membership of each
/// point is certified with the group law (scalar_mul), never with the
/// division polynomials that produced the candidate x-coordinates.
struct DivisionSet {
    Curve curve;  // over the base field
    Point q;
    int n;
    FieldCtxPtr ext;
    Curve ext_curve;
    Point q_ext;
    std::vector<Point> points;  // canonical order, |points| = n^2
    std::vector<std::pair<FieldElement, int>> x_multiset;
};

/// phi_n - x_Q * psi_n^2: monic of degree n^2 over the base field, with
/// -n^2 x_Q as the coefficient of x^{n^2-1}. Rejects Q = O and p | n.
Polynomial division_x_poly(const DivPolyTable& table, const Point& q, int n);

/// A field containing every coordinate of the n-division points of Q:
/// degree lcm(factor degrees of f), doubled once if some root's cubic value
/// is a non-square there. Requires a prime base field.
FieldCtxPtr splitting_extension(const Polynomial& f, const Curve& curve, std::uint64_t seed);

DivisionSet n_division_points(const DivPolyTable& table, const Point& q, int n, std::uint64_t seed);

}  // namespace divmean
