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
#include <optional>
#include <random>
#include <vector>

#include "divmean/field.hpp"

namespace divmean {

/// Affine point or the identity. Affine coordinates always satisfy the curve
/// equation of the curve that produced them.
class Point {
public:
    static Point infinity() { return Point(); }
    Point(FieldElement x, FieldElement y) : xy_(std::make_pair(std::move(x), std::move(y))) {}

    bool is_infinity() const { return !xy_.has_value(); }
    const FieldElement& x() const;
    const FieldElement& y() const;

    bool operator==(const Point& rhs) const;
    bool operator!=(const Point& rhs) const { return !(*this == rhs); }

private:
    Point() = default;
    std::optional<std::pair<FieldElement, FieldElement>> xy_;
};

/// O first, then affine points ordered by (x, y) canonical order.
bool canonical_point_less(const Point& a, const Point& b);

/// Short-Weierstrass curve y^2 = x^3 + ax + b with the chord-tangent group
/// law in affine coordinates. Construction rejects singular curves
/// (4a^3 + 27b^2 = 0).
class Curve {
public:
    Curve(FieldCtxPtr ctx, FieldElement a, FieldElement b);

    const FieldCtxPtr& ctx() const { return ctx_; }
    const FieldElement& a() const { return a_; }
    const FieldElement& b() const { return b_; }
    FieldElement discriminant_term() const;  // 4a^3 + 27b^2
    FieldElement j_invariant() const;

    /// x^3 + ax + b.
    FieldElement rhs(const FieldElement& x) const;
    bool contains(const Point& p) const;
    /// Validating affine-point constructor; throws if (x, y) is off-curve.
    Point point(const FieldElement& x, const FieldElement& y) const;

    Point add(const Point& p, const Point& q) const;
    Point neg(const Point& p) const;
    /// Double-and-add; scalar_mul(0, p) = O.
    Point scalar_mul(std::uint64_t n, const Point& p) const;

    /// All points of E(F_{p^k}) including O, by scanning x-coordinates and
    /// taking square roots of the cubic. Refuses fields larger than `bound`.
    /// This enumeration is the independent brute-force oracle: it never
    /// touches division polynomials.
    std::vector<Point> enumerate_points(std::uint64_t bound = 20000) const;

    /// Both lifts of x, when x^3 + ax + b is a square: (x, r) before (x, -r)
    /// in canonical order; a single point when the cubic vanishes.
    std::vector<Point> lift_x(const FieldElement& x) const;

    /// Deterministic pseudo-random affine point (never O).
    Point random_point(std::mt19937_64& rng) const;

    /// Same curve over an extension of the base prime field.
    Curve base_change(const FieldCtxPtr& target) const;

    bool same(const Curve& other) const;

private:
    FieldCtxPtr ctx_;
    FieldElement a_, b_;
};

Point embed_point(const Point& p, const FieldCtxPtr& target);

}  // namespace divmean
