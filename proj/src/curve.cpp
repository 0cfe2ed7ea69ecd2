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

#include "divmean/curve.hpp"

#include <stdexcept>

namespace divmean {

const FieldElement& Point::x() const {
    if (is_infinity()) throw std::invalid_argument("point at infinity has no coordinates");
    return xy_->first;
}

const FieldElement& Point::y() const {
    if (is_infinity()) throw std::invalid_argument("point at infinity has no coordinates");
    return xy_->second;
}

bool Point::operator==(const Point& rhs) const {
    if (is_infinity() || rhs.is_infinity()) return is_infinity() == rhs.is_infinity();
    return x() == rhs.x() && y() == rhs.y();
}

bool canonical_point_less(const Point& a, const Point& b) {
    if (a.is_infinity() || b.is_infinity()) return a.is_infinity() && !b.is_infinity();
    if (a.x() != b.x()) return canonical_less(a.x(), b.x());
    return canonical_less(a.y(), b.y());
}

Curve::Curve(FieldCtxPtr ctx, FieldElement a, FieldElement b)
    : ctx_(std::move(ctx)), a_(std::move(a)), b_(std::move(b)) {
    if (!a_.ctx()->same(*ctx_) || !b_.ctx()->same(*ctx_))
        throw std::invalid_argument("curve coefficient context mismatch");
    if (discriminant_term().is_zero())
        throw std::invalid_argument("singular curve: 4a^3 + 27b^2 = 0");
}

FieldElement Curve::discriminant_term() const {
    return ctx_->from_int(4) * a_ * a_ * a_ + ctx_->from_int(27) * b_ * b_;
}

FieldElement Curve::j_invariant() const {
    FieldElement a3 = ctx_->from_int(4) * a_ * a_ * a_;
    return ctx_->from_int(1728) * a3 / discriminant_term();
}

FieldElement Curve::rhs(const FieldElement& x) const {
    return (x * x + a_) * x + b_;
}

bool Curve::contains(const Point& p) const {
    if (p.is_infinity()) return true;
    if (!p.x().ctx()->same(*ctx_)) return false;
    return p.y() * p.y() == rhs(p.x());
}

Point Curve::point(const FieldElement& x, const FieldElement& y) const {
    Point p(x, y);
    if (!contains(p)) throw std::invalid_argument("point is not on the curve");
    return p;
}

Point Curve::add(const Point& p, const Point& q) const {
    if (!contains(p) || !contains(q)) throw std::invalid_argument("group law input is not on the curve");
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;
    FieldElement lambda = ctx_->zero();
    if (p.x() == q.x()) {
        if (p.y() == -q.y()) return Point::infinity();  // vertical: also covers y = 0 doubling
        // tangent
        lambda = (ctx_->from_int(3) * p.x() * p.x() + a_) / (ctx_->from_int(2) * p.y());
    } else {
        lambda = (q.y() - p.y()) / (q.x() - p.x());
    }
    FieldElement x3 = lambda * lambda - p.x() - q.x();
    FieldElement y3 = lambda * (p.x() - x3) - p.y();
    return Point(std::move(x3), std::move(y3));
}

Point Curve::neg(const Point& p) const {
    if (p.is_infinity()) return p;
    return Point(p.x(), -p.y());
}

Point Curve::scalar_mul(std::uint64_t n, const Point& p) const {
    if (!contains(p)) throw std::invalid_argument("scalar_mul input is not on the curve");
    Point acc = Point::infinity();
    Point base = p;
    while (n) {
        if (n & 1) acc = add(acc, base);
        base = add(base, base);
        n >>= 1;
    }
    return acc;
}

std::vector<Point> Curve::lift_x(const FieldElement& x) const {
    std::vector<Point> out;
    FieldElement c = rhs(x);
    if (c.is_zero()) {
        out.emplace_back(x, ctx_->zero());
        return out;
    }
    auto r = sqrt(c);
    if (!r) return out;
    Point p1(x, *r), p2(x, -*r);
    if (canonical_point_less(p2, p1)) std::swap(p1, p2);
    out.push_back(std::move(p1));
    out.push_back(std::move(p2));
    return out;
}

std::vector<Point> Curve::enumerate_points(std::uint64_t bound) const {
    if (ctx_->order() > bound)
        throw std::invalid_argument("field too large to enumerate points (bound " +
                                    std::to_string(bound) + ")");
    std::vector<Point> out;
    out.push_back(Point::infinity());
    for (const auto& x : all_elements(ctx_, bound)) {
        for (auto& p : lift_x(x)) out.push_back(std::move(p));
    }
    return out;
}

Point Curve::random_point(std::mt19937_64& rng) const {
    for (;;) {
        FieldElement x = ctx_->sample(rng);
        auto lifts = lift_x(x);
        if (lifts.empty()) continue;
        return lifts[rng() % lifts.size()];
    }
}

Curve Curve::base_change(const FieldCtxPtr& target) const {
    if (target->same(*ctx_)) return *this;
    return Curve(target, embed(a_, target), embed(b_, target));
}

bool Curve::same(const Curve& other) const {
    return ctx_->same(*other.ctx_) && a_ == other.a_ && b_ == other.b_;
}

Point embed_point(const Point& p, const FieldCtxPtr& target) {
    if (p.is_infinity()) return p;
    return Point(embed(p.x(), target), embed(p.y(), target));
}

}  // namespace divmean
