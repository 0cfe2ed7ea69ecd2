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

#include "divmean/division_points.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace divmean {

namespace {

struct SplitInfo {
    FieldCtxPtr ext;
    std::vector<std::pair<FieldElement, int>> roots;  // (root, multiplicity), canonical order
};

// Splitting field of f plus all multiplicities, doubling the degree once if
// any root's cubic value fails to be a square (so y-coordinates also land in
// the returned field; in the doubled field every base-norm value is a square).
SplitInfo find_splitting_roots(const Polynomial& f, const Curve& curve, std::uint64_t seed) {
    const FieldCtxPtr& base = f.ctx();
    if (base->k() != 1)
        throw std::invalid_argument("division-point enumeration supports prime base fields only");

    auto degrees = factor_degrees(f);
    unsigned k = 1;
    for (unsigned d : degrees) k = std::lcm(k, d);

    for (int attempt = 0; attempt < 2; ++attempt) {
        unsigned deg = k << attempt;
        FieldCtxPtr ext = deg == 1 ? base : build_extension(base->p(), deg, mix_seed(seed, deg));
        Polynomial flift = f.lift_to(ext);
        std::vector<FieldElement> roots = distinct_roots(flift, mix_seed(seed, 0x726f6f74 + deg));

        Curve ec = curve.base_change(ext);
        bool all_square = std::all_of(roots.begin(), roots.end(),
                                      [&](const FieldElement& r) { return is_square(ec.rhs(r)); });
        if (!all_square) continue;

        SplitInfo info;
        info.ext = std::move(ext);
        int total = 0;
        for (const auto& r : roots) {
            int m = root_multiplicity(flift, r);
            total += m;
            info.roots.emplace_back(r, m);
        }
        if (total != f.degree())
            throw std::logic_error("internal consistency: x-polynomial did not split completely");
        return info;
    }
    throw std::logic_error("internal consistency: doubled extension still missing y-coordinates");
}

}  // namespace

Polynomial division_x_poly(const DivPolyTable& table, const Point& q, int n) {
    if (q.is_infinity())
        throw std::invalid_argument("Q must be affine: n-division points are defined for Q != O");
    const Curve& curve = table.curve();
    if (!curve.contains(q)) throw std::invalid_argument("Q is not on the curve");
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (static_cast<std::uint64_t>(n) % curve.ctx()->p() == 0)
        throw std::invalid_argument("n must be coprime to the field characteristic");
    Polynomial f = table.phi(n) - table.psi_squared(n).scale(q.x());
    if (f.degree() != n * n || !f.is_monic())
        throw std::logic_error("internal consistency: division x-polynomial must be monic of degree n^2");
    return f;
}

FieldCtxPtr splitting_extension(const Polynomial& f, const Curve& curve, std::uint64_t seed) {
    return find_splitting_roots(f, curve, seed).ext;
}

DivisionSet n_division_points(const DivPolyTable& table, const Point& q, int n, std::uint64_t seed) {
    Polynomial f = division_x_poly(table, q, n);
    const Curve& curve = table.curve();
    SplitInfo info = find_splitting_roots(f, curve, seed);

    DivisionSet ds{curve,
                   q,
                   n,
                   info.ext,
                   curve.base_change(info.ext),
                   embed_point(q, info.ext),
                   {},
                   std::move(info.roots)};

    Polynomial psi_sq = table.psi_squared(n).lift_to(ds.ext);
    for (const auto& [x0, mult] : ds.x_multiset) {
        if (psi_sq.eval(x0).is_zero())
            throw std::logic_error("internal consistency: division-point x-coordinate is n-torsion");
        std::vector<Point> candidates = ds.ext_curve.lift_x(x0);
        if (candidates.empty())
            throw std::logic_error("internal consistency: missing y-coordinate in splitting extension");
        int admitted = 0;
        for (const auto& cand : candidates) {
            // group-law certificate, independent of the division polynomials
            if (ds.ext_curve.scalar_mul(static_cast<std::uint64_t>(n), cand) == ds.q_ext) {
                ds.points.push_back(cand);
                ++admitted;
            }
        }
        if (admitted != mult)
            throw std::logic_error("internal consistency: admitted candidates != root multiplicity");
    }
    if (static_cast<int>(ds.points.size()) != n * n)
        throw std::logic_error("internal consistency: |division set| != n^2");
    std::sort(ds.points.begin(), ds.points.end(), canonical_point_less);
    return ds;
}

}  // namespace divmean
