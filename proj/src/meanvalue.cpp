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

#include "divmean/meanvalue.hpp"

#include <stdexcept>

namespace divmean {

namespace {

CheckResult eq_check(std::string name, const FieldElement& lhs, const FieldElement& rhs) {
    CheckResult r;
    r.name = std::move(name);
    r.status = lhs == rhs ? CheckStatus::ok : CheckStatus::fail;
    r.lhs = lhs.str();
    r.rhs = rhs.str();
    return r;
}

CheckResult skip_check(std::string name, std::string reason) {
    CheckResult r;
    r.name = std::move(name);
    r.status = CheckStatus::skipped;
    r.note = std::move(reason);
    return r;
}

CheckResult fail_check(std::string name, std::string reason) {
    CheckResult r;
    r.name = std::move(name);
    r.status = CheckStatus::fail;
    r.note = std::move(reason);
    return r;
}

}  // namespace

NormalizedMap normalized_map(const DivPolyTable& table, int n) {
    if (n < 1 || n > table.max_index() - 2)
        throw std::invalid_argument("normalized_map index out of table range");
    NormalizedMap nm{n, table.phi(n), table.psi_squared(n), Polynomial::zero(table.curve().ctx()),
                     Polynomial::zero(table.curve().ctx())};
    const CurvePoly& om = table.omega(n);
    const Polynomial& psi_x = table.psi(n).xpart();
    Polynomial psi_x3 = psi_x * psi_x * psi_x;
    if (n % 2 == 1) {
        if (om.parity() != YParity::y_times_x)
            throw std::logic_error("internal consistency: odd omega must carry y");
        nm.s_num = om.xpart();
        nm.s_den = std::move(psi_x3);
    } else {
        if (om.parity() != YParity::pure_x)
            throw std::logic_error("internal consistency: even omega must be pure in x");
        nm.s_num = om.xpart();
        nm.s_den = table.cubic() * table.cubic() * psi_x3;
    }
    return nm;
}

CheckResult verify_mean_x(const DivisionSet& ds) {
    FieldElement sum = ds.ext->zero();
    for (const auto& p : ds.points) sum += p.x();
    FieldElement rhs = ds.ext->from_int(static_cast<std::int64_t>(ds.n) * ds.n) * ds.q_ext.x();
    return eq_check("mean_x", sum, rhs);
}

CheckResult verify_mean_y(const DivisionSet& ds) {
    FieldElement sum = ds.ext->zero();
    for (const auto& p : ds.points) sum += p.y();
    std::int64_t n3 = static_cast<std::int64_t>(ds.n) * ds.n * ds.n;
    FieldElement rhs = ds.ext->from_int(n3) * ds.q_ext.y();
    return eq_check("mean_y", sum, rhs);
}

CheckResult vieta_x_check(const DivPolyTable& table, const Point& q, int n) {
    Polynomial f = division_x_poly(table, q, n);
    FieldElement lhs = f.coeff(static_cast<std::size_t>(n) * n - 1);
    FieldElement rhs = -(q.x().ctx()->from_int(static_cast<std::int64_t>(n) * n) * q.x());
    return eq_check("vieta_x", lhs, rhs);
}

CheckResult slope_average_check(const DivisionSet& ds) {
    if (ds.n == 1) return skip_check("slope_average", "P = Q, chord undefined");
    for (const auto& p : ds.points)
        if (p.x() == ds.q_ext.x())
            return skip_check("slope_average", "some x_P = x_Q, chord slope undefined");
    const FieldCtxPtr& ext = ds.ext;
    FieldElement sum_l = ext->zero(), sum_lx = ext->zero(), sum_x = ext->zero(), sum_y = ext->zero();
    for (const auto& p : ds.points) {
        FieldElement lambda = (ds.q_ext.y() - p.y()) / (ds.q_ext.x() - p.x());
        sum_l += lambda;
        sum_lx += lambda * p.x();
        sum_x += p.x();
        sum_y += p.y();
    }
    FieldElement n2 = ext->from_int(static_cast<std::int64_t>(ds.n) * ds.n);
    FieldElement lhs = n2 * ds.q_ext.y();
    FieldElement rhs = sum_l * sum_x / n2 - sum_lx + sum_y;
    return eq_check("slope_average", lhs, rhs);
}

std::vector<CheckResult> application_identities(const DivisionSet& ds, const NormalizedMap& nm) {
    const char* names[] = {"s_pointwise", "sum_inv_s", "sum_inv_rprime", "sum_xq_over_rprime"};
    std::vector<CheckResult> out;
    if (ds.q.y().is_zero()) {
        for (const char* name : names)
            out.push_back(skip_check(name, "y_Q = 0: the identities divide by y_Q"));
        return out;
    }
    const FieldCtxPtr& ext = ds.ext;
    Polynomial s_num = nm.s_num.lift_to(ext);
    Polynomial s_den = nm.s_den.lift_to(ext);
    Polynomial r_den = nm.r_den.lift_to(ext);
    // R' = (r_num' r_den - r_num r_den')/r_den^2, formed over the base field
    Polynomial rp_num =
        (nm.r_num.derivative() * nm.r_den - nm.r_num * nm.r_den.derivative()).lift_to(ext);

    bool pointwise_ok = true;
    std::string pointwise_note;
    FieldElement sum_inv_s = ext->zero();
    FieldElement sum_inv_rp = ext->zero();
    FieldElement sum_x = ext->zero();
    for (const auto& p : ds.points) {
        sum_x += p.x();
        FieldElement sn = s_num.eval(p.x());
        FieldElement sd = s_den.eval(p.x());
        if (sn.is_zero() || sd.is_zero()) {
            out.push_back(fail_check(names[0], "S_n degenerate at x_P = " + p.x().str()));
            out.push_back(fail_check(names[1], "S_n degenerate at a division point"));
            out.push_back(fail_check(names[2], "S_n degenerate at a division point"));
            out.push_back(fail_check(names[3], "S_n degenerate at a division point"));
            return out;
        }
        // symbolic route vs coordinate route: S_n(x_P) = y_Q / y_P
        FieldElement s_val = sn / sd;
        if (pointwise_ok && !(s_val == ds.q_ext.y() / p.y())) {
            pointwise_ok = false;
            pointwise_note = "mismatch at x_P = " + p.x().str();
        }
        sum_inv_s += sd / sn;
        FieldElement a_val = rp_num.eval(p.x());
        if (a_val.is_zero()) {
            out.push_back(fail_check(names[0], "R'_n vanishes at a division point"));
            out.push_back(fail_check(names[1], "R'_n vanishes at a division point"));
            out.push_back(fail_check(names[2], "R'_n vanishes at a division point"));
            out.push_back(fail_check(names[3], "R'_n vanishes at a division point"));
            return out;
        }
        FieldElement rd = r_den.eval(p.x());
        sum_inv_rp += rd * rd / a_val;
    }

    CheckResult pw;
    pw.name = names[0];
    pw.status = pointwise_ok ? CheckStatus::ok : CheckStatus::fail;
    pw.note = pointwise_note;
    out.push_back(std::move(pw));

    std::int64_t n = nm.n;
    out.push_back(eq_check(names[1], sum_inv_s, ext->from_int(n * n * n)));
    out.push_back(eq_check(names[2], sum_inv_rp, ext->from_int(n * n)));
    out.push_back(eq_check(names[3], ds.q_ext.x() * sum_inv_rp, sum_x));
    return out;
}

CheckResult c_n_check(const NormalizedMap& nm, int samples, std::uint64_t seed,
                      const FieldCtxPtr& eval_ctx) {
    FieldCtxPtr ctx = eval_ctx ? eval_ctx : nm.r_num.ctx();
    Polynomial r_den = nm.r_den.lift_to(ctx);
    Polynomial s_num = nm.s_num.lift_to(ctx);
    Polynomial s_den = nm.s_den.lift_to(ctx);
    Polynomial rp_num =
        (nm.r_num.derivative() * nm.r_den - nm.r_num * nm.r_den.derivative()).lift_to(ctx);
    FieldElement nval = ctx->from_int(nm.n);

    std::mt19937_64 rng(mix_seed(seed, 0xc0ffee + static_cast<std::uint64_t>(nm.n)));
    int found = 0;
    long attempts = 0;
    const long max_attempts = 512L * std::max(samples, 1);
    while (found < samples && attempts < max_attempts) {
        ++attempts;
        FieldElement x = ctx->sample(rng);
        FieldElement rd = r_den.eval(x);
        FieldElement sd = s_den.eval(x);
        if (rd.is_zero() || sd.is_zero()) continue;
        ++found;
        // R'(x)/S(x) = n in cross-multiplied form
        FieldElement lhs = rp_num.eval(x) * sd;
        FieldElement rhs = nval * s_num.eval(x) * rd * rd;
        if (!(lhs == rhs)) {
            CheckResult r = fail_check("c_n", "R'_n/S_n != n at x = " + x.str());
            r.lhs = lhs.str();
            r.rhs = rhs.str();
            return r;
        }
    }
    if (found == 0)
        return skip_check("c_n", "no sample point avoids the denominator roots in this field");
    CheckResult r;
    r.name = "c_n";
    r.status = CheckStatus::ok;
    r.note = std::to_string(found) + " samples";
    return r;
}

VerificationReport verify_instance(const DivPolyTable& table, const Point& q, int n,
                                   std::uint64_t seed, int c_n_samples) {
    DivisionSet ds = n_division_points(table, q, n, seed);
    NormalizedMap nm = normalized_map(table, n);

    VerificationReport rep{table.curve(), q, n, ds.ext, ds.points.size(), {}, true};
    rep.checks.push_back(verify_mean_x(ds));
    rep.checks.push_back(verify_mean_y(ds));
    rep.checks.push_back(vieta_x_check(table, q, n));
    rep.checks.push_back(slope_average_check(ds));
    for (auto& c : application_identities(ds, nm)) rep.checks.push_back(std::move(c));
    rep.checks.push_back(c_n_check(nm, c_n_samples, mix_seed(seed, 0x5a), ds.ext));
    for (const auto& c : rep.checks) rep.all_ok = rep.all_ok && !c.failed();
    return rep;
}

}  // namespace divmean
