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

#include "divmean/divpoly.hpp"

#include <stdexcept>

namespace divmean {

namespace {

// y-parity arithmetic: PureX*PureX and Y*Y land in pure x (the latter via
// y^2 -> cubic), mixed products carry y.
CurvePoly cp_mul(const CurvePoly& a, const CurvePoly& b, const Polynomial& cubic) {
    Polynomial prod = a.xpart() * b.xpart();
    if (a.parity() == YParity::y_times_x && b.parity() == YParity::y_times_x)
        return CurvePoly(YParity::pure_x, prod * cubic);
    if (a.parity() == YParity::pure_x && b.parity() == YParity::pure_x)
        return CurvePoly(YParity::pure_x, std::move(prod));
    return CurvePoly(YParity::y_times_x, std::move(prod));
}

CurvePoly cp_square(const CurvePoly& a, const Polynomial& cubic) { return cp_mul(a, a, cubic); }

CurvePoly cp_sub(const CurvePoly& a, const CurvePoly& b) {
    if (a.parity() != b.parity() && !a.is_zero() && !b.is_zero())
        throw std::logic_error("internal consistency: mixed-parity subtraction in the psi recursion");
    YParity par = a.is_zero() ? b.parity() : a.parity();
    return CurvePoly(par, a.xpart() - b.xpart());
}

}  // namespace

FieldElement CurvePoly::eval(const Point& p) const {
    FieldElement v = xpart_.eval(p.x());
    if (parity_ == YParity::y_times_x) v = v * p.y();
    return v;
}

DivPolyTable::DivPolyTable(Curve curve, int max_index)
    : curve_(std::move(curve)),
      cubic_(Polynomial::from_ints(curve_.ctx(), {0, 0, 0, 1}) +
             Polynomial(curve_.ctx(), {curve_.b(), curve_.a()})),
      psi_minus_one_(YParity::pure_x, Polynomial::constant(-curve_.ctx()->one())) {
    if (max_index < 4) throw std::invalid_argument("division polynomial table needs max index >= 4");
    const FieldCtxPtr& ctx = curve_.ctx();
    const FieldElement a = curve_.a();
    const FieldElement b = curve_.b();
    const int N = max_index;

    psi_.reserve(N + 1);
    psi_.emplace_back(YParity::y_times_x, Polynomial::zero(ctx));                   // psi_0 = 0
    psi_.emplace_back(YParity::pure_x, Polynomial::constant(ctx->one()));           // psi_1 = 1
    psi_.emplace_back(YParity::y_times_x, Polynomial::constant(ctx->from_int(2)));  // psi_2 = 2y

    // psi_3 = 3x^4 + 6ax^2 + 12bx - a^2
    {
        std::vector<FieldElement> c{-(a * a), ctx->from_int(12) * b, ctx->from_int(6) * a, ctx->zero(),
                                    ctx->from_int(3)};
        psi_.emplace_back(YParity::pure_x, Polynomial(ctx, std::move(c)));
    }
    // psi_4 = 4y(x^6 + 5ax^4 + 20bx^3 - 5a^2x^2 - 4abx - 8b^2 - a^3)
    {
        FieldElement four = ctx->from_int(4);
        std::vector<FieldElement> c{-(ctx->from_int(8) * b * b + a * a * a),
                                    -(four * a * b),
                                    -(ctx->from_int(5) * a * a),
                                    ctx->from_int(20) * b,
                                    ctx->from_int(5) * a,
                                    ctx->zero(),
                                    ctx->one()};
        psi_.emplace_back(YParity::y_times_x, Polynomial(ctx, std::move(c)).scale(four));
    }

    const Polynomial two_cubic = cubic_.scale(ctx->from_int(2));
    for (int m = 5; m <= N; ++m) {
        if (m & 1) {
            int n = (m - 1) / 2;
            CurvePoly t1 = cp_mul(psi_[n + 2], cp_mul(psi_[n], cp_square(psi_[n], cubic_), cubic_), cubic_);
            CurvePoly t2 = cp_mul(psi_[n - 1], cp_mul(psi_[n + 1], cp_square(psi_[n + 1], cubic_), cubic_), cubic_);
            CurvePoly r = cp_sub(t1, t2);
            if (r.parity() != YParity::pure_x && !r.is_zero())
                throw std::logic_error("internal consistency: odd psi must be pure in x");
            psi_.emplace_back(YParity::pure_x, r.xpart());
        } else {
            int n = m / 2;
            CurvePoly inner = cp_sub(cp_mul(psi_[n + 2], cp_square(psi_[n - 1], cubic_), cubic_),
                                     cp_mul(psi_[n - 2], cp_square(psi_[n + 1], cubic_), cubic_));
            CurvePoly r = cp_mul(psi_[n], inner, cubic_);
            if (r.parity() != YParity::pure_x && !r.is_zero())
                throw std::logic_error("internal consistency: 2y*psi_2n must be pure in x");
            // 2y*psi_2n = 2*(x^3+ax+b)*xpart(psi_2n)
            psi_.emplace_back(YParity::y_times_x, divide_exact(r.xpart(), two_cubic));
        }
    }

    psi_sq_.reserve(N + 1);
    for (int n = 0; n <= N; ++n) psi_sq_.push_back(cp_square(psi_[n], cubic_).xpart());

    phi_.reserve(N);
    phi_.push_back(Polynomial::zero(ctx));  // placeholder at index 0
    const Polynomial xpoly = Polynomial::x(ctx);
    for (int n = 1; n <= N - 1; ++n) {
        CurvePoly prod = cp_mul(psi_[n - 1], psi_[n + 1], cubic_);
        if (prod.parity() != YParity::pure_x && !prod.is_zero())
            throw std::logic_error("internal consistency: psi_{n-1}psi_{n+1} must be pure in x");
        Polynomial f = xpoly * psi_sq_[n] - prod.xpart();
        if (f.degree() != n * n || !f.is_monic())
            throw std::logic_error("internal consistency: phi_n must be monic of degree n^2");
        phi_.push_back(std::move(f));
    }

    omega_.reserve(N - 1);
    omega_.emplace_back(YParity::pure_x, Polynomial::zero(ctx));  // placeholder at index 0
    const Polynomial four_cubic = cubic_.scale(ctx->from_int(4));
    const FieldElement quarter = ctx->from_int(4).inv();
    for (int n = 1; n <= N - 2; ++n) {
        const CurvePoly& lo = n >= 2 ? psi_[n - 2] : psi_minus_one_;
        CurvePoly r = cp_sub(cp_mul(psi_[n + 2], cp_square(psi_[n - 1], cubic_), cubic_),
                             cp_mul(lo, cp_square(psi_[n + 1], cubic_), cubic_));
        if (r.parity() == YParity::pure_x) {
            // 4y*omega_n pure in x: omega_n = y * (xpart / 4(x^3+ax+b))
            omega_.emplace_back(YParity::y_times_x, divide_exact(r.xpart(), four_cubic));
        } else {
            // 4y*omega_n = y*u: omega_n = u/4, pure in x
            omega_.emplace_back(YParity::pure_x, r.xpart().scale(quarter));
        }
        bool expect_y = (n & 1) == 1;
        if (!omega_[n].is_zero() && (omega_[n].parity() == YParity::y_times_x) != expect_y)
            throw std::logic_error("internal consistency: omega parity must be opposite to psi parity");
    }
}

const CurvePoly& DivPolyTable::psi(int n) const {
    if (n == -1) return psi_minus_one_;
    if (n < -1 || n >= static_cast<int>(psi_.size()))
        throw std::invalid_argument("psi index out of table range");
    return psi_[n];
}

const Polynomial& DivPolyTable::psi_squared(int n) const {
    if (n < 0 || n >= static_cast<int>(psi_sq_.size()))
        throw std::invalid_argument("psi^2 index out of table range");
    return psi_sq_[n];
}

const Polynomial& DivPolyTable::phi(int n) const {
    if (n < 1 || n >= static_cast<int>(phi_.size()))
        throw std::invalid_argument("phi index out of table range");
    return phi_[n];
}

const CurvePoly& DivPolyTable::omega(int n) const {
    if (n < 1 || n >= static_cast<int>(omega_.size()))
        throw std::invalid_argument("omega index out of table range");
    return omega_[n];
}

Point DivPolyTable::mul_by_n(int n, const Point& p) const {
    if (n < 1 || n > max_index() - 2) throw std::invalid_argument("mul_by_n index out of table range");
    if (p.is_infinity()) throw std::invalid_argument("mul_by_n expects an affine point");
    if (!curve_.contains(p)) throw std::invalid_argument("mul_by_n input is not on the curve");
    FieldElement u = psi_[n].eval(p);
    if (u.is_zero()) return Point::infinity();  // p is n-torsion
    FieldElement u2 = u * u;
    FieldElement x = phi_[n].eval(p.x()) / u2;
    FieldElement y = omega_[n].eval(p) / (u2 * u);
    return curve_.point(x, y);
}

namespace {

void check_top_coeffs(const Polynomial& f, int expect_deg, const FieldElement& lead,
                      const FieldElement& second, const std::string& label, LeadingCoeffCheck& out) {
    LeadingCoeffCheck::Item item;
    item.label = label;
    bool ok = f.degree() == expect_deg && f.coeff(expect_deg) == lead;
    std::string exp_s = lead.str(), act_s;
    act_s = f.degree() == expect_deg ? f.coeff(expect_deg).str() : ("deg=" + std::to_string(f.degree()));
    if (expect_deg >= 1) {
        ok = ok && f.coeff(expect_deg - 1).is_zero();
        exp_s += ",0";
        act_s += "," + f.coeff(expect_deg - 1).str();
    }
    if (expect_deg >= 2) {
        ok = ok && f.coeff(expect_deg - 2) == second;
        exp_s += "," + second.str();
        act_s += "," + f.coeff(expect_deg - 2).str();
    } else {
        item.vacuous = true;  // second term's exponent is negative
    }
    item.ok = ok;
    item.expected = exp_s;
    item.actual = act_s;
    out.ok = out.ok && ok;
    out.items.push_back(std::move(item));
}

}  // namespace

LeadingCoeffCheck DivPolyTable::leading_coeffs_check(int n) const {
    const FieldCtxPtr& ctx = curve_.ctx();
    if (ctx->p() < 7) throw std::invalid_argument("leading coefficient closed forms need p >= 7");
    if (n < 1 || n > max_index() - 1) throw std::invalid_argument("leading_coeffs_check index out of range");

    LeadingCoeffCheck out;
    out.n = n;
    const FieldElement a = curve_.a();
    const std::int64_t nn = n;
    const std::int64_t n2 = nn * nn;
    const FieldElement inv60 = ctx->from_int(60).inv();
    const FieldElement inv30 = ctx->from_int(30).inv();
    const FieldElement inv6 = ctx->from_int(6).inv();

    if (n % 2 == 1) {
        // psi_n = n x^{(n^2-1)/2} + n(n^2-1)(n^2+6)/60 a x^{(n^2-5)/2} + ...
        FieldElement second = ctx->from_int(nn * (n2 - 1) * (n2 + 6)) * inv60 * a;
        check_top_coeffs(psi_[n].xpart(), static_cast<int>((n2 - 1) / 2), ctx->from_int(nn), second,
                         "psi_odd", out);
    } else {
        // psi_n = ny(x^{(n^2-4)/2} + ((n^2-1)(n^2+6)-30)/60 a x^{(n^2-8)/2} + ...)
        FieldElement second = ctx->from_int(nn) * ctx->from_int((n2 - 1) * (n2 + 6) - 30) * inv60 * a;
        check_top_coeffs(psi_[n].xpart(), static_cast<int>((n2 - 4) / 2), ctx->from_int(nn), second,
                         "psi_even", out);
    }

    // psi_n^2 = n^2 x^{n^2-1} + n^2(n^2-1)(n^2+6)/30 a x^{n^2-3} + ...
    {
        FieldElement second = ctx->from_int(n2) * ctx->from_int((n2 - 1) * (n2 + 6)) * inv30 * a;
        check_top_coeffs(psi_sq_[n], static_cast<int>(n2 - 1), ctx->from_int(n2), second, "psi_squared",
                         out);
    }

    // phi_n = x^{n^2} - n^2(n^2-1)/6 a x^{n^2-2} + ...
    {
        FieldElement second = -(ctx->from_int(n2) * ctx->from_int(n2 - 1) * inv6 * a);
        check_top_coeffs(phi_[n], static_cast<int>(n2), ctx->one(), second, "phi", out);
    }
    return out;
}

}  // namespace divmean
