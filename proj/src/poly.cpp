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

#include "divmean/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace divmean {

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial::Polynomial(FieldCtxPtr ctx, std::vector<FieldElement> coeffs)
    : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    for (const auto& c : c_)
        if (!c.ctx()->same(*ctx_)) throw std::invalid_argument("polynomial coefficient context mismatch");
    trim();
}

Polynomial Polynomial::constant(const FieldElement& c) {
    return Polynomial(c.ctx(), std::vector<FieldElement>{c});
}

Polynomial Polynomial::monomial(const FieldElement& coeff, std::size_t deg) {
    const FieldCtxPtr& ctx = coeff.ctx();
    std::vector<FieldElement> c(deg + 1, ctx->zero());
    c[deg] = coeff;
    return Polynomial(ctx, std::move(c));
}

Polynomial Polynomial::x(const FieldCtxPtr& ctx) { return monomial(ctx->one(), 1); }

Polynomial Polynomial::from_ints(const FieldCtxPtr& ctx, const std::vector<std::int64_t>& coeffs) {
    std::vector<FieldElement> c;
    c.reserve(coeffs.size());
    for (std::int64_t v : coeffs) c.push_back(ctx->from_int(v));
    return Polynomial(ctx, std::move(c));
}

FieldElement Polynomial::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : ctx_->zero();
}

const FieldElement& Polynomial::leading() const {
    if (c_.empty()) throw std::invalid_argument("zero polynomial has no leading coefficient");
    return c_.back();
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    std::vector<FieldElement> r;
    std::size_t n = std::max(c_.size(), rhs.c_.size());
    r.reserve(n);
    for (std::size_t i = 0; i < n; ++i) r.push_back(coeff(i) + rhs.coeff(i));
    return Polynomial(ctx_, std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    std::vector<FieldElement> r;
    std::size_t n = std::max(c_.size(), rhs.c_.size());
    r.reserve(n);
    for (std::size_t i = 0; i < n; ++i) r.push_back(coeff(i) - rhs.coeff(i));
    return Polynomial(ctx_, std::move(r));
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) return Polynomial(ctx_);
    std::vector<FieldElement> r(c_.size() + rhs.c_.size() - 1, ctx_->zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.c_.size(); ++j) r[i + j] += c_[i] * rhs.c_[j];
    }
    return Polynomial(ctx_, std::move(r));
}

Polynomial Polynomial::operator-() const {
    std::vector<FieldElement> r;
    r.reserve(c_.size());
    for (const auto& c : c_) r.push_back(-c);
    return Polynomial(ctx_, std::move(r));
}

Polynomial Polynomial::scale(const FieldElement& s) const {
    std::vector<FieldElement> r;
    r.reserve(c_.size());
    for (const auto& c : c_) r.push_back(c * s);
    return Polynomial(ctx_, std::move(r));
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return Polynomial(ctx_);
    std::vector<FieldElement> r;
    r.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        r.push_back(c_[i] * ctx_->from_int(static_cast<std::int64_t>(i)));
    return Polynomial(ctx_, std::move(r));
}

FieldElement Polynomial::eval(const FieldElement& at) const {
    FieldElement acc = ctx_->zero();
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i];
    return acc;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) throw std::invalid_argument("cannot normalize the zero polynomial");
    if (leading() == ctx_->one()) return *this;
    return scale(leading().inv());
}

bool Polynomial::is_monic() const { return !is_zero() && leading() == ctx_->one(); }

bool Polynomial::operator==(const Polynomial& rhs) const {
    return c_ == rhs.c_;
}

Polynomial Polynomial::lift_to(const FieldCtxPtr& target) const {
    if (target->same(*ctx_)) return Polynomial(target, c_);
    std::vector<FieldElement> r;
    r.reserve(c_.size());
    for (const auto& c : c_) r.push_back(embed(c, target));
    return Polynomial(target, std::move(r));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) throw std::invalid_argument("polynomial division by zero");
    const FieldCtxPtr& ctx = f.ctx();
    if (f.degree() < g.degree()) return {Polynomial(ctx), f};
    FieldElement linv = g.leading().inv();
    std::vector<FieldElement> rem = f.coeffs();
    std::vector<FieldElement> q(f.degree() - g.degree() + 1, ctx->zero());
    for (int i = f.degree() - g.degree(); i >= 0; --i) {
        FieldElement c = rem[i + g.degree()] * linv;
        if (c.is_zero()) continue;
        q[i] = c;
        for (int j = 0; j <= g.degree(); ++j) rem[i + j] -= c * g.coeffs()[j];
    }
    return {Polynomial(ctx, std::move(q)), Polynomial(ctx, std::move(rem))};
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
    auto [q, r] = divmod(f, g);
    if (!r.is_zero()) throw std::logic_error("internal consistency: expected exact polynomial division");
    return q;
}

Polynomial gcd(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() && g.is_zero()) throw std::invalid_argument("gcd(0, 0) is undefined");
    Polynomial a = f, b = g;
    while (!b.is_zero()) {
        Polynomial r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

namespace {

Polynomial mulmod_poly(const Polynomial& a, const Polynomial& b, const Polynomial& m) {
    return divmod(a * b, m).second;
}

}  // namespace

Polynomial powmod(const Polynomial& base, std::uint64_t e, const Polynomial& modulus) {
    return powmod(base, mpz_class(static_cast<unsigned long>(e)), modulus);
}

Polynomial powmod(const Polynomial& base, const mpz_class& e, const Polynomial& modulus) {
    if (modulus.degree() < 1) throw std::invalid_argument("powmod modulus must have degree >= 1");
    if (e < 0) throw std::invalid_argument("negative exponent");
    Polynomial r = Polynomial::constant(base.ctx()->one());
    r = divmod(r, modulus).second;
    if (e == 0) return r;
    Polynomial b = divmod(base, modulus).second;
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    Polynomial acc = b;
    for (std::size_t i = bits - 1; i-- > 0;) {
        acc = mulmod_poly(acc, acc, modulus);
        if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) acc = mulmod_poly(acc, b, modulus);
    }
    return acc;
}

namespace {

// Cantor-Zassenhaus equal-degree splitting of a monic product of distinct
// linear factors.
void split_linear(const Polynomial& g, std::mt19937_64& rng, const mpz_class& half_order,
                  std::vector<FieldElement>& out) {
    const FieldCtxPtr& ctx = g.ctx();
    if (g.degree() == 0) return;
    if (g.degree() == 1) {
        out.push_back(-g.coeffs()[0]);  // monic: x + c0
        return;
    }
    for (;;) {
        std::vector<FieldElement> rc;
        rc.reserve(g.degree());
        for (int i = 0; i < g.degree(); ++i) rc.push_back(ctx->sample(rng));
        Polynomial r(ctx, std::move(rc));
        if (r.is_zero()) continue;
        Polynomial d = gcd(r, g);
        if (d.degree() == 0) {
            Polynomial s = powmod(r, half_order, g) - Polynomial::constant(ctx->one());
            d = s.is_zero() ? g : gcd(s, g);
        }
        if (d.degree() > 0 && d.degree() < g.degree()) {
            split_linear(d, rng, half_order, out);
            split_linear(divide_exact(g, d), rng, half_order, out);
            return;
        }
    }
}

}  // namespace

std::vector<FieldElement> distinct_roots(const Polynomial& f, std::uint64_t seed) {
    if (f.is_zero()) throw std::invalid_argument("distinct_roots of the zero polynomial");
    const FieldCtxPtr& ctx = f.ctx();
    std::vector<FieldElement> roots;
    if (f.degree() == 0) return roots;
    Polynomial g = f.monic();
    // product of the distinct linear factors: gcd(f, x^q - x)
    Polynomial xq = powmod(Polynomial::x(ctx), ctx->order(), g);
    Polynomial lin = xq - Polynomial::x(ctx);
    lin = lin.is_zero() ? g : gcd(g, lin);
    std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(f.degree())));
    mpz_class half_order = (ctx->order() - 1) / 2;
    split_linear(lin, rng, half_order, roots);
    std::sort(roots.begin(), roots.end(), canonical_less);
    return roots;
}

int root_multiplicity(const Polynomial& f, const FieldElement& r) {
    if (f.is_zero() || !f.eval(r).is_zero())
        throw std::invalid_argument("root_multiplicity requires f(r) = 0");
    Polynomial factor = Polynomial::x(f.ctx()) - Polynomial::constant(r);
    Polynomial g = f;
    int m = 0;
    while (!g.is_zero() && g.eval(r).is_zero()) {
        g = divide_exact(g, factor);
        ++m;
    }
    return m;
}

std::vector<unsigned> factor_degrees(const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("factor_degrees of the zero polynomial");
    std::vector<unsigned> degrees;
    if (f.degree() == 0) return degrees;
    Polynomial g = f.monic();
    Polynomial d = g.derivative();
    if (d.is_zero())
        throw std::logic_error("internal consistency: inseparable polynomial in factor_degrees");
    Polynomial sf = divide_exact(g, gcd(g, d));  // squarefree part
    // distinct-degree factorization
    const FieldCtxPtr& ctx = f.ctx();
    Polynomial h = divmod(Polynomial::x(ctx), sf).second;
    unsigned deg = 1;
    while (sf.degree() > 0 && 2 * static_cast<int>(deg) <= sf.degree()) {
        h = powmod(h, ctx->order(), sf);  // x^(q^deg) mod sf
        Polynomial gd = gcd(sf, h - Polynomial::x(ctx));
        if (gd.degree() > 0) {
            for (int i = 0; i < gd.degree() / static_cast<int>(deg); ++i) degrees.push_back(deg);
            sf = divide_exact(sf, gd);
            h = divmod(h, sf).second;
        }
        ++deg;
    }
    if (sf.degree() > 0) degrees.push_back(static_cast<unsigned>(sf.degree()));
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

}  // namespace divmean
