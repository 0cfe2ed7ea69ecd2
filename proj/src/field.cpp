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

#include "divmean/field.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace divmean {

namespace {

// ---- residue arithmetic mod p (p < 2^63) ----

std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
}

std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    base %= p;
    while (e) {
        if (e & 1) r = mulmod(r, base, p);
        base = mulmod(base, base, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw std::invalid_argument("division by zero in F_p");
    return powmod_u64(a, p - 2, p);  // p prime
}

// ---- dense F_p[t] vectors, little-endian, trailing zeros stripped ----
// Self-contained so the field layer does not depend on the poly module.

using FpPoly = std::vector<std::uint64_t>;

void fp_trim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int fp_deg(const FpPoly& f) { return static_cast<int>(f.size()) - 1; }

FpPoly fp_sub(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t x = i < a.size() ? a[i] : 0;
        std::uint64_t y = i < b.size() ? b[i] : 0;
        r[i] = submod(x, y, p);
    }
    fp_trim(r);
    return r;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = addmod(r[i + j], mulmod(a[i], b[j], p), p);
    }
    fp_trim(r);
    return r;
}

// remainder of f by g; g need not be monic
FpPoly fp_rem(FpPoly f, const FpPoly& g, std::uint64_t p) {
    fp_trim(f);
    std::uint64_t linv = invmod_u64(g.back(), p);
    while (fp_deg(f) >= fp_deg(g)) {
        std::size_t shift = f.size() - g.size();
        std::uint64_t c = mulmod(f.back(), linv, p);
        for (std::size_t i = 0; i < g.size(); ++i)
            f[shift + i] = submod(f[shift + i], mulmod(c, g[i], p), p);
        fp_trim(f);
    }
    return f;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, std::uint64_t p) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        FpPoly r = fp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        std::uint64_t linv = invmod_u64(a.back(), p);
        for (auto& c : a) c = mulmod(c, linv, p);
    }
    return a;
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, std::uint64_t p) {
    return fp_rem(fp_mul(a, b, p), m, p);
}

// a^(p) mod m, applied `times` times: a^(p^times) mod m
FpPoly fp_frobenius_iter(FpPoly a, unsigned times, const FpPoly& m, std::uint64_t p) {
    for (unsigned t = 0; t < times; ++t) {
        FpPoly r{1};
        FpPoly base = a;
        std::uint64_t e = p;
        while (e) {
            if (e & 1) r = fp_mulmod(r, base, m, p);
            base = fp_mulmod(base, base, m, p);
            e >>= 1;
        }
        a = std::move(r);
    }
    return a;
}

// extended Euclid: u with u*f = 1 mod m (f nonzero mod m, gcd(f, m) = 1)
FpPoly fp_invmod(const FpPoly& f, const FpPoly& m, std::uint64_t p) {
    FpPoly r0 = m, r1 = fp_rem(f, m, p);
    FpPoly s0 = {}, s1 = {1};
    if (r1.empty()) throw std::invalid_argument("inversion of zero field element");
    while (!r1.empty()) {
        // divide r0 by r1
        FpPoly q;
        FpPoly rem = r0;
        std::uint64_t linv = invmod_u64(r1.back(), p);
        if (fp_deg(rem) >= fp_deg(r1)) q.assign(rem.size() - r1.size() + 1, 0);
        while (fp_deg(rem) >= fp_deg(r1)) {
            std::size_t shift = rem.size() - r1.size();
            std::uint64_t c = mulmod(rem.back(), linv, p);
            q[shift] = c;
            for (std::size_t i = 0; i < r1.size(); ++i)
                rem[shift + i] = submod(rem[shift + i], mulmod(c, r1[i], p), p);
            fp_trim(rem);
        }
        FpPoly s2 = fp_sub(s0, fp_mul(q, s1, p), p);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (fp_deg(r0) != 0) throw std::invalid_argument("element not invertible (gcd with modulus nontrivial)");
    std::uint64_t linv = invmod_u64(r0[0], p);
    for (auto& c : s0) c = mulmod(c, linv, p);
    fp_trim(s0);
    return s0;
}

std::vector<unsigned> prime_factors(unsigned n) {
    std::vector<unsigned> fs;
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

// Rabin irreducibility test for monic f of degree k over F_p:
// x^(p^k) = x mod f, and gcd(x^(p^(k/r)) - x, f) = 1 for each prime r | k.
bool fp_irreducible(const FpPoly& f, std::uint64_t p) {
    int k = fp_deg(f);
    if (k < 1) return false;
    if (k == 1) return true;
    const FpPoly x{0, 1};
    for (unsigned r : prime_factors(static_cast<unsigned>(k))) {
        FpPoly h = fp_frobenius_iter(x, static_cast<unsigned>(k) / r, f, p);
        FpPoly g = fp_gcd(fp_sub(h, x, p), f, p);
        if (fp_deg(g) != 0) return false;
    }
    FpPoly h = fp_frobenius_iter(x, static_cast<unsigned>(k), f, p);
    return fp_sub(h, x, p).empty();
}

const std::vector<std::uint64_t>& require_same_ctx(const FieldElement& a, const FieldElement& b) {
    if (a.ctx().get() != b.ctx().get() && !a.ctx()->same(*b.ctx()))
        throw std::invalid_argument("field context mismatch");
    return a.coeffs();
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// ---- FieldCtx ----

FieldCtx::FieldCtx(std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
    mpz_ui_pow_ui(order_.get_mpz_t(), static_cast<unsigned long>(p_), k_);
}

FieldCtxPtr FieldCtx::prime_field(std::uint64_t p) {
    return extension(p, {0, 1});
}

FieldCtxPtr FieldCtx::extension(std::uint64_t p, std::vector<std::uint64_t> modulus) {
    if (p <= 3 || !is_prime_u64(p)) throw std::invalid_argument("field characteristic must be a prime > 3");
    if (p >= (1ull << 62)) throw std::invalid_argument("characteristic too large");
    for (auto& c : modulus) c %= p;
    fp_trim(modulus);
    if (modulus.size() < 2) throw std::invalid_argument("modulus must have degree >= 1");
    if (modulus.back() != 1) throw std::invalid_argument("modulus must be monic");
    if (!fp_irreducible(modulus, p)) throw std::invalid_argument("modulus is reducible over F_p");
    unsigned k = static_cast<unsigned>(modulus.size() - 1);
    return FieldCtxPtr(new FieldCtx(p, k, std::move(modulus)));
}

bool FieldCtx::same(const FieldCtx& other) const {
    return this == &other || (p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_);
}

FieldElement FieldCtx::zero() const {
    return FieldElement(shared_from_this(), std::vector<std::uint64_t>(k_, 0));
}

FieldElement FieldCtx::one() const { return from_int(1); }

FieldElement FieldCtx::from_int(std::int64_t v) const {
    std::int64_t m = static_cast<std::int64_t>(p_);
    std::int64_t r = v % m;
    if (r < 0) r += m;
    std::vector<std::uint64_t> c(k_, 0);
    c[0] = static_cast<std::uint64_t>(r);
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement FieldCtx::from_coeffs(std::vector<std::uint64_t> coeffs) const {
    for (auto& c : coeffs) c %= p_;
    if (coeffs.size() > k_) {
        for (std::size_t i = k_; i < coeffs.size(); ++i)
            if (coeffs[i] != 0) throw std::invalid_argument("coefficient vector longer than extension degree");
        coeffs.resize(k_);
    }
    coeffs.resize(k_, 0);
    return FieldElement(shared_from_this(), std::move(coeffs));
}

FieldElement FieldCtx::sample(std::mt19937_64& rng) const {
    std::vector<std::uint64_t> c(k_);
    for (auto& v : c) v = rng() % p_;
    return FieldElement(shared_from_this(), std::move(c));
}

// ---- FieldElement ----

FieldElement::FieldElement(FieldCtxPtr ctx, std::vector<std::uint64_t> coeffs)
    : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    if (c_.size() != ctx_->k()) throw std::invalid_argument("coefficient vector length must equal extension degree");
}

bool FieldElement::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](std::uint64_t v) { return v == 0; });
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
    require_same_ctx(*this, rhs);
    std::vector<std::uint64_t> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = addmod(c_[i], rhs.c_[i], ctx_->p());
    return FieldElement(ctx_, std::move(r));
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
    require_same_ctx(*this, rhs);
    std::vector<std::uint64_t> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = submod(c_[i], rhs.c_[i], ctx_->p());
    return FieldElement(ctx_, std::move(r));
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
    require_same_ctx(*this, rhs);
    const std::uint64_t p = ctx_->p();
    if (ctx_->k() == 1) return FieldElement(ctx_, {mulmod(c_[0], rhs.c_[0], p)});
    FpPoly prod = fp_mul(c_, rhs.c_, p);
    prod = fp_rem(std::move(prod), ctx_->modulus(), p);
    prod.resize(ctx_->k(), 0);
    return FieldElement(ctx_, std::move(prod));
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const {
    return *this * rhs.inv();
}

FieldElement FieldElement::operator-() const {
    std::vector<std::uint64_t> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] == 0 ? 0 : ctx_->p() - c_[i];
    return FieldElement(ctx_, std::move(r));
}

FieldElement FieldElement::inv() const {
    if (is_zero()) throw std::invalid_argument("inversion of zero field element");
    const std::uint64_t p = ctx_->p();
    if (ctx_->k() == 1) return FieldElement(ctx_, {invmod_u64(c_[0], p)});
    FpPoly u = fp_invmod(c_, ctx_->modulus(), p);
    u.resize(ctx_->k(), 0);
    return FieldElement(ctx_, std::move(u));
}

FieldElement FieldElement::pow(std::uint64_t e) const {
    FieldElement r = ctx_->one();
    FieldElement base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

FieldElement FieldElement::pow(const mpz_class& e) const {
    if (e < 0) throw std::invalid_argument("negative exponent");
    if (e == 0) return ctx_->one();
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    FieldElement r = *this;
    for (std::size_t i = bits - 1; i-- > 0;) {
        r = r * r;
        if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) r = r * *this;
    }
    return r;
}

bool FieldElement::operator==(const FieldElement& rhs) const {
    require_same_ctx(*this, rhs);
    return c_ == rhs.c_;
}

std::string FieldElement::str() const {
    if (ctx_->k() == 1) return std::to_string(c_[0]);
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ',';
        os << c_[i];
    }
    os << ']';
    return os.str();
}

bool canonical_less(const FieldElement& a, const FieldElement& b) {
    return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(),
                                        b.coeffs().end());
}

// ---- squares and roots ----

bool is_square(const FieldElement& a) {
    if (a.is_zero()) return true;
    mpz_class e = (a.ctx()->order() - 1) / 2;
    return a.pow(e) == a.ctx()->one();
}

std::optional<FieldElement> sqrt(const FieldElement& a, std::uint64_t seed) {
    const FieldCtxPtr& ctx = a.ctx();
    if (a.is_zero()) return ctx->zero();
    if (!is_square(a)) return std::nullopt;

    // q - 1 = 2^s * t with t odd
    mpz_class t = ctx->order() - 1;
    unsigned long s = mpz_scan1(t.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(t.get_mpz_t(), t.get_mpz_t(), s);

    // seeded non-residue search
    std::mt19937_64 rng(mix_seed(seed, ctx->p() + ctx->k()));
    FieldElement z = ctx->one();
    for (;;) {
        z = ctx->sample(rng);
        if (!z.is_zero() && !is_square(z)) break;
    }

    FieldElement c = z.pow(t);
    FieldElement u = a.pow(t);
    FieldElement r = a.pow(mpz_class((t + 1) / 2));
    unsigned long m = s;
    const FieldElement one = ctx->one();
    while (!(u == one)) {
        unsigned long i = 0;
        FieldElement v = u;
        while (!(v == one)) {
            v = v * v;
            ++i;
            if (i >= m) throw std::logic_error("internal consistency: Tonelli-Shanks failed on a square");
        }
        FieldElement b = c;
        for (unsigned long j = 0; j + i + 1 < m; ++j) b = b * b;
        m = i;
        c = b * b;
        u = u * c;
        r = r * b;
    }
    return r;
}

FieldElement embed(const FieldElement& a, const FieldCtxPtr& target) {
    if (a.ctx()->k() != 1) throw std::invalid_argument("embed source must be a prime-field element");
    if (a.ctx()->p() != target->p()) throw std::invalid_argument("embed requires matching characteristic");
    std::vector<std::uint64_t> c(target->k(), 0);
    c[0] = a.coeffs()[0];
    return FieldElement(target, std::move(c));
}

FieldCtxPtr build_extension(std::uint64_t p, unsigned k, std::uint64_t seed) {
    if (p <= 3 || !is_prime_u64(p)) throw std::invalid_argument("field characteristic must be a prime > 3");
    if (k < 1) throw std::invalid_argument("extension degree must be >= 1");
    if (k == 1) return FieldCtx::prime_field(p);
    std::mt19937_64 rng(mix_seed(seed, (p << 8) ^ k));
    for (;;) {
        FpPoly f(k + 1, 0);
        f[k] = 1;
        for (unsigned i = 0; i < k; ++i) f[i] = rng() % p;
        if (fp_irreducible(f, p)) return FieldCtx::extension(p, std::move(f));
    }
}

std::vector<FieldElement> all_elements(const FieldCtxPtr& ctx, std::uint64_t bound) {
    if (ctx->order() > bound) throw std::invalid_argument("field too large to enumerate (bound " +
                                                          std::to_string(bound) + ")");
    std::size_t q = static_cast<std::size_t>(ctx->order().get_ui());
    std::vector<FieldElement> out;
    out.reserve(q);
    std::vector<std::uint64_t> digits(ctx->k(), 0);
    for (std::size_t i = 0; i < q; ++i) {
        out.emplace_back(ctx, digits);
        for (unsigned d = 0; d < ctx->k(); ++d) {
            if (++digits[d] < ctx->p()) break;
            digits[d] = 0;
        }
    }
    return out;
}

}  // namespace divmean
