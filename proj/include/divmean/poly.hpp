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

#include "divmean/field.hpp"

namespace divmean {

/// Dense univariate polynomial over a FieldCtx. Coefficients are stored
/// ascending by degree with trailing zeros stripped; the zero polynomial has
/// an empty coefficient vector and degree -1.
class Polynomial {
public:
    explicit Polynomial(FieldCtxPtr ctx) : ctx_(std::move(ctx)) {}
    Polynomial(FieldCtxPtr ctx, std::vector<FieldElement> coeffs);

    static Polynomial zero(const FieldCtxPtr& ctx) { return Polynomial(ctx); }
    static Polynomial constant(const FieldElement& c);
    /// The monomial coeff * x^deg.
    static Polynomial monomial(const FieldElement& coeff, std::size_t deg);
    static Polynomial x(const FieldCtxPtr& ctx);
    /// Convenience: coefficients given as integers, reduced into the field.
    static Polynomial from_ints(const FieldCtxPtr& ctx, const std::vector<std::int64_t>& coeffs);

    const FieldCtxPtr& ctx() const { return ctx_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    /// Coefficient of x^i (zero beyond the degree).
    FieldElement coeff(std::size_t i) const;
    const FieldElement& leading() const;
    const std::vector<FieldElement>& coeffs() const { return c_; }

    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator-() const;
    Polynomial scale(const FieldElement& s) const;

    Polynomial derivative() const;
    FieldElement eval(const FieldElement& at) const;
    Polynomial monic() const;  // nonzero
    bool is_monic() const;

    bool operator==(const Polynomial& rhs) const;
    bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

    /// Coefficient-wise embedding into an extension of the same prime field.
    Polynomial lift_to(const FieldCtxPtr& target) const;

private:
    FieldCtxPtr ctx_;
    std::vector<FieldElement> c_;
    void trim();
};

/// (q, r) with f = q*g + r and deg r < deg g. Throws on zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& f, const Polynomial& g);

/// Exact division; throws std::logic_error if the remainder is nonzero.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

/// Monic greatest common divisor. Throws if both inputs are zero.
Polynomial gcd(const Polynomial& f, const Polynomial& g);

Polynomial powmod(const Polynomial& base, std::uint64_t e, const Polynomial& modulus);
Polynomial powmod(const Polynomial& base, const mpz_class& e, const Polynomial& modulus);

/// All distinct roots of f in its coefficient field, in canonical order.
/// gcd(f, x^q - x) splits off the linear part, then seeded Cantor-Zassenhaus
/// equal-degree splitting takes it down to individual roots.
std::vector<FieldElement> distinct_roots(const Polynomial& f, std::uint64_t seed = 0x63616e747a617373ULL);

/// Largest m with (x - r)^m dividing f. Requires f(r) = 0.
int root_multiplicity(const Polynomial& f, const FieldElement& r);

/// Degrees of the distinct irreducible factors of the squarefree part,
/// sorted ascending (distinct-degree factorization).
std::vector<unsigned> factor_degrees(const Polynomial& f);

}  // namespace divmean
