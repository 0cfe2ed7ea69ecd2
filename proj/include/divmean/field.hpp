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
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace divmean {

class FieldElement;
class FieldCtx;

using FieldCtxPtr = std::shared_ptr<const FieldCtx>;

/// Exact arithmetic context for F_p (k = 1) or F_{p^k} = F_p[t]/(modulus).
///
/// The modulus is stored little-endian (coefficient i multiplies t^i), is
/// monic of degree k, and is irreducible over F_p. For k = 1 the modulus is
/// the polynomial t, so elements are plain residues mod p. Contexts are
/// immutable and shared read-only; two contexts interoperate iff they agree
/// structurally on (p, k, modulus).
class FieldCtx : public std::enable_shared_from_this<FieldCtx> {
public:
    /// F_p for an odd prime p > 3.
    static FieldCtxPtr prime_field(std::uint64_t p);

    /// F_p[t]/(modulus). The modulus must be monic of degree >= 1 and
    /// irreducible over F_p; coefficients are canonicalized mod p.
    static FieldCtxPtr extension(std::uint64_t p, std::vector<std::uint64_t> modulus);

    std::uint64_t p() const { return p_; }
    unsigned k() const { return k_; }
    const std::vector<std::uint64_t>& modulus() const { return modulus_; }
    const mpz_class& order() const { return order_; }  // p^k

    bool same(const FieldCtx& other) const;

    FieldElement zero() const;
    FieldElement one() const;
    /// Embeds an integer via reduction mod p (negative values allowed).
    FieldElement from_int(std::int64_t v) const;
    /// Element from a little-endian coefficient vector (canonicalized mod p,
    /// padded/trimmed to length k; coefficients beyond k must be zero).
    FieldElement from_coeffs(std::vector<std::uint64_t> coeffs) const;
    /// Deterministic pseudo-uniform element driven by the caller's RNG.
    FieldElement sample(std::mt19937_64& rng) const;

private:
    FieldCtx(std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus);

    std::uint64_t p_;
    unsigned k_;
    std::vector<std::uint64_t> modulus_;  // length k+1, monic
    mpz_class order_;
};

/// Element of F_{p^k}: k residues in [0, p), coefficient i multiplying t^i.
/// All arithmetic is exact. Mixed-context operations throw.
class FieldElement {
public:
    FieldElement(FieldCtxPtr ctx, std::vector<std::uint64_t> coeffs);

    const FieldCtxPtr& ctx() const { return ctx_; }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }
    bool is_zero() const;

    FieldElement operator+(const FieldElement& rhs) const;
    FieldElement operator-(const FieldElement& rhs) const;
    FieldElement operator*(const FieldElement& rhs) const;
    FieldElement operator/(const FieldElement& rhs) const;  // rhs nonzero
    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& rhs) { return *this = *this + rhs; }
    FieldElement& operator-=(const FieldElement& rhs) { return *this = *this - rhs; }
    FieldElement& operator*=(const FieldElement& rhs) { return *this = *this * rhs; }

    FieldElement inv() const;  // nonzero
    FieldElement pow(std::uint64_t e) const;
    FieldElement pow(const mpz_class& e) const;  // e >= 0

    bool operator==(const FieldElement& rhs) const;
    bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }

    /// "3" for prime fields, "[3,0]" for extensions.
    std::string str() const;

private:
    FieldCtxPtr ctx_;
    std::vector<std::uint64_t> c_;  // length k, each < p
};

/// Canonical total order (lexicographic on coefficient vectors). Used for
/// deterministic, reproducible output ordering; carries no algebraic meaning.
bool canonical_less(const FieldElement& a, const FieldElement& b);

/// Euler criterion: a^((p^k-1)/2) in {0, 1}.
bool is_square(const FieldElement& a);

/// Tonelli-Shanks square root over the multiplicative group of order p^k - 1.
/// Returns either root when a is a square, nullopt otherwise. The non-residue
/// search is seeded, so the returned root is deterministic.
std::optional<FieldElement> sqrt(const FieldElement& a, std::uint64_t seed = 0x746f6e656c6c69ULL);

/// Constant-coefficient embedding F_p -> F_{p^k} (a ring homomorphism).
/// The source must be a prime-field element over the same p as the target.
FieldElement embed(const FieldElement& a, const FieldCtxPtr& target);

/// Deterministic construction of F_{p^k}: seeded random search for a monic
/// irreducible degree-k modulus (Rabin irreducibility test). For k = 1
/// returns the prime-field context. Rejects p <= 3 and composite p.
FieldCtxPtr build_extension(std::uint64_t p, unsigned k, std::uint64_t seed);

/// Every element of the field in canonical order. Refuses fields with more
/// than `bound` elements.
std::vector<FieldElement> all_elements(const FieldCtxPtr& ctx, std::uint64_t bound = 20000);

/// 64-bit primality (deterministic Miller-Rabin).
bool is_prime_u64(std::uint64_t n);

/// splitmix64-style seed derivation for independent deterministic streams.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

}  // namespace divmean
