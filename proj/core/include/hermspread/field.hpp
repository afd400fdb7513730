/*
* Copyright 2026 The hermspread authors
*
* Licensed under the Apache License, Version 2.0 (the "License");
* you may not use this file except in compliance with the License.
* You may obtain a copy of the License at
*
*      http://www.apache.org/licenses/LICENSE-2.0
*
* Unless required by applicable law or agreed to in writing, software
* distributed under the License is distributed on an "AS IS" BASIS,
* WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
* See the License for the specific language governing permissions and
* limitations under the License.
*/

#ifndef HERMSPREAD_FIELD_HPP
#define HERMSPREAD_FIELD_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "hermspread/util.hpp"

namespace hermspread {

/// Element of GF(q^2) in discrete-log form: code -1 is the field zero,
/// code k in [0, q^2-2] is w^k for the primitive root w.
struct FieldElement {
    std::int32_t code = -1;

    bool is_zero() const { return code < 0; }
    friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

inline constexpr FieldElement kFieldZero{-1};
inline constexpr FieldElement kFieldOne{0};

/// Defining data for GF(q^2) over GF(p), q = p^e. primitive_poly has degree 2e,
/// coefficient of x^i at index i, and must be monic with a primitive root x.
struct FieldSpec {
    int p = 0;
    int e = 0;
    std::vector<int> primitive_poly;

    int q() const;

    static FieldSpec preset_q4(); // GF(16)  via x^4 + x + 1   over GF(2)
    static FieldSpec preset_q5(); // GF(25)  via x^2 + 4x + 2  over GF(5)
    static FieldSpec preset_q7(); // GF(49)  via x^2 + 6x + 3  over GF(7)

    /// Preset lookup by small-field order; throws ConfigError for q not in {4,5,7}.
    static FieldSpec preset_for_q(int q);
};

/// Immutable arithmetic tables for GF(q^2). Safe for shared concurrent reads.
class FieldTable {
public:
    static FieldTable build(const FieldSpec& spec);

    int p() const { return p_; }
    int e() const { return e_; }
    int q() const { return q_; }
    int order() const { return order_; }         // q^2
    int group_order() const { return order_ - 1; } // q^2 - 1

    FieldElement zero() const { return kFieldZero; }
    FieldElement one() const { return kFieldOne; }
    FieldElement primitive_root() const { return FieldElement{1}; }

    FieldElement add(FieldElement a, FieldElement b) const;
    FieldElement neg(FieldElement a) const;
    FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
    FieldElement mul(FieldElement a, FieldElement b) const;
    FieldElement inv(FieldElement a) const;
    FieldElement pow(FieldElement a, long long n) const;

    /// a -> a^q, the involutory automorphism fixing GF(q).
    FieldElement conj(FieldElement a) const;
    /// a -> a^(q+1), onto GF(q).
    FieldElement norm(FieldElement a) const;
    /// a -> a^(p^k).
    FieldElement frobenius(FieldElement a, int k) const;

    bool in_small_field(FieldElement a) const;
    /// GF(q) as a subset of GF(q^2): zero first, then ascending exponents.
    const std::vector<FieldElement>& small_field() const { return small_field_; }

    /// Image of the integer m under the ring map Z -> GF(p) subset GF(q^2).
    FieldElement from_residue(long long m) const;

    /// All q^2 elements: zero, w^0, w^1, ...
    std::vector<FieldElement> all_elements() const;

    /// Textual form: decimal exponent, or "*" for zero.
    std::string encode(FieldElement a) const;
    FieldElement decode(const std::string& tok) const;

    /// Coefficient vector (degree < 2e, index i = coeff of x^i) of an element.
    std::vector<int> poly_of(FieldElement a) const;

    const FieldSpec& spec() const { return spec_; }

private:
    FieldTable() = default;

    int p_ = 0, e_ = 0, q_ = 0, order_ = 0;
    FieldSpec spec_;
    std::vector<std::int32_t> zech_;      // code of 1 + w^k
    std::array<std::int32_t, 64> const_log_{}; // code of constant c for c in [0, p)
    std::vector<std::vector<int>> polys_; // polys_[k] = coeffs of w^k
    std::vector<FieldElement> small_field_;
};

} // namespace hermspread

#endif
