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

#include "hermspread/field.hpp"

#include <algorithm>
#include <map>

namespace hermspread {

namespace {

bool is_prime(int n)
{
    if (n < 2)
        return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

int int_pow(int b, int e)
{
    int r = 1;
    while (e-- > 0)
        r *= b;
    return r;
}

// Dense key for a coefficient vector over GF(p).
long long poly_key(const std::vector<int>& c, int p)
{
    long long k = 0;
    for (std::size_t i = c.size(); i-- > 0;)
        k = k * p + c[i];
    return k;
}

} // namespace

int FieldSpec::q() const
{
    return int_pow(p, e);
}

FieldSpec FieldSpec::preset_q4()
{
    return FieldSpec{2, 2, {1, 1, 0, 0, 1}};
}

FieldSpec FieldSpec::preset_q5()
{
    return FieldSpec{5, 1, {2, 4, 1}};
}

FieldSpec FieldSpec::preset_q7()
{
    return FieldSpec{7, 1, {3, 6, 1}};
}

FieldSpec FieldSpec::preset_for_q(int q)
{
    switch (q) {
    case 4: return preset_q4();
    case 5: return preset_q5();
    case 7: return preset_q7();
    default:
        throw ConfigError("no field preset for q=" + std::to_string(q) +
                          " (presets exist for q in {4,5,7})");
    }
}

FieldTable FieldTable::build(const FieldSpec& spec)
{
    if (!is_prime(spec.p))
        throw ConfigError("field characteristic " + std::to_string(spec.p) + " is not prime");
    if (spec.e < 1)
        throw ConfigError("extension degree must be positive");

    const int p = spec.p;
    const int deg = 2 * spec.e;
    if (int(spec.primitive_poly.size()) != deg + 1)
        throw ConfigError("primitive polynomial must have degree " + std::to_string(deg));
    for (int c : spec.primitive_poly)
        if (c < 0 || c >= p)
            throw ConfigError("coefficient " + std::to_string(c) + " invalid over GF(" +
                              std::to_string(p) + ")");
    if (spec.primitive_poly[deg] != 1)
        throw ConfigError("primitive polynomial must be monic");

    FieldTable f;
    f.p_ = p;
    f.e_ = spec.e;
    f.q_ = int_pow(p, spec.e);
    f.order_ = f.q_ * f.q_;
    f.spec_ = spec;
    const int n = f.order_ - 1;

    // Powers of x modulo the defining polynomial. x must have multiplicative
    // order exactly q^2-1, which simultaneously certifies irreducibility.
    std::vector<int> cur(deg, 0);
    cur[0] = 1; // x^0
    std::map<long long, int> log_of_key;
    f.polys_.assign(n, {});
    for (int k = 0; k < n; ++k) {
        auto [it, fresh] = log_of_key.emplace(poly_key(cur, p), k);
        if (!fresh)
            throw ConfigError("polynomial is not primitive: x^" + std::to_string(k) +
                              " repeats x^" + std::to_string(it->second));
        f.polys_[k] = cur;
        // cur *= x, reduced by the monic modulus
        int carry = cur[deg - 1];
        for (int i = deg - 1; i > 0; --i)
            cur[i] = cur[i - 1];
        cur[0] = 0;
        if (carry != 0) {
            for (int i = 0; i < deg; ++i) {
                int v = cur[i] - carry * spec.primitive_poly[i];
                v %= p;
                if (v < 0)
                    v += p;
                cur[i] = v;
            }
        }
    }
    // After n steps cur must be back at 1: order(x) == q^2 - 1.
    std::vector<int> one_poly(deg, 0);
    one_poly[0] = 1;
    if (cur != one_poly)
        throw ConfigError("polynomial is not primitive: x has order > " + std::to_string(n));

    // Logs of the prime-field constants.
    f.const_log_.fill(-1);
    for (int c = 1; c < p; ++c) {
        std::vector<int> cp(deg, 0);
        cp[0] = c;
        auto it = log_of_key.find(poly_key(cp, p));
        check(it != log_of_key.end(), "constant not reached by primitive root");
        f.const_log_[c] = it->second;
    }

    // Zech table: zech_[k] = log(1 + w^k), or -1 when the sum vanishes.
    f.zech_.assign(n, -1);
    for (int k = 0; k < n; ++k) {
        std::vector<int> s = f.polys_[k];
        s[0] = (s[0] + 1) % p;
        bool all_zero = std::all_of(s.begin(), s.end(), [](int c) { return c == 0; });
        if (all_zero)
            continue;
        auto it = log_of_key.find(poly_key(s, p));
        check(it != log_of_key.end(), "zech lookup failed");
        f.zech_[k] = it->second;
    }

    // GF(q) = {0} u {w^(k(q+1))}; must coincide with the fixed set of conj.
    f.small_field_.push_back(kFieldZero);
    for (int k = 0; k < n; k += f.q_ + 1)
        f.small_field_.push_back(FieldElement{k});
    check(int(f.small_field_.size()) == f.q_, "small field has wrong size");
    for (FieldElement a : f.all_elements())
        check(f.in_small_field(a) == (f.conj(a) == a), "conj fixed set mismatch");

    return f;
}

FieldElement FieldTable::add(FieldElement a, FieldElement b) const
{
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    const int n = order_ - 1;
    // w^a + w^b = w^a (1 + w^(b-a))
    int d = b.code - a.code;
    if (d < 0)
        d += n;
    int z = zech_[d];
    if (z < 0)
        return kFieldZero;
    int r = a.code + z;
    if (r >= n)
        r -= n;
    return FieldElement{r};
}

FieldElement FieldTable::neg(FieldElement a) const
{
    if (a.is_zero() || p_ == 2)
        return a;
    const int n = order_ - 1;
    int r = a.code + const_log_[p_ - 1];
    if (r >= n)
        r -= n;
    return FieldElement{r};
}

FieldElement FieldTable::mul(FieldElement a, FieldElement b) const
{
    if (a.is_zero() || b.is_zero())
        return kFieldZero;
    const int n = order_ - 1;
    int r = a.code + b.code;
    if (r >= n)
        r -= n;
    return FieldElement{r};
}

FieldElement FieldTable::inv(FieldElement a) const
{
    check(!a.is_zero(), "inverse of zero");
    const int n = order_ - 1;
    return FieldElement{a.code == 0 ? 0 : n - a.code};
}

FieldElement FieldTable::pow(FieldElement a, long long m) const
{
    const int n = order_ - 1;
    if (a.is_zero()) {
        check(m > 0, "0^m defined only for positive m");
        return kFieldZero;
    }
    long long r = (static_cast<long long>(a.code) * (m % n)) % n;
    if (r < 0)
        r += n;
    return FieldElement{std::int32_t(r)};
}

FieldElement FieldTable::conj(FieldElement a) const
{
    return pow(a, q_);
}

FieldElement FieldTable::norm(FieldElement a) const
{
    return pow(a, q_ + 1);
}

FieldElement FieldTable::frobenius(FieldElement a, int k) const
{
    if (a.is_zero())
        return a;
    long long m = 1;
    for (int i = 0; i < k; ++i)
        m = (m * p_) % (order_ - 1);
    return pow(a, m);
}

bool FieldTable::in_small_field(FieldElement a) const
{
    return a.is_zero() || a.code % (q_ + 1) == 0;
}

FieldElement FieldTable::from_residue(long long m) const
{
    int r = int(((m % p_) + p_) % p_);
    return r == 0 ? kFieldZero : FieldElement{const_log_[r]};
}

std::vector<FieldElement> FieldTable::all_elements() const
{
    std::vector<FieldElement> v;
    v.reserve(order_);
    v.push_back(kFieldZero);
    for (int k = 0; k < order_ - 1; ++k)
        v.push_back(FieldElement{k});
    return v;
}

std::string FieldTable::encode(FieldElement a) const
{
    return a.is_zero() ? "*" : std::to_string(a.code);
}

FieldElement FieldTable::decode(const std::string& tok) const
{
    if (tok == "*")
        return kFieldZero;
    std::size_t used = 0;
    int k;
    try {
        k = std::stoi(tok, &used);
    } catch (const std::exception&) {
        throw Error("bad field element token '" + tok + "'");
    }
    if (used != tok.size() || k < 0 || k >= order_ - 1)
        throw Error("bad field element token '" + tok + "'");
    return FieldElement{k};
}

std::vector<int> FieldTable::poly_of(FieldElement a) const
{
    if (a.is_zero())
        return std::vector<int>(2 * e_, 0);
    return polys_[a.code];
}

} // namespace hermspread
