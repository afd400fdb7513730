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

// Plain polynomial arithmetic over GF(p)[x]/(f), used as an independent
// oracle for the table-driven field. No discrete logarithms anywhere.

#ifndef HERMSPREAD_TESTS_REF_FIELD_HPP
#define HERMSPREAD_TESTS_REF_FIELD_HPP

#include <vector>

namespace reffield {

struct RefField {
    int p;
    std::vector<int> mod; // monic, coefficient of x^i at index i
    int deg() const { return int(mod.size()) - 1; }

    using Poly = std::vector<int>; // length deg()

    Poly zero() const { return Poly(deg(), 0); }
    Poly one() const
    {
        Poly r(deg(), 0);
        r[0] = 1;
        return r;
    }

    Poly add(const Poly& a, const Poly& b) const
    {
        Poly r(deg());
        for (int i = 0; i < deg(); ++i)
            r[i] = (a[i] + b[i]) % p;
        return r;
    }

    Poly neg(const Poly& a) const
    {
        Poly r(deg());
        for (int i = 0; i < deg(); ++i)
            r[i] = (p - a[i]) % p;
        return r;
    }

    Poly mul(const Poly& a, const Poly& b) const
    {
        std::vector<int> full(2 * deg() - 1, 0);
        for (int i = 0; i < deg(); ++i)
            for (int j = 0; j < deg(); ++j)
                full[i + j] = (full[i + j] + a[i] * b[j]) % p;
        for (int k = int(full.size()) - 1; k >= deg(); --k) {
            int c = full[k];
            if (c == 0)
                continue;
            full[k] = 0;
            for (int i = 0; i < deg(); ++i)
                full[k - deg() + i] = ((full[k - deg() + i] - c * mod[i]) % p + p * p) % p;
        }
        full.resize(deg());
        return full;
    }

    Poly pw(Poly a, long long n) const
    {
        Poly r = one();
        while (n > 0) {
            if (n & 1)
                r = mul(r, a);
            a = mul(a, a);
            n >>= 1;
        }
        return r;
    }

    std::vector<Poly> elements() const
    {
        std::vector<Poly> out;
        int total = 1;
        for (int i = 0; i < deg(); ++i)
            total *= p;
        for (int v = 0; v < total; ++v) {
            Poly e(deg());
            int x = v;
            for (int i = 0; i < deg(); ++i) {
                e[i] = x % p;
                x /= p;
            }
            out.push_back(e);
        }
        return out;
    }
};

} // namespace reffield

#endif
