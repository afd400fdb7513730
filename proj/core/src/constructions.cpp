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

#include "hermspread/constructions.hpp"

#include <algorithm>
#include <set>

namespace hermspread {

void validate_spread(const UnitalGeometry& g, const std::vector<std::uint16_t>& lines)
{
    const int m = g.spread_size();
    check(int(lines.size()) == m,
          "spread must have " + std::to_string(m) + " lines, got " + std::to_string(lines.size()));
    check(std::is_sorted(lines.begin(), lines.end()) &&
              std::adjacent_find(lines.begin(), lines.end()) == lines.end(),
          "spread lines must be sorted and distinct");
    for (std::uint16_t s : lines)
        check(s < g.num_secants(), "spread contains an invalid secant index");
    Bitset covered(g.num_unital_points());
    std::size_t total = 0;
    for (std::uint16_t s : lines) {
        covered |= g.block_bits(s);
        total += g.block(s).size();
    }
    check(total == covered.count() && int(covered.count()) == g.num_unital_points(),
          "spread blocks do not partition the unital");
}

Spread regular_spread(const UnitalGeometry& g, int center_pid)
{
    check(!g.on_unital(center_pid), "regular spread center must lie off the unital");
    std::vector<std::uint16_t> lines;
    for (int s : g.secants_through(center_pid))
        lines.push_back(std::uint16_t(s));
    int polar = g.secant_index(g.polar_line(center_pid));
    check(polar >= 0, "polar of an exterior point must be a secant");
    lines.push_back(std::uint16_t(polar));
    std::sort(lines.begin(), lines.end());
    validate_spread(g, lines);
    return Spread{std::move(lines)};
}

namespace {

bool orbit_is_spread(const UnitalGeometry& g, const std::vector<int>& cycle)
{
    Bitset covered(g.num_unital_points());
    std::size_t total = 0;
    for (int s : cycle) {
        covered |= g.block_bits(s);
        total += g.block(s).size();
    }
    return total == covered.count() && int(covered.count()) == g.num_unital_points();
}

std::optional<Spread> spread_orbit_of(const UnitalGeometry& g, const Perm& h)
{
    const int m = g.spread_size();
    for (const auto& cyc : perm_cycles_of_length(h, m))
        if (orbit_is_spread(g, cyc)) {
            std::vector<std::uint16_t> lines(cyc.begin(), cyc.end());
            std::sort(lines.begin(), lines.end());
            validate_spread(g, lines);
            return Spread{std::move(lines)};
        }
    return std::nullopt;
}

bool is_prime_int(int n)
{
    if (n < 2)
        return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

} // namespace

std::optional<Spread> cyclic_spread(const UnitalGeometry& g, const PermGroup& grp)
{
    const std::uint64_t m = g.spread_size();
    const std::uint64_t go = grp.order();
    check(go % m == 0, "spread size must divide the group order");

    if (is_prime_int(int(m)) && (go / m) % m != 0) {
        // All subgroups of prime order m are conjugate (Sylow), and conjugation
        // maps spread orbits to spread orbits, so one subgroup decides existence.
        std::mt19937_64 rng(0x6379636c6963ULL ^ go);
        for (int tries = 0; tries < 200000; ++tries) {
            Perm e = grp.random_element(rng);
            std::uint64_t ord = perm_order(e);
            if (ord % m != 0)
                continue;
            Perm h = e;
            for (std::uint64_t k = 1; k < ord / m; ++k)
                h = perm_mult(h, e);
            return spread_orbit_of(g, h);
        }
        throw Error("no element of order " + std::to_string(m) + " found by sampling");
    }

    // Composite m: visit every cyclic subgroup of order m by full enumeration.
    check(go <= 20'000'000, "full enumeration not feasible at this group order");
    std::optional<Spread> found;
    std::set<Perm> seen_subgroups;
    grp.for_each_element([&](const Perm& e) {
        if (found)
            return;
        std::uint64_t ord = perm_order(e);
        if (ord % m != 0)
            return;
        Perm h = e;
        for (std::uint64_t k = 1; k < ord / m; ++k)
            h = perm_mult(h, e);
        // Canonical generator of <h>: lexicographic minimum over the
        // generators h^k, gcd(k,m)=1.
        Perm canon = h;
        Perm pw = h;
        for (std::uint64_t k = 2; k < m; ++k) {
            pw = perm_mult(pw, h);
            if (std::gcd(k, m) == 1 && pw < canon)
                canon = pw;
        }
        if (!seen_subgroups.insert(canon).second)
            return;
        found = spread_orbit_of(g, h);
    });
    return found;
}

std::vector<FieldElement> ruling_parameters(const UnitalGeometry& g)
{
    const FieldTable& f = g.field();
    FieldElement minus_one = f.neg(f.one());
    std::vector<FieldElement> params;
    for (FieldElement a : f.small_field())
        if (!a.is_zero() && a != minus_one)
            params.push_back(a);
    check(int(params.size()) == f.q() - 2, "expected q-2 ruling parameters");
    return params;
}

TripleRuling triple_ruling(const UnitalGeometry& g, FieldElement a)
{
    const FieldTable& f = g.field();
    check(f.in_small_field(a), "ruling parameter must lie in GF(q)");
    check(!a.is_zero(), "ruling parameter must be nonzero");
    FieldElement one_plus_a = f.add(f.one(), a);
    check(!one_plus_a.is_zero(), "ruling parameter must differ from -1");

    const int q = f.q();
    FieldElement mova = f.neg(one_plus_a);              // -(1+a)
    FieldElement dnorm = f.neg(f.mul(a, f.inv(one_plus_a))); // -a/(1+a)

    TripleRuling r;
    auto secant_of = [&](const Coords& c) {
        int si = g.secant_index(g.line_id(c));
        check(si >= 0, "ruling line is not a secant");
        return std::uint16_t(si);
    };
    for (FieldElement u : f.all_elements()) {
        if (u.is_zero())
            continue;
        if (f.norm(u) == a)
            r.h.push_back(secant_of({u, f.zero(), f.one()}));
        if (f.norm(u) == mova)
            r.v.push_back(secant_of({u, f.one(), f.zero()}));
        if (f.norm(u) == dnorm)
            r.d.push_back(secant_of({f.zero(), u, f.one()}));
    }
    for (auto* fam : {&r.h, &r.v, &r.d}) {
        std::sort(fam->begin(), fam->end());
        check(int(fam->size()) == q + 1, "ruling family must have q+1 secants");
    }

    // T_a = {(1,y,z) : y^(q+1) = -(1+a), z^(q+1) = a}
    Bitset tbits(g.num_unital_points());
    for (FieldElement y : f.all_elements())
        for (FieldElement z : f.all_elements())
            if (f.norm(y) == mova && f.norm(z) == a) {
                int pid = g.point_id({f.one(), y, z});
                int ui = g.unital_index(pid);
                check(ui >= 0, "T_a point must lie on the unital");
                r.t_unital.push_back(ui);
                tbits.set(ui);
            }
    std::sort(r.t_unital.begin(), r.t_unital.end());
    check(int(r.t_unital.size()) == (q + 1) * (q + 1), "T_a must have (q+1)^2 points");

    // Each family's blocks partition T_a exactly.
    for (auto* fam : {&r.h, &r.v, &r.d}) {
        Bitset covered(g.num_unital_points());
        std::size_t total = 0;
        for (std::uint16_t s : *fam) {
            covered |= g.block_bits(s);
            total += g.block(s).size();
        }
        check(total == covered.count() && covered == tbits,
              "ruling family does not partition T_a");
    }
    return r;
}

Spread andre_spread(const UnitalGeometry& g, const std::vector<RulingFamily>& choice)
{
    const FieldTable& f = g.field();
    auto params = ruling_parameters(g);
    check(choice.size() == params.size(), "ruling choice must cover all q-2 parameters");

    std::vector<std::uint16_t> lines;
    auto add_line = [&](const Coords& c) {
        int si = g.secant_index(g.line_id(c));
        check(si >= 0, "triangle side is not a secant");
        lines.push_back(std::uint16_t(si));
    };
    add_line({f.one(), f.zero(), f.zero()});
    add_line({f.zero(), f.one(), f.zero()});
    add_line({f.zero(), f.zero(), f.one()});

    for (std::size_t i = 0; i < params.size(); ++i) {
        TripleRuling r = triple_ruling(g, params[i]);
        const std::vector<std::uint16_t>* fam = nullptr;
        switch (choice[i]) {
        case RulingFamily::H: fam = &r.h; break;
        case RulingFamily::V: fam = &r.v; break;
        case RulingFamily::D: fam = &r.d; break;
        }
        lines.insert(lines.end(), fam->begin(), fam->end());
    }
    std::sort(lines.begin(), lines.end());
    validate_spread(g, lines);
    return Spread{std::move(lines)};
}

std::vector<std::vector<RulingFamily>> all_ruling_choices(const UnitalGeometry& g)
{
    const int k = g.field().q() - 2;
    std::vector<std::vector<RulingFamily>> out;
    std::vector<RulingFamily> cur(k, RulingFamily::H);
    for (;;) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == RulingFamily::D) {
            cur[i] = RulingFamily::H;
            --i;
        }
        if (i < 0)
            break;
        cur[i] = cur[i] == RulingFamily::H ? RulingFamily::V : RulingFamily::D;
    }
    check(out.size() == std::size_t(std::pow(3.0, k) + 0.5), "ruling choice enumeration is off");
    return out;
}

} // namespace hermspread
