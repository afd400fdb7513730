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

#include "hermspread/classify.hpp"

#include <algorithm>
#include <map>
#include <thread>

namespace hermspread {

char kind_letter(SpreadKind k)
{
    switch (k) {
    case SpreadKind::Regular: return 'r';
    case SpreadKind::Cyclic: return 'c';
    case SpreadKind::Andre: return 'a';
    case SpreadKind::Unknown: return '-';
    }
    return '-';
}

SpreadKind kind_from_letter(char c)
{
    switch (c) {
    case 'r': return SpreadKind::Regular;
    case 'c': return SpreadKind::Cyclic;
    case 'a': return SpreadKind::Andre;
    case '-': return SpreadKind::Unknown;
    default: throw Error(std::string("unknown spread kind letter '") + c + "'");
    }
}

namespace {

std::vector<int> exterior_degrees(const UnitalGeometry& g, const Spread& s)
{
    std::vector<int> deg(g.num_points(), 0);
    for (std::uint16_t si : s.lines)
        for (int pid : g.line_points(g.secant_line(si)))
            if (!g.on_unital(pid))
                ++deg[pid];
    return deg;
}

} // namespace

std::vector<std::pair<int, int>> type_vector(const UnitalGeometry& g, const Spread& s)
{
    const int q = g.q();
    auto deg = exterior_degrees(g, s);
    std::map<int, int> hist;
    for (int pid = 0; pid < g.num_points(); ++pid)
        if (!g.on_unital(pid))
            ++hist[deg[pid]];
    std::vector<std::pair<int, int>> tv(hist.begin(), hist.end());

    long long sum_j = 0, sum_ij = 0;
    for (auto [i, j] : tv) {
        sum_j += j;
        sum_ij += (long long)i * j;
    }
    const long long exterior = (long long)q * q * q * q - (long long)q * q * q + (long long)q * q;
    const long long m = (long long)g.spread_size();
    check(sum_j == exterior, "type vector does not count every exterior point");
    check(sum_ij == m * (q * q - q), "type vector incidence count is off");
    return tv;
}

PermGroup spread_stabilizer(const UnitalGeometry&, const Spread& s, const PermGroup& grp)
{
    return grp.setwise_stabilizer(s.lines);
}

SpreadInvariants spread_invariants_with_stabilizer(const UnitalGeometry& g, const Spread& s,
                                                   const PermGroup& stab)
{
    SpreadInvariants inv;
    inv.stabilizer_order = stab.order();
    std::vector<int> domain(s.lines.begin(), s.lines.end());
    std::map<int, int> counts;
    for (const auto& orb : stab.orbits(domain))
        ++counts[int(orb.size())];
    inv.orbit_structure.assign(counts.begin(), counts.end());

    long long total = 0;
    for (auto [sz, cnt] : inv.orbit_structure)
        total += (long long)sz * cnt;
    check(total == g.spread_size(), "stabilizer orbits do not partition the spread");

    inv.type_vector = type_vector(g, s);
    return inv;
}

SpreadInvariants spread_invariants(const UnitalGeometry& g, const Spread& s, const PermGroup& grp)
{
    PermGroup stab = spread_stabilizer(g, s, grp);
    return spread_invariants_with_stabilizer(g, s, stab);
}

std::vector<SpreadClass> reduce_to_classes(const UnitalGeometry& g,
                                           const std::vector<Spread>& spreads,
                                           const PermGroup& grp, int workers)
{
    // Exact duplicates first; they carry no new information.
    std::vector<Spread> unique;
    std::vector<std::uint64_t> multiplicity;
    {
        std::map<std::vector<std::uint16_t>, std::size_t> seen;
        for (const auto& s : spreads) {
            auto [it, fresh] = seen.emplace(s.lines, unique.size());
            if (fresh) {
                unique.push_back(s);
                multiplicity.push_back(1);
            } else {
                ++multiplicity[it->second];
            }
        }
    }

    // Invariants are independent per spread; compute them on a pool.
    std::vector<SpreadInvariants> invs(unique.size());
    {
        std::atomic<std::size_t> next{0};
        auto work = [&]() {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= unique.size())
                    return;
                invs[i] = spread_invariants(g, unique[i], grp);
            }
        };
        int nthreads = std::max(1, workers);
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t)
            pool.emplace_back(work);
        for (auto& th : pool)
            th.join();
    }

    // Sequential merge in input order: identical invariants gate the
    // transporter search that decides true equivalence.
    std::vector<SpreadClass> classes;
    for (std::size_t i = 0; i < unique.size(); ++i) {
        bool placed = false;
        for (auto& cls : classes) {
            if (cls.invariants != invs[i])
                continue;
            if (grp.transporter(cls.representative.lines, unique[i].lines)) {
                cls.census_count += multiplicity[i];
                placed = true;
                break;
            }
        }
        if (!placed) {
            SpreadClass cls;
            cls.representative = unique[i];
            cls.invariants = invs[i];
            cls.census_count = multiplicity[i];
            classes.push_back(std::move(cls));
        }
    }

    std::sort(classes.begin(), classes.end(), [](const SpreadClass& a, const SpreadClass& b) {
        if (a.invariants.stabilizer_order != b.invariants.stabilizer_order)
            return a.invariants.stabilizer_order < b.invariants.stabilizer_order;
        if (a.invariants.type_vector != b.invariants.type_vector)
            return a.invariants.type_vector < b.invariants.type_vector;
        return a.representative.lines < b.representative.lines;
    });
    return classes;
}

SpreadKind classify_kind(const UnitalGeometry& g, const Spread& s, const PermGroup& grp,
                         const SpreadInvariants& inv, const std::vector<Spread>& andre_reps)
{
    const int q = g.q();
    for (auto [i, j] : inv.type_vector)
        if (i == q * q - q && j == 1)
            return SpreadKind::Regular;

    const std::uint64_t m = g.spread_size();
    if (q % 2 == 0 && inv.stabilizer_order % m == 0) {
        check(inv.stabilizer_order <= 5'000'000, "stabilizer too large to enumerate");
        PermGroup stab = spread_stabilizer(g, s, grp);
        std::vector<char> in_spread(g.num_secants(), 0);
        for (std::uint16_t t : s.lines)
            in_spread[t] = 1;
        bool cyclic = false;
        stab.for_each_element([&](const Perm& e) {
            if (cyclic || perm_order(e) != m)
                return;
            // Need the cycle through one spread line to run through all of them.
            std::uint64_t steps = 0;
            int x = s.lines[0];
            do {
                if (!in_spread[x])
                    return;
                x = e[x];
                ++steps;
            } while (x != s.lines[0]);
            if (steps == m)
                cyclic = true;
        });
        if (cyclic)
            return SpreadKind::Cyclic;
    }

    for (const auto& rep : andre_reps)
        if (grp.transporter(rep.lines, s.lines))
            return SpreadKind::Andre;

    return SpreadKind::Unknown;
}

void classify_kinds(const UnitalGeometry& g, std::vector<SpreadClass>& classes,
                    const PermGroup& grp, const std::vector<Spread>& andre_reps)
{
    const int q = g.q();
    const FieldTable& f = g.field();
    for (auto& cls : classes) {
        cls.kind = classify_kind(g, cls.representative, grp, cls.invariants, andre_reps);
        cls.regular_center = -1;
        if (cls.kind == SpreadKind::Regular) {
            // Use the spread centered at (1,0,0) as the class face: it is the
            // delta baseline, so its record prints with an empty delta.
            Spread canon = regular_spread(g, g.point_id({f.one(), f.zero(), f.zero()}));
            check(spread_invariants(g, canon, grp) == cls.invariants,
                  "regular spreads fell into distinct classes");
            cls.representative = std::move(canon);
            auto deg = exterior_degrees(g, cls.representative);
            for (int pid = 0; pid < g.num_points(); ++pid)
                if (!g.on_unital(pid) && deg[pid] == q * q - q) {
                    check(cls.regular_center < 0, "regular spread has two centers");
                    cls.regular_center = pid;
                }
        }
    }
}

std::vector<Spread> andre_class_representatives(const UnitalGeometry& g, const PermGroup& grp,
                                                int workers)
{
    std::vector<Spread> all;
    for (const auto& choice : all_ruling_choices(g))
        all.push_back(andre_spread(g, choice));
    std::vector<Spread> reps;
    for (const auto& cls : reduce_to_classes(g, all, grp, workers))
        reps.push_back(cls.representative);
    return reps;
}

} // namespace hermspread
