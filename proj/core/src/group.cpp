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

#include "hermspread/group.hpp"

#include <algorithm>
#include <numeric>

namespace hermspread {

// ---------------------------------------------------------------------------
// permutation helpers

Perm perm_identity(int n)
{
    Perm p(n);
    for (int i = 0; i < n; ++i)
        p[i] = std::uint16_t(i);
    return p;
}

bool perm_is_identity(const Perm& p)
{
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != i)
            return false;
    return true;
}

Perm perm_mult(const Perm& a, const Perm& b)
{
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[b[i]];
    return r;
}

Perm perm_inverse(const Perm& p)
{
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        r[p[i]] = std::uint16_t(i);
    return r;
}

std::uint64_t perm_order(const Perm& p)
{
    std::vector<char> seen(p.size(), 0);
    std::uint64_t ord = 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i])
            continue;
        std::uint64_t len = 0;
        for (std::size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = 1;
            ++len;
        }
        ord = std::lcm(ord, len);
    }
    return ord;
}

std::vector<std::vector<int>> perm_cycles_of_length(const Perm& p, int len)
{
    std::vector<std::vector<int>> out;
    std::vector<char> seen(p.size(), 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i])
            continue;
        std::vector<int> cyc;
        for (std::size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = 1;
            cyc.push_back(int(j));
        }
        if (int(cyc.size()) == len)
            out.push_back(std::move(cyc));
    }
    return out;
}

std::vector<std::uint16_t> apply_perm(const Perm& g, const std::vector<std::uint16_t>& set)
{
    std::vector<std::uint16_t> r(set.size());
    for (std::size_t i = 0; i < set.size(); ++i)
        r[i] = g[set[i]];
    std::sort(r.begin(), r.end());
    return r;
}

namespace {

int smallest_moved(const Perm& p)
{
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != i)
            return int(i);
    return -1;
}

} // namespace

// ---------------------------------------------------------------------------
// induced permutations of semilinear maps

Perm point_perm(const UnitalGeometry& g, const SemilinearMap& m)
{
    const FieldTable& f = g.field();
    const int n = g.num_points();
    Perm p(n);
    std::vector<char> hit(n, 0);
    for (int pid = 0; pid < n; ++pid) {
        Coords c = g.point(pid);
        if (m.frob)
            for (int i = 0; i < 3; ++i)
                c[i] = f.frobenius(c[i], m.frob);
        Coords v;
        for (int i = 0; i < 3; ++i) {
            v[i] = f.zero();
            for (int j = 0; j < 3; ++j)
                v[i] = f.add(v[i], f.mul(m.mat[i][j], c[j]));
        }
        int img = g.point_id(v);
        check(!hit[img], "semilinear map is not injective on points");
        hit[img] = 1;
        p[pid] = std::uint16_t(img);
    }
    for (int pid : g.unital_points())
        check(g.on_unital(p[pid]), "map does not preserve the unital");
    return p;
}

namespace {

Coords cross(const FieldTable& f, const Coords& a, const Coords& b)
{
    return {f.sub(f.mul(a[1], b[2]), f.mul(a[2], b[1])),
            f.sub(f.mul(a[2], b[0]), f.mul(a[0], b[2])),
            f.sub(f.mul(a[0], b[1]), f.mul(a[1], b[0]))};
}

} // namespace

Perm secant_perm(const UnitalGeometry& g, const SemilinearMap& m)
{
    const FieldTable& f = g.field();
    Perm pp = point_perm(g, m);
    const int ns = g.num_secants();
    Perm p(ns);
    std::vector<char> hit(ns, 0);
    for (int s = 0; s < ns; ++s) {
        const auto& pts = g.line_points(g.secant_line(s));
        const Coords& a = g.point(pp[pts[0]]);
        const Coords& b = g.point(pp[pts[1]]);
        int limg = g.line_id(cross(f, a, b));
        int si = g.secant_index(limg);
        check(si >= 0, "secant image is not a secant");
        check(!hit[si], "induced secant map is not injective");
        hit[si] = 1;
        p[s] = std::uint16_t(si);
    }
    return p;
}

std::uint64_t unital_group_order(int q, int e)
{
    std::uint64_t q3 = std::uint64_t(q) * q * q;
    return 2ULL * e * q3 * (q3 + 1) * (std::uint64_t(q) * q - 1);
}

// ---------------------------------------------------------------------------
// stabilizer chain

StabilizerChain::StabilizerChain(int degree, std::vector<int> prescribed_base) : n_(degree)
{
    for (int b : prescribed_base)
        append_level(b);
}

void StabilizerChain::append_level(int base_pt)
{
    Level lv;
    lv.base = base_pt;
    lv.orbit = {base_pt};
    lv.pos.assign(n_, 0);
    lv.pos[base_pt] = 1;
    lv.u = {perm_identity(n_)};
    lv.uinv = {perm_identity(n_)};
    levels_.push_back(std::move(lv));
}

void StabilizerChain::rebuild_orbit(std::size_t lvl)
{
    Level& L = levels_[lvl];
    L.orbit.assign(1, L.base);
    L.pos.assign(n_, 0);
    L.pos[L.base] = 1;
    L.u.assign(1, perm_identity(n_));
    L.uinv.assign(1, perm_identity(n_));
    for (std::size_t qi = 0; qi < L.orbit.size(); ++qi) {
        int x = L.orbit[qi];
        for (const Perm& s : L.gens) {
            int y = s[x];
            if (!L.pos[y]) {
                L.pos[y] = std::int32_t(L.orbit.size()) + 1;
                L.orbit.push_back(y);
                L.u.push_back(perm_mult(s, L.u[qi]));
                L.uinv.push_back(perm_inverse(L.u.back()));
            }
        }
    }
}

// Add one generator to a level and grow its orbit in place; existing
// transversal entries stay valid.
void StabilizerChain::attach(std::size_t lvl, const Perm& g)
{
    Level& L = levels_[lvl];
    L.gens.push_back(g);
    std::size_t old_size = L.orbit.size();
    // Pass the new generator over the old orbit, then continue the BFS with
    // the full generator list from any freshly reached point.
    for (std::size_t qi = 0; qi < L.orbit.size(); ++qi) {
        int x = L.orbit[qi];
        if (qi < old_size) {
            int y = g[x];
            if (!L.pos[y]) {
                L.pos[y] = std::int32_t(L.orbit.size()) + 1;
                L.orbit.push_back(y);
                L.u.push_back(perm_mult(g, L.u[qi]));
                L.uinv.push_back(perm_inverse(L.u.back()));
            }
        } else {
            for (const Perm& s : L.gens) {
                int y = s[x];
                if (!L.pos[y]) {
                    L.pos[y] = std::int32_t(L.orbit.size()) + 1;
                    L.orbit.push_back(y);
                    L.u.push_back(perm_mult(s, L.u[qi]));
                    L.uinv.push_back(perm_inverse(L.u.back()));
                }
            }
        }
    }
}

const Perm& StabilizerChain::transversal(std::size_t lvl, int pt) const
{
    const Level& L = levels_[lvl];
    return L.u[L.pos[pt] - 1];
}

const Perm& StabilizerChain::transversal_inv(std::size_t lvl, int pt) const
{
    const Level& L = levels_[lvl];
    return L.uinv[L.pos[pt] - 1];
}

std::uint64_t StabilizerChain::order() const
{
    return suborder_from(0);
}

std::uint64_t StabilizerChain::suborder_from(std::size_t lvl) const
{
    std::uint64_t o = 1;
    for (std::size_t i = lvl; i < levels_.size(); ++i)
        o *= levels_[i].orbit.size();
    return o;
}

void StabilizerChain::add_generator(const Perm& g)
{
    check(int(g.size()) == n_, "generator degree mismatch");
    if (perm_is_identity(g))
        return;
    if (levels_.empty())
        append_level(smallest_moved(g));
    attach(0, g);
}

std::pair<Perm, std::size_t> StabilizerChain::sift_from(std::size_t lvl, Perm g) const
{
    for (std::size_t i = lvl; i < levels_.size(); ++i) {
        const Level& L = levels_[i];
        int x = g[L.base];
        if (!L.pos[x])
            return {std::move(g), i};
        g = perm_mult(L.uinv[L.pos[x] - 1], g);
    }
    return {std::move(g), levels_.size()};
}

std::pair<Perm, std::size_t> StabilizerChain::sift(const Perm& g) const
{
    return sift_from(0, g);
}

bool StabilizerChain::contains(const Perm& g) const
{
    auto [res, lvl] = sift_from(0, g);
    return lvl == levels_.size() && perm_is_identity(res);
}

bool StabilizerChain::add_element(const Perm& g)
{
    auto [res, lvl] = sift_from(0, g);
    if (perm_is_identity(res))
        return false;
    if (lvl == levels_.size())
        append_level(smallest_moved(res));
    // Keep the strong generator lists nested: the residue fixes every base
    // point above its stuck level, so it belongs to all of them.
    for (std::size_t l = 0; l <= lvl; ++l)
        attach(l, res);
    return true;
}

void StabilizerChain::close()
{
    if (levels_.empty())
        return;
    std::ptrdiff_t i = std::ptrdiff_t(levels_.size()) - 1;
    while (i >= 0) {
        bool modified = false;
        // Verify Schreier's condition at level i; restart deeper on any change.
        for (std::size_t oi = 0; !modified && oi < levels_[i].orbit.size(); ++oi) {
            for (std::size_t gi = 0; !modified && gi < levels_[i].gens.size(); ++gi) {
                const Level& L = levels_[i];
                const Perm& s = L.gens[gi];
                int pt = L.orbit[oi];
                Perm h = perm_mult(L.uinv[L.pos[s[pt]] - 1], perm_mult(s, L.u[oi]));
                if (perm_is_identity(h))
                    continue;
                auto [res, k] = sift_from(std::size_t(i) + 1, std::move(h));
                if (perm_is_identity(res))
                    continue;
                if (k == levels_.size())
                    append_level(smallest_moved(res));
                for (std::size_t l = std::size_t(i) + 1; l <= k; ++l)
                    attach(l, res);
                i = std::ptrdiff_t(k);
                modified = true;
            }
        }
        if (!modified)
            --i;
    }
}

Perm StabilizerChain::random_element(std::mt19937_64& rng) const
{
    Perm g = perm_identity(n_);
    for (const Level& L : levels_) {
        std::size_t pick = rng() % L.orbit.size();
        if (pick)
            g = perm_mult(g, L.u[pick]);
    }
    return g;
}

void StabilizerChain::for_each_element(const std::function<void(const Perm&)>& fn) const
{
    Perm id = perm_identity(n_);
    if (levels_.empty()) {
        fn(id);
        return;
    }
    auto rec = [&](auto&& self, std::size_t lvl, const Perm& cur) -> void {
        if (lvl == levels_.size()) {
            fn(cur);
            return;
        }
        const Level& L = levels_[lvl];
        for (std::size_t i = 0; i < L.orbit.size(); ++i)
            self(self, lvl + 1, i == 0 ? cur : perm_mult(cur, L.u[i]));
    };
    rec(rec, 0, id);
}

// ---------------------------------------------------------------------------
// permutation group

PermGroup PermGroup::generate(int degree, std::vector<Perm> gens)
{
    PermGroup g;
    g.degree_ = degree;
    g.chain_ = StabilizerChain(degree, {});
    for (auto& p : gens) {
        check(int(p.size()) == degree, "generator degree mismatch");
        if (!perm_is_identity(p))
            g.gens_.push_back(std::move(p));
    }
    if (!g.gens_.empty()) {
        for (const Perm& p : g.gens_)
            g.chain_.add_generator(p);
        g.chain_.close();
    }
    return g;
}

std::vector<int> PermGroup::orbit_of(int x) const
{
    std::vector<int> orbit{x};
    std::vector<char> seen(degree_, 0);
    seen[x] = 1;
    for (std::size_t i = 0; i < orbit.size(); ++i)
        for (const Perm& g : gens_) {
            int y = g[orbit[i]];
            if (!seen[y]) {
                seen[y] = 1;
                orbit.push_back(y);
            }
        }
    std::sort(orbit.begin(), orbit.end());
    return orbit;
}

std::vector<std::vector<int>> PermGroup::orbits(const std::vector<int>& domain) const
{
    std::vector<char> in_domain(degree_, 0);
    for (int x : domain)
        in_domain[x] = 1;
    std::vector<char> seen(degree_, 0);
    std::vector<std::vector<int>> out;
    std::vector<int> sorted_domain = domain;
    std::sort(sorted_domain.begin(), sorted_domain.end());
    for (int x : sorted_domain) {
        if (seen[x])
            continue;
        std::vector<int> orbit{x};
        seen[x] = 1;
        for (std::size_t i = 0; i < orbit.size(); ++i)
            for (const Perm& g : gens_) {
                int y = g[orbit[i]];
                check(in_domain[y], "orbit domain is not invariant under the group");
                if (!seen[y]) {
                    seen[y] = 1;
                    orbit.push_back(y);
                }
            }
        std::sort(orbit.begin(), orbit.end());
        out.push_back(std::move(orbit));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a.front() < b.front();
    });
    return out;
}

StabilizerChain PermGroup::rebased(const std::vector<std::uint16_t>& prefix,
                                   std::uint64_t seed) const
{
    std::vector<int> base(prefix.begin(), prefix.end());
    StabilizerChain c(degree_, base);
    for (const Perm& g : gens_)
        c.add_generator(g);
    const std::uint64_t target = order();
    if (c.order() == target)
        return c;
    std::mt19937_64 rng(seed);
    int stall = 0;
    std::uint64_t cur = c.order();
    while (cur < target && stall < 128) {
        if (c.add_element(chain_.random_element(rng))) {
            cur = c.order();
            stall = 0;
        } else {
            ++stall;
        }
    }
    if (cur != target) {
        c.close();
        check(c.order() == target, "rebased chain has wrong order");
    }
    return c;
}

namespace {

// Depth-first search over a chain whose base prefix is the source set:
// enumerates the cosets mapping the prefix into the target set.
struct SetDfs {
    const StabilizerChain& chain;
    std::size_t m;
    const std::vector<std::uint16_t>& targets; // sorted target set
    bool find_one;

    std::vector<char> used;
    std::vector<Perm> pstack, pinvstack;
    std::optional<Perm> witness;
    std::vector<Perm> leaf_reps;
    std::uint64_t leaves = 0;

    SetDfs(const StabilizerChain& c, std::size_t m_, const std::vector<std::uint16_t>& t,
           bool find_one_)
        : chain(c), m(m_), targets(t), find_one(find_one_)
    {
        used.assign(c.degree(), 0);
        pstack.assign(m + 1, {});
        pinvstack.assign(m + 1, {});
        pstack[0] = perm_identity(c.degree());
        pinvstack[0] = pstack[0];
    }

    bool run(std::size_t lvl)
    {
        if (lvl == m) {
            ++leaves;
            if (find_one) {
                witness = pstack[lvl];
                return true;
            }
            leaf_reps.push_back(pstack[lvl]);
            return false;
        }
        for (std::uint16_t b : targets) {
            if (used[b])
                continue;
            int c = pinvstack[lvl][b];
            if (!chain.in_orbit(lvl, c))
                continue;
            used[b] = 1;
            pstack[lvl + 1] = perm_mult(pstack[lvl], chain.transversal(lvl, c));
            pinvstack[lvl + 1] = perm_mult(chain.transversal_inv(lvl, c), pinvstack[lvl]);
            bool stop = run(lvl + 1);
            used[b] = 0;
            if (stop)
                return true;
        }
        return false;
    }
};

std::vector<std::uint16_t> sorted_unique(const std::vector<std::uint16_t>& v)
{
    std::vector<std::uint16_t> s = v;
    std::sort(s.begin(), s.end());
    check(std::adjacent_find(s.begin(), s.end()) == s.end(), "set contains duplicates");
    return s;
}

} // namespace

PermGroup PermGroup::setwise_stabilizer(const std::vector<std::uint16_t>& set) const
{
    auto s = sorted_unique(set);
    std::uint64_t seed = fnv1a64_span(s, 0x73657473746162ULL);
    StabilizerChain c = rebased(s, seed);
    SetDfs dfs(c, s.size(), s, false);
    dfs.run(0);
    std::uint64_t expected = dfs.leaves * c.suborder_from(s.size());

    // Leaf representatives plus the pointwise stabilizer generate the full
    // setwise stabilizer. Level generator lists are not nested, so the
    // pointwise stabilizer needs the generators of every level >= |set|.
    std::vector<Perm> gens = std::move(dfs.leaf_reps);
    for (std::size_t lvl = s.size(); lvl < c.num_levels(); ++lvl)
        for (const Perm& g : c.level_gens(lvl))
            gens.push_back(g);

    PermGroup res;
    res.degree_ = degree_;
    res.chain_ = StabilizerChain(degree_, {});
    for (Perm& g : gens) {
        if (perm_is_identity(g))
            continue;
        if (!res.chain_.contains(g)) {
            res.gens_.push_back(g);
            if (res.chain_.num_levels() == 0)
                res.chain_.add_generator(g);
            else
                res.chain_.add_element(g);
        }
    }
    res.chain_.close();
    check(res.chain_.order() == expected, "setwise stabilizer order mismatch");
    return res;
}

std::optional<Perm> PermGroup::transporter(const std::vector<std::uint16_t>& a,
                                           const std::vector<std::uint16_t>& b) const
{
    check(a.size() == b.size(), "transporter requires sets of equal size");
    auto sa = sorted_unique(a);
    auto sb = sorted_unique(b);
    if (sa == sb)
        return perm_identity(degree_);
    std::uint64_t seed = fnv1a64_span(sb, fnv1a64_span(sa, 0x7472616e73ULL));
    StabilizerChain c = rebased(sa, seed);
    SetDfs dfs(c, sa.size(), sb, true);
    dfs.run(0);
    return dfs.witness;
}

// ---------------------------------------------------------------------------
// the automorphism group of the unital

namespace {

FieldElement hermitian_inner(const FieldTable& f, const Coords& u, const Coords& v)
{
    FieldElement s = f.zero();
    for (int i = 0; i < 3; ++i)
        s = f.add(s, f.mul(u[i], f.conj(v[i])));
    return s;
}

Coords random_vector(const FieldTable& f, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> dist(0, f.order() - 1);
    for (;;) {
        Coords v{FieldElement{dist(rng) - 1}, FieldElement{dist(rng) - 1},
                 FieldElement{dist(rng) - 1}};
        if (!v[0].is_zero() || !v[1].is_zero() || !v[2].is_zero())
            return v;
    }
}

// Scale v so <v,v> becomes 1; requires <v,v> != 0.
void normalize(const FieldTable& f, Coords& v)
{
    FieldElement n = hermitian_inner(f, v, v);
    // n lies in GF(q)*, so its exponent is divisible by q+1.
    FieldElement c = f.inv(FieldElement{n.code / (f.q() + 1)});
    for (int i = 0; i < 3; ++i)
        v[i] = f.mul(v[i], c);
}

SemilinearMap random_unitary(const FieldTable& f, std::mt19937_64& rng)
{
    for (int attempt = 0; attempt < 10000; ++attempt) {
        Coords v1 = random_vector(f, rng);
        if (hermitian_inner(f, v1, v1).is_zero())
            continue;
        normalize(f, v1);

        Coords v2 = random_vector(f, rng);
        FieldElement c1 = hermitian_inner(f, v2, v1);
        for (int i = 0; i < 3; ++i)
            v2[i] = f.sub(v2[i], f.mul(c1, v1[i]));
        if ((v2[0].is_zero() && v2[1].is_zero() && v2[2].is_zero()) ||
            hermitian_inner(f, v2, v2).is_zero())
            continue;
        normalize(f, v2);

        Coords v3 = random_vector(f, rng);
        FieldElement d1 = hermitian_inner(f, v3, v1);
        FieldElement d2 = hermitian_inner(f, v3, v2);
        for (int i = 0; i < 3; ++i)
            v3[i] = f.sub(f.sub(v3[i], f.mul(d1, v1[i])), f.mul(d2, v2[i]));
        if ((v3[0].is_zero() && v3[1].is_zero() && v3[2].is_zero()) ||
            hermitian_inner(f, v3, v3).is_zero())
            continue;
        normalize(f, v3);

        SemilinearMap m;
        for (int i = 0; i < 3; ++i) {
            m.mat[i][0] = v1[i];
            m.mat[i][1] = v2[i];
            m.mat[i][2] = v3[i];
        }
        // Columns are orthonormal for the Hermitian form by construction.
        Coords cols[3] = {v1, v2, v3};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                FieldElement ip = hermitian_inner(f, cols[i], cols[j]);
                check(i == j ? ip == f.one() : ip.is_zero(), "frame is not unitary");
            }
        return m;
    }
    throw Error("failed to sample a unitary frame");
}

} // namespace

PermGroup build_unitary_group(const UnitalGeometry& g)
{
    const FieldTable& f = g.field();
    const int q = f.q();
    const std::uint64_t target = unital_group_order(q, f.e());
    const FieldElement z = f.zero(), o = f.one();
    // w^(q-1) has norm 1.
    const FieldElement d{q - 1};

    std::vector<SemilinearMap> maps;
    maps.push_back({{{{z, o, z}, {z, z, o}, {o, z, z}}}, 0}); // coordinate rotation
    maps.push_back({{{{z, o, z}, {o, z, z}, {z, z, o}}}, 0}); // swap first two
    maps.push_back({{{{d, z, z}, {z, o, z}, {z, z, o}}}, 0}); // norm-1 diagonal
    maps.push_back({{{{o, z, z}, {z, d, z}, {z, z, o}}}, 0});
    maps.push_back({{{{o, z, z}, {z, o, z}, {z, z, o}}}, 1}); // Frobenius x -> x^p

    std::mt19937_64 rng(0x4845524d53505244ULL ^ std::uint64_t(q));
    maps.push_back(random_unitary(f, rng));

    std::vector<Perm> gens;
    gens.reserve(maps.size());
    for (const auto& m : maps)
        gens.push_back(secant_perm(g, m));

    PermGroup grp = PermGroup::generate(g.num_secants(), gens);
    int extra = 0;
    while (grp.order() != target) {
        check(grp.order() < target, "generated group order exceeds the expected value");
        check(++extra <= 16, "generators fail to reach the full group order");
        gens.push_back(secant_perm(g, random_unitary(f, rng)));
        grp = PermGroup::generate(g.num_secants(), gens);
    }
    check(grp.transitive(), "group is not transitive on secants");
    return grp;
}

} // namespace hermspread
