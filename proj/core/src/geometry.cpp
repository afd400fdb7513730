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

#include "hermspread/geometry.hpp"

#include <algorithm>

namespace hermspread {

namespace {

// Key of a canonical triple in the dense lookup table. Element codes are
// shifted by one so zero maps to 0.
int coord_key(const Coords& c, int order)
{
    int b = order; // codes+1 range over [0, order-1+1)
    return ((c[0].code + 1) * b + (c[1].code + 1)) * b + (c[2].code + 1);
}

} // namespace

Coords UnitalGeometry::canonical(const Coords& c) const
{
    for (int i = 0; i < 3; ++i) {
        if (!c[i].is_zero()) {
            if (c[i] == field_.one())
                return c;
            FieldElement s = field_.inv(c[i]);
            Coords r;
            for (int j = 0; j < 3; ++j)
                r[j] = field_.mul(c[j], s);
            return r;
        }
    }
    throw Error("cannot canonicalize the zero triple");
}

UnitalGeometry UnitalGeometry::build(FieldTable field)
{
    UnitalGeometry g(std::move(field));
    const FieldTable& f = g.field_;
    const int q = f.q();
    const int order = f.order();

    // Canonical triples in lexicographic order: (0,0,1), (0,1,t), (1,s,t).
    auto elems = f.all_elements(); // zero, w^0, w^1, ... : already in lex order
    std::vector<Coords> triples;
    triples.reserve(order * order + order + 1);
    triples.push_back({f.zero(), f.zero(), f.one()});
    for (FieldElement t : elems)
        triples.push_back({f.zero(), f.one(), t});
    for (FieldElement s : elems)
        for (FieldElement t : elems)
            triples.push_back({f.one(), s, t});

    g.point_coords_ = triples;
    g.line_coords_ = triples;
    const int np = int(triples.size());
    check(np == order * order + order + 1, "projective point count mismatch");

    g.id_by_key_.assign(order * order * order + order * order + order + 1, -1);
    for (int i = 0; i < np; ++i)
        g.id_by_key_[coord_key(triples[i], order)] = i;

    // Incidence: u*x + v*y + t*z == 0.
    auto incidence = [&f](const Coords& line, const Coords& pt) {
        FieldElement s = f.add(f.add(f.mul(line[0], pt[0]), f.mul(line[1], pt[1])),
                               f.mul(line[2], pt[2]));
        return s.is_zero();
    };

    g.line_points_.assign(np, {});
    for (int l = 0; l < np; ++l) {
        auto& pts = g.line_points_[l];
        pts.reserve(order + 1);
        for (int pt = 0; pt < np; ++pt)
            if (incidence(triples[l], triples[pt]))
                pts.push_back(pt);
        check(int(pts.size()) == order + 1, "line has wrong point count");
    }

    // Unital point set.
    g.unital_index_.assign(np, -1);
    for (int pt = 0; pt < np; ++pt) {
        const Coords& c = triples[pt];
        FieldElement s = f.add(f.add(f.norm(c[0]), f.norm(c[1])), f.norm(c[2]));
        if (s.is_zero()) {
            g.unital_index_[pt] = int(g.unital_points_.size());
            g.unital_points_.push_back(pt);
        }
    }
    const int nu = q * q * q + 1;
    check(int(g.unital_points_.size()) == nu, "unital point count mismatch");

    // Secants meet the unital in q+1 points, tangents in exactly one.
    g.secant_index_.assign(np, -1);
    for (int l = 0; l < np; ++l) {
        int hits = 0;
        for (int pt : g.line_points_[l])
            hits += g.unital_index_[pt] >= 0;
        if (hits == q + 1) {
            g.secant_index_[l] = int(g.secants_.size());
            g.secants_.push_back(l);
        } else if (hits == 1) {
            g.tangents_.push_back(l);
        } else {
            throw Error("line meets unital in " + std::to_string(hits) + " points");
        }
    }
    const int ns = q * q * q * q - q * q * q + q * q;
    check(int(g.secants_.size()) == ns, "secant count mismatch");
    check(int(g.tangents_.size()) == nu, "tangent count mismatch");

    // Blocks and the per-point secant lists.
    g.blocks_.assign(ns, {});
    g.block_bits_.assign(ns, Bitset(nu));
    g.point_secants_.assign(np, {});
    for (int s = 0; s < ns; ++s) {
        int l = g.secants_[s];
        for (int pt : g.line_points_[l]) {
            g.point_secants_[pt].push_back(s);
            int ui = g.unital_index_[pt];
            if (ui >= 0) {
                g.blocks_[s].push_back(ui);
                g.block_bits_[s].set(ui);
            }
        }
    }
    for (int pt = 0; pt < np; ++pt) {
        int deg = int(g.point_secants_[pt].size());
        if (g.unital_index_[pt] >= 0)
            check(deg == q * q, "unital point off q^2 secants");
        else
            check(deg == q * q - q, "exterior point off q^2-q secants");
    }

    // Pairwise block disjointness.
    g.disjoint_.assign(ns, Bitset(ns));
    for (int i = 0; i < ns; ++i)
        for (int j = i + 1; j < ns; ++j)
            if (!g.block_bits_[i].intersects(g.block_bits_[j])) {
                g.disjoint_[i].set(j);
                g.disjoint_[j].set(i);
            }

    // Polarity: (x,y,z) <-> [x^q, y^q, z^q].
    g.polar_line_.assign(np, -1);
    g.pole_point_.assign(np, -1);
    for (int i = 0; i < np; ++i) {
        const Coords& c = triples[i];
        Coords img{f.conj(c[0]), f.conj(c[1]), f.conj(c[2])};
        int j = g.id_by_key_[coord_key(g.canonical(img), order)];
        g.polar_line_[i] = j;
        g.pole_point_[i] = j; // same coordinate map in both directions
    }
    for (int pt = 0; pt < np; ++pt) {
        check(g.pole_point_[g.polar_line_[pt]] == pt, "polarity is not an involution");
        bool absolute = incidence(triples[g.polar_line_[pt]], triples[pt]);
        check(absolute == (g.unital_index_[pt] >= 0), "absolute points are not the unital");
    }

    g.secant_100_ = g.secant_index_[g.line_id({f.one(), f.zero(), f.zero()})];
    check(g.secant_100_ >= 0, "[1,0,0] must be a secant");

    return g;
}

int UnitalGeometry::point_id(const Coords& c) const
{
    int id = id_by_key_[coord_key(canonical(c), field_.order())];
    check(id >= 0, "point lookup failed");
    return id;
}

int UnitalGeometry::line_id(const Coords& c) const
{
    return point_id(c);
}

bool UnitalGeometry::incident(int pid, int lid) const
{
    const Coords& p = point_coords_[pid];
    const Coords& l = line_coords_[lid];
    FieldElement s = field_.add(
        field_.add(field_.mul(l[0], p[0]), field_.mul(l[1], p[1])), field_.mul(l[2], p[2]));
    return s.is_zero();
}

UnitalGeometry::LineClass UnitalGeometry::classify_line(int lid) const
{
    LineClass r;
    for (int pt : line_points_[lid])
        if (unital_index_[pt] >= 0)
            r.unital_pids.push_back(pt);
    r.is_secant = int(r.unital_pids.size()) == q() + 1;
    if (!r.is_secant)
        check(r.unital_pids.size() == 1, "line meets unital in unexpected point count");
    return r;
}

std::string UnitalGeometry::point_token(int pid) const
{
    const Coords& c = point_coords_[pid];
    return "(" + field_.encode(c[0]) + "," + field_.encode(c[1]) + "," + field_.encode(c[2]) + ")";
}

std::string UnitalGeometry::line_token(int lid) const
{
    return point_token(lid);
}

Coords UnitalGeometry::parse_token(const std::string& tok) const
{
    std::string s = tok;
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw Error("bad coordinate token '" + tok + "'");
    s = s.substr(1, s.size() - 2);
    std::array<std::string, 3> parts;
    std::size_t start = 0;
    for (int i = 0; i < 3; ++i) {
        std::size_t comma = s.find(',', start);
        if (i < 2 && comma == std::string::npos)
            throw Error("bad coordinate token '" + tok + "'");
        parts[i] = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        start = comma + 1;
    }
    Coords c;
    for (int i = 0; i < 3; ++i)
        c[i] = field_.decode(parts[i]);
    if (c[0].is_zero() && c[1].is_zero() && c[2].is_zero())
        throw Error("zero triple '" + tok + "'");
    return c;
}

int UnitalGeometry::parse_line_token(const std::string& tok) const
{
    return line_id(parse_token(tok));
}

int UnitalGeometry::parse_point_token(const std::string& tok) const
{
    return point_id(parse_token(tok));
}

} // namespace hermspread
