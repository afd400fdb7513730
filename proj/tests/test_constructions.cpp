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

#include <doctest.h>

#include <hermspread/classify.hpp>
#include <hermspread/constructions.hpp>

using namespace hermspread;

namespace {

const UnitalGeometry& geom(int q)
{
    static UnitalGeometry g4 = UnitalGeometry::build(FieldTable::build(FieldSpec::preset_q4()));
    static UnitalGeometry g5 = UnitalGeometry::build(FieldTable::build(FieldSpec::preset_q5()));
    return q == 4 ? g4 : g5;
}

const PermGroup& group(int q)
{
    static PermGroup g4 = build_unitary_group(geom(4));
    static PermGroup g5 = build_unitary_group(geom(5));
    return q == 4 ? g4 : g5;
}

int pid_100(const UnitalGeometry& g)
{
    const FieldTable& f = g.field();
    return g.point_id({f.one(), f.zero(), f.zero()});
}

} // namespace

TEST_CASE("regular spread")
{
    for (int q : {4, 5}) {
        const auto& g = geom(q);
        Spread s = regular_spread(g, pid_100(g));
        CHECK(int(s.lines.size()) == q * q - q + 1);
        // contains the polar line [1,0,0]
        const FieldTable& f = g.field();
        int s100 = g.secant_index(g.line_id({f.one(), f.zero(), f.zero()}));
        CHECK(std::binary_search(s.lines.begin(), s.lines.end(), std::uint16_t(s100)));
        auto tv = type_vector(g, s);
        bool center = false;
        for (auto [i, j] : tv)
            center |= (i == q * q - q && j == 1);
        CHECK(center);
    }
    // center on the unital is rejected
    const auto& g = geom(4);
    CHECK_THROWS_AS(regular_spread(g, g.unital_point(0)), Error);
}

TEST_CASE("regular spreads with different centers are equivalent")
{
    const auto& g = geom(4);
    const auto& grp = group(4);
    Spread base = regular_spread(g, pid_100(g));
    int tested = 0;
    for (int pid = 0; pid < g.num_points() && tested < 4; ++pid) {
        if (g.on_unital(pid) || pid == pid_100(g))
            continue;
        Spread other = regular_spread(g, pid);
        CHECK(grp.transporter(base.lines, other.lines).has_value());
        ++tested;
    }
}

TEST_CASE("cyclic spread exists iff q is even")
{
    const auto& g4 = geom(4);
    auto cyc = cyclic_spread(g4, group(4));
    REQUIRE(cyc.has_value());
    validate_spread(g4, cyc->lines);
    CHECK(cyclic_spread(geom(5), group(5)) == std::nullopt);
}

TEST_CASE("triple ruling families")
{
    const auto& g = geom(4);
    const FieldTable& f = g.field();
    auto params = ruling_parameters(g);
    REQUIRE(int(params.size()) == 2); // q-2
    for (FieldElement a : params) {
        TripleRuling r = triple_ruling(g, a);
        CHECK(r.h.size() == 5);
        CHECK(r.v.size() == 5);
        CHECK(r.d.size() == 5);
        CHECK(int(r.t_unital.size()) == 25);
        // blocks of one family are pairwise disjoint
        for (std::size_t i = 0; i < r.h.size(); ++i)
            for (std::size_t j = i + 1; j < r.h.size(); ++j)
                CHECK(g.blocks_disjoint(r.h[i], r.h[j]));
    }
    CHECK_THROWS_AS(triple_ruling(g, f.zero()), Error);
    CHECK_THROWS_AS(triple_ruling(g, f.one()), Error);          // -1 = 1 in char 2
    CHECK_THROWS_AS(triple_ruling(g, f.primitive_root()), Error); // w not in GF(4)
}

TEST_CASE("D family line coefficients at q=5, a=3")
{
    const auto& g = geom(5);
    const FieldTable& f = g.field();
    FieldElement a = f.from_residue(3);
    TripleRuling r = triple_ruling(g, a);
    // -a/(1+a) = -3/4 = 3 in GF(5)
    FieldElement target = f.from_residue(3);
    for (std::uint16_t s : r.d) {
        const Coords& c = g.line(g.secant_line(s));
        // canonical form of [0,w,1] is [0,1,1/w]; recover w as y/z... the
        // first coordinate is zero either way
        CHECK(c[0].is_zero());
        FieldElement w = f.mul(c[1], f.inv(c[2]));
        CHECK(f.norm(w) == target);
    }
}

TEST_CASE("the T_a sets and the triangle sides partition the unital")
{
    for (int q : {4, 5}) {
        const auto& g = geom(q);
        const FieldTable& f = g.field();
        Bitset covered(g.num_unital_points());
        std::size_t total = 0;
        for (const Coords& side :
             {Coords{f.one(), f.zero(), f.zero()}, Coords{f.zero(), f.one(), f.zero()},
              Coords{f.zero(), f.zero(), f.one()}}) {
            int s = g.secant_index(g.line_id(side));
            REQUIRE(s >= 0);
            covered |= g.block_bits(s);
            total += q + 1;
        }
        for (FieldElement a : ruling_parameters(g)) {
            TripleRuling r = triple_ruling(g, a);
            for (int ui : r.t_unital) {
                CHECK_FALSE(covered.test(ui));
                covered.set(ui);
            }
            total += r.t_unital.size();
        }
        CHECK(total == covered.count());
        CHECK(int(covered.count()) == g.num_unital_points());
    }
}

TEST_CASE("andre spreads: all choices are valid, classes match the tables")
{
    const auto& g = geom(4);
    const auto& grp = group(4);
    auto choices = all_ruling_choices(g);
    REQUIRE(choices.size() == 9);
    std::vector<Spread> all;
    for (const auto& ch : choices)
        all.push_back(andre_spread(g, ch)); // construction validates internally
    auto classes = reduce_to_classes(g, all, grp, 1);
    // constant choices collapse to regular spreads, the mixed ones to the
    // single ruled class of order 100
    REQUIRE(classes.size() == 2);
    CHECK(classes[0].invariants.stabilizer_order == 100);
    CHECK(classes[0].census_count == 6);
    CHECK(classes[1].invariants.stabilizer_order == 1200);
    CHECK(classes[1].census_count == 3);
}

TEST_CASE("andre spread of the published q=5 example has stabilizer order 432")
{
    const auto& g = geom(5);
    const FieldTable& f = g.field();
    auto params = ruling_parameters(g);
    // parameters are 1, 2, 3 in GF(5); pick V for 3, H for 1, D for 2
    std::vector<RulingFamily> choice(params.size(), RulingFamily::H);
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (params[i] == f.from_residue(3))
            choice[i] = RulingFamily::V;
        else if (params[i] == f.from_residue(1))
            choice[i] = RulingFamily::H;
        else if (params[i] == f.from_residue(2))
            choice[i] = RulingFamily::D;
    }
    Spread s = andre_spread(g, choice);
    CHECK(spread_invariants(g, s, group(5)).stabilizer_order == 432);
}

TEST_CASE("ruling choice domain errors")
{
    const auto& g = geom(4);
    CHECK_THROWS_AS(andre_spread(g, {RulingFamily::H}), Error); // wrong arity
    CHECK(all_ruling_choices(geom(5)).size() == 27);
}
