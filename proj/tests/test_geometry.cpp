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

#include <hermspread/geometry.hpp>

using namespace hermspread;

namespace {

const UnitalGeometry& geom(int q)
{
    static UnitalGeometry g4 = UnitalGeometry::build(FieldTable::build(FieldSpec::preset_q4()));
    static UnitalGeometry g5 = UnitalGeometry::build(FieldTable::build(FieldSpec::preset_q5()));
    return q == 4 ? g4 : g5;
}

} // namespace

TEST_CASE("object counts")
{
    const auto& g4 = geom(4);
    CHECK(g4.num_points() == 273);
    CHECK(g4.num_unital_points() == 65);
    CHECK(g4.num_secants() == 208);
    CHECK(int(g4.tangents().size()) == 65);

    const auto& g5 = geom(5);
    CHECK(g5.num_unital_points() == 126);
    CHECK(g5.num_secants() == 525);
    CHECK(g5.spread_size() == 21);
}

TEST_CASE("(1,0,0) lies off the unital")
{
    const auto& g = geom(4);
    const FieldTable& f = g.field();
    CHECK_FALSE(g.on_unital(g.point_id({f.one(), f.zero(), f.zero()})));
}

TEST_CASE("the line [1,0,0] is a secant with the expected block")
{
    for (int q : {4, 5}) {
        const auto& g = geom(q);
        const FieldTable& f = g.field();
        int lid = g.line_id({f.one(), f.zero(), f.zero()});
        auto cls = g.classify_line(lid);
        CHECK(cls.is_secant);
        CHECK(int(cls.unital_pids.size()) == q + 1);
        for (int pid : cls.unital_pids) {
            const Coords& c = g.point(pid);
            CHECK(c[0].is_zero());
            CHECK(f.add(f.norm(c[1]), f.norm(c[2])).is_zero());
        }
    }
}

TEST_CASE("every line is a tangent or a secant, one tangent per unital point")
{
    const auto& g = geom(4);
    int tangents = 0;
    for (int l = 0; l < g.num_lines(); ++l)
        tangents += !g.classify_line(l).is_secant;
    CHECK(tangents == 65);
}

TEST_CASE("polarity basics")
{
    const auto& g = geom(4);
    const FieldTable& f = g.field();
    int p100 = g.point_id({f.one(), f.zero(), f.zero()});
    CHECK(g.polar_line(p100) == g.line_id({f.one(), f.zero(), f.zero()}));

    // involution on every point, and pole/polar agree
    for (int pid = 0; pid < g.num_points(); ++pid)
        CHECK(g.pole_point(g.polar_line(pid)) == pid);

    // P=(1,w,0): polar is [1,w^4,0] and P is not on it
    FieldElement w = f.primitive_root();
    int p = g.point_id({f.one(), w, f.zero()});
    int expect = g.line_id({f.one(), f.pow(w, 4), f.zero()});
    CHECK(g.polar_line(p) == expect);
    CHECK_FALSE(g.incident(p, g.polar_line(p)));
}

TEST_CASE("polarity preserves incidence contravariantly")
{
    const auto& g = geom(4);
    for (int pid = 0; pid < g.num_points(); ++pid)
        for (int lid : {0, 1, 17, 100, 272})
            CHECK(g.incident(pid, lid) == g.incident(g.pole_point(lid), g.polar_line(pid)));
}

TEST_CASE("secant counts through points")
{
    const auto& g4 = geom(4);
    const FieldTable& f4 = g4.field();
    int exterior = g4.point_id({f4.one(), f4.zero(), f4.zero()});
    CHECK(int(g4.secants_through(exterior).size()) == 12);
    int on_unital = g4.unital_point(0);
    CHECK(int(g4.secants_through(on_unital).size()) == 16);

    const auto& g5 = geom(5);
    const FieldTable& f5 = g5.field();
    CHECK(int(g5.secants_through(g5.point_id({f5.one(), f5.zero(), f5.zero()})).size()) == 20);
}

TEST_CASE("tangent count through every exterior point is q+1")
{
    for (int q : {4, 5}) {
        const auto& g = geom(q);
        for (int pid = 0; pid < g.num_points(); ++pid) {
            if (g.on_unital(pid))
                continue;
            int secants = int(g.secants_through(pid).size());
            CHECK(q * q + 1 - secants == q + 1);
        }
    }
}

TEST_CASE("blockwise disjointness table")
{
    const auto& g = geom(4);
    const FieldTable& f = g.field();
    int s100 = g.secant_index(g.line_id({f.one(), f.zero(), f.zero()}));
    int s010 = g.secant_index(g.line_id({f.zero(), f.one(), f.zero()}));
    REQUIRE(s100 >= 0);
    REQUIRE(s010 >= 0);
    CHECK_FALSE(g.blocks_disjoint(s100, s100));
    CHECK(g.blocks_disjoint(s100, s010));
    for (int i = 0; i < g.num_secants(); i += 7)
        for (int j = 0; j < g.num_secants(); j += 11)
            CHECK(g.blocks_disjoint(i, j) == g.blocks_disjoint(j, i));
}

TEST_CASE("design property: two unital points lie on exactly one secant")
{
    for (int q : {4, 5}) {
        const auto& g = geom(q);
        int nu = g.num_unital_points();
        for (int a = 0; a < nu; ++a)
            for (int b = a + 1; b < nu; ++b) {
                int together = 0;
                for (int s : g.secants_through_unital(a))
                    together += g.block_bits(s).test(b);
                CHECK(together == 1);
            }
    }
}

TEST_CASE("coordinate tokens")
{
    const auto& g = geom(4);
    const FieldTable& f = g.field();
    int lid = g.line_id({f.one(), f.zero(), f.zero()});
    CHECK(g.line_token(lid) == "(0,*,*)");
    CHECK(g.parse_line_token("(0,*,*)") == lid);
    // tokens normalize: (1,2,3) and its scalar multiples name the same line
    CHECK(g.parse_line_token("(1,2,3)") == g.parse_line_token("(3,4,5)"));
    CHECK_THROWS_AS(g.parse_line_token("(*,*,*)"), Error);
    CHECK_THROWS_AS(g.parse_line_token("0,*,*"), Error);
    CHECK_THROWS_AS(g.parse_line_token("(0,*)"), Error);
    for (int lid2 : {0, 5, 100})
        CHECK(g.parse_line_token(g.line_token(lid2)) == lid2);
}
