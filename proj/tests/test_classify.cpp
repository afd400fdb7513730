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

#include <random>

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

Spread regular(int q)
{
    const auto& g = geom(q);
    const FieldTable& f = g.field();
    return regular_spread(g, g.point_id({f.one(), f.zero(), f.zero()}));
}

using Pairs = std::vector<std::pair<int, int>>;

} // namespace

TEST_CASE("type vectors of the published spreads")
{
    CHECK(type_vector(geom(4), regular(4)) == Pairs{{0, 75}, {1, 120}, {2, 12}, {12, 1}});
    auto cyc = cyclic_spread(geom(4), group(4));
    REQUIRE(cyc.has_value());
    CHECK(type_vector(geom(4), *cyc) == Pairs{{0, 130}, {2, 78}});
    CHECK(type_vector(geom(5), regular(5)) == Pairs{{0, 144}, {1, 360}, {2, 20}, {20, 1}});
}

TEST_CASE("stabilizer invariants of the published spreads")
{
    auto inv = spread_invariants(geom(5), regular(5), group(5));
    CHECK(inv.stabilizer_order == 1440);
    CHECK(inv.orbit_structure == Pairs{{1, 1}, {20, 1}});

    // the mixed ruled spread at q=4
    const auto& g = geom(4);
    auto choices = all_ruling_choices(g);
    // first mixed choice in lexicographic H<V<D order is (H,V)
    auto inv2 = spread_invariants(g, andre_spread(g, choices[1]), group(4));
    CHECK(inv2.stabilizer_order == 100);
    CHECK(inv2.orbit_structure == Pairs{{1, 1}, {2, 1}, {10, 1}});
    CHECK(inv2.type_vector == Pairs{{0, 100}, {1, 70}, {2, 36}, {7, 2}});
}

TEST_CASE("invariants are isomorphism invariants")
{
    const auto& g = geom(4);
    const auto& grp = group(4);
    auto base = spread_invariants(g, regular(4), grp);
    std::mt19937_64 rng(123);
    for (int t = 0; t < 5; ++t) {
        Perm e = grp.random_element(rng);
        Spread img{apply_perm(e, regular(4).lines)};
        CHECK(spread_invariants(g, img, grp) == base);
    }
}

TEST_CASE("class reduction separates equal-invariant classes by transporter")
{
    // the 27 ruled spreads at q=5 contain three distinct classes sharing
    // stabilizer order 72 and identical type vectors
    const auto& g = geom(5);
    const auto& grp = group(5);
    std::vector<Spread> all;
    for (const auto& ch : all_ruling_choices(g))
        all.push_back(andre_spread(g, ch));
    auto classes = reduce_to_classes(g, all, grp, 1);
    REQUIRE(classes.size() == 7);
    int order72 = 0;
    for (std::size_t i = 0; i + 1 < classes.size(); ++i)
        CHECK(classes[i].invariants.stabilizer_order <=
              classes[i + 1].invariants.stabilizer_order);
    for (const auto& c : classes)
        order72 += c.invariants.stabilizer_order == 72;
    CHECK(order72 == 3);
    // the three really are distinct
    std::vector<const SpreadClass*> eq72;
    for (const auto& c : classes)
        if (c.invariants.stabilizer_order == 72)
            eq72.push_back(&c);
    for (std::size_t i = 0; i < eq72.size(); ++i)
        for (std::size_t j = i + 1; j < eq72.size(); ++j) {
            CHECK(eq72[i]->invariants == eq72[j]->invariants);
            CHECK_FALSE(grp.transporter(eq72[i]->representative.lines,
                                        eq72[j]->representative.lines)
                            .has_value());
        }
}

TEST_CASE("kind classification and precedence")
{
    const auto& g = geom(4);
    const auto& grp = group(4);
    auto choices = all_ruling_choices(g);
    std::vector<Spread> andre_reps; // mixed class representative
    andre_reps.push_back(andre_spread(g, choices[1]));

    auto reg = regular(4);
    auto reg_inv = spread_invariants(g, reg, grp);
    CHECK(classify_kind(g, reg, grp, reg_inv, andre_reps) == SpreadKind::Regular);

    auto cyc = cyclic_spread(g, grp);
    REQUIRE(cyc.has_value());
    auto cyc_inv = spread_invariants(g, *cyc, grp);
    CHECK(classify_kind(g, *cyc, grp, cyc_inv, andre_reps) == SpreadKind::Cyclic);

    auto mixed = andre_spread(g, choices[1]);
    auto mixed_inv = spread_invariants(g, mixed, grp);
    CHECK(classify_kind(g, mixed, grp, mixed_inv, andre_reps) == SpreadKind::Andre);

    // all-H degenerates to a regular spread: Regular wins over Andre
    auto allh = andre_spread(g, choices[0]);
    auto allh_inv = spread_invariants(g, allh, grp);
    CHECK(classify_kind(g, allh, grp, allh_inv, {allh}) == SpreadKind::Regular);

    // without a matching construction the mixed spread is Unknown
    CHECK(classify_kind(g, mixed, grp, mixed_inv, {}) == SpreadKind::Unknown);

    CHECK(kind_letter(SpreadKind::Regular) == 'r');
    CHECK(kind_from_letter('c') == SpreadKind::Cyclic);
    CHECK_THROWS_AS(kind_from_letter('x'), Error);
}

TEST_CASE("regular center recovery")
{
    const auto& g = geom(4);
    const auto& grp = group(4);
    std::vector<SpreadClass> classes = reduce_to_classes(g, {regular(4)}, grp, 1);
    classify_kinds(g, classes, grp, {});
    REQUIRE(classes.size() == 1);
    CHECK(classes[0].kind == SpreadKind::Regular);
    const FieldTable& f = g.field();
    CHECK(classes[0].regular_center == g.point_id({f.one(), f.zero(), f.zero()}));
}

TEST_CASE("andre class representatives")
{
    const auto& g = geom(4);
    auto reps = andre_class_representatives(g, group(4), 1);
    CHECK(reps.size() == 2); // the ruled class plus the degenerate regular class
}
