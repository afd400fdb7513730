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

#include <hermspread/pipeline.hpp>
#include <hermspread/record.hpp>

#include <sstream>

using namespace hermspread;

namespace {

const UnitalGeometry& geom4()
{
    static UnitalGeometry g = UnitalGeometry::build(FieldTable::build(FieldSpec::preset_q4()));
    return g;
}

const PermGroup& group4()
{
    static PermGroup grp = build_unitary_group(geom4());
    return grp;
}

RecordFile census4()
{
    static RecordFile rf = [] {
        RunConfig cfg;
        cfg.field = FieldSpec::preset_q4();
        return run_census(cfg).records;
    }();
    return rf;
}

} // namespace

TEST_CASE("the baseline regular spread has an empty delta")
{
    const auto& g = geom4();
    Spread base = delta_baseline(g);
    CHECK(delta_lines(g, base).empty());
    CHECK(reconstruct_from_delta(g, {}) == base);
}

TEST_CASE("delta lines avoid the baseline center")
{
    const auto& g = geom4();
    const auto& grp = group4();
    auto cyc = cyclic_spread(g, grp);
    REQUIRE(cyc.has_value());
    auto d = delta_lines(g, *cyc);
    CHECK_FALSE(d.empty());
    CHECK(reconstruct_from_delta(g, d) == *cyc);
    // no delta line passes through (1,0,0), so every token starts with "(0,"
    for (std::uint16_t s : d) {
        std::string tok = g.line_token(g.secant_line(s));
        CHECK(tok.substr(0, 3) == "(0,");
    }
}

TEST_CASE("record files round-trip")
{
    RecordFile rf = census4();
    REQUIRE(rf.records.size() == 3);
    std::string text = serialize_records(rf);
    std::istringstream in(text);
    RecordFile back = parse_records(in);
    CHECK(back.q == rf.q);
    CHECK(back.field.primitive_poly == rf.field.primitive_poly);
    REQUIRE(back.records.size() == rf.records.size());
    for (std::size_t i = 0; i < rf.records.size(); ++i) {
        CHECK(back.records[i].lines == rf.records[i].lines);
        CHECK(back.records[i].delta == rf.records[i].delta);
        CHECK(back.records[i].stabilizer_order == rf.records[i].stabilizer_order);
        CHECK(back.records[i].orbit_structure == rf.records[i].orbit_structure);
        CHECK(back.records[i].type_vector == rf.records[i].type_vector);
        CHECK(back.records[i].kind == rf.records[i].kind);
    }
    CHECK(serialize_records(back) == text);
}

TEST_CASE("verification accepts search output and rejects corruption")
{
    RecordFile rf = census4();
    CHECK(verify_records(rf, true) == "");

    // deleting a line breaks the partition
    RecordFile broken = rf;
    broken.records[0].lines.pop_back();
    CHECK_FALSE(verify_records(broken, false).empty());

    // substituting a tangent is rejected as a non-secant
    RecordFile tangent = rf;
    const auto& g = geom4();
    tangent.records[0].lines[2] = g.line_token(g.tangents()[0]);
    std::string msg = verify_records(tangent, false);
    CHECK(msg.find("not a secant") != std::string::npos);

    // wrong stabilizer order is caught by the deep check
    RecordFile wrong = rf;
    wrong.records[0].stabilizer_order += 1;
    CHECK(verify_records(wrong, false).empty()); // shallow pass
    CHECK_FALSE(verify_records(wrong, true).empty());

    // tampered delta
    RecordFile baddelta = rf;
    for (auto& r : baddelta.records)
        if (!r.delta.empty()) {
            r.delta.pop_back();
            break;
        }
    CHECK_FALSE(verify_records(baddelta, false).empty());
}

TEST_CASE("parse errors carry line numbers")
{
    std::string text = serialize_records(census4());
    // corrupt the 5th line (the G= field of the first record)
    std::vector<std::string> lines;
    std::stringstream ss(text);
    std::string l;
    while (std::getline(ss, l))
        lines.push_back(l);
    lines[5] = "garbage";
    std::string corrupted;
    for (const auto& s : lines)
        corrupted += s + "\n";
    std::istringstream in(corrupted);
    try {
        parse_records(in);
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("line 6") != std::string::npos);
    }
}

TEST_CASE("summary tables")
{
    RecordFile rf = census4();
    std::string text = summary_text(rf.records);
    CHECK(text.find("Idx") != std::string::npos);
    CHECK(text.find("|G|") != std::string::npos);
    CHECK(text.find("1200") != std::string::npos);
    CHECK(text.find(" r") != std::string::npos);

    std::string csv = summary_csv(rf.records);
    CHECK(csv.find("Idx,Spread,G,Orbit,Type,K") == 0);
    // one header plus three data rows
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
}
