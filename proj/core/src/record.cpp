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

#include "hermspread/record.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "hermspread/group.hpp"

namespace hermspread {

namespace {

std::string join(const std::vector<std::string>& v, const std::string& sep)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += sep;
        s += v[i];
    }
    return s;
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    if (s.empty())
        return out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, sep))
        out.push_back(tok);
    return out;
}

std::string pairs_to_string(const std::vector<std::pair<int, int>>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += '|';
        s += "(" + std::to_string(v[i].first) + "," + std::to_string(v[i].second) + ")";
    }
    return s;
}

std::vector<std::pair<int, int>> parse_pairs(const std::string& s, int lineno)
{
    std::vector<std::pair<int, int>> out;
    for (const auto& tok : split(s, '|')) {
        int a, b;
        char l, c, r;
        std::stringstream ss(tok);
        ss >> l >> a >> c >> b >> r;
        if (!ss || l != '(' || c != ',' || r != ')' || ss.peek() != EOF)
            throw Error("line " + std::to_string(lineno) + ": bad pair '" + tok + "'");
        out.emplace_back(a, b);
    }
    return out;
}

std::string pairs_pretty(const std::vector<std::pair<int, int>>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ", ";
        s += "(" + std::to_string(v[i].first) + "," + std::to_string(v[i].second) + ")";
    }
    return s;
}

} // namespace

Spread delta_baseline(const UnitalGeometry& g)
{
    const FieldTable& f = g.field();
    return regular_spread(g, g.point_id({f.one(), f.zero(), f.zero()}));
}

std::vector<std::uint16_t> delta_lines(const UnitalGeometry& g, const Spread& s)
{
    Spread base = delta_baseline(g);
    std::vector<std::uint16_t> d;
    std::set_difference(s.lines.begin(), s.lines.end(), base.lines.begin(), base.lines.end(),
                        std::back_inserter(d));
    return d;
}

Spread reconstruct_from_delta(const UnitalGeometry& g, const std::vector<std::uint16_t>& delta)
{
    Spread base = delta_baseline(g);
    std::vector<std::uint16_t> lines;
    for (std::uint16_t b : base.lines) {
        bool meets = false;
        for (std::uint16_t d : delta)
            if (!g.blocks_disjoint(b, d)) {
                meets = true;
                break;
            }
        if (!meets)
            lines.push_back(b);
    }
    lines.insert(lines.end(), delta.begin(), delta.end());
    std::sort(lines.begin(), lines.end());
    validate_spread(g, lines);
    return Spread{std::move(lines)};
}

SpreadRecord make_record(const UnitalGeometry& g, const SpreadClass& cls)
{
    SpreadRecord r;
    r.q = g.q();
    for (std::uint16_t s : cls.representative.lines)
        r.lines.push_back(g.line_token(g.secant_line(s)));
    auto d = delta_lines(g, cls.representative);
    for (std::uint16_t s : d)
        r.delta.push_back(g.line_token(g.secant_line(s)));
    check(reconstruct_from_delta(g, d) == cls.representative, "delta does not round-trip");
    r.stabilizer_order = cls.invariants.stabilizer_order;
    r.orbit_structure = cls.invariants.orbit_structure;
    r.type_vector = cls.invariants.type_vector;
    r.kind = kind_letter(cls.kind);
    return r;
}

std::string serialize_records(const RecordFile& rf)
{
    std::string s = "hermspread-records v1\n";
    s += "p=" + std::to_string(rf.field.p) + " e=" + std::to_string(rf.field.e) + " poly=";
    for (std::size_t i = 0; i < rf.field.primitive_poly.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(rf.field.primitive_poly[i]);
    }
    s += " q=" + std::to_string(rf.q) + " count=" + std::to_string(rf.records.size()) + "\n";
    for (const auto& r : rf.records) {
        s += "q=" + std::to_string(r.q) + "\n";
        s += "lines=" + join(r.lines, "|") + "\n";
        s += "delta=" + join(r.delta, "|") + "\n";
        s += "G=" + std::to_string(r.stabilizer_order) + "\n";
        s += "orbit=" + pairs_to_string(r.orbit_structure) + "\n";
        s += "type=" + pairs_to_string(r.type_vector) + "\n";
        s += std::string("kind=") + r.kind + "\n";
    }
    return s;
}

namespace {

std::string expect_field(const std::string& line, const std::string& key, int lineno)
{
    if (line.rfind(key, 0) != 0)
        throw Error("line " + std::to_string(lineno) + ": expected '" + key + "'");
    return line.substr(key.size());
}

} // namespace

RecordFile parse_records(std::istream& in)
{
    RecordFile rf;
    std::string line;
    int lineno = 0;

    auto next_line = [&]() {
        if (!std::getline(in, line))
            throw Error("line " + std::to_string(lineno + 1) + ": unexpected end of file");
        ++lineno;
    };

    next_line();
    if (line != "hermspread-records v1")
        throw Error("line 1: not a hermspread records file");
    next_line();
    std::size_t count = 0;
    {
        std::stringstream ss(line);
        std::string ptok, etok, polytok, qtok, ctok;
        ss >> ptok >> etok >> polytok >> qtok >> ctok;
        if (!ss || ss.peek() != EOF)
            throw Error("line 2: bad header");
        rf.field.p = std::stoi(expect_field(ptok, "p=", 2));
        rf.field.e = std::stoi(expect_field(etok, "e=", 2));
        for (const auto& c : split(expect_field(polytok, "poly=", 2), ','))
            rf.field.primitive_poly.push_back(std::stoi(c));
        rf.q = std::stoi(expect_field(qtok, "q=", 2));
        count = std::stoul(expect_field(ctok, "count=", 2));
    }
    for (std::size_t i = 0; i < count; ++i) {
        SpreadRecord r;
        next_line();
        r.q = std::stoi(expect_field(line, "q=", lineno));
        next_line();
        r.lines = split(expect_field(line, "lines=", lineno), '|');
        next_line();
        r.delta = split(expect_field(line, "delta=", lineno), '|');
        next_line();
        r.stabilizer_order = std::stoull(expect_field(line, "G=", lineno));
        next_line();
        r.orbit_structure = parse_pairs(expect_field(line, "orbit=", lineno), lineno);
        next_line();
        r.type_vector = parse_pairs(expect_field(line, "type=", lineno), lineno);
        next_line();
        std::string k = expect_field(line, "kind=", lineno);
        if (k.size() != 1)
            throw Error("line " + std::to_string(lineno) + ": bad kind");
        kind_from_letter(k[0]); // validates
        r.kind = k[0];
        rf.records.push_back(std::move(r));
    }
    return rf;
}

RecordFile read_records(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open records file " + path);
    return parse_records(in);
}

void write_records(const std::string& path, const RecordFile& rf)
{
    std::ofstream out(path, std::ios::trunc);
    if (!out)
        throw ConfigError("cannot write records file " + path);
    out << serialize_records(rf);
}

std::string summary_text(const std::vector<SpreadRecord>& records)
{
    std::vector<std::array<std::string, 6>> rows;
    rows.push_back({"Idx", "Spread", "|G|", "Orbit", "Type", "K"});
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        rows.push_back({std::to_string(i + 1), join(r.delta, ", "),
                        std::to_string(r.stabilizer_order), pairs_pretty(r.orbit_structure),
                        pairs_pretty(r.type_vector), std::string(1, r.kind)});
    }
    std::array<std::size_t, 6> width{};
    for (const auto& row : rows)
        for (int c = 0; c < 6; ++c)
            width[c] = std::max(width[c], row[c].size());
    std::string out;
    for (const auto& row : rows) {
        for (int c = 0; c < 6; ++c) {
            std::string cell = row[c];
            cell.resize(width[c], ' ');
            out += cell;
            out += c == 5 ? "" : "  ";
        }
        while (!out.empty() && out.back() == ' ')
            out.pop_back();
        out += "\n";
    }
    return out;
}

std::string summary_csv(const std::vector<SpreadRecord>& records)
{
    auto quoted = [](const std::string& s) { return "\"" + s + "\""; };
    std::string out = "Idx,Spread,G,Orbit,Type,K\n";
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        out += std::to_string(i + 1) + "," + quoted(join(r.delta, " ")) + "," +
               std::to_string(r.stabilizer_order) + "," + quoted(pairs_pretty(r.orbit_structure)) +
               "," + quoted(pairs_pretty(r.type_vector)) + "," + r.kind + "\n";
    }
    return out;
}

std::string verify_records(const RecordFile& rf, bool deep)
{
    FieldTable f = FieldTable::build(rf.field);
    if (f.q() != rf.q)
        return "header q does not match the field specification";
    UnitalGeometry g = UnitalGeometry::build(std::move(f));
    PermGroup grp;
    if (deep)
        grp = build_unitary_group(g);

    for (std::size_t i = 0; i < rf.records.size(); ++i) {
        const auto& r = rf.records[i];
        std::string where = "record " + std::to_string(i + 1) + ": ";
        try {
            if (r.q != rf.q)
                return where + "q mismatch";
            std::vector<std::uint16_t> lines;
            for (const auto& tok : r.lines) {
                int si = g.secant_index(g.parse_line_token(tok));
                if (si < 0)
                    return where + "line " + tok + " is not a secant";
                lines.push_back(std::uint16_t(si));
            }
            std::sort(lines.begin(), lines.end());
            validate_spread(g, lines);
            Spread s{lines};

            std::vector<std::uint16_t> delta;
            for (const auto& tok : r.delta) {
                int si = g.secant_index(g.parse_line_token(tok));
                if (si < 0)
                    return where + "delta line " + tok + " is not a secant";
                delta.push_back(std::uint16_t(si));
            }
            std::sort(delta.begin(), delta.end());
            if (delta != delta_lines(g, s))
                return where + "stored delta does not match the line list";
            if (reconstruct_from_delta(g, delta) != s)
                return where + "delta does not reconstruct the spread";

            if (type_vector(g, s) != r.type_vector)
                return where + "type vector mismatch";
            if (deep) {
                auto inv = spread_invariants(g, s, grp);
                if (inv.stabilizer_order != r.stabilizer_order)
                    return where + "stabilizer order mismatch";
                if (inv.orbit_structure != r.orbit_structure)
                    return where + "orbit structure mismatch";
            }
        } catch (const std::exception& e) {
            return where + e.what();
        }
    }
    return "";
}

} // namespace hermspread
