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

#include <CLI11.hpp>

#include <iostream>

#include "hermspread/pipeline.hpp"

using namespace hermspread;

namespace {

struct FieldOptions {
    std::string preset;
    int p = 0, e = 0;
    std::string poly;

    FieldSpec resolve() const
    {
        if (!preset.empty()) {
            if (preset == "q4")
                return FieldSpec::preset_q4();
            if (preset == "q5")
                return FieldSpec::preset_q5();
            if (preset == "q7")
                return FieldSpec::preset_q7();
            throw ConfigError("unknown preset '" + preset + "' (expected q4, q5 or q7)");
        }
        if (p == 0 || e == 0 || poly.empty())
            throw ConfigError("either --preset or all of --p/--e/--poly are required");
        FieldSpec spec;
        spec.p = p;
        spec.e = e;
        std::stringstream ss(poly);
        std::string tok;
        while (std::getline(ss, tok, ','))
            spec.primitive_poly.push_back(std::stoi(tok));
        return spec;
    }
};

void add_field_options(CLI::App* cmd, FieldOptions& fo)
{
    cmd->add_option("--preset", fo.preset, "Field preset: q4, q5 or q7");
    cmd->add_option("--p", fo.p, "Prime characteristic (custom field)");
    cmd->add_option("--e", fo.e, "Degree of GF(q) over GF(p) (custom field)");
    cmd->add_option("--poly", fo.poly,
                    "Comma-separated coefficients c0,c1,...,c2e of the degree-2e primitive "
                    "polynomial over GF(p)");
}

std::vector<RulingFamily> parse_ruling(const UnitalGeometry& g, const std::string& spec)
{
    const FieldTable& f = g.field();
    auto params = ruling_parameters(g);
    std::vector<int> chosen(params.size(), -1);
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            throw ConfigError("empty ruling item");
        RulingFamily fam;
        switch (item[0]) {
        case 'H': case 'h': fam = RulingFamily::H; break;
        case 'V': case 'v': fam = RulingFamily::V; break;
        case 'D': case 'd': fam = RulingFamily::D; break;
        default: throw ConfigError("ruling item '" + item + "' must start with H, V or D");
        }
        std::string tok = item.substr(1);
        FieldElement a;
        if (!tok.empty() && (tok[0] == 'e' || tok[0] == 'E'))
            a = f.decode(tok.substr(1));
        else
            a = f.from_residue(std::stoll(tok));
        auto it = std::find(params.begin(), params.end(), a);
        if (it == params.end())
            throw ConfigError("ruling parameter '" + tok + "' is not in GF(q) \\ {0,-1}");
        std::size_t idx = it - params.begin();
        if (chosen[idx] >= 0)
            throw ConfigError("ruling parameter '" + tok + "' given twice");
        chosen[idx] = int(fam);
    }
    std::vector<RulingFamily> choice;
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (chosen[i] < 0)
            throw ConfigError("ruling choice misses parameter " + f.encode(params[i]) +
                              " (give one of H/V/D for each of the q-2 parameters)");
        choice.push_back(RulingFamily(chosen[i]));
    }
    return choice;
}

int cmd_search(const FieldOptions& fo, RunConfig cfg)
{
    cfg.field = fo.resolve();
    CensusResult res = run_census(cfg);
    std::cout << "q=" << res.records.q << ": " << res.starters << " starters, "
              << res.raw_spreads << " raw spreads, " << res.classes.size()
              << " isomorphism classes\n\n";
    std::cout << summary_text(res.records.records);
    return 0;
}

int cmd_construct(const FieldOptions& fo, const std::string& kind, const std::string& center,
                  const std::string& ruling, const std::string& out_path)
{
    FieldTable f = FieldTable::build(fo.resolve());
    UnitalGeometry g = UnitalGeometry::build(std::move(f));

    Spread s;
    std::vector<Spread> andre_reps;
    if (kind == "regular") {
        int pid = g.parse_point_token(center);
        s = regular_spread(g, pid);
    } else if (kind == "cyclic") {
        PermGroup grp = build_unitary_group(g);
        auto cyc = cyclic_spread(g, grp);
        if (!cyc) {
            std::cout << "cyclic spread: nonexistent for odd q (q=" << g.q() << ")\n";
            return 0;
        }
        s = *cyc;
        SpreadRecord rec = record_for_spread(g, grp, s, {});
        RecordFile rf{g.field().spec(), g.q(), {rec}};
        if (!out_path.empty())
            write_records(out_path, rf);
        std::cout << summary_text(rf.records);
        return 0;
    } else if (kind == "andre") {
        if (ruling.empty())
            throw ConfigError("--ruling is required for kind=andre (e.g. V3,H1,D2)");
        s = andre_spread(g, parse_ruling(g, ruling));
        andre_reps.push_back(s);
    } else {
        throw ConfigError("unknown construction kind '" + kind + "'");
    }

    PermGroup grp = build_unitary_group(g);
    SpreadRecord rec = record_for_spread(g, grp, s, andre_reps);
    RecordFile rf{g.field().spec(), g.q(), {rec}};
    if (!out_path.empty())
        write_records(out_path, rf);
    std::cout << summary_text(rf.records);
    return 0;
}

int cmd_verify(const std::string& path, bool quick)
{
    RecordFile rf = read_records(path);
    std::string failure = verify_records(rf, !quick);
    if (failure.empty()) {
        std::cout << "pass: " << rf.records.size() << " record(s) verified\n";
        return 0;
    }
    std::cout << "fail: " << failure << "\n";
    return 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Spreads of Hermitian unitals in PG(2,q^2): search, construction, verification"};
    app.require_subcommand(1);

    FieldOptions search_fo;
    RunConfig cfg;
    auto* search = app.add_subcommand("search", "Enumerate all spreads up to equivalence");
    add_field_options(search, search_fo);
    search->add_option("--starters", cfg.starter_limit, "Starter configuration limit")
        ->capture_default_str();
    search->add_option("--workers", cfg.workers, "Worker thread count")->capture_default_str();
    search->add_option("--records", cfg.records_path, "Write spread records to this file");
    search->add_option("--summary", cfg.summary_path, "Write the aligned census table here");
    search->add_option("--csv", cfg.csv_path, "Write the census table as CSV here");
    search->add_option("--checkpoint", cfg.checkpoint_path, "Checkpoint file for long runs");
    search->add_flag("--resume", cfg.resume, "Resume from an existing checkpoint");

    FieldOptions cons_fo;
    std::string kind, center = "(0,*,*)", ruling, out_path;
    auto* cons = app.add_subcommand("construct", "Build one spread from a known construction");
    add_field_options(cons, cons_fo);
    cons->add_option("--kind", kind, "regular | cyclic | andre")->required();
    cons->add_option("--center", center, "Center point token for kind=regular")
        ->capture_default_str();
    cons->add_option("--ruling", ruling,
                     "Ruling choice for kind=andre, e.g. V3,H1,D2 (decimal = prime-field "
                     "residue, eK = exponent of the primitive root)");
    cons->add_option("--out", out_path, "Write the record file here");

    std::string verify_path;
    bool quick = false;
    auto* verify = app.add_subcommand("verify", "Re-check a spread record file");
    verify->add_option("file", verify_path, "Record file to verify")->required();
    verify->add_flag("--quick", quick, "Skip the stabilizer re-computation");

    try {
        app.parse(argc, argv);
        if (search->parsed())
            return cmd_search(search_fo, cfg);
        if (cons->parsed())
            return cmd_construct(cons_fo, kind, center, ruling, out_path);
        if (verify->parsed())
            return cmd_verify(verify_path, quick);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
