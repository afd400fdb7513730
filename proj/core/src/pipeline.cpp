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

#include "hermspread/pipeline.hpp"

#include <fstream>

namespace hermspread {

namespace {

void write_text(const std::string& path, const std::string& body)
{
    std::ofstream out(path, std::ios::trunc);
    if (!out)
        throw ConfigError("cannot write output file " + path);
    out << body;
}

} // namespace

CensusResult run_census(const RunConfig& cfg)
{
    FieldTable f = FieldTable::build(cfg.field);
    UnitalGeometry g = UnitalGeometry::build(std::move(f));
    PermGroup grp = build_unitary_group(g);

    auto starters = generate_starters(g, grp, cfg.starter_limit);
    auto outcome = run_starters(g, starters, cfg.workers, cfg.checkpoint_path, cfg.resume);
    auto raw = outcome.merged();

    auto andre_reps = andre_class_representatives(g, grp, cfg.workers);
    auto classes = reduce_to_classes(g, raw, grp, cfg.workers);
    classify_kinds(g, classes, grp, andre_reps);

    CensusResult res;
    res.starters = starters.size();
    res.raw_spreads = raw.size();
    res.group_order = grp.order();
    res.classes = classes;
    res.records.field = cfg.field;
    res.records.q = g.q();
    for (const auto& cls : classes)
        res.records.records.push_back(make_record(g, cls));

    if (!cfg.records_path.empty())
        write_records(cfg.records_path, res.records);
    if (!cfg.summary_path.empty())
        write_text(cfg.summary_path, summary_text(res.records.records));
    if (!cfg.csv_path.empty())
        write_text(cfg.csv_path, summary_csv(res.records.records));
    return res;
}

SpreadRecord record_for_spread(const UnitalGeometry& g, const PermGroup& grp, const Spread& s,
                               const std::vector<Spread>& andre_reps)
{
    SpreadClass cls;
    cls.representative = s;
    cls.invariants = spread_invariants(g, s, grp);
    cls.census_count = 1;
    std::vector<SpreadClass> one{cls};
    classify_kinds(g, one, grp, andre_reps);
    return make_record(g, one.front());
}

} // namespace hermspread
