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

#ifndef HERMSPREAD_PIPELINE_HPP
#define HERMSPREAD_PIPELINE_HPP

#include "hermspread/record.hpp"

namespace hermspread {

struct RunConfig {
    FieldSpec field;
    int starter_limit = 25000;
    int workers = 1;
    std::string records_path;
    std::string summary_path;
    std::string csv_path;
    std::string checkpoint_path;
    bool resume = false;
};

struct CensusResult {
    std::vector<SpreadClass> classes;
    RecordFile records;
    std::size_t starters = 0;
    std::size_t raw_spreads = 0;
    std::uint64_t group_order = 0;
};

/// Full search pipeline: build, starters, backtracks, class reduction,
/// classification, report. Output is deterministic for each configuration,
/// including across worker counts. Writes the configured output files.
CensusResult run_census(const RunConfig& cfg);

/// Record for one constructed spread (invariants computed against the full
/// group). andre_reps participates in kind classification.
SpreadRecord record_for_spread(const UnitalGeometry& g, const PermGroup& grp, const Spread& s,
                               const std::vector<Spread>& andre_reps);

} // namespace hermspread

#endif
