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

#ifndef HERMSPREAD_SEARCH_HPP
#define HERMSPREAD_SEARCH_HPP

#include <string>
#include <vector>

#include "hermspread/constructions.hpp"

namespace hermspread {

/// One backtrack task: secants assumed in the spread and secants excluded
/// from it. The line [1,0,0] is always part of `included`.
struct StarterConfig {
    std::vector<std::uint16_t> included; // sorted secant indices
    Bitset excluded;                     // over secant indices
};

/// Starter configurations whose search spaces jointly cover every spread up
/// to projective equivalence. Refinement of a starter stops once its partial
/// spread has a trivial setwise stabilizer; refinement of the whole list
/// stops when it would exceed max_starters.
std::vector<StarterConfig> generate_starters(const UnitalGeometry& g, const PermGroup& grp,
                                             int max_starters = 25000);

/// All full spreads S with included subset of S and S disjoint from excluded,
/// each exactly once, in deterministic order. Branches on the lowest-index
/// uncovered unital point.
std::vector<Spread> backtrack_search(const UnitalGeometry& g, const StarterConfig& starter);

/// Every spread containing [1,0,0], with no isomorph rejection. Only sound as
/// an oracle at small orders; throws for q > 4.
std::vector<Spread> exhaustive_reference_search(const UnitalGeometry& g);

struct SearchOutcome {
    std::vector<std::vector<Spread>> per_starter;

    /// Concatenation in starter-index order, preserving emission order.
    std::vector<Spread> merged() const;
};

/// Run the backtracks for all starters on a worker pool. When checkpoint_path
/// is set, progress is written there one record per starter; with resume=true
/// an existing checkpoint is validated against the starter list and completed
/// starters are skipped.
SearchOutcome run_starters(const UnitalGeometry& g, const std::vector<StarterConfig>& starters,
                           int workers, const std::string& checkpoint_path = "",
                           bool resume = false);

} // namespace hermspread

#endif
