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

#ifndef HERMSPREAD_CONSTRUCTIONS_HPP
#define HERMSPREAD_CONSTRUCTIONS_HPP

#include <optional>
#include <vector>

#include "hermspread/group.hpp"

namespace hermspread {

/// A spread: q^2-q+1 pairwise disjoint blocks partitioning the unital,
/// stored as sorted secant indices.
struct Spread {
    std::vector<std::uint16_t> lines;

    bool operator==(const Spread&) const = default;
};

/// Throws unless the given secant indices form a spread.
void validate_spread(const UnitalGeometry& g, const std::vector<std::uint16_t>& lines);

/// The q^2-q secants through an exterior point plus its polar line.
Spread regular_spread(const UnitalGeometry& g, int center_pid);

/// A spread forming a single orbit of a cyclic group of order q^2-q+1, if one
/// exists. Absence is a value: nullopt means no such spread exists at this q.
std::optional<Spread> cyclic_spread(const UnitalGeometry& g, const PermGroup& grp);

/// One ruling family of the triply-ruled set T_a, per vertex of the triangle.
enum class RulingFamily { H, V, D };

struct TripleRuling {
    std::vector<std::uint16_t> h, v, d; // secant indices, q+1 each
    std::vector<int> t_unital;          // unital indices of T_a, (q+1)^2 of them
};

/// Valid parameters a: GF(q) minus {0,-1}, ascending by exponent (q-2 values).
std::vector<FieldElement> ruling_parameters(const UnitalGeometry& g);

/// The three ruling families covering T_a. Throws for a outside GF(q)\{0,-1}.
TripleRuling triple_ruling(const UnitalGeometry& g, FieldElement a);

/// Spread from the triangle sides plus one chosen ruling family per parameter;
/// choice[i] picks the family for ruling_parameters(g)[i].
Spread andre_spread(const UnitalGeometry& g, const std::vector<RulingFamily>& choice);

/// All 3^(q-2) ruling choices in lexicographic order (H < V < D).
std::vector<std::vector<RulingFamily>> all_ruling_choices(const UnitalGeometry& g);

} // namespace hermspread

#endif
