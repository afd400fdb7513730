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

#ifndef HERMSPREAD_CLASSIFY_HPP
#define HERMSPREAD_CLASSIFY_HPP

#include <compare>

#include "hermspread/search.hpp"

namespace hermspread {

enum class SpreadKind { Regular, Cyclic, Andre, Unknown };

char kind_letter(SpreadKind k);
SpreadKind kind_from_letter(char c);

struct SpreadInvariants {
    std::uint64_t stabilizer_order = 0;
    std::vector<std::pair<int, int>> orbit_structure; // (orbit size, count), ascending
    std::vector<std::pair<int, int>> type_vector;     // (secant degree, point count), ascending

    auto operator<=>(const SpreadInvariants&) const = default;
};

/// Histogram, over points off the unital, of the number of spread lines
/// through each. Checks the counting identities sum j = q^4-q^3+q^2 and
/// sum i*j = (q^2-q+1)(q^2-q).
std::vector<std::pair<int, int>> type_vector(const UnitalGeometry& g, const Spread& s);

/// Setwise stabilizer of the spread inside grp.
PermGroup spread_stabilizer(const UnitalGeometry& g, const Spread& s, const PermGroup& grp);

/// Full invariant triple; computes the stabilizer internally.
SpreadInvariants spread_invariants(const UnitalGeometry& g, const Spread& s,
                                   const PermGroup& grp);
/// Same, reusing a precomputed stabilizer.
SpreadInvariants spread_invariants_with_stabilizer(const UnitalGeometry& g, const Spread& s,
                                                   const PermGroup& stab);

struct SpreadClass {
    Spread representative;
    SpreadInvariants invariants;
    std::uint64_t census_count = 0; // raw search spreads that landed in this class
    SpreadKind kind = SpreadKind::Unknown;
    int regular_center = -1;        // point id of the unique degree-(q^2-q) point
};

/// Partition raw spreads into projective-equivalence classes. Invariants act
/// purely as a pre-filter; equality of classes is decided by transporter
/// search. Classes come back sorted by (stabilizer order, type vector,
/// representative lines); kinds are left Unknown.
std::vector<SpreadClass> reduce_to_classes(const UnitalGeometry& g,
                                           const std::vector<Spread>& spreads,
                                           const PermGroup& grp, int workers = 1);

/// Classification rules, applied in fixed precedence:
///   Regular: some exterior point lies on q^2-q spread lines;
///   Cyclic:  q even and the stabilizer has an order-(q^2-q+1) element whose
///            single cycle covers the spread;
///   Andre:   transporter exists onto one of the given representatives;
///   Unknown: otherwise.
SpreadKind classify_kind(const UnitalGeometry& g, const Spread& s, const PermGroup& grp,
                         const SpreadInvariants& inv, const std::vector<Spread>& andre_reps);

/// Attach kinds (and regular centers) to every class.
void classify_kinds(const UnitalGeometry& g, std::vector<SpreadClass>& classes,
                    const PermGroup& grp, const std::vector<Spread>& andre_reps);

/// Representatives of the isomorphism classes among all 3^(q-2) ruled spreads.
std::vector<Spread> andre_class_representatives(const UnitalGeometry& g, const PermGroup& grp,
                                                int workers = 1);

} // namespace hermspread

#endif
