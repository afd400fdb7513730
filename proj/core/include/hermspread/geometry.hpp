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

#ifndef HERMSPREAD_GEOMETRY_HPP
#define HERMSPREAD_GEOMETRY_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hermspread/field.hpp"
#include "hermspread/util.hpp"

namespace hermspread {

using Coords = std::array<FieldElement, 3>;

/// PG(2,q^2) with dense point/line ids, the Hermitian unital
/// x^(q+1) + y^(q+1) + z^(q+1) = 0, its polarity, and the secant/tangent split.
///
/// Ids are assigned in lexicographic order of the canonical homogeneous triple
/// (first nonzero coordinate normalized to 1, zero sorting lowest), so every
/// table below is reproducible across runs.
class UnitalGeometry {
public:
    static UnitalGeometry build(FieldTable field);

    const FieldTable& field() const { return field_; }
    int q() const { return field_.q(); }

    int num_points() const { return int(point_coords_.size()); }
    int num_lines() const { return int(line_coords_.size()); }
    int num_secants() const { return int(secants_.size()); }
    int num_unital_points() const { return int(unital_points_.size()); }
    int spread_size() const { return q() * q() - q() + 1; }

    const Coords& point(int pid) const { return point_coords_[pid]; }
    const Coords& line(int lid) const { return line_coords_[lid]; }

    /// Canonicalize an arbitrary nonzero triple.
    Coords canonical(const Coords& c) const;
    int point_id(const Coords& c) const;
    int line_id(const Coords& c) const;

    bool incident(int pid, int lid) const;
    bool on_unital(int pid) const { return unital_index_[pid] >= 0; }
    int unital_index(int pid) const { return unital_index_[pid]; }
    int unital_point(int uidx) const { return unital_points_[uidx]; }

    const std::vector<int>& unital_points() const { return unital_points_; }
    const std::vector<int>& secants() const { return secants_; }
    const std::vector<int>& tangents() const { return tangents_; }
    /// Secant index of a line id, or -1.
    int secant_index(int lid) const { return secant_index_[lid]; }
    int secant_line(int sidx) const { return secants_[sidx]; }

    /// All points on a line (q^2+1 of them).
    const std::vector<int>& line_points(int lid) const { return line_points_[lid]; }

    /// Unital points on a secant, as sorted unital indices (q+1 of them).
    const std::vector<int>& block(int sidx) const { return blocks_[sidx]; }
    const Bitset& block_bits(int sidx) const { return block_bits_[sidx]; }

    /// Secant indices through a point (any point, unital or not).
    const std::vector<int>& secants_through(int pid) const { return point_secants_[pid]; }
    /// Secant indices through a unital point, by unital index (q^2 of them).
    const std::vector<int>& secants_through_unital(int uidx) const
    {
        return point_secants_[unital_points_[uidx]];
    }

    /// Row i of the blockwise-disjointness table, as a bitset over secant indices.
    const Bitset& disjoint_row(int sidx) const { return disjoint_[sidx]; }
    bool blocks_disjoint(int si, int sj) const { return disjoint_[si].test(sj); }

    int polar_line(int pid) const { return polar_line_[pid]; }
    int pole_point(int lid) const { return pole_point_[lid]; }

    /// Unital points on an arbitrary line: size 1 (tangent) or q+1 (secant).
    struct LineClass {
        bool is_secant;
        std::vector<int> unital_pids; // point ids, not unital indices
    };
    LineClass classify_line(int lid) const;

    /// Dense secant index of the line [1,0,0].
    int secant_100() const { return secant_100_; }

    std::string point_token(int pid) const;
    std::string line_token(int lid) const;
    /// Parse "(a,b,c)" with decimal exponents or '*'; returns a line id.
    int parse_line_token(const std::string& tok) const;
    int parse_point_token(const std::string& tok) const;

private:
    UnitalGeometry(FieldTable f) : field_(std::move(f)) {}

    Coords parse_token(const std::string& tok) const;

    FieldTable field_;
    std::vector<Coords> point_coords_;
    std::vector<Coords> line_coords_;
    std::vector<std::int32_t> id_by_key_; // canonical coord key -> id (points and lines share keys)
    std::vector<std::vector<int>> line_points_;
    std::vector<int> unital_points_;
    std::vector<std::int32_t> unital_index_;
    std::vector<int> secants_;
    std::vector<int> tangents_;
    std::vector<std::int32_t> secant_index_;
    std::vector<std::vector<int>> blocks_;
    std::vector<Bitset> block_bits_;
    std::vector<std::vector<int>> point_secants_;
    std::vector<Bitset> disjoint_;
    std::vector<std::int32_t> polar_line_;
    std::vector<std::int32_t> pole_point_;
    int secant_100_ = -1;
};

} // namespace hermspread

#endif
