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

#ifndef HERMSPREAD_RECORD_HPP
#define HERMSPREAD_RECORD_HPP

#include <iosfwd>

#include "hermspread/classify.hpp"

namespace hermspread {

/// One reported spread in the textual exchange format. Lines are encoded as
/// "(a,b,c)" with discrete-log exponents or '*' for the field zero; the delta
/// lists the lines not present in the regular spread centered at (1,0,0).
struct SpreadRecord {
    int q = 0;
    std::vector<std::string> lines;
    std::vector<std::string> delta;
    std::uint64_t stabilizer_order = 0;
    std::vector<std::pair<int, int>> orbit_structure;
    std::vector<std::pair<int, int>> type_vector;
    char kind = '-';
};

/// The regular spread used as the delta baseline.
Spread delta_baseline(const UnitalGeometry& g);

/// Lines of s absent from the baseline, as secant indices.
std::vector<std::uint16_t> delta_lines(const UnitalGeometry& g, const Spread& s);

/// Rebuild a spread from its delta: keep every baseline line whose block
/// avoids all delta blocks, then add the delta lines.
Spread reconstruct_from_delta(const UnitalGeometry& g,
                              const std::vector<std::uint16_t>& delta);

/// Record for a classified spread; verifies the delta round-trips.
SpreadRecord make_record(const UnitalGeometry& g, const SpreadClass& cls);

struct RecordFile {
    FieldSpec field;
    int q = 0;
    std::vector<SpreadRecord> records;
};

std::string serialize_records(const RecordFile& rf);
RecordFile parse_records(std::istream& in); // throws Error with line numbers
RecordFile read_records(const std::string& path);
void write_records(const std::string& path, const RecordFile& rf);

/// Census table with columns Idx, Spread, |G|, Orbit, Type, K.
std::string summary_text(const std::vector<SpreadRecord>& records);
std::string summary_csv(const std::vector<SpreadRecord>& records);

/// Re-run every structural check on a parsed record file; returns the empty
/// string on success or a description of the first failure. When deep is set
/// the stabilizer invariants are recomputed against the group.
std::string verify_records(const RecordFile& rf, bool deep);

} // namespace hermspread

#endif
