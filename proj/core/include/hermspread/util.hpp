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

#ifndef HERMSPREAD_UTIL_HPP
#define HERMSPREAD_UTIL_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hermspread {

/// Invariant violation or broken input data.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Unusable run configuration (bad field spec, malformed flags, stale checkpoint).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline void check(bool cond, const std::string& msg)
{
    if (!cond)
        throw Error(msg);
}

std::uint64_t fnv1a64(const void* data, std::size_t len, std::uint64_t h = 0xcbf29ce484222325ULL);

template <typename T>
std::uint64_t fnv1a64_span(const std::vector<T>& v, std::uint64_t h = 0xcbf29ce484222325ULL)
{
    return fnv1a64(v.data(), v.size() * sizeof(T), h);
}

/// Fixed-size bit vector sized at runtime. Word-level ops only; no iterators.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    void set_all();
    void reset_all() { for (auto& w : words_) w = 0; }

    Bitset& operator&=(const Bitset& o);
    Bitset& operator|=(const Bitset& o);
    bool operator==(const Bitset& o) const = default;

    bool intersects(const Bitset& o) const;
    bool any() const;
    bool none() const { return !any(); }
    std::size_t count() const;

    /// Lowest set bit, or -1.
    int find_first() const;
    /// Lowest set bit > i, or -1.
    int find_next(std::size_t i) const;
    /// Lowest clear bit, or -1 when full.
    int find_first_zero() const;

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace hermspread

#endif
