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

#include "hermspread/util.hpp"

#include <bit>

namespace hermspread {

std::uint64_t fnv1a64(const void* data, std::size_t len, std::uint64_t h)
{
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

void Bitset::set_all()
{
    for (auto& w : words_)
        w = ~std::uint64_t(0);
    std::size_t tail = nbits_ & 63;
    if (tail && !words_.empty())
        words_.back() &= (std::uint64_t(1) << tail) - 1;
}

Bitset& Bitset::operator&=(const Bitset& o)
{
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= o.words_[i];
    return *this;
}

Bitset& Bitset::operator|=(const Bitset& o)
{
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] |= o.words_[i];
    return *this;
}

bool Bitset::intersects(const Bitset& o) const
{
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & o.words_[i])
            return true;
    return false;
}

bool Bitset::any() const
{
    for (auto w : words_)
        if (w)
            return true;
    return false;
}

std::size_t Bitset::count() const
{
    std::size_t c = 0;
    for (auto w : words_)
        c += std::popcount(w);
    return c;
}

int Bitset::find_first() const
{
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i])
            return int(i * 64 + std::countr_zero(words_[i]));
    return -1;
}

int Bitset::find_next(std::size_t i) const
{
    ++i;
    if (i >= nbits_)
        return -1;
    std::size_t wi = i >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t(0) << (i & 63));
    if (w)
        return int(wi * 64 + std::countr_zero(w));
    for (++wi; wi < words_.size(); ++wi)
        if (words_[wi])
            return int(wi * 64 + std::countr_zero(words_[wi]));
    return -1;
}

int Bitset::find_first_zero() const
{
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t w = ~words_[i];
        if (i + 1 == words_.size()) {
            std::size_t tail = nbits_ & 63;
            if (tail)
                w &= (std::uint64_t(1) << tail) - 1;
        }
        if (w) {
            std::size_t bit = i * 64 + std::countr_zero(w);
            return bit < nbits_ ? int(bit) : -1;
        }
    }
    return -1;
}

} // namespace hermspread
