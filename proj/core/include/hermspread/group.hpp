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

#ifndef HERMSPREAD_GROUP_HPP
#define HERMSPREAD_GROUP_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "hermspread/geometry.hpp"

namespace hermspread {

/// Permutation of [0, n): p[i] is the image of i.
using Perm = std::vector<std::uint16_t>;

Perm perm_identity(int n);
bool perm_is_identity(const Perm& p);
/// Apply b first, then a.
Perm perm_mult(const Perm& a, const Perm& b);
Perm perm_inverse(const Perm& p);
std::uint64_t perm_order(const Perm& p);
/// Cycles of exactly the given length (each rotated so the minimum comes first).
std::vector<std::vector<int>> perm_cycles_of_length(const Perm& p, int len);
/// Elementwise image of a sorted id set.
std::vector<std::uint16_t> apply_perm(const Perm& g, const std::vector<std::uint16_t>& set);

/// Projective semilinear map: v -> M * v^(p^frob), acting on column vectors.
struct SemilinearMap {
    std::array<std::array<FieldElement, 3>, 3> mat;
    int frob = 0;
};

/// Induced permutation on point ids. Throws if the map does not preserve the unital.
Perm point_perm(const UnitalGeometry& g, const SemilinearMap& m);
/// Induced permutation on secant indices (checks secants map to secants).
Perm secant_perm(const UnitalGeometry& g, const SemilinearMap& m);

/// 2e * q^3 (q^3+1)(q^2-1), the order of the full automorphism group of the unital.
std::uint64_t unital_group_order(int q, int e);

/// Base-and-strong-generating-set structure over a fixed point domain.
/// Supports a prescribed base prefix (levels exist even when their orbit is
/// trivial), deterministic closure, and randomized fill towards a known order.
class StabilizerChain {
public:
    StabilizerChain() = default;
    StabilizerChain(int degree, std::vector<int> prescribed_base);

    int degree() const { return n_; }
    std::size_t num_levels() const { return levels_.size(); }
    int base_point(std::size_t lvl) const { return levels_[lvl].base; }
    std::uint64_t order() const;
    /// Product of orbit sizes at levels >= lvl.
    std::uint64_t suborder_from(std::size_t lvl) const;

    const std::vector<int>& orbit(std::size_t lvl) const { return levels_[lvl].orbit; }
    bool in_orbit(std::size_t lvl, int pt) const { return levels_[lvl].pos[pt] != 0; }
    const Perm& transversal(std::size_t lvl, int pt) const;
    const Perm& transversal_inv(std::size_t lvl, int pt) const;
    const std::vector<Perm>& level_gens(std::size_t lvl) const { return levels_[lvl].gens; }

    /// Add a generator of the whole group (level 0). Does not re-close.
    void add_generator(const Perm& g);
    /// Sift an element and absorb a nontrivial residue at its stuck level.
    /// Returns true if the chain order grew.
    bool add_element(const Perm& g);
    /// Deterministic Schreier-Sims verification/completion.
    void close();

    /// Residue of g and the level where sifting stopped (num_levels() == full strip).
    std::pair<Perm, std::size_t> sift(const Perm& g) const;
    bool contains(const Perm& g) const;

    Perm random_element(std::mt19937_64& rng) const;
    void for_each_element(const std::function<void(const Perm&)>& fn) const;

private:
    struct Level {
        int base = -1;
        std::vector<Perm> gens;
        std::vector<int> orbit;
        std::vector<std::int32_t> pos; // pt -> orbit index + 1, 0 if absent
        std::vector<Perm> u;           // transversal, aligned with orbit; u[i](base) = orbit[i]
        std::vector<Perm> uinv;
    };

    void rebuild_orbit(std::size_t lvl);
    void attach(std::size_t lvl, const Perm& g);
    void append_level(int base_pt);
    std::pair<Perm, std::size_t> sift_from(std::size_t lvl, Perm g) const;

    int n_ = 0;
    std::vector<Level> levels_;
};

/// Permutation group given by generators, with orbit, stabilizer, transporter
/// and membership machinery. Immutable after construction; queries are
/// read-only and safe to run concurrently.
class PermGroup {
public:
    PermGroup() = default;

    /// Deterministic Schreier-Sims closure of the generated group.
    static PermGroup generate(int degree, std::vector<Perm> gens);

    int degree() const { return degree_; }
    std::uint64_t order() const { return chain_.order(); }
    bool trivial() const { return order() == 1; }
    const std::vector<Perm>& generators() const { return gens_; }

    bool contains(const Perm& g) const { return chain_.contains(g); }
    Perm random_element(std::mt19937_64& rng) const { return chain_.random_element(rng); }
    void for_each_element(const std::function<void(const Perm&)>& fn) const
    {
        chain_.for_each_element(fn);
    }

    std::vector<int> orbit_of(int x) const;
    bool transitive() const { return orbit_of(0).size() == std::size_t(degree_); }

    /// Orbit partition of a G-invariant domain, each orbit sorted ascending,
    /// orbits ordered by (size, smallest element). Throws if not invariant.
    std::vector<std::vector<int>> orbits(const std::vector<int>& domain) const;

    /// Subgroup {g : g(S) = S}, with exact order.
    PermGroup setwise_stabilizer(const std::vector<std::uint16_t>& set) const;

    /// Some g with g(A) = B, or nullopt; nullopt is authoritative within the group.
    std::optional<Perm> transporter(const std::vector<std::uint16_t>& a,
                                    const std::vector<std::uint16_t>& b) const;

    const StabilizerChain& chain() const { return chain_; }

private:
    /// Chain of this group rebased so the given points form the base prefix.
    StabilizerChain rebased(const std::vector<std::uint16_t>& prefix, std::uint64_t seed) const;

    int degree_ = 0;
    std::vector<Perm> gens_;
    StabilizerChain chain_;
};

/// The full automorphism group of the unital acting on secant indices.
/// Generators are verified to preserve the unital; the result is checked to
/// act transitively on secants and to have order 2e q^3 (q^3+1)(q^2-1).
PermGroup build_unitary_group(const UnitalGeometry& g);

} // namespace hermspread

#endif
