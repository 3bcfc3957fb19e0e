#pragma once

#include <cstdint>
#include <vector>

#include "cyclerev/digraph.hpp"

namespace cyclerev {

/// splitmix64; the fixed mix generator behind every seeded construction.
/// Constants as published: increment 0x9e3779b97f4b7c15, multipliers
/// 0xbf58476d1ce4e5b9 and 0x94d049bb133111eb.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4b7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, bound).
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    bool coin() { return (next() >> 63) != 0; }
};

/// Acyclic tournament with arcs i -> j for i < j.
Digraph transitive(int n);

/// Each unordered pair, scanned lexicographically, oriented by one
/// splitmix64 draw; bit-for-bit reproducible from (n, seed).
Digraph random_tournament(int n, std::uint64_t seed);

/// Paley tournament: i -> j iff (j - i) mod p is a nonzero quadratic
/// residue. Requires p prime with p = 3 (mod 4).
Digraph paley(int p);

/// Replaces vertex x of tournament d by the tournament parts[x], with
/// every cross pair oriented as the arc between the originals.
Digraph blowup(const Digraph& d, const std::vector<Digraph>& parts);

/// `copies` disjoint copies of base with complete arc sets from copy i
/// to copy i+1, cyclically. A tournament for copies == 3 and
/// tournament base; raises the dichromatic number by one while
/// keeping digirth 3.
Digraph iterated_construction(const Digraph& base, int copies);

}  // namespace cyclerev
