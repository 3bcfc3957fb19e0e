#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "cyclerev/analysis.hpp"
#include "cyclerev/digraph.hpp"
#include "cyclerev/rational.hpp"

namespace cyclerev {

struct ReductionStep {
    std::size_t step = 0;
    int cycle_length = 0;
    int backward_before = 0;
    int backward_after = 0;
    Rational sigma_before;
    Rational sigma_after;
};

struct ReductionResult {
    ReversalSequence sequence;
    Digraph result;
    std::vector<ReductionStep> trace;
    /// Witness for dichromatic <= 2 on the result, when the exact
    /// search finds one.
    std::optional<Bicover> bicover;
};

/// Repeatedly reverses a bad cycle (negative weight sum under e) until
/// none remains. The backward-arc count drops by at least 1 per step,
/// so at most m reversals happen. The result has no bad cycle and is
/// coverable by two acyclic sets.
ReductionResult charbit_reduce(const Digraph& d, const Embedding& e);

/// Same with the identity embedding.
ReductionResult charbit_reduce(const Digraph& d);

/// Lexicographic termination certificate, one entry per loop step:
/// (vertices outside W, backward arcs under the outside order, minimal
/// successor gap of a backward arc; gap 0 when none remain).
struct BicoverStep {
    int outside = 0;
    int backward = 0;
    int gap = 0;

    auto operator<=>(const BicoverStep&) const = default;
};

struct TournamentBicover {
    ReversalSequence sequence;
    Bicover cover;
    std::vector<BicoverStep> potential_trace;
};

/// For a tournament d and acyclic seed_set, produces a reversal
/// sequence and a partition (W, V\W) with W containing seed_set such
/// that both parts are acyclic in the reversed digraph. Moves: swap
/// adjacent order positions, absorb a vertex into W, reverse a
/// 3-cycle, or reverse a 5-cycle through two W-consecutive vertices.
TournamentBicover bicover_tournament(const Digraph& d, const std::vector<int>& seed_set);

enum class MoveSet { All, Triangles };

/// Minimum number of cycle reversals reaching dichromatic number <= 2,
/// by breadth-first search over digraph states (one move = reversing a
/// simple cycle of the current state). nullopt when the budget is
/// exhausted first.
std::optional<int> crs_exact(const Digraph& d, int budget, MoveSet moves = MoveSet::All);

/// For tournaments with identical per-vertex out-degrees: decomposes
/// the disagreement arcs into arc-disjoint cycles of `from` whose
/// reversal, in order, transforms `from` into `to`.
ReversalSequence transform_same_score(const Digraph& from, const Digraph& to);

}  // namespace cyclerev
