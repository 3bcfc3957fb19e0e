#pragma once

#include <cstddef>
#include <vector>

#include "cyclerev/digraph.hpp"

namespace cyclerev {

/// Equivalent sequence of exactly |C|-2 triangles for a cycle of a
/// tournament, anchored so every emitted triangle edge either touches
/// `anchor` or lies on C. apply_sequence of the output equals
/// reverse_cycle(d, c).
ReversalSequence triangulate_cycle(const Digraph& d, const Cycle& c, int anchor);

/// Per-cycle triangulation against the evolving digraph, anchored at
/// each cycle's first vertex; total length sum(|C_i| - 2).
ReversalSequence triangulate_sequence(const Digraph& d, const ReversalSequence& s);

/// Ascending indices of the cycles containing edge e.
std::vector<std::size_t> edge_stabilizer(const ReversalSequence& s, const Edge& e);

/// Partition of s into the connected components of the edge-sharing
/// graph over its cycles, each keeping s's internal order and listed
/// by first cycle index. Components commute: any concatenation order
/// is a valid reversal sequence on d with the same final digraph.
std::vector<ReversalSequence> canonical_decomposition(const Digraph& d,
                                                      const ReversalSequence& s);

/// True iff both sequences are valid on d and produce the same digraph.
bool sequences_equivalent(const Digraph& d, const ReversalSequence& s1,
                          const ReversalSequence& s2);

}  // namespace cyclerev
