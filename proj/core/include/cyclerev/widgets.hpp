#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclerev/digraph.hpp"

namespace cyclerev {

/// A maximum-cardinality family (capped at `limit`) of pairwise
/// edge-disjoint directed paths from a.head back to a.tail, computed
/// by unit-capacity max flow with the arc itself removed. Paths are
/// vertex lists head..tail.
std::vector<std::vector<int>> edge_disjoint_return_paths(const Digraph& d, const Arc& a,
                                                         std::size_t limit);

struct WidgetOutcome {
    ReversalSequence sequence;
    Digraph result;
};

/// Reverses arc a through k >= 1 edge-disjoint return paths: cycle 0
/// is a followed by paths[0]; cycle i+1 is paths[i] reversed followed
/// by paths[i+1]. The result differs from d in exactly the arc a and
/// the arcs of the last path (the finite residue).
WidgetOutcome reverse_arc_widget(const Digraph& d, const Arc& a,
                                 const std::vector<std::vector<int>>& paths);

/// Reverses every arc of the directed path through its back-arcs into
/// path[0]. back_indices lists the path positions i with an arc
/// path[i] -> path[0], ascending; the last one must close the path
/// (back_indices.back() == path.size()-1). Intermediate back-arcs are
/// flipped twice and end unchanged; the closing back-arc stays
/// reversed (the finite residue).
WidgetOutcome reverse_path_widget(const Digraph& d, const std::vector<int>& path,
                                  const std::vector<int>& back_indices);

struct ArcReversalRecord {
    Arc arc;
    std::vector<int> return_path;
};

struct ArcSetOutcome {
    ReversalSequence sequence;
    Digraph result;
    std::vector<ArcReversalRecord> ledger;
};

struct InfeasibleArcError : std::runtime_error {
    InfeasibleArcError(std::size_t index, const Arc& a)
        : std::runtime_error("reverse_arc_set: no disjoint return path for arc " +
                             std::to_string(index) + " (" + std::to_string(a.tail) + "," +
                             std::to_string(a.head) + ")"),
          arc_index(index) {}
    std::size_t arc_index;
};

/// Reverses all arcs in order, each via a single return path chosen
/// edge-disjoint from every edge used so far (including the arcs
/// themselves). The ledger records the residual path flipped per arc.
ArcSetOutcome reverse_arc_set(const Digraph& d, const std::vector<Arc>& arcs);

}  // namespace cyclerev
