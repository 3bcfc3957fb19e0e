#pragma once

#include <string>
#include <vector>

#include "cyclerev/analysis.hpp"
#include "cyclerev/digraph.hpp"
#include "cyclerev/reduction.hpp"

namespace cyclerev {

enum class GraphFormat { Json, EdgeList, Dot };

/// Deterministic serialization; arcs always sorted lexicographically.
std::string write_digraph(const Digraph& d, GraphFormat format);

/// Json and EdgeList only; Dot is export-only. Malformed input raises
/// std::invalid_argument with line/field diagnostics.
Digraph read_digraph(const std::string& text, GraphFormat format);

std::string write_sequence(const ReversalSequence& s);
ReversalSequence read_sequence(const std::string& text);

std::string write_bicover(const Bicover& b);
Bicover read_bicover(const std::string& text);

/// CSV columns: step,cycle_length,backward_before,backward_after,
/// sigma_before,sigma_after with rationals rendered "p/q".
std::string write_trace_csv(const std::vector<ReductionStep>& trace);

GraphFormat parse_format(const std::string& name);

}  // namespace cyclerev
