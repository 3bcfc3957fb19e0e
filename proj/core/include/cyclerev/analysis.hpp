#pragma once

#include <optional>
#include <vector>

#include "cyclerev/digraph.hpp"
#include "cyclerev/rational.hpp"

namespace cyclerev {

/// Bijection vertex -> circle slot; vertex at slot i sits at position
/// i/n on a circle of perimeter 1.
class Embedding {
public:
    /// slots[v] is the slot of vertex v; must be a permutation of 0..n-1.
    explicit Embedding(std::vector<int> slots);

    static Embedding identity(int n);

    int slot(int v) const { return slots_[v]; }
    int size() const { return static_cast<int>(slots_.size()); }

private:
    std::vector<int> slots_;
};

/// Directed clockwise distance ((slot(head) - slot(tail)) mod n) / n.
Rational arc_length(const Embedding& e, const Arc& a);

/// Sum of arc_length over all arcs; m/n <= sigma <= m when m >= 1.
Rational sigma(const Digraph& d, const Embedding& e);

/// +1 iff slot(tail) < slot(head), else -1.
int arc_weight(const Embedding& e, const Arc& a);

/// Good iff the cycle's weight sum is >= 0 (at least as many forward
/// as backward arcs).
bool is_good_cycle(const Embedding& e, const Cycle& c);

/// Count of arcs with weight -1.
int backward_arc_count(const Digraph& d, const Embedding& e);

/// A simple cycle with weight sum <= -1 when one exists (Bellman-Ford
/// over the +-1 weights), nullopt iff every simple cycle is good.
std::optional<Cycle> find_bad_cycle(const Digraph& d, const Embedding& e);

/// Partition of V into two sets, each inducing an acyclic subdigraph
/// of a target digraph (checked by validate_bicover). Parts may be empty.
struct Bicover {
    std::vector<int> part_one;
    std::vector<int> part_two;
};

/// Exact minimum number of acyclic-inducing classes covering V.
/// Backtracking with acyclicity pruning; vertex 0 pinned to class 0.
/// Empty digraph -> 0.
int dichromatic_number(const Digraph& d);

/// A valid bicover iff dichromatic_number(d) <= 2, found by exact search.
std::optional<Bicover> find_bicover(const Digraph& d);

/// True iff the parts partition V and both induce acyclic subdigraphs.
bool validate_bicover(const Digraph& d, const Bicover& b);

/// Length of the shortest directed cycle; nullopt when acyclic.
std::optional<int> digirth(const Digraph& d);

}  // namespace cyclerev
