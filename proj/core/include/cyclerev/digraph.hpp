#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyclerev {

/// Directed arc tail -> head.
struct Arc {
    int tail = 0;
    int head = 0;
    auto operator<=>(const Arc&) const = default;
};

/// Unordered vertex pair; normalized so a < b.
struct Edge {
    int a = 0;
    int b = 0;
    Edge() = default;
    Edge(int u, int v) : a(u < v ? u : v), b(u < v ? v : u) {}
    auto operator<=>(const Edge&) const = default;
};

/// Oriented simple digraph on vertices 0..n-1: no loops, at most one
/// of (u,v),(v,u) present. Immutable after construction; dense n^2
/// adjacency plus a lexicographically sorted arc list.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int n) : n_(n) { rebuild({}); }

    /// Validates every arc; throws std::invalid_argument naming the
    /// offending pair on loops, duplicates, anti-parallel pairs, or
    /// out-of-range vertex ids.
    Digraph(int n, std::vector<Arc> arcs);

    int vertex_count() const { return n_; }
    std::size_t arc_count() const { return arcs_.size(); }

    bool has_arc(int u, int v) const { return adj_[static_cast<std::size_t>(u) * n_ + v] != 0; }

    /// Sorted lexicographically by (tail, head).
    const std::vector<Arc>& arcs() const { return arcs_; }

    const std::vector<int>& out_neighbors(int v) const { return out_[v]; }
    const std::vector<int>& in_neighbors(int v) const { return in_[v]; }
    int out_degree(int v) const { return static_cast<int>(out_[v].size()); }
    int in_degree(int v) const { return static_cast<int>(in_[v].size()); }

    bool operator==(const Digraph& o) const { return n_ == o.n_ && arcs_ == o.arcs_; }

private:
    void rebuild(std::vector<Arc> arcs);

    int n_ = 0;
    std::vector<Arc> arcs_;
    std::vector<unsigned char> adj_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
};

/// Simple directed cycle as an explicit vertex rotation; the closing
/// arc from back() to front() is implicit. Shape invariants (length
/// >= 3, all vertices distinct, non-negative ids) are enforced here;
/// membership of the arcs is relative to a host digraph and checked
/// by is_valid_cycle / reverse_cycle.
class Cycle {
public:
    explicit Cycle(std::vector<int> vertices);

    const std::vector<int>& vertices() const { return verts_; }
    int length() const { return static_cast<int>(verts_.size()); }

    /// All k arcs, including the closing arc.
    std::vector<Arc> arcs() const;
    /// Underlying unordered edges.
    std::vector<Edge> edges() const;

    bool contains_vertex(int v) const;
    bool contains_edge(const Edge& e) const;

    /// Same cycle with the vertex order reversed (reverses every arc).
    Cycle reversed() const;

    /// Equality up to rotation, not reflection.
    bool operator==(const Cycle& o) const;

private:
    std::vector<int> verts_;
};

/// Ordered list of cycles; cycle i must be valid in the digraph
/// produced by reversing cycles 0..i-1 (checked by apply_sequence).
struct ReversalSequence {
    std::vector<Cycle> cycles;

    std::size_t size() const { return cycles.size(); }
    bool empty() const { return cycles.empty(); }
};

struct CycleCapExceeded : std::runtime_error {
    explicit CycleCapExceeded(std::size_t cap_)
        : std::runtime_error("simple cycle count exceeds cap " + std::to_string(cap_)), cap(cap_) {}
    std::size_t cap;
};

/// True iff every unordered vertex pair carries exactly one arc.
bool is_tournament(const Digraph& d);

/// True iff every consecutive arc of c, including the closing arc, is present in d.
bool is_valid_cycle(const Digraph& d, const Cycle& c);

/// Flips exactly the cycle arcs; throws std::invalid_argument if c is not valid in d.
Digraph reverse_cycle(const Digraph& d, const Cycle& c);

struct ApplyOutcome {
    Digraph graph;
    /// Index of the first invalid step, or nullopt on success. On
    /// failure `graph` is the input digraph unchanged.
    std::optional<std::size_t> failed_step;

    bool ok() const { return !failed_step.has_value(); }
};

/// Left fold of reverse_cycle with stepwise validity checking; atomic on failure.
ApplyOutcome apply_sequence(const Digraph& d, const ReversalSequence& s);

/// Strongly connected components as sorted vertex sets, listed in a
/// topological order of the condensation.
std::vector<std::vector<int>> strong_components(const Digraph& d);

/// An ordering with every arc pointing forward, when d is acyclic.
/// Deterministic: the lexicographically smallest such order.
std::optional<std::vector<int>> topological_order(const Digraph& d);

bool is_acyclic(const Digraph& d);

/// Acyclicity of the subdigraph induced by `vertices`.
bool induced_acyclic(const Digraph& d, const std::vector<int>& vertices);

/// Some simple directed cycle, or nullopt iff d is acyclic.
std::optional<Cycle> find_cycle(const Digraph& d);

/// Every simple directed cycle, each rooted at its minimum vertex, in
/// deterministic (root, then DFS) order. Throws CycleCapExceeded when
/// the count would pass `cap`.
std::vector<Cycle> enumerate_simple_cycles(const Digraph& d, std::size_t cap);

/// All directed 3-cycles, same rooting and order conventions as
/// enumerate_simple_cycles.
std::vector<Cycle> enumerate_triangles(const Digraph& d);

/// Out-degree of every vertex in id order.
std::vector<int> out_degrees(const Digraph& d);
std::vector<int> in_degrees(const Digraph& d);

}  // namespace cyclerev
