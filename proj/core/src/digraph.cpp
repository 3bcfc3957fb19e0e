#include "cyclerev/digraph.hpp"

#include <algorithm>
#include <cassert>
#include <queue>

namespace cyclerev {

namespace {

std::string pair_str(int u, int v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Digraph::Digraph(int n, std::vector<Arc> arcs) : n_(n) {
    if (n < 0) throw std::invalid_argument("digraph: negative vertex count");
    rebuild(std::move(arcs));
}

void Digraph::rebuild(std::vector<Arc> arcs) {
    std::sort(arcs.begin(), arcs.end());
    adj_.assign(static_cast<std::size_t>(n_) * n_, 0);
    out_.assign(n_, {});
    in_.assign(n_, {});
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        const auto [u, v] = arcs[i];
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::invalid_argument("digraph: vertex id out of range in arc " + pair_str(u, v));
        if (u == v) throw std::invalid_argument("digraph: loop " + pair_str(u, v));
        if (i > 0 && arcs[i - 1] == arcs[i])
            throw std::invalid_argument("digraph: duplicate arc " + pair_str(u, v));
        if (adj_[static_cast<std::size_t>(v) * n_ + u])
            throw std::invalid_argument("digraph: anti-parallel pair " + pair_str(u, v));
        adj_[static_cast<std::size_t>(u) * n_ + v] = 1;
    }
    for (const auto& [u, v] : arcs) {
        out_[u].push_back(v);
        in_[v].push_back(u);
    }
    for (auto& lst : in_) std::sort(lst.begin(), lst.end());
    arcs_ = std::move(arcs);
}

Cycle::Cycle(std::vector<int> vertices) : verts_(std::move(vertices)) {
    if (verts_.size() < 3)
        throw std::invalid_argument("cycle: length " + std::to_string(verts_.size()) + " < 3");
    std::vector<int> sorted = verts_;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.front() < 0) throw std::invalid_argument("cycle: negative vertex id");
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("cycle: repeated vertex");
}

std::vector<Arc> Cycle::arcs() const {
    std::vector<Arc> out;
    out.reserve(verts_.size());
    for (std::size_t i = 0; i + 1 < verts_.size(); ++i) out.push_back({verts_[i], verts_[i + 1]});
    out.push_back({verts_.back(), verts_.front()});
    return out;
}

std::vector<Edge> Cycle::edges() const {
    std::vector<Edge> out;
    out.reserve(verts_.size());
    for (const auto& a : arcs()) out.emplace_back(a.tail, a.head);
    return out;
}

bool Cycle::contains_vertex(int v) const {
    return std::find(verts_.begin(), verts_.end(), v) != verts_.end();
}

bool Cycle::contains_edge(const Edge& e) const {
    for (const auto& own : edges())
        if (own == e) return true;
    return false;
}

Cycle Cycle::reversed() const {
    return Cycle(std::vector<int>(verts_.rbegin(), verts_.rend()));
}

bool Cycle::operator==(const Cycle& o) const {
    const std::size_t k = verts_.size();
    if (k != o.verts_.size()) return false;
    for (std::size_t r = 0; r < k; ++r) {
        if (o.verts_[r] != verts_[0]) continue;
        bool match = true;
        for (std::size_t i = 0; i < k && match; ++i)
            if (verts_[i] != o.verts_[(r + i) % k]) match = false;
        if (match) return true;
    }
    return false;
}

bool is_tournament(const Digraph& d) {
    const int n = d.vertex_count();
    std::size_t expected = static_cast<std::size_t>(n) * (n - 1) / 2;
    if (d.arc_count() != expected) return false;
    // No duplicates or anti-parallel pairs by construction, so the count suffices.
    return true;
}

bool is_valid_cycle(const Digraph& d, const Cycle& c) {
    for (const auto& [u, v] : c.arcs()) {
        if (u >= d.vertex_count() || v >= d.vertex_count()) return false;
        if (!d.has_arc(u, v)) return false;
    }
    return true;
}

Digraph reverse_cycle(const Digraph& d, const Cycle& c) {
    const auto cycle_arcs = c.arcs();
    for (const auto& [u, v] : cycle_arcs) {
        if (u >= d.vertex_count() || v >= d.vertex_count() || !d.has_arc(u, v))
            throw std::invalid_argument("reverse_cycle: cycle arc (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") not present");
    }
    std::vector<Arc> arcs = d.arcs();
    for (auto& a : arcs) {
        for (const auto& ca : cycle_arcs) {
            if (a == ca) {
                std::swap(a.tail, a.head);
                break;
            }
        }
    }
    return Digraph(d.vertex_count(), std::move(arcs));
}

ApplyOutcome apply_sequence(const Digraph& d, const ReversalSequence& s) {
    Digraph current = d;
    for (std::size_t i = 0; i < s.cycles.size(); ++i) {
        if (!is_valid_cycle(current, s.cycles[i])) return {d, i};
        current = reverse_cycle(current, s.cycles[i]);
    }
    return {std::move(current), std::nullopt};
}

std::vector<std::vector<int>> strong_components(const Digraph& d) {
    const int n = d.vertex_count();
    // Kosaraju; components come out in topological order of the condensation.
    std::vector<int> finish_order;
    finish_order.reserve(n);
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<std::pair<int, std::size_t>> stack{{s, 0}};
        seen[s] = 1;
        while (!stack.empty()) {
            auto& [v, idx] = stack.back();
            const auto& succ = d.out_neighbors(v);
            if (idx < succ.size()) {
                int w = succ[idx++];
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back({w, 0});
                }
            } else {
                finish_order.push_back(v);
                stack.pop_back();
            }
        }
    }
    std::vector<std::vector<int>> comps;
    std::vector<char> assigned(n, 0);
    for (auto it = finish_order.rbegin(); it != finish_order.rend(); ++it) {
        if (assigned[*it]) continue;
        std::vector<int> comp;
        std::vector<int> stack{*it};
        assigned[*it] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : d.in_neighbors(v)) {
                if (!assigned[w]) {
                    assigned[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::optional<std::vector<int>> topological_order(const Digraph& d) {
    const int n = d.vertex_count();
    std::vector<int> indeg(n);
    for (int v = 0; v < n; ++v) indeg[v] = d.in_degree(v);
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) ready.push(v);
    std::vector<int> order;
    order.reserve(n);
    while (!ready.empty()) {
        int v = ready.top();
        ready.pop();
        order.push_back(v);
        for (int w : d.out_neighbors(v))
            if (--indeg[w] == 0) ready.push(w);
    }
    if (static_cast<int>(order.size()) != n) return std::nullopt;
    return order;
}

bool is_acyclic(const Digraph& d) { return topological_order(d).has_value(); }

bool induced_acyclic(const Digraph& d, const std::vector<int>& vertices) {
    const int n = d.vertex_count();
    std::vector<char> in_set(n, 0);
    for (int v : vertices) in_set[v] = 1;
    std::vector<int> indeg(n, 0);
    for (int v : vertices)
        for (int w : d.out_neighbors(v))
            if (in_set[w]) ++indeg[w];
    std::vector<int> ready;
    for (int v : vertices)
        if (indeg[v] == 0) ready.push_back(v);
    std::size_t removed = 0;
    while (!ready.empty()) {
        int v = ready.back();
        ready.pop_back();
        ++removed;
        for (int w : d.out_neighbors(v))
            if (in_set[w] && --indeg[w] == 0) ready.push_back(w);
    }
    return removed == vertices.size();
}

std::optional<Cycle> find_cycle(const Digraph& d) {
    const int n = d.vertex_count();
    std::vector<char> color(n, 0);  // 0 white, 1 on stack, 2 done
    std::vector<int> path;
    for (int s = 0; s < n; ++s) {
        if (color[s]) continue;
        std::vector<std::pair<int, std::size_t>> stack{{s, 0}};
        color[s] = 1;
        path.assign(1, s);
        while (!stack.empty()) {
            auto& [v, idx] = stack.back();
            const auto& succ = d.out_neighbors(v);
            if (idx < succ.size()) {
                int w = succ[idx++];
                if (color[w] == 1) {
                    auto it = std::find(path.begin(), path.end(), w);
                    assert(it != path.end());
                    return Cycle(std::vector<int>(it, path.end()));
                }
                if (color[w] == 0) {
                    color[w] = 1;
                    stack.push_back({w, 0});
                    path.push_back(w);
                }
            } else {
                color[v] = 2;
                stack.pop_back();
                path.pop_back();
            }
        }
    }
    return std::nullopt;
}

namespace {

void enumerate_from_root(const Digraph& d, int root, std::size_t cap, bool triangles_only,
                         std::vector<Cycle>& out) {
    std::vector<int> path{root};
    std::vector<char> on_path(d.vertex_count(), 0);
    on_path[root] = 1;

    auto dfs = [&](auto&& self, int v) -> void {
        for (int w : d.out_neighbors(v)) {
            if (w == root) {
                if (path.size() >= 3 && (!triangles_only || path.size() == 3)) {
                    if (out.size() >= cap) throw CycleCapExceeded(cap);
                    out.emplace_back(path);
                }
                continue;
            }
            if (w < root || on_path[w]) continue;
            if (triangles_only && path.size() >= 3) continue;
            on_path[w] = 1;
            path.push_back(w);
            self(self, w);
            path.pop_back();
            on_path[w] = 0;
        }
    };
    dfs(dfs, root);
}

}  // namespace

std::vector<Cycle> enumerate_simple_cycles(const Digraph& d, std::size_t cap) {
    std::vector<Cycle> out;
    for (int root = 0; root < d.vertex_count(); ++root)
        enumerate_from_root(d, root, cap, false, out);
    return out;
}

std::vector<Cycle> enumerate_triangles(const Digraph& d) {
    std::vector<Cycle> out;
    for (int root = 0; root < d.vertex_count(); ++root)
        enumerate_from_root(d, root, static_cast<std::size_t>(-1), true, out);
    return out;
}

std::vector<int> out_degrees(const Digraph& d) {
    std::vector<int> deg(d.vertex_count());
    for (int v = 0; v < d.vertex_count(); ++v) deg[v] = d.out_degree(v);
    return deg;
}

std::vector<int> in_degrees(const Digraph& d) {
    std::vector<int> deg(d.vertex_count());
    for (int v = 0; v < d.vertex_count(); ++v) deg[v] = d.in_degree(v);
    return deg;
}

}  // namespace cyclerev
