#include "cyclerev/analysis.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <stdexcept>

namespace cyclerev {

Embedding::Embedding(std::vector<int> slots) : slots_(std::move(slots)) {
    std::vector<char> used(slots_.size(), 0);
    for (int s : slots_) {
        if (s < 0 || s >= static_cast<int>(slots_.size()) || used[s])
            throw std::invalid_argument("embedding: slots must form a permutation of 0..n-1");
        used[s] = 1;
    }
}

Embedding Embedding::identity(int n) {
    std::vector<int> slots(n);
    for (int v = 0; v < n; ++v) slots[v] = v;
    return Embedding(std::move(slots));
}

Rational arc_length(const Embedding& e, const Arc& a) {
    const int n = e.size();
    int diff = (e.slot(a.head) - e.slot(a.tail)) % n;
    if (diff < 0) diff += n;
    return Rational(diff, n);
}

Rational sigma(const Digraph& d, const Embedding& e) {
    Rational total;
    for (const auto& a : d.arcs()) total += arc_length(e, a);
    return total;
}

int arc_weight(const Embedding& e, const Arc& a) {
    return e.slot(a.tail) < e.slot(a.head) ? 1 : -1;
}

bool is_good_cycle(const Embedding& e, const Cycle& c) {
    int sum = 0;
    for (const auto& a : c.arcs()) sum += arc_weight(e, a);
    return sum >= 0;
}

int backward_arc_count(const Digraph& d, const Embedding& e) {
    int count = 0;
    for (const auto& a : d.arcs())
        if (arc_weight(e, a) < 0) ++count;
    return count;
}

std::optional<Cycle> find_bad_cycle(const Digraph& d, const Embedding& e) {
    const int n = d.vertex_count();
    if (n == 0 || d.arc_count() == 0) return std::nullopt;
    // Bellman-Ford with an implicit zero-weight source into every vertex.
    std::vector<int> dist(n, 0);
    std::vector<int> pred(n, -1);
    int touched = -1;
    for (int pass = 0; pass <= n; ++pass) {
        touched = -1;
        for (const auto& a : d.arcs()) {
            int w = arc_weight(e, a);
            if (dist[a.tail] + w < dist[a.head]) {
                dist[a.head] = dist[a.tail] + w;
                pred[a.head] = a.tail;
                touched = a.head;
            }
        }
        if (touched < 0) return std::nullopt;
    }
    // A relaxation on pass n+1 certifies a negative cycle; walk the
    // predecessor graph to land inside it, then cut it out.
    int x = touched;
    for (int i = 0; i <= n; ++i) x = pred[x];
    std::vector<int> walk;
    std::vector<char> seen(n, 0);
    int v = x;
    while (!seen[v]) {
        seen[v] = 1;
        walk.push_back(v);
        v = pred[v];
    }
    auto it = std::find(walk.begin(), walk.end(), v);
    std::vector<int> verts(it, walk.end());
    // pred runs against arc direction.
    std::reverse(verts.begin(), verts.end());
    Cycle cycle((std::vector<int>(verts)));
    int sum = 0;
    for (const auto& a : cycle.arcs()) sum += arc_weight(e, a);
    if (!is_valid_cycle(d, cycle) || sum >= 0)
        throw std::logic_error("find_bad_cycle: predecessor extraction failed");
    return cycle;
}

namespace {

// Backtracking k-coloring with per-class acyclicity pruning. Vertices
// assigned in id order; a vertex may open at most one new class.
bool color_with(const Digraph& d, int k, std::vector<std::vector<int>>& classes) {
    const int n = d.vertex_count();
    classes.assign(k, {});
    auto assign = [&](auto&& self, int v, int used) -> bool {
        if (v == n) return true;
        int limit = std::min(k, used + 1);
        for (int c = 0; c < limit; ++c) {
            classes[c].push_back(v);
            if (induced_acyclic(d, classes[c]) &&
                self(self, v + 1, std::max(used, c + 1)))
                return true;
            classes[c].pop_back();
        }
        return false;
    };
    return assign(assign, 0, 0);
}

}  // namespace

int dichromatic_number(const Digraph& d) {
    const int n = d.vertex_count();
    if (n == 0) return 0;
    std::vector<std::vector<int>> classes;
    for (int k = 1; k <= n; ++k)
        if (color_with(d, k, classes)) return k;
    return n;  // unreachable: singletons are acyclic
}

std::optional<Bicover> find_bicover(const Digraph& d) {
    if (d.vertex_count() == 0) return Bicover{{}, {}};
    std::vector<std::vector<int>> classes;
    if (!color_with(d, 2, classes)) return std::nullopt;
    return Bicover{classes[0], classes[1]};
}

bool validate_bicover(const Digraph& d, const Bicover& b) {
    const int n = d.vertex_count();
    std::vector<int> count(n, 0);
    for (int v : b.part_one) {
        if (v < 0 || v >= n) return false;
        ++count[v];
    }
    for (int v : b.part_two) {
        if (v < 0 || v >= n) return false;
        ++count[v];
    }
    for (int v = 0; v < n; ++v)
        if (count[v] != 1) return false;
    return induced_acyclic(d, b.part_one) && induced_acyclic(d, b.part_two);
}

std::optional<int> digirth(const Digraph& d) {
    const int n = d.vertex_count();
    int best = -1;
    std::vector<int> dist(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        std::queue<int> bfs;
        bfs.push(s);
        while (!bfs.empty()) {
            int v = bfs.front();
            bfs.pop();
            for (int w : d.out_neighbors(v)) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    bfs.push(w);
                }
            }
        }
        for (int t : d.in_neighbors(s)) {
            if (dist[t] > 0) {
                int len = dist[t] + 1;
                if (best < 0 || len < best) best = len;
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

}  // namespace cyclerev
