#include "cyclerev/reduction.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace cyclerev {

ReductionResult charbit_reduce(const Digraph& d, const Embedding& e) {
    if (e.size() != d.vertex_count())
        throw std::invalid_argument("charbit_reduce: embedding size mismatch");
    ReductionResult res;
    res.result = d;
    int backward = backward_arc_count(res.result, e);
    Rational sig = sigma(res.result, e);
    while (auto bad = find_bad_cycle(res.result, e)) {
        res.result = reverse_cycle(res.result, *bad);
        int backward_after = backward_arc_count(res.result, e);
        Rational sigma_after = sigma(res.result, e);
        res.trace.push_back({res.sequence.size(), bad->length(), backward, backward_after, sig,
                             sigma_after});
        res.sequence.cycles.push_back(std::move(*bad));
        assert(backward_after < backward);
        backward = backward_after;
        sig = sigma_after;
    }
    res.bicover = find_bicover(res.result);
    return res;
}

ReductionResult charbit_reduce(const Digraph& d) {
    return charbit_reduce(d, Embedding::identity(d.vertex_count()));
}

namespace {

// State for the tournament bicover loop: W as a topological order
// (order_w) and the outside vertices as a linear order (order_out).
struct BicoverState {
    Digraph graph;
    std::vector<int> order_w;
    std::vector<int> order_out;

    std::vector<int> w_vertices() const {
        std::vector<int> w = order_w;
        std::sort(w.begin(), w.end());
        return w;
    }

    // Backward arcs within the outside set, as (tail position, head
    // position) pairs; gap = tail_pos - head_pos >= 1.
    struct BackArc {
        int gap;
        int head_pos;
        int tail_pos;
        auto operator<=>(const BackArc&) const = default;
    };

    std::vector<BackArc> backward_arcs() const {
        std::vector<BackArc> out;
        const int k = static_cast<int>(order_out.size());
        for (int hp = 0; hp < k; ++hp)
            for (int tp = hp + 1; tp < k; ++tp)
                if (graph.has_arc(order_out[tp], order_out[hp]))
                    out.push_back({tp - hp, hp, tp});
        return out;
    }
};

std::vector<int> topo_of_subset(const Digraph& d, std::vector<int> verts) {
    // Kahn restricted to the subset; deterministic by ascending id.
    std::sort(verts.begin(), verts.end());
    std::vector<int> order;
    std::vector<char> used(verts.size(), 0);
    while (order.size() < verts.size()) {
        bool progressed = false;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            if (used[i]) continue;
            bool source = true;
            for (std::size_t j = 0; j < verts.size() && source; ++j)
                if (!used[j] && j != i && d.has_arc(verts[j], verts[i])) source = false;
            if (source) {
                used[i] = 1;
                order.push_back(verts[i]);
                progressed = true;
                break;
            }
        }
        if (!progressed) throw std::logic_error("topo_of_subset: subset not acyclic");
    }
    return order;
}

}  // namespace

TournamentBicover bicover_tournament(const Digraph& d, const std::vector<int>& seed_set) {
    if (!is_tournament(d)) throw std::invalid_argument("bicover_tournament: not a tournament");
    for (int v : seed_set)
        if (v < 0 || v >= d.vertex_count())
            throw std::invalid_argument("bicover_tournament: seed vertex out of range");
    {
        std::vector<int> dedup = seed_set;
        std::sort(dedup.begin(), dedup.end());
        dedup.erase(std::unique(dedup.begin(), dedup.end()), dedup.end());
        if (dedup.size() != seed_set.size())
            throw std::invalid_argument("bicover_tournament: duplicate seed vertex");
    }
    if (!induced_acyclic(d, seed_set))
        throw std::invalid_argument("bicover_tournament: seed set induces a cycle");

    const int n = d.vertex_count();
    BicoverState st{d, {}, {}};

    // Greedy maximal acyclic superset of the seed, scanned in id order.
    std::vector<int> w = seed_set;
    std::vector<char> in_w(n, 0);
    for (int v : w) in_w[v] = 1;
    for (int v = 0; v < n; ++v) {
        if (in_w[v]) continue;
        w.push_back(v);
        if (induced_acyclic(d, w)) {
            in_w[v] = 1;
        } else {
            w.pop_back();
        }
    }
    st.order_w = topo_of_subset(d, w);
    for (int v = 0; v < n; ++v)
        if (!in_w[v]) st.order_out.push_back(v);

    TournamentBicover result;
    BicoverStep prev{n + 1, 0, 0};
    while (true) {
        auto back = st.backward_arcs();
        BicoverStep now{static_cast<int>(st.order_out.size()), static_cast<int>(back.size()), 0};
        if (!back.empty()) now.gap = std::min_element(back.begin(), back.end())->gap;
        if (!result.potential_trace.empty() && !(now < prev))
            throw std::logic_error("bicover_tournament: potential did not decrease");
        result.potential_trace.push_back(now);
        prev = now;
        if (back.empty()) break;

        auto pick = *std::min_element(back.begin(), back.end());
        const int k = pick.gap;
        const int x = st.order_out[pick.head_pos];
        const int y = st.order_out[pick.tail_pos];

        if (k == 1) {
            std::swap(st.order_out[pick.head_pos], st.order_out[pick.tail_pos]);
            continue;
        }

        // Try absorbing y into W first.
        {
            std::vector<int> grown = st.order_w;
            grown.push_back(y);
            if (induced_acyclic(st.graph, grown)) {
                st.order_w = topo_of_subset(st.graph, grown);
                st.order_out.erase(st.order_out.begin() + pick.tail_pos);
                continue;
            }
        }

        // First W-consecutive pair u < v (in order_w) with y->u and v->y.
        int u = -1, v = -1;
        for (std::size_t i = 0; i + 1 < st.order_w.size(); ++i) {
            int a = st.order_w[i], b = st.order_w[i + 1];
            if (st.graph.has_arc(y, a) && st.graph.has_arc(b, y)) {
                u = a;
                v = b;
                break;
            }
        }
        if (u < 0)
            throw std::logic_error("bicover_tournament: no pivot pair although y not absorbable");

        const int xk1 = st.order_out[pick.tail_pos - 1];
        if (st.graph.has_arc(u, xk1)) {
            Cycle tri({y, u, xk1});
            st.graph = reverse_cycle(st.graph, tri);
            result.sequence.cycles.push_back(std::move(tri));
            std::swap(st.order_out[pick.tail_pos - 1], st.order_out[pick.tail_pos]);
        } else {
            Cycle five({y, x, xk1, u, v});
            st.graph = reverse_cycle(st.graph, five);
            result.sequence.cycles.push_back(std::move(five));
            auto itu = std::find(st.order_w.begin(), st.order_w.end(), u);
            auto itv = std::find(st.order_w.begin(), st.order_w.end(), v);
            std::iter_swap(itu, itv);
        }
    }

    result.cover.part_one = st.w_vertices();
    result.cover.part_two = st.order_out;
    std::sort(result.cover.part_two.begin(), result.cover.part_two.end());
    assert(validate_bicover(st.graph, result.cover));
    return result;
}

namespace {

std::string state_key(const Digraph& d) {
    std::string key;
    key.reserve(d.arc_count() * 2);
    for (const auto& [u, v] : d.arcs()) {
        key.push_back(static_cast<char>(u));
        key.push_back(static_cast<char>(v));
    }
    return key;
}

constexpr std::size_t kCrsCycleCap = 1u << 22;

std::vector<Cycle> crs_moves(const Digraph& d, MoveSet moves) {
    return moves == MoveSet::Triangles ? enumerate_triangles(d)
                                       : enumerate_simple_cycles(d, kCrsCycleCap);
}

}  // namespace

std::optional<int> crs_exact(const Digraph& d, int budget, MoveSet moves) {
    if (d.vertex_count() > 255)
        throw std::invalid_argument("crs_exact: state search limited to n <= 255");
    if (find_bicover(d)) return 0;
    std::unordered_set<std::string> visited{state_key(d)};
    std::deque<Digraph> frontier{d};
    for (int depth = 1; depth <= budget; ++depth) {
        std::deque<Digraph> next;
        for (const auto& g : frontier) {
            for (const auto& c : crs_moves(g, moves)) {
                Digraph g2 = reverse_cycle(g, c);
                auto key = state_key(g2);
                if (!visited.insert(std::move(key)).second) continue;
                if (find_bicover(g2)) return depth;
                next.push_back(std::move(g2));
            }
        }
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    return std::nullopt;
}

ReversalSequence transform_same_score(const Digraph& from, const Digraph& to) {
    if (from.vertex_count() != to.vertex_count())
        throw std::invalid_argument("transform_same_score: vertex sets differ");
    if (!is_tournament(from) || !is_tournament(to))
        throw std::invalid_argument("transform_same_score: both digraphs must be tournaments");
    const int n = from.vertex_count();
    for (int v = 0; v < n; ++v)
        if (from.out_degree(v) != to.out_degree(v))
            throw std::invalid_argument("transform_same_score: score mismatch at vertex " +
                                        std::to_string(v));

    // Disagreement arcs form a balanced subdigraph of `from`; peel
    // arc-disjoint simple cycles off it.
    std::vector<std::vector<int>> delta(n);
    std::size_t remaining = 0;
    for (const auto& [u, v] : from.arcs()) {
        if (to.has_arc(v, u)) {
            delta[u].push_back(v);
            ++remaining;
        }
    }
    for (auto& lst : delta) std::sort(lst.begin(), lst.end());

    ReversalSequence seq;
    while (remaining > 0) {
        int start = 0;
        while (delta[start].empty()) ++start;
        std::vector<int> walk{start};
        std::vector<int> pos(n, -1);
        pos[start] = 0;
        while (true) {
            int x = walk.back();
            assert(!delta[x].empty());
            int y = delta[x].front();
            if (pos[y] >= 0) {
                std::vector<int> verts(walk.begin() + pos[y], walk.end());
                for (std::size_t i = 0; i < verts.size(); ++i) {
                    int a = verts[i];
                    int b = verts[(i + 1) % verts.size()];
                    auto& lst = delta[a];
                    lst.erase(std::find(lst.begin(), lst.end(), b));
                    --remaining;
                }
                seq.cycles.emplace_back(std::move(verts));
                break;
            }
            pos[y] = static_cast<int>(walk.size());
            walk.push_back(y);
        }
    }
    return seq;
}

}  // namespace cyclerev
