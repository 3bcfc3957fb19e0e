#include "cyclerev/widgets.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <set>

namespace cyclerev {

namespace {

std::string arc_str(const Arc& a) {
    return "(" + std::to_string(a.tail) + "," + std::to_string(a.head) + ")";
}

}  // namespace

std::vector<std::vector<int>> edge_disjoint_return_paths(const Digraph& d, const Arc& a,
                                                         std::size_t limit) {
    const int n = d.vertex_count();
    if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n || !d.has_arc(a.tail, a.head))
        throw std::invalid_argument("edge_disjoint_return_paths: arc " + arc_str(a) +
                                    " not present");
    if (limit == 0) return {};
    const int src = a.head, dst = a.tail;

    // Unit-capacity max flow on the arcs of d minus a itself;
    // flow[u*n+v] = 1 when the arc u->v carries flow.
    std::vector<char> flow(static_cast<std::size_t>(n) * n, 0);
    auto usable = [&](int u, int v) { return d.has_arc(u, v) && !(u == a.tail && v == a.head); };
    std::size_t value = 0;
    while (value < limit) {
        std::vector<int> parent(n, -1);
        parent[src] = src;
        std::queue<int> bfs;
        bfs.push(src);
        while (!bfs.empty() && parent[dst] < 0) {
            int u = bfs.front();
            bfs.pop();
            for (int v = 0; v < n; ++v) {
                if (parent[v] >= 0) continue;
                bool forward = usable(u, v) && !flow[static_cast<std::size_t>(u) * n + v];
                bool undo = flow[static_cast<std::size_t>(v) * n + u] != 0;
                if (forward || undo) {
                    parent[v] = u;
                    bfs.push(v);
                }
            }
        }
        if (parent[dst] < 0) break;
        for (int v = dst; v != src; v = parent[v]) {
            int u = parent[v];
            if (usable(u, v) && !flow[static_cast<std::size_t>(u) * n + v])
                flow[static_cast<std::size_t>(u) * n + v] = 1;
            else
                flow[static_cast<std::size_t>(v) * n + u] = 0;
        }
        ++value;
    }

    // Decompose into simple paths, excising any flow cycles met on the way.
    std::vector<std::vector<int>> paths;
    for (std::size_t p = 0; p < value; ++p) {
        std::vector<int> walk{src};
        std::vector<int> pos(n, -1);
        pos[src] = 0;
        while (walk.back() != dst) {
            int u = walk.back();
            int next = -1;
            for (int v = 0; v < n; ++v) {
                if (flow[static_cast<std::size_t>(u) * n + v]) {
                    next = v;
                    break;
                }
            }
            assert(next >= 0);
            flow[static_cast<std::size_t>(u) * n + next] = 0;
            if (pos[next] >= 0) {
                // Cycle in the flow; drop it and keep walking from `next`.
                while (static_cast<int>(walk.size()) > pos[next] + 1) {
                    pos[walk.back()] = -1;
                    walk.pop_back();
                }
                continue;
            }
            pos[next] = static_cast<int>(walk.size());
            walk.push_back(next);
        }
        paths.push_back(std::move(walk));
    }
    return paths;
}

namespace {

void validate_widget_paths(const Digraph& d, const Arc& a,
                           const std::vector<std::vector<int>>& paths) {
    if (!d.has_arc(a.tail, a.head))
        throw std::invalid_argument("reverse_arc_widget: arc " + arc_str(a) + " not present");
    if (paths.empty()) throw std::invalid_argument("reverse_arc_widget: empty path family");
    std::set<Edge> used{Edge(a.tail, a.head)};
    for (std::size_t i = 0; i < paths.size(); ++i) {
        const auto& p = paths[i];
        const std::string where = "reverse_arc_widget: path " + std::to_string(i);
        if (p.size() < 2 || p.front() != a.head || p.back() != a.tail)
            throw std::invalid_argument(where + " must run from head to tail of " + arc_str(a));
        std::set<int> verts(p.begin(), p.end());
        if (verts.size() != p.size()) throw std::invalid_argument(where + ": repeated vertex");
        for (std::size_t j = 0; j + 1 < p.size(); ++j) {
            if (!d.has_arc(p[j], p[j + 1]))
                throw std::invalid_argument(where + ": missing arc (" + std::to_string(p[j]) +
                                            "," + std::to_string(p[j + 1]) + ")");
            if (!used.insert(Edge(p[j], p[j + 1])).second)
                throw std::invalid_argument(where + ": edge (" + std::to_string(p[j]) + "," +
                                            std::to_string(p[j + 1]) +
                                            ") reused across the family");
        }
        for (std::size_t j = 1; j + 1 < p.size(); ++j)
            if (p[j] == a.tail || p[j] == a.head)
                throw std::invalid_argument(where + ": interior touches the reversed arc");
        if (i > 0) {
            const auto& q = paths[i - 1];
            std::set<int> interior(q.begin() + 1, q.end() - 1);
            for (std::size_t j = 1; j + 1 < p.size(); ++j)
                if (interior.count(p[j]))
                    throw std::invalid_argument(where +
                                                ": interior overlaps the preceding path");
        }
    }
}

}  // namespace

WidgetOutcome reverse_arc_widget(const Digraph& d, const Arc& a,
                                 const std::vector<std::vector<int>>& paths) {
    validate_widget_paths(d, a, paths);
    WidgetOutcome out{.sequence = {}, .result = d};

    // C0 = u, v, interior of P0.
    {
        std::vector<int> verts{a.tail, a.head};
        verts.insert(verts.end(), paths[0].begin() + 1, paths[0].end() - 1);
        Cycle c0{std::move(verts)};
        out.result = reverse_cycle(out.result, c0);
        out.sequence.cycles.push_back(std::move(c0));
    }
    // C_{i+1} = reversed P_i followed by the interior of P_{i+1}.
    for (std::size_t i = 0; i + 1 < paths.size(); ++i) {
        std::vector<int> verts(paths[i].rbegin(), paths[i].rend());
        verts.insert(verts.end(), paths[i + 1].begin() + 1, paths[i + 1].end() - 1);
        Cycle c{std::move(verts)};
        out.result = reverse_cycle(out.result, c);
        out.sequence.cycles.push_back(std::move(c));
    }
    return out;
}

WidgetOutcome reverse_path_widget(const Digraph& d, const std::vector<int>& path,
                                  const std::vector<int>& back_indices) {
    const int m = static_cast<int>(path.size()) - 1;
    if (m < 1) throw std::invalid_argument("reverse_path_widget: path too short");
    {
        std::set<int> verts(path.begin(), path.end());
        if (verts.size() != path.size())
            throw std::invalid_argument("reverse_path_widget: repeated path vertex");
    }
    for (int i = 0; i < m; ++i)
        if (!d.has_arc(path[i], path[i + 1]))
            throw std::invalid_argument("reverse_path_widget: missing path arc (" +
                                        std::to_string(path[i]) + "," +
                                        std::to_string(path[i + 1]) + ")");
    if (back_indices.empty() || back_indices.back() != m)
        throw std::invalid_argument("reverse_path_widget: back-arc list must end at the path end");
    for (std::size_t i = 0; i < back_indices.size(); ++i) {
        int idx = back_indices[i];
        if (idx < 1 || idx > m || (i > 0 && back_indices[i - 1] >= idx))
            throw std::invalid_argument("reverse_path_widget: back-arc indices must be "
                                        "ascending positions on the path");
        if (!d.has_arc(path[idx], path[0]))
            throw std::invalid_argument("reverse_path_widget: missing back-arc (" +
                                        std::to_string(path[idx]) + "," +
                                        std::to_string(path[0]) + ")");
    }

    WidgetOutcome out{.sequence = {}, .result = d};
    {
        std::vector<int> verts(path.begin(), path.begin() + back_indices[0] + 1);
        Cycle c0{std::move(verts)};
        out.result = reverse_cycle(out.result, c0);
        out.sequence.cycles.push_back(std::move(c0));
    }
    for (std::size_t i = 0; i + 1 < back_indices.size(); ++i) {
        std::vector<int> verts{path[0]};
        for (int j = back_indices[i]; j <= back_indices[i + 1]; ++j) verts.push_back(path[j]);
        Cycle c{std::move(verts)};
        out.result = reverse_cycle(out.result, c);
        out.sequence.cycles.push_back(std::move(c));
    }
    return out;
}

ArcSetOutcome reverse_arc_set(const Digraph& d, const std::vector<Arc>& arcs) {
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        if (!(arcs[i].tail >= 0 && arcs[i].tail < d.vertex_count() && arcs[i].head >= 0 &&
              arcs[i].head < d.vertex_count()) ||
            !d.has_arc(arcs[i].tail, arcs[i].head))
            throw std::invalid_argument("reverse_arc_set: arc " + std::to_string(i) + " " +
                                        arc_str(arcs[i]) + " not present");
        for (std::size_t j = 0; j < i; ++j)
            if (arcs[j] == arcs[i])
                throw std::invalid_argument("reverse_arc_set: duplicate arc " + arc_str(arcs[i]));
    }

    std::set<Edge> used;
    for (const auto& a : arcs) used.emplace(a.tail, a.head);

    ArcSetOutcome out{.sequence = {}, .result = d, .ledger = {}};
    const int n = d.vertex_count();
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        const Arc a = arcs[i];
        // Shortest return path in the current digraph avoiding used edges.
        std::vector<int> parent(n, -1);
        parent[a.head] = a.head;
        std::queue<int> bfs;
        bfs.push(a.head);
        while (!bfs.empty() && parent[a.tail] < 0) {
            int u = bfs.front();
            bfs.pop();
            for (int v : out.result.out_neighbors(u)) {
                if (parent[v] >= 0 || used.count(Edge(u, v))) continue;
                parent[v] = u;
                bfs.push(v);
            }
        }
        if (parent[a.tail] < 0) throw InfeasibleArcError(i, a);
        std::vector<int> path;
        for (int v = a.tail; v != a.head; v = parent[v]) path.push_back(v);
        path.push_back(a.head);
        std::reverse(path.begin(), path.end());

        auto step = reverse_arc_widget(out.result, a, {path});
        out.result = std::move(step.result);
        for (auto& c : step.sequence.cycles) out.sequence.cycles.push_back(std::move(c));
        for (std::size_t j = 0; j + 1 < path.size(); ++j) used.emplace(path[j], path[j + 1]);
        out.ledger.push_back({a, std::move(path)});
    }
    return out;
}

}  // namespace cyclerev
