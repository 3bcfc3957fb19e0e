#include "cyclerev/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cyclerev {

namespace {

void triangulate_into(Digraph& work, std::vector<int> verts, ReversalSequence& out) {
    while (verts.size() > 3) {
        Cycle tri({verts[0], verts[1], verts[2]});
        if (work.has_arc(verts[0], verts[2])) {
            // Diagonal points forward: peel v1 off, reverse the rest
            // first, then the triangle closes through the flipped diagonal.
            std::vector<int> sub = verts;
            sub.erase(sub.begin() + 1);
            triangulate_into(work, std::move(sub), out);
            work = reverse_cycle(work, tri);
            out.cycles.push_back(std::move(tri));
            return;
        }
        // Diagonal points backward: the triangle is already a cycle;
        // reverse it now and continue on the shortened cycle.
        work = reverse_cycle(work, tri);
        out.cycles.push_back(std::move(tri));
        verts.erase(verts.begin() + 1);
    }
    Cycle last{std::move(verts)};
    work = reverse_cycle(work, last);
    out.cycles.push_back(std::move(last));
}

}  // namespace

ReversalSequence triangulate_cycle(const Digraph& d, const Cycle& c, int anchor) {
    if (!is_tournament(d))
        throw std::invalid_argument("triangulate_cycle: digraph is not a tournament");
    if (!c.contains_vertex(anchor))
        throw std::invalid_argument("triangulate_cycle: anchor " + std::to_string(anchor) +
                                    " not on the cycle");
    if (!is_valid_cycle(d, c)) throw std::invalid_argument("triangulate_cycle: invalid cycle");

    const auto& vs = c.vertices();
    auto at = std::find(vs.begin(), vs.end(), anchor);
    std::vector<int> rotated(at, vs.end());
    rotated.insert(rotated.end(), vs.begin(), at);

    ReversalSequence out;
    Digraph work = d;
    triangulate_into(work, std::move(rotated), out);
    return out;
}

ReversalSequence triangulate_sequence(const Digraph& d, const ReversalSequence& s) {
    ReversalSequence out;
    Digraph work = d;
    for (const auto& c : s.cycles) {
        ReversalSequence part = triangulate_cycle(work, c, c.vertices().front());
        work = reverse_cycle(work, c);
        for (auto& tri : part.cycles) out.cycles.push_back(std::move(tri));
    }
    return out;
}

std::vector<std::size_t> edge_stabilizer(const ReversalSequence& s, const Edge& e) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < s.cycles.size(); ++i)
        if (s.cycles[i].contains_edge(e)) out.push_back(i);
    return out;
}

std::vector<ReversalSequence> canonical_decomposition(const Digraph& d,
                                                      const ReversalSequence& s) {
    if (auto outcome = apply_sequence(d, s); !outcome.ok())
        throw std::invalid_argument("canonical_decomposition: sequence invalid at step " +
                                    std::to_string(*outcome.failed_step));

    // Union-find over cycle indices, linked through shared edges.
    std::vector<std::size_t> root(s.cycles.size());
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](std::size_t x) {
        while (root[x] != x) x = root[x] = root[root[x]];
        return x;
    };
    std::map<Edge, std::size_t> owner;
    for (std::size_t i = 0; i < s.cycles.size(); ++i) {
        for (const auto& e : s.cycles[i].edges()) {
            auto [it, fresh] = owner.emplace(e, i);
            if (!fresh) root[find(i)] = find(it->second);
        }
    }

    std::map<std::size_t, std::size_t> component_of_root;
    std::vector<ReversalSequence> components;
    for (std::size_t i = 0; i < s.cycles.size(); ++i) {
        auto r = find(i);
        auto [it, fresh] = component_of_root.emplace(r, components.size());
        if (fresh) components.emplace_back();
        components[it->second].cycles.push_back(s.cycles[i]);
    }
    return components;
}

bool sequences_equivalent(const Digraph& d, const ReversalSequence& s1,
                          const ReversalSequence& s2) {
    auto a = apply_sequence(d, s1);
    if (!a.ok())
        throw std::invalid_argument("sequences_equivalent: first sequence invalid at step " +
                                    std::to_string(*a.failed_step));
    auto b = apply_sequence(d, s2);
    if (!b.ok())
        throw std::invalid_argument("sequences_equivalent: second sequence invalid at step " +
                                    std::to_string(*b.failed_step));
    return a.graph == b.graph;
}

}  // namespace cyclerev
