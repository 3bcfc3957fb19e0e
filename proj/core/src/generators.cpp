#include "cyclerev/generators.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace cyclerev {

Digraph transitive(int n) {
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) arcs.push_back({i, j});
    return Digraph(n, std::move(arcs));
}

Digraph random_tournament(int n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            arcs.push_back(rng.coin() ? Arc{i, j} : Arc{j, i});
    return Digraph(n, std::move(arcs));
}

Digraph paley(int p) {
    if (p < 3) throw std::invalid_argument("paley: order must be an odd prime >= 3");
    for (int f = 2; f * f <= p; ++f)
        if (p % f == 0) throw std::invalid_argument("paley: " + std::to_string(p) + " not prime");
    if (p % 4 != 3)
        throw std::invalid_argument("paley: " + std::to_string(p) + " is not 3 mod 4");

    std::vector<char> residue(p, 0);
    for (int x = 1; x < p; ++x) residue[static_cast<int>((static_cast<long long>(x) * x) % p)] = 1;
    // -1 is a non-residue when p = 3 (mod 4), so exactly one of (j-i),
    // (i-j) is a residue per pair and this orients every pair once.
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(p) * (p - 1) / 2);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            if (i != j && residue[((j - i) % p + p) % p]) arcs.push_back({i, j});
    return Digraph(p, std::move(arcs));
}

Digraph blowup(const Digraph& d, const std::vector<Digraph>& parts) {
    if (!is_tournament(d)) throw std::invalid_argument("blowup: base is not a tournament");
    if (static_cast<int>(parts.size()) != d.vertex_count())
        throw std::invalid_argument("blowup: need one part per base vertex");
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (!is_tournament(parts[i]))
            throw std::invalid_argument("blowup: part " + std::to_string(i) +
                                        " is not a tournament");

    std::vector<int> offset(parts.size() + 1, 0);
    for (std::size_t i = 0; i < parts.size(); ++i)
        offset[i + 1] = offset[i] + parts[i].vertex_count();

    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (const auto& [u, v] : parts[i].arcs())
            arcs.push_back({offset[i] + u, offset[i] + v});
    for (const auto& [x, y] : d.arcs())
        for (int u = offset[x]; u < offset[x + 1]; ++u)
            for (int v = offset[y]; v < offset[y + 1]; ++v) arcs.push_back({u, v});
    return Digraph(offset.back(), std::move(arcs));
}

Digraph iterated_construction(const Digraph& base, int copies) {
    if (copies < 2) throw std::invalid_argument("iterated_construction: need at least 2 copies");
    const int n = base.vertex_count();
    std::vector<Arc> arcs;
    for (int c = 0; c < copies; ++c)
        for (const auto& [u, v] : base.arcs()) arcs.push_back({c * n + u, c * n + v});
    for (int c = 0; c < copies; ++c) {
        int next = (c + 1) % copies;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) arcs.push_back({c * n + u, next * n + v});
    }
    return Digraph(copies * n, std::move(arcs));
}

}  // namespace cyclerev
