#include <algorithm>
#include <set>

#include "cyclerev/digraph.hpp"
#include "cyclerev/generators.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cyclerev;

namespace {

Digraph three_cycle() { return Digraph(3, {{0, 1}, {1, 2}, {2, 0}}); }

}  // namespace

TEST_CASE("build validates arcs") {
    CHECK(three_cycle().arc_count() == 3);
    CHECK(Digraph(1, {}).vertex_count() == 1);
    CHECK_THROWS_AS(Digraph(2, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Digraph(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Digraph(3, {{0, 1}, {0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Digraph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_WITH(Digraph(2, {{0, 1}, {1, 0}}), doctest::Contains("(1,0)"));
}

TEST_CASE("is_tournament") {
    CHECK(is_tournament(three_cycle()));
    CHECK_FALSE(is_tournament(Digraph(3, {{0, 1}})));
    CHECK(is_tournament(transitive(5)));
    CHECK(is_tournament(Digraph(0, {})));
}

TEST_CASE("cycle shape invariants") {
    CHECK_THROWS_AS(Cycle({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Cycle({0, 1, 0}), std::invalid_argument);
    CHECK(Cycle({0, 1, 2}) == Cycle({1, 2, 0}));       // rotation
    CHECK_FALSE(Cycle({0, 1, 2}) == Cycle({0, 2, 1}));  // reflection differs
}

TEST_CASE("reverse_cycle flips exactly the cycle arcs") {
    Digraph d = three_cycle();
    Digraph r = reverse_cycle(d, Cycle({0, 1, 2}));
    CHECK(r == Digraph(3, {{1, 0}, {2, 1}, {0, 2}}));

    SUBCASE("involution with the reversed vertex order") {
        Cycle c({0, 1, 2});
        Digraph back = reverse_cycle(r, c.reversed());
        CHECK(back == d);
    }
    SUBCASE("invalid cycle in an acyclic digraph") {
        CHECK_THROWS_AS(reverse_cycle(transitive(4), Cycle({0, 1, 2})), std::invalid_argument);
    }
}

TEST_CASE("apply_sequence folds stepwise and fails atomically") {
    Digraph d = three_cycle();
    CHECK(apply_sequence(d, {}).graph == d);

    ReversalSequence involution{{Cycle({0, 1, 2}), Cycle({2, 1, 0})}};
    auto out = apply_sequence(d, involution);
    CHECK(out.ok());
    CHECK(out.graph == d);

    // Second cycle only exists because the first reversal flipped (0,1).
    Digraph t4 = Digraph(4, {{0, 1}, {1, 2}, {2, 0}, {1, 3}, {3, 0}});
    ReversalSequence chained{{Cycle({0, 1, 2}), Cycle({1, 0, 2})}};
    // Stepwise oracle: simulate by hand.
    Digraph mid = reverse_cycle(t4, chained.cycles[0]);
    REQUIRE(is_valid_cycle(mid, chained.cycles[1]));
    auto chained_out = apply_sequence(t4, chained);
    CHECK(chained_out.ok());
    CHECK(chained_out.graph == reverse_cycle(mid, chained.cycles[1]));

    SUBCASE("failure reports the step and returns the input unchanged") {
        ReversalSequence bad{{Cycle({0, 1, 2}), Cycle({0, 1, 2})}};
        auto fail = apply_sequence(d, bad);
        REQUIRE_FALSE(fail.ok());
        CHECK(*fail.failed_step == 1);
        CHECK(fail.graph == d);
    }
}

TEST_CASE("strong_components in condensation order") {
    auto singletons = strong_components(transitive(4));
    REQUIRE(singletons.size() == 4);
    CHECK(singletons[0] == std::vector<int>{0});
    CHECK(singletons[3] == std::vector<int>{3});

    auto one = strong_components(three_cycle());
    REQUIRE(one.size() == 1);
    CHECK(one[0] == std::vector<int>{0, 1, 2});

    // Paley(7) is strongly connected: every vertex reaches every other.
    Digraph p7 = paley(7);
    for (int s = 0; s < 7; ++s) {
        std::vector<char> seen(7, 0);
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : p7.out_neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        CHECK(std::count(seen.begin(), seen.end(), 1) == 7);
    }
    auto comps = strong_components(p7);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].size() == 7);

    SUBCASE("arcs between components always point forward") {
        SplitMix64 rng(11);
        for (int i = 0; i < 20; ++i) {
            Digraph d = oracles::random_digraph(8, 400, rng);
            auto comps8 = strong_components(d);
            std::vector<int> index(8, -1);
            for (std::size_t c = 0; c < comps8.size(); ++c)
                for (int v : comps8[c]) index[v] = static_cast<int>(c);
            for (const auto& [u, v] : d.arcs()) CHECK(index[u] <= index[v]);
        }
    }
}

TEST_CASE("topological_order") {
    CHECK(topological_order(transitive(3)) == std::vector<int>{0, 1, 2});
    CHECK_FALSE(topological_order(three_cycle()).has_value());
    CHECK(topological_order(Digraph(1, {})) == std::vector<int>{0});
}

TEST_CASE("find_cycle") {
    auto c = find_cycle(three_cycle());
    REQUIRE(c.has_value());
    CHECK(*c == Cycle({0, 1, 2}));
    CHECK_FALSE(find_cycle(transitive(6)).has_value());

    auto pc = find_cycle(paley(7));
    REQUIRE(pc.has_value());
    CHECK(is_valid_cycle(paley(7), *pc));
}

TEST_CASE("enumerate_simple_cycles") {
    CHECK(enumerate_simple_cycles(three_cycle(), 10).size() == 1);
    CHECK(enumerate_simple_cycles(transitive(5), 10).empty());

    // Triple-scan oracle fixes the Paley(7) triangle count at 14.
    Digraph p7 = paley(7);
    CHECK(oracles::triangle_count_by_triples(p7) == 14);
    auto cycles = enumerate_simple_cycles(p7, 1 << 20);
    int triangles = 0;
    for (const auto& c : cycles) {
        CHECK(is_valid_cycle(p7, c));
        if (c.length() == 3) ++triangles;
    }
    CHECK(triangles == 14);
    CHECK(enumerate_triangles(p7).size() == 14);

    SUBCASE("agrees with the subset oracle") {
        SplitMix64 rng(5);
        for (int i = 0; i < 15; ++i) {
            Digraph d = oracles::random_digraph(7, 500, rng);
            CHECK(enumerate_simple_cycles(d, 1 << 20).size() == oracles::all_cycles(d).size());
        }
    }
    SUBCASE("cap exceeded") {
        CHECK_THROWS_AS(enumerate_simple_cycles(p7, 3), CycleCapExceeded);
    }
}

TEST_CASE("conservation properties under reversal sequences") {
    SplitMix64 rng(99);
    for (int i = 0; i < 25; ++i) {
        int n = 4 + static_cast<int>(rng.below(7));
        Digraph d = random_tournament(n, rng.next());
        ReversalSequence s = oracles::random_sequence(d, 8, rng);
        auto out = apply_sequence(d, s);
        REQUIRE(out.ok());
        CHECK(out_degrees(out.graph) == out_degrees(d));
        CHECK(in_degrees(out.graph) == in_degrees(d));
        CHECK(strong_components(out.graph) == strong_components(d));
        CHECK(out.graph.arc_count() == d.arc_count());
        if (!s.cycles.empty()) {
            Digraph once = reverse_cycle(d, s.cycles.front());
            CHECK(reverse_cycle(once, s.cycles.front().reversed()) == d);
        }
    }
}

TEST_CASE("find_cycle absent iff topological order exists") {
    SplitMix64 rng(7);
    for (int i = 0; i < 40; ++i) {
        Digraph d = oracles::random_digraph(6, 350, rng);
        CHECK(find_cycle(d).has_value() != topological_order(d).has_value());
    }
}
