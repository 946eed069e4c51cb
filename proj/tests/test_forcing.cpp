#include "zf/forcing.hpp"

#include "oracles.hpp"
#include "zf/enumerate.hpp"
#include "zf/families.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace zf;
using zf::testing::ProcessOracle;
using zf::testing::replay_valid;

namespace {

VertexSet random_subset(std::mt19937& gen, int n)
{
    VertexSet s;
    for (int v = 0; v < n; ++v)
        if (gen() % 2)
            s.set(v);
    return s;
}

// exhaustive application in a random order; must agree with closure()
VertexSet random_order_closure(const Graph& g, VertexSet blue, const VertexSet& leaks,
    std::mt19937& gen)
{
    for (;;) {
        auto fs = valid_forces(g, blue, leaks);
        if (fs.empty())
            return blue;
        const auto& f = fs[gen() % fs.size()];
        blue.set(f.target);
    }
}

} // namespace

TEST_CASE("valid_forces on a path")
{
    Graph p3 = path_graph(3);
    CHECK(valid_forces(p3, VertexSet::of({ 1 }), {}).empty());
    CHECK(valid_forces(p3, VertexSet::of({ 0 }), {})
        == std::vector<Force> { Force { 0, 1 } });
    CHECK(valid_forces(p3, VertexSet::of({ 0 }), VertexSet::of({ 0 })).empty());
}

TEST_CASE("closure examples")
{
    Graph p3 = path_graph(3);
    CHECK(closure(p3, VertexSet::of({ 0 }), {}) == p3.vertices());
    CHECK(closure(p3, VertexSet::of({ 0 }), VertexSet::of({ 1 })) == VertexSet::of({ 0, 1 }));

    // one clique side of the prism stalls once the other clique vertices leak
    Graph prism = clique_prism_graph(2);
    VertexSet u_side = VertexSet::of({ 0, 1, 2 });
    VertexSet stalled = closure(prism, u_side, VertexSet::of({ 1, 2 }));
    CHECK(stalled == VertexSet::of({ 0, 1, 2, 3 }));

    CHECK(closure(p3, p3.vertices(), {}) == p3.vertices());
    CHECK(closure(p3, VertexSet {}, {}) == VertexSet {});
    // a white leak never fires but can still be forced
    CHECK(closure(p3, VertexSet::of({ 0 }), VertexSet::of({ 2 })) == p3.vertices());
}

TEST_CASE("closure monotonicity properties")
{
    std::mt19937 gen(101);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 2 + static_cast<int>(gen() % 6);
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (gen() % 2)
                    edges.emplace_back(i, j);
        Graph g = Graph::from_edge_list(n, edges);
        VertexSet b = random_subset(gen, n);
        VertexSet extra = random_subset(gen, n);
        VertexSet leaks = random_subset(gen, n);
        VertexSet fewer_leaks = leaks - random_subset(gen, n);

        // monotone in the blue set
        CHECK(closure(g, b, leaks).is_subset_of(closure(g, b | extra, leaks)));
        // antitone in the leak set
        CHECK(closure(g, b, leaks).is_subset_of(closure(g, b, fewer_leaks)));
        // idempotent
        VertexSet c = closure(g, b, leaks);
        CHECK(closure(g, c, leaks) == c);
    }
}

TEST_CASE("closure is order independent")
{
    std::mt19937 gen(202);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + static_cast<int>(gen() % 6);
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (gen() % 2)
                    edges.emplace_back(i, j);
        Graph g = Graph::from_edge_list(n, edges);
        VertexSet b = random_subset(gen, n);
        VertexSet leaks = random_subset(gen, n);
        VertexSet expect = closure(g, b, leaks);
        CHECK(random_order_closure(g, b, leaks, gen) == expect);
    }
}

TEST_CASE("run_process is deterministic and matches closure")
{
    Graph p3 = path_graph(3);
    ForcingProcess p = run_process(p3, VertexSet::of({ 0 }), {});
    CHECK(p.steps == std::vector<Force> { Force { 0, 1 }, Force { 1, 2 } });
    CHECK(p.complete());
    CHECK(replay_valid(p3, p));

    Graph c4 = cycle_graph(4);
    ForcingProcess pc = run_process(c4, VertexSet::of({ 0, 1 }), {});
    CHECK(pc.steps.size() == 2);
    CHECK(pc.complete());

    ForcingProcess all_blue = run_process(p3, p3.vertices(), {});
    CHECK(all_blue.steps.empty());

    std::mt19937 gen(303);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(gen() % 7);
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (gen() % 2)
                    edges.emplace_back(i, j);
        Graph g = Graph::from_edge_list(n, edges);
        VertexSet b = random_subset(gen, n);
        VertexSet leaks = random_subset(gen, n);
        ForcingProcess pr = run_process(g, b, leaks);
        CHECK(pr.final_set == closure(g, b, leaks));
        CHECK(replay_valid(g, pr));
    }
}

TEST_CASE("chains partition the process")
{
    Graph p3 = path_graph(3);
    auto cs = chains(run_process(p3, VertexSet::of({ 0 }), {}));
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].vertices == std::vector<int> { 0, 1, 2 });

    auto singletons = chains(run_process(p3, p3.vertices(), {}));
    CHECK(singletons.size() == 3);
    for (const auto& c : singletons)
        CHECK(c.vertices.size() == 1);

    Graph c4 = cycle_graph(4);
    auto two = chains(run_process(c4, VertexSet::of({ 0, 1 }), {}));
    REQUIRE(two.size() == 2);
    CHECK(two[0].vertices.size() == 2);
    CHECK(two[1].vertices.size() == 2);

    std::mt19937 gen(404);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + static_cast<int>(gen() % 7);
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (gen() % 2)
                    edges.emplace_back(i, j);
        Graph g = Graph::from_edge_list(n, edges);
        VertexSet b = random_subset(gen, n);
        ForcingProcess p = run_process(g, b, {});
        auto all = chains(p);
        CHECK(all.size() == static_cast<std::size_t>(b.count()));
        VertexSet covered;
        int total = 0;
        for (const auto& c : all) {
            REQUIRE(!c.vertices.empty());
            CHECK(b.test(c.vertices.front()));
            for (int v : c.vertices)
                covered.set(v);
            total += static_cast<int>(c.vertices.size());
        }
        CHECK(covered == p.final_set);
        CHECK(total == p.final_set.count()); // partition, no overlap
    }
}

TEST_CASE("reversal")
{
    Graph p5 = path_graph(5);
    CHECK(reversal(run_process(p5, VertexSet::of({ 0 }), {})) == VertexSet::of({ 4 }));
    CHECK(reversal(run_process(p5, p5.vertices(), {})) == p5.vertices());

    Graph c4 = cycle_graph(4);
    ForcingProcess pc = run_process(c4, VertexSet::of({ 0, 1 }), {});
    CHECK(reversal(pc) == VertexSet::of({ 2, 3 }));

    ForcingProcess stalled = run_process(path_graph(3), VertexSet::of({ 1 }), {});
    CHECK_THROWS_AS(reversal(stalled), std::invalid_argument);

    std::mt19937 gen(505);
    int checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + static_cast<int>(gen() % 6);
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (gen() % 2)
                    edges.emplace_back(i, j);
        Graph g = Graph::from_edge_list(n, edges);
        VertexSet b = random_subset(gen, n);
        ForcingProcess p = run_process(g, b, {});
        if (!p.complete())
            continue;
        ++checked;
        VertexSet r = reversal(p);
        CHECK(r.count() == b.count());
        // a reversal of a zero forcing set is again a zero forcing set
        CHECK(closure(g, r, {}) == g.vertices());
    }
    CHECK(checked > 20);
}

TEST_CASE("possible_forces examples")
{
    Graph p3 = path_graph(3);
    CHECK(possible_forces(p3, VertexSet::of({ 1 }), {}).empty());
    CHECK(possible_forces(p3, VertexSet::of({ 0 }), {})
        == std::vector<Force> { Force { 0, 1 }, Force { 1, 2 } });

    Graph c4 = cycle_graph(4);
    CHECK(forcers_of(c4, VertexSet::of({ 0, 1 }), {}, 2) == VertexSet::of({ 1, 3 }));
    CHECK(forcers_of(c4, VertexSet::of({ 0, 1 }), {}, 3) == VertexSet::of({ 0, 2 }));
    CHECK(forcers_of(c4, VertexSet::of({ 0, 1 }), VertexSet::of({ 1 }), 2)
        == VertexSet::of({ 3 }));

    // each prism vertex across from the blue clique has l+1 = 3 forcers
    Graph prism = clique_prism_graph(2);
    VertexSet u_side = VertexSet::of({ 0, 1, 2 });
    CHECK(forcers_of(prism, u_side, {}, 3) == VertexSet::of({ 0, 4, 5 }));
}

TEST_CASE("possible_forces equals brute-force process enumeration")
{
    // every graph on <= 4 vertices, every blue set, with and without leaks;
    // the 5-vertex sweep runs in the acceptance suite
    for (int n = 1; n <= 4; ++n) {
        for (const auto& g : enumerate_graphs(n, false)) {
            for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
                VertexSet b;
                for (int v = 0; v < n; ++v)
                    if ((mask >> v) & 1)
                        b.set(v);
                for (unsigned long lk = 0; lk < (1UL << n); lk += 3) {
                    VertexSet leaks;
                    for (int v = 0; v < n; ++v)
                        if ((lk >> v) & 1)
                            leaks.set(v);
                    ProcessOracle oracle(g, leaks);
                    auto expect = oracle.possible(b);
                    std::set<std::pair<int, int>> got;
                    for (const auto& f : possible_forces(g, b, leaks))
                        got.insert({ f.source, f.target });
                    CHECK(got == expect);
                }
            }
        }
    }
}

TEST_CASE("switch_processes")
{
    Graph c4 = cycle_graph(4);
    VertexSet b = VertexSet::of({ 0, 1 });
    ForcingProcess p = run_process(c4, b, {});

    // alt = p: any reachable mid set gives back p's force set
    VertexSet mid = b;
    mid.set(p.steps[0].target);
    ForcingProcess same = switch_processes(c4, p, p, mid);
    CHECK(replay_valid(c4, same));
    std::vector<Force> sorted_same = same.steps, sorted_p = p.steps;
    std::sort(sorted_same.begin(), sorted_same.end());
    std::sort(sorted_p.begin(), sorted_p.end());
    CHECK(sorted_same == sorted_p);

    // a genuinely different second process: force the cycle the other way
    ForcingProcess alt;
    alt.n = 4;
    alt.initial = b;
    alt.steps = { Force { 1, 2 }, Force { 0, 3 } };
    alt.final_set = c4.vertices();
    CHECK(replay_valid(c4, alt));

    // mid = initial: the hybrid is exactly alt's force set
    ForcingProcess from_alt = switch_processes(c4, p, alt, b);
    std::vector<Force> sorted_alt = alt.steps, sorted_hybrid = from_alt.steps;
    std::sort(sorted_alt.begin(), sorted_alt.end());
    std::sort(sorted_hybrid.begin(), sorted_hybrid.end());
    CHECK(sorted_hybrid == sorted_alt);

    // one step of p, then alt finishes
    ForcingProcess hybrid = switch_processes(c4, p, alt, mid);
    CHECK(replay_valid(c4, hybrid));
    CHECK(hybrid.complete());

    // unreachable mid set
    VertexSet bogus = VertexSet::of({ 0, 1, 2, 3 });
    bogus.reset(p.steps[0].target);
    bogus.reset(p.steps[1].target);
    CHECK_THROWS_AS(
        switch_processes(c4, p, alt, VertexSet::of({ 2 })), std::invalid_argument);
}

TEST_CASE("switching along random processes stays valid")
{
    std::mt19937 gen(606);
    int hybrids = 0;
    for (int trial = 0; trial < 300 && hybrids < 100; ++trial) {
        int n = 2 + static_cast<int>(gen() % 5);
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (gen() % 2)
                    edges.emplace_back(i, j);
        Graph g = Graph::from_edge_list(n, edges);
        VertexSet b = random_subset(gen, n);
        ForcingProcess p = run_process(g, b, {});
        if (!p.complete())
            continue;

        // a second complete process chosen by random replay
        ForcingProcess alt;
        alt.n = n;
        alt.initial = b;
        VertexSet blue = b;
        for (;;) {
            auto fs = valid_forces(g, blue, {});
            if (fs.empty())
                break;
            const auto& f = fs[gen() % fs.size()];
            alt.steps.push_back(f);
            blue.set(f.target);
        }
        alt.final_set = blue;
        REQUIRE(alt.complete());

        // mid = prefix of p
        std::size_t cut = gen() % (p.steps.size() + 1);
        VertexSet mid = b;
        for (std::size_t i = 0; i < cut; ++i)
            mid.set(p.steps[i].target);
        ForcingProcess hybrid = switch_processes(g, p, alt, mid);
        CHECK(replay_valid(g, hybrid));
        CHECK(hybrid.complete());
        ++hybrids;
    }
    CHECK(hybrids == 100);
}
