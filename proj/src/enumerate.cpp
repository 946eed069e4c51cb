#include "zf/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace zf {

namespace {

    constexpr int kmax_canon = 11; // 55 triangle bits

    struct CanonSearch {
        const Graph* g = nullptr;
        int n = 0;
        int total_bits = 0;
        std::uint64_t best = ~0ULL;
        std::vector<int> placed;
        std::vector<bool> used;

        void dfs(int depth, std::uint64_t prefix, int prefix_bits)
        {
            if (depth == n) {
                if (prefix < best)
                    best = prefix;
                return;
            }
            std::vector<std::pair<std::uint64_t, int>> cand;
            for (int v = 0; v < n; ++v) {
                if (used[v])
                    continue;
                std::uint64_t col = 0;
                for (int i = 0; i < depth; ++i)
                    col = (col << 1) | (g->has_edge(placed[i], v) ? 1ULL : 0ULL);
                cand.emplace_back(col, v);
            }
            std::sort(cand.begin(), cand.end());
            for (auto [col, v] : cand) {
                std::uint64_t np = (prefix << depth) | col;
                int nb = prefix_bits + depth;
                if (np > (best >> (total_bits - nb)))
                    break; // sorted ascending, the rest only get worse
                used[v] = true;
                placed.push_back(v);
                dfs(depth + 1, np, nb);
                placed.pop_back();
                used[v] = false;
            }
        }
    };

    std::uint64_t triangle_bits_of(const Graph& g)
    {
        // labeled (identity-order) bitstring, for building candidates
        std::uint64_t bits = 0;
        for (int j = 1; j < g.order(); ++j)
            for (int i = 0; i < j; ++i)
                bits = (bits << 1) | (g.has_edge(i, j) ? 1ULL : 0ULL);
        return bits;
    }

    Graph graph_from_bits(int n, std::uint64_t bits)
    {
        int total = n * (n - 1) / 2;
        std::vector<Edge> edges;
        int idx = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) {
                if ((bits >> (total - 1 - idx)) & 1ULL)
                    edges.emplace_back(i, j);
                ++idx;
            }
        return Graph::from_edge_list(n, edges);
    }

} // namespace

std::uint64_t canonical_bits(const Graph& g)
{
    if (g.order() > kmax_canon)
        throw std::invalid_argument("canonical_bits: order above " + std::to_string(kmax_canon));
    if (g.order() <= 1)
        return 0;
    CanonSearch s;
    s.g = &g;
    s.n = g.order();
    s.total_bits = s.n * (s.n - 1) / 2;
    s.used.assign(s.n, false);
    s.placed.reserve(s.n);
    s.dfs(0, 0, 0);
    return s.best;
}

Graph canonical_form(const Graph& g) { return graph_from_bits(g.order(), canonical_bits(g)); }

const std::vector<Graph>& enumerate_graphs(int n, bool connected_only)
{
    if (n < 1 || n > 8)
        throw std::invalid_argument("enumerate_graphs: order must be in 1..8");
    static std::mutex mu;
    static std::map<std::pair<int, bool>, std::vector<Graph>> cache;
    std::lock_guard<std::mutex> lock(mu);

    // extend every graph on t-1 vertices by one vertex with every possible
    // neighborhood, deduplicating by canonical bitstring
    for (int t = 1; t <= n; ++t) {
        if (cache.count({ t, false }))
            continue;
        if (t == 1) {
            cache[{ 1, false }] = { Graph::from_edge_list(1, {}) };
            continue;
        }
        std::set<std::uint64_t> keys;
        for (const auto& base : cache[{ t - 1, false }]) {
            std::uint64_t base_bits = triangle_bits_of(base);
            for (unsigned long mask = 0; mask < (1UL << (t - 1)); ++mask) {
                std::uint64_t bits = (base_bits << (t - 1)) | mask;
                keys.insert(canonical_bits(graph_from_bits(t, bits)));
            }
        }
        std::vector<Graph> out;
        out.reserve(keys.size());
        for (auto k : keys)
            out.push_back(graph_from_bits(t, k));
        cache[{ t, false }] = std::move(out);
    }
    if (!connected_only)
        return cache[{ n, false }];

    if (!cache.count({ n, true })) {
        std::vector<Graph> conn;
        for (const auto& g : cache[{ n, false }])
            if (is_connected(g))
                conn.push_back(g);
        cache[{ n, true }] = std::move(conn);
    }
    return cache[{ n, true }];
}

} // namespace zf
