#include "zf/solver.hpp"

#include "zf/combinations.hpp"
#include "zf/enumerate.hpp"
#include "zf/forcing.hpp"
#include "zf/leaky.hpp"

#include <algorithm>
#include <chrono>

namespace zf {

int default_cap(int l) { return l <= 1 ? 14 : 12; }

namespace {

    using clock_type = std::chrono::steady_clock;

    double elapsed_ms(clock_type::time_point t0)
    {
        return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
    }

    std::string cache_key(const Graph& g)
    {
        // labeled adjacency key; callers resolve the same object repeatedly
        return emit_graph6(g);
    }

    VertexSet mandatory_vertices(const Graph& g, int l)
    {
        VertexSet m;
        for (int v = 0; v < g.order(); ++v)
            if (g.degree(v) <= l)
                m.set(v);
        return m;
    }

    void enforce_cap(const Graph& g, int l, const SolveOptions& opts)
    {
        int cap = opts.cap > 0 ? opts.cap : default_cap(l);
        if (g.order() > cap)
            throw cap_exceeded("exhaustive solve refused: order " + std::to_string(g.order())
                + " above cap " + std::to_string(cap) + " for l=" + std::to_string(l));
    }

    // Candidates of size k in colex order over V \ M, all containing M.
    template <typename Fn>
    void for_each_candidate(const VertexSet& m, const std::vector<int>& rest, int k, Fn&& fn)
    {
        int r = k - m.count();
        if (r < 0 || r > static_cast<int>(rest.size()))
            return;
        std::vector<int> idx;
        bool more = first_combination(idx, static_cast<int>(rest.size()), r);
        while (more) {
            VertexSet b = m;
            for (int i : idx)
                b.set(rest[i]);
            if (!fn(b))
                return;
            more = next_combination_colex(idx, static_cast<int>(rest.size()));
        }
    }

    SolveResult solve_impl(const Graph& g, int l, const SolveOptions& opts)
    {
        auto t0 = clock_type::now();
        int n = g.order();
        SolveResult res;

        if (opts.cache) {
            auto it = opts.cache->results.find({ cache_key(g), l });
            if (it != opts.cache->results.end())
                return it->second;
        }
        enforce_cap(g, l, opts);

        if (n > 0 && g.max_degree() <= l) {
            res.value = n;
            res.witness = g.vertices();
            res.bounds_used.lower = n;
            res.bounds_used.notes.push_back("max-degree<=l forces B=V");
            res.stats.millis = elapsed_ms(t0);
            if (opts.cache)
                opts.cache->results[{ cache_key(g), l }] = res;
            return res;
        }

        VertexSet m = mandatory_vertices(g, l);
        std::vector<int> rest = (g.vertices() - m).to_vector();

        int lower = n == 0 ? 0 : 1;
        if (m.count() > 0) {
            lower = std::max(lower, m.count());
            res.bounds_used.notes.push_back(
                "mandatory low-degree vertices: " + std::to_string(m.count()));
        }
        if (l >= 2 && l <= n - 3) {
            lower = std::max(lower, l + 2);
            res.bounds_used.notes.push_back("lower bound l+2");
        }
        if (l <= 1 && l <= n - 3 && !is_path(g) && !is_cycle(g)) {
            lower = std::max(lower, l + 2);
            res.bounds_used.notes.push_back("lower bound l+2 (not a path or cycle)");
        }
        if (opts.cache && l >= 1) {
            auto it = opts.cache->results.find({ cache_key(g), l - 1 });
            if (it != opts.cache->results.end() && it->second.value > lower) {
                lower = it->second.value;
                res.bounds_used.notes.push_back(
                    "monotone lower bound Z_{l-1}=" + std::to_string(lower));
            }
        }
        res.bounds_used.lower = lower;

        if (l == 1) {
            SolveOptions sub = opts;
            SolveResult z0 = zero_forcing_number(g, sub);
            VertexSet seed = z0.witness | reversal(run_process(g, z0.witness, VertexSet {}));
            res.bounds_used.upper = seed.count();
            res.bounds_used.notes.push_back(
                "upper bound |B u R(B)|=" + std::to_string(seed.count()));
        }

        for (int k = lower; k <= n; ++k) {
            bool found = false;
            for_each_candidate(m, rest, k, [&](const VertexSet& b) {
                ++res.stats.candidates_examined;
                if (verify_leaky_adversary(g, b, l).accepted) {
                    res.value = k;
                    res.witness = b;
                    found = true;
                    return false;
                }
                return true;
            });
            if (found)
                break;
        }
        res.stats.millis = elapsed_ms(t0);
        if (opts.cache)
            opts.cache->results[{ cache_key(g), l }] = res;
        return res;
    }

} // namespace

SolveResult zero_forcing_number(const Graph& g, const SolveOptions& opts)
{
    return solve_impl(g, 0, opts);
}

SolveResult leaky_forcing_number(const Graph& g, int l, const SolveOptions& opts)
{
    if (l < 0)
        throw std::invalid_argument("leaky_forcing_number: negative l");
    return solve_impl(g, l, opts);
}

std::vector<VertexSet> all_minimum_leaky_sets(const Graph& g, int l, const SolveOptions& opts)
{
    SolveResult best = leaky_forcing_number(g, l, opts);
    VertexSet m = mandatory_vertices(g, l);
    std::vector<int> rest = (g.vertices() - m).to_vector();
    std::vector<VertexSet> out;
    for_each_candidate(m, rest, best.value, [&](const VertexSet& b) {
        if (verify_leaky_adversary(g, b, l).accepted)
            out.push_back(b);
        return true;
    });
    return out;
}

DeltaTable<EdgeDeltaRow> edge_deletion_delta(const Graph& g, int l, const SolveOptions& opts)
{
    DeltaTable<EdgeDeltaRow> table;
    int before = leaky_forcing_number(g, l, opts).value;
    bool first = true;
    for (auto e : g.edges()) {
        int after = leaky_forcing_number(delete_edge(g, e.first, e.second), l, opts).value;
        EdgeDeltaRow row { e, before, after, before - after };
        if (first || row.delta < table.min_delta)
            table.min_delta = row.delta;
        if (first || row.delta > table.max_delta)
            table.max_delta = row.delta;
        first = false;
        table.rows.push_back(row);
    }
    return table;
}

DeltaTable<VertexDeltaRow> vertex_deletion_delta(const Graph& g, int l, const SolveOptions& opts)
{
    DeltaTable<VertexDeltaRow> table;
    int before = leaky_forcing_number(g, l, opts).value;
    bool first = true;
    for (int v = 0; v < g.order(); ++v) {
        int after = leaky_forcing_number(delete_vertex(g, v).graph, l, opts).value;
        VertexDeltaRow row { v, before, after, before - after };
        if (first || row.delta < table.min_delta)
            table.min_delta = row.delta;
        if (first || row.delta > table.max_delta)
            table.max_delta = row.delta;
        first = false;
        table.rows.push_back(row);
    }
    return table;
}

ExtendabilityReport extendability_experiment(const Graph& g, int l, const SolveOptions& opts)
{
    ExtendabilityReport rep;
    rep.min_zfs = all_minimum_leaky_sets(g, 0, opts);
    rep.min_leaky = all_minimum_leaky_sets(g, l, opts);
    rep.z0 = rep.min_zfs.empty() ? 0 : rep.min_zfs.front().count();
    rep.zl = rep.min_leaky.empty() ? 0 : rep.min_leaky.front().count();
    rep.zfs_extendable.assign(rep.min_zfs.size(), false);
    for (std::size_t i = 0; i < rep.min_zfs.size(); ++i) {
        for (const auto& big : rep.min_leaky) {
            ++rep.pairs_examined;
            if (rep.min_zfs[i].is_subset_of(big)) {
                rep.zfs_extendable[i] = true;
                if (!rep.some_min_leaky_contains_min_zfs) {
                    rep.some_min_leaky_contains_min_zfs = true;
                    rep.containment = { rep.min_zfs[i], big };
                }
                break;
            }
        }
    }
    return rep;
}

bool matches_resilience_shapes(const Graph& g, int k, std::string* shape)
{
    // at most one nontrivial component, and that component a clique
    auto comps = connected_components(g);
    int nontrivial = 0;
    int clique_size = 0;
    bool cliques_only = true;
    for (const auto& c : comps) {
        int sz = c.count();
        if (sz >= 2) {
            ++nontrivial;
            clique_size = sz;
            for (int u = c.first(); u != -1; u = c.next(u))
                if (g.degree(u) != sz - 1)
                    cliques_only = false;
        }
    }
    int n = g.order();
    bool ok;
    std::string label;
    if (nontrivial == 0) {
        ok = n == k;
        label = "empty graph on " + std::to_string(n);
    } else if (nontrivial > 1 || !cliques_only) {
        ok = false;
        label = "outside classification";
    } else if (clique_size == n) {
        ok = n == k + 1;
        label = "K" + std::to_string(n);
    } else {
        ok = clique_size >= 2 && n == k + 1;
        label = "K" + std::to_string(clique_size) + " + " + std::to_string(n - clique_size)
            + " isolated";
    }
    if (shape)
        *shape = label;
    return ok;
}

ResilienceClassification resilience_classification(int k, const SolveOptions& opts)
{
    if (k < 2 || k > 6)
        throw std::invalid_argument("resilience_classification: k must be in 2..6");
    ResilienceClassification out;
    out.k = k;
    out.all_in_list = true;
    SolveCache local_cache;
    SolveOptions sub = opts;
    if (!sub.cache)
        sub.cache = &local_cache;
    for (int n = 2; n <= k + 1; ++n) {
        for (const auto& g : enumerate_graphs(n, false)) {
            if (zero_forcing_number(g, sub).value != k)
                continue;
            if (leaky_forcing_number(g, k - 1, sub).value != k)
                continue;
            ClassifiedGraph cg;
            cg.graph = g;
            cg.graph6 = emit_graph6(g);
            cg.in_allowed_list = matches_resilience_shapes(g, k, &cg.shape);
            out.all_in_list = out.all_in_list && cg.in_allowed_list;
            out.found.push_back(std::move(cg));
        }
    }
    return out;
}

} // namespace zf
