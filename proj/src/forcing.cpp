#include "zf/forcing.hpp"

#include <algorithm>
#include <stdexcept>

namespace zf {

std::vector<Force> valid_forces(const Graph& g, const VertexSet& blue, const VertexSet& leaks)
{
    std::vector<Force> out;
    VertexSet sources = blue - leaks;
    for (int v = sources.first(); v != -1; v = sources.next(v)) {
        VertexSet white = g.neighbors(v) - blue;
        if (white.count() == 1)
            out.push_back({ v, white.first() });
    }
    return out;
}

VertexSet closure(const Graph& g, VertexSet blue, const VertexSet& leaks)
{
    bool changed = true;
    while (changed) {
        changed = false;
        VertexSet sources = blue - leaks;
        for (int v = sources.first(); v != -1; v = sources.next(v)) {
            VertexSet white = g.neighbors(v) - blue;
            if (white.count() == 1) {
                blue |= white;
                changed = true;
            }
        }
    }
    return blue;
}

ForcingProcess run_process(const Graph& g, const VertexSet& blue, const VertexSet& leaks)
{
    ForcingProcess p;
    p.n = g.order();
    p.initial = blue;
    p.leaks = leaks;
    VertexSet cur = blue;
    for (;;) {
        int src = -1, tgt = -1;
        VertexSet sources = cur - leaks;
        for (int v = sources.first(); v != -1; v = sources.next(v)) {
            VertexSet white = g.neighbors(v) - cur;
            if (white.count() == 1) {
                src = v;
                tgt = white.first();
                break;
            }
        }
        if (src == -1)
            break;
        p.steps.push_back({ src, tgt });
        cur.set(tgt);
    }
    p.final_set = cur;
    return p;
}

std::vector<ForcingChain> chains(const ForcingProcess& p)
{
    std::vector<int> succ(p.n, -1);
    for (const auto& f : p.steps)
        succ[f.source] = f.target;
    std::vector<ForcingChain> out;
    for (int v = p.initial.first(); v != -1; v = p.initial.next(v)) {
        ForcingChain c;
        for (int x = v; x != -1; x = succ[x])
            c.vertices.push_back(x);
        out.push_back(std::move(c));
    }
    return out;
}

VertexSet reversal(const ForcingProcess& p)
{
    if (!p.complete())
        throw std::invalid_argument("reversal: process did not color the whole graph");
    VertexSet ends = p.final_set;
    for (const auto& f : p.steps)
        ends.reset(f.source);
    return ends;
}

namespace {

    // Maximal blue set reachable when v may never be forced.
    VertexSet closure_avoiding_target(
        const Graph& g, VertexSet blue, const VertexSet& leaks, int avoided)
    {
        bool changed = true;
        while (changed) {
            changed = false;
            VertexSet sources = blue - leaks;
            for (int u = sources.first(); u != -1; u = sources.next(u)) {
                VertexSet white = g.neighbors(u) - blue;
                if (white.count() == 1 && white.first() != avoided) {
                    blue |= white;
                    changed = true;
                }
            }
        }
        return blue;
    }

} // namespace

std::vector<Force> possible_forces(const Graph& g, const VertexSet& blue, const VertexSet& leaks)
{
    std::vector<Force> out;
    VertexSet all = g.vertices();
    VertexSet targets = all - blue;
    for (int v = targets.first(); v != -1; v = targets.next(v)) {
        VertexSet reach = closure_avoiding_target(g, blue, leaks, v);
        VertexSet with_v = reach;
        with_v.set(v);
        if (closure(g, with_v, leaks) != all)
            continue;
        VertexSet candidates = reach - leaks;
        for (int u = candidates.first(); u != -1; u = candidates.next(u)) {
            VertexSet white = g.neighbors(u) - reach;
            if (white.count() == 1 && white.first() == v)
                out.push_back({ u, v });
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

VertexSet forcers_of(const Graph& g, const VertexSet& blue, const VertexSet& leaks, int target)
{
    VertexSet out;
    if (blue.test(target))
        return out;
    VertexSet all = g.vertices();
    VertexSet reach = closure_avoiding_target(g, blue, leaks, target);
    VertexSet with_t = reach;
    with_t.set(target);
    if (closure(g, with_t, leaks) != all)
        return out;
    VertexSet candidates = reach - leaks;
    for (int u = candidates.first(); u != -1; u = candidates.next(u)) {
        VertexSet white = g.neighbors(u) - reach;
        if (white.count() == 1 && white.first() == target)
            out.set(u);
    }
    return out;
}

namespace {

    // Greedy saturation of a fixed force set; confluent because a valid
    // pending force stays valid while its target stays white.
    VertexSet apply_force_set(
        const Graph& g, VertexSet blue, const VertexSet& leaks, std::vector<Force> pool,
        std::vector<Force>* applied)
    {
        bool progress = true;
        while (progress) {
            progress = false;
            for (auto it = pool.begin(); it != pool.end();) {
                VertexSet white = g.neighbors(it->source) - blue;
                bool ok = blue.test(it->source) && !leaks.test(it->source) && white.count() == 1
                    && white.first() == it->target;
                if (ok) {
                    blue.set(it->target);
                    if (applied)
                        applied->push_back(*it);
                    it = pool.erase(it);
                    progress = true;
                } else {
                    ++it;
                }
            }
        }
        return blue;
    }

} // namespace

ForcingProcess switch_processes(
    const Graph& g, const ForcingProcess& p, const ForcingProcess& alt, const VertexSet& mid)
{
    if (!(p.initial == alt.initial))
        throw std::invalid_argument("switch_processes: processes have different initial sets");
    if (!p.initial.is_subset_of(mid))
        throw std::invalid_argument("switch_processes: mid does not contain the initial set");

    // mid must be obtainable from p.initial using p's forces only
    std::vector<Force> into_mid;
    for (const auto& f : p.steps)
        if (mid.test(f.target))
            into_mid.push_back(f);
    VertexSet got = apply_force_set(g, p.initial, p.leaks, into_mid, nullptr);
    if (!(got == mid))
        throw std::invalid_argument("switch_processes: mid not obtainable from the first process");

    std::vector<Force> pool = into_mid;
    for (const auto& f : alt.steps)
        if (!mid.test(f.target))
            pool.push_back(f);

    ForcingProcess out;
    out.n = p.n;
    out.initial = p.initial;
    out.leaks = p.leaks;
    out.final_set = apply_force_set(g, p.initial, p.leaks, std::move(pool), &out.steps);
    if (!out.complete())
        throw std::invalid_argument("switch_processes: hybrid force set does not complete");
    return out;
}

} // namespace zf
