#include "zf/leaky.hpp"

#include "zf/combinations.hpp"
#include "zf/solver.hpp"

#include <stdexcept>

namespace zf {

bool is_zero_forcing_set(const Graph& g, const VertexSet& blue)
{
    return closure(g, blue, VertexSet {}) == g.vertices();
}

LeakyVerdict verify_leaky_adversary(const Graph& g, const VertexSet& blue, int l)
{
    if (l < 0 || l > g.order())
        throw std::invalid_argument("verify_leaky_adversary: l outside 0..n");
    LeakyVerdict v;
    v.l = l;
    v.method = LeakyVerdict::Method::adversary;
    VertexSet all = g.vertices();

    std::vector<int> idx;
    bool more = first_combination(idx, g.order(), l);
    while (more) {
        VertexSet leaks = VertexSet::of(idx);
        VertexSet reached = closure(g, blue, leaks);
        if (reached != all) {
            v.accepted = false;
            v.witness = leaks;
            v.stalled = reached;
            return v;
        }
        more = next_combination_lex(idx, g.order());
    }
    v.accepted = true;
    return v;
}

LeakyVerdict verify_leaky_characterization(const Graph& g, const VertexSet& blue, int l)
{
    if (l < 0 || l > g.order())
        throw std::invalid_argument("verify_leaky_characterization: l outside 0..n");
    LeakyVerdict v;
    v.l = l;
    v.method = LeakyVerdict::Method::characterization;
    VertexSet all = g.vertices();

    if (l == 0) {
        VertexSet reached = closure(g, blue, VertexSet {});
        v.accepted = reached == all;
        if (!v.accepted) {
            v.witness = VertexSet {};
            v.stalled = reached;
        }
        return v;
    }

    LeakyVerdict below = verify_leaky_characterization(g, blue, l - 1);
    if (!below.accepted) {
        v.accepted = false;
        v.witness = below.witness;
        v.stalled = below.stalled;
        return v;
    }

    VertexSet outside = all - blue;
    std::vector<int> idx;
    bool more = first_combination(idx, g.order(), l - 1);
    while (more) {
        VertexSet leaks = VertexSet::of(idx);
        for (int t = outside.first(); t != -1; t = outside.next(t)) {
            VertexSet f = forcers_of(g, blue, leaks, t);
            if (f.count() >= 2)
                continue;
            // at most one way to force t while avoiding `leaks`: leaking the
            // lone forcer as well stalls the closure before t
            VertexSet bad = leaks;
            if (f.count() == 1)
                bad.set(f.first());
            v.accepted = false;
            v.witness = bad;
            v.stalled = closure(g, blue, bad);
            return v;
        }
        more = next_combination_lex(idx, g.order());
    }
    v.accepted = true;
    return v;
}

StructuralReport structural_screen(const Graph& g, int l)
{
    if (l < 1)
        throw std::invalid_argument("structural_screen: l must be >= 1");
    StructuralReport r;
    r.l = l;
    r.min_degree_ok = g.order() == 0 || g.min_degree() >= l + 1;

    int n = g.order();
    if (n <= 12) {
        r.cut_checked = true;
        // bipartitions with vertex 0 on the first side
        for (unsigned long mask = 1; mask + 1 < (1UL << n) && !r.forbidden_cut; mask += 2) {
            VertexSet side;
            for (int v = 0; v < n; ++v)
                if ((mask >> v) & 1)
                    side.set(v);
            std::vector<Edge> cut;
            VertexSet ends;
            for (auto [u, w] : g.edges())
                if (side.test(u) != side.test(w)) {
                    cut.emplace_back(u, w);
                    ends.set(u);
                    ends.set(w);
                }
            if (!cut.empty() && ends.count() <= l)
                r.forbidden_cut = cut;
        }
    }

    SolveResult base = zero_forcing_number(g);
    for (int v = 0; v < n && !r.vertex_deletion_flag; ++v) {
        SolveResult sub = zero_forcing_number(delete_vertex(g, v).graph);
        if (base.value - sub.value == -1)
            r.vertex_deletion_flag = v;
    }
    return r;
}

bool is_resilient(const Graph& g, int l)
{
    return zero_forcing_number(g).value == leaky_forcing_number(g, l).value;
}

VertexSet lemma_reversal_witness(const Graph& g, const VertexSet& blue, const VertexSet& fixed)
{
    int l = fixed.count();
    LeakyVerdict v = verify_leaky_adversary(g, blue, l);
    if (!v.accepted)
        throw std::invalid_argument("lemma_reversal_witness: blue set is not "
            + std::to_string(l) + "-leaky, witness " + v.witness->to_string());
    return reversal(run_process(g, blue, fixed));
}

} // namespace zf
