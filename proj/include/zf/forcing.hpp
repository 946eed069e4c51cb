#pragma once

#include "zf/graph.hpp"

#include <compare>
#include <vector>

namespace zf {

struct Force {
    int source = -1;
    int target = -1;
    auto operator<=>(const Force&) const = default;
};

/// A recorded run of the forcing process: replaying `steps` from `initial`
/// is valid (each source blue, not a leak, target its unique white
/// neighbor), and `final_set` is `initial` plus all targets.
struct ForcingProcess {
    int n = 0;
    VertexSet initial;
    VertexSet leaks;
    std::vector<Force> steps;
    VertexSet final_set;

    bool complete() const { return final_set == VertexSet::full(n); }
};

struct ForcingChain {
    std::vector<int> vertices; // x1 -> x2 -> ... -> xk, singletons allowed
};

/// Forces applicable right now: source blue and not a leak, with exactly
/// one white neighbor.
std::vector<Force> valid_forces(const Graph& g, const VertexSet& blue, const VertexSet& leaks);

/// Maximal blue set reachable from `blue` by repeated valid forces whose
/// sources avoid `leaks`. Leaks need not be blue; white leaks can still be
/// forced, they just never fire.
VertexSet closure(const Graph& g, VertexSet blue, const VertexSet& leaks);

/// One concrete process reaching closure(g, blue, leaks); at each step the
/// lowest-index applicable source fires (ties cannot occur on targets).
ForcingProcess run_process(const Graph& g, const VertexSet& blue, const VertexSet& leaks);

/// Maximal forcing chains of a process; they partition initial + targets
/// and every initial vertex starts exactly one chain.
std::vector<ForcingChain> chains(const ForcingProcess& p);

/// Chain ends of a complete process: vertices that perform no force.
/// Throws if the process did not color everything.
VertexSet reversal(const ForcingProcess& p);

/// The set of possible forces F_L(B): u -> v such that some complete
/// forcing process avoiding sources in `leaks` contains it. Computed per
/// target via the maximal closure that avoids forcing v, plus a completion
/// check; see the oracle test for the brute-force cross-validation.
std::vector<Force> possible_forces(const Graph& g, const VertexSet& blue, const VertexSet& leaks);

/// Sources of possible forces into `target`.
VertexSet forcers_of(const Graph& g, const VertexSet& blue, const VertexSet& leaks, int target);

/// Lemma-style process switching: keep the forces of `p` with targets
/// inside `mid`, then continue with the forces of `alt` (same initial set)
/// whose targets are outside. Throws if `mid` is not obtainable from
/// p.initial using p's forces, or if the hybrid does not complete.
ForcingProcess switch_processes(
    const Graph& g, const ForcingProcess& p, const ForcingProcess& alt, const VertexSet& mid);

} // namespace zf
