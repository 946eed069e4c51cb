#pragma once

#include "zf/forcing.hpp"

#include <optional>
#include <string>
#include <vector>

namespace zf {

/// Outcome of an l-leaky verification. A rejection always carries a
/// concrete leak set of size <= l whose closure stalls.
struct LeakyVerdict {
    enum class Method { adversary, characterization };

    bool accepted = false;
    int l = 0;
    Method method = Method::adversary;
    std::optional<VertexSet> witness; // failing leak set
    std::optional<VertexSet> stalled; // closure under the witness

    std::string method_name() const
    {
        return method == Method::adversary ? "adversary" : "characterization";
    }
};

bool is_zero_forcing_set(const Graph& g, const VertexSet& blue);

/// Exhaustive adversary: try every leak set of size l in lexicographic
/// order, reject on the first one that stalls the closure.
LeakyVerdict verify_leaky_adversary(const Graph& g, const VertexSet& blue, int l);

/// Recursive characterization: l = 0 reduces to the zero forcing check;
/// l >= 1 requires the (l-1) verdict plus, for every leak set of size l-1,
/// at least two possible forcers for every vertex outside blue.
LeakyVerdict verify_leaky_characterization(const Graph& g, const VertexSet& blue, int l);

/// Necessary-condition screens for l-resilience.
struct StructuralReport {
    int l = 0;
    bool min_degree_ok = false;           // delta(G) >= l+1
    bool cut_checked = false;             // bipartition scan runs only for n <= 12
    std::optional<std::vector<Edge>> forbidden_cut; // cut whose endpoints number <= l
    std::optional<int> vertex_deletion_flag;        // v with Z(G) - Z(G-v) = -1
};

StructuralReport structural_screen(const Graph& g, int l);

/// Z0(G) == Zl(G), both computed exactly.
bool is_resilient(const Graph& g, int l);

/// A zero forcing set of size |blue| containing `fixed`, built as the
/// reversal of a run with `fixed` as leaks. Requires blue to be
/// |fixed|-leaky (verified; throws otherwise).
VertexSet lemma_reversal_witness(const Graph& g, const VertexSet& blue, const VertexSet& fixed);

} // namespace zf
