#pragma once

#include "zf/graph.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zf {

/// Thrown when a graph is larger than the configured exhaustive-search cap.
struct cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SolveResult {
    int value = 0;
    VertexSet witness;

    struct Bounds {
        int lower = 0;
        int upper = -1; // -1: none recorded
        std::vector<std::string> notes;
    } bounds_used;

    struct Stats {
        std::uint64_t candidates_examined = 0;
        double millis = 0;
    } stats;
};

/// Values already computed this run, keyed by (graph6, l). Lets the solver
/// reuse Z_{l-1} as a lower bound when the caller sweeps l upward.
struct SolveCache {
    std::map<std::pair<std::string, int>, SolveResult> results;
};

struct SolveOptions {
    int cap = 0; // 0: default by l (14 for l <= 1, 12 for l >= 2)
    SolveCache* cache = nullptr;
};

int default_cap(int l);

SolveResult zero_forcing_number(const Graph& g, const SolveOptions& opts = {});
SolveResult leaky_forcing_number(const Graph& g, int l, const SolveOptions& opts = {});

/// Every B with |B| = Z_l(G) passing the adversary verifier, in the
/// solver's candidate order.
std::vector<VertexSet> all_minimum_leaky_sets(const Graph& g, int l, const SolveOptions& opts = {});

struct EdgeDeltaRow {
    Edge edge;
    int before = 0;
    int after = 0;
    int delta = 0; // before - after
};

struct VertexDeltaRow {
    int vertex = -1;
    int before = 0;
    int after = 0;
    int delta = 0;
};

template <typename Row> struct DeltaTable {
    std::vector<Row> rows;
    int min_delta = 0;
    int max_delta = 0;
};

DeltaTable<EdgeDeltaRow> edge_deletion_delta(const Graph& g, int l, const SolveOptions& opts = {});
DeltaTable<VertexDeltaRow> vertex_deletion_delta(
    const Graph& g, int l, const SolveOptions& opts = {});

/// Evidence gathering for the open extendability problem: can minimum
/// l-leaky sets be built on top of minimum zero forcing sets?
struct ExtendabilityReport {
    int z0 = 0;
    int zl = 0;
    std::vector<VertexSet> min_zfs;
    std::vector<VertexSet> min_leaky;
    bool some_min_leaky_contains_min_zfs = false;
    std::optional<std::pair<VertexSet, VertexSet>> containment; // (zfs, leaky superset)
    std::vector<bool> zfs_extendable; // aligned with min_zfs
    std::uint64_t pairs_examined = 0;
};

ExtendabilityReport extendability_experiment(const Graph& g, int l, const SolveOptions& opts = {});

/// All graphs (up to isomorphism, order 2..k+1) with Z_0 = Z_{k-1} = k,
/// matched against the classification's allowed shapes.
struct ClassifiedGraph {
    Graph graph;
    std::string graph6;
    std::string shape;
    bool in_allowed_list = false;
};

struct ResilienceClassification {
    int k = 0;
    std::vector<ClassifiedGraph> found;
    bool all_in_list = false;
};

ResilienceClassification resilience_classification(int k, const SolveOptions& opts = {});

/// Whether g is one of the shapes the classification allows: K_{k+1},
/// a clique on >= 2 vertices plus isolated vertices totaling k+1, or the
/// empty graph on k vertices.
bool matches_resilience_shapes(const Graph& g, int k, std::string* shape);

} // namespace zf
