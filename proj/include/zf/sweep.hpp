#pragma once

#include "zf/graph.hpp"
#include "zf/solver.hpp"

#include <optional>
#include <string>
#include <vector>

namespace zf {

/// Names accepted by the sweep: ineq, max, minimum, lower, kab, cycle,
/// minusone, delete, independent.
const std::vector<std::string>& known_checks();

/// Run one named theorem check; empty result means pass (or out of the
/// check's scope). Z values already computed for the graph are reused
/// through the cache.
std::optional<std::string> run_check(
    const std::string& name, const Graph& g, int l, const SolveOptions& opts);

/// Edge-cut scan behind the kab screen; `checked` is false above 12
/// vertices where the bipartition enumeration is skipped.
struct CutScan {
    bool checked = false;
    std::optional<std::vector<Edge>> cut; // endpoints number <= l
};
CutScan find_forbidden_cut(const Graph& g, int l);

struct SweepRecord {
    std::string graph6;
    std::vector<int> z; // Z_0..Z_l
    std::vector<std::string> failures; // "check: detail"
    bool ok() const { return failures.empty(); }
};

struct SweepReport {
    std::string corpus_id;
    int l = 0;
    std::vector<std::string> checks;
    std::vector<SweepRecord> records;
    int failed_graphs = 0;
};

struct SweepOptions {
    std::vector<std::string> checks;
    int l = 1;
    int jobs = 1;
    int cap = 0; // forwarded to the solver
};

/// Run the checks over a corpus. Graphs are sharded across jobs; records
/// come back in corpus order, so the report does not depend on the job
/// count.
SweepReport run_sweep(
    const std::vector<Graph>& corpus, const std::string& corpus_id, const SweepOptions& opts);

} // namespace zf
