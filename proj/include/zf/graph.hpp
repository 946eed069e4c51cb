#pragma once

#include "zf/bitset.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace zf {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1, adjacency held as one
/// VertexSet per vertex. Immutable after construction; "mutations"
/// (vertex/edge deletion, products) build new graphs.
class Graph {
public:
    Graph() = default;

    static Graph from_edge_list(int n, const std::vector<Edge>& edges);

    int order() const { return n_; }
    int edge_count() const;

    const VertexSet& neighbors(int v) const
    {
        check_vertex(v);
        return adj_[v];
    }

    int degree(int v) const { return neighbors(v).count(); }
    bool has_edge(int u, int v) const { return neighbors(u).test(v); }

    int min_degree() const;
    int max_degree() const;

    VertexSet vertices() const { return VertexSet::full(n_); }
    std::vector<Edge> edges() const; // u < v, lexicographic

    bool has_labels() const { return !labels_.empty(); }
    const std::string& label(int v) const;
    void set_labels(std::vector<std::string> labels);

    /// Sanity check used by tests: symmetry and irreflexivity.
    bool adjacency_valid() const;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<std::string> labels_;
};

struct VertexDeletion {
    Graph graph;
    std::vector<int> old_to_new; // deleted vertex maps to -1
};

VertexDeletion delete_vertex(const Graph& g, int v);
Graph delete_edge(const Graph& g, int u, int v);

/// (g,h) ~ (g',h') iff components agree on one side and are adjacent on the
/// other. Vertex (a,b) gets index a*|V(h)|+b and a "(la,lb)" label built from
/// the factor labels (1-based indices when a factor is unlabeled).
Graph cartesian_product(const Graph& g, const Graph& h);

std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);
bool is_path(const Graph& g);
bool is_cycle(const Graph& g);
bool is_tree(const Graph& g);

// graph6, short form only (n <= 62)
Graph parse_graph6(const std::string& line);
std::string emit_graph6(const Graph& g);

// Edge-list text: first line "n m", then m lines "u v" (0-based), '#' comments.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
std::string emit_edge_list(const Graph& g);

} // namespace zf
