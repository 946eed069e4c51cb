#pragma once

#include "zf/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace zf {

enum class Family {
    path,
    cycle,
    complete,
    star,
    spider,
    tree,
    grid,
    supertriangle,
    clique_prism,
    clique_with_leaves,
};

struct FamilySpec {
    Family name = Family::path;
    int a = 0; // first parameter (n, k, l, ... depending on family)
    int b = 0; // second parameter where applicable
    unsigned long long seed = 0; // random tree only
};

Graph generate(const FamilySpec& spec);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves); // K_{1,leaves}, center last
Graph spider_graph(int legs, int path_order); // legs paths of the given order, one shared endpoint
Graph random_tree(int size, unsigned long long seed); // uniform over labeled trees
Graph grid_graph(int rows, int cols); // P_rows x P_cols, labels "(r,c)" 1-based
Graph supertriangle_graph(int side);
Graph clique_prism_graph(int l); // K_{l+1} x K_2, first clique at indices 0..l
Graph clique_with_leaves_graph(int l); // K_{l+2} with l pendant leaves per clique vertex

/// Triangular-grid coordinates and the three families of diagonal "rows":
/// left[i], right[i], bottom[i] peel the respective side i layers in.
struct SupertriangleLayout {
    int side = 0;
    std::vector<std::pair<int, int>> coords; // (row 1..side, pos 1..row)
    std::vector<VertexSet> left, right, bottom;
};

SupertriangleLayout supertriangle_layout(int side);

/// The low-degree set {v : deg(v) <= l}, which is a minimum l-leaky
/// forcing set on trees. Throws unless the graph is a tree and l >= 1.
VertexSet tree_leaky_set(const Graph& tree, int l);

/// A 1-leaky forcing set of P_n x P_m (n <= m) of size min{2n, m}:
/// both side columns when m >= 2n, the two-block T construction when
/// n < m < 2n, and a staircase pattern when n = m.
VertexSet grid_one_leaky_set(int n, int m);

/// The side-based sets: bottom for l <= 1, left+right for l in {2,3},
/// all three sides for l in {4,5}. Refuses l > 5.
VertexSet supertriangle_leaky_set(int side, int l);

/// Parameters of the grid T construction for n < m.
struct GridConstructionParams {
    int x = 0;
    int k = 0;
    int j = 0;
    bool k_at_least_2 = false;
    bool j_at_least_1 = false;
    bool odd_rows_j_at_least_2 = false; // relevant when n is odd
};

GridConstructionParams grid_construction_params(int n, int m);

/// A value or bound interval backed by a known result; unset fields mean
/// no applicable result ("unknown" rather than a guess).
struct Prediction {
    std::optional<int> exact;
    std::optional<int> lower;
    std::optional<int> upper;
    std::string source;

    bool known() const { return exact || lower || upper; }
};

Prediction predicted_value(const FamilySpec& spec, int l);

} // namespace zf
