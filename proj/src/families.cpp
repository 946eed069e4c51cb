#include "zf/families.hpp"

#include "zf/combinations.hpp"
#include "zf/forcing.hpp"
#include "zf/leaky.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace zf {

Graph path_graph(int n)
{
    if (n < 1)
        throw std::invalid_argument("path: order must be >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return Graph::from_edge_list(n, edges);
}

Graph cycle_graph(int n)
{
    if (n < 3)
        throw std::invalid_argument("cycle: order must be >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edge_list(n, edges);
}

Graph complete_graph(int n)
{
    if (n < 1)
        throw std::invalid_argument("complete: order must be >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.emplace_back(i, j);
    return Graph::from_edge_list(n, edges);
}

Graph star_graph(int leaves)
{
    if (leaves < 1)
        throw std::invalid_argument("star: need at least one leaf");
    std::vector<Edge> edges;
    for (int i = 1; i <= leaves; ++i)
        edges.emplace_back(0, i);
    return Graph::from_edge_list(leaves + 1, edges);
}

Graph spider_graph(int legs, int path_order)
{
    if (legs < 1)
        throw std::invalid_argument("spider: need at least one leg");
    if (path_order < 3)
        throw std::invalid_argument("spider: leg paths must have order >= 3");
    std::vector<Edge> edges;
    int next = 1;
    for (int leg = 0; leg < legs; ++leg) {
        int prev = 0; // shared endpoint
        for (int step = 1; step < path_order; ++step) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
    }
    return Graph::from_edge_list(next, edges);
}

Graph random_tree(int size, unsigned long long seed)
{
    if (size < 1)
        throw std::invalid_argument("tree: order must be >= 1");
    if (size == 1)
        return Graph::from_edge_list(1, {});
    if (size == 2)
        return Graph::from_edge_list(2, { { 0, 1 } });

    // Pruefer sequence; explicit modulo keeps the stream portable
    std::mt19937_64 gen(seed);
    std::vector<int> seq(size - 2);
    for (auto& s : seq)
        s = static_cast<int>(gen() % static_cast<unsigned long long>(size));

    std::vector<int> deg(size, 1);
    for (int s : seq)
        ++deg[s];
    std::set<int> leaves;
    for (int v = 0; v < size; ++v)
        if (deg[v] == 1)
            leaves.insert(v);

    std::vector<Edge> edges;
    for (int s : seq) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(leaf, s);
        if (--deg[s] == 1)
            leaves.insert(s);
    }
    int a = *leaves.begin();
    int b = *std::next(leaves.begin());
    edges.emplace_back(a, b);
    return Graph::from_edge_list(size, edges);
}

Graph grid_graph(int rows, int cols)
{
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("grid: dimensions must be >= 1");
    return cartesian_product(path_graph(rows), path_graph(cols));
}

Graph supertriangle_graph(int side)
{
    if (side < 2)
        throw std::invalid_argument("supertriangle: side must be >= 2");
    auto id = [](int r, int i) { return r * (r - 1) / 2 + i - 1; };
    std::vector<Edge> edges;
    for (int r = 1; r <= side; ++r)
        for (int i = 1; i <= r; ++i) {
            if (i + 1 <= r)
                edges.emplace_back(id(r, i), id(r, i + 1));
            if (r + 1 <= side) {
                edges.emplace_back(id(r, i), id(r + 1, i));
                edges.emplace_back(id(r, i), id(r + 1, i + 1));
            }
        }
    Graph g = Graph::from_edge_list(side * (side + 1) / 2, edges);
    std::vector<std::string> labels(g.order());
    for (int r = 1; r <= side; ++r)
        for (int i = 1; i <= r; ++i)
            labels[id(r, i)] = "(" + std::to_string(r) + "," + std::to_string(i) + ")";
    g.set_labels(std::move(labels));
    return g;
}

Graph clique_prism_graph(int l)
{
    if (l < 1)
        throw std::invalid_argument("clique prism: parameter must be >= 1");
    return cartesian_product(complete_graph(2), complete_graph(l + 1));
}

Graph clique_with_leaves_graph(int l)
{
    if (l < 1)
        throw std::invalid_argument("clique with leaves: parameter must be >= 1");
    int clique = l + 2;
    std::vector<Edge> edges;
    for (int i = 0; i < clique; ++i)
        for (int j = i + 1; j < clique; ++j)
            edges.emplace_back(i, j);
    int next = clique;
    for (int i = 0; i < clique; ++i)
        for (int j = 0; j < l; ++j)
            edges.emplace_back(i, next++);
    return Graph::from_edge_list(next, edges);
}

Graph generate(const FamilySpec& spec)
{
    switch (spec.name) {
    case Family::path:
        return path_graph(spec.a);
    case Family::cycle:
        return cycle_graph(spec.a);
    case Family::complete:
        return complete_graph(spec.a);
    case Family::star:
        return star_graph(spec.a);
    case Family::spider:
        return spider_graph(spec.a, spec.b);
    case Family::tree:
        return random_tree(spec.a, spec.seed);
    case Family::grid:
        return grid_graph(spec.a, spec.b);
    case Family::supertriangle:
        return supertriangle_graph(spec.a);
    case Family::clique_prism:
        return clique_prism_graph(spec.a);
    case Family::clique_with_leaves:
        return clique_with_leaves_graph(spec.a);
    }
    throw std::invalid_argument("unknown family");
}

SupertriangleLayout supertriangle_layout(int side)
{
    if (side < 2)
        throw std::invalid_argument("supertriangle: side must be >= 2");
    auto id = [](int r, int i) { return r * (r - 1) / 2 + i - 1; };
    SupertriangleLayout lay;
    lay.side = side;
    lay.coords.resize(side * (side + 1) / 2);
    for (int r = 1; r <= side; ++r)
        for (int i = 1; i <= r; ++i)
            lay.coords[id(r, i)] = { r, i };
    lay.left.resize(side);
    lay.right.resize(side);
    lay.bottom.resize(side);
    for (int d = 0; d < side; ++d) {
        for (int r = d + 1; r <= side; ++r) {
            lay.left[d].set(id(r, d + 1));
            lay.right[d].set(id(r, r - d));
        }
        for (int i = 1; i <= side - d; ++i)
            lay.bottom[d].set(id(side - d, i));
    }
    return lay;
}

VertexSet tree_leaky_set(const Graph& tree, int l)
{
    if (!is_tree(tree))
        throw std::invalid_argument("tree_leaky_set: graph is not a tree");
    if (l < 1)
        throw std::invalid_argument("tree_leaky_set: l must be >= 1");
    VertexSet b;
    for (int v = 0; v < tree.order(); ++v)
        if (tree.degree(v) <= l)
            b.set(v);
    return b;
}

GridConstructionParams grid_construction_params(int n, int m)
{
    if (n < 1 || n >= m)
        throw std::invalid_argument("grid construction parameters need 1 <= n < m");
    GridConstructionParams p;
    // smallest x with n <= 2x+3 <= m; exists because m >= n+1
    p.x = std::max(0, (n - 3 + 1) / 2);
    if (2 * p.x + 3 > m)
        throw std::invalid_argument("grid construction parameters: no valid x");
    p.k = (m - 2 * p.x) / 2;
    p.j = m - 2 * p.x - p.k;
    p.k_at_least_2 = p.k >= 2;
    p.j_at_least_1 = p.j >= 1;
    p.odd_rows_j_at_least_2 = n % 2 == 0 || p.j >= 2;
    return p;
}

namespace {

    int grid_id(int m, int r, int c) { return (r - 1) * m + (c - 1); }

    VertexSet grid_t_construction(int n, int m, const GridConstructionParams& p)
    {
        VertexSet b;
        for (int i = 1; i <= p.x; ++i) {
            b.set(grid_id(m, i, p.x + p.k));
            b.set(grid_id(m, i, p.x + p.k + 1));
        }
        for (int q = 1; q <= p.k; ++q)
            b.set(grid_id(m, p.x + 1, p.x + q));
        for (int q = 1; q <= p.j; ++q)
            b.set(grid_id(m, p.x + 1, p.x + p.k + q));
        return b;
    }

    VertexSet grid_side_columns(int n, int m)
    {
        VertexSet b;
        for (int r = 1; r <= n; ++r) {
            b.set(grid_id(m, r, 1));
            b.set(grid_id(m, r, m));
        }
        return b;
    }

    // Diagonal staircase for the square grid: (1,1),(2,1),(2,2),(3,2),...
    // All minimum 1-leaky sets of small squares have this shape (up to
    // symmetry); the pattern is re-verified per call.
    VertexSet square_staircase(int n)
    {
        VertexSet b;
        for (int t = 1; t <= n; ++t) {
            int r = (t % 2) ? (t + 1) / 2 : t / 2 + 1;
            int c = (t % 2) ? (t + 1) / 2 : t / 2;
            b.set(grid_id(n, r, c));
        }
        return b;
    }

    VertexSet square_search(int n)
    {
        Graph g = grid_graph(n, n);
        std::vector<int> column;
        for (int r = 1; r <= n; ++r)
            column.push_back(grid_id(n, r, 1));
        VertexSet col = VertexSet::of(column);
        if (verify_leaky_characterization(g, col, 1).accepted)
            return col;

        std::vector<int> others;
        for (int v = 0; v < g.order(); ++v)
            if (!col.test(v))
                others.push_back(v);

        // swap column vertices for outside vertices, nearest the column first
        for (int d = 1; d <= 2; ++d) {
            std::vector<int> drop, add;
            bool more_drop = first_combination(drop, n, d);
            while (more_drop) {
                bool more_add = first_combination(add, static_cast<int>(others.size()), d);
                while (more_add) {
                    VertexSet b = col;
                    for (int i : drop)
                        b.reset(column[i]);
                    for (int i : add)
                        b.set(others[i]);
                    if (verify_leaky_characterization(g, b, 1).accepted)
                        return b;
                    more_add = next_combination_lex(add, static_cast<int>(others.size()));
                }
                more_drop = next_combination_lex(drop, n);
            }
        }
        throw std::runtime_error("square grid: no 1-leaky set of size n near the side column");
    }

} // namespace

VertexSet grid_one_leaky_set(int n, int m)
{
    if (n < 1 || n > m)
        throw std::invalid_argument("grid_one_leaky_set: need 1 <= n <= m");
    if (static_cast<long long>(n) * m > VertexSet::capacity())
        throw std::out_of_range("grid_one_leaky_set: grid exceeds configured bit-set width");

    if (n == m) {
        if (n <= 2) {
            VertexSet b;
            for (int r = 1; r <= n; ++r)
                b.set(grid_id(n, r, 1));
            return b;
        }
        VertexSet b = square_staircase(n);
        if (verify_leaky_characterization(grid_graph(n, n), b, 1).accepted)
            return b;
        return square_search(n);
    }
    if (2 * n <= m)
        return grid_side_columns(n, m);

    GridConstructionParams p = grid_construction_params(n, m);
    VertexSet b = grid_t_construction(n, m, p);
    if (n <= 5 || !p.k_at_least_2 || !p.odd_rows_j_at_least_2) {
        // outside the proven parameter regime: certify before returning
        if (!verify_leaky_characterization(grid_graph(n, m), b, 1).accepted)
            throw std::runtime_error("grid construction failed verification for "
                + std::to_string(n) + "x" + std::to_string(m));
    }
    return b;
}

VertexSet supertriangle_leaky_set(int side, int l)
{
    if (l < 0 || l > 5)
        throw std::invalid_argument("supertriangle_leaky_set: only l in 0..5 is covered");
    SupertriangleLayout lay = supertriangle_layout(side);
    if (l <= 1)
        return lay.bottom[0];
    if (l <= 3)
        return lay.left[0] | lay.right[0];
    return lay.left[0] | lay.right[0] | lay.bottom[0];
}

namespace {

    Prediction unknown_prediction()
    {
        Prediction p;
        p.source = "no applicable result";
        return p;
    }

    Prediction exact_prediction(int value, std::string source)
    {
        Prediction p;
        p.exact = value;
        p.lower = value;
        p.upper = value;
        p.source = std::move(source);
        return p;
    }

    Prediction interval_prediction(int lo, int hi, std::string source)
    {
        if (lo == hi)
            return exact_prediction(lo, std::move(source));
        Prediction p;
        p.lower = lo;
        p.upper = hi;
        p.source = std::move(source);
        return p;
    }

} // namespace

Prediction predicted_value(const FamilySpec& spec, int l)
{
    if (l < 0)
        throw std::invalid_argument("predicted_value: negative l");

    switch (spec.name) {
    case Family::path: {
        int n = spec.a;
        if (l == 0)
            return exact_prediction(std::min(n, 1), "paths have zero forcing number 1");
        if (l == 1)
            return exact_prediction(n >= 2 ? 2 : 1, "paths and cycles have 1-leaky number 2");
        return exact_prediction(n, "all degrees at most l, so B must be everything");
    }
    case Family::cycle: {
        int n = spec.a;
        if (l == 0)
            return exact_prediction(2, "cycles have zero forcing number 2");
        if (l == 1)
            return exact_prediction(2, "paths and cycles have 1-leaky number 2");
        return exact_prediction(n, "all degrees at most l, so B must be everything");
    }
    case Family::complete: {
        int n = spec.a;
        if (n == 1)
            return exact_prediction(1, "single vertex");
        if (l <= n - 2)
            return exact_prediction(n - 1, "complete graphs are (n-2)-resilient");
        return exact_prediction(n, "max degree at most l forces B=V");
    }
    case Family::star:
    case Family::spider:
    case Family::tree: {
        if (l < 1)
            return unknown_prediction();
        Graph t = generate(spec);
        int count = 0;
        for (int v = 0; v < t.order(); ++v)
            if (t.degree(v) <= l)
                ++count;
        return exact_prediction(count, "trees: vertices of degree at most l");
    }
    case Family::grid: {
        int n = spec.a, m = spec.b;
        bool swapped = n > m;
        if (swapped)
            std::swap(n, m);
        if (l == 0)
            return exact_prediction(n, "grid zero forcing number is the short side");
        if (l != 1)
            return unknown_prediction();
        if (n == m)
            return exact_prediction(n, "square grids have 1-leaky number n");
        if (m >= 2 * n * n)
            return exact_prediction(2 * n, "very wide grids have 1-leaky number 2n");
        int upper = std::min(2 * n, m);
        int lower = std::max(n, (n >= 2 && m >= 3) ? 3 : 0);
        return interval_prediction(lower, upper,
            "grid 1-leaky number is at most min{2n,m}; at least the zero forcing number");
    }
    case Family::supertriangle: {
        int n = spec.a;
        int order = n * (n + 1) / 2;
        if (l <= 1)
            return exact_prediction(n, "supertriangle: one side forces, robust to one leak");
        if (l <= 3) {
            int lo = std::max(n, (l >= 2 && l <= order - 3) ? l + 2 : 0);
            return interval_prediction(
                lo, 2 * n - 1, "supertriangle: two sides are a 3-leaky set");
        }
        if (l <= 5)
            return exact_prediction(3 * n - 3, "supertriangle: all three sides, tight by degrees");
        Graph g = supertriangle_graph(n);
        if (l >= g.max_degree())
            return exact_prediction(order, "max degree at most l forces B=V");
        return unknown_prediction();
    }
    case Family::clique_prism: {
        int base = spec.a;
        if (l >= base + 1)
            return exact_prediction(2 * (base + 1), "max degree at most l forces B=V");
        return unknown_prediction();
    }
    case Family::clique_with_leaves: {
        int lp = spec.a;
        int order = (lp + 2) * (lp + 1);
        if (l == lp)
            return exact_prediction(
                lp * (lp + 2), "the pendant leaves are the unique minimum set");
        if (l >= 2 * lp + 1)
            return exact_prediction(order, "max degree at most l forces B=V");
        return unknown_prediction();
    }
    }
    return unknown_prediction();
}

} // namespace zf
