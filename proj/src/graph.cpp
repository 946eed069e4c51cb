#include "zf/graph.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace zf {

void Graph::check_vertex(int v) const
{
    if (v < 0 || v >= n_)
        throw std::out_of_range(
            "vertex " + std::to_string(v) + " not in graph of order " + std::to_string(n_));
}

Graph Graph::from_edge_list(int n, const std::vector<Edge>& edges)
{
    if (n < 0)
        throw std::invalid_argument("negative vertex count");
    if (n > VertexSet::capacity())
        throw std::out_of_range("graph order " + std::to_string(n)
            + " exceeds configured bit-set width " + std::to_string(VertexSet::capacity()));
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, VertexSet {});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::out_of_range("edge endpoint out of range: (" + std::to_string(u) + ","
                + std::to_string(v) + ")");
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        g.adj_[u].set(v);
        g.adj_[v].set(u);
    }
    return g;
}

int Graph::edge_count() const
{
    int twice = 0;
    for (const auto& a : adj_)
        twice += a.count();
    return twice / 2;
}

int Graph::min_degree() const
{
    if (n_ == 0)
        return 0;
    int d = degree(0);
    for (int v = 1; v < n_; ++v)
        d = std::min(d, degree(v));
    return d;
}

int Graph::max_degree() const
{
    int d = 0;
    for (int v = 0; v < n_; ++v)
        d = std::max(d, degree(v));
    return d;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        for (int v = adj_[u].next(u); v != -1; v = adj_[u].next(v))
            out.emplace_back(u, v);
    return out;
}

const std::string& Graph::label(int v) const
{
    check_vertex(v);
    static const std::string empty;
    return has_labels() ? labels_[v] : empty;
}

void Graph::set_labels(std::vector<std::string> labels)
{
    if (!labels.empty() && static_cast<int>(labels.size()) != n_)
        throw std::invalid_argument("label count does not match graph order");
    labels_ = std::move(labels);
}

bool Graph::adjacency_valid() const
{
    for (int u = 0; u < n_; ++u) {
        if (adj_[u].test(u))
            return false;
        for (int v = adj_[u].first(); v != -1; v = adj_[u].next(v))
            if (v >= n_ || !adj_[v].test(u))
                return false;
    }
    return true;
}

VertexDeletion delete_vertex(const Graph& g, int v)
{
    if (v < 0 || v >= g.order())
        throw std::out_of_range("delete_vertex: no vertex " + std::to_string(v));
    std::vector<int> map(g.order(), -1);
    int next_id = 0;
    for (int u = 0; u < g.order(); ++u)
        if (u != v)
            map[u] = next_id++;

    std::vector<Edge> edges;
    for (auto [a, b] : g.edges())
        if (a != v && b != v)
            edges.emplace_back(map[a], map[b]);
    Graph h = Graph::from_edge_list(g.order() - 1, edges);
    if (g.has_labels()) {
        std::vector<std::string> labels(h.order());
        for (int u = 0; u < g.order(); ++u)
            if (u != v)
                labels[map[u]] = g.label(u);
        h.set_labels(std::move(labels));
    }
    return { std::move(h), std::move(map) };
}

Graph delete_edge(const Graph& g, int u, int v)
{
    if (!g.has_edge(u, v))
        throw std::invalid_argument(
            "delete_edge: no edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    std::vector<Edge> edges;
    for (auto e : g.edges())
        if (e != Edge { std::min(u, v), std::max(u, v) })
            edges.push_back(e);
    Graph h = Graph::from_edge_list(g.order(), edges);
    if (g.has_labels()) {
        std::vector<std::string> labels;
        for (int w = 0; w < g.order(); ++w)
            labels.push_back(g.label(w));
        h.set_labels(std::move(labels));
    }
    return h;
}

Graph cartesian_product(const Graph& g, const Graph& h)
{
    if (g.order() == 0 || h.order() == 0)
        throw std::invalid_argument("cartesian_product: empty factor");
    long long total = static_cast<long long>(g.order()) * h.order();
    if (total > VertexSet::capacity())
        throw std::out_of_range("cartesian_product: order " + std::to_string(total)
            + " exceeds configured bit-set width " + std::to_string(VertexSet::capacity()));

    auto id = [&](int a, int b) { return a * h.order() + b; };
    std::vector<Edge> edges;
    for (int a = 0; a < g.order(); ++a)
        for (auto [b, b2] : h.edges())
            edges.emplace_back(id(a, b), id(a, b2));
    for (auto [a, a2] : g.edges())
        for (int b = 0; b < h.order(); ++b)
            edges.emplace_back(id(a, b), id(a2, b));

    Graph p = Graph::from_edge_list(static_cast<int>(total), edges);
    auto part = [](const Graph& f, int v) {
        return f.has_labels() ? f.label(v) : std::to_string(v + 1);
    };
    std::vector<std::string> labels(total);
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < h.order(); ++b)
            labels[id(a, b)] = "(" + part(g, a) + "," + part(h, b) + ")";
    p.set_labels(std::move(labels));
    return p;
}

std::vector<VertexSet> connected_components(const Graph& g)
{
    std::vector<VertexSet> comps;
    VertexSet seen;
    for (int v = 0; v < g.order(); ++v) {
        if (seen.test(v))
            continue;
        VertexSet comp;
        comp.set(v);
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet grow;
            for (int u = frontier.first(); u != -1; u = frontier.next(u))
                grow |= g.neighbors(u);
            frontier = grow - comp;
            comp |= grow;
        }
        comps.push_back(comp);
        seen |= comp;
    }
    return comps;
}

bool is_connected(const Graph& g)
{
    return g.order() == 0 || connected_components(g).size() == 1;
}

bool is_path(const Graph& g)
{
    if (g.order() == 0 || !is_connected(g))
        return false;
    if (g.order() <= 2)
        return true;
    int ones = 0;
    for (int v = 0; v < g.order(); ++v) {
        int d = g.degree(v);
        if (d == 1)
            ++ones;
        else if (d != 2)
            return false;
    }
    return ones == 2;
}

bool is_cycle(const Graph& g)
{
    if (g.order() < 3 || !is_connected(g))
        return false;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != 2)
            return false;
    return true;
}

bool is_tree(const Graph& g)
{
    return g.order() > 0 && is_connected(g) && g.edge_count() == g.order() - 1;
}

namespace {

    int triangle_bits(int n) { return n * (n - 1) / 2; }

} // namespace

Graph parse_graph6(const std::string& line)
{
    std::string s = line;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r'))
        s.pop_back();
    if (s.empty())
        throw std::invalid_argument("graph6: empty line");
    if (s[0] == '~')
        throw std::invalid_argument("graph6: long-form N(n) not supported (n > 62)");
    for (char c : s)
        if (c < 63 || c > 126)
            throw std::invalid_argument("graph6: character out of range 63..126");

    int n = s[0] - 63;
    if (n > 62)
        throw std::invalid_argument("graph6: order above 62");
    int nbits = triangle_bits(n);
    int expect = (nbits + 5) / 6;
    if (static_cast<int>(s.size()) != 1 + expect)
        throw std::invalid_argument("graph6: bad length for order " + std::to_string(n));

    std::vector<Edge> edges;
    int bit_index = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            int val = s[1 + bit_index / 6] - 63;
            int b = (val >> (5 - bit_index % 6)) & 1;
            if (b)
                edges.emplace_back(i, j);
            ++bit_index;
        }
    // padding must be zero
    for (; bit_index < 6 * expect; ++bit_index) {
        int val = s[1 + bit_index / 6] - 63;
        if ((val >> (5 - bit_index % 6)) & 1)
            throw std::invalid_argument("graph6: nonzero padding bits");
    }
    return Graph::from_edge_list(n, edges);
}

std::string emit_graph6(const Graph& g)
{
    int n = g.order();
    if (n > 62)
        throw std::invalid_argument("graph6: order above 62 not supported");
    int nbits = triangle_bits(n);
    int chars = (nbits + 5) / 6;
    std::string s(1 + chars, char(63));
    s[0] = char(63 + n);
    int bit_index = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (g.has_edge(i, j))
                s[1 + bit_index / 6] += char(1 << (5 - bit_index % 6));
            ++bit_index;
        }
    return s;
}

Graph parse_edge_list(std::istream& in)
{
    auto next_tokens = [&in](std::vector<std::string>& toks) -> bool {
        std::string line;
        while (std::getline(in, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos)
                line.erase(hash);
            std::istringstream ls(line);
            toks.clear();
            std::string t;
            while (ls >> t)
                toks.push_back(t);
            if (!toks.empty())
                return true;
        }
        return false;
    };

    std::vector<std::string> toks;
    if (!next_tokens(toks) || toks.size() != 2)
        throw std::invalid_argument("edge list: expected header line \"n m\"");
    int n = std::stoi(toks[0]);
    int m = std::stoi(toks[1]);
    if (m < 0)
        throw std::invalid_argument("edge list: negative edge count");
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i) {
        if (!next_tokens(toks) || toks.size() != 2)
            throw std::invalid_argument("edge list: expected " + std::to_string(m)
                + " edge lines, got " + std::to_string(i));
        edges.emplace_back(std::stoi(toks[0]), std::stoi(toks[1]));
    }
    return Graph::from_edge_list(n, edges);
}

Graph parse_edge_list(const std::string& text)
{
    std::istringstream in(text);
    return parse_edge_list(in);
}

std::string emit_edge_list(const Graph& g)
{
    std::ostringstream out;
    auto edges = g.edges();
    out << g.order() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges)
        out << u << ' ' << v << '\n';
    if (g.has_labels())
        for (int v = 0; v < g.order(); ++v)
            out << "# " << v << ": " << g.label(v) << '\n';
    return out.str();
}

} // namespace zf
