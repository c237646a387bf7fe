#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace linarb {

using Vertex = int;

/// Undirected edge in normal form (u < v).
struct Edge {
    Vertex u{};
    Vertex v{};
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) {
    if (a == b)
        throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
    return a < b ? Edge{a, b} : Edge{b, a};
}

/// Immutable simple graph on vertices 0..n-1 with a sorted edge list and
/// per-vertex sorted neighbor lists.
class Graph {
public:
    Graph() = default;

    Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
        if (n_ < 0)
            throw std::invalid_argument("vertex count must be nonnegative");
        for (Edge& e : edges_) {
            if (e.u == e.v)
                throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
            if (e.u > e.v)
                std::swap(e.u, e.v);
            if (e.u < 0 || e.v >= n_)
                throw std::invalid_argument("edge (" + std::to_string(e.u) + "," +
                                            std::to_string(e.v) + ") out of range");
        }
        std::sort(edges_.begin(), edges_.end());
        if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
            throw std::invalid_argument("duplicate edge in edge list");
        adj_.assign(static_cast<std::size_t>(n_), {});
        for (const Edge& e : edges_) {
            adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
            adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
        }
        for (auto& nbrs : adj_)
            std::sort(nbrs.begin(), nbrs.end());
    }

    int order() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    const std::vector<Vertex>& neighbors(Vertex v) const {
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(Vertex v) const {
        return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
    }

    int max_degree() const {
        int d = 0;
        for (const auto& nbrs : adj_)
            d = std::max(d, static_cast<int>(nbrs.size()));
        return d;
    }

    bool has_edge(Vertex a, Vertex b) const {
        if (a < 0 || b < 0 || a >= n_ || b >= n_ || a == b)
            return false;
        const auto& nbrs = adj_[static_cast<std::size_t>(a)];
        return std::binary_search(nbrs.begin(), nbrs.end(), b);
    }

    bool has_vertex(Vertex v) const { return v >= 0 && v < n_; }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    std::vector<std::vector<Vertex>> components() const {
        std::vector<std::vector<Vertex>> comps;
        std::vector<bool> seen(static_cast<std::size_t>(n_), false);
        std::vector<Vertex> stack;
        for (Vertex s = 0; s < n_; ++s) {
            if (seen[static_cast<std::size_t>(s)])
                continue;
            std::vector<Vertex> comp;
            stack.push_back(s);
            seen[static_cast<std::size_t>(s)] = true;
            while (!stack.empty()) {
                Vertex v = stack.back();
                stack.pop_back();
                comp.push_back(v);
                for (Vertex w : neighbors(v)) {
                    if (!seen[static_cast<std::size_t>(w)]) {
                        seen[static_cast<std::size_t>(w)] = true;
                        stack.push_back(w);
                    }
                }
            }
            std::sort(comp.begin(), comp.end());
            comps.push_back(std::move(comp));
        }
        return comps;
    }

    /// True iff some component has at least as many edges as vertices.
    bool has_cycle() const {
        for (const auto& comp : components()) {
            long long inside = 0;
            for (Vertex v : comp)
                inside += degree(v);
            if (inside / 2 >= static_cast<long long>(comp.size()))
                return true;
        }
        return false;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
};

// ---------------------------------------------------------------- families

enum class Family { Path, Cycle, Complete, CompleteBipartite, Hypercube, Petersen, Empty };

/// Declarative description of a named graph: kind plus integer parameters
/// (n; or s,t; or dimension d).
struct FamilySpec {
    Family kind{};
    std::vector<int> params;
};

namespace detail {

inline void require(bool ok, const std::string& what) {
    if (!ok)
        throw std::invalid_argument(what);
}

inline int single_param(const FamilySpec& spec, const char* name) {
    require(spec.params.size() == 1, std::string(name) + " takes exactly one parameter");
    return spec.params.front();
}

}  // namespace detail

inline Graph build_family(const FamilySpec& spec) {
    using detail::require;
    std::vector<Edge> edges;
    switch (spec.kind) {
    case Family::Path: {
        int n = detail::single_param(spec, "path");
        require(n >= 1, "path requires n >= 1");
        for (int i = 0; i + 1 < n; ++i)
            edges.push_back({i, i + 1});
        return Graph(n, std::move(edges));
    }
    case Family::Cycle: {
        int n = detail::single_param(spec, "cycle");
        require(n >= 3, "cycle requires n >= 3");
        for (int i = 0; i < n; ++i)
            edges.push_back(make_edge(i, (i + 1) % n));
        return Graph(n, std::move(edges));
    }
    case Family::Complete: {
        int n = detail::single_param(spec, "complete");
        require(n >= 1, "complete requires n >= 1");
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                edges.push_back({u, v});
        return Graph(n, std::move(edges));
    }
    case Family::CompleteBipartite: {
        require(spec.params.size() == 2, "complete_bipartite takes two parameters");
        int s = spec.params[0], t = spec.params[1];
        require(s >= 1 && t >= 1, "complete_bipartite requires s,t >= 1");
        for (int a = 0; a < s; ++a)
            for (int b = 0; b < t; ++b)
                edges.push_back({a, s + b});
        return Graph(s + t, std::move(edges));
    }
    case Family::Hypercube: {
        int d = detail::single_param(spec, "hypercube");
        require(d >= 0 && d < 20, "hypercube requires 0 <= d < 20");
        int n = 1 << d;
        for (int v = 0; v < n; ++v)
            for (int b = 0; b < d; ++b)
                if ((v >> b & 1) == 0)
                    edges.push_back({v, v | (1 << b)});
        return Graph(n, std::move(edges));
    }
    case Family::Petersen: {
        require(spec.params.empty(), "petersen takes no parameters");
        for (int i = 0; i < 5; ++i) {
            edges.push_back(make_edge(i, (i + 1) % 5));          // outer pentagon
            edges.push_back(make_edge(5 + i, 5 + (i + 2) % 5));  // inner pentagram
            edges.push_back({i, i + 5});                         // spokes
        }
        return Graph(10, std::move(edges));
    }
    case Family::Empty: {
        int n = detail::single_param(spec, "empty");
        require(n >= 0, "empty requires n >= 0");
        return Graph(n, {});
    }
    }
    throw std::invalid_argument("unknown family kind");
}

inline Graph path_graph(int n) { return build_family({Family::Path, {n}}); }
inline Graph cycle_graph(int n) { return build_family({Family::Cycle, {n}}); }
inline Graph complete_graph(int n) { return build_family({Family::Complete, {n}}); }
inline Graph petersen_graph() { return build_family({Family::Petersen, {}}); }

/// (max degree, edge count)
inline std::pair<int, int> degree_stats(const Graph& g) {
    return {g.max_degree(), g.edge_count()};
}

/// Disjoint union; h's vertices are relabeled to follow g's.
inline Graph disjoint_union(const Graph& g, const Graph& h) {
    std::vector<Edge> edges = g.edges();
    for (const Edge& e : h.edges())
        edges.push_back({e.u + g.order(), e.v + g.order()});
    return Graph(g.order() + h.order(), std::move(edges));
}

/// Subgraph induced by `vertices` (sorted ascending), relabeled 0..|vertices|-1.
/// Returns the graph and the original labels in index order.
inline std::pair<Graph, std::vector<Vertex>> induced_subgraph(const Graph& g,
                                                              std::vector<Vertex> vertices) {
    std::sort(vertices.begin(), vertices.end());
    std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        index[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        int iu = index[static_cast<std::size_t>(e.u)];
        int iv = index[static_cast<std::size_t>(e.v)];
        if (iu >= 0 && iv >= 0)
            edges.push_back(make_edge(iu, iv));
    }
    return {Graph(static_cast<int>(vertices.size()), std::move(edges)), std::move(vertices)};
}

}  // namespace linarb
