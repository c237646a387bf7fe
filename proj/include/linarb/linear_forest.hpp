#pragma once

#include <cassert>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "linarb/graph.hpp"

namespace linarb {

/// Candidate linear forest: a bag of edges meant to form vertex-disjoint
/// paths of at most k edges each.  Edges are kept sorted; duplicates are
/// preserved so that untrusted input can be faulted by the verifier.
struct LinearKForest {
    int k = 1;
    std::vector<Edge> edges;

    LinearKForest() = default;
    LinearKForest(int k_in, std::vector<Edge> edges_in) : k(k_in), edges(std::move(edges_in)) {
        std::sort(edges.begin(), edges.end());
    }
    int edge_count() const { return static_cast<int>(edges.size()); }
};

/// Candidate decomposition: forests meant to partition the edge set of some
/// n-vertex graph.  Empty forests are dropped on construction.
class Decomposition {
public:
    Decomposition() = default;

    Decomposition(int k, int n, std::vector<std::vector<Edge>> forests) : k_(k), n_(n) {
        if (k_ < 1)
            throw std::invalid_argument("path length cap must be at least 1");
        if (n_ < 0)
            throw std::invalid_argument("vertex count must be nonnegative");
        for (auto& edges : forests)
            if (!edges.empty())
                forests_.emplace_back(k_, std::move(edges));
    }

    int k() const { return k_; }
    int order() const { return n_; }
    int size() const { return static_cast<int>(forests_.size()); }
    const std::vector<LinearKForest>& forests() const { return forests_; }

private:
    int k_ = 1;
    int n_ = 0;
    std::vector<LinearKForest> forests_;
};

enum class ViolationKind {
    DuplicateEdge,
    ForeignEdge,
    DegreeExceeded,
    Cycle,
    ComponentTooLong,
    MissingEdge,
};

inline const char* to_string(ViolationKind kind) {
    switch (kind) {
    case ViolationKind::DuplicateEdge: return "duplicate-edge";
    case ViolationKind::ForeignEdge: return "foreign-edge";
    case ViolationKind::DegreeExceeded: return "degree-exceeded";
    case ViolationKind::Cycle: return "cycle";
    case ViolationKind::ComponentTooLong: return "component-too-long";
    case ViolationKind::MissingEdge: return "missing-edge";
    }
    return "?";
}

/// First defect found in a candidate forest or decomposition, with a witness:
/// the offending edge, vertex, or component, plus the forest it sits in
/// (-1 when the defect is not tied to one forest).
struct Violation {
    ViolationKind kind{};
    int forest = -1;
    Vertex vertex = -1;
    Edge edge{-1, -1};
    std::vector<Vertex> component;

    std::string describe() const {
        std::ostringstream out;
        out << to_string(kind);
        if (forest >= 0)
            out << " in forest " << forest;
        switch (kind) {
        case ViolationKind::DegreeExceeded:
            out << " at vertex " << vertex;
            break;
        case ViolationKind::DuplicateEdge:
        case ViolationKind::ForeignEdge:
        case ViolationKind::Cycle:
        case ViolationKind::MissingEdge:
            out << " at edge (" << edge.u << "," << edge.v << ")";
            break;
        case ViolationKind::ComponentTooLong: {
            out << " on path";
            for (Vertex v : component)
                out << ' ' << v;
            break;
        }
        }
        return out.str();
    }
};

namespace detail {

/// Union-find over forest edges; unite reports whether the edge joined two
/// distinct components (false means it would close a cycle).
class PathForestScan {
public:
    explicit PathForestScan(int n) : parent_(static_cast<std::size_t>(n)) {
        for (int v = 0; v < n; ++v)
            parent_[static_cast<std::size_t>(v)] = v;
    }

    int find(int x) const {
        while (parent_[static_cast<std::size_t>(x)] != x)
            x = parent_[static_cast<std::size_t>(x)];
        return x;
    }

    bool unite(int a, int b) {
        int ra = find(a), rb = find(b);
        if (ra == rb)
            return false;
        parent_[static_cast<std::size_t>(ra)] = rb;
        return true;
    }

private:
    std::vector<int> parent_;
};

/// Vertex sequence of the path component containing `start`, reported from
/// its smaller endpoint.  The edges around `start` must form a valid path.
inline std::vector<Vertex> trace_path(const std::vector<Edge>& edges, int n, Vertex start) {
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
    for (const Edge& e : edges) {
        adj[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    // collect the component, then walk it from its smaller endpoint
    std::vector<Vertex> member;
    std::vector<Vertex> stack{start};
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    seen[static_cast<std::size_t>(start)] = true;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        member.push_back(v);
        for (Vertex w : adj[static_cast<std::size_t>(v)])
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                stack.push_back(w);
            }
    }
    Vertex end = -1;
    for (Vertex v : member)
        if (adj[static_cast<std::size_t>(v)].size() <= 1 && (end == -1 || v < end))
            end = v;
    std::vector<Vertex> path;
    Vertex prev = -1, cur = end;
    while (cur != -1) {
        path.push_back(cur);
        Vertex next = -1;
        for (Vertex w : adj[static_cast<std::size_t>(cur)])
            if (w != prev) {
                next = w;
                break;
            }
        prev = std::exchange(cur, next);
    }
    return path;
}

}  // namespace detail

/// Checks one candidate forest against its host graph.  Defects are reported
/// in a fixed scan order (duplicate, foreign, degree, cycle, length) so the
/// same bad input always yields the same witness.  Returns nullopt when the
/// forest is a genuine linear forest of g with paths of at most f.k edges.
inline std::optional<Violation> verify_forest(const Graph& g, const LinearKForest& f) {
    if (f.k < 1)
        throw std::invalid_argument("path length cap must be at least 1");
    assert(std::is_sorted(f.edges.begin(), f.edges.end()));
    for (std::size_t i = 0; i + 1 < f.edges.size(); ++i)
        if (f.edges[i] == f.edges[i + 1])
            return Violation{ViolationKind::DuplicateEdge, -1, -1, f.edges[i], {}};
    for (const Edge& e : f.edges)
        if (!g.has_edge(e.u, e.v))
            return Violation{ViolationKind::ForeignEdge, -1, -1, e, {}};

    const int n = g.order();
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (const Edge& e : f.edges) {
        ++deg[static_cast<std::size_t>(e.u)];
        ++deg[static_cast<std::size_t>(e.v)];
    }
    for (Vertex v = 0; v < n; ++v)
        if (deg[static_cast<std::size_t>(v)] > 2)
            return Violation{ViolationKind::DegreeExceeded, -1, v, {-1, -1}, {}};

    detail::PathForestScan scan(n);
    for (const Edge& e : f.edges)
        if (!scan.unite(e.u, e.v))
            return Violation{ViolationKind::Cycle, -1, -1, e, {}};

    // Components are now vertex-disjoint paths; fault the first (by smallest
    // member) that exceeds k edges.
    std::vector<int> edges_in(static_cast<std::size_t>(n), 0);
    for (const Edge& e : f.edges)
        ++edges_in[static_cast<std::size_t>(scan.find(e.u))];
    for (Vertex v = 0; v < n; ++v) {
        if (deg[static_cast<std::size_t>(v)] == 0)
            continue;
        if (edges_in[static_cast<std::size_t>(scan.find(v))] > f.k) {
            Violation bad{ViolationKind::ComponentTooLong, -1, -1, {-1, -1}, {}};
            bad.component = detail::trace_path(f.edges, n, v);
            return bad;
        }
    }
    // a valid forest can never beat the packing cap floor(k*n/(k+1))
    assert(static_cast<long long>(f.edges.size()) <=
           static_cast<long long>(f.k) * n / (f.k + 1));
    return std::nullopt;
}

/// Checks a candidate decomposition of g: every forest individually valid and
/// the union of forests exactly E(g) — no duplicates across forests, nothing
/// missing, nothing foreign.
inline std::optional<Violation> verify_decomposition(const Graph& g, const Decomposition& d) {
    if (d.order() != g.order())
        return Violation{ViolationKind::ForeignEdge, -1, -1, {-1, -1}, {}};
    for (int i = 0; i < d.size(); ++i) {
        LinearKForest f = d.forests()[static_cast<std::size_t>(i)];
        f.k = d.k();
        if (auto bad = verify_forest(g, f)) {
            bad->forest = i;
            return bad;
        }
    }
    std::vector<std::pair<Edge, int>> all;
    for (int i = 0; i < d.size(); ++i)
        for (const Edge& e : d.forests()[static_cast<std::size_t>(i)].edges)
            all.emplace_back(e, i);
    std::sort(all.begin(), all.end());
    for (std::size_t i = 0; i + 1 < all.size(); ++i)
        if (all[i].first == all[i + 1].first)
            return Violation{ViolationKind::DuplicateEdge, all[i + 1].second, -1, all[i].first, {}};
    std::size_t at = 0;
    for (const Edge& e : g.edges()) {
        while (at < all.size() && all[at].first < e)
            ++at;
        if (at == all.size() || all[at].first != e)
            return Violation{ViolationKind::MissingEdge, -1, -1, e, {}};
    }
    return std::nullopt;
}

/// Path components of a valid forest, each as a vertex sequence from its
/// smaller endpoint, ordered by smallest member.  Isolated vertices are not
/// invented: only vertices touched by edges appear.  Throws if the edges do
/// not form vertex-disjoint paths.
inline std::vector<std::vector<Vertex>> forest_components(const LinearKForest& f) {
    Vertex top = -1;
    for (const Edge& e : f.edges) {
        if (e.u < 0 || e.u >= e.v)
            throw std::invalid_argument("malformed edge in forest");
        top = std::max(top, e.v);
    }
    const int n = top + 1;
    for (std::size_t i = 0; i + 1 < f.edges.size(); ++i)
        if (f.edges[i] == f.edges[i + 1])
            throw std::invalid_argument("duplicate edge in forest");
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (const Edge& e : f.edges) {
        ++deg[static_cast<std::size_t>(e.u)];
        ++deg[static_cast<std::size_t>(e.v)];
    }
    for (int v = 0; v < n; ++v)
        if (deg[static_cast<std::size_t>(v)] > 2)
            throw std::invalid_argument("vertex of degree three in forest");
    detail::PathForestScan scan(n);
    for (const Edge& e : f.edges)
        if (!scan.unite(e.u, e.v))
            throw std::invalid_argument("cycle in forest");

    std::vector<std::vector<Vertex>> comps;
    std::vector<bool> done(static_cast<std::size_t>(n), false);
    for (Vertex v = 0; v < n; ++v) {
        if (deg[static_cast<std::size_t>(v)] == 0 || done[static_cast<std::size_t>(v)])
            continue;
        auto path = detail::trace_path(f.edges, n, v);
        for (Vertex w : path)
            done[static_cast<std::size_t>(w)] = true;
        comps.push_back(std::move(path));
    }
    return comps;
}

}  // namespace linarb
