#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "linarb/graph.hpp"
#include "linarb/linear_forest.hpp"
#include "linarb/products.hpp"

namespace linarb {

namespace detail {

inline void require_valid(const Graph& g, const Decomposition& d, const char* which) {
    if (auto bad = verify_decomposition(g, d))
        throw std::invalid_argument(std::string(which) + " decomposition invalid: " +
                                    bad->describe());
}

}  // namespace detail

// -------------------------------------------------------------- base families

/// Path on n vertices: the path itself when k allows it, otherwise the two
/// alternating matchings.
inline Decomposition decompose_path(int n, int k) {
    if (n < 2)
        throw std::invalid_argument("path decomposition requires n >= 2");
    if (k < 1)
        throw std::invalid_argument("path length cap must be at least 1");
    std::vector<std::vector<Edge>> forests(k >= n - 1 ? 1 : 2);
    for (int i = 0; i + 1 < n; ++i)
        forests[k >= n - 1 ? 0 : i % 2].push_back({i, i + 1});
    return Decomposition(k, n, std::move(forests));
}

/// Cycle on n vertices: two alternating matchings when n is even; for odd n,
/// two forests (one bends around vertex 0) when k >= 2, three matchings when
/// k = 1.
inline Decomposition decompose_cycle(int n, int k) {
    if (n < 3)
        throw std::invalid_argument("cycle decomposition requires n >= 3");
    if (k < 1)
        throw std::invalid_argument("path length cap must be at least 1");
    std::vector<std::vector<Edge>> forests;
    auto ring = [n](int i) { return make_edge(i, (i + 1) % n); };
    if (n % 2 == 0) {
        forests.assign(2, {});
        for (int i = 0; i < n; ++i)
            forests[i % 2].push_back(ring(i));
    } else if (k == 1) {
        forests.assign(3, {});
        for (int i = 0; i + 1 < n; ++i)
            forests[i % 2].push_back(ring(i));
        forests[2].push_back(ring(n - 1));
    } else {
        // even-indexed edges plus the wrap edge form matchings and one
        // two-edge path through vertex 0
        forests.assign(2, {});
        for (int i = 0; i + 1 < n; ++i)
            forests[i % 2].push_back(ring(i));
        forests[0].push_back(ring(n - 1));
    }
    return Decomposition(k, n, std::move(forests));
}

namespace detail {

/// Hamiltonian path decomposition of the complete graph on even n: the n/2
/// zigzag rotations j, j+1, j-1, j+2, j-2, ... (mod n).
inline std::vector<std::vector<Edge>> zigzag_paths(int n) {
    std::vector<std::vector<Edge>> forests;
    for (int j = 0; j < n / 2; ++j) {
        std::vector<Edge> path;
        int lo = j, hi = j;
        for (int t = 1; t < n; ++t) {
            int prev = (t % 2 == 1) ? lo : hi;
            int next = (t % 2 == 1) ? (hi = (hi + 1) % n, hi) : (lo = (lo + n - 1) % n, lo);
            path.push_back(make_edge(prev, next));
        }
        forests.push_back(std::move(path));
    }
    return forests;
}

/// Round-robin 1-factorization of the complete graph: n-1 perfect matchings
/// for even n (vertex n-1 fixed), n near-perfect matchings for odd n (one
/// vertex resting per round).
inline std::vector<std::vector<Edge>> round_robin(int n) {
    std::vector<std::vector<Edge>> forests;
    if (n % 2 == 0) {
        int c = n - 1;
        for (int r = 0; r < c; ++r) {
            std::vector<Edge> matching{make_edge(r, n - 1)};
            for (int t = 1; t <= n / 2 - 1; ++t)
                matching.push_back(make_edge((r + t) % c, (r + c - t) % c));
            forests.push_back(std::move(matching));
        }
    } else {
        for (int r = 0; r < n; ++r) {
            std::vector<Edge> matching;
            for (int t = 1; t <= (n - 1) / 2; ++t)
                matching.push_back(make_edge((r + t) % n, (r + n - t) % n));
            forests.push_back(std::move(matching));
        }
    }
    return forests;
}

}  // namespace detail

/// Complete graph on n vertices: ceil(n/2) Hamiltonian paths when k allows
/// whole paths (odd n via the even-order decomposition minus one vertex);
/// otherwise a proper edge coloring, every class a matching.
inline Decomposition decompose_complete(int n, int k) {
    if (n < 2)
        throw std::invalid_argument("complete decomposition requires n >= 2");
    if (k < 1)
        throw std::invalid_argument("path length cap must be at least 1");
    std::vector<std::vector<Edge>> forests;
    if (k >= n - 1) {
        if (n % 2 == 0) {
            forests = detail::zigzag_paths(n);
        } else {
            // drop the extra vertex n from the even-order decomposition;
            // each path loses one vertex and splits into at most two
            for (auto& path : detail::zigzag_paths(n + 1)) {
                std::vector<Edge> kept;
                for (const Edge& e : path)
                    if (e.v != n)
                        kept.push_back(e);
                forests.push_back(std::move(kept));
            }
        }
    } else {
        forests = detail::round_robin(n);
    }
    return Decomposition(k, n, std::move(forests));
}

/// The m perfect matchings M_j = {(a_i, b_(i+j) mod m)} of the complete
/// bipartite graph on sides {0..m-1} and {m..2m-1}.
inline std::vector<std::vector<Edge>> bipartite_matchings(int m) {
    if (m < 1)
        throw std::invalid_argument("bipartite matchings require m >= 1");
    std::vector<std::vector<Edge>> matchings(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < m; ++i)
            matchings[static_cast<std::size_t>(j)].push_back({i, m + (i + j) % m});
    return matchings;
}

/// Fixed optimal decompositions of the Petersen graph (outer cycle 0..4,
/// inner vertices 5..9, spokes i — i+5): four matchings for k = 1, three
/// forests for k = 2 and k = 3, two forests for k >= 4.
inline Decomposition decompose_petersen(int k) {
    if (k < 1)
        throw std::invalid_argument("path length cap must be at least 1");
    std::vector<std::vector<Edge>> forests;
    const std::vector<Edge> spokes{{0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}};
    if (k == 1) {
        forests = {{{0, 1}, {6, 9}, {5, 8}, {2, 3}},
                   {{0, 4}, {1, 2}, {7, 9}},
                   {{3, 4}, {6, 8}, {5, 7}},
                   spokes};
    } else if (k == 2) {
        forests = {{{0, 4}, {4, 9}, {5, 8}, {6, 8}, {1, 2}, {2, 7}},
                   {{2, 3}, {3, 8}, {5, 7}, {7, 9}, {0, 1}, {1, 6}},
                   {{0, 5}, {6, 9}, {3, 4}}};
    } else if (k == 3) {
        forests = {{{0, 1}, {0, 4}, {3, 4}, {6, 8}, {6, 9}, {7, 9}},
                   {{5, 8}, {5, 7}, {2, 3}, {1, 2}},
                   spokes};
    } else {
        forests = {{{1, 2}, {0, 1}, {0, 4}, {3, 4}, {6, 8}, {5, 8}, {5, 7}, {7, 9}},
                   {{2, 7}, {2, 3}, {3, 8}, {4, 9}, {6, 9}, {1, 6}, {0, 5}}};
    }
    return Decomposition(k, 10, std::move(forests));
}

// ------------------------------------------------------------------ splitting

/// A forest's edges partitioned into two matchings by alternating position
/// along each path.
struct SplitPair {
    std::vector<Edge> first;
    std::vector<Edge> second;
    LinearKForest origin;
};

/// Walk each path from its smaller endpoint; edges at even positions go to
/// `first`, odd positions to `second`.  Both sides are matchings.
inline SplitPair alternating_split(const LinearKForest& f) {
    SplitPair split;
    split.origin = f;
    for (const auto& path : forest_components(f)) {
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            Edge e = make_edge(path[i], path[i + 1]);
            (i % 2 == 0 ? split.first : split.second).push_back(e);
        }
    }
    std::sort(split.first.begin(), split.first.end());
    std::sort(split.second.begin(), split.second.end());
    return split;
}

// ------------------------------------------------------------------ composers

/// Copies of every g-forest across all h-layers plus copies of every h-forest
/// across all g-layers: at most p+q forests of the coordinate-wise product.
inline Decomposition compose_cartesian(const Graph& g, const Graph& h, const Decomposition& dg,
                                       const Decomposition& dh) {
    detail::require_valid(g, dg, "first");
    detail::require_valid(h, dh, "second");
    const int m = h.order();
    std::vector<std::vector<Edge>> forests;
    for (const LinearKForest& f : dg.forests()) {
        std::vector<Edge> copy;
        for (Vertex v = 0; v < m; ++v)
            for (const Edge& e : f.edges)
                copy.push_back({product_vertex(h, e.u, v), product_vertex(h, e.v, v)});
        forests.push_back(std::move(copy));
    }
    for (const LinearKForest& f : dh.forests()) {
        std::vector<Edge> copy;
        for (Vertex u = 0; u < g.order(); ++u)
            for (const Edge& e : f.edges)
                copy.push_back({product_vertex(h, u, e.u), product_vertex(h, u, e.v)});
        forests.push_back(std::move(copy));
    }
    return Decomposition(std::max(dg.k(), dh.k()), g.order() * m, std::move(forests));
}

/// Factor decompositions kept on their own sides, plus the cross edges
/// covered by restricting the max(n,m) cyclic-shift matchings of the padded
/// complete bipartite graph to real vertices.
inline Decomposition compose_join(const Graph& g, const Graph& h, const Decomposition& dg,
                                  const Decomposition& dh) {
    detail::require_valid(g, dg, "first");
    detail::require_valid(h, dh, "second");
    const int n = g.order(), m = h.order();
    const int pad = std::max(n, m);
    std::vector<std::vector<Edge>> forests;
    for (const LinearKForest& f : dg.forests())
        forests.push_back(f.edges);
    for (const LinearKForest& f : dh.forests()) {
        std::vector<Edge> shifted;
        for (const Edge& e : f.edges)
            shifted.push_back({e.u + n, e.v + n});
        forests.push_back(std::move(shifted));
    }
    for (int j = 0; j < pad; ++j) {
        std::vector<Edge> matching;
        for (int i = 0; i < n; ++i)
            if ((i + j) % pad < m)
                matching.push_back({i, n + (i + j) % pad});
        forests.push_back(std::move(matching));
    }
    return Decomposition(std::max(dg.k(), dh.k()), n + m, std::move(forests));
}

/// For every g-forest, m parallel forests (one cyclic-shift matching per
/// blown-up edge, the same shift everywhere); plus dh copied into every
/// h-layer: at most p*m+q forests.  Each parallel-forest component projects
/// injectively into its source path, so lengths stay within dg's cap.
inline Decomposition compose_lexicographic(const Graph& g, const Graph& h,
                                           const Decomposition& dg, const Decomposition& dh) {
    detail::require_valid(g, dg, "first");
    detail::require_valid(h, dh, "second");
    const int m = h.order();
    std::vector<std::vector<Edge>> forests;
    for (const LinearKForest& f : dg.forests()) {
        for (int j = 0; j < m; ++j) {
            std::vector<Edge> parallel;
            for (const Edge& e : f.edges)
                for (int s = 0; s < m; ++s)
                    parallel.push_back(
                        {product_vertex(h, e.u, s), product_vertex(h, e.v, (s + j) % m)});
            forests.push_back(std::move(parallel));
        }
    }
    for (const LinearKForest& f : dh.forests()) {
        std::vector<Edge> copy;
        for (Vertex u = 0; u < g.order(); ++u)
            for (const Edge& e : f.edges)
                copy.push_back({product_vertex(h, u, e.u), product_vertex(h, u, e.v)});
        forests.push_back(std::move(copy));
    }
    return Decomposition(std::max(dg.k(), dh.k()), g.order() * m, std::move(forests));
}

/// Split every g-forest into two matchings; for each matching side and each
/// h-forest, take both diagonal edges of every (g-edge, h-edge) pair.  Each
/// output component is a copy of an h-path, so at most 2pq forests whose
/// paths respect dh's cap.
inline Decomposition compose_direct(const Graph& g, const Graph& h, const Decomposition& dg,
                                    const Decomposition& dh) {
    detail::require_valid(g, dg, "first");
    detail::require_valid(h, dh, "second");
    const int m = h.order();
    std::vector<std::vector<Edge>> forests;
    for (const LinearKForest& f : dg.forests()) {
        SplitPair split = alternating_split(f);
        for (const std::vector<Edge>* side : {&split.first, &split.second}) {
            if (side->empty())
                continue;
            for (const LinearKForest& fh : dh.forests()) {
                std::vector<Edge> doubled;
                for (const Edge& e : *side)
                    for (const Edge& w : fh.edges) {
                        doubled.push_back(
                            {product_vertex(h, e.u, w.u), product_vertex(h, e.v, w.v)});
                        doubled.push_back(
                            {product_vertex(h, e.u, w.v), product_vertex(h, e.v, w.u)});
                    }
                forests.push_back(std::move(doubled));
            }
        }
    }
    return Decomposition(std::max(dg.k(), dh.k()), g.order() * m, std::move(forests));
}

/// Concatenation of the coordinate-wise and diagonal constructions; their
/// edge sets partition the strong product's edges.
inline Decomposition compose_strong(const Graph& g, const Graph& h, const Decomposition& dg,
                                    const Decomposition& dh) {
    Decomposition cart = compose_cartesian(g, h, dg, dh);
    Decomposition diag = compose_direct(g, h, dg, dh);
    std::vector<std::vector<Edge>> forests;
    for (const LinearKForest& f : cart.forests())
        forests.push_back(f.edges);
    for (const LinearKForest& f : diag.forests())
        forests.push_back(f.edges);
    return Decomposition(std::max(dg.k(), dh.k()), g.order() * h.order(), std::move(forests));
}

inline Decomposition compose_product(ProductKind kind, const Graph& g, const Graph& h,
                                     const Decomposition& dg, const Decomposition& dh) {
    switch (kind) {
    case ProductKind::Cartesian: return compose_cartesian(g, h, dg, dh);
    case ProductKind::Lexicographic: return compose_lexicographic(g, h, dg, dh);
    case ProductKind::Direct: return compose_direct(g, h, dg, dh);
    case ProductKind::Strong: return compose_strong(g, h, dg, dh);
    case ProductKind::Join: return compose_join(g, h, dg, dh);
    }
    throw std::invalid_argument("unknown product kind");
}

/// Left fold of compose_cartesian over one or more factors (identity for a
/// single factor): at most sum(p_i) forests.
inline Decomposition fold_cartesian(std::span<const Graph> factors,
                                    std::span<const Decomposition> ds) {
    if (factors.empty() || factors.size() != ds.size())
        throw std::invalid_argument("fold requires one decomposition per factor, at least one");
    Graph acc_graph = factors[0];
    Decomposition acc = ds[0];
    for (std::size_t i = 1; i < factors.size(); ++i) {
        acc = compose_cartesian(acc_graph, factors[i], acc, ds[i]);
        acc_graph = product(ProductKind::Cartesian, acc_graph, factors[i]);
    }
    return acc;
}

/// Constructive decomposition for the families that have one.
inline Decomposition family_decomposition(const FamilySpec& spec, int k) {
    switch (spec.kind) {
    case Family::Path: {
        int n = detail::single_param(spec, "path");
        return n == 1 ? Decomposition(k, 1, {}) : decompose_path(n, k);
    }
    case Family::Cycle: return decompose_cycle(detail::single_param(spec, "cycle"), k);
    case Family::Complete: {
        int n = detail::single_param(spec, "complete");
        return n == 1 ? Decomposition(k, 1, {}) : decompose_complete(n, k);
    }
    case Family::Petersen: return decompose_petersen(k);
    case Family::Hypercube: {
        int d = detail::single_param(spec, "hypercube");
        if (d == 0)
            return Decomposition(k, 1, {});
        std::vector<Graph> factors(static_cast<std::size_t>(d), path_graph(2));
        std::vector<Decomposition> ds(static_cast<std::size_t>(d), decompose_path(2, k));
        return fold_cartesian(factors, ds);
    }
    case Family::Empty:
        return Decomposition(k, detail::single_param(spec, "empty"), {});
    default:
        throw std::invalid_argument("no constructive decomposition for this family");
    }
}

}  // namespace linarb
