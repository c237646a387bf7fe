#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "linarb/graph.hpp"

namespace linarb {

enum class ProductKind { Cartesian, Lexicographic, Direct, Strong, Join };

inline const char* to_string(ProductKind kind) {
    switch (kind) {
    case ProductKind::Cartesian: return "cartesian";
    case ProductKind::Lexicographic: return "lexicographic";
    case ProductKind::Direct: return "direct";
    case ProductKind::Strong: return "strong";
    case ProductKind::Join: return "join";
    }
    return "?";
}

inline ProductKind product_kind_from_string(const std::string& name) {
    if (name == "cartesian") return ProductKind::Cartesian;
    if (name == "lexicographic") return ProductKind::Lexicographic;
    if (name == "direct") return ProductKind::Direct;
    if (name == "strong") return ProductKind::Strong;
    if (name == "join") return ProductKind::Join;
    throw std::invalid_argument("unknown product kind: " + name);
}

/// Label of pair (u, v) in any pairwise product of g and h: row-major in v.
inline Vertex product_vertex(const Graph& h, Vertex u, Vertex v) {
    return u * h.order() + v;
}

/// Pairwise graph product with vertex set V(g) x V(h), labeled row-major
/// ((u,v) -> u*|V(h)|+v).  Join instead glues complete cross edges onto the
/// disjoint union, keeping g's labels first.
inline Graph product(ProductKind kind, const Graph& g, const Graph& h) {
    std::vector<Edge> edges;
    const int m = h.order();
    if (kind == ProductKind::Join) {
        edges = g.edges();
        for (const Edge& e : h.edges())
            edges.push_back({e.u + g.order(), e.v + g.order()});
        for (Vertex a = 0; a < g.order(); ++a)
            for (Vertex b = 0; b < m; ++b)
                edges.push_back({a, g.order() + b});
        return Graph(g.order() + m, std::move(edges));
    }
    const bool cart = kind == ProductKind::Cartesian || kind == ProductKind::Strong;
    const bool cross = kind == ProductKind::Direct || kind == ProductKind::Strong;
    const bool full = kind == ProductKind::Lexicographic;
    if (cart || full) {
        // copies of h (one per g-vertex) and copies of g (one per h-vertex)
        for (Vertex u = 0; u < g.order(); ++u)
            for (const Edge& e : h.edges())
                edges.push_back({product_vertex(h, u, e.u), product_vertex(h, u, e.v)});
        for (const Edge& e : g.edges())
            for (Vertex v = 0; v < m; ++v)
                edges.push_back({product_vertex(h, e.u, v), product_vertex(h, e.v, v)});
    }
    if (cross) {
        for (const Edge& e : g.edges())
            for (const Edge& f : h.edges()) {
                edges.push_back(make_edge(product_vertex(h, e.u, f.u), product_vertex(h, e.v, f.v)));
                edges.push_back(make_edge(product_vertex(h, e.u, f.v), product_vertex(h, e.v, f.u)));
            }
    }
    if (full) {
        // both diagonals of every cross pair: full bipartite block per g-edge
        for (const Edge& e : g.edges())
            for (Vertex v1 = 0; v1 < m; ++v1)
                for (Vertex v2 = 0; v2 < m; ++v2)
                    if (v1 != v2)
                        edges.push_back(
                            make_edge(product_vertex(h, e.u, v1), product_vertex(h, e.v, v2)));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(g.order() * m, std::move(edges));
}

enum class LayerSide { GLayer, HLayer };

/// Embedding of one factor into a coordinate product: the g-layer at a fixed
/// h-vertex, or the h-layer at a fixed g-vertex.  Returns factor label ->
/// product label.
inline std::vector<Vertex> layer_embed(const Graph& g, const Graph& h, LayerSide side,
                                       Vertex fixed) {
    std::vector<Vertex> map;
    if (side == LayerSide::GLayer) {
        if (!h.has_vertex(fixed))
            throw std::invalid_argument("layer vertex " + std::to_string(fixed) + " out of range");
        map.reserve(static_cast<std::size_t>(g.order()));
        for (Vertex u = 0; u < g.order(); ++u)
            map.push_back(product_vertex(h, u, fixed));
    } else {
        if (!g.has_vertex(fixed))
            throw std::invalid_argument("layer vertex " + std::to_string(fixed) + " out of range");
        map.reserve(static_cast<std::size_t>(h.order()));
        for (Vertex v = 0; v < h.order(); ++v)
            map.push_back(product_vertex(h, fixed, v));
    }
    return map;
}

/// Left fold of a pairwise product over two or more factors:
/// ((g1 * g2) * g3) * ...
inline Graph product_fold(ProductKind kind, std::span<const Graph> factors) {
    if (factors.empty())
        throw std::invalid_argument("product fold requires at least one factor");
    Graph acc = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i)
        acc = product(kind, acc, factors[i]);
    return acc;
}

}  // namespace linarb
