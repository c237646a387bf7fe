#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "linarb/graph.hpp"
#include "linarb/products.hpp"

namespace linarb {

/// One contributing bound with the mechanism that produced it.
struct BoundSource {
    std::string tag;
    long long value = 0;
};

/// Lower/upper bracket for the minimum number of linear k-forests, with every
/// contributing value tagged by the mechanism that produced it.
struct BoundReport {
    int k = 1;
    long long lower = 0;
    std::optional<long long> upper;  // nullopt = unknown
    std::vector<BoundSource> provenance;
};

/// Largest edge count a single linear k-forest on n vertices can have.
inline long long forest_edge_cap(int k, int n) {
    return static_cast<long long>(k) * n / (k + 1);
}

inline long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

/// Closed-form lower bound on the number of linear k-forests needed for g:
/// half the maximum degree, the packing bound |E| / cap, and 2 for any graph
/// containing a cycle.  0 for edgeless graphs.
inline BoundReport lower_bound_report(const Graph& g, int k) {
    if (k < 1)
        throw std::invalid_argument("path length cap must be at least 1");
    BoundReport report;
    report.k = k;
    if (g.edge_count() == 0)
        return report;
    long long by_degree = ceil_div(g.max_degree(), 2);
    long long by_capacity = ceil_div(g.edge_count(), forest_edge_cap(k, g.order()));
    report.provenance.push_back({"degree-bound", by_degree});
    report.provenance.push_back({"capacity-bound", by_capacity});
    report.lower = std::max(by_degree, by_capacity);
    if (g.has_cycle()) {
        report.provenance.push_back({"cycle-bound", 2});
        report.lower = std::max(report.lower, 2LL);
    }
    return report;
}

inline long long lower_bound(const Graph& g, int k) { return lower_bound_report(g, k).lower; }

namespace detail {

/// Product graphs beyond this order are not materialized for the cycle test;
/// skipping the test only loosens the lower side.
constexpr long long kCycleProbeOrderCap = 200000;

inline bool product_has_cycle(ProductKind kind, std::span<const Graph> factors) {
    long long order = 1;
    for (const Graph& f : factors) {
        order *= std::max(1, f.order());
        if (order > kCycleProbeOrderCap)
            return false;
    }
    return product_fold(kind, factors).has_cycle();
}

}  // namespace detail

/// Bound interval for a product from the factor graphs and their per-factor
/// intervals.  The lower side combines factor lowers (or factor degrees,
/// depending on the product); the upper side combines factor uppers and is
/// unknown if any factor upper is unknown.  The interval is indexed at
/// max(factor k's).  Cartesian accepts two or more factors; the other
/// products are pairwise.
inline BoundReport product_bound_interval(ProductKind kind, std::span<const Graph> factors,
                                          std::span<const int> ks,
                                          std::span<const BoundReport> factor_reports) {
    if (factors.size() != ks.size() || factors.size() != factor_reports.size())
        throw std::invalid_argument("factor, k, and report counts must agree");
    if (kind == ProductKind::Cartesian ? factors.size() < 2 : factors.size() != 2)
        throw std::invalid_argument(std::string("product '") + to_string(kind) +
                                    "' takes " +
                                    (kind == ProductKind::Cartesian ? "two or more factors"
                                                                    : "exactly two factors"));
    for (int k : ks)
        if (k < 1)
            throw std::invalid_argument("path length cap must be at least 1");

    BoundReport out;
    out.k = *std::max_element(ks.begin(), ks.end());
    bool upper_known = true;
    for (const BoundReport& r : factor_reports)
        upper_known = upper_known && r.upper.has_value();

    switch (kind) {
    case ProductKind::Cartesian: {
        long long lo = 0, hi = 0;
        for (const BoundReport& r : factor_reports) {
            lo = std::max(lo, r.lower);
            if (upper_known)
                hi += *r.upper;
        }
        out.lower = lo;
        out.provenance.push_back({"factor-max", lo});
        if (upper_known) {
            out.upper = hi;
            out.provenance.push_back({"factor-sum", hi});
        }
        break;
    }
    case ProductKind::Join: {
        const Graph& g = factors[0];
        const Graph& h = factors[1];
        long long lo = std::max(ceil_div(g.max_degree() + h.order(), 2),
                                ceil_div(h.max_degree() + g.order(), 2));
        out.lower = lo;
        out.provenance.push_back({"join-degree", lo});
        if (upper_known) {
            out.upper = *factor_reports[0].upper + *factor_reports[1].upper +
                        std::max(g.order(), h.order());
            out.provenance.push_back({"cross-matchings", *out.upper});
        }
        break;
    }
    case ProductKind::Lexicographic: {
        const Graph& g = factors[0];
        const Graph& h = factors[1];
        long long lo = ceil_div(h.max_degree() +
                                    static_cast<long long>(h.order()) * g.max_degree(),
                                2);
        out.lower = lo;
        out.provenance.push_back({"blowup-degree", lo});
        if (upper_known) {
            out.upper = *factor_reports[0].upper * h.order() + *factor_reports[1].upper;
            out.provenance.push_back({"blowup-sum", *out.upper});
        }
        break;
    }
    case ProductKind::Direct: {
        long long lo =
            ceil_div(static_cast<long long>(factors[0].max_degree()) * factors[1].max_degree(),
                     2);
        out.lower = lo;
        out.provenance.push_back({"degree-product", lo});
        if (upper_known) {
            out.upper = 2 * *factor_reports[0].upper * *factor_reports[1].upper;
            out.provenance.push_back({"split-product", *out.upper});
        }
        break;
    }
    case ProductKind::Strong: {
        long long dg = factors[0].max_degree(), dh = factors[1].max_degree();
        long long lo = ceil_div(dg * dh + dg + dh, 2);
        out.lower = lo;
        out.provenance.push_back({"degree-mixed", lo});
        if (upper_known) {
            long long p = *factor_reports[0].upper, q = *factor_reports[1].upper;
            out.upper = p + q + 2 * p * q;
            out.provenance.push_back({"cart-plus-direct", *out.upper});
        }
        break;
    }
    }
    if (out.lower < 2 && detail::product_has_cycle(kind, factors)) {
        out.lower = 2;
        out.provenance.push_back({"cycle-bound", 2});
    }
    if (out.upper && out.lower > *out.upper)
        throw std::invalid_argument("factor reports produce an empty interval");
    return out;
}

/// Checks a sequence of solved values (index i holds the value at cap i+1)
/// for legality: non-increasing, and the first value at most max_degree + 1.
/// Returns the 1-based cap of the first offending entry, or nullopt if the
/// chain is legal.
inline std::optional<int> chain_check(std::span<const long long> values, int max_degree) {
    if (values.empty())
        return std::nullopt;
    if (values.front() > max_degree + 1)
        return 1;
    for (std::size_t i = 1; i < values.size(); ++i)
        if (values[i] > values[i - 1])
            return static_cast<int>(i) + 1;
    return std::nullopt;
}

}  // namespace linarb
