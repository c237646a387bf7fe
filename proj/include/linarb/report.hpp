#pragma once

#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "linarb/bounds.hpp"
#include "linarb/decompose.hpp"
#include "linarb/exact.hpp"
#include "linarb/graph.hpp"
#include "linarb/linear_forest.hpp"
#include "linarb/products.hpp"

namespace linarb {

enum class Network {
    Grid,
    Mesh,
    Torus,
    GeneralizedHypercube,
    HyperPetersenCart,
    HyperPetersenLex,
    HyperPetersenDir,
    HyperPetersenStr,
};

inline const char* to_string(Network n) {
    switch (n) {
    case Network::Grid: return "grid";
    case Network::Mesh: return "mesh";
    case Network::Torus: return "torus";
    case Network::GeneralizedHypercube: return "generalized_hypercube";
    case Network::HyperPetersenCart: return "hyper_petersen_cart";
    case Network::HyperPetersenLex: return "hyper_petersen_lex";
    case Network::HyperPetersenDir: return "hyper_petersen_dir";
    case Network::HyperPetersenStr: return "hyper_petersen_str";
    }
    return "?";
}

inline Network network_from_string(const std::string& name) {
    if (name == "grid") return Network::Grid;
    if (name == "mesh") return Network::Mesh;
    if (name == "torus") return Network::Torus;
    if (name == "generalized_hypercube") return Network::GeneralizedHypercube;
    if (name == "hyper_petersen_cart") return Network::HyperPetersenCart;
    if (name == "hyper_petersen_lex") return Network::HyperPetersenLex;
    if (name == "hyper_petersen_dir") return Network::HyperPetersenDir;
    if (name == "hyper_petersen_str") return Network::HyperPetersenStr;
    throw std::invalid_argument("unknown network: " + name);
}

/// A named interconnection topology plus its dimension sizes (or n for the
/// hyper-Petersen family).
struct NetworkSpec {
    Network network{};
    std::vector<int> params;
};

struct ReportRow {
    std::string network;  // e.g. "grid:cartesian"
    std::string params;   // e.g. "4x3"
    int k = 1;
    long long lower = 0;
    long long upper = 0;
    std::optional<long long> exact;
    std::string provenance;  // semicolon-joined tag=value pairs and flags
};

struct ReportOptions {
    bool with_exact = true;          // append an exact column on small instances
    int exact_edge_cap = 24;         // only solve products up to this many edges
    std::uint64_t exact_node_budget = 5'000'000;
};

namespace detail {

struct Factor {
    Graph graph;
    Decomposition dec;
    BoundReport report;
};

inline Factor make_factor(const Graph& graph, Decomposition dec, int k) {
    BoundReport report = lower_bound_report(graph, k);
    report.upper = dec.size();
    return {graph, std::move(dec), std::move(report)};
}

/// The one factor whose true value the solver pins down cheaply; its bound
/// report carries lower = exact so product intervals inherit it.
inline Factor make_petersen_factor(int k, std::uint64_t node_budget) {
    Factor f{petersen_graph(), decompose_petersen(k), {}};
    f.report.k = k;
    f.report.upper = f.dec.size();
    ExactResult res = exact_la_k(f.graph, k, {std::nullopt, node_budget});
    if (res.status == ExactStatus::Exact) {
        f.report.lower = res.value;
        f.report.provenance.push_back({"factor-exact", res.value});
    } else {
        f.report = lower_bound_report(f.graph, k);
        f.report.upper = f.dec.size();
    }
    return f;
}

inline std::string params_string(const std::vector<int>& params) {
    std::string out;
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i)
            out += 'x';
        out += std::to_string(params[i]);
    }
    return out;
}

inline std::string provenance_string(const BoundReport& report,
                                     const std::vector<std::string>& extra) {
    std::string out;
    for (const BoundSource& src : report.provenance) {
        if (!out.empty())
            out += ';';
        out += src.tag + "=" + std::to_string(src.value);
    }
    for (const std::string& item : extra) {
        if (!out.empty())
            out += ';';
        out += item;
    }
    return out;
}

inline void append_exact(ReportRow& row, const Graph& product_graph, int k,
                         const ReportOptions& opts) {
    if (!opts.with_exact || product_graph.edge_count() > opts.exact_edge_cap)
        return;
    ExactResult res = exact_la_k(product_graph, k, {std::nullopt, opts.exact_node_budget});
    if (res.status == ExactStatus::Exact)
        row.exact = res.value;
}

/// One row for a product of the given factors: constructive upper (fold of
/// the per-factor decompositions), interval-combined lower, optional exact.
inline ReportRow product_row(const std::string& name, const std::string& params,
                             ProductKind kind, const std::vector<Factor>& factors, int k,
                             const ReportOptions& opts,
                             const std::vector<std::string>& extra_tags = {}) {
    Graph acc_graph = factors[0].graph;
    Decomposition acc_dec = factors[0].dec;
    BoundReport interval = factors[0].report;
    for (std::size_t i = 1; i < factors.size(); ++i) {
        const Factor& next = factors[i];
        std::vector<Graph> pair{acc_graph, next.graph};
        std::vector<int> ks{k, k};
        std::vector<BoundReport> reports{interval, next.report};
        interval = product_bound_interval(kind, pair, ks, reports);
        acc_dec = compose_product(kind, acc_graph, next.graph, acc_dec, next.dec);
        acc_graph = product(kind, acc_graph, next.graph);
    }
    if (auto bad = verify_decomposition(acc_graph, acc_dec))
        throw std::logic_error("composed decomposition failed verification: " + bad->describe());

    ReportRow row;
    row.network = name;
    row.params = params;
    row.k = k;
    row.lower = interval.lower;
    row.upper = acc_dec.size();
    std::vector<std::string> extra = extra_tags;
    extra.push_back("construction=" + std::to_string(acc_dec.size()));
    row.provenance = provenance_string(interval, extra);
    append_exact(row, acc_graph, k, opts);
    return row;
}

/// The lexicographic product of cliques is one big clique; bound that clique
/// directly instead of composing, and carry the additive sum forms alongside
/// for comparison (they disagree, hence the flag).
inline ReportRow clique_collapse_row(const std::string& params, const std::vector<int>& sizes,
                                     int k, const ReportOptions& opts) {
    long long total = 1, sum = 0;
    for (int m : sizes) {
        total *= m;
        sum += m;
        if (total > 4096)
            throw std::invalid_argument("lexicographic hypercube row too large");
    }
    const int n = static_cast<int>(total);
    Graph clique = complete_graph(n);
    Decomposition dec = decompose_complete(n, k);
    if (auto bad = verify_decomposition(clique, dec))
        throw std::logic_error("clique decomposition failed verification: " + bad->describe());
    BoundReport lower = lower_bound_report(clique, k);

    ReportRow row;
    row.network = "generalized_hypercube:lexicographic";
    row.params = params;
    row.k = k;
    row.lower = lower.lower;
    row.upper = dec.size();
    std::ostringstream half;
    if (sum % 2 == 0)
        half << sum / 2;
    else
        half << std::fixed << std::setprecision(1) << sum / 2.0;
    std::vector<std::string> extra{
        "clique-collapse=" + std::to_string(n),
        "construction=" + std::to_string(dec.size()),
        "sum-form-lower=" + std::to_string((sum + 1) / 2),
        "sum-form-upper=" + half.str(),
        "flag:stated-bound-mismatch",
    };
    row.provenance = provenance_string(lower, extra);
    append_exact(row, clique, k, opts);
    return row;
}

inline void require_params(bool ok, const std::string& what) {
    if (!ok)
        throw std::invalid_argument(what);
}

}  // namespace detail

/// Bound rows for one named network at one k, every value recomputed from the
/// bound/construction/search modules.  Coordinate-product networks (grid,
/// mesh, torus, generalized hypercube) yield four rows, one per product; the
/// hyper-Petersen networks fix their product and yield one row.
inline std::vector<ReportRow> report_network(const NetworkSpec& spec, int k,
                                             const ReportOptions& opts = {}) {
    using detail::require_params;
    if (k < 1)
        throw std::invalid_argument("path length cap must be at least 1");
    const std::string params = detail::params_string(spec.params);
    std::vector<ReportRow> rows;

    auto coordinate_rows = [&](const std::string& base, const std::vector<detail::Factor>& fs,
                               bool clique_lex) {
        static constexpr ProductKind kinds[] = {ProductKind::Cartesian, ProductKind::Lexicographic,
                                                ProductKind::Direct, ProductKind::Strong};
        for (ProductKind kind : kinds) {
            std::string name = base + ":" + to_string(kind);
            if (clique_lex && kind == ProductKind::Lexicographic)
                rows.push_back(detail::clique_collapse_row(params, spec.params, k, opts));
            else
                rows.push_back(detail::product_row(name, params, kind, fs, k, opts));
        }
    };

    switch (spec.network) {
    case Network::Grid:
    case Network::Mesh: {
        bool grid = spec.network == Network::Grid;
        require_params(!grid || spec.params.size() == 2, "grid takes exactly two sizes");
        require_params(!spec.params.empty(), "mesh takes at least one size");
        std::vector<detail::Factor> fs;
        for (int m : spec.params) {
            require_params(m >= 2, "path sizes must be at least 2");
            fs.push_back(detail::make_factor(path_graph(m), decompose_path(m, k), k));
        }
        coordinate_rows(grid ? "grid" : "mesh", fs, false);
        break;
    }
    case Network::Torus: {
        require_params(!spec.params.empty(), "torus takes at least one size");
        std::vector<detail::Factor> fs;
        for (int m : spec.params) {
            require_params(m >= 3, "torus sizes must be at least 3");
            fs.push_back(detail::make_factor(cycle_graph(m), decompose_cycle(m, k), k));
        }
        coordinate_rows("torus", fs, false);
        break;
    }
    case Network::GeneralizedHypercube: {
        require_params(!spec.params.empty(), "generalized hypercube takes at least one size");
        std::vector<detail::Factor> fs;
        for (int m : spec.params) {
            require_params(m >= 2, "clique sizes must be at least 2");
            fs.push_back(detail::make_factor(complete_graph(m), decompose_complete(m, k), k));
        }
        coordinate_rows("generalized_hypercube", fs, true);
        break;
    }
    case Network::HyperPetersenCart:
    case Network::HyperPetersenLex:
    case Network::HyperPetersenDir:
    case Network::HyperPetersenStr: {
        require_params(spec.params.size() == 1 && spec.params[0] >= 3,
                       "hyper-Petersen networks take one dimension n >= 3");
        const int n = spec.params[0];
        ProductKind kind = ProductKind::Cartesian;
        if (spec.network == Network::HyperPetersenLex)
            kind = ProductKind::Lexicographic;
        else if (spec.network == Network::HyperPetersenDir)
            kind = ProductKind::Direct;
        else if (spec.network == Network::HyperPetersenStr)
            kind = ProductKind::Strong;
        const std::string name = to_string(spec.network);
        detail::Factor pet = detail::make_petersen_factor(k, opts.exact_node_budget);
        std::vector<std::string> flags;
        if (spec.network == Network::HyperPetersenLex)
            flags.push_back("flag:stated-bound-mismatch");
        if (n == 3) {
            // one-dimensional base case: the product collapses to the base graph
            ReportRow row;
            row.network = name;
            row.params = params;
            row.k = k;
            row.lower = pet.report.lower;
            row.upper = pet.dec.size();
            std::vector<std::string> extra = flags;
            extra.push_back("construction=" + std::to_string(pet.dec.size()));
            row.provenance = detail::provenance_string(pet.report, extra);
            detail::append_exact(row, pet.graph, k, opts);
            rows.push_back(row);
            break;
        }
        for (const BoundSource& src : pet.report.provenance)
            if (src.tag == "factor-exact")
                flags.insert(flags.begin(), "factor-exact=" + std::to_string(src.value));
        FamilySpec cube{Family::Hypercube, {n - 3}};
        detail::Factor q =
            detail::make_factor(build_family(cube), family_decomposition(cube, k), k);
        rows.push_back(detail::product_row(name, params, kind, {pet, q}, k, opts, flags));
        break;
    }
    }
    return rows;
}

inline std::string rows_to_csv(const std::vector<ReportRow>& rows) {
    std::ostringstream out;
    out << "network,params,k,lower,upper,exact?,provenance\n";
    for (const ReportRow& row : rows) {
        out << row.network << ',' << row.params << ',' << row.k << ',' << row.lower << ','
            << row.upper << ',';
        if (row.exact)
            out << *row.exact;
        out << ',' << row.provenance << '\n';
    }
    return out.str();
}

inline std::string rows_to_text(const std::vector<ReportRow>& rows) {
    static constexpr const char* headers[] = {"network", "params", "k",
                                              "lower",   "upper",  "exact?"};
    std::vector<std::vector<std::string>> cells;
    for (const ReportRow& row : rows)
        cells.push_back({row.network, row.params, std::to_string(row.k),
                         std::to_string(row.lower), std::to_string(row.upper),
                         row.exact ? std::to_string(*row.exact) : "-", row.provenance});
    std::size_t width[6] = {};
    for (std::size_t c = 0; c < 6; ++c) {
        width[c] = std::string(headers[c]).size();
        for (const auto& row : cells)
            width[c] = std::max(width[c], row[c].size());
    }
    std::ostringstream out;
    for (std::size_t c = 0; c < 6; ++c)
        out << std::left << std::setw(static_cast<int>(width[c]) + 2) << headers[c];
    out << "provenance\n";
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < 6; ++c)
            out << std::left << std::setw(static_cast<int>(width[c]) + 2) << row[c];
        out << row[6] << '\n';
    }
    return out.str();
}

}  // namespace linarb
