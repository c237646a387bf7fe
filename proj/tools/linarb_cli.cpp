// Command-line front end: generate graphs, combine products, print bounds,
// construct or search for decompositions, verify certificates, and emit the
// benchmark-network report tables.
//
// Exit codes: 0 success, 1 verification failure or infeasible instance,
// 2 parse or parameter error, 3 search budget exhausted.

#include <CLI11.hpp>

#include "linarb/exact.hpp"
#include "linarb/io.hpp"
#include "linarb/report.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace linarb;

std::string read_text(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::invalid_argument("cannot open '" + path + "' for writing");
    out << text;
}

Family family_from_string(const std::string& name) {
    if (name == "path") return Family::Path;
    if (name == "cycle") return Family::Cycle;
    if (name == "complete") return Family::Complete;
    if (name == "complete_bipartite") return Family::CompleteBipartite;
    if (name == "hypercube") return Family::Hypercube;
    if (name == "petersen") return Family::Petersen;
    if (name == "empty") return Family::Empty;
    throw std::invalid_argument("unknown family '" + name + "'");
}

SearchBudget make_budget(std::optional<std::uint64_t> ms, std::optional<std::uint64_t> nodes) {
    SearchBudget b;
    b.max_ms = ms;
    b.max_nodes = nodes;
    return b;
}

std::string bound_report_text(const BoundReport& r) {
    std::ostringstream out;
    out << "k " << r.k << "\n";
    out << "lower " << r.lower << "\n";
    if (r.upper)
        out << "upper " << *r.upper << "\n";
    for (const auto& src : r.provenance)
        out << "source " << src.tag << " " << src.value << "\n";
    return out.str();
}

struct GenArgs {
    std::string family;
    std::vector<int> params;
    std::string out = "-";
};

struct ProductArgs {
    std::string kind;
    std::string left, right;
    std::string out = "-";
};

struct BoundsArgs {
    int k = 1;
    std::string graph = "-";
};

struct DecomposeArgs {
    std::string method = "constructive";
    int k = 1;
    std::string family;
    std::vector<int> params;
    std::string kind;
    std::string family2;
    std::vector<int> params2;
    std::string graph;
    std::optional<std::uint64_t> budget_ms, budget_nodes;
    std::string out = "-";
};

struct ExactArgs {
    int k = 1;
    std::string graph = "-";
    std::optional<std::uint64_t> budget_ms, budget_nodes;
};

struct VerifyArgs {
    std::string graph;
    std::string certificate;
};

struct ReportArgs {
    std::string network;
    std::vector<int> params;
    int k = 1;
    std::string format = "csv";
    bool no_exact = false;
};

int run_gen(const GenArgs& a) {
    Graph g = build_family({family_from_string(a.family), a.params});
    write_text(a.out, format_graph(g));
    return 0;
}

int run_product(const ProductArgs& a) {
    ProductKind kind = product_kind_from_string(a.kind);
    Graph g = parse_graph(read_text(a.left));
    Graph h = parse_graph(read_text(a.right));
    write_text(a.out, format_graph(product(kind, g, h)));
    return 0;
}

int run_bounds(const BoundsArgs& a) {
    Graph g = parse_graph(read_text(a.graph));
    write_text("-", bound_report_text(lower_bound_report(g, a.k)));
    return 0;
}

int run_decompose(const DecomposeArgs& a) {
    if (a.method == "constructive") {
        if (a.family.empty())
            throw std::invalid_argument("constructive decomposition needs --family");
        FamilySpec left{family_from_string(a.family), a.params};
        Decomposition d = family_decomposition(left, a.k);
        if (!a.kind.empty()) {
            if (a.family2.empty())
                throw std::invalid_argument("product composition needs --family2");
            FamilySpec right{family_from_string(a.family2), a.params2};
            Graph g = build_family(left), h = build_family(right);
            d = compose_product(product_kind_from_string(a.kind), g, h, d,
                                family_decomposition(right, a.k));
        }
        write_text(a.out, emit_certificate(d));
        return 0;
    }
    if (a.method == "exact") {
        if (a.graph.empty())
            throw std::invalid_argument("exact decomposition needs --graph");
        Graph g = parse_graph(read_text(a.graph));
        ExactResult r = exact_la_k(g, a.k, make_budget(a.budget_ms, a.budget_nodes));
        if (r.status == ExactStatus::LowerBoundOnly) {
            std::cerr << "budget exhausted: only a lower bound of " << r.value
                      << " is proven\n";
            return 3;
        }
        write_text(a.out, emit_certificate(*r.certificate));
        return 0;
    }
    throw std::invalid_argument("unknown method '" + a.method + "'");
}

int run_exact(const ExactArgs& a) {
    Graph g = parse_graph(read_text(a.graph));
    ExactResult r = exact_la_k(g, a.k, make_budget(a.budget_ms, a.budget_nodes));
    std::cout << r.value << "\n";
    std::cout << "status "
              << (r.status == ExactStatus::Exact ? "exact" : "lower-bound-only") << "\n";
    std::cout << "nodes " << r.nodes << "\n";
    std::cout << "elapsed-ms " << r.elapsed_ms << "\n";
    return r.status == ExactStatus::Exact ? 0 : 3;
}

int run_verify(const VerifyArgs& a) {
    Graph g = parse_graph(read_text(a.graph));
    Decomposition d = parse_certificate(read_text(a.certificate));
    if (d.order() != g.order())
        throw std::invalid_argument("certificate is for " + std::to_string(d.order()) +
                                    " vertices but the graph has " +
                                    std::to_string(g.order()));
    if (auto bad = verify_decomposition(g, d)) {
        std::cout << "invalid: " << bad->describe() << "\n";
        return 1;
    }
    std::cout << "valid\n";
    return 0;
}

int run_report(const ReportArgs& a) {
    NetworkSpec spec{network_from_string(a.network), a.params};
    ReportOptions opts;
    opts.with_exact = !a.no_exact;
    auto rows = report_network(spec, a.k, opts);
    std::cout << (a.format == "text" ? rows_to_text(rows) : rows_to_csv(rows));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"linear k-forest decomposition toolkit"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* cgen = app.add_subcommand("gen", "generate a family graph as an edge list");
    cgen->add_option("--family", gen.family, "family name")->required();
    cgen->add_option("--params", gen.params, "family parameters")->delimiter(',');
    cgen->add_option("-o,--out", gen.out, "output path ('-' for stdout)");

    ProductArgs prod;
    auto* cprod = app.add_subcommand("product", "combine two edge lists");
    cprod->add_option("--kind", prod.kind, "cartesian|lexicographic|direct|strong|join")
        ->required();
    cprod->add_option("left", prod.left, "left graph path")->required();
    cprod->add_option("right", prod.right, "right graph path")->required();
    cprod->add_option("-o,--out", prod.out, "output path");

    BoundsArgs bounds;
    auto* cbounds = app.add_subcommand("bounds", "print lower-bound report for a graph");
    cbounds->add_option("--k", bounds.k, "path length cap")->required();
    cbounds->add_option("graph", bounds.graph, "graph path ('-' for stdin)");

    DecomposeArgs dec;
    auto* cdec = app.add_subcommand("decompose", "produce a certificate");
    cdec->add_option("--method", dec.method, "constructive|exact");
    cdec->add_option("--k", dec.k, "path length cap")->required();
    cdec->add_option("--family", dec.family, "family for constructive method");
    cdec->add_option("--params", dec.params, "family parameters")->delimiter(',');
    cdec->add_option("--kind", dec.kind, "optional product kind for constructive method");
    cdec->add_option("--family2", dec.family2, "second factor family");
    cdec->add_option("--params2", dec.params2, "second factor parameters")->delimiter(',');
    cdec->add_option("--graph", dec.graph, "graph path for exact method");
    cdec->add_option("--budget-ms", dec.budget_ms, "time budget in milliseconds");
    cdec->add_option("--budget-nodes", dec.budget_nodes, "search node budget");
    cdec->add_option("-o,--out", dec.out, "certificate output path");

    ExactArgs exact;
    auto* cexact = app.add_subcommand("exact", "solve the minimum forest count");
    cexact->add_option("--k", exact.k, "path length cap")->required();
    cexact->add_option("graph", exact.graph, "graph path ('-' for stdin)");
    cexact->add_option("--budget-ms", exact.budget_ms, "time budget in milliseconds");
    cexact->add_option("--budget-nodes", exact.budget_nodes, "search node budget");

    VerifyArgs verify;
    auto* cverify = app.add_subcommand("verify", "check a certificate against a graph");
    cverify->add_option("--graph", verify.graph, "graph path")->required();
    cverify->add_option("--certificate", verify.certificate, "certificate path")->required();

    ReportArgs report;
    auto* creport = app.add_subcommand("report", "bound tables for benchmark networks");
    creport->add_option("--network", report.network,
                        "grid|mesh|torus|generalized_hypercube|hyper_petersen_{cart,lex,dir,str}")
        ->required();
    creport->add_option("--params", report.params, "dimension sizes")->delimiter(',');
    creport->add_option("--k", report.k, "path length cap")->required();
    creport->add_option("--format", report.format, "csv|text");
    creport->add_flag("--no-exact", report.no_exact, "skip the exact column");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cgen->parsed()) return run_gen(gen);
        if (cprod->parsed()) return run_product(prod);
        if (cbounds->parsed()) return run_bounds(bounds);
        if (cdec->parsed()) return run_decompose(dec);
        if (cexact->parsed()) return run_exact(exact);
        if (cverify->parsed()) return run_verify(verify);
        if (creport->parsed()) return run_report(report);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
