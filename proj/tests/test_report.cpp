#include <catch2/catch_amalgamated.hpp>

#include "linarb/report.hpp"

#include <sstream>

using namespace linarb;

namespace {

const ReportRow& row_named(const std::vector<ReportRow>& rows, const std::string& name) {
    for (const auto& r : rows)
        if (r.network == name)
            return r;
    FAIL("no row named " + name);
    static ReportRow dummy;
    return dummy;
}

}  // namespace

TEST_CASE("network names round-trip") {
    for (Network n : {Network::Grid, Network::Mesh, Network::Torus,
                      Network::GeneralizedHypercube, Network::HyperPetersenCart,
                      Network::HyperPetersenLex, Network::HyperPetersenDir,
                      Network::HyperPetersenStr})
        CHECK(network_from_string(to_string(n)) == n);
    CHECK_THROWS_AS(network_from_string("ring"), std::invalid_argument);
}

TEST_CASE("grid rows at a dominating cap") {
    auto rows = report_network({Network::Grid, {4, 3}}, 3, {});
    REQUIRE(rows.size() == 4);
    const auto& cart = row_named(rows, "grid:cartesian");
    CHECK(cart.lower == 2);
    CHECK(cart.upper == 2);
    CHECK(cart.params == "4x3");
    const auto& lex = row_named(rows, "grid:lexicographic");
    CHECK(lex.lower == 4);
    CHECK(lex.upper == 4);
    const auto& dir = row_named(rows, "grid:direct");
    CHECK(dir.lower == 2);
    CHECK(dir.upper == 2);
    const auto& str = row_named(rows, "grid:strong");
    CHECK(str.lower == 4);
    CHECK(str.upper == 4);

    auto bigger = report_network({Network::Grid, {5, 4}}, 4, {});
    CHECK(row_named(bigger, "grid:cartesian").lower == 2);
    CHECK(row_named(bigger, "grid:cartesian").upper == 2);
    CHECK(row_named(bigger, "grid:lexicographic").lower == 5);
    CHECK(row_named(bigger, "grid:lexicographic").upper == 5);
    CHECK(row_named(bigger, "grid:direct").upper == 2);
    CHECK(row_named(bigger, "grid:strong").upper == 4);
}

TEST_CASE("grid rows at a small cap") {
    // caps below the path thresholds force additional forests
    auto rows = report_network({Network::Grid, {4, 3}}, 1, {});
    const auto& cart = row_named(rows, "grid:cartesian");
    CHECK(cart.lower == 2);
    CHECK(cart.upper == 4);  // two matchings per factor
    REQUIRE(cart.exact);
    CHECK(*cart.exact >= cart.lower);
    CHECK(*cart.exact <= cart.upper);
}

TEST_CASE("mesh accepts any dimension count") {
    auto one = report_network({Network::Mesh, {6}}, 2, {});
    CHECK(row_named(one, "mesh:cartesian").upper == 2);
    auto three = report_network({Network::Mesh, {3, 3, 2}}, 2, {});
    const auto& cart = row_named(three, "mesh:cartesian");
    CHECK(cart.lower == 2);
    CHECK(cart.upper <= 2 * 3);
    CHECK(cart.provenance.find("construction=") != std::string::npos);
    // pairwise-only kinds still appear, folded left to right
    CHECK(row_named(three, "mesh:strong").upper >= cart.upper);
}

TEST_CASE("torus rows") {
    auto rows = report_network({Network::Torus, {3, 3}}, 2, {});
    const auto& cart = row_named(rows, "torus:cartesian");
    CHECK(cart.lower == 2);
    CHECK(cart.upper == 4);
    REQUIRE(cart.exact);
    CHECK(*cart.exact >= 2);
    CHECK(*cart.exact <= 4);
    CHECK_THROWS_AS(report_network({Network::Torus, {2, 3}}, 1, {}), std::invalid_argument);
}

TEST_CASE("generalized hypercube rows") {
    auto rows = report_network({Network::GeneralizedHypercube, {2, 2, 2}}, 3, {});
    const auto& cart = row_named(rows, "generalized_hypercube:cartesian");
    CHECK(cart.lower == 2);
    CHECK(cart.upper == 3);
    const auto& lex = row_named(rows, "generalized_hypercube:lexicographic");
    // the blowup of cliques collapses to one clique on the product of the sizes
    CHECK(lex.provenance.find("clique-collapse=8") != std::string::npos);
    CHECK(lex.provenance.find("sum-form-lower=3") != std::string::npos);
    CHECK(lex.provenance.find("sum-form-upper=3") != std::string::npos);
    CHECK(lex.provenance.find("flag:stated-bound-mismatch") != std::string::npos);
    CHECK(lex.lower == 5);   // degree and capacity bounds on the 8-clique
    CHECK(lex.upper == 7);   // round-robin at cap 3
    CHECK_THROWS_AS(report_network({Network::GeneralizedHypercube, {2, 1}}, 1, {}),
                    std::invalid_argument);
}

TEST_CASE("hyper-petersen coordinate-wise rows") {
    ReportOptions no_exact;
    no_exact.with_exact = false;
    for (int k = 1; k <= 4; ++k) {
        auto rows = report_network({Network::HyperPetersenCart, {4}}, k, no_exact);
        REQUIRE(rows.size() == 1);
        const auto& row = rows[0];
        CHECK(row.network == "hyper_petersen_cart");
        CHECK(row.params == "4");
        long long want_lower[] = {0, 4, 3, 3, 2};
        long long want_upper[] = {0, 5, 4, 4, 3};
        CHECK(row.lower == want_lower[k]);
        CHECK(row.upper == want_upper[k]);
        CHECK(row.provenance.find("factor-exact=") != std::string::npos);
    }
}

TEST_CASE("hyper-petersen blowup rows carry the mismatch flag") {
    ReportOptions no_exact;
    no_exact.with_exact = false;
    long long want_upper[] = {0, 9, 7, 7, 5};
    for (int k = 1; k <= 4; ++k) {
        auto rows = report_network({Network::HyperPetersenLex, {4}}, k, no_exact);
        REQUIRE(rows.size() == 1);
        CHECK(rows[0].lower == 4);
        CHECK(rows[0].upper == want_upper[k]);
        CHECK(rows[0].provenance.find("flag:stated-bound-mismatch") != std::string::npos);
    }
}

TEST_CASE("hyper-petersen base case is the petersen graph itself") {
    for (Network n : {Network::HyperPetersenCart, Network::HyperPetersenLex,
                      Network::HyperPetersenDir, Network::HyperPetersenStr}) {
        auto rows = report_network({n, {3}}, 2, {});
        REQUIRE(rows.size() == 1);
        CHECK(rows[0].lower == 3);
        CHECK(rows[0].upper == 3);
        REQUIRE(rows[0].exact);
        CHECK(*rows[0].exact == 3);
    }
    CHECK_THROWS_AS(report_network({Network::HyperPetersenCart, {2}}, 1, {}),
                    std::invalid_argument);
}

TEST_CASE("hyper-petersen doubling and mixed rows verify") {
    ReportOptions no_exact;
    no_exact.with_exact = false;
    auto dir = report_network({Network::HyperPetersenDir, {4}}, 4, no_exact);
    REQUIRE(dir.size() == 1);
    CHECK(dir[0].lower >= 2);
    CHECK(dir[0].upper <= 8);  // 2pq with p=2,q=1 doubled sides
    auto str = report_network({Network::HyperPetersenStr, {4}}, 4, no_exact);
    REQUIRE(str.size() == 1);
    CHECK(str[0].lower <= str[0].upper);
    CHECK(str[0].upper <= 2 + 1 + 2 * 2 * 1);
}

TEST_CASE("rows recompute from module calls") {
    // same spec, different caps: values move with the modules, not a table
    auto k1 = report_network({Network::Torus, {4, 4}}, 1, {});
    auto k3 = report_network({Network::Torus, {4, 4}}, 3, {});
    CHECK(row_named(k1, "torus:cartesian").upper == 4);
    CHECK(row_named(k3, "torus:cartesian").upper == 4);
    CHECK(row_named(k1, "torus:cartesian").k == 1);
    CHECK(row_named(k3, "torus:cartesian").k == 3);
}

TEST_CASE("csv and text formats") {
    auto rows = report_network({Network::Grid, {4, 3}}, 3, {});
    std::string csv = rows_to_csv(rows);
    CHECK(csv.rfind("network,params,k,lower,upper,exact?,provenance\n", 0) == 0);
    CHECK(csv.find("grid:cartesian,4x3,3,2,2,") != std::string::npos);
    // every data line has exactly 6 commas (provenance is ';'-joined)
    std::istringstream lines(csv);
    std::string line;
    while (std::getline(lines, line))
        CHECK(std::count(line.begin(), line.end(), ',') == 6);

    std::string text = rows_to_text(rows);
    CHECK(text.find("grid:lexicographic") != std::string::npos);
    CHECK(text.find("network") != std::string::npos);

    ReportOptions off;
    off.with_exact = false;
    std::string blank_exact = rows_to_csv(report_network({Network::Grid, {4, 3}}, 3, off));
    CHECK(blank_exact.find("grid:cartesian,4x3,3,2,2,,") != std::string::npos);
}

TEST_CASE("invalid specs are rejected") {
    CHECK_THROWS_AS(report_network({Network::Grid, {4}}, 1, {}), std::invalid_argument);
    CHECK_THROWS_AS(report_network({Network::Grid, {4, 3, 2}}, 1, {}), std::invalid_argument);
    CHECK_THROWS_AS(report_network({Network::Grid, {4, 1}}, 1, {}), std::invalid_argument);
    CHECK_THROWS_AS(report_network({Network::Mesh, {}}, 1, {}), std::invalid_argument);
    CHECK_THROWS_AS(report_network({Network::HyperPetersenCart, {4, 4}}, 1, {}),
                    std::invalid_argument);
    CHECK_THROWS_AS(report_network({Network::Grid, {4, 3}}, 0, {}), std::invalid_argument);
}
