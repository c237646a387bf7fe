#include <catch2/catch_amalgamated.hpp>

#include "linarb/decompose.hpp"
#include "linarb/exact.hpp"

#include <random>

using namespace linarb;

namespace {

Graph random_graph(std::mt19937& rng, int max_n, int max_m) {
    int n = 2 + static_cast<int>(rng() % static_cast<unsigned>(max_n - 1));
    std::vector<Edge> all;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            all.push_back({u, v});
    std::shuffle(all.begin(), all.end(), rng);
    std::size_t m = rng() % (std::min<std::size_t>(all.size(), static_cast<std::size_t>(max_m)) + 1);
    all.resize(m);
    return Graph(n, all);
}

}  // namespace

TEST_CASE("fixed class-count feasibility") {
    Graph c5 = cycle_graph(5);
    CHECK(feasible_with_t_classes(c5, 1, 2, {}).status == FeasibleStatus::Infeasible);
    auto three = feasible_with_t_classes(c5, 1, 3, {});
    REQUIRE(three.status == FeasibleStatus::Certificate);
    REQUIRE(three.certificate);
    CHECK_FALSE(verify_decomposition(c5, *three.certificate));

    Graph p2 = path_graph(2);
    auto one = feasible_with_t_classes(p2, 1, 1, {});
    REQUIRE(one.status == FeasibleStatus::Certificate);
    CHECK_FALSE(verify_decomposition(p2, *one.certificate));

    // zero classes fit exactly the edgeless graphs
    Graph bare(4, {});
    auto empty = feasible_with_t_classes(bare, 2, 0, {});
    REQUIRE(empty.status == FeasibleStatus::Certificate);
    CHECK(empty.certificate->size() == 0);
    CHECK(feasible_with_t_classes(p2, 1, 0, {}).status == FeasibleStatus::Infeasible);

    CHECK_THROWS_AS(feasible_with_t_classes(p2, 0, 1, {}), std::invalid_argument);
    CHECK_THROWS_AS(feasible_with_t_classes(p2, 1, -1, {}), std::invalid_argument);
}

TEST_CASE("quick refutations spend no search nodes") {
    // a degree-5 vertex cannot be covered by 2 classes of max degree 2
    Graph star(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
    auto r = feasible_with_t_classes(star, 3, 2, {});
    CHECK(r.status == FeasibleStatus::Infeasible);
    CHECK(r.nodes == 0);
    // capacity: 2 classes of at most floor(1*4/2)=2 edges cannot cover C4 plus a chord
    Graph dense(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});
    auto c = feasible_with_t_classes(dense, 1, 2, {});
    CHECK(c.status == FeasibleStatus::Infeasible);
    CHECK(c.nodes == 0);
}

TEST_CASE("node budget stops the search") {
    Graph pet = petersen_graph();
    SearchBudget tight{{}, 1};
    auto r = feasible_with_t_classes(pet, 2, 3, tight);
    CHECK(r.status == FeasibleStatus::BudgetExhausted);
    CHECK(r.nodes <= 1);
}

TEST_CASE("exact values on reference instances") {
    CHECK(exact_la_k(petersen_graph(), 3, {}).value == 3);
    CHECK(exact_la_k(petersen_graph(), 4, {}).value == 2);
    CHECK(exact_la_k(complete_graph(4), 2, {}).value == 3);
    CHECK(exact_la_k(path_graph(5), 2, {}).value == 2);
    CHECK(exact_la_k(path_graph(5), 4, {}).value == 1);
    CHECK(exact_la_k(cycle_graph(6), 1, {}).value == 2);
    CHECK(exact_la_k(cycle_graph(5), 1, {}).value == 3);
    CHECK(exact_la_k(Graph(5, {}), 3, {}).value == 0);
    CHECK_THROWS_AS(exact_la_k(path_graph(3), 0, {}), std::invalid_argument);
}

TEST_CASE("exact results carry verified certificates") {
    std::mt19937 rng(555u);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_graph(rng, 7, 12);
        int k = 1 + static_cast<int>(rng() % 4);
        auto r = exact_la_k(g, k, {});
        REQUIRE(r.status == ExactStatus::Exact);
        REQUIRE(r.certificate);
        CHECK_FALSE(verify_decomposition(g, *r.certificate));
        CHECK(r.certificate->size() == r.value);
        CHECK(r.value >= lower_bound(g, k));
    }
}

TEST_CASE("solver agrees with the brute-force oracle") {
    std::mt19937 rng(31337u);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_graph(rng, 6, 10);
        for (int k = 1; k <= 4; ++k)
            CHECK(exact_la_k(g, k, {}).value == brute_force_la_k(g, k));
    }
}

TEST_CASE("brute force basics") {
    CHECK(brute_force_la_k(cycle_graph(4), 1) == 2);
    CHECK(brute_force_la_k(complete_graph(3), 1) == 3);
    CHECK(brute_force_la_k(path_graph(3), 2) == 1);
    CHECK(brute_force_la_k(Graph(3, {}), 1) == 0);
    CHECK_THROWS_AS(brute_force_la_k(complete_graph(6), 1), std::invalid_argument);
}

TEST_CASE("values fall as the cap grows") {
    Graph c6 = cycle_graph(6);
    long long prev = 1000;
    for (int k = 1; k <= 5; ++k) {
        long long v = exact_la_k(c6, k, {}).value;
        CHECK(v <= prev);
        CHECK(v >= 2);  // cyclic graphs never decompose into one linear forest
        prev = v;
    }
    Graph k4 = complete_graph(4);
    CHECK(exact_la_k(k4, 1, {}).value == 3);  // chromatic index of K4
    CHECK(exact_la_k(k4, 3, {}).value == 2);
}

TEST_CASE("components solve independently and take the max") {
    Graph u1 = disjoint_union(path_graph(4), cycle_graph(5));
    CHECK(exact_la_k(u1, 1, {}).value == 3);
    auto r = exact_la_k(u1, 1, {});
    REQUIRE(r.certificate);
    CHECK_FALSE(verify_decomposition(u1, *r.certificate));

    Graph u2 = disjoint_union(complete_graph(4), path_graph(3));
    CHECK(exact_la_k(u2, 2, {}).value ==
          std::max(exact_la_k(complete_graph(4), 2, {}).value,
                   exact_la_k(path_graph(3), 2, {}).value));
}

TEST_CASE("time budget yields an honest lower bound") {
    Graph pet = petersen_graph();
    SearchBudget ms1{1, {}};
    auto r = exact_la_k(pet, 2, ms1);
    CHECK(r.status == ExactStatus::LowerBoundOnly);
    CHECK_FALSE(r.certificate);
    CHECK(r.value == 3);  // formula bound stands even when the search is cut off

    SearchBudget nodes1{{}, 1};
    auto rn = exact_la_k(pet, 1, nodes1);
    CHECK(rn.status == ExactStatus::LowerBoundOnly);
    CHECK(rn.value >= 3);
}

TEST_CASE("constructive petersen counts are optimal for every cap") {
    for (int k = 1; k <= 5; ++k)
        CHECK(exact_la_k(petersen_graph(), k, {}).value == decompose_petersen(k).size());
}
