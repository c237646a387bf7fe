#include <catch2/catch_amalgamated.hpp>

#include "linarb/decompose.hpp"
#include "linarb/io.hpp"

using namespace linarb;

TEST_CASE("edge-list parsing") {
    Graph k2 = parse_graph("2 1\n0 1\n");
    CHECK(k2.order() == 2);
    CHECK(k2.edge_count() == 1);

    Graph k3 = parse_graph("3 3\n0 1\n0 2\n1 2");
    CHECK(k3 == complete_graph(3));

    // blank lines and extra spacing are tolerated
    Graph spaced = parse_graph("\n 3 2 \n0 1\n\n1 2\n\n");
    CHECK(spaced == path_graph(3));

    Graph lonely = parse_graph("4 0\n");
    CHECK(lonely.order() == 4);
    CHECK(lonely.edge_count() == 0);
}

TEST_CASE("edge-list parse errors carry line numbers") {
    auto line_of = [](const std::string& text) {
        try {
            parse_graph(text);
        } catch (const ParseError& e) {
            return e.line;
        }
        return -1;
    };
    CHECK(line_of("2 1\n1 1\n") == 2);        // self-loop
    CHECK(line_of("2 1\n1 0\n") == 2);        // order violated
    CHECK(line_of("2 1\n0 2\n") == 2);        // out of range
    CHECK(line_of("3 2\n0 1\n0 1\n") == 3);   // duplicate
    CHECK(line_of("2 1\n0 x\n") == 2);        // not an integer
    CHECK(line_of("2 1\n0 1 2\n") == 2);      // too many fields
    CHECK(line_of("x 1\n0 1\n") == 1);        // bad header
    CHECK(line_of("") == 1);                  // missing header
    CHECK(line_of("3 2\n0 1\n") == 3);        // fewer edges than declared
    CHECK(line_of("2 1\n0 1\n0 1\n") == 3);   // trailing content
    CHECK(line_of("-1 0\n") == 1);            // negative order
    CHECK_THROWS_AS(parse_graph("2 1\n1 1\n"), ParseError);
}

TEST_CASE("edge-list emission round-trips") {
    CHECK(format_graph(path_graph(3)) == "3 2\n0 1\n1 2\n");
    CHECK(format_graph(Graph(2, {})) == "2 0\n");
    for (const Graph& g : {petersen_graph(), complete_graph(5), cycle_graph(7)}) {
        Graph back = parse_graph(format_graph(g));
        CHECK(back == g);
        CHECK(format_graph(back) == format_graph(g));
    }
}

TEST_CASE("certificate emission is canonical") {
    auto d = decompose_path(5, 2);
    std::string text = emit_certificate(d);
    CHECK(text == "{\"forests\":[[[0,1],[2,3]],[[1,2],[3,4]]],\"k\":2,\"n\":5}\n");
    Decomposition back = parse_certificate(text);
    CHECK(emit_certificate(back) == text);
    CHECK(back.k() == 2);
    CHECK(back.order() == 5);
    CHECK(back.size() == 2);
}

TEST_CASE("certificate round-trip for assorted decompositions") {
    for (const auto& d : {decompose_petersen(2), decompose_complete(6, 1),
                          decompose_cycle(7, 2), Decomposition(3, 4, {})}) {
        std::string text = emit_certificate(d);
        CHECK(emit_certificate(parse_certificate(text)) == text);
    }
}

TEST_CASE("certificate schema is strict") {
    CHECK_THROWS_AS(parse_certificate("not json"), ParseError);
    CHECK_THROWS_AS(parse_certificate("[]"), ParseError);
    CHECK_THROWS_AS(parse_certificate("{\"k\":1,\"n\":2}"), ParseError);  // missing forests
    CHECK_THROWS_AS(parse_certificate("{\"forests\":[],\"k\":1}"), ParseError);  // missing n
    CHECK_THROWS_AS(parse_certificate("{\"forests\":[],\"k\":1,\"n\":2,\"x\":0}"),
                    ParseError);  // unknown field
    CHECK_THROWS_AS(parse_certificate("{\"forests\":[],\"k\":0,\"n\":2}"), ParseError);
    CHECK_THROWS_AS(parse_certificate("{\"forests\":[],\"k\":1,\"n\":-1}"), ParseError);
    CHECK_THROWS_AS(parse_certificate("{\"forests\":[],\"k\":1.5,\"n\":2}"), ParseError);
    CHECK_THROWS_AS(parse_certificate("{\"forests\":[[[0,1,2]]],\"k\":1,\"n\":3}"),
                    ParseError);  // edge is not a pair
    CHECK_THROWS_AS(parse_certificate("{\"forests\":[[[1,0]]],\"k\":1,\"n\":2}"),
                    ParseError);  // endpoint order
    CHECK_THROWS_AS(parse_certificate("{\"forests\":[[[0,2]]],\"k\":1,\"n\":2}"),
                    ParseError);  // out of range
    CHECK_THROWS_AS(parse_certificate("{\"forests\":[[[0,0]]],\"k\":1,\"n\":2}"),
                    ParseError);  // self-loop
    CHECK_THROWS_AS(parse_certificate("{\"forests\":[[[0,\"1\"]]],\"k\":1,\"n\":2}"),
                    ParseError);  // endpoint type
    CHECK_NOTHROW(parse_certificate("{\"forests\":[],\"k\":1,\"n\":0}"));
}

TEST_CASE("tampered certificates survive parsing so verification can fault them") {
    // duplicate edge within one forest
    Decomposition dup =
        parse_certificate("{\"forests\":[[[0,1],[0,1]]],\"k\":1,\"n\":2}");
    auto bad = verify_decomposition(path_graph(2), dup);
    REQUIRE(bad);
    CHECK(bad->kind == ViolationKind::DuplicateEdge);

    // empty forest list on a nonempty graph
    Decomposition none = parse_certificate("{\"forests\":[],\"k\":1,\"n\":2}");
    auto missing = verify_decomposition(path_graph(2), none);
    REQUIRE(missing);
    CHECK(missing->kind == ViolationKind::MissingEdge);
}
