#pragma once

#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "linarb/graph.hpp"
#include "linarb/linear_forest.hpp"

namespace linarb {

/// Input rejection with the offending line (1-based); line 0 marks errors not
/// tied to a line, e.g. malformed JSON.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_in, const std::string& what)
        : std::runtime_error(line_in > 0 ? "line " + std::to_string(line_in) + ": " + what
                                         : what),
          line(line_in) {}
};

namespace detail {

inline std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty())
        lines.push_back(cur);
    return lines;
}

inline bool blank(const std::string& s) {
    return s.find_first_not_of(" \t\r") == std::string::npos;
}

/// Exactly `count` integers separated by whitespace, nothing else.
inline std::vector<long long> parse_ints(const std::string& s, std::size_t count, int line) {
    std::istringstream in(s);
    std::vector<long long> out;
    long long value = 0;
    while (in >> value)
        out.push_back(value);
    if (!in.eof()) {
        std::string rest;
        in.clear();
        in >> rest;
        throw ParseError(line, "unexpected token '" + rest + "'");
    }
    if (out.size() != count)
        throw ParseError(line, "expected " + std::to_string(count) + " integers, got " +
                                   std::to_string(out.size()));
    return out;
}

}  // namespace detail

/// Text edge-list: header "n m", then m lines "u v" with 0 <= u < v < n.
inline Graph parse_graph(const std::string& text) {
    auto lines = detail::split_lines(text);
    std::size_t at = 0;
    while (at < lines.size() && detail::blank(lines[at]))
        ++at;
    if (at == lines.size())
        throw ParseError(static_cast<int>(lines.size()) + 1, "missing header line \"n m\"");
    auto header = detail::parse_ints(lines[at], 2, static_cast<int>(at) + 1);
    long long n = header[0], m = header[1];
    if (n < 0 || m < 0)
        throw ParseError(static_cast<int>(at) + 1, "vertex and edge counts must be nonnegative");
    std::vector<Edge> edges;
    std::set<std::pair<long long, long long>> seen;
    for (long long i = 0; i < m; ++i) {
        ++at;
        while (at < lines.size() && detail::blank(lines[at]))
            ++at;
        int line = static_cast<int>(at) + 1;
        if (at >= lines.size())
            throw ParseError(line, "expected " + std::to_string(m) + " edges, file ends after " +
                                       std::to_string(i));
        auto nums = detail::parse_ints(lines[at], 2, line);
        long long u = nums[0], v = nums[1];
        if (u == v)
            throw ParseError(line, "self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError(line, "vertex out of range in edge (" + std::to_string(u) + "," +
                                       std::to_string(v) + ")");
        if (u > v)
            throw ParseError(line, "edge endpoints must satisfy u < v");
        if (!seen.insert({u, v}).second)
            throw ParseError(line, "duplicate edge (" + std::to_string(u) + "," +
                                       std::to_string(v) + ")");
        edges.push_back({static_cast<int>(u), static_cast<int>(v)});
    }
    for (++at; at < lines.size(); ++at)
        if (!detail::blank(lines[at]))
            throw ParseError(static_cast<int>(at) + 1, "trailing content after edge list");
    return Graph(static_cast<int>(n), std::move(edges));
}

inline std::string format_graph(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges())
        out << e.u << ' ' << e.v << '\n';
    return out.str();
}

/// Compact JSON certificate {"forests":[[[u,v],...],...],"k":int,"n":int}
/// (keys alphabetical, one trailing newline) — byte-stable for fixed input.
inline std::string emit_certificate(const Decomposition& d) {
    nlohmann::json j;
    j["k"] = d.k();
    j["n"] = d.order();
    auto forests = nlohmann::json::array();
    for (const LinearKForest& f : d.forests()) {
        auto forest = nlohmann::json::array();
        for (const Edge& e : f.edges)
            forest.push_back({e.u, e.v});
        forests.push_back(std::move(forest));
    }
    j["forests"] = std::move(forests);
    return j.dump() + "\n";
}

/// Strict schema check; duplicate edges are preserved so verification can
/// fault them rather than silently collapsing.
inline Decomposition parse_certificate(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        throw ParseError(0, std::string("certificate is not valid JSON: ") + err.what());
    }
    if (!j.is_object())
        throw ParseError(0, "certificate must be a JSON object");
    for (const auto& item : j.items())
        if (item.key() != "k" && item.key() != "n" && item.key() != "forests")
            throw ParseError(0, "unknown certificate field \"" + item.key() + "\"");
    if (!j.contains("k") || !j["k"].is_number_integer())
        throw ParseError(0, "certificate field \"k\" must be an integer");
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw ParseError(0, "certificate field \"n\" must be an integer");
    if (!j.contains("forests") || !j["forests"].is_array())
        throw ParseError(0, "certificate field \"forests\" must be an array");
    const long long k = j["k"].get<long long>();
    const long long n = j["n"].get<long long>();
    if (k < 1)
        throw ParseError(0, "certificate field \"k\" must be at least 1");
    if (n < 0)
        throw ParseError(0, "certificate field \"n\" must be nonnegative");
    std::vector<std::vector<Edge>> forests;
    for (const auto& forest : j["forests"]) {
        if (!forest.is_array())
            throw ParseError(0, "each forest must be an array of edges");
        std::vector<Edge> edges;
        for (const auto& pair : forest) {
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
                !pair[1].is_number_integer())
                throw ParseError(0, "each edge must be a pair of integers");
            long long u = pair[0].get<long long>(), v = pair[1].get<long long>();
            if (u < 0 || v >= n || u >= v)
                throw ParseError(0, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") must satisfy 0 <= u < v < n");
            edges.push_back({static_cast<int>(u), static_cast<int>(v)});
        }
        forests.push_back(std::move(edges));
    }
    return Decomposition(static_cast<int>(k), static_cast<int>(n), std::move(forests));
}

}  // namespace linarb
