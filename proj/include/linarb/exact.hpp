#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "linarb/bounds.hpp"
#include "linarb/graph.hpp"
#include "linarb/linear_forest.hpp"

namespace linarb {

/// Search limits; either side may be absent.  Exhaustion is a distinct
/// result status, never silent.
struct SearchBudget {
    std::optional<std::uint64_t> max_ms;
    std::optional<std::uint64_t> max_nodes;
};

enum class FeasibleStatus { Certificate, Infeasible, BudgetExhausted };

struct FeasibleResult {
    FeasibleStatus status = FeasibleStatus::Infeasible;
    std::optional<Decomposition> certificate;
    std::uint64_t nodes = 0;
};

namespace detail {

/// Depth-first search over assignments of edges to classes, where every
/// class must stay a linear k-forest.  An assignment of edge (u,v) to a
/// class is legal iff both endpoints have class-degree <= 1, the endpoints
/// lie in different class components, and the merged component stays within
/// k edges — checked incrementally via class-degree counters and a rollback
/// union-find (union by size, no path compression).
class ClassSearch {
public:
    ClassSearch(const Graph& g, int k, int t, const SearchBudget& budget)
        : g_(g),
          k_(k),
          t_(t),
          n_(g.order()),
          m_(g.edge_count()),
          node_cap_(budget.max_nodes.value_or(UINT64_MAX)) {
        if (budget.max_ms) {
            // conservative wall: yield once less than one full millisecond remains
            deadline_ = std::chrono::steady_clock::now() +
                        std::chrono::milliseconds(static_cast<std::int64_t>(*budget.max_ms) - 1);
            timed_ = true;
        }
        // branch on high-degree edges first
        order_ = g.edges();
        std::stable_sort(order_.begin(), order_.end(), [&g](const Edge& a, const Edge& b) {
            return std::max(g.degree(a.u), g.degree(a.v)) >
                   std::max(g.degree(b.u), g.degree(b.v));
        });
        const std::size_t slots = static_cast<std::size_t>(t_) * n_;
        deg_.assign(slots, 0);
        parent_.assign(slots, 0);
        comp_size_.assign(slots, 1);
        comp_edges_.assign(slots, 0);
        for (std::size_t i = 0; i < slots; ++i)
            parent_[i] = static_cast<int>(i);
        assigned_.assign(static_cast<std::size_t>(m_), -1);
    }

    FeasibleResult run() {
        FeasibleResult result;
        bool found = dfs(0, 0);
        result.nodes = nodes_;
        if (found) {
            std::vector<std::vector<Edge>> forests(static_cast<std::size_t>(t_));
            for (int i = 0; i < m_; ++i)
                forests[static_cast<std::size_t>(assigned_[static_cast<std::size_t>(i)])]
                    .push_back(order_[static_cast<std::size_t>(i)]);
            result.certificate = Decomposition(k_, n_, std::move(forests));
            result.status = FeasibleStatus::Certificate;
        } else {
            result.status = exhausted_ ? FeasibleStatus::BudgetExhausted
                                       : FeasibleStatus::Infeasible;
        }
        return result;
    }

private:
    int find(int x) const {
        while (parent_[static_cast<std::size_t>(x)] != x)
            x = parent_[static_cast<std::size_t>(x)];
        return x;
    }

    struct Undo {
        int ru, rv, old_edges;
    };

    bool try_assign(int c, const Edge& e, Undo& undo) {
        const int base = c * n_;
        if (deg_[static_cast<std::size_t>(base + e.u)] >= 2 ||
            deg_[static_cast<std::size_t>(base + e.v)] >= 2)
            return false;
        int ru = find(base + e.u), rv = find(base + e.v);
        if (ru == rv)
            return false;
        int merged = comp_edges_[static_cast<std::size_t>(ru)] +
                     comp_edges_[static_cast<std::size_t>(rv)] + 1;
        if (merged > k_)
            return false;
        if (comp_size_[static_cast<std::size_t>(ru)] < comp_size_[static_cast<std::size_t>(rv)])
            std::swap(ru, rv);
        undo = {ru, rv, comp_edges_[static_cast<std::size_t>(ru)]};
        parent_[static_cast<std::size_t>(rv)] = ru;
        comp_size_[static_cast<std::size_t>(ru)] += comp_size_[static_cast<std::size_t>(rv)];
        comp_edges_[static_cast<std::size_t>(ru)] = merged;
        ++deg_[static_cast<std::size_t>(base + e.u)];
        ++deg_[static_cast<std::size_t>(base + e.v)];
        return true;
    }

    void undo_assign(int c, const Edge& e, const Undo& undo) {
        const int base = c * n_;
        --deg_[static_cast<std::size_t>(base + e.u)];
        --deg_[static_cast<std::size_t>(base + e.v)];
        parent_[static_cast<std::size_t>(undo.rv)] = undo.rv;
        comp_size_[static_cast<std::size_t>(undo.ru)] -=
            comp_size_[static_cast<std::size_t>(undo.rv)];
        comp_edges_[static_cast<std::size_t>(undo.ru)] = undo.old_edges;
    }

    bool out_of_budget() {
        if (nodes_ >= node_cap_)
            return true;
        if (timed_ && (nodes_ & 0x3ff) == 1 &&
            std::chrono::steady_clock::now() >= deadline_)
            return true;
        return false;
    }

    /// Classes are interchangeable while empty, so edge assignments may open
    /// a new class only in index order: class c is allowed iff c <= open.
    bool dfs(int idx, int open) {
        if (idx == m_)
            return true;
        ++nodes_;
        if (out_of_budget()) {
            exhausted_ = true;
            return false;
        }
        const Edge& e = order_[static_cast<std::size_t>(idx)];
        const int limit = std::min(open + 1, t_);
        for (int c = 0; c < limit; ++c) {
            Undo undo;
            if (!try_assign(c, e, undo))
                continue;
            assigned_[static_cast<std::size_t>(idx)] = c;
            if (dfs(idx + 1, std::max(open, c + 1)))
                return true;
            undo_assign(c, e, undo);
            if (exhausted_)
                return false;
        }
        return false;
    }

    const Graph& g_;
    int k_, t_, n_, m_;
    std::vector<Edge> order_;
    std::vector<std::int8_t> deg_;
    std::vector<int> parent_, comp_size_, comp_edges_;
    std::vector<int> assigned_;
    std::uint64_t nodes_ = 0, node_cap_;
    std::chrono::steady_clock::time_point deadline_{};
    bool timed_ = false;
    bool exhausted_ = false;
};

}  // namespace detail

/// Decides whether g splits into at most t linear k-forests.  Trivial
/// refutations (a vertex of degree > 2t, or t forests lacking the edge
/// capacity for |E|) are proofs and cost no search nodes.
inline FeasibleResult feasible_with_t_classes(const Graph& g, int k, int t,
                                              const SearchBudget& budget = {}) {
    if (k < 1)
        throw std::invalid_argument("path length cap must be at least 1");
    if (t < 0)
        throw std::invalid_argument("class count must be nonnegative");
    FeasibleResult result;
    if (g.edge_count() == 0) {
        result.status = FeasibleStatus::Certificate;
        result.certificate = Decomposition(k, g.order(), {});
        return result;
    }
    if (t == 0 || g.max_degree() > 2 * t ||
        static_cast<long long>(t) * forest_edge_cap(k, g.order()) < g.edge_count()) {
        result.status = FeasibleStatus::Infeasible;
        return result;
    }
    return detail::ClassSearch(g, k, t, budget).run();
}

enum class ExactStatus { Exact, LowerBoundOnly };

struct ExactResult {
    long long value = 0;
    std::optional<Decomposition> certificate;
    std::uint64_t nodes = 0;
    double elapsed_ms = 0.0;
    ExactStatus status = ExactStatus::Exact;
};

/// Minimum number of linear k-forests partitioning E(g), solved per connected
/// component (the answer is the max over components) by iterating the class
/// count upward from the closed-form lower bound.  On budget exhaustion the
/// result is the best proven lower bound, clearly labeled, with no
/// certificate.
inline ExactResult exact_la_k(const Graph& g, int k, const SearchBudget& budget = {}) {
    if (k < 1)
        throw std::invalid_argument("path length cap must be at least 1");
    const auto start = std::chrono::steady_clock::now();
    auto elapsed_ms = [&start] {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    };

    ExactResult result;
    bool exhausted = false;
    std::vector<std::vector<std::vector<Edge>>> parts;  // per component, global labels

    for (const auto& comp : g.components()) {
        auto [sub, labels] = induced_subgraph(g, comp);
        if (sub.edge_count() == 0)
            continue;
        long long lb = lower_bound(sub, k);
        if (exhausted) {
            result.value = std::max(result.value, lb);
            continue;
        }
        for (long long t = lb;; ++t) {
            SearchBudget remaining;
            if (budget.max_nodes) {
                if (result.nodes >= *budget.max_nodes) {
                    exhausted = true;
                } else {
                    remaining.max_nodes = *budget.max_nodes - result.nodes;
                }
            }
            if (budget.max_ms && !exhausted) {
                double left = static_cast<double>(*budget.max_ms) - elapsed_ms();
                if (left <= 0.0)
                    exhausted = true;
                else
                    remaining.max_ms = static_cast<std::uint64_t>(left);
            }
            if (exhausted) {
                result.value = std::max(result.value, t);
                break;
            }
            FeasibleResult fr = feasible_with_t_classes(sub, k, static_cast<int>(t), remaining);
            result.nodes += fr.nodes;
            if (fr.status == FeasibleStatus::Certificate) {
                result.value = std::max(result.value, t);
                std::vector<std::vector<Edge>> relabeled;
                for (const LinearKForest& f : fr.certificate->forests()) {
                    std::vector<Edge> edges;
                    for (const Edge& e : f.edges)
                        edges.push_back(make_edge(labels[static_cast<std::size_t>(e.u)],
                                                  labels[static_cast<std::size_t>(e.v)]));
                    relabeled.push_back(std::move(edges));
                }
                parts.push_back(std::move(relabeled));
                break;
            }
            if (fr.status == FeasibleStatus::BudgetExhausted) {
                // every count below t is refuted, so t is a proven lower bound
                exhausted = true;
                result.value = std::max(result.value, t);
                break;
            }
        }
    }

    result.elapsed_ms = elapsed_ms();
    if (exhausted) {
        result.status = ExactStatus::LowerBoundOnly;
        return result;
    }
    std::vector<std::vector<Edge>> slots(static_cast<std::size_t>(result.value));
    for (const auto& comp_forests : parts)
        for (std::size_t j = 0; j < comp_forests.size(); ++j)
            slots[j].insert(slots[j].end(), comp_forests[j].begin(), comp_forests[j].end());
    result.certificate = Decomposition(k, g.order(), std::move(slots));
    result.status = ExactStatus::Exact;
    return result;
}

/// Naive oracle: enumerate every partition of the edge set (blocks grown in
/// restricted-growth order), keep blocks that the verifier accepts as linear
/// k-forests, and track the fewest blocks.  Only for graphs with at most 10
/// edges; exists to cross-check the search above.
inline long long brute_force_la_k(const Graph& g, int k) {
    if (k < 1)
        throw std::invalid_argument("path length cap must be at least 1");
    if (g.edge_count() > 10)
        throw std::invalid_argument("brute force is limited to 10 edges");
    const auto& edges = g.edges();
    long long best = g.edge_count();
    std::vector<std::vector<Edge>> blocks;
    auto valid_block = [&g, k](const std::vector<Edge>& block) {
        return !verify_forest(g, LinearKForest(k, block)).has_value();
    };
    auto recurse = [&](auto&& self, std::size_t i) -> void {
        if (static_cast<long long>(blocks.size()) >= best)
            return;  // completions can only add blocks
        if (i == edges.size()) {
            best = static_cast<long long>(blocks.size());
            return;
        }
        // index loop: recursion below grows and shrinks `blocks`, so a
        // range-for reference would dangle after reallocation
        const std::size_t existing = blocks.size();
        for (std::size_t bi = 0; bi < existing; ++bi) {
            blocks[bi].push_back(edges[i]);
            if (valid_block(blocks[bi]))
                self(self, i + 1);
            blocks[bi].pop_back();
        }
        blocks.push_back({edges[i]});
        self(self, i + 1);
        blocks.pop_back();
    };
    recurse(recurse, 0);
    return best;
}

}  // namespace linarb
