#pragma once

/**
 * @file graph.hpp
 * @brief Simple undirected graphs with bit-packed adjacency rows.
 */

#include <utility>
#include <vector>

#include "zdg/bitset.hpp"
#include "zdg/errors.hpp"

namespace zdg {

class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n) : rows_(n, Bitset(n)) {}

    int vertex_count() const { return static_cast<int>(rows_.size()); }

    void add_edge(int u, int v) {
        if (u == v) return;  // no loops
        rows_[u].set(v);
        rows_[v].set(u);
    }

    bool has_edge(int u, int v) const { return rows_[u].test(v); }
    int degree(int v) const { return rows_[v].count(); }
    const Bitset& row(int v) const { return rows_[v]; }

    long long edge_count() const {
        long long d = 0;
        for (const auto& r : rows_) d += r.count();
        return d / 2;
    }

    /// Edges as (u, v) pairs with u < v, lexicographically ordered.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const SimpleGraph&) const = default;

private:
    std::vector<Bitset> rows_;
};

/// Complete graph on n vertices.
SimpleGraph complete_graph(int n);

/// Replace vertex i of `host` by parts[i] and connect all of parts[i] to all
/// of parts[j] exactly when i and j are adjacent in the host. Part vertices
/// are numbered consecutively in part order. Throws ArityMismatchError when
/// the host vertex count differs from the number of parts.
SimpleGraph generalized_join(const SimpleGraph& host, const std::vector<SimpleGraph>& parts);

}  // namespace zdg
