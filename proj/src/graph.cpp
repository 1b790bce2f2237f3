#include "zdg/graph.hpp"

#include <numeric>

namespace zdg {

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < vertex_count(); ++u)
        for (int v = rows_[u].next_set(u + 1); v >= 0; v = rows_[u].next_set(v + 1))
            out.emplace_back(u, v);
    return out;
}

SimpleGraph complete_graph(int n) {
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

SimpleGraph generalized_join(const SimpleGraph& host, const std::vector<SimpleGraph>& parts) {
    if (host.vertex_count() != static_cast<int>(parts.size()))
        throw ArityMismatchError("generalized_join: host has " +
                                 std::to_string(host.vertex_count()) + " vertices but " +
                                 std::to_string(parts.size()) + " parts were given");

    std::vector<int> offset(parts.size() + 1, 0);
    for (std::size_t i = 0; i < parts.size(); ++i)
        offset[i + 1] = offset[i] + parts[i].vertex_count();

    SimpleGraph out(offset.back());
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (auto [u, v] : parts[i].edges()) out.add_edge(offset[i] + u, offset[i] + v);

    for (auto [i, j] : host.edges())
        for (int u = 0; u < parts[i].vertex_count(); ++u)
            for (int v = 0; v < parts[j].vertex_count(); ++v)
                out.add_edge(offset[i] + u, offset[j] + v);
    return out;
}

}  // namespace zdg
