#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "zdg/invariants.hpp"
#include "zdg/ringspec.hpp"
#include "zdg/zdgraph.hpp"

using namespace zdg;

namespace {

// -----------------------------------------------------------------------------
// Naive oracles for graphs with <= 8 vertices.
// -----------------------------------------------------------------------------

constexpr int kUnreached = 1 << 20;

/// All-pairs distances by Floyd-Warshall over the adjacency matrix.
std::vector<std::vector<int>> floyd_warshall(const SimpleGraph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> d(n, std::vector<int>(n, kUnreached));
    for (int i = 0; i < n; ++i) d[i][i] = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && g.has_edge(i, j)) d[i][j] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

ExtNat oracle_diameter(const SimpleGraph& g) {
    auto d = floyd_warshall(g);
    long long best = 0;
    for (int i = 0; i < g.vertex_count(); ++i)
        for (int j = 0; j < g.vertex_count(); ++j) {
            if (d[i][j] >= kUnreached) return ExtNat::inf();
            best = std::max<long long>(best, d[i][j]);
        }
    return ExtNat(best);
}

int oracle_component_count(const SimpleGraph& g) {
    auto d = floyd_warshall(g);
    const int n = g.vertex_count();
    std::vector<bool> counted(n, false);
    int comps = 0;
    for (int i = 0; i < n; ++i) {
        if (counted[i]) continue;
        ++comps;
        for (int j = 0; j < n; ++j)
            if (d[i][j] < kUnreached) counted[j] = true;
    }
    return comps;
}

/// Shortest cycle by DFS over all simple paths from every start vertex.
void cycle_dfs(const SimpleGraph& g, int start, int current, int length,
               std::vector<bool>& on_path, long long& best) {
    for (int next = 0; next < g.vertex_count(); ++next) {
        if (!g.has_edge(current, next)) continue;
        if (next == start && length >= 3) {
            best = std::min(best, static_cast<long long>(length));
        } else if (!on_path[next]) {
            on_path[next] = true;
            cycle_dfs(g, start, next, length + 1, on_path, best);
            on_path[next] = false;
        }
    }
}

ExtNat oracle_girth(const SimpleGraph& g) {
    long long best = kUnreached;
    for (int start = 0; start < g.vertex_count(); ++start) {
        std::vector<bool> on_path(g.vertex_count(), false);
        on_path[start] = true;
        cycle_dfs(g, start, start, 1, on_path, best);
    }
    return best >= kUnreached ? ExtNat::inf() : ExtNat(best);
}

SimpleGraph random_graph(std::mt19937& rng, int n, double p) {
    SimpleGraph g(n);
    std::bernoulli_distribution flip(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (flip(rng)) g.add_edge(u, v);
    return g;
}

ZdGraph prime_of(const char* spec) { return gamma_prime(build_star_ring(spec)); }

}  // namespace

// =============================================================================
// ExtNat
// =============================================================================

TEST_CASE("ExtNat ordering and printing") {
    CHECK(ExtNat(3) < ExtNat(4));
    CHECK(ExtNat(4) < ExtNat::inf());
    CHECK(ExtNat::inf() == ExtNat::inf());
    CHECK_FALSE(ExtNat::inf() < ExtNat::inf());
    CHECK(ExtNat(1000000) < ExtNat::inf());
    CHECK(ExtNat(2).to_string() == "2");
    CHECK(ExtNat::inf().to_string() == "inf");
}

// =============================================================================
// Components, diameter, girth on the worked rings
// =============================================================================

TEST_CASE("components of the worked graphs") {
    CHECK(components(prime_of("Z3xZ3@swap").graph).size() == 2);
    CHECK(components(prime_of("Z8").graph).size() == 1);
    CHECK(components(SimpleGraph(0)).empty());
}

TEST_CASE("diameter of the worked graphs") {
    auto d = diameter(prime_of("M2(Z2)@transpose").graph);
    REQUIRE(d);
    CHECK(*d == ExtNat(2));

    // Z9 has two vertices 3, 6 with 3 * 6 = 18 = 0.
    auto d9 = diameter(prime_of("Z9").graph);
    REQUIRE(d9);
    CHECK(*d9 == ExtNat(1));

    auto dswap = diameter(prime_of("Z3xZ3@swap").graph);
    REQUIRE(dswap);
    CHECK(dswap->is_inf());

    CHECK_FALSE(diameter(SimpleGraph(0)).has_value());
    auto single = diameter(SimpleGraph(1));
    REQUIRE(single);
    CHECK(*single == ExtNat(0));
}

TEST_CASE("girth of the worked graphs") {
    CHECK(girth(prime_of("Z8").graph) == ExtNat(3));
    CHECK(girth(prime_of("Z3xZ3@swap").graph).is_inf());

    // Z3xZ3 with the componentwise identity is K_{2,2}: shortest cycle 4.
    ZdGraph k22 = prime_of("Z3xZ3@(id,id)");
    CHECK(oracle_girth(k22.graph) == ExtNat(4));
    CHECK(girth(k22.graph) == ExtNat(4));
}

// =============================================================================
// Shapes
// =============================================================================

TEST_CASE("shape of gamma_prime(Z2xZ5): star with center (1,0)") {
    StarRing sr = build_star_ring("Z2xZ5@(id,id)");
    ZdGraph g = gamma_prime(sr);
    ShapeReport shape = shape_tests(g.graph);
    CHECK(shape.is_star);
    REQUIRE(shape.star_center);
    CHECK(sr.ring().element_name(g.vertices[*shape.star_center]) == "(1,0)");
    CHECK_FALSE(shape.is_complete);
}

TEST_CASE("shape of gamma_prime(Z8): complete K3") {
    ShapeReport shape = shape_tests(prime_of("Z8").graph);
    CHECK(shape.is_complete);
    CHECK_FALSE(shape.is_star);
}

TEST_CASE("shape of gamma_prime(Z5xZ7): complete bipartite 4 + 6") {
    StarRing sr = build_star_ring("Z5xZ7@(id,id)");
    ZdGraph g = gamma_prime(sr);

    // Oracle: vertices split by which coordinate vanishes; all cross pairs
    // must be adjacent and no within-side pairs.
    auto pv = as_product(sr.ring());
    int left = 0, right = 0;
    for (Elem v : g.vertices) (pv->right_of(v) == 0 ? left : right) += 1;
    REQUIRE(left == 4);
    REQUIRE(right == 6);

    ShapeReport shape = shape_tests(g.graph);
    REQUIRE(shape.is_complete_bipartite);
    REQUIRE(shape.bipartition);
    std::size_t small = shape.bipartition->first.size();
    std::size_t large = shape.bipartition->second.size();
    if (small > large) std::swap(small, large);
    CHECK(small == 4);
    CHECK(large == 6);
    CHECK(g.graph.edge_count() == 24);
}

TEST_CASE("shape recognizer edge cases") {
    SimpleGraph k2 = complete_graph(2);
    ShapeReport s2 = shape_tests(k2);
    CHECK(s2.is_star);  // K2 = K_{1,1}
    CHECK(s2.is_complete);

    SimpleGraph k1(1);
    ShapeReport s1 = shape_tests(k1);
    CHECK(s1.is_complete);
    CHECK_FALSE(s1.is_star);

    ShapeReport s0 = shape_tests(SimpleGraph(0));
    CHECK_FALSE(s0.is_complete);
    CHECK_FALSE(s0.is_star);

    // A triangle with a pendant is neither.
    SimpleGraph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(2, 3);
    ShapeReport sp = shape_tests(g);
    CHECK_FALSE(sp.is_complete);
    CHECK_FALSE(sp.is_star);
    CHECK_FALSE(sp.is_complete_bipartite);
}

TEST_CASE("a star has diameter 2 and infinite girth once it has 3 vertices") {
    for (int leaves = 2; leaves <= 6; ++leaves) {
        SimpleGraph star(leaves + 1);
        for (int v = 1; v <= leaves; ++v) star.add_edge(0, v);
        REQUIRE(shape_tests(star).is_star);
        auto d = diameter(star);
        REQUIRE(d);
        CHECK(*d == ExtNat(2));
        CHECK(girth(star).is_inf());
    }
}

// =============================================================================
// Neighborhoods
// =============================================================================

TEST_CASE("neighborhood queries on gamma_prime(Z8)") {
    ZdGraph g = prime_of("Z8");
    auto pos2 = g.position_of(2);
    REQUIRE(pos2);
    Bitset n2 = neighborhood(g.graph, *pos2);
    std::vector<Elem> names;
    for (int v : n2.to_vector()) names.push_back(g.vertices[v]);
    CHECK(names == std::vector<Elem>{4, 6});  // N(2) = {4, 6}

    CHECK_THROWS_AS(neighborhood(g.graph, 99), UnknownVertexError);
}

TEST_CASE("universal and isolated neighborhoods") {
    SimpleGraph g(4);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(0, 3);
    CHECK(neighborhood(g, 0).count() == 3);
    SimpleGraph iso(3);
    CHECK(neighborhood(iso, 1).count() == 0);
}

// =============================================================================
// edge_set_equal and isomorphism
// =============================================================================

TEST_CASE("edge_set_equal across variants") {
    StarRing z30 = build_star_ring("Z30");
    CHECK(edge_set_equal(gamma_star(z30), gamma_prime(z30)));

    StarRing z8 = build_star_ring("Z8");
    ZdGraph star = gamma_star(z8), prime = gamma_prime(z8);
    CHECK_FALSE(edge_set_equal(star, prime));  // the 2 - 6 edge differs
    auto p2 = prime.position_of(2), p6 = prime.position_of(6);
    CHECK(prime.graph.has_edge(*p2, *p6));
    CHECK_FALSE(star.graph.has_edge(*p2, *p6));

    CHECK(edge_set_equal(prime, prime));
    CHECK_THROWS_AS(edge_set_equal(prime, gamma_prime(build_star_ring("Z9"))),
                    VertexSetMismatchError);
}

TEST_CASE("isomorphic_small: worked examples") {
    StarRing sr = build_star_ring("M2(Z2)@transpose");
    CHECK_FALSE(isomorphic_small(gamma_bar(sr.ring()).graph, gamma_prime(sr).graph));

    CHECK(isomorphic_small(complete_graph(3), prime_of("Z8").graph));

    SimpleGraph p3(3);
    p3.add_edge(0, 1);
    p3.add_edge(1, 2);
    CHECK_FALSE(isomorphic_small(p3, complete_graph(3)));

    CHECK_THROWS_AS(isomorphic_small(SimpleGraph(11), SimpleGraph(11)), CapExceededError);
}

TEST_CASE("isomorphic_small agrees with itself under relabeling") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        SimpleGraph g = random_graph(rng, n, 0.4);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        SimpleGraph h(n);
        for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
        CHECK(isomorphic_small(g, h));
    }
}

// =============================================================================
// Random-graph agreement with the naive oracles
// =============================================================================

TEST_CASE("diameter, girth, components match the naive oracles on random graphs") {
    std::mt19937 rng(0xa11ce);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + static_cast<int>(rng() % 8);
        double p = (trial % 3 == 0) ? 0.2 : (trial % 3 == 1 ? 0.5 : 0.8);
        SimpleGraph g = random_graph(rng, n, p);
        CAPTURE(trial);
        CAPTURE(n);

        auto d = diameter(g);
        REQUIRE(d);
        CHECK(*d == oracle_diameter(g));
        CHECK(girth(g) == oracle_girth(g));
        CHECK(static_cast<int>(components(g).size()) == oracle_component_count(g));
    }
}

TEST_CASE("invariant report is internally consistent") {
    std::mt19937 rng(0xbee5);
    for (int trial = 0; trial < 100; ++trial) {
        int n = static_cast<int>(rng() % 9);
        SimpleGraph g = random_graph(rng, n, 0.5);
        InvariantReport r = compute_invariants(g);
        CHECK(r.vertex_count == n);
        CHECK(r.is_connected == (r.component_count <= 1));
        if (r.is_complete && r.diameter) CHECK(*r.diameter <= ExtNat(1));
        if (r.is_star && n >= 3) {
            REQUIRE(r.diameter);
            CHECK(*r.diameter == ExtNat(2));
            CHECK(r.girth.is_inf());
            CHECK(r.edge_count == n - 1);
        }
        CHECK(static_cast<int>(r.degree_sequence.size()) == n);
        CHECK(std::is_sorted(r.degree_sequence.begin(), r.degree_sequence.end()));
        for (int v : r.universal_vertices) CHECK(g.degree(v) == n - 1);
    }
}

TEST_CASE("girth trichotomy across the worked ring families") {
    for (const char* spec :
         {"Z4", "Z8", "Z9", "Z12", "Z16", "Z30", "Z2xZ2@(id,id)", "Z3xZ3@(id,id)",
          "Z3xZ3@swap", "Z2xZ5@(id,id)", "M2(Z2)@transpose", "M2(Z3)@transpose",
          "table:builtin:t8", "table:builtin:x8"}) {
        CAPTURE(spec);
        ExtNat g = girth(prime_of(spec).graph);
        CHECK((g == ExtNat(3) || g == ExtNat(4) || g.is_inf()));
    }
}
