#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <set>
#include <vector>

#include "zdg/classify.hpp"
#include "zdg/invariants.hpp"
#include "zdg/ringspec.hpp"
#include "zdg/zdgraph.hpp"

using namespace zdg;

namespace {

using EdgeSet = std::set<std::pair<std::string, std::string>>;

/// Edges as name pairs, each ordered lexicographically, for frozen comparisons.
EdgeSet named_edges(const StarRing& sr, const ZdGraph& g) {
    EdgeSet out;
    for (auto [u, v] : g.graph.edges()) {
        std::string a = sr.ring().element_name(g.vertices[u]);
        std::string b = sr.ring().element_name(g.vertices[v]);
        if (b < a) std::swap(a, b);
        out.insert({a, b});
    }
    return out;
}

// -----------------------------------------------------------------------------
// Test-side 2x2 matrices over Z_m, independent of the library's ring backend.
// -----------------------------------------------------------------------------

struct M2 {
    int m;
    std::array<int, 4> e;  // row-major

    M2 mul(const M2& o) const {
        return {m,
                {(e[0] * o.e[0] + e[1] * o.e[2]) % m, (e[0] * o.e[1] + e[1] * o.e[3]) % m,
                 (e[2] * o.e[0] + e[3] * o.e[2]) % m, (e[2] * o.e[1] + e[3] * o.e[3]) % m}};
    }
    M2 transpose() const { return {m, {e[0], e[2], e[1], e[3]}}; }
    bool is_zero() const { return !e[0] && !e[1] && !e[2] && !e[3]; }
};

std::vector<M2> all_m2(int m) {
    std::vector<M2> out;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < m; ++c)
                for (int d = 0; d < m; ++d) out.push_back({m, {a, b, c, d}});
    return out;
}

bool m2_zero_divisor(const M2& x, const std::vector<M2>& all) {
    if (x.is_zero()) return false;
    for (const M2& z : all)
        if (!z.is_zero() && (x.mul(z).is_zero() || z.mul(x).is_zero())) return true;
    return false;
}

/// Naive generalized adjacency: exists n in [1, bound] with x^n y* = 0 or
/// y^n x* = 0, powers taken step by step.
bool naive_prime_adjacent(const StarRing& sr, Elem x, Elem y, int bound) {
    const FiniteRing& ring = sr.ring();
    Elem xs = sr.star_of(x), ys = sr.star_of(y);
    Elem px = x, py = y;
    for (int n = 1; n <= bound; ++n) {
        if (ring.mul(px, ys) == ring.zero() || ring.mul(py, xs) == ring.zero()) return true;
        px = ring.mul(px, x);
        py = ring.mul(py, y);
    }
    return false;
}

}  // namespace

// =============================================================================
// gamma
// =============================================================================

TEST_CASE("gamma(Z8) is the path 2 - 4 - 6") {
    StarRing sr = build_star_ring("Z8");
    ZdGraph g = gamma(sr.ring());
    CHECK(g.vertices == std::vector<Elem>{2, 4, 6});
    CHECK(named_edges(sr, g) == EdgeSet{{"2", "4"}, {"4", "6"}});
}

TEST_CASE("gamma(Z6) edges from the exhaustive product oracle") {
    // Oracle: direct products mod 6 over the non-zero zero-divisors {2,3,4}.
    EdgeSet expected;
    for (int x = 1; x < 6; ++x)
        for (int y = x + 1; y < 6; ++y)
            if ((x * y) % 6 == 0) {
                bool x_zd = false, y_zd = false;
                for (int z = 1; z < 6; ++z) {
                    if ((x * z) % 6 == 0) x_zd = true;
                    if ((y * z) % 6 == 0) y_zd = true;
                }
                if (x_zd && y_zd)
                    expected.insert({std::to_string(x), std::to_string(y)});
            }
    REQUIRE(expected == EdgeSet{{"2", "3"}, {"3", "4"}});

    StarRing sr = build_star_ring("Z6");
    CHECK(named_edges(sr, gamma(sr.ring())) == expected);
}

TEST_CASE("gamma on a field is empty; on a non-commutative ring it throws") {
    CHECK(gamma(build_zn(7)).vertex_count() == 0);
    CHECK_THROWS_AS(gamma(build_matrix_ring(2, build_zn(2))), NotCommutativeError);
}

// =============================================================================
// gamma_bar
// =============================================================================

TEST_CASE("gamma_bar(M2(Z2)) matches the brute-force two-sided oracle") {
    std::vector<M2> all = all_m2(2);
    std::vector<M2> zds;
    for (const M2& x : all)
        if (m2_zero_divisor(x, all)) zds.push_back(x);
    REQUIRE(zds.size() == 9);

    EdgeSet expected;
    auto name = [](const M2& x) {
        return "[[" + std::to_string(x.e[0]) + "," + std::to_string(x.e[1]) + "],[" +
               std::to_string(x.e[2]) + "," + std::to_string(x.e[3]) + "]]";
    };
    for (std::size_t i = 0; i < zds.size(); ++i)
        for (std::size_t j = i + 1; j < zds.size(); ++j)
            if (zds[i].mul(zds[j]).is_zero() || zds[j].mul(zds[i]).is_zero()) {
                std::string a = name(zds[i]), b = name(zds[j]);
                if (b < a) std::swap(a, b);
                expected.insert({a, b});
            }

    StarRing sr = build_star_ring("M2(Z2)@transpose");
    ZdGraph g = gamma_bar(sr.ring());
    CHECK(g.vertex_count() == 9);
    CHECK(named_edges(sr, g) == expected);
}

TEST_CASE("gamma_bar equals gamma on commutative rings") {
    for (const char* spec : {"Z12", "Z30"}) {
        StarRing sr = build_star_ring(spec);
        CHECK(edge_set_equal(gamma(sr.ring()), gamma_bar(sr.ring())));
    }
}

TEST_CASE("gamma_bar(Z4) is a single isolated vertex") {
    ZdGraph g = gamma_bar(build_zn(4));
    CHECK(g.vertices == std::vector<Elem>{2});
    CHECK(g.graph.edge_count() == 0);
}

// =============================================================================
// gamma_star
// =============================================================================

TEST_CASE("gamma_star(Z8) with identity equals gamma(Z8)") {
    StarRing sr = build_star_ring("Z8");
    ZdGraph star = gamma_star(sr);
    CHECK(edge_set_equal(star, gamma(sr.ring())));
    CHECK(named_edges(sr, star) == EdgeSet{{"2", "4"}, {"4", "6"}});
}

TEST_CASE("gamma_star(M2(Z2)) is disconnected and matches the x y^T oracle") {
    std::vector<M2> all = all_m2(2);
    std::vector<M2> zds;
    for (const M2& x : all)
        if (m2_zero_divisor(x, all)) zds.push_back(x);

    int expected_edges = 0;
    for (std::size_t i = 0; i < zds.size(); ++i)
        for (std::size_t j = i + 1; j < zds.size(); ++j)
            if (zds[i].mul(zds[j].transpose()).is_zero() ||
                zds[j].mul(zds[i].transpose()).is_zero())
                ++expected_edges;

    StarRing sr = build_star_ring("M2(Z2)@transpose");
    ZdGraph g = gamma_star(sr);
    CHECK(g.graph.edge_count() == expected_edges);
    CHECK(components(g.graph).size() > 1);
}

TEST_CASE("gamma_star(Z3xZ3 swap) has exactly the two within-side edges") {
    StarRing sr = build_star_ring("Z3xZ3@swap");
    CHECK(named_edges(sr, gamma_star(sr)) ==
          EdgeSet{{"(0,1)", "(0,2)"}, {"(1,0)", "(2,0)"}});
}

// =============================================================================
// gamma_prime
// =============================================================================

TEST_CASE("gamma_prime(Z8) is the triangle on {2,4,6}") {
    StarRing sr = build_star_ring("Z8");
    CHECK(named_edges(sr, gamma_prime(sr)) ==
          EdgeSet{{"2", "4"}, {"2", "6"}, {"4", "6"}});
}

TEST_CASE("gamma_prime(Z3xZ3 swap) is two disjoint edges") {
    StarRing sr = build_star_ring("Z3xZ3@swap");
    ZdGraph g = gamma_prime(sr);
    CHECK(named_edges(sr, g) == EdgeSet{{"(0,1)", "(0,2)"}, {"(1,0)", "(2,0)"}});
    CHECK(components(g.graph).size() == 2);
}

TEST_CASE("gamma_prime(M2(Z2)) matches the bounded-power oracle and differs from gamma_bar") {
    StarRing sr = build_star_ring("M2(Z2)@transpose");
    ZdGraph prime = gamma_prime(sr);
    ZdGraph bar = gamma_bar(sr.ring());
    CHECK(prime.vertex_count() == 9);

    // Oracle: power adjacency with n up to |R| = 16.
    for (int i = 0; i < prime.vertex_count(); ++i)
        for (int j = i + 1; j < prime.vertex_count(); ++j) {
            bool expected = naive_prime_adjacent(sr, prime.vertices[i], prime.vertices[j], 16);
            CAPTURE(i);
            CAPTURE(j);
            CHECK(prime.graph.has_edge(i, j) == expected);
        }

    CHECK(components(prime.graph).size() == 1);
    CHECK_FALSE(edge_set_equal(prime, bar));
}

// =============================================================================
// generalized join and the M2(F) decomposition
// =============================================================================

TEST_CASE("generalized_join basics") {
    SimpleGraph k2 = complete_graph(2);
    SimpleGraph point(1);

    SimpleGraph joined = generalized_join(k2, {point, point});
    CHECK(joined.vertex_count() == 2);
    CHECK(joined.edge_count() == 1);

    SimpleGraph empty_host(2);
    SimpleGraph p2(2);
    p2.add_edge(0, 1);
    SimpleGraph disjoint = generalized_join(empty_host, {p2, p2});
    CHECK(disjoint.vertex_count() == 4);
    CHECK(disjoint.edge_count() == 2);
    CHECK_FALSE(disjoint.has_edge(0, 2));

    CHECK_THROWS_AS(generalized_join(k2, {point}), ArityMismatchError);
}

TEST_CASE("m2_field_decomposition over Z2: three nilpotents, join equals gamma_prime") {
    StarRing sr = build_star_ring("M2(Z2)@transpose");
    M2Decomposition dec = m2_field_decomposition(sr);

    // Oracle: non-zero 2x2 matrices over Z2 with A^2 = 0 (singular matrices
    // satisfy A^2 = tr(A) A, so nilpotency shows up at the square).
    std::vector<M2> all = all_m2(2);
    int nil = 0;
    for (const M2& x : all)
        if (!x.is_zero() && x.mul(x).is_zero()) ++nil;
    REQUIRE(nil == 3);

    CHECK(dec.nilpotents.size() == 3);
    CHECK(dec.gamma1.vertex_count() == 6);
    CHECK(edge_set_equal(dec.joined, gamma_prime(sr)));
}

TEST_CASE("m2_field_decomposition over Z3: join equals gamma_prime on 32 vertices") {
    StarRing sr = build_star_ring("M2(Z3)@transpose");
    M2Decomposition dec = m2_field_decomposition(sr);
    ZdGraph prime = gamma_prime(sr);
    CHECK(prime.vertex_count() == 32);
    CHECK(edge_set_equal(dec.joined, prime));
}

TEST_CASE("m2_field_decomposition rejects non-fields and non-matrix rings") {
    CHECK_THROWS_AS(m2_field_decomposition(build_star_ring("M2(Z4)@transpose")),
                    NotM2OverFieldError);
    CHECK_THROWS_AS(m2_field_decomposition(build_star_ring("Z8")), NotM2OverFieldError);
}

// =============================================================================
// Cross-variant properties
// =============================================================================

namespace {

const std::vector<const char*>& property_family() {
    static const std::vector<const char*> specs = {
        "Z4",       "Z8",           "Z9",
        "Z12",      "Z30",          "Z2xZ4@(id,id)",
        "Z3xZ3@swap", "Z3xZ3@(id,id)", "Z2xZ2@swap",
        "M2(Z2)@transpose", "M2(Z3)@transpose", "table:builtin:t8",
        "table:builtin:d4", "table:builtin:zero4", "table:builtin:gf4",
    };
    return specs;
}

}  // namespace

TEST_CASE("gamma_star is a subgraph of gamma_prime") {
    for (const char* spec : property_family()) {
        StarRing sr = build_star_ring(spec);
        CAPTURE(spec);
        ZdGraph star = gamma_star(sr), prime = gamma_prime(sr);
        REQUIRE(star.vertices == prime.vertices);
        for (auto [u, v] : star.graph.edges()) CHECK(prime.graph.has_edge(u, v));
    }
}

TEST_CASE("reduced rings: gamma_star and gamma_prime coincide") {
    for (const char* spec : {"Z6", "Z30", "Z105", "Z3xZ3@swap", "table:builtin:gf4"}) {
        StarRing sr = build_star_ring(spec);
        CAPTURE(spec);
        REQUIRE(ring_predicates(sr).is_reduced);
        CHECK(edge_set_equal(gamma_star(sr), gamma_prime(sr)));
    }
}

TEST_CASE("non-zero nilpotents are universal in gamma_prime") {
    for (const char* spec : property_family()) {
        StarRing sr = build_star_ring(spec);
        CAPTURE(spec);
        ZdGraph prime = gamma_prime(sr);
        for (int i = 0; i < prime.vertex_count(); ++i)
            if (classify_element(sr, prime.vertices[i]).is_nilpotent)
                CHECK(prime.graph.degree(i) == prime.vertex_count() - 1);
    }
}

TEST_CASE("stable-annihilator adjacency agrees with the bounded-power oracle on all pairs") {
    for (const char* spec : property_family()) {
        StarRing sr = build_star_ring(spec);
        CAPTURE(spec);
        REQUIRE(sr.order() <= 81);
        ZdGraph prime = gamma_prime(sr);
        for (int i = 0; i < prime.vertex_count(); ++i)
            for (int j = i + 1; j < prime.vertex_count(); ++j)
                CHECK(prime.graph.has_edge(i, j) ==
                      naive_prime_adjacent(sr, prime.vertices[i], prime.vertices[j],
                                           sr.order()));
    }
}

TEST_CASE("projections are gamma_prime-adjacent exactly when their product vanishes") {
    for (const char* spec : property_family()) {
        StarRing sr = build_star_ring(spec);
        CAPTURE(spec);
        const FiniteRing& ring = sr.ring();
        ZdGraph prime = gamma_prime(sr);
        for (int i = 0; i < prime.vertex_count(); ++i)
            for (int j = i + 1; j < prime.vertex_count(); ++j) {
                Elem e = prime.vertices[i], f = prime.vertices[j];
                if (ring.mul(e, e) != e || sr.star_of(e) != e) continue;
                if (ring.mul(f, f) != f || sr.star_of(f) != f) continue;
                CHECK(prime.graph.has_edge(i, j) == (ring.mul(e, f) == ring.zero() &&
                                                     ring.mul(f, e) == ring.zero()));
            }
    }
}

TEST_CASE("adjacency propagates to powers that remain distinct vertices") {
    for (const char* spec : property_family()) {
        StarRing sr = build_star_ring(spec);
        CAPTURE(spec);
        const FiniteRing& ring = sr.ring();
        ZdGraph prime = gamma_prime(sr);
        for (auto [u, v] : prime.graph.edges()) {
            Elem x = prime.vertices[u], y = prime.vertices[v];
            for (int i = 1; i <= 4; ++i)
                for (int j = 1; j <= 4; ++j) {
                    Elem xi = ring.pow(x, i), yj = ring.pow(y, j);
                    if (xi == yj) continue;
                    auto pu = prime.position_of(xi), pv = prime.position_of(yj);
                    if (!pu || !pv) continue;
                    CAPTURE(x);
                    CAPTURE(y);
                    CHECK(prime.graph.has_edge(*pu, *pv));
                }
        }
    }
}

TEST_CASE("neighborhood monotonicity along powers, loops excluded") {
    for (const char* spec : property_family()) {
        StarRing sr = build_star_ring(spec);
        CAPTURE(spec);
        const FiniteRing& ring = sr.ring();
        ZdGraph prime = gamma_prime(sr);
        const int n = prime.vertex_count();
        for (int i = 0; i < n; ++i) {
            Elem x = prime.vertices[i];
            ElementProfile p = classify_element(sr, x);
            for (int k = 2; k <= 5; ++k) {
                Elem xk = ring.pow(x, k);
                if (xk == x) continue;
                auto j = prime.position_of(xk);
                if (!j) continue;
                for (int y = 0; y < n; ++y) {
                    if (y == i || y == *j) continue;
                    if (prime.graph.has_edge(i, y)) CHECK(prime.graph.has_edge(*j, y));
                    if (p.is_potent)
                        CHECK(prime.graph.has_edge(i, y) == prime.graph.has_edge(*j, y));
                }
            }
        }
    }
}

TEST_CASE("empty vertex sets give empty graphs across all variants") {
    for (const char* spec : {"Z7", "Z1", "table:builtin:gf8"}) {
        StarRing sr = build_star_ring(spec);
        CAPTURE(spec);
        CHECK(gamma(sr.ring()).vertex_count() == 0);
        CHECK(gamma_bar(sr.ring()).vertex_count() == 0);
        CHECK(gamma_star(sr).vertex_count() == 0);
        CHECK(gamma_prime(sr).vertex_count() == 0);
    }
}
