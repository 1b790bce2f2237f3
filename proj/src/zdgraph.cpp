#include "zdg/zdgraph.hpp"

#include <algorithm>

namespace zdg {

std::string variant_name(GraphVariant v) {
    switch (v) {
        case GraphVariant::Gamma: return "gamma";
        case GraphVariant::GammaBar: return "gamma-bar";
        case GraphVariant::GammaStar: return "gamma-star";
        case GraphVariant::GammaPrime: return "gamma-prime";
    }
    return "gamma";
}

std::optional<GraphVariant> variant_from_name(const std::string& name) {
    if (name == "gamma") return GraphVariant::Gamma;
    if (name == "gamma-bar") return GraphVariant::GammaBar;
    if (name == "gamma-star") return GraphVariant::GammaStar;
    if (name == "gamma-prime") return GraphVariant::GammaPrime;
    return std::nullopt;
}

std::optional<int> ZdGraph::position_of(Elem x) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), x);
    if (it == vertices.end() || *it != x) return std::nullopt;
    return static_cast<int>(it - vertices.begin());
}

namespace {

ZdGraph make_empty(GraphVariant variant, std::vector<Elem> vertices) {
    ZdGraph g;
    g.variant = variant;
    g.graph = SimpleGraph(static_cast<int>(vertices.size()));
    g.vertices = std::move(vertices);
    return g;
}

}  // namespace

ZdGraph gamma(const FiniteRing& ring) {
    if (!ring.commutative())
        throw NotCommutativeError("gamma: the classical graph needs a commutative ring (" +
                                  ring.describe() + " is not); use gamma-bar");
    ZdGraph g = make_empty(GraphVariant::Gamma, zero_divisors(ring));
    const int n = g.vertex_count();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (ring.mul(g.vertices[i], g.vertices[j]) == ring.zero()) g.graph.add_edge(i, j);
    return g;
}

ZdGraph gamma_bar(const FiniteRing& ring) {
    ZdGraph g = make_empty(GraphVariant::GammaBar, zero_divisors(ring));
    const int n = g.vertex_count();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Elem x = g.vertices[i], y = g.vertices[j];
            if (ring.mul(x, y) == ring.zero() || ring.mul(y, x) == ring.zero())
                g.graph.add_edge(i, j);
        }
    return g;
}

ZdGraph gamma_star(const StarRing& sr) {
    const FiniteRing& ring = sr.ring();
    ZdGraph g = make_empty(GraphVariant::GammaStar, zero_divisors(ring));
    const int n = g.vertex_count();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Elem x = g.vertices[i], y = g.vertices[j];
            // x y* = 0 iff y x* = 0 (apply *); both sides kept for symmetry.
            if (ring.mul(x, sr.star_of(y)) == ring.zero() ||
                ring.mul(y, sr.star_of(x)) == ring.zero())
                g.graph.add_edge(i, j);
        }
    return g;
}

ZdGraph gamma_prime(const StarRing& sr) {
    const FiniteRing& ring = sr.ring();
    ZdGraph g = make_empty(GraphVariant::GammaPrime, zero_divisors(ring));
    const int n = g.vertex_count();

    std::vector<ElementProfile> profile;
    profile.reserve(n);
    for (Elem v : g.vertices) profile.push_back(classify_element(sr, v));

    for (int i = 0; i < n; ++i) {
        if (!profile[i].is_nilpotent) continue;
        // Non-zero nilpotents are universal: x^m = 0 kills every y*.
        for (int j = 0; j < n; ++j)
            if (j != i) g.graph.add_edge(i, j);
    }
    for (int i = 0; i < n; ++i) {
        if (profile[i].is_nilpotent) continue;
        for (int j = i + 1; j < n; ++j) {
            if (profile[j].is_nilpotent) continue;
            Elem x = g.vertices[i], y = g.vertices[j];
            if (profile[i].stable_annihilator.test(sr.star_of(y)) ||
                profile[j].stable_annihilator.test(sr.star_of(x)))
                g.graph.add_edge(i, j);
        }
    }
    return g;
}

bool edge_set_equal(const ZdGraph& a, const ZdGraph& b) {
    if (a.vertices != b.vertices)
        throw VertexSetMismatchError("edge_set_equal: graphs have different vertex sets");
    return a.graph == b.graph;
}

M2Decomposition m2_field_decomposition(const StarRing& sr) {
    const FiniteRing& ring = sr.ring();
    auto mv = as_matrix(ring);
    if (!mv || mv->dim != 2)
        throw NotM2OverFieldError("m2_field_decomposition: ring is not 2x2 matrices");

    // Base must be a finite field: commutative with one, order >= 2, and no
    // non-zero zero-divisors.
    const FiniteRing& base = mv->base;
    bool field = base.commutative() && base.has_one() && base.order() >= 2;
    for (Elem x = 0; x < base.order() && field; ++x) {
        if (x == base.zero()) continue;
        for (Elem y = 0; y < base.order(); ++y) {
            if (y == base.zero()) continue;
            if (base.mul(x, y) == base.zero()) { field = false; break; }
        }
    }
    if (!field) throw NotM2OverFieldError("m2_field_decomposition: base is not a finite field");
    if (sr.star().map != transpose_involution(ring).map)
        throw NotM2OverFieldError("m2_field_decomposition: involution is not the transpose");

    ZdGraph star_graph = gamma_star(sr);
    const int n = star_graph.vertex_count();

    std::vector<bool> nil(n, false);
    M2Decomposition out;
    std::vector<int> non_nil_positions;
    for (int i = 0; i < n; ++i) {
        ElementProfile p = classify_element(sr, star_graph.vertices[i]);
        nil[i] = p.is_nilpotent;
        if (p.is_nilpotent)
            out.nilpotents.push_back(star_graph.vertices[i]);
        else
            non_nil_positions.push_back(i);
    }

    out.gamma1.variant = GraphVariant::GammaStar;
    out.gamma1.graph = SimpleGraph(static_cast<int>(non_nil_positions.size()));
    for (int i : non_nil_positions) out.gamma1.vertices.push_back(star_graph.vertices[i]);
    for (std::size_t a = 0; a < non_nil_positions.size(); ++a)
        for (std::size_t b = a + 1; b < non_nil_positions.size(); ++b)
            if (star_graph.graph.has_edge(non_nil_positions[a], non_nil_positions[b]))
                out.gamma1.graph.add_edge(static_cast<int>(a), static_cast<int>(b));

    SimpleGraph joined = generalized_join(
        complete_graph(2),
        {out.gamma1.graph, complete_graph(static_cast<int>(out.nilpotents.size()))});

    // Reassemble on the canonical vertex order: join positions are gamma1
    // vertices first, then the nilpotent block.
    std::vector<Elem> join_elems = out.gamma1.vertices;
    join_elems.insert(join_elems.end(), out.nilpotents.begin(), out.nilpotents.end());

    out.joined.variant = GraphVariant::GammaPrime;
    out.joined.vertices = star_graph.vertices;
    out.joined.graph = SimpleGraph(n);
    for (auto [u, v] : joined.edges()) {
        int cu = *out.joined.position_of(join_elems[u]);
        int cv = *out.joined.position_of(join_elems[v]);
        out.joined.graph.add_edge(cu, cv);
    }
    return out;
}

}  // namespace zdg
