#pragma once

/**
 * @file zdgraph.hpp
 * @brief The four zero-divisor graph variants over Z*(R).
 *
 * All variants share the vertex set Z*(R), listed in ascending element order:
 *   gamma        x ~ y iff xy = 0                 (commutative rings only)
 *   gamma_bar    x ~ y iff xy = 0 or yx = 0
 *   gamma_star   x ~ y iff x y* = 0               (symmetric under *)
 *   gamma_prime  x ~ y iff x^n y* = 0 or y^n x* = 0 for some n >= 1
 *
 * gamma_prime adjacency is decided through stabilized annihilators: x ~ y iff
 * y* lies in the stable annihilator of x or x* lies in that of y. Non-zero
 * nilpotents have stable annihilator R, hence are adjacent to every other
 * vertex.
 */

#include <optional>
#include <string>
#include <vector>

#include "zdg/classify.hpp"
#include "zdg/graph.hpp"
#include "zdg/involution.hpp"

namespace zdg {

enum class GraphVariant { Gamma, GammaBar, GammaStar, GammaPrime };

std::string variant_name(GraphVariant v);                    // "gamma-prime" etc.
std::optional<GraphVariant> variant_from_name(const std::string& name);

struct ZdGraph {
    GraphVariant variant = GraphVariant::Gamma;
    std::vector<Elem> vertices;  // Z*(R), ascending element indices
    SimpleGraph graph;           // adjacency over vertex positions

    int vertex_count() const { return graph.vertex_count(); }

    /// Position of a ring element in the vertex list, if it is a vertex.
    std::optional<int> position_of(Elem x) const;
};

/// Classical zero-divisor graph; defined for commutative rings only
/// (throws NotCommutativeError otherwise).
ZdGraph gamma(const FiniteRing& ring);

/// Two-sided variant for arbitrary rings.
ZdGraph gamma_bar(const FiniteRing& ring);

/// Involution variant: x ~ y iff x y* = 0 (equivalently y x* = 0).
ZdGraph gamma_star(const StarRing& sr);

/// Generalized variant via stabilized annihilators.
ZdGraph gamma_prime(const StarRing& sr);

/// Exact edge-set comparison of two variants over the same ring; throws
/// VertexSetMismatchError when the vertex element lists differ.
bool edge_set_equal(const ZdGraph& a, const ZdGraph& b);

/// Decomposition of gamma_prime over a 2x2 matrix ring M2(F), F a finite
/// field, with the transpose involution: the induced gamma_star subgraph on
/// non-nilpotent zero-divisors, the complete graph on the non-zero nilpotents,
/// and their K2-join reassembled on the canonical vertex order.
struct M2Decomposition {
    ZdGraph gamma1;                // induced from gamma_star, non-nilpotent vertices
    std::vector<Elem> nilpotents;  // non-zero nilpotent elements, ascending
    ZdGraph joined;                // K2-join, canonical Z*(R) vertex order
};

M2Decomposition m2_field_decomposition(const StarRing& sr);  // NotM2OverFieldError

}  // namespace zdg
