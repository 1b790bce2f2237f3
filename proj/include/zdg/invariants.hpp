#pragma once

/**
 * @file invariants.hpp
 * @brief Graph invariants: components, diameter, girth, shape recognizers,
 *        and small-graph isomorphism.
 */

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zdg/graph.hpp"

namespace zdg {

/// Non-negative integer extended with an infinity that compares greater than
/// every finite value; used for diameter and girth.
class ExtNat {
public:
    ExtNat() = default;
    ExtNat(long long v) : value_(v) {}
    static ExtNat inf() {
        ExtNat e;
        e.infinite_ = true;
        return e;
    }

    bool is_inf() const { return infinite_; }
    long long value() const { return value_; }  // meaningful only when finite

    friend std::strong_ordering operator<=>(const ExtNat& a, const ExtNat& b) {
        if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
        if (a.infinite_) return std::strong_ordering::greater;
        if (b.infinite_) return std::strong_ordering::less;
        return a.value_ <=> b.value_;
    }
    friend bool operator==(const ExtNat& a, const ExtNat& b) {
        return (a <=> b) == std::strong_ordering::equal;
    }

    std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

private:
    long long value_ = 0;
    bool infinite_ = false;
};

/// Connected components as vertex lists, ordered by smallest member.
std::vector<std::vector<int>> components(const SimpleGraph& g);

/// Sup of pairwise distances; infinity when disconnected, 0 for a single
/// vertex, and nullopt (no distances exist) for the empty graph.
std::optional<ExtNat> diameter(const SimpleGraph& g);

/// Length of the shortest cycle; infinity for forests.
ExtNat girth(const SimpleGraph& g);

/// Open neighborhood of v; throws UnknownVertexError for out-of-range v.
Bitset neighborhood(const SimpleGraph& g, int v);

struct ShapeReport {
    bool is_complete = false;
    bool is_star = false;                 // requires >= 2 vertices
    std::optional<int> star_center;
    bool is_complete_bipartite = false;
    std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition;
};

ShapeReport shape_tests(const SimpleGraph& g);

/// Brute-force isomorphism with vertex/edge-count and degree-sequence
/// pre-screens; throws CapExceededError above `cap` vertices.
bool isomorphic_small(const SimpleGraph& a, const SimpleGraph& b, int cap = 10);

struct InvariantReport {
    long long vertex_count = 0;
    long long edge_count = 0;
    int component_count = 0;
    std::optional<ExtNat> diameter;  // nullopt for the empty graph
    ExtNat girth = ExtNat::inf();
    bool is_connected = false;
    bool is_complete = false;
    bool is_star = false;
    std::optional<int> star_center;
    std::vector<int> universal_vertices;
    std::vector<int> degree_sequence;  // ascending
};

InvariantReport compute_invariants(const SimpleGraph& g);

}  // namespace zdg
