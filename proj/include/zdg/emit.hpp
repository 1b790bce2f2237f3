#pragma once

/**
 * @file emit.hpp
 * @brief DOT, edge-list, and JSON serialization of labeled graphs.
 *
 * Output is deterministic: vertices in canonical element order, each
 * undirected edge listed once as (u, v) with u before v, keys in a fixed
 * order. JSON encodes infinite diameter/girth as the string "inf" and the
 * empty graph's undefined diameter as null.
 */

#include <string>

#include <json.hpp>

#include "zdg/invariants.hpp"
#include "zdg/involution.hpp"
#include "zdg/zdgraph.hpp"

namespace zdg {

std::string to_dot(const StarRing& sr, const ZdGraph& g);

/// One "<name> -- <name>" line per edge; empty string for an edgeless graph.
std::string edges_text(const StarRing& sr, const ZdGraph& g);

/// The graph itself: ring, involution, variant, vertex names, edge pairs.
nlohmann::ordered_json graph_json(const StarRing& sr, const ZdGraph& g);

/// Invariant report with the fixed key order: ring, involution, variant,
/// vertices, edges, components, diameter, girth, is_complete, is_star,
/// star_center, universal_vertices, degree_sequence.
nlohmann::ordered_json report_json(const StarRing& sr, const ZdGraph& g,
                                   const InvariantReport& report);

}  // namespace zdg
