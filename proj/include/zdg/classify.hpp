#pragma once

/**
 * @file classify.hpp
 * @brief Per-element classification: zero-divisors, nilpotents, projections,
 *        power orbits and stabilized annihilators.
 *
 * The power orbit of x is the sequence x, x^2, ... collected up to its first
 * repetition. The ascending chain of right annihilators r(x) <= r(x^2) <= ...
 * is constant along the orbit's cycle, so the union over all n of r(x^n)
 * equals r(x^s) where s is the first exponent lying on the cycle; that set is
 * the stable annihilator and drives adjacency in the generalized graph.
 */

#include <optional>
#include <vector>

#include "zdg/bitset.hpp"
#include "zdg/involution.hpp"
#include "zdg/ring.hpp"

namespace zdg {

struct ElementProfile {
    Elem element = 0;
    bool is_zero_divisor = false;
    bool is_nilpotent = false;
    std::optional<int> nilpotency_index;  // smallest m with x^m = 0
    bool is_idempotent = false;
    bool is_potent = false;  // x^m = x for some m >= 2
    bool is_projection = false;
    bool is_unit = false;
    std::vector<Elem> power_orbit;  // x, x^2, ... distinct powers
    int stable_exponent = 1;        // smallest n with x^n on the orbit cycle
    Bitset stable_annihilator;      // { z : x^n z = 0 for some n >= 1 }
};

/// Exactly { z : x z = 0 }.
Bitset right_annihilator(const FiniteRing& ring, Elem x);

/// Non-zero zero-divisors of the ring in ascending index order (the vertex
/// set of every graph variant).
std::vector<Elem> zero_divisors(const FiniteRing& ring);

ElementProfile classify_element(const StarRing& sr, Elem x);

/// Profiles for all elements, indexed by element.
std::vector<ElementProfile> classify_all(const StarRing& sr);

struct RingPredicates {
    bool is_reduced = false;          // no non-zero nilpotent
    bool is_abelian = false;          // every idempotent is central
    bool is_commutative = false;
    bool is_integral_domain = false;  // commutative, has one, order >= 2, no zero-divisors
    bool has_proper_involution = false;            // x x* = 0 implies x = 0
    bool has_nontrivial_central_projection = false;
};

RingPredicates ring_predicates(const StarRing& sr);

}  // namespace zdg
