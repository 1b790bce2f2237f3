#include "zdg/classify.hpp"

namespace zdg {

Bitset right_annihilator(const FiniteRing& ring, Elem x) {
    Bitset out(ring.order());
    for (Elem z = 0; z < ring.order(); ++z)
        if (ring.mul(x, z) == ring.zero()) out.set(z);
    return out;
}

std::vector<Elem> zero_divisors(const FiniteRing& ring) {
    const int n = ring.order();
    const Elem zero = ring.zero();
    std::vector<Elem> out;
    for (Elem x = 0; x < n; ++x) {
        if (x == zero) continue;
        for (Elem z = 0; z < n; ++z) {
            if (z == zero) continue;
            if (ring.mul(x, z) == zero || ring.mul(z, x) == zero) {
                out.push_back(x);
                break;
            }
        }
    }
    return out;
}

ElementProfile classify_element(const StarRing& sr, Elem x) {
    const FiniteRing& ring = sr.ring();
    const int n = ring.order();
    const Elem zero = ring.zero();

    ElementProfile p;
    p.element = x;

    // Power orbit with first-repeat detection. position_of[v] is the 0-based
    // index of v in the orbit, so the repeat target gives the preperiod.
    std::vector<int> position_of(n, -1);
    Elem power = x;
    int preperiod = 0;
    while (position_of[power] < 0) {
        position_of[power] = static_cast<int>(p.power_orbit.size());
        p.power_orbit.push_back(power);
        power = ring.mul(power, x);
    }
    preperiod = position_of[power];
    p.stable_exponent = preperiod + 1;

    if (position_of[zero] >= 0) {
        p.is_nilpotent = true;
        p.nilpotency_index = position_of[zero] + 1;
    }
    p.is_idempotent = ring.mul(x, x) == x;
    p.is_potent = preperiod == 0;  // the orbit cycles back to x itself
    p.is_projection = p.is_idempotent && sr.star_of(x) == x;

    p.stable_annihilator = right_annihilator(ring, p.power_orbit[preperiod]);

    if (x != zero) {
        for (Elem z = 0; z < n; ++z) {
            if (z == zero) continue;
            if (ring.mul(x, z) == zero || ring.mul(z, x) == zero) {
                p.is_zero_divisor = true;
                break;
            }
        }
    }

    if (ring.has_one()) {
        const Elem one = *ring.one();
        for (Elem y = 0; y < n; ++y)
            if (ring.mul(x, y) == one && ring.mul(y, x) == one) {
                p.is_unit = true;
                break;
            }
    }
    return p;
}

std::vector<ElementProfile> classify_all(const StarRing& sr) {
    std::vector<ElementProfile> out;
    out.reserve(sr.order());
    for (Elem x = 0; x < sr.order(); ++x) out.push_back(classify_element(sr, x));
    return out;
}

RingPredicates ring_predicates(const StarRing& sr) {
    const FiniteRing& ring = sr.ring();
    const int n = ring.order();
    const Elem zero = ring.zero();
    RingPredicates p;

    p.is_commutative = ring.commutative();

    p.is_reduced = true;
    for (Elem x = 0; x < n && p.is_reduced; ++x) {
        if (x == zero) continue;
        Elem power = x;
        std::vector<bool> seen(n, false);
        while (!seen[power]) {
            if (power == zero) { p.is_reduced = false; break; }
            seen[power] = true;
            power = ring.mul(power, x);
        }
    }

    p.is_abelian = true;
    for (Elem e = 0; e < n && p.is_abelian; ++e) {
        if (ring.mul(e, e) != e) continue;
        for (Elem r = 0; r < n; ++r)
            if (ring.mul(e, r) != ring.mul(r, e)) { p.is_abelian = false; break; }
    }

    bool has_zero_divisor = false;
    for (Elem x = 0; x < n && !has_zero_divisor; ++x) {
        if (x == zero) continue;
        for (Elem y = 0; y < n; ++y) {
            if (y == zero) continue;
            if (ring.mul(x, y) == zero) { has_zero_divisor = true; break; }
        }
    }
    p.is_integral_domain = p.is_commutative && ring.has_one() && n >= 2 && !has_zero_divisor;

    p.has_proper_involution = true;
    for (Elem x = 0; x < n; ++x)
        if (x != zero && ring.mul(x, sr.star_of(x)) == zero) {
            p.has_proper_involution = false;
            break;
        }

    for (Elem e = 0; e < n && !p.has_nontrivial_central_projection; ++e) {
        if (e == zero) continue;
        if (ring.has_one() && e == *ring.one()) continue;
        if (ring.mul(e, e) != e || sr.star_of(e) != e) continue;
        bool central = true;
        for (Elem r = 0; r < n && central; ++r) central = ring.mul(e, r) == ring.mul(r, e);
        if (central) p.has_nontrivial_central_projection = true;
    }
    return p;
}

}  // namespace zdg
