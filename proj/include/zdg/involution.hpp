#pragma once

/**
 * @file involution.hpp
 * @brief Involutions on finite rings and the StarRing pairing.
 *
 * An involution is an additive, anti-multiplicative, self-inverse permutation
 * of the ring: (x+y)* = x* + y*, (xy)* = y* x*, (x*)* = x. Built-in maps cover
 * the identity (commutative rings), coordinate swap and componentwise maps on
 * products, and the transpose on matrix rings; enumerate_involutions finds
 * every involution of a small ring by backtracking over additive generators.
 */

#include <string>
#include <vector>

#include "zdg/ring.hpp"

namespace zdg {

struct Involution {
    std::vector<Elem> map;
    std::string name;  // "id", "swap", "transpose", "(id,id)", "file", "perm[...]"

    Elem operator()(Elem x) const { return map[x]; }
    bool is_identity() const;
};

struct InvolutionCheck {
    enum class Failure {
        None,
        NotAPermutation,
        NotInvolutive,         // (x*)* != x
        NotAdditive,           // (x+y)* != x* + y*
        NotAntiMultiplicative  // (xy)* != y* x*
    };

    Failure failure = Failure::None;
    Elem x = -1, y = -1;  // witness (y unused for unary axioms)

    bool ok() const { return failure == Failure::None; }
    std::string message() const;
};

/// Checks the three involution axioms for all pairs; the first failure in scan
/// order is reported with its witness.
InvolutionCheck validate_involution(const FiniteRing& ring, const std::vector<Elem>& map);

/// x -> x; a valid involution exactly when the ring is commutative.
Involution identity_involution(const FiniteRing& ring);

/// (x,y) -> (y,x) on a product of two rings of equal order.
Involution swap_involution(const FiniteRing& ring);

/// Entry transpose on a matrix ring.
Involution transpose_involution(const FiniteRing& ring);

/// (x,y) -> (x^*1, y^*2) on a product ring.
Involution componentwise_involution(const FiniteRing& ring, const Involution& left,
                                    const Involution& right);

/// All involutions of a ring, found by free choice of images for a chain of
/// additive generators with additivity-forced closure; anti-multiplicativity
/// and self-inversion filter the completed maps. Throws OrderCapExceededError
/// when ring order exceeds `order_cap`.
std::vector<Involution> enumerate_involutions(const FiniteRing& ring, int order_cap = 16);

/// Raised when a StarRing is constructed from a map that fails validation.
class InvalidInvolutionError : public Error {
public:
    explicit InvalidInvolutionError(InvolutionCheck check)
        : Error(check.message()), check_(check) {}
    const InvolutionCheck& check() const { return check_; }

private:
    InvolutionCheck check_;
};

/// A finite ring paired with a validated involution.
class StarRing {
public:
    StarRing(FiniteRing ring, Involution star);

    const FiniteRing& ring() const { return ring_; }
    const Involution& star() const { return star_; }
    Elem star_of(Elem x) const { return star_.map[x]; }
    int order() const { return ring_.order(); }

    /// Canonical "base@involution" spec string ("@" part omitted for
    /// file-supplied involutions, which travel with the table file).
    std::string describe() const;

private:
    FiniteRing ring_;
    Involution star_;
};

}  // namespace zdg
