#pragma once

/**
 * @file ring.hpp
 * @brief Finite rings with table-backed or structured arithmetic.
 *
 * A FiniteRing identifies elements with indices in [0, order). Built-in
 * constructors cover Z_n, direct products, square matrix rings, and rings
 * given by explicit Cayley tables. Rings of order <= 256 memoize their
 * add/mul/neg tables so axiom checks and graph construction stay cheap;
 * larger structured rings compute arithmetic on demand.
 */

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "zdg/errors.hpp"

namespace zdg {

/// Index of a ring element in [0, order).
using Elem = int;

/// Orders up to this bound get fully tabulated arithmetic.
inline constexpr int kTableCap = 256;

// =============================================================================
// Backends
// =============================================================================

class RingBackend {
public:
    virtual ~RingBackend() = default;
    virtual int order() const = 0;
    virtual Elem add(Elem a, Elem b) const = 0;
    virtual Elem mul(Elem a, Elem b) const = 0;
    virtual Elem neg(Elem a) const = 0;
    virtual Elem zero() const = 0;
    virtual std::optional<Elem> one() const = 0;
    virtual bool commutative() const = 0;
    virtual std::string element_name(Elem a) const = 0;
    virtual std::string describe() const = 0;
};

// =============================================================================
// FiniteRing
// =============================================================================

class FiniteRing {
public:
    explicit FiniteRing(std::shared_ptr<const RingBackend> backend);

    int order() const { return order_; }
    Elem zero() const { return zero_; }
    std::optional<Elem> one() const { return one_; }
    bool has_one() const { return one_.has_value(); }
    bool commutative() const { return commutative_; }

    Elem add(Elem a, Elem b) const {
        return tables_ ? tables_->add[a * order_ + b] : backend_->add(a, b);
    }
    Elem mul(Elem a, Elem b) const {
        return tables_ ? tables_->mul[a * order_ + b] : backend_->mul(a, b);
    }
    Elem neg(Elem a) const { return tables_ ? tables_->neg[a] : backend_->neg(a); }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    /// x^n for n >= 1 by repeated multiplication.
    Elem pow(Elem x, long long n) const;

    std::string element_name(Elem a) const { return backend_->element_name(a); }
    std::string describe() const { return backend_->describe(); }
    const RingBackend& backend() const { return *backend_; }
    std::shared_ptr<const RingBackend> backend_ptr() const { return backend_; }

private:
    struct OpTables {
        std::vector<Elem> add, mul, neg;
    };

    std::shared_ptr<const RingBackend> backend_;
    std::shared_ptr<const OpTables> tables_;  // null when order > kTableCap
    int order_ = 0;
    Elem zero_ = 0;
    std::optional<Elem> one_;
    bool commutative_ = false;
};

// =============================================================================
// Structure views (decode product / matrix element indices)
// =============================================================================

/// Pair coordinates of a product-ring element; present only for product rings.
struct ProductView {
    FiniteRing left;
    FiniteRing right;

    Elem pair(Elem l, Elem r) const { return l * right.order() + r; }
    Elem left_of(Elem x) const { return x / right.order(); }
    Elem right_of(Elem x) const { return x % right.order(); }
};

/// Entry coordinates of a matrix-ring element; present only for matrix rings.
struct MatrixView {
    int dim = 0;
    FiniteRing base;

    /// Entry (i, j) of matrix element x (row-major digit decode).
    Elem entry(Elem x, int i, int j) const;
    /// Matrix element from row-major entries.
    Elem from_entries(const std::vector<Elem>& entries) const;
};

std::optional<ProductView> as_product(const FiniteRing& ring);
std::optional<MatrixView> as_matrix(const FiniteRing& ring);

// =============================================================================
// Validation
// =============================================================================

struct AxiomViolation {
    enum class Kind {
        NonAbelianAddition,
        NonAssociativeMultiplication,
        DistributivityFailure,
        BrokenIdentity,
    };

    Kind kind;
    Elem a = -1, b = -1, c = -1;  // witness triple (unused slots are -1)
    std::string detail;

    std::string message() const;
};

struct RingValidation {
    std::vector<AxiomViolation> violations;
    bool exhaustive = true;  // false when the order forced sampling

    bool ok() const { return violations.empty(); }
};

/// Checks the ring axioms. Exhaustive for order <= 256; above that, checks
/// identity/inverse rows exhaustively and triple axioms on `samples` random
/// triples from a fixed-seed generator.
RingValidation validate_ring(const FiniteRing& ring, int samples = 20000);

/// Raised by build_from_tables when the tables violate the ring axioms.
class RingAxiomError : public Error {
public:
    explicit RingAxiomError(RingValidation validation);
    const RingValidation& validation() const { return validation_; }

private:
    RingValidation validation_;
};

// =============================================================================
// Constructors
// =============================================================================

/// Z_n with modular arithmetic; zero = 0, one = 1 for n > 1 (one = 0 for n = 1).
FiniteRing build_zn(long long n);

/// Componentwise arithmetic on left x right.
FiniteRing build_product(const FiniteRing& left, const FiniteRing& right);

/// k x k matrices over `base` (which must have a one). Throws
/// OrderCapExceededError when |base|^(k^2) exceeds `order_cap`.
FiniteRing build_matrix_ring(int k, const FiniteRing& base, long long order_cap = 1'000'000);

/// Ring from explicit Cayley tables, validated exhaustively. Throws
/// std::invalid_argument on malformed tables and RingAxiomError (carrying the
/// violated axioms with witness triples) when the tables are not a ring.
/// `name` becomes the describe() string.
FiniteRing build_from_tables(const std::vector<std::vector<Elem>>& add_table,
                             const std::vector<std::vector<Elem>>& mul_table,
                             const std::string& name = "table");

/// Table validation without constructing the ring; same checks as
/// build_from_tables but returns the structured violation list.
RingValidation validate_tables(const std::vector<std::vector<Elem>>& add_table,
                               const std::vector<std::vector<Elem>>& mul_table);

}  // namespace zdg
