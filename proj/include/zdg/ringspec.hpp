#pragma once

/**
 * @file ringspec.hpp
 * @brief Textual ring specifications and their builder.
 *
 * Grammar (whitespace-insensitive, 'x' left-associative):
 *
 *   SPEC    := BASE ('@' INV)?
 *   BASE    := PRIMARY ('x' PRIMARY)*
 *   PRIMARY := 'Z' INT | 'M' INT '(' BASE ')' | 'table:' PATH
 *   INV     := 'id' | 'swap' | 'transpose' | '(' INV ',' INV ')'
 *
 * A PATH runs to the next '@', whitespace, or end of input, so a table ring
 * cannot be a product factor. Paths starting with "builtin:" resolve to the
 * built-in Cayley-table collection instead of the filesystem. A missing '@'
 * defaults to the table file's involution block when present, otherwise to id
 * on commutative rings, and is an error elsewhere.
 */

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zdg/involution.hpp"
#include "zdg/ring.hpp"

namespace zdg {

struct BaseSpec {
    enum class Kind { Zn, Product, Matrix, Table };

    Kind kind = Kind::Zn;
    long long n = 0;                // Zn modulus or matrix dimension
    std::vector<BaseSpec> factors;  // Product: 2 entries; Matrix: 1 (the base)
    std::string path;               // Table

    std::string text() const;
};

struct InvSpec {
    enum class Kind { Id, Swap, Transpose, Componentwise };

    Kind kind = Kind::Id;
    std::vector<InvSpec> parts;  // Componentwise: 2 entries

    std::string text() const;
};

struct RingSpec {
    BaseSpec base;
    std::optional<InvSpec> inv;

    std::string text() const;
};

RingSpec parse_ring_spec(std::string_view text);  // throws SpecParseError

struct BuildOptions {
    long long matrix_order_cap = 1'000'000;
};

/// Build just the base ring of a spec (file involutions are ignored here).
FiniteRing build_base(const BaseSpec& base, const BuildOptions& options = {});

/// Build the full star ring: base ring plus resolved involution. Throws
/// IncompatibleInvolutionError when the suffix does not fit the base.
StarRing build_star_ring(const RingSpec& spec, const BuildOptions& options = {});
StarRing build_star_ring(std::string_view text, const BuildOptions& options = {});

// =============================================================================
// Table files
// =============================================================================

/// Contents of a Cayley-table file: dimension line, n x n addition table,
/// n x n multiplication table, and an optional involution permutation row.
struct TableData {
    std::vector<std::vector<Elem>> add, mul;
    std::optional<std::vector<Elem>> involution;
};

TableData parse_table_stream(std::istream& in);

/// Load from the filesystem, or from the builtin registry for
/// "builtin:<name>" paths.
TableData load_table(const std::string& path);

/// Names understood after the "builtin:" prefix (small table rings of order
/// <= 8 used by the default verification families).
std::vector<std::string> builtin_table_names();

}  // namespace zdg
