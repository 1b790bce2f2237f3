#include "zdg/ringspec.hpp"

#include <cctype>
#include <fstream>
#include <functional>
#include <sstream>

namespace zdg {

// =============================================================================
// Canonical text
// =============================================================================

std::string BaseSpec::text() const {
    switch (kind) {
        case Kind::Zn: return "Z" + std::to_string(n);
        case Kind::Product: return factors[0].text() + "x" + factors[1].text();
        case Kind::Matrix: return "M" + std::to_string(n) + "(" + factors[0].text() + ")";
        case Kind::Table: return "table:" + path;
    }
    return {};
}

std::string InvSpec::text() const {
    switch (kind) {
        case Kind::Id: return "id";
        case Kind::Swap: return "swap";
        case Kind::Transpose: return "transpose";
        case Kind::Componentwise: return "(" + parts[0].text() + "," + parts[1].text() + ")";
    }
    return {};
}

std::string RingSpec::text() const {
    return inv ? base.text() + "@" + inv->text() : base.text();
}

// =============================================================================
// Parser
// =============================================================================

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    RingSpec parse() {
        RingSpec spec;
        spec.base = parse_base();
        skip_space();
        if (accept('@')) spec.inv = parse_inv();
        skip_space();
        if (pos_ < text_.size()) fail("unexpected trailing input");
        return spec;
    }

private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!accept(c)) fail(std::string("expected '") + c + "' " + what);
    }

    [[noreturn]] void fail(const std::string& message) { throw SpecParseError(message, pos_); }

    long long parse_int() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start) fail("expected an integer");
        return std::stoll(std::string(text_.substr(start, pos_ - start)));
    }

    std::string parse_word() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    BaseSpec parse_primary() {
        skip_space();
        if (text_.substr(pos_).starts_with("table:")) {
            pos_ += 6;
            std::size_t start = pos_;
            while (pos_ < text_.size() && text_[pos_] != '@' &&
                   !std::isspace(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (pos_ == start) fail("expected a table path");
            BaseSpec b;
            b.kind = BaseSpec::Kind::Table;
            b.path = std::string(text_.substr(start, pos_ - start));
            return b;
        }
        char c = peek();
        if (c == 'Z') {
            ++pos_;
            BaseSpec b;
            b.kind = BaseSpec::Kind::Zn;
            b.n = parse_int();
            if (b.n < 1) fail("ring modulus must be >= 1");
            return b;
        }
        if (c == 'M') {
            ++pos_;
            BaseSpec b;
            b.kind = BaseSpec::Kind::Matrix;
            b.n = parse_int();
            if (b.n < 1) fail("matrix dimension must be >= 1");
            expect('(', "before the matrix base ring");
            b.factors.push_back(parse_base());
            expect(')', "after the matrix base ring");
            return b;
        }
        fail("expected 'Z<n>', 'M<k>(...)', or 'table:<path>'");
    }

    BaseSpec parse_base() {
        BaseSpec left = parse_primary();
        while (peek() == 'x') {
            ++pos_;
            BaseSpec right = parse_primary();
            BaseSpec product;
            product.kind = BaseSpec::Kind::Product;
            product.factors = {std::move(left), std::move(right)};
            left = std::move(product);
        }
        return left;
    }

    InvSpec parse_inv() {
        if (accept('(')) {
            InvSpec inv;
            inv.kind = InvSpec::Kind::Componentwise;
            inv.parts.push_back(parse_inv());
            expect(',', "between componentwise involutions");
            inv.parts.push_back(parse_inv());
            expect(')', "after componentwise involutions");
            return inv;
        }
        std::string word = parse_word();
        if (word == "id") return {InvSpec::Kind::Id, {}};
        if (word == "swap") return {InvSpec::Kind::Swap, {}};
        if (word == "transpose") return {InvSpec::Kind::Transpose, {}};
        fail("expected 'id', 'swap', 'transpose', or '(inv,inv)'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

RingSpec parse_ring_spec(std::string_view text) { return Parser(text).parse(); }

// =============================================================================
// Builtin table rings
// =============================================================================

namespace {

using Table = std::vector<std::vector<Elem>>;

TableData make_zero_ring(int n) {
    TableData t;
    t.add.assign(n, std::vector<Elem>(n));
    t.mul.assign(n, std::vector<Elem>(n, 0));
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) t.add[a][b] = static_cast<Elem>((a + b) % n);
    return t;
}

/// Z_2[x] / (modulus), elements encoded as bit vectors of the coefficients.
TableData make_f2_quotient(int degree, unsigned modulus_bits) {
    const int n = 1 << degree;
    auto reduce = [&](unsigned v) {
        for (int d = 2 * degree - 2; d >= degree; --d)
            if (v & (1u << d)) v ^= modulus_bits << (d - degree);
        return v;
    };
    TableData t;
    t.add.assign(n, std::vector<Elem>(n));
    t.mul.assign(n, std::vector<Elem>(n));
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
            t.add[a][b] = a ^ b;
            unsigned prod = 0;
            for (int i = 0; i < degree; ++i)
                if (a & (1 << i)) prod ^= static_cast<unsigned>(b) << i;
            t.mul[a][b] = static_cast<Elem>(reduce(prod));
        }
    return t;
}

/// Upper triangular 2x2 matrices over Z_2, encoded as a + 2b + 4d for
/// [[a, b], [0, d]]. The smallest non-commutative ring family we carry; its
/// file involution flips entries across the anti-diagonal, (a,b,d) -> (d,b,a).
TableData make_upper_triangular_z2() {
    const int n = 8;
    auto a_of = [](Elem x) { return x & 1; };
    auto b_of = [](Elem x) { return (x >> 1) & 1; };
    auto d_of = [](Elem x) { return (x >> 2) & 1; };
    auto enc = [](int a, int b, int d) { return static_cast<Elem>(a | (b << 1) | (d << 2)); };
    TableData t;
    t.add.assign(n, std::vector<Elem>(n));
    t.mul.assign(n, std::vector<Elem>(n));
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
            t.add[x][y] = x ^ y;
            int a = a_of(x) & a_of(y);
            int b = (a_of(x) & b_of(y)) ^ (b_of(x) & d_of(y));
            int d = d_of(x) & d_of(y);
            t.mul[x][y] = enc(a, b, d);
        }
    t.involution = std::vector<Elem>(n);
    for (Elem x = 0; x < n; ++x) (*t.involution)[x] = enc(d_of(x), b_of(x), a_of(x));
    return t;
}

const std::vector<std::pair<std::string, std::function<TableData()>>>& builtin_registry() {
    static const std::vector<std::pair<std::string, std::function<TableData()>>> reg = {
        {"zero2", [] { return make_zero_ring(2); }},
        {"zero4", [] { return make_zero_ring(4); }},
        {"gf4", [] { return make_f2_quotient(2, 0b111); }},       // x^2 + x + 1
        {"d4", [] { return make_f2_quotient(2, 0b100); }},        // x^2
        {"x8", [] { return make_f2_quotient(3, 0b1000); }},       // x^3
        {"gf8", [] { return make_f2_quotient(3, 0b1011); }},      // x^3 + x + 1
        {"t8", [] { return make_upper_triangular_z2(); }},
    };
    return reg;
}

}  // namespace

std::vector<std::string> builtin_table_names() {
    std::vector<std::string> names;
    for (const auto& [name, make] : builtin_registry()) names.push_back(name);
    return names;
}

TableData parse_table_stream(std::istream& in) {
    // Whitespace-tolerant: dimension, n^2 addition entries, n^2 multiplication
    // entries, then an optional n-entry involution permutation.
    long long n;
    if (!(in >> n) || n < 1) throw std::invalid_argument("table: bad dimension line");
    auto read_table = [&](const char* what) {
        Table t(n, std::vector<Elem>(n));
        for (auto& row : t)
            for (auto& e : row)
                if (!(in >> e))
                    throw std::invalid_argument(std::string("table: truncated ") + what);
        return t;
    };
    TableData out;
    out.add = read_table("addition table");
    out.mul = read_table("multiplication table");
    std::vector<Elem> inv;
    Elem e;
    while (in >> e) inv.push_back(e);
    if (!inv.empty()) {
        if (static_cast<long long>(inv.size()) != n)
            throw std::invalid_argument("table: involution row must have exactly n entries");
        out.involution = std::move(inv);
    }
    return out;
}

TableData load_table(const std::string& path) {
    if (path.starts_with("builtin:")) {
        const std::string name = path.substr(8);
        for (const auto& [known, make] : builtin_registry())
            if (known == name) return make();
        throw std::invalid_argument("unknown builtin table ring: " + name);
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open table file: " + path);
    return parse_table_stream(in);
}

// =============================================================================
// Builder
// =============================================================================

FiniteRing build_base(const BaseSpec& base, const BuildOptions& options) {
    switch (base.kind) {
        case BaseSpec::Kind::Zn: return build_zn(base.n);
        case BaseSpec::Kind::Product:
            return build_product(build_base(base.factors[0], options),
                                 build_base(base.factors[1], options));
        case BaseSpec::Kind::Matrix:
            return build_matrix_ring(static_cast<int>(base.n),
                                     build_base(base.factors[0], options),
                                     options.matrix_order_cap);
        case BaseSpec::Kind::Table: {
            TableData td = load_table(base.path);
            return build_from_tables(td.add, td.mul, "table:" + base.path);
        }
    }
    throw std::logic_error("build_base: unreachable");
}

namespace {

Involution resolve_involution(const BaseSpec& base, const FiniteRing& ring, const InvSpec& inv,
                              const BuildOptions& options) {
    switch (inv.kind) {
        case InvSpec::Kind::Id:
            if (!ring.commutative())
                throw IncompatibleInvolutionError(
                    "identity involution requires a commutative ring, but " + base.text() +
                    " is not commutative");
            return identity_involution(ring);
        case InvSpec::Kind::Swap:
            if (base.kind != BaseSpec::Kind::Product ||
                base.factors[0].text() != base.factors[1].text())
                throw IncompatibleInvolutionError(
                    "swap requires a product of two identical factors, got " + base.text());
            return swap_involution(ring);
        case InvSpec::Kind::Transpose:
            if (base.kind != BaseSpec::Kind::Matrix)
                throw IncompatibleInvolutionError("transpose requires a matrix ring, got " +
                                                  base.text());
            return transpose_involution(ring);
        case InvSpec::Kind::Componentwise: {
            if (base.kind != BaseSpec::Kind::Product)
                throw IncompatibleInvolutionError(
                    "componentwise involution requires a product ring, got " + base.text());
            auto pv = as_product(ring);
            Involution left = resolve_involution(base.factors[0], pv->left, inv.parts[0], options);
            Involution right =
                resolve_involution(base.factors[1], pv->right, inv.parts[1], options);
            return componentwise_involution(ring, left, right);
        }
    }
    throw std::logic_error("resolve_involution: unreachable");
}

}  // namespace

StarRing build_star_ring(const RingSpec& spec, const BuildOptions& options) {
    // A lone table base may carry its own involution; an explicit '@' wins.
    if (spec.base.kind == BaseSpec::Kind::Table) {
        TableData td = load_table(spec.base.path);
        FiniteRing ring = build_from_tables(td.add, td.mul, "table:" + spec.base.path);
        if (spec.inv) {
            Involution inv = resolve_involution(spec.base, ring, *spec.inv, options);
            return StarRing(ring, std::move(inv));
        }
        if (td.involution) return StarRing(ring, Involution{*td.involution, "file"});
        if (!ring.commutative())
            throw IncompatibleInvolutionError(
                "table ring is not commutative; specify an involution ('@' suffix or an "
                "involution row in the file)");
        return StarRing(ring, identity_involution(ring));
    }

    FiniteRing ring = build_base(spec.base, options);
    if (spec.inv) return StarRing(ring, resolve_involution(spec.base, ring, *spec.inv, options));
    if (!ring.commutative())
        throw IncompatibleInvolutionError("no involution given and " + spec.base.text() +
                                          " is not commutative; the id default does not apply");
    return StarRing(ring, identity_involution(ring));
}

StarRing build_star_ring(std::string_view text, const BuildOptions& options) {
    return build_star_ring(parse_ring_spec(text), options);
}

}  // namespace zdg
