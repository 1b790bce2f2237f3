#include "zdg/ring.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <sstream>
#include <stdexcept>

namespace zdg {

namespace {

// -----------------------------------------------------------------------------
// Z_n
// -----------------------------------------------------------------------------

class ZnBackend final : public RingBackend {
public:
    explicit ZnBackend(int n) : n_(n) {}

    int order() const override { return n_; }
    Elem add(Elem a, Elem b) const override { return static_cast<Elem>((static_cast<long long>(a) + b) % n_); }
    Elem mul(Elem a, Elem b) const override { return static_cast<Elem>((static_cast<long long>(a) * b) % n_); }
    Elem neg(Elem a) const override { return a == 0 ? 0 : n_ - a; }
    Elem zero() const override { return 0; }
    std::optional<Elem> one() const override { return n_ > 1 ? 1 : 0; }
    bool commutative() const override { return true; }
    std::string element_name(Elem a) const override { return std::to_string(a); }
    std::string describe() const override { return "Z" + std::to_string(n_); }

private:
    int n_;
};

// -----------------------------------------------------------------------------
// Direct product
// -----------------------------------------------------------------------------

class ProductBackend final : public RingBackend {
public:
    ProductBackend(FiniteRing left, FiniteRing right)
        : left_(std::move(left)), right_(std::move(right)) {}

    int order() const override { return left_.order() * right_.order(); }
    Elem add(Elem a, Elem b) const override {
        const int m = right_.order();
        return left_.add(a / m, b / m) * m + right_.add(a % m, b % m);
    }
    Elem mul(Elem a, Elem b) const override {
        const int m = right_.order();
        return left_.mul(a / m, b / m) * m + right_.mul(a % m, b % m);
    }
    Elem neg(Elem a) const override {
        const int m = right_.order();
        return left_.neg(a / m) * m + right_.neg(a % m);
    }
    Elem zero() const override { return left_.zero() * right_.order() + right_.zero(); }
    std::optional<Elem> one() const override {
        if (!left_.has_one() || !right_.has_one()) return std::nullopt;
        return *left_.one() * right_.order() + *right_.one();
    }
    bool commutative() const override { return left_.commutative() && right_.commutative(); }
    std::string element_name(Elem a) const override {
        const int m = right_.order();
        return "(" + left_.element_name(a / m) + "," + right_.element_name(a % m) + ")";
    }
    std::string describe() const override { return left_.describe() + "x" + right_.describe(); }

    const FiniteRing& left() const { return left_; }
    const FiniteRing& right() const { return right_; }

private:
    FiniteRing left_, right_;
};

// -----------------------------------------------------------------------------
// k x k matrices over a base ring
// -----------------------------------------------------------------------------

class MatrixBackend final : public RingBackend {
public:
    MatrixBackend(int k, FiniteRing base, int order)
        : k_(k), base_(std::move(base)), order_(order) {
        const int cells = k_ * k_;
        weights_.resize(cells);
        long long w = 1;
        for (int pos = cells - 1; pos >= 0; --pos) {
            weights_[pos] = w;
            w *= base_.order();
        }
    }

    int order() const override { return order_; }

    Elem add(Elem a, Elem b) const override {
        return map2(a, b, [&](Elem x, Elem y) { return base_.add(x, y); });
    }

    Elem mul(Elem a, Elem b) const override {
        std::vector<Elem> ea = decode(a), eb = decode(b), out(k_ * k_, base_.zero());
        for (int i = 0; i < k_; ++i)
            for (int j = 0; j < k_; ++j) {
                Elem s = base_.zero();
                for (int t = 0; t < k_; ++t)
                    s = base_.add(s, base_.mul(ea[i * k_ + t], eb[t * k_ + j]));
                out[i * k_ + j] = s;
            }
        return encode(out);
    }

    Elem neg(Elem a) const override {
        std::vector<Elem> e = decode(a);
        for (auto& x : e) x = base_.neg(x);
        return encode(e);
    }

    Elem zero() const override {
        return encode(std::vector<Elem>(k_ * k_, base_.zero()));
    }

    std::optional<Elem> one() const override {
        std::vector<Elem> e(k_ * k_, base_.zero());
        for (int i = 0; i < k_; ++i) e[i * k_ + i] = *base_.one();
        return encode(e);
    }

    bool commutative() const override {
        return k_ == 1 ? base_.commutative() : base_.order() == 1;
    }

    std::string element_name(Elem a) const override {
        std::vector<Elem> e = decode(a);
        std::string s = "[";
        for (int i = 0; i < k_; ++i) {
            s += "[";
            for (int j = 0; j < k_; ++j) {
                s += base_.element_name(e[i * k_ + j]);
                if (j + 1 < k_) s += ",";
            }
            s += "]";
            if (i + 1 < k_) s += ",";
        }
        return s + "]";
    }

    std::string describe() const override {
        return "M" + std::to_string(k_) + "(" + base_.describe() + ")";
    }

    int dim() const { return k_; }
    const FiniteRing& base() const { return base_; }

    std::vector<Elem> decode(Elem a) const {
        std::vector<Elem> e(k_ * k_);
        for (int pos = 0; pos < k_ * k_; ++pos)
            e[pos] = static_cast<Elem>((a / weights_[pos]) % base_.order());
        return e;
    }

    Elem encode(const std::vector<Elem>& e) const {
        long long a = 0;
        for (int pos = 0; pos < k_ * k_; ++pos) a += e[pos] * weights_[pos];
        return static_cast<Elem>(a);
    }

private:
    template <typename F>
    Elem map2(Elem a, Elem b, F f) const {
        std::vector<Elem> ea = decode(a), eb = decode(b);
        for (int pos = 0; pos < k_ * k_; ++pos) ea[pos] = f(ea[pos], eb[pos]);
        return encode(ea);
    }

    int k_;
    FiniteRing base_;
    int order_;
    std::vector<long long> weights_;  // weights_[pos] = |base|^(k^2-1-pos)
};

// -----------------------------------------------------------------------------
// Explicit Cayley tables
// -----------------------------------------------------------------------------

class TableBackend final : public RingBackend {
public:
    TableBackend(std::vector<std::vector<Elem>> add, std::vector<std::vector<Elem>> mul,
                 Elem zero, std::vector<Elem> neg, std::optional<Elem> one,
                 bool commutative, std::string name)
        : add_(std::move(add)), mul_(std::move(mul)), zero_(zero), neg_(std::move(neg)),
          one_(one), commutative_(commutative), name_(std::move(name)) {}

    int order() const override { return static_cast<int>(add_.size()); }
    Elem add(Elem a, Elem b) const override { return add_[a][b]; }
    Elem mul(Elem a, Elem b) const override { return mul_[a][b]; }
    Elem neg(Elem a) const override { return neg_[a]; }
    Elem zero() const override { return zero_; }
    std::optional<Elem> one() const override { return one_; }
    bool commutative() const override { return commutative_; }
    std::string element_name(Elem a) const override { return std::to_string(a); }
    std::string describe() const override { return name_; }

private:
    std::vector<std::vector<Elem>> add_, mul_;
    Elem zero_;
    std::vector<Elem> neg_;
    std::optional<Elem> one_;
    bool commutative_;
    std::string name_;
};

}  // namespace

// =============================================================================
// FiniteRing
// =============================================================================

FiniteRing::FiniteRing(std::shared_ptr<const RingBackend> backend)
    : backend_(std::move(backend)) {
    order_ = backend_->order();
    zero_ = backend_->zero();
    one_ = backend_->one();
    commutative_ = backend_->commutative();
    if (order_ <= kTableCap) {
        auto t = std::make_shared<OpTables>();
        t->add.resize(static_cast<std::size_t>(order_) * order_);
        t->mul.resize(static_cast<std::size_t>(order_) * order_);
        t->neg.resize(order_);
        for (Elem a = 0; a < order_; ++a) {
            t->neg[a] = backend_->neg(a);
            for (Elem b = 0; b < order_; ++b) {
                t->add[a * order_ + b] = backend_->add(a, b);
                t->mul[a * order_ + b] = backend_->mul(a, b);
            }
        }
        tables_ = std::move(t);
    }
}

Elem FiniteRing::pow(Elem x, long long n) const {
    Elem r = x;
    for (long long i = 1; i < n; ++i) r = mul(r, x);
    return r;
}

std::optional<ProductView> as_product(const FiniteRing& ring) {
    if (auto* p = dynamic_cast<const ProductBackend*>(&ring.backend()))
        return ProductView{p->left(), p->right()};
    return std::nullopt;
}

Elem MatrixView::entry(Elem x, int i, int j) const {
    const int cells = dim * dim;
    long long w = 1;
    for (int pos = cells - 1; pos > i * dim + j; --pos) w *= base.order();
    return static_cast<Elem>((x / w) % base.order());
}

Elem MatrixView::from_entries(const std::vector<Elem>& entries) const {
    long long a = 0;
    for (Elem e : entries) a = a * base.order() + e;
    return static_cast<Elem>(a);
}

std::optional<MatrixView> as_matrix(const FiniteRing& ring) {
    if (auto* m = dynamic_cast<const MatrixBackend*>(&ring.backend()))
        return MatrixView{m->dim(), m->base()};
    return std::nullopt;
}

// =============================================================================
// Validation
// =============================================================================

std::string AxiomViolation::message() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::NonAbelianAddition: os << "addition is not an abelian group"; break;
        case Kind::NonAssociativeMultiplication: os << "multiplication is not associative"; break;
        case Kind::DistributivityFailure: os << "distributivity fails"; break;
        case Kind::BrokenIdentity: os << "declared identity is not two-sided"; break;
    }
    if (!detail.empty()) os << ": " << detail;
    if (a >= 0) {
        os << " [witness " << a;
        if (b >= 0) os << "," << b;
        if (c >= 0) os << "," << c;
        os << "]";
    }
    return os.str();
}

RingAxiomError::RingAxiomError(RingValidation validation)
    : Error(validation.violations.empty() ? "ring axioms violated"
                                          : validation.violations.front().message()),
      validation_(std::move(validation)) {}

namespace {

// Records at most one violation per kind so witnesses stay deterministic
// (first triple in scan order).
struct Collector {
    RingValidation out;

    bool seen(AxiomViolation::Kind k) const {
        for (const auto& v : out.violations)
            if (v.kind == k) return true;
        return false;
    }

    void report(AxiomViolation::Kind k, Elem a, Elem b, Elem c, std::string detail) {
        if (!seen(k)) out.violations.push_back({k, a, b, c, std::move(detail)});
    }
};

void check_triples(const FiniteRing& ring, Collector& col,
                   const std::vector<std::array<Elem, 3>>& triples) {
    using K = AxiomViolation::Kind;
    for (auto [a, b, c] : triples) {
        if (ring.add(ring.add(a, b), c) != ring.add(a, ring.add(b, c)))
            col.report(K::NonAbelianAddition, a, b, c, "addition not associative");
        if (ring.mul(ring.mul(a, b), c) != ring.mul(a, ring.mul(b, c)))
            col.report(K::NonAssociativeMultiplication, a, b, c, "");
        if (ring.mul(a, ring.add(b, c)) != ring.add(ring.mul(a, b), ring.mul(a, c)))
            col.report(K::DistributivityFailure, a, b, c, "left distributivity");
        if (ring.mul(ring.add(a, b), c) != ring.add(ring.mul(a, c), ring.mul(b, c)))
            col.report(K::DistributivityFailure, a, b, c, "right distributivity");
    }
}

}  // namespace

RingValidation validate_ring(const FiniteRing& ring, int samples) {
    using K = AxiomViolation::Kind;
    const int n = ring.order();
    Collector col;

    for (Elem a = 0; a < n; ++a) {
        if (ring.add(ring.zero(), a) != a)
            col.report(K::NonAbelianAddition, a, -1, -1, "zero is not an additive identity");
        if (ring.add(a, ring.neg(a)) != ring.zero())
            col.report(K::NonAbelianAddition, a, -1, -1, "missing additive inverse");
        if (ring.has_one() &&
            (ring.mul(*ring.one(), a) != a || ring.mul(a, *ring.one()) != a))
            col.report(K::BrokenIdentity, a, -1, -1, "");
    }
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            if (ring.add(a, b) != ring.add(b, a)) {
                col.report(K::NonAbelianAddition, a, b, -1, "addition not commutative");
                break;
            }

    std::vector<std::array<Elem, 3>> triples;
    if (n <= kTableCap) {
        triples.reserve(static_cast<std::size_t>(n) * n * n);
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b)
                for (Elem c = 0; c < n; ++c) triples.push_back({a, b, c});
    } else {
        col.out.exhaustive = false;
        std::mt19937 rng(0x5eed);
        std::uniform_int_distribution<Elem> pick(0, n - 1);
        triples.reserve(samples);
        for (int i = 0; i < samples; ++i) triples.push_back({pick(rng), pick(rng), pick(rng)});
    }
    check_triples(ring, col, triples);
    return std::move(col.out);
}

// =============================================================================
// Constructors
// =============================================================================

FiniteRing build_zn(long long n) {
    if (n < 1) throw std::invalid_argument("build_zn: n must be >= 1");
    if (n > (1LL << 30)) throw OrderCapExceededError("build_zn: modulus too large");
    return FiniteRing(std::make_shared<ZnBackend>(static_cast<int>(n)));
}

FiniteRing build_product(const FiniteRing& left, const FiniteRing& right) {
    const long long ord = static_cast<long long>(left.order()) * right.order();
    if (ord > (1LL << 30)) throw OrderCapExceededError("build_product: order too large");
    return FiniteRing(std::make_shared<ProductBackend>(left, right));
}

FiniteRing build_matrix_ring(int k, const FiniteRing& base, long long order_cap) {
    if (k < 1) throw std::invalid_argument("build_matrix_ring: k must be >= 1");
    if (!base.has_one())
        throw std::invalid_argument("build_matrix_ring: base ring must have a one");
    long long order = 1;
    for (int i = 0; i < k * k; ++i) {
        order *= base.order();
        if (order > order_cap)
            throw OrderCapExceededError("build_matrix_ring: |base|^(k^2) exceeds order cap " +
                                        std::to_string(order_cap));
    }
    return FiniteRing(std::make_shared<MatrixBackend>(k, base, static_cast<int>(order)));
}

namespace {

void require_square_tables(const std::vector<std::vector<Elem>>& add_table,
                           const std::vector<std::vector<Elem>>& mul_table) {
    const std::size_t n = add_table.size();
    if (n == 0) throw std::invalid_argument("tables must be non-empty");
    if (mul_table.size() != n)
        throw std::invalid_argument("add and mul tables must have equal dimension");
    for (const auto* t : {&add_table, &mul_table})
        for (const auto& row : *t) {
            if (row.size() != n) throw std::invalid_argument("tables must be square");
            for (Elem e : row)
                if (e < 0 || e >= static_cast<Elem>(n))
                    throw std::invalid_argument("table entry out of range");
        }
}

}  // namespace

RingValidation validate_tables(const std::vector<std::vector<Elem>>& add_table,
                               const std::vector<std::vector<Elem>>& mul_table) {
    using K = AxiomViolation::Kind;
    require_square_tables(add_table, mul_table);
    const int n = static_cast<int>(add_table.size());
    Collector col;

    std::optional<Elem> zero;
    for (Elem z = 0; z < n && !zero; ++z) {
        bool ok = true;
        for (Elem x = 0; x < n && ok; ++x) ok = add_table[z][x] == x && add_table[x][z] == x;
        if (ok) zero = z;
    }
    if (!zero) {
        col.report(K::NonAbelianAddition, -1, -1, -1, "no additive identity");
    } else {
        for (Elem a = 0; a < n; ++a) {
            bool inv = false;
            for (Elem b = 0; b < n && !inv; ++b) inv = add_table[a][b] == *zero;
            if (!inv) col.report(K::NonAbelianAddition, a, -1, -1, "missing additive inverse");
        }
    }
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            if (add_table[a][b] != add_table[b][a])
                col.report(K::NonAbelianAddition, a, b, -1, "addition not commutative");

    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            for (Elem c = 0; c < n; ++c) {
                if (add_table[add_table[a][b]][c] != add_table[a][add_table[b][c]])
                    col.report(K::NonAbelianAddition, a, b, c, "addition not associative");
                if (mul_table[mul_table[a][b]][c] != mul_table[a][mul_table[b][c]])
                    col.report(K::NonAssociativeMultiplication, a, b, c, "");
                if (mul_table[a][add_table[b][c]] != add_table[mul_table[a][b]][mul_table[a][c]])
                    col.report(K::DistributivityFailure, a, b, c, "left distributivity");
                if (mul_table[add_table[a][b]][c] != add_table[mul_table[a][c]][mul_table[b][c]])
                    col.report(K::DistributivityFailure, a, b, c, "right distributivity");
            }
    return std::move(col.out);
}

FiniteRing build_from_tables(const std::vector<std::vector<Elem>>& add_table,
                             const std::vector<std::vector<Elem>>& mul_table,
                             const std::string& name) {
    RingValidation v = validate_tables(add_table, mul_table);
    if (!v.ok()) throw RingAxiomError(std::move(v));

    const int n = static_cast<int>(add_table.size());
    Elem zero = 0;
    for (Elem z = 0; z < n; ++z) {
        bool ok = true;
        for (Elem x = 0; x < n && ok; ++x) ok = add_table[z][x] == x;
        if (ok) { zero = z; break; }
    }
    std::vector<Elem> neg(n, 0);
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            if (add_table[a][b] == zero) { neg[a] = b; break; }

    bool commutative = true;
    for (Elem a = 0; a < n && commutative; ++a)
        for (Elem b = 0; b < n && commutative; ++b)
            commutative = mul_table[a][b] == mul_table[b][a];

    std::optional<Elem> one;
    for (Elem e = 0; e < n && !one; ++e) {
        bool ok = true;
        for (Elem x = 0; x < n && ok; ++x) ok = mul_table[e][x] == x && mul_table[x][e] == x;
        if (ok) one = e;
    }

    return FiniteRing(std::make_shared<TableBackend>(add_table, mul_table, zero, std::move(neg),
                                                     one, commutative, name));
}

}  // namespace zdg
