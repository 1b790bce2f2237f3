#include "zdg/involution.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace zdg {

bool Involution::is_identity() const {
    for (Elem x = 0; x < static_cast<Elem>(map.size()); ++x)
        if (map[x] != x) return false;
    return true;
}

std::string InvolutionCheck::message() const {
    std::ostringstream os;
    switch (failure) {
        case Failure::None: return "valid involution";
        case Failure::NotAPermutation: os << "map is not a permutation"; break;
        case Failure::NotInvolutive: os << "map is not self-inverse"; break;
        case Failure::NotAdditive: os << "map is not additive"; break;
        case Failure::NotAntiMultiplicative: os << "map is not anti-multiplicative"; break;
    }
    if (x >= 0) {
        os << " [witness x=" << x;
        if (y >= 0) os << ", y=" << y;
        os << "]";
    }
    return os.str();
}

InvolutionCheck validate_involution(const FiniteRing& ring, const std::vector<Elem>& map) {
    using F = InvolutionCheck::Failure;
    const int n = ring.order();
    if (static_cast<int>(map.size()) != n) return {F::NotAPermutation, -1, -1};

    std::vector<bool> hit(n, false);
    for (Elem x = 0; x < n; ++x) {
        if (map[x] < 0 || map[x] >= n || hit[map[x]]) return {F::NotAPermutation, x, -1};
        hit[map[x]] = true;
    }
    for (Elem x = 0; x < n; ++x)
        if (map[map[x]] != x) return {F::NotInvolutive, x, -1};
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            if (map[ring.add(x, y)] != ring.add(map[x], map[y])) return {F::NotAdditive, x, y};
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            if (map[ring.mul(x, y)] != ring.mul(map[y], map[x]))
                return {F::NotAntiMultiplicative, x, y};
    return {};
}

Involution identity_involution(const FiniteRing& ring) {
    std::vector<Elem> map(ring.order());
    for (Elem x = 0; x < ring.order(); ++x) map[x] = x;
    return {std::move(map), "id"};
}

Involution swap_involution(const FiniteRing& ring) {
    auto pv = as_product(ring);
    if (!pv) throw std::invalid_argument("swap_involution: not a product ring");
    if (pv->left.order() != pv->right.order())
        throw std::invalid_argument("swap_involution: factors differ in order");
    std::vector<Elem> map(ring.order());
    for (Elem x = 0; x < ring.order(); ++x)
        map[x] = pv->pair(pv->right_of(x), pv->left_of(x));
    return {std::move(map), "swap"};
}

Involution transpose_involution(const FiniteRing& ring) {
    auto mv = as_matrix(ring);
    if (!mv) throw std::invalid_argument("transpose_involution: not a matrix ring");
    const int k = mv->dim;
    std::vector<Elem> map(ring.order());
    std::vector<Elem> entries(k * k);
    for (Elem x = 0; x < ring.order(); ++x) {
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) entries[i * k + j] = mv->entry(x, j, i);
        map[x] = mv->from_entries(entries);
    }
    return {std::move(map), "transpose"};
}

Involution componentwise_involution(const FiniteRing& ring, const Involution& left,
                                    const Involution& right) {
    auto pv = as_product(ring);
    if (!pv) throw std::invalid_argument("componentwise_involution: not a product ring");
    std::vector<Elem> map(ring.order());
    for (Elem x = 0; x < ring.order(); ++x)
        map[x] = pv->pair(left.map[pv->left_of(x)], right.map[pv->right_of(x)]);
    return {std::move(map), "(" + left.name + "," + right.name + ")"};
}

namespace {

std::string permutation_name(const std::vector<Elem>& map) {
    std::string s = "perm[";
    for (std::size_t i = 0; i < map.size(); ++i) {
        s += std::to_string(map[i]);
        if (i + 1 < map.size()) s += ",";
    }
    return s + "]";
}

}  // namespace

std::vector<Involution> enumerate_involutions(const FiniteRing& ring, int order_cap) {
    const int n = ring.order();
    if (n > order_cap)
        throw OrderCapExceededError("enumerate_involutions: ring order " + std::to_string(n) +
                                    " exceeds cap " + std::to_string(order_cap));

    // Additive generator chain: subgroup S grows by cosets S + j*g.
    struct Layer {
        Elem gen;
        int coset_count;              // additive order of gen relative to previous subgroup
        std::vector<Elem> previous;   // elements before this layer was added
    };
    std::vector<Layer> layers;
    std::vector<bool> in_span(n, false);
    in_span[ring.zero()] = true;
    std::vector<Elem> span{ring.zero()};

    while (static_cast<int>(span.size()) < n) {
        Elem g = 0;
        while (in_span[g]) ++g;
        int t = 1;
        Elem power = g;  // j*g
        while (!in_span[power]) {
            ++t;
            power = ring.add(power, g);
        }
        layers.push_back({g, t, span});
        std::vector<Elem> grown = span;
        Elem shift = g;
        for (int j = 1; j < t; ++j) {
            for (Elem s : span) {
                Elem e = ring.add(s, shift);
                in_span[e] = true;
                grown.push_back(e);
            }
            shift = ring.add(shift, g);
        }
        span = std::move(grown);
    }

    std::vector<Involution> found;
    std::vector<Elem> map(n, -1);
    std::vector<bool> used(n, false);
    map[ring.zero()] = ring.zero();
    used[ring.zero()] = true;

    std::function<void(std::size_t)> extend = [&](std::size_t depth) {
        if (depth == layers.size()) {
            // Additivity holds by construction; filter the remaining axioms.
            for (Elem x = 0; x < n; ++x)
                if (map[map[x]] != x) return;
            for (Elem x = 0; x < n; ++x)
                for (Elem y = 0; y < n; ++y)
                    if (map[ring.mul(x, y)] != ring.mul(map[y], map[x])) return;
            Involution inv{map, ""};
            inv.name = inv.is_identity() ? "id" : permutation_name(map);
            found.push_back(std::move(inv));
            return;
        }
        const Layer& layer = layers[depth];
        // t*g lies in the previous subgroup; its image is already pinned.
        Elem anchor = layer.gen;
        for (int j = 1; j < layer.coset_count; ++j) anchor = ring.add(anchor, layer.gen);

        for (Elem cand = 0; cand < n; ++cand) {
            if (used[cand]) continue;
            Elem cand_mult = cand;  // t*cand
            for (int j = 1; j < layer.coset_count; ++j) cand_mult = ring.add(cand_mult, cand);
            if (map[anchor] != cand_mult) continue;

            std::vector<Elem> assigned;
            bool ok = true;
            Elem shift = layer.gen, cand_shift = cand;
            for (int j = 1; j < layer.coset_count && ok; ++j) {
                for (Elem s : layer.previous) {
                    Elem from = ring.add(s, shift);
                    Elem to = ring.add(map[s], cand_shift);
                    if (used[to]) { ok = false; break; }
                    map[from] = to;
                    used[to] = true;
                    assigned.push_back(from);
                }
                shift = ring.add(shift, layer.gen);
                cand_shift = ring.add(cand_shift, cand);
            }
            if (ok) extend(depth + 1);
            for (Elem from : assigned) {
                used[map[from]] = false;
                map[from] = -1;
            }
        }
    };
    extend(0);
    return found;
}

StarRing::StarRing(FiniteRing ring, Involution star)
    : ring_(std::move(ring)), star_(std::move(star)) {
    InvolutionCheck check = validate_involution(ring_, star_.map);
    if (!check.ok()) throw InvalidInvolutionError(check);
}

std::string StarRing::describe() const {
    if (star_.name == "file") return ring_.describe();
    return ring_.describe() + "@" + star_.name;
}

}  // namespace zdg
