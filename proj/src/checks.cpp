#include "zdg/checks.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <tuple>

#include "zdg/classify.hpp"
#include "zdg/invariants.hpp"
#include "zdg/zdgraph.hpp"

namespace zdg {

std::string status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "PASS";
        case CheckStatus::Fail: return "FAIL";
        case CheckStatus::Vacuous: return "VACUOUS";
        case CheckStatus::Skipped: return "SKIPPED";
    }
    return "?";
}

RingInstance make_instance(const RingSpec& spec, const BuildOptions& options) {
    StarRing sr = build_star_ring(spec, options);
    std::string desc = sr.describe();
    return {spec, std::move(sr), std::move(desc)};
}

RingInstance make_instance(std::string_view text, const BuildOptions& options) {
    return make_instance(parse_ring_spec(text), options);
}

// =============================================================================
// Shared helpers
// =============================================================================

namespace {

std::string ename(const RingInstance& inst, Elem e) { return inst.sr.ring().element_name(e); }

bool has_vertices(const RingInstance& inst) {
    return !zero_divisors(inst.sr.ring()).empty();
}

std::vector<ElementProfile> vertex_profiles(const StarRing& sr, const ZdGraph& g) {
    std::vector<ElementProfile> out;
    out.reserve(g.vertex_count());
    for (Elem v : g.vertices) out.push_back(classify_element(sr, v));
    return out;
}

/// First adjacency difference between two graphs over the same vertex list.
std::string first_edge_difference(const RingInstance& inst, const ZdGraph& a, const ZdGraph& b) {
    for (int i = 0; i < a.vertex_count(); ++i)
        for (int j = i + 1; j < a.vertex_count(); ++j)
            if (a.graph.has_edge(i, j) != b.graph.has_edge(i, j)) {
                std::ostringstream os;
                os << "pair (" << ename(inst, a.vertices[i]) << ", "
                   << ename(inst, a.vertices[j]) << ") differs";
                return os.str();
            }
    return "no difference";
}

bool is_finite_domain(const FiniteRing& r) {
    if (!r.commutative() || !r.has_one() || r.order() < 2) return false;
    for (Elem x = 0; x < r.order(); ++x) {
        if (x == r.zero()) continue;
        for (Elem y = 0; y < r.order(); ++y) {
            if (y == r.zero()) continue;
            if (r.mul(x, y) == r.zero()) return false;
        }
    }
    return true;
}

/// Exhaustive table match against the canonical Z2 x Z2 (24 bijections). The
/// match is as *-rings: the canonical involution on Z2 x Z2 is the identity
/// (each summand admits only the identity), so the candidate's star must map
/// to it. A ring-only match would wrongly cover Z2 x Z2 under the swap
/// involution, whose graph is two isolated vertices, not K2.
bool star_isomorphic_to_z2xz2(const StarRing& sr) {
    const FiniteRing& r = sr.ring();
    if (r.order() != 4) return false;
    const FiniteRing canon = build_product(build_zn(2), build_zn(2));
    std::array<Elem, 4> perm = {0, 1, 2, 3};
    do {
        bool ok = true;
        for (Elem a = 0; a < 4 && ok; ++a) {
            ok = perm[sr.star_of(a)] == perm[a];
            for (Elem b = 0; b < 4 && ok; ++b)
                ok = perm[r.add(a, b)] == canon.add(perm[a], perm[b]) &&
                     perm[r.mul(a, b)] == canon.mul(perm[a], perm[b]);
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

Verdict pass(std::string witness) { return {true, std::move(witness)}; }
Verdict fail(std::string witness) { return {false, std::move(witness)}; }

// -----------------------------------------------------------------------------
// T01 reduced-equality
// -----------------------------------------------------------------------------

bool t01_hyp(const RingInstance& inst) {
    return has_vertices(inst) && ring_predicates(inst.sr).is_reduced;
}

Verdict t01(const RingInstance& inst) {
    ZdGraph star = gamma_star(inst.sr);
    ZdGraph prime = gamma_prime(inst.sr);
    if (!edge_set_equal(star, prime))
        return fail("gamma-star and gamma-prime differ: " +
                    first_edge_difference(inst, star, prime));
    std::ostringstream os;
    os << "edge sets equal (" << prime.graph.edge_count() << " edges on "
       << prime.vertex_count() << " vertices)";
    return pass(os.str());
}

// -----------------------------------------------------------------------------
// T02 neighborhood monotonicity along powers (k <= 5); loops are excluded, so
// inclusion and equality are read on third vertices distinct from x and x^k.
// -----------------------------------------------------------------------------

Verdict t02(const RingInstance& inst) {
    const FiniteRing& ring = inst.sr.ring();
    ZdGraph prime = gamma_prime(inst.sr);
    std::vector<ElementProfile> prof = vertex_profiles(inst.sr, prime);
    const int n = prime.vertex_count();
    int pairs_checked = 0;

    for (int i = 0; i < n; ++i) {
        const Elem x = prime.vertices[i];
        if (prof[i].is_nilpotent && prime.graph.degree(i) != n - 1)
            return fail("nilpotent " + ename(inst, x) + " is not adjacent to every other vertex");
        for (int k = 2; k <= 5; ++k) {
            const Elem xk = ring.pow(x, k);
            if (xk == x) continue;
            auto j = prime.position_of(xk);
            if (!j) continue;
            ++pairs_checked;
            for (int y = 0; y < n; ++y) {
                if (y == i || y == *j) continue;
                if (prime.graph.has_edge(i, y) && !prime.graph.has_edge(*j, y)) {
                    std::ostringstream os;
                    os << "N(" << ename(inst, x) << ") not within N(" << ename(inst, xk)
                       << "): lost neighbor " << ename(inst, prime.vertices[y]);
                    return fail(os.str());
                }
                if (prof[i].is_potent &&
                    prime.graph.has_edge(*j, y) != prime.graph.has_edge(i, y)) {
                    std::ostringstream os;
                    os << "potent " << ename(inst, x) << " has N(x) != N(x^" << k << ") at "
                       << ename(inst, prime.vertices[y]);
                    return fail(os.str());
                }
            }
        }
    }
    return pass("checked " + std::to_string(pairs_checked) + " (vertex, power) pairs on " +
                std::to_string(n) + " vertices");
}

// -----------------------------------------------------------------------------
// T03 nilpotent universality + connectivity
// -----------------------------------------------------------------------------

bool t03_hyp(const RingInstance& inst) {
    if (!has_vertices(inst)) return false;
    return !ring_predicates(inst.sr).is_reduced;  // some non-zero nilpotent exists
}

Verdict t03(const RingInstance& inst) {
    ZdGraph prime = gamma_prime(inst.sr);
    std::vector<ElementProfile> prof = vertex_profiles(inst.sr, prime);
    const int n = prime.vertex_count();
    Elem sample = -1;
    for (int i = 0; i < n; ++i) {
        if (!prof[i].is_nilpotent) continue;
        sample = prime.vertices[i];
        if (prime.graph.degree(i) != n - 1)
            return fail("nilpotent " + ename(inst, prime.vertices[i]) + " has degree " +
                        std::to_string(prime.graph.degree(i)) + " of " + std::to_string(n - 1));
    }
    if (components(prime.graph).size() != 1)
        return fail("graph disconnected despite a non-zero nilpotent");
    return pass("nilpotent " + ename(inst, sample) + " adjacent to all " +
                std::to_string(n - 1) + " other vertices; graph connected");
}

// -----------------------------------------------------------------------------
// T04 identity involution on a finite commutative ring with one
// -----------------------------------------------------------------------------

bool t04_hyp(const RingInstance& inst) {
    return inst.sr.ring().has_one() && inst.sr.star().is_identity() && has_vertices(inst);
}

Verdict t04(const RingInstance& inst) {
    ZdGraph prime = gamma_prime(inst.sr);
    auto diam = diameter(prime.graph);
    if (!diam || diam->is_inf()) return fail("graph is disconnected");
    if (*diam > ExtNat(2)) return fail("diameter " + diam->to_string() + " exceeds 2");
    return pass("connected, diameter = " + diam->to_string());
}

// -----------------------------------------------------------------------------
// T05 matrix rings over Z_m with transpose
// -----------------------------------------------------------------------------

bool t05_hyp(const RingInstance& inst) {
    const BaseSpec& b = inst.spec.base;
    return b.kind == BaseSpec::Kind::Matrix && b.n >= 2 &&
           b.factors[0].kind == BaseSpec::Kind::Zn && inst.spec.inv &&
           inst.spec.inv->kind == InvSpec::Kind::Transpose && has_vertices(inst);
}

Verdict t05(const RingInstance& inst) {
    ZdGraph prime = gamma_prime(inst.sr);
    auto diam = diameter(prime.graph);
    ExtNat g = girth(prime.graph);
    if (!diam || diam->is_inf()) return fail("graph is disconnected");
    if (*diam > ExtNat(2)) return fail("diameter " + diam->to_string() + " exceeds 2");
    if (g != ExtNat(3)) return fail("girth = " + g.to_string() + ", expected 3");
    return pass("connected, diameter = " + diam->to_string() + ", girth = 3");
}

// -----------------------------------------------------------------------------
// T06 girth trichotomy
// -----------------------------------------------------------------------------

Verdict t06(const RingInstance& inst) {
    ExtNat g = girth(gamma_prime(inst.sr).graph);
    if (g == ExtNat(3) || g == ExtNat(4) || g.is_inf()) return pass("girth = " + g.to_string());
    return fail("girth = " + g.to_string() + ", outside {3, 4, inf}");
}

// -----------------------------------------------------------------------------
// T07 M_2(field) join decomposition
// -----------------------------------------------------------------------------

bool t07_hyp(const RingInstance& inst) {
    const BaseSpec& b = inst.spec.base;
    if (b.kind != BaseSpec::Kind::Matrix || b.n != 2 || !inst.spec.inv ||
        inst.spec.inv->kind != InvSpec::Kind::Transpose)
        return false;
    auto mv = as_matrix(inst.sr.ring());
    return mv && is_finite_domain(mv->base) && has_vertices(inst);
}

Verdict t07(const RingInstance& inst) {
    M2Decomposition dec = m2_field_decomposition(inst.sr);
    ZdGraph prime = gamma_prime(inst.sr);
    if (!edge_set_equal(dec.joined, prime))
        return fail("K2-join differs from gamma-prime: " +
                    first_edge_difference(inst, dec.joined, prime));
    std::ostringstream os;
    os << "K2-join of the induced subgraph (" << dec.gamma1.vertex_count()
       << " vertices) and K_" << dec.nilpotents.size() << " matches all "
       << prime.graph.edge_count() << " edges";
    return pass(os.str());
}

// -----------------------------------------------------------------------------
// T08 universal vertices are nilpotent or projections
// -----------------------------------------------------------------------------

bool t08_hyp(const RingInstance& inst) {
    if (!inst.sr.ring().has_one() || !has_vertices(inst)) return false;
    ZdGraph prime = gamma_prime(inst.sr);
    const int n = prime.vertex_count();
    for (int i = 0; i < n; ++i)
        if (prime.graph.degree(i) == n - 1) return true;
    return false;
}

Verdict t08(const RingInstance& inst) {
    const FiniteRing& ring = inst.sr.ring();
    ZdGraph prime = gamma_prime(inst.sr);
    std::vector<ElementProfile> prof = vertex_profiles(inst.sr, prime);
    const int n = prime.vertex_count();
    int universal = 0, projections = 0;

    for (int i = 0; i < n; ++i) {
        if (prime.graph.degree(i) != n - 1) continue;
        ++universal;
        const Elem a = prime.vertices[i];
        if (!prof[i].is_nilpotent && !prof[i].is_projection)
            return fail("universal vertex " + ename(inst, a) +
                        " is neither nilpotent nor a projection");
        if (prof[i].is_projection) {
            ++projections;
            for (Elem f = 0; f < ring.order(); ++f) {
                if (f == a || f == ring.zero()) continue;
                if (ring.has_one() && f == *ring.one()) continue;
                if (ring.mul(f, f) != f || inst.sr.star_of(f) != f) continue;
                if (ring.mul(a, f) != ring.zero() || ring.mul(f, a) != ring.zero())
                    return fail("universal projection " + ename(inst, a) +
                                " not orthogonal to projection " + ename(inst, f));
            }
        }
    }
    return pass(std::to_string(universal) + " universal vertices (" +
                std::to_string(projections) + " projections) all nilpotent or projections");
}

// -----------------------------------------------------------------------------
// T09 R x R with swap involution
// -----------------------------------------------------------------------------

bool t09_hyp(const RingInstance& inst) {
    const BaseSpec& b = inst.spec.base;
    if (b.kind != BaseSpec::Kind::Product || !inst.spec.inv ||
        inst.spec.inv->kind != InvSpec::Kind::Swap)
        return false;
    auto pv = as_product(inst.sr.ring());
    return pv && pv->left.commutative() && has_vertices(inst);
}

Verdict t09(const RingInstance& inst) {
    auto pv = as_product(inst.sr.ring());
    const FiniteRing& factor = pv->left;
    const bool domain = is_finite_domain(factor);

    ZdGraph prime = gamma_prime(inst.sr);
    auto comps = components(prime.graph);

    if (!domain) {
        if (comps.size() != 1)
            return fail("factor is not a domain but the graph has " +
                        std::to_string(comps.size()) + " components");
        return pass("factor not a domain; graph connected on " +
                    std::to_string(prime.vertex_count()) + " vertices");
    }

    if (comps.size() != 2)
        return fail("factor is a domain but the graph has " + std::to_string(comps.size()) +
                    " components, expected 2");

    // Components must be exactly (R \ 0) x {0} and {0} x (R \ 0), each complete.
    std::vector<Elem> left_side, right_side;
    for (Elem x = 0; x < factor.order(); ++x) {
        if (x == factor.zero()) continue;
        left_side.push_back(pv->pair(x, pv->right.zero()));
        right_side.push_back(pv->pair(pv->left.zero(), x));
    }
    std::sort(left_side.begin(), left_side.end());
    std::sort(right_side.begin(), right_side.end());

    std::array<std::vector<Elem>, 2> got;
    for (int c = 0; c < 2; ++c)
        for (int pos : comps[c]) got[c].push_back(prime.vertices[pos]);
    if (!((got[0] == left_side && got[1] == right_side) ||
          (got[0] == right_side && got[1] == left_side)))
        return fail("components are not (R\\0)x{0} and {0}x(R\\0)");

    for (const auto& comp : comps)
        for (std::size_t a = 0; a < comp.size(); ++a)
            for (std::size_t b = a + 1; b < comp.size(); ++b)
                if (!prime.graph.has_edge(comp[a], comp[b]))
                    return fail("component is not complete: (" +
                                ename(inst, prime.vertices[comp[a]]) + ", " +
                                ename(inst, prime.vertices[comp[b]]) + ") missing");

    return pass("two complete components on " + std::to_string(left_side.size()) +
                " vertices each");
}

// -----------------------------------------------------------------------------
// T10 completeness characterization
// -----------------------------------------------------------------------------

bool t10_hyp(const RingInstance& inst) {
    return inst.sr.ring().has_one() && has_vertices(inst) &&
           ring_predicates(inst.sr).is_abelian;
}

Verdict t10(const RingInstance& inst) {
    const FiniteRing& ring = inst.sr.ring();
    ZdGraph prime = gamma_prime(inst.sr);
    std::vector<ElementProfile> prof = vertex_profiles(inst.sr, prime);

    const bool complete = shape_tests(prime.graph).is_complete;
    const bool all_nilpotent =
        std::all_of(prof.begin(), prof.end(), [](const auto& p) { return p.is_nilpotent; });
    const bool z2xz2 = star_isomorphic_to_z2xz2(inst.sr);

    if (complete != (z2xz2 || all_nilpotent)) {
        std::ostringstream os;
        os << "complete=" << (complete ? "yes" : "no") << " but Z2xZ2=" << (z2xz2 ? "yes" : "no")
           << ", all-nilpotent=" << (all_nilpotent ? "yes" : "no");
        return fail(os.str());
    }

    // Commutative complete case with more than two vertices: Z(R) is a *-ideal.
    if (ring.commutative() && complete && prime.vertex_count() > 2) {
        std::vector<bool> in_z(ring.order(), false);
        in_z[ring.zero()] = true;
        for (Elem v : prime.vertices) in_z[v] = true;
        for (Elem a = 0; a < ring.order(); ++a) {
            if (!in_z[a]) continue;
            if (!in_z[inst.sr.star_of(a)])
                return fail("Z(R) not closed under *: " + ename(inst, a));
            for (Elem b = 0; b < ring.order(); ++b) {
                if (in_z[b] && !in_z[ring.add(a, b)])
                    return fail("Z(R) not closed under +: " + ename(inst, a) + " + " +
                                ename(inst, b));
                if (!in_z[ring.mul(a, b)] || !in_z[ring.mul(b, a)])
                    return fail("Z(R) not closed under multiplication by " + ename(inst, b));
            }
        }
    }

    std::ostringstream os;
    os << (complete ? "complete" : "not complete") << "; Z2xZ2=" << (z2xz2 ? "yes" : "no")
       << ", all-nilpotent=" << (all_nilpotent ? "yes" : "no");
    return pass(os.str());
}

// -----------------------------------------------------------------------------
// T11 star characterization
// -----------------------------------------------------------------------------

bool t11_hyp(const RingInstance& inst) {
    if (!inst.sr.ring().has_one()) return false;
    if (static_cast<int>(zero_divisors(inst.sr.ring()).size()) < 3) return false;
    RingPredicates p = ring_predicates(inst.sr);
    return p.is_abelian && p.has_proper_involution;
}

/// Structural right-hand side: a central projection e with eR = {0, e} and
/// (1-e)R an integral domain under the identity 1-e.
bool splits_as_z2_times_domain(const StarRing& sr) {
    const FiniteRing& ring = sr.ring();
    const Elem zero = ring.zero();
    const Elem one = *ring.one();
    for (Elem e = 0; e < ring.order(); ++e) {
        if (e == zero || e == one) continue;
        if (ring.mul(e, e) != e || sr.star_of(e) != e) continue;
        bool central = true;
        for (Elem r = 0; r < ring.order() && central; ++r)
            central = ring.mul(e, r) == ring.mul(r, e);
        if (!central) continue;

        std::vector<bool> in_er(ring.order(), false);
        int er_size = 0;
        for (Elem r = 0; r < ring.order(); ++r) {
            Elem x = ring.mul(e, r);
            if (!in_er[x]) {
                in_er[x] = true;
                ++er_size;
            }
        }
        if (er_size != 2) continue;

        const Elem f = ring.sub(one, e);
        std::vector<Elem> fr;
        std::vector<bool> in_fr(ring.order(), false);
        for (Elem r = 0; r < ring.order(); ++r) {
            Elem x = ring.mul(f, r);
            if (!in_fr[x]) {
                in_fr[x] = true;
                fr.push_back(x);
            }
        }
        if (fr.size() < 2) continue;  // a domain has at least 0 and its identity

        bool domain = true;
        for (Elem a : fr) {
            for (Elem b : fr) {
                if (ring.mul(a, b) != ring.mul(b, a)) { domain = false; break; }
                if (a != zero && b != zero && ring.mul(a, b) == zero) { domain = false; break; }
            }
            if (!domain) break;
        }
        if (domain) return true;
    }
    return false;
}

Verdict t11(const RingInstance& inst) {
    ZdGraph prime = gamma_prime(inst.sr);
    ShapeReport shape = shape_tests(prime.graph);
    const bool structural = splits_as_z2_times_domain(inst.sr);

    if (shape.is_star != structural) {
        std::ostringstream os;
        os << "star=" << (shape.is_star ? "yes" : "no")
           << " but Z2 x domain split=" << (structural ? "yes" : "no");
        return fail(os.str());
    }
    if (shape.is_star)
        return pass("star with center " + ename(inst, prime.vertices[*shape.star_center]) +
                    "; ring splits as Z2 x domain");
    return pass("not a star; no Z2 x domain split");
}

// -----------------------------------------------------------------------------
// T12 direct sums with componentwise involution
// -----------------------------------------------------------------------------

bool t12_hyp(const RingInstance& inst) {
    const BaseSpec& b = inst.spec.base;
    if (b.kind != BaseSpec::Kind::Product || !inst.spec.inv ||
        inst.spec.inv->kind != InvSpec::Kind::Componentwise)
        return false;
    auto pv = as_product(inst.sr.ring());
    return pv && !zero_divisors(pv->left).empty() && !zero_divisors(pv->right).empty();
}

Verdict t12(const RingInstance& inst) {
    ZdGraph prime = gamma_prime(inst.sr);
    auto diam = diameter(prime.graph);
    if (!diam || diam->is_inf()) return fail("graph is disconnected");
    if (*diam > ExtNat(4)) return fail("diameter " + diam->to_string() + " exceeds 4");
    return pass("connected, diameter = " + diam->to_string());
}

// -----------------------------------------------------------------------------
// T13 non-trivial central projection
// -----------------------------------------------------------------------------

bool t13_hyp(const RingInstance& inst) {
    return inst.sr.ring().has_one() && has_vertices(inst) &&
           ring_predicates(inst.sr).has_nontrivial_central_projection;
}

Verdict t13(const RingInstance& inst) {
    ZdGraph prime = gamma_prime(inst.sr);
    auto diam = diameter(prime.graph);
    if (!diam || diam->is_inf()) return fail("graph is disconnected");
    if (*diam > ExtNat(4)) return fail("diameter " + diam->to_string() + " exceeds 4");
    return pass("connected, diameter = " + diam->to_string());
}

}  // namespace

// =============================================================================
// Catalog and runners
// =============================================================================

const std::vector<TheoremCheck>& check_catalog() {
    static const std::vector<TheoremCheck> catalog = {
        {"T01", "reduced-equality",
         "reduced rings: gamma-star and gamma-prime have identical edge sets", t01_hyp, t01},
        {"T02", "neighborhood-monotonicity",
         "N(x) lies within N(x^k); equality for potent x; nilpotent x sees every other vertex",
         has_vertices, t02},
        {"T03", "nilpotent-universality",
         "non-zero nilpotents are universal vertices and force connectivity", t03_hyp, t03},
        {"T04", "commutative-diameter",
         "finite commutative ring with one, identity involution: connected, diameter <= 2",
         t04_hyp, t04},
        {"T05", "matrix-ring-invariants",
         "M_n(Z_m) with transpose: connected, diameter <= 2, girth 3", t05_hyp, t05},
        {"T06", "girth-trichotomy", "the girth of gamma-prime is 3, 4, or infinite",
         has_vertices, t06},
        {"T07", "m2-join",
         "M_2(field) with transpose: gamma-prime is the K2-join of the induced gamma-star "
         "subgraph on non-nilpotents and the nilpotent clique",
         t07_hyp, t07},
        {"T08", "universal-vertex-structure",
         "universal vertices are nilpotent or projections; universal projections are "
         "orthogonal to other non-trivial projections",
         t08_hyp, t08},
        {"T09", "product-swap-connectivity",
         "R x R with swap: connected iff R is not an integral domain; for domains, two "
         "complete components",
         t09_hyp, t09},
        {"T10", "completeness",
         "abelian with one: complete iff R = Z2xZ2 or all zero-divisors nilpotent; "
         "commutative complete case has Z(R) a *-ideal",
         t10_hyp, t10},
        {"T11", "star-characterization",
         "abelian with one, proper involution, >= 3 vertices: star iff R = Z2 x domain",
         t11_hyp, t11},
        {"T12", "direct-sum-connectivity",
         "direct sum with componentwise involution, both factors with zero-divisors: "
         "connected, diameter <= 4",
         t12_hyp, t12},
        {"T13", "central-projection-connectivity",
         "a non-trivial central projection forces connectivity with diameter <= 4", t13_hyp,
         t13},
    };
    return catalog;
}

const TheoremCheck* find_check(const std::string& id) {
    for (const auto& c : check_catalog())
        if (c.id == id) return &c;
    return nullptr;
}

CheckResult run_check(const TheoremCheck& check, const RingInstance& instance,
                      long long order_cap) {
    CheckResult result;
    result.check_id = check.id;
    result.ring = instance.description;
    if (instance.sr.order() > order_cap) {
        result.status = CheckStatus::Skipped;
        result.witness = "ring order " + std::to_string(instance.sr.order()) +
                         " exceeds resource cap " + std::to_string(order_cap);
        return result;
    }
    if (!check.hypothesis(instance)) {
        result.status = CheckStatus::Vacuous;
        return result;
    }
    Verdict v = check.conclusion(instance);
    result.status = v.ok ? CheckStatus::Pass : CheckStatus::Fail;
    result.witness = std::move(v.witness);
    return result;
}

std::vector<RingInstance> default_family(const FamilyOptions& options) {
    std::vector<RingInstance> out;
    const int cap = options.max_order;

    for (int n = 2; n <= options.zn_max && n <= cap; ++n)
        out.push_back(make_instance("Z" + std::to_string(n) + "@id"));

    for (int a = 2; a <= options.product_factor_max; ++a)
        for (int b = 2; b <= options.product_factor_max; ++b) {
            if (a * b > cap) continue;
            const std::string base = "Z" + std::to_string(a) + "xZ" + std::to_string(b);
            out.push_back(make_instance(base + "@(id,id)"));
            if (a == b) out.push_back(make_instance(base + "@swap"));
        }

    for (int m : options.matrix_moduli) {
        long long order = static_cast<long long>(m) * m * m * m;
        if (order > cap) continue;
        out.push_back(make_instance("M2(Z" + std::to_string(m) + ")@transpose"));
    }

    if (options.include_table_rings) {
        for (const std::string& name : builtin_table_names()) {
            RingSpec spec;
            spec.base.kind = BaseSpec::Kind::Table;
            spec.base.path = "builtin:" + name;
            FiniteRing ring = build_base(spec.base);
            if (ring.order() > cap) continue;
            for (Involution& inv : enumerate_involutions(ring, options.involution_cap)) {
                StarRing sr(ring, std::move(inv));
                std::string desc = sr.describe();
                out.push_back({spec, std::move(sr), std::move(desc)});
            }
        }
    }
    return out;
}

SuiteRun run_suite(const std::vector<std::string>& check_ids,
                   const std::vector<RingInstance>& family) {
    SuiteRun run;
    std::vector<const TheoremCheck*> checks;
    for (const auto& id : check_ids) {
        const TheoremCheck* c = find_check(id);
        if (!c) throw std::invalid_argument("unknown check id: " + id);
        checks.push_back(c);
    }

    for (const TheoremCheck* check : checks) {
        int decided = 0;
        for (const RingInstance& inst : family) {
            CheckResult r = run_check(*check, inst);
            switch (r.status) {
                case CheckStatus::Pass: ++run.pass; ++decided; break;
                case CheckStatus::Fail: ++run.fail; ++decided; break;
                case CheckStatus::Vacuous: ++run.vacuous; break;
                case CheckStatus::Skipped: ++run.skipped; break;
            }
            run.results.push_back(std::move(r));
        }
        if (decided == 0) run.dead_checks.push_back(check->id);
    }

    std::sort(run.results.begin(), run.results.end(),
              [](const CheckResult& a, const CheckResult& b) {
                  return std::tie(a.check_id, a.ring) < std::tie(b.check_id, b.ring);
              });
    return run;
}

SuiteRun run_suite(const std::vector<std::string>& check_ids, const FamilyOptions& options) {
    return run_suite(check_ids, default_family(options));
}

}  // namespace zdg
