#pragma once

#include "torprod/charfunc.hpp"
#include "torprod/errors.hpp"
#include "torprod/polytope.hpp"

#include <optional>
#include <string>
#include <vector>

namespace torprod {

// Space descriptors for the three families:
//   PPS  P(m; (n_1,p_1)..(n_l,p_l))   spheres with coordinate involutions
//   PT   P(S(m), X)                   quasitoric fibre X over a simple polytope
//   PS   P(S(m), Y)                   small-cover fibre Y
// For PT/PS the fibre is given either by the shorthand cp/rp (a product of
// projective spaces, standard characteristic function over a product of
// simplices) or by an explicit polytope + characteristic function.
//
// The descriptor validates shape only; hypothesis checks (sorted dimension
// chains, p ranges, m_i > 1 requirements...) belong to the owning modules.

enum class Family { PPS, PT, PS };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::PPS: return "PPS";
        case Family::PT: return "PT";
        default: return "PS";
    }
}

struct SpaceDescriptor {
    Family family = Family::PPS;
    std::string name = "space";
    std::vector<int> m;   // base sphere dimensions

    std::vector<int> n, p;  // PPS fibre data

    std::vector<int> cp;  // PT shorthand: fibre CP^{n_1} x ... x CP^{n_l}
    std::vector<int> rp;  // PS shorthand: fibre RP^{n_1} x ... x RP^{n_l}

    std::optional<SimplePolytope> polytope;  // explicit fibre
    std::optional<CharFunction> lambda;

    bool has_explicit_fibre() const { return polytope.has_value(); }
    bool has_shorthand_fibre() const { return !cp.empty() || !rp.empty(); }
};

inline void validate_shape(const SpaceDescriptor& d) {
    if (d.m.empty()) throw InputError("descriptor needs at least one base sphere dimension");
    for (int v : d.m)
        if (v < 1) throw InputError("base sphere dimensions must be >= 1");
    switch (d.family) {
        case Family::PPS:
            if (d.n.size() != d.p.size())
                throw InputError("PPS descriptor needs matching n and p lists");
            if (!d.cp.empty() || !d.rp.empty() || d.polytope)
                throw InputError("PPS descriptor takes no fibre polytope data");
            for (int v : d.n)
                if (v < 1) throw InputError("fibre sphere dimensions must be >= 1");
            break;
        case Family::PT:
            if (!d.n.empty() || !d.p.empty())
                throw InputError("PT descriptor takes no (n, p) lists");
            if (!d.rp.empty()) throw InputError("PT fibre shorthand is cp, not rp");
            if (d.cp.empty() == !d.polytope)
                throw InputError("PT descriptor needs exactly one of cp or an explicit fibre");
            for (int v : d.cp)
                if (v < 1) throw InputError("cp entries must be >= 1");
            if (d.polytope) {
                if (!d.lambda) throw InputError("explicit fibre needs a characteristic function");
                if (d.lambda->ring != Ring::Z)
                    throw InputError("PT characteristic function must be integral");
            }
            break;
        case Family::PS:
            if (!d.n.empty() || !d.p.empty())
                throw InputError("PS descriptor takes no (n, p) lists");
            if (!d.cp.empty()) throw InputError("PS fibre shorthand is rp, not cp");
            if (d.rp.empty() == !d.polytope)
                throw InputError("PS descriptor needs exactly one of rp or an explicit fibre");
            for (int v : d.rp)
                if (v < 1) throw InputError("rp entries must be >= 1");
            if (d.polytope) {
                if (!d.lambda) throw InputError("explicit fibre needs a characteristic function");
                if (d.lambda->ring != Ring::F2)
                    throw InputError("PS characteristic function must be mod 2");
            }
            break;
    }
}

// Product of simplices underlying a cp/rp shorthand fibre, facet order
// matching simplex_product_standard_lambda.
inline SimplePolytope simplex_product(const std::vector<int>& dims) {
    if (dims.empty()) return point_polytope();
    SimplePolytope acc = simplex(dims[0]);
    if (dims.size() == 1) return acc;
    // re-prefix so facet names stay distinct through the fold
    for (std::size_t j = 1; j < dims.size(); ++j)
        acc = product_polytope(acc, simplex(dims[j]), j == 1 ? "P1." : "",
                               "P" + std::to_string(j + 1) + ".");
    return acc;
}

// Explicit fibre polytope of a PT/PS descriptor (shorthand fibres expand
// to products of simplices).
inline SimplePolytope fibre_polytope(const SpaceDescriptor& d) {
    if (d.polytope) return *d.polytope;
    if (d.family == Family::PT && !d.cp.empty()) return simplex_product(d.cp);
    if (d.family == Family::PS && !d.rp.empty()) return simplex_product(d.rp);
    throw HypothesisViolation("the " + std::string(family_name(d.family)) +
                              " family has no fibre polytope");
}

inline CharFunction fibre_char_function(const SpaceDescriptor& d) {
    if (d.lambda) return *d.lambda;
    if (d.family == Family::PT && !d.cp.empty())
        return simplex_product_standard_lambda(d.cp, Ring::Z);
    if (d.family == Family::PS && !d.rp.empty())
        return simplex_product_standard_lambda(d.rp, Ring::F2);
    throw HypothesisViolation("the " + std::string(family_name(d.family)) +
                              " family has no characteristic function");
}

// ---- built-in fixtures --------------------------------------------------

// Dold manifold D(1,1) = (S^1 x CP^1)/Z2.
inline SpaceDescriptor fixture_dold_1_1() {
    SpaceDescriptor d;
    d.family = Family::PT;
    d.name = "dold-1-1";
    d.m = {1};
    d.cp = {1};
    return d;
}

// P(S^3, X) with X the quasitoric manifold over the square with
// lambda = (1,0), (0,1), (1,r), (0,1) on the cyclically ordered facets.
inline SpaceDescriptor fixture_square_r(long r) {
    SpaceDescriptor d;
    d.family = Family::PT;
    d.name = "square-r";
    d.m = {3};
    d.polytope = square();
    d.lambda = square_lambda_a(r);
    return d;
}

// P(S^3, CP^2 # CP^2): fibre over the square with
// lambda = (1,0), (-1,1), (1,-2), (0,1).
inline SpaceDescriptor fixture_cp2_connected_sum() {
    SpaceDescriptor d;
    d.family = Family::PT;
    d.name = "cp2-connected-sum";
    d.m = {3};
    d.polytope = square();
    d.lambda = square_lambda_b();
    return d;
}

inline SpaceDescriptor builtin_fixture(const std::string& name, long r = 0) {
    if (name == "dold-1-1") return fixture_dold_1_1();
    if (name == "square-r") return fixture_square_r(r);
    if (name == "cp2-connected-sum") return fixture_cp2_connected_sum();
    throw InputError("unknown fixture: " + name +
                     " (known: dold-1-1, square-r, cp2-connected-sum)");
}

}  // namespace torprod
