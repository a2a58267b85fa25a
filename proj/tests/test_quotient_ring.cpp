#include "torprod/descriptor.hpp"
#include "torprod/quotient_ring.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace torprod;

namespace {

// full-variable monomial helper: exponents over all facets
Expo full(std::initializer_list<int> e) { return Expo(e); }

RingClass reduce_expr(const CohomologyPresentation& pres,
                      const std::vector<std::pair<Expo, long>>& terms, int udeg) {
    std::map<Expo, Int> poly;
    for (const auto& [e, c] : terms) poly[e] += c;
    return pres.reduce_full(poly, udeg);
}

}  // namespace

TEST_CASE("square presentation: substitution and relations", "[quotient]") {
    SimplePolytope q = square();
    for (long r = -3; r <= 3; ++r) {
        CohomologyPresentation pres = CohomologyPresentation::build(q, square_lambda_a(r));
        // pivot vertex carries the lexicographically largest facet set {F3, F4}
        REQUIRE(pres.pivot_facets() == std::vector<int>{2, 3});
        REQUIRE(pres.free_facets() == std::vector<int>{0, 1});
        // u3 = -u1, u4 = r u1 - u2 (zero coefficients are not stored)
        REQUIRE(pres.facet_image(2) == Poly{{{1, 0}, -1}});
        Poly u4{{{0, 1}, -1}};
        if (r != 0) u4[{1, 0}] = r;
        REQUIRE(pres.facet_image(3) == u4);
        // Stanley-Reisner generators: the two diagonals
        REQUIRE(pres.sr_generators() ==
                std::vector<std::vector<int>>{{0, 2}, {1, 3}});
        // ranks = h-vector (1, 2, 1), total = |V|
        REQUIRE(pres.ranks() == std::vector<long>{1, 2, 1});
        REQUIRE(pres.total_rank() == 4);

        // x1^2 = 0 and x2^2 = r x1 x2 in the quotient
        RingClass x1 = pres.generator(0), x2 = pres.generator(1);
        REQUIRE(pres.multiply(x1, x1).is_zero());
        RingClass x2sq = pres.multiply(x2, x2);
        RingClass x1x2 = pres.multiply(x1, x2);
        REQUIRE(pres.equal(x2sq, pres.scale(x1x2, r)));

        // ideal generators vanish: linear rows and SR monomials
        for (const auto& row : linear_ideal_rows(q, square_lambda_a(r))) {
            std::map<Expo, Int> lin;
            for (std::size_t i = 0; i < row.size(); ++i) {
                Expo e(4, 0);
                e[i] = 1;
                if (row[i] != 0) lin[e] = row[i];
            }
            REQUIRE(pres.reduce_full(lin, 1).is_zero());
        }
        REQUIRE(reduce_expr(pres, {{full({1, 0, 1, 0}), 1}}, 2).is_zero());
        REQUIRE(reduce_expr(pres, {{full({0, 1, 0, 1}), 1}}, 2).is_zero());
    }
}

TEST_CASE("square presentation with the second lambda", "[quotient]") {
    SimplePolytope q = square();
    CohomologyPresentation pres = CohomologyPresentation::build(q, square_lambda_b());
    REQUIRE(pres.ranks() == std::vector<long>{1, 2, 1});
    RingClass x1 = pres.generator(0), x2 = pres.generator(1);
    RingClass x1x2 = pres.multiply(x1, x2);
    // x1^2 = x1 x2 and x2^2 = 2 x1 x2
    REQUIRE(pres.equal(pres.multiply(x1, x1), x1x2));
    REQUIRE(pres.equal(pres.multiply(x2, x2), pres.scale(x1x2, 2)));
}

TEST_CASE("first Pontryagin class of the square fibres", "[quotient]") {
    SimplePolytope q = square();
    for (long r = -3; r <= 3; ++r) {
        CohomologyPresentation pres = CohomologyPresentation::build(q, square_lambda_a(r));
        PontryaginResult p1 = first_pontryagin(pres);
        // p1 = (2 + r^2) u1^2 + 2 u2^2 - 2r u1 u2 reduces to zero for every
        // r:  u1^2 = 0 and u2^2 = r u1 u2 kill it.  (The sign of the x2^2
        // relation makes the r-dependence cancel exactly.)
        REQUIRE(p1.is_zero);
        RingClass quoted = reduce_expr(pres, {{full({0, 2, 0, 0}), 2}, {full({1, 1, 0, 0}), -2 * r}}, 2);
        REQUIRE(pres.equal(p1.cls, quoted));
    }
    CohomologyPresentation pres_b = CohomologyPresentation::build(q, square_lambda_b());
    PontryaginResult p1b = first_pontryagin(pres_b);
    REQUIRE_FALSE(p1b.is_zero);
    RingClass expect = reduce_expr(
        pres_b, {{full({2, 0, 0, 0}), 6}, {full({0, 2, 0, 0}), 3}, {full({1, 1, 0, 0}), -6}}, 2);
    REQUIRE(pres_b.equal(p1b.cls, expect));
    REQUIRE_FALSE(expect.is_zero());
    // numerically: 6 x1 x2 on the surviving basis
    REQUIRE(pres_b.class_string(p1b.cls) == "6*x1*x2");
}

TEST_CASE("pivot choice does not change ranks or p1", "[quotient]") {
    SimplePolytope q = square();
    CharFunction cf = square_lambda_b();
    std::vector<long> ranks0;
    bool p1zero0 = false;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
        CohomologyPresentation::Options opt;
        opt.pivot_vertex = static_cast<int>(v);
        CohomologyPresentation pres = CohomologyPresentation::build(q, cf, opt);
        REQUIRE(pres.pivot_vertex() == static_cast<int>(v));
        PontryaginResult p1 = first_pontryagin(pres);
        if (v == 0) {
            ranks0 = pres.ranks();
            p1zero0 = p1.is_zero;
        } else {
            REQUIRE(pres.ranks() == ranks0);
            REQUIRE(p1.is_zero == p1zero0);
        }
    }
    REQUIRE_FALSE(p1zero0);
}

TEST_CASE("simplex fibres: projective spaces", "[quotient]") {
    // CP^2: ranks (1,1,1), p1 = 3 u^2 != 0
    CohomologyPresentation cp2 =
        CohomologyPresentation::build(simplex(2), simplex_standard_lambda(2));
    REQUIRE(cp2.ranks() == std::vector<long>{1, 1, 1});
    PontryaginResult p1 = first_pontryagin(cp2);
    REQUIRE_FALSE(p1.is_zero);
    REQUIRE(p1.cls.coords.size() == 1);
    REQUIRE(p1.cls.coords[0].second == 3);

    // CP^1: top degree 1, p1 lives above it and vanishes
    CohomologyPresentation cp1 =
        CohomologyPresentation::build(simplex(1), simplex_standard_lambda(1));
    REQUIRE(cp1.ranks() == std::vector<long>{1, 1});
    REQUIRE(first_pontryagin(cp1).is_zero);

    // CP^1 x CP^1: ranks (1,2,1), p1 = 2u1^2 + 2u2^2 = 0 in the quotient
    CohomologyPresentation pp = CohomologyPresentation::build(
        simplex_product({1, 1}), simplex_product_standard_lambda({1, 1}));
    REQUIRE(pp.ranks() == std::vector<long>{1, 2, 1});
    REQUIRE(first_pontryagin(pp).is_zero);
}

TEST_CASE("prism fibre with the product lambda", "[quotient]") {
    SimplePolytope q = simplex_product({2, 1});
    CohomologyPresentation pres =
        CohomologyPresentation::build(q, simplex_product_standard_lambda({2, 1}));
    REQUIRE(pres.ranks() == std::vector<long>{1, 2, 2, 1});
    REQUIRE(pres.total_rank() == static_cast<long>(q.vertex_count()));
}

TEST_CASE("mod 2 presentations share the code path", "[quotient]") {
    SimplePolytope q = square();
    CohomologyPresentation pres =
        CohomologyPresentation::build(q, CharFunction::over_f2({{1, 0}, {0, 1}, {1, 1}, {0, 1}}));
    REQUIRE(pres.mod2());
    REQUIRE(pres.var_degree() == 1);
    REQUIRE(pres.ranks() == std::vector<long>{1, 2, 1});
    // small cover over the simplex: RP^2
    CohomologyPresentation rp2 =
        CohomologyPresentation::build(simplex(2), simplex_standard_lambda(2, Ring::F2));
    REQUIRE(rp2.ranks() == std::vector<long>{1, 1, 1});
    REQUIRE_THROWS_AS(first_pontryagin(rp2), WrongRing);
}

TEST_CASE("reduce guards degrees and shapes", "[quotient]") {
    SimplePolytope q = square();
    CohomologyPresentation pres = CohomologyPresentation::build(q, square_lambda_a(1));
    // wrong number of variables
    REQUIRE_THROWS_AS(pres.reduce(Poly{{{1, 0, 0}, 1}}, 1), DimensionMismatch);
    // inhomogeneous input
    REQUIRE_THROWS_AS(pres.reduce(Poly{{{1, 0}, 1}, {{1, 1}, 1}}, 1), DimensionMismatch);
    // degrees above the top vanish
    REQUIRE(pres.reduce(Poly{{{2, 1}, 5}}, 3).is_zero());

    // a truncated window rejects degrees it never computed
    CohomologyPresentation::Options opt;
    opt.max_udeg = 1;
    CohomologyPresentation small = CohomologyPresentation::build(q, square_lambda_a(1), opt);
    REQUIRE(small.rank(1) == 2);
    REQUIRE_THROWS_AS(small.reduce(Poly{{{1, 1}, 1}}, 2), DimensionMismatch);
}
