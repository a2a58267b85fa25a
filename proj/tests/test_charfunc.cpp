#include "torprod/charfunc.hpp"
#include "torprod/descriptor.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace torprod;

TEST_CASE("square characteristic functions are valid", "[charfunc]") {
    SimplePolytope q = square();
    for (long r = -3; r <= 3; ++r) {
        CharValidity rep = validate_char(q, square_lambda_a(r));
        REQUIRE(rep.ok);
    }
    REQUIRE(validate_char(q, square_lambda_b()).ok);
}

TEST_CASE("invalid characteristic function is reported with the vertex", "[charfunc]") {
    SimplePolytope q = square();
    // F2 and F4 both map to (0,1): the vertex on {F3, F4} needs
    // lambda(F3), lambda(F4) unimodular; make F3 = (0,1) too and it fails
    CharFunction bad = CharFunction::over_z({{1, 0}, {0, 1}, {0, 1}, {0, 1}});
    CharValidity rep = validate_char(q, bad);
    REQUIRE_FALSE(rep.ok);
    REQUIRE_FALSE(rep.offenders.empty());
    REQUIRE_THROWS_AS(require_valid_char(q, bad), InvalidCharFunction);
}

TEST_CASE("standard simplex lambda gives projective spaces", "[charfunc]") {
    for (int n = 1; n <= 3; ++n) {
        SimplePolytope s = simplex(n);
        REQUIRE(validate_char(s, simplex_standard_lambda(n)).ok);
        REQUIRE(validate_char(s, simplex_standard_lambda(n, Ring::F2)).ok);
    }
}

TEST_CASE("product lambda matches product polytope facet order", "[charfunc]") {
    for (const std::vector<int>& dims :
         {std::vector<int>{1, 1}, std::vector<int>{2, 1}, std::vector<int>{1, 2, 1}}) {
        SimplePolytope q = simplex_product(dims);
        REQUIRE(validate_char(q, simplex_product_standard_lambda(dims)).ok);
        REQUIRE(validate_char(q, simplex_product_standard_lambda(dims, Ring::F2)).ok);
    }
}

TEST_CASE("mod 2 validity only needs odd determinants", "[charfunc]") {
    SimplePolytope q = square();
    // the vertex on {F2, F3} has determinant 3: invalid over Z, valid mod 2
    std::vector<std::vector<Int>> rows = {{1, 0}, {3, 1}, {0, 1}, {1, 1}};
    REQUIRE_FALSE(validate_char(q, CharFunction::over_z(rows)).ok);
    REQUIRE(validate_char(q, CharFunction::over_f2(rows)).ok);
}

TEST_CASE("linear ideal rows transpose lambda", "[charfunc]") {
    SimplePolytope q = square();
    CharFunction cf = square_lambda_a(2);
    auto rows = linear_ideal_rows(q, cf);
    REQUIRE(rows.size() == 2);
    REQUIRE(rows[0] == std::vector<Int>{1, 0, 1, 0});
    REQUIRE(rows[1] == std::vector<Int>{0, 1, 2, 1});
}

TEST_CASE("shape mismatches throw", "[charfunc]") {
    SimplePolytope q = square();
    REQUIRE_THROWS_AS(validate_char(q, CharFunction::over_z({{1, 0}})), DimensionMismatch);
    REQUIRE_THROWS_AS(validate_char(q, CharFunction::over_z({{1}, {1}, {1}, {1}})),
                      DimensionMismatch);
}
