#include "torprod/matrix.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace torprod;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

void check_snf(const IntMatrix& a) {
    SnfResult s = smith_normal_form(a);
    // d = u * a * v
    REQUIRE(s.u.multiplied_by(a).multiplied_by(s.v) == s.d);
    // u, v unimodular
    Int du = determinant(s.u), dv = determinant(s.v);
    REQUIRE((du == 1 || du == -1));
    REQUIRE((dv == 1 || dv == -1));
    // diagonal, nonnegative, divisibility chain
    for (std::size_t i = 0; i < s.d.rows(); ++i)
        for (std::size_t j = 0; j < s.d.cols(); ++j)
            if (i != j) REQUIRE(s.d(i, j) == 0);
    for (std::size_t i = 0; i + 1 < s.divisors.size(); ++i) {
        REQUIRE(s.divisors[i] > 0);
        REQUIRE(s.divisors[i + 1] % s.divisors[i] == 0);
    }
    REQUIRE(s.rank == bareiss_rank(a));
}

}  // namespace

TEST_CASE("smith normal form of the 2x2 example", "[matrix]") {
    IntMatrix a = from_rows({{2, 4}, {6, 8}});
    SnfResult s = smith_normal_form(a);
    REQUIRE(s.divisors == std::vector<Int>{2, 4});
    check_snf(a);
}

TEST_CASE("smith normal form basics", "[matrix]") {
    check_snf(from_rows({{1, 0}, {0, 1}}));
    check_snf(from_rows({{0, 0}, {0, 0}}));
    check_snf(from_rows({{2, 0, 0}, {0, 3, 0}}));  // divisors become 1, 6
    SnfResult s = smith_normal_form(from_rows({{2, 0, 0}, {0, 3, 0}}));
    REQUIRE(s.divisors == std::vector<Int>{1, 6});
}

TEST_CASE("smith normal form on random matrices", "[matrix]") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> dim(1, 6), ent(-9, 9);
    for (int trial = 0; trial < 40; ++trial) {
        IntMatrix a(dim(rng), dim(rng));
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = ent(rng);
        check_snf(a);
    }
}

TEST_CASE("bareiss rank and determinant", "[matrix]") {
    REQUIRE(bareiss_rank(from_rows({{1, 2}, {2, 4}})) == 1);
    REQUIRE(bareiss_rank(from_rows({{1, 2}, {3, 4}})) == 2);
    REQUIRE(determinant(from_rows({{1, 2}, {3, 4}})) == -2);
    REQUIRE(determinant(from_rows({{2, 0, 1}, {1, 1, 0}, {0, 3, 1}})) == 5);
    // rank is invariant under row scaling
    IntMatrix m = from_rows({{3, 6, 9}, {1, 2, 3}, {0, 1, 1}});
    REQUIRE(bareiss_rank(m) == 2);
}

TEST_CASE("homology ranks from SNF are basis independent", "[matrix]") {
    // boundary of the CW circle with two cells in each dimension 0, 1:
    // rank H_0 = 1, rank H_1 = 1
    IntMatrix d1 = from_rows({{1, -1}, {-1, 1}});
    SnfResult s = smith_normal_form(d1);
    REQUIRE(s.rank == 1);
    long h0 = 2 - static_cast<long>(s.rank);
    long h1 = 2 - static_cast<long>(s.rank);
    REQUIRE(h0 == 1);
    REQUIRE(h1 == 1);
}
