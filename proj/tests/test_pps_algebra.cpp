#include "torprod/pps_algebra.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <vector>

using namespace torprod;

namespace {

// coefficient list of (1 + t + .. + t^{m1}) * prod_{i>=2} (1 + t^{m_i})
//                    * prod_j (1 + t^{n_j}), reduced mod 2 NOT taken:
// the algebra is free over F2 with exactly these dimensions.
std::vector<long> product_formula(const std::vector<int>& m, const std::vector<int>& n) {
    std::vector<long> acc(m[0] + 1, 1);
    auto mul_by = [&](int d) {
        std::vector<long> next(acc.size() + d, 0);
        for (std::size_t t = 0; t < acc.size(); ++t) {
            next[t] += acc[t];
            next[t + d] += acc[t];
        }
        acc = std::move(next);
    };
    for (std::size_t i = 1; i < m.size(); ++i) mul_by(m[i]);
    for (int nj : n) mul_by(nj);
    return acc;
}

void check_tuple(const std::vector<int>& m, const std::vector<int>& n, const std::vector<int>& p) {
    PPSAlgebra alg = PPSAlgebra::build(m, n, p);
    std::vector<long> dims = alg.betti_vector();
    REQUIRE(dims == product_formula(m, n));
    // duality
    for (std::size_t t = 0; t < dims.size(); ++t) REQUIRE(dims[t] == dims[dims.size() - 1 - t]);
    // total dimension (m1+1) 2^{k-1+l}
    long expect = (m[0] + 1) * (1L << (m.size() - 1 + n.size()));
    REQUIRE(alg.total_dim() == expect);
    // Sq^0 = id on every generator
    REQUIRE(alg.sq(0, alg.alpha()) == alg.alpha());
    for (int i = 2; i <= alg.k(); ++i) REQUIRE(alg.sq(0, alg.gen_alpha(i)) == alg.gen_alpha(i));
    for (int j = 1; j <= alg.l(); ++j) REQUIRE(alg.sq(0, alg.gen_beta(j)) == alg.gen_beta(j));
    // top Steenrod component is the square
    REQUIRE(alg.sq(1, alg.alpha()) == alg.mul(alg.alpha(), alg.alpha()));
    for (int i = 2; i <= alg.k(); ++i) {
        const auto g = alg.gen_alpha(i);
        REQUIRE(alg.sq(m[i - 1], g) == alg.mul(g, g));
    }
    for (int j = 1; j <= alg.l(); ++j) {
        const auto g = alg.gen_beta(j);
        REQUIRE(alg.sq(n[j - 1], g) == alg.mul(g, g));
    }
}

}  // namespace

TEST_CASE("hypothesis checks reject malformed tuples", "[ppsalg]") {
    REQUIRE_THROWS_AS(PPSAlgebra::build({}, {}, {}), HypothesisViolation);
    REQUIRE_THROWS_AS(PPSAlgebra::build({3, 1}, {}, {}), HypothesisViolation);   // m unsorted
    REQUIRE_THROWS_AS(PPSAlgebra::build({3}, {2}, {1}), HypothesisViolation);    // m_k > n_1
    REQUIRE_THROWS_AS(PPSAlgebra::build({2}, {3, 2}, {1, 1}), HypothesisViolation);  // n unsorted
    REQUIRE_THROWS_AS(PPSAlgebra::build({2}, {3}, {4}), HypothesisViolation);    // p > n
    REQUIRE_THROWS_AS(PPSAlgebra::build({2}, {3}, {0}), HypothesisViolation);    // p < 1
    // inconsistent presentation: m1 even, equal m_i, no p_j = 1
    REQUIRE_THROWS_AS(PPSAlgebra::build({2, 2}, {2}, {2}), HypothesisViolation);
}

TEST_CASE("small Dold-type algebras", "[ppsalg]") {
    // k=2, m=(1,2): F2[a]/(a^2) (x) E(a2) with deg a2 = 2
    PPSAlgebra alg = PPSAlgebra::build({1, 2}, {}, {});
    REQUIRE(alg.betti_vector() == std::vector<long>{1, 1, 1, 1});

    // m=(1), (n,p)=(2,1): dims (1,1,1,1), dim 3
    PPSAlgebra dold = PPSAlgebra::build({1}, {2}, {1});
    REQUIRE(dold.dim() == 3);
    REQUIRE(dold.betti_vector() == std::vector<long>{1, 1, 1, 1});
    REQUIRE(dold.total_dim() == 4);
}

TEST_CASE("alpha truncates at a^{m1}", "[ppsalg]") {
    PPSAlgebra alg = PPSAlgebra::build({3}, {4}, {2});
    REQUIRE_FALSE(alg.alpha_power(3) == alg.zero());
    REQUIRE(alg.alpha_power(4) == alg.zero());
    REQUIRE(alg.mul(alg.alpha_power(2), alg.alpha_power(2)) == alg.zero());
}

TEST_CASE("beta squares reproduce the binomial rule", "[ppsalg]") {
    // b^2 = C(n+1-p, n) a^n b
    {
        PPSAlgebra alg = PPSAlgebra::build({3}, {3}, {1});  // C(3,3)=1: b^2 = a^3 b
        auto b = alg.gen_beta(1);
        REQUIRE(alg.mul(b, b) == alg.mul(alg.alpha_power(3), b));
        REQUIRE_FALSE(alg.mul(b, b) == alg.zero());
    }
    {
        PPSAlgebra alg = PPSAlgebra::build({3}, {3}, {3});  // C(1,3)=0: b^2 = 0
        auto b = alg.gen_beta(1);
        REQUIRE(alg.mul(b, b) == alg.zero());
    }
    {
        // p = 2: C(n-1, n) = 0 always
        PPSAlgebra alg = PPSAlgebra::build({5}, {5}, {2});
        auto b = alg.gen_beta(1);
        REQUIRE(alg.mul(b, b) == alg.zero());
    }
}

TEST_CASE("conditional a_i^2 relation", "[ppsalg]") {
    // m1 = 2 even, m2 = 2 = m1, and p has a 1: a2^2 = a^2 a2
    PPSAlgebra alg = PPSAlgebra::build({2, 2}, {2}, {1});
    REQUIRE(alg.conditional_square_active());
    auto a2 = alg.gen_alpha(2);
    REQUIRE(alg.mul(a2, a2) == alg.mul(alg.alpha_power(2), a2));
    REQUIRE_FALSE(alg.mul(a2, a2) == alg.zero());

    // m1 odd: exterior square vanishes
    PPSAlgebra ext = PPSAlgebra::build({3, 3}, {3}, {2});
    REQUIRE_FALSE(ext.conditional_square_active());
    auto g = ext.gen_alpha(2);
    REQUIRE(ext.mul(g, g) == ext.zero());
}

TEST_CASE("Steenrod squares on generators", "[ppsalg]") {
    PPSAlgebra alg = PPSAlgebra::build({4}, {5, 6}, {2, 3});
    // Sq(a) = a + a^2
    REQUIRE(alg.total_sq(alg.alpha()) ==
            alg.add(alg.alpha(), alg.mul(alg.alpha(), alg.alpha())));
    // Sq(b_j) = (1+a)^{n_j+1-p_j} b_j
    for (int j = 1; j <= 2; ++j) {
        const int expo = alg.n()[j - 1] + 1 - alg.p()[j - 1];
        PPSAlgebra::Element expect = alg.zero();
        for (int t = 0; t <= alg.m1() && t <= alg.n()[j - 1]; ++t)
            if (binomial_is_odd(expo, t))
                expect = alg.add(expect, alg.mul(alg.alpha_power(t), alg.gen_beta(j)));
        REQUIRE(alg.total_sq(alg.gen_beta(j)) == expect);
    }
    // Sq(a_i) = (1+a)^{m_i+1} a_i
    PPSAlgebra two = PPSAlgebra::build({2, 3}, {4}, {1});
    const int expo = two.m()[1] + 1;
    PPSAlgebra::Element expect = two.zero();
    for (int t = 0; t <= two.m1() && t <= two.m()[1]; ++t)
        if (binomial_is_odd(expo, t))
            expect = two.add(expect, two.mul(two.alpha_power(t), two.gen_alpha(2)));
    REQUIRE(two.total_sq(two.gen_alpha(2)) == expect);
}

TEST_CASE("total Steenrod square is multiplicative", "[ppsalg]") {
    PPSAlgebra alg = PPSAlgebra::build({3, 4}, {4, 6}, {1, 3});
    std::vector<PPSAlgebra::Element> gens = {alg.alpha(), alg.gen_alpha(2), alg.gen_beta(1),
                                             alg.gen_beta(2)};
    for (const auto& x : gens)
        for (const auto& y : gens) {
            REQUIRE(alg.total_sq(alg.mul(x, y)) ==
                    alg.mul(alg.total_sq(x), alg.total_sq(y)));
        }
    // and on a three-fold product
    auto xyz = alg.mul(alg.mul(alg.alpha(), alg.gen_beta(1)), alg.gen_beta(2));
    REQUIRE(alg.total_sq(xyz) ==
            alg.mul(alg.mul(alg.total_sq(alg.alpha()), alg.total_sq(alg.gen_beta(1))),
                    alg.total_sq(alg.gen_beta(2))));
}

TEST_CASE("sq components vanish outside 0..deg", "[ppsalg]") {
    PPSAlgebra alg = PPSAlgebra::build({3}, {4}, {2});
    auto b = alg.gen_beta(1);  // degree 4
    REQUIRE(alg.sq(5, b) == alg.zero());
    REQUIRE(alg.sq(-1, b) == alg.zero());
    auto ab = alg.mul(alg.alpha(), b);  // degree 5
    REQUIRE(alg.sq(6, ab) == alg.zero());
    REQUIRE(alg.sq(5, ab) == alg.mul(ab, ab));
}

TEST_CASE("random hypothesis-satisfying tuples", "[ppsalg]") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> kd(1, 3), ld(0, 2), dd(1, 8);
    int built = 0;
    int attempts = 0;
    while (built < 20 && attempts < 500) {
        ++attempts;
        const int k = kd(rng), l = ld(rng);
        std::vector<int> m, n, p;
        for (int i = 0; i < k; ++i) m.push_back(dd(rng));
        std::sort(m.begin(), m.end());
        bool ok = true;
        for (int j = 0; j < l; ++j) {
            int nj = dd(rng);
            if (nj < m.back()) nj = m.back();
            n.push_back(nj);
        }
        std::sort(n.begin(), n.end());
        for (int j = 0; j < l; ++j) {
            std::uniform_int_distribution<int> pd(1, n[j]);
            p.push_back(pd(rng));
        }
        try {
            check_tuple(m, n, p);
        } catch (const HypothesisViolation&) {
            ok = false;  // the inconsistent-presentation rejection; redraw
        }
        if (ok) ++built;
    }
    REQUIRE(built == 20);
}

TEST_CASE("basis strings are readable", "[ppsalg]") {
    PPSAlgebra alg = PPSAlgebra::build({2}, {2}, {1});
    REQUIRE(alg.to_string(alg.one()) == "1");
    REQUIRE(alg.to_string(alg.alpha()) == "a");
    REQUIRE(alg.to_string(alg.mul(alg.alpha_power(2), alg.gen_beta(1))) == "a^2*b1");
}
