#include "torprod/fields.hpp"
#include "torprod/span.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

using namespace torprod;

namespace {

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::vector<Int> random_vec(std::mt19937_64& rng, int len) {
    std::uniform_int_distribution<int> dist(-7, 7);
    std::vector<Int> v(len);
    for (auto& c : v) c = dist(rng);
    return v;
}

}  // namespace

TEST_CASE("quaternion left multiplications are orthogonal", "[fields]") {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<Int> q = random_vec(rng, 4);
        const Int n2 = dot(q, q);
        std::vector<std::vector<Int>> rows{q};
        for (int which = 0; which < 3; ++which) rows.push_back(detail::quat_mul(which, q, 0));
        for (std::size_t a = 0; a < 4; ++a)
            for (std::size_t b = 0; b < 4; ++b) {
                REQUIRE(dot(rows[a], rows[b]) == (a == b ? n2 : Int(0)));
            }
        // composition: i(jq) = kq
        REQUIRE(detail::quat_mul(0, detail::quat_mul(1, q, 0), 0) == detail::quat_mul(2, q, 0));
    }
}

TEST_CASE("octonion table satisfies the Fano relations", "[fields]") {
    const auto& t = detail::octonion_table().t;
    REQUIRE(t[1][2] == std::pair<int, int>{1, 4});  // e1 e2 = e4
    REQUIRE(t[2][4] == std::pair<int, int>{1, 1});
    REQUIRE(t[4][1] == std::pair<int, int>{1, 2});
    REQUIRE(t[2][3] == std::pair<int, int>{1, 5});
    REQUIRE(t[7][1] == std::pair<int, int>{1, 3});  // wrap-around triple (7,1,3)
    REQUIRE(t[2][1] == std::pair<int, int>{-1, 4});
    REQUIRE(t[3][3] == std::pair<int, int>{-1, 0});
    REQUIRE(t[0][5] == std::pair<int, int>{1, 5});

    // e_u x is orthogonal to x and to e_v x (u != v), with |e_u x| = |x|
    std::mt19937_64 rng(13);
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<Int> x = random_vec(rng, 8);
        const Int n2 = dot(x, x);
        std::vector<std::vector<Int>> rows{x};
        for (int unit = 1; unit <= 7; ++unit) rows.push_back(detail::oct_mul(unit, x, 0));
        for (std::size_t a = 0; a < 8; ++a)
            for (std::size_t b = 0; b < 8; ++b) {
                REQUIRE(dot(rows[a], rows[b]) == (a == b ? n2 : Int(0)));
            }
    }
}

TEST_CASE("linear field counts per sphere", "[fields]") {
    const int ms[] = {1, 3, 5, 7, 9, 11, 15};
    const std::size_t counts[] = {1, 3, 1, 7, 1, 3, 7};
    for (int i = 0; i < 7; ++i) REQUIRE(linear_sphere_fields(ms[i]).fields.size() == counts[i]);
    // even spheres give the empty family, not an error
    FieldFamily even = linear_sphere_fields(4);
    REQUIRE(even.fields.empty());
    REQUIRE(even.factors.size() == 1);
    REQUIRE_THROWS_AS(linear_sphere_fields(0), InputError);
}

TEST_CASE("linear families verify at many seeds", "[fields]") {
    for (int m : {1, 3, 7, 11, 15}) {
        FieldFamily fam = linear_sphere_fields(m);
        VerificationReport rep = verify_family(fam, 50, 0);
        INFO("m = " << m);
        REQUIRE(rep.passed);
        REQUIRE(rep.fields == sp_constructed(m));
    }
}

TEST_CASE("mixing construction field counts", "[fields]") {
    REQUIRE(build_fields_thm63(3, 5, 3).fields.size() == 5);  // 3 + p - 1
    REQUIRE(build_fields_thm63(1, 2, 1).fields.size() == 1);
    REQUIRE(toric_cp1_field_family({3}, 1).fields.size() == 4);  // (3 - 1) + 2
    REQUIRE(toric_cp1_field_family({3}, 2).fields.size() == 5);
    REQUIRE(pps_field_family({1, 1}, {2}, {1}).fields.size() == 2);
    REQUIRE(pps_field_family({3}, {5, 6}, {3, 2}).fields.size() == 6);
}

TEST_CASE("constructed families pass exact verification", "[fields]") {
    const std::uint64_t seeds[] = {0, 1, 2, 7, 42, 123};
    FieldFamily thm63 = build_fields_thm63(3, 5, 3);
    FieldFamily thm65 = toric_cp1_field_family({3}, 1);
    FieldFamily pps = pps_field_family({1, 3}, {4, 5}, {2, 1});
    for (std::uint64_t s : seeds) {
        REQUIRE(verify_family(thm63, 100, s).passed);
        REQUIRE(verify_family(thm65, 100, s).passed);
        REQUIRE(verify_family(pps, 50, s).passed);
    }
}

TEST_CASE("corrupted mixing fails exactly as documented", "[fields]") {
    // at x = e_1, y = e_{n+1} the corrupted fields w_{R+j-1} = y_j (v_R, y)
    // vanish (y_1 = .. = y_p = 0), so independence fails while tangency and
    // equivariance still hold there
    FieldFamily good = build_fields_thm63(3, 5, 3);
    FieldFamily bad = build_fields_thm63(3, 5, 3, true);
    Point pt = {{1, 0, 0, 0}, {0, 0, 0, 0, 0, 1}};

    PointCheck ok = verify_at(good, pt);
    REQUIRE(ok.ok());

    PointCheck broken = verify_at(bad, pt);
    REQUIRE(broken.tangent);
    REQUIRE(broken.equivariant);
    REQUIRE_FALSE(broken.independent);

    // generically the corrupted family is not even tangent
    VerificationReport rep = verify_family(bad, 50, 3);
    REQUIRE_FALSE(rep.passed);
    REQUIRE(rep.failures.size() > 0);
}

TEST_CASE("verification is scale invariant", "[fields]") {
    FieldFamily fam = build_fields_thm63(3, 5, 2);
    Point pt = {{2, -1, 3, 5}, {1, 1, 0, -2, 4, 0}};
    Point scaled = pt;
    for (auto& vec : scaled)
        for (Int& c : vec) c *= 3;
    PointCheck a = verify_at(fam, pt);
    PointCheck b = verify_at(fam, scaled);
    REQUIRE(a.tangent == b.tangent);
    REQUIRE(a.independent == b.independent);
    REQUIRE(a.equivariant == b.equivariant);
    REQUIRE(a.ok());
}

TEST_CASE("construction input errors", "[fields]") {
    REQUIRE_THROWS_AS(product_base_family({}), EmptyBase);
    REQUIRE_THROWS_AS(extend_family(linear_sphere_fields(2), 3, 1), EmptyBase);
    REQUIRE_THROWS_AS(build_fields_thm63(3, 5, 0), BadP);
    REQUIRE_THROWS_AS(build_fields_thm63(3, 5, 6), BadP);
    try {
        build_fields_thm63(3, 5, 6);
        FAIL("expected BadP");
    } catch (const BadP& e) {
        REQUIRE(std::string(e.what()).find("1 <= p <= n") != std::string::npos);
    }
}

TEST_CASE("empty families verify vacuously", "[fields]") {
    FieldFamily even = linear_sphere_fields(4);
    VerificationReport rep = verify_family(even, 10, 0);
    REQUIRE(rep.passed);
    REQUIRE(rep.fields == 0);
}

TEST_CASE("reports are identical across thread counts", "[fields]") {
    FieldFamily bad = build_fields_thm63(3, 5, 3, true);
    VerificationReport serial = verify_family(bad, 40, 5, 1);
    VerificationReport pooled = verify_family(bad, 40, 5, 3);
    REQUIRE(serial.passed == pooled.passed);
    REQUIRE(serial.failures.size() == pooled.failures.size());
    for (std::size_t i = 0; i < serial.failures.size(); ++i) {
        REQUIRE(serial.failures[i].trial == pooled.failures[i].trial);
        REQUIRE(serial.failures[i].check == pooled.failures[i].check);
        REQUIRE(serial.failures[i].point == pooled.failures[i].point);
    }

    FieldFamily good = toric_cp1_field_family({7}, 2);
    REQUIRE(verify_family(good, 30, 9, 1).passed);
    REQUIRE(verify_family(good, 30, 9, 4).passed);
}
