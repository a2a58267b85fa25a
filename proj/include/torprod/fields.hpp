#pragma once

#include "torprod/errors.hpp"
#include "torprod/matrix.hpp"
#include "torprod/numeric.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

namespace torprod {

// Explicit equivariant vector fields on products of spheres, and their exact
// verification.
//
// Points are integer vectors of arbitrary (nonzero) radius rather than unit
// rational points.  Every field formula below is homogenized so that the
// tangency identity <w_f, x_f> = 0 holds at any radius: the literal "-1" of
// the mixing formula (valid on the unit sphere, where |y|^2 = 1) is carried
// as -|y|^2.  Linear independence over Q is scale-invariant, so rank checks
// at integer points decide rank at the corresponding unit points.

struct SphereFactor {
    int n = 0;  // S^n, ambient R^{n+1}
    int p = 0;  // involution fixes first p coordinates, negates the rest; p=0 is antipodal
};

using Point = std::vector<std::vector<Int>>;  // one integer vector per factor
using FieldEval = std::function<Point(const Point&)>;

struct FieldFamily {
    std::vector<SphereFactor> factors;
    std::vector<FieldEval> fields;
};

inline Point zero_tangent(const std::vector<SphereFactor>& factors) {
    Point z;
    for (const auto& f : factors) z.emplace_back(f.n + 1, Int(0));
    return z;
}

inline std::vector<Int> involute(const SphereFactor& f, const std::vector<Int>& v) {
    std::vector<Int> out = v;
    for (int t = f.p; t <= f.n; ++t) out[t] = -out[t];
    return out;
}

inline Point involute_point(const std::vector<SphereFactor>& factors, const Point& pt) {
    Point out;
    for (std::size_t i = 0; i < factors.size(); ++i) out.push_back(involute(factors[i], pt[i]));
    return out;
}

namespace detail {

// Left multiplication tables.  Quaternions: i, j, k acting on (a,b,c,d).
inline std::vector<Int> quat_mul(int which, const std::vector<Int>& q, std::size_t off) {
    const Int &a = q[off], &b = q[off + 1], &c = q[off + 2], &d = q[off + 3];
    switch (which) {
        case 0: return {-b, a, -d, c};   // i*q
        case 1: return {-c, d, a, -b};   // j*q
        default: return {-d, -c, b, a};  // k*q
    }
}

// Octonion multiplication from the Fano relations e_i e_{i+1} = e_{i+3}
// (indices 1..7 cyclic).  table[i][j] = (sign, k) with e_i e_j = sign * e_k.
struct OctonionTable {
    std::array<std::array<std::pair<int, int>, 8>, 8> t{};
    OctonionTable() {
        for (int i = 0; i < 8; ++i) t[0][i] = t[i][0] = {1, i};
        for (int i = 1; i < 8; ++i) t[i][i] = {-1, 0};
        auto wrap = [](int v) { return (v - 1) % 7 + 1; };
        for (int i = 1; i <= 7; ++i) {
            const int a = i, b = wrap(i + 1), c = wrap(i + 3);
            t[a][b] = {1, c};
            t[b][c] = {1, a};
            t[c][a] = {1, b};
            t[b][a] = {-1, c};
            t[c][b] = {-1, a};
            t[a][c] = {-1, b};
        }
    }
};

inline const OctonionTable& octonion_table() {
    static const OctonionTable tbl;
    return tbl;
}

inline std::vector<Int> oct_mul(int unit, const std::vector<Int>& x, std::size_t off) {
    const OctonionTable& tbl = octonion_table();
    std::vector<Int> out(8, 0);
    for (int j = 0; j < 8; ++j) {
        auto [sign, k] = tbl.t[unit][j];
        out[k] += sign * x[off + j];
    }
    return out;
}

}  // namespace detail

// Linear equivariant fields on S^m: 1 field via the complex pairing when
// m+1 = 2 mod 4, 3 quaternionic fields when m+1 = 4 mod 8, 7 octonionic
// fields when 8 | m+1.  Even m gives the empty family.
inline FieldFamily linear_sphere_fields(int m) {
    if (m < 1) throw InputError("sphere dimension must be at least 1");
    FieldFamily fam;
    fam.factors.push_back({m, 0});
    if (m % 2 == 0) return fam;
    const int amb = m + 1;
    if (amb % 8 == 0) {
        for (int unit = 1; unit <= 7; ++unit)
            fam.fields.push_back([unit, amb](const Point& pt) {
                Point out{std::vector<Int>(amb, 0)};
                for (int off = 0; off < amb; off += 8) {
                    std::vector<Int> blk = detail::oct_mul(unit, pt[0], off);
                    for (int t = 0; t < 8; ++t) out[0][off + t] = blk[t];
                }
                return out;
            });
    } else if (amb % 4 == 0) {
        for (int which = 0; which < 3; ++which)
            fam.fields.push_back([which, amb](const Point& pt) {
                Point out{std::vector<Int>(amb, 0)};
                for (int off = 0; off < amb; off += 4) {
                    std::vector<Int> blk = detail::quat_mul(which, pt[0], off);
                    for (int t = 0; t < 4; ++t) out[0][off + t] = blk[t];
                }
                return out;
            });
    } else {
        fam.fields.push_back([amb](const Point& pt) {
            Point out{std::vector<Int>(amb, 0)};
            for (int off = 0; off < amb; off += 2) {
                out[0][off] = -pt[0][off + 1];
                out[0][off + 1] = pt[0][off];
            }
            return out;
        });
    }
    return fam;
}

// Product of antipodal sphere factors S^{m_1} x ... x S^{m_k}; each factor's
// linear fields extended by zero.
inline FieldFamily product_base_family(const std::vector<int>& m) {
    if (m.empty()) throw EmptyBase("base product of spheres is empty");
    FieldFamily fam;
    for (int v : m) fam.factors.push_back({v, 0});
    for (std::size_t i = 0; i < m.size(); ++i) {
        FieldFamily single = linear_sphere_fields(m[i]);
        for (const FieldEval& f : single.fields) {
            auto factors = fam.factors;  // factors are fixed before fields are added
            fam.fields.push_back([f, i, factors](const Point& pt) {
                Point out = zero_tangent(factors);
                Point sub = f(Point{pt[i]});
                out[i] = sub[0];
                return out;
            });
        }
    }
    return fam;
}

// One mixing step: given a family with R >= 1 fields on the product X, add
// the factor S^n with involution fixing the first p coordinates and return
// R+p-1 fields on X x S^n:
//   w_i       = (v_i, 0)                      for i < R,
//   w_{R+j-1} = (y_j v_R, y_j y - |y|^2 e_j)  for j = 1..p.
// `corrupted` drops the -|y|^2 e_j term (a regression fixture: the family
// then degenerates at points with y_1 = ... = y_p = 0).
inline FieldFamily extend_family(const FieldFamily& base, int n, int p, bool corrupted = false) {
    if (base.fields.empty()) throw EmptyBase("the mixing construction needs at least one field");
    if (p < 1 || p > n) throw BadP("p must satisfy 1 <= p <= n; got p = " + std::to_string(p) +
                                   ", n = " + std::to_string(n));
    FieldFamily fam;
    fam.factors = base.factors;
    fam.factors.push_back({n, p});
    const std::size_t yidx = fam.factors.size() - 1;
    const std::size_t R = base.fields.size();
    for (std::size_t i = 0; i + 1 < R; ++i) {
        FieldEval f = base.fields[i];
        fam.fields.push_back([f, yidx](const Point& pt) {
            Point sub(pt.begin(), pt.begin() + yidx);
            Point out = f(sub);
            out.emplace_back(pt[yidx].size(), Int(0));
            return out;
        });
    }
    FieldEval last = base.fields[R - 1];
    for (int j = 1; j <= p; ++j) {
        fam.fields.push_back([last, yidx, j, corrupted](const Point& pt) {
            const std::vector<Int>& y = pt[yidx];
            const Int& yj = y[j - 1];
            Point sub(pt.begin(), pt.begin() + yidx);
            Point out = last(sub);
            for (auto& vec : out)
                for (Int& c : vec) c *= yj;
            std::vector<Int> tail(y.size());
            Int norm2 = 0;
            for (const Int& c : y) norm2 += c * c;
            for (std::size_t t = 0; t < y.size(); ++t) tail[t] = yj * y[t];
            if (!corrupted) tail[j - 1] -= norm2;
            out.push_back(std::move(tail));
            return out;
        });
    }
    return fam;
}

// sp(P(m;(n,p))) >= sp(S^m) + p - 1: fields on S^m x S^n.
inline FieldFamily build_fields_thm63(int m, int n, int p, bool corrupted = false) {
    return extend_family(linear_sphere_fields(m), n, p, corrupted);
}

// CP^1 identified with S^2, conjugation with the involution fixing the
// first two coordinates: one mixing step with (n, p) = (2, 2).
inline FieldFamily build_fields_thm65(const FieldFamily& base) {
    return extend_family(base, 2, 2);
}

// Iterated families.
inline FieldFamily pps_field_family(const std::vector<int>& m, const std::vector<int>& n,
                                    const std::vector<int>& p) {
    FieldFamily fam = product_base_family(m);
    for (std::size_t j = 0; j < n.size(); ++j) fam = extend_family(fam, n[j], p[j]);
    return fam;
}

inline FieldFamily toric_cp1_field_family(const std::vector<int>& m, int ell) {
    FieldFamily fam = product_base_family(m);
    for (int j = 0; j < ell; ++j) fam = build_fields_thm65(fam);
    return fam;
}

struct PointCheck {
    bool tangent = true;
    bool independent = true;
    bool equivariant = true;
    bool ok() const { return tangent && independent && equivariant; }
};

inline PointCheck verify_at(const FieldFamily& fam, const Point& pt) {
    PointCheck res;
    std::size_t amb = 0;
    for (const auto& f : fam.factors) amb += f.n + 1;
    std::vector<Point> values;
    for (const FieldEval& f : fam.fields) values.push_back(f(pt));

    for (const Point& val : values)
        for (std::size_t i = 0; i < fam.factors.size(); ++i) {
            Int dot = 0;
            for (std::size_t t = 0; t < val[i].size(); ++t) dot += val[i][t] * pt[i][t];
            if (dot != 0) res.tangent = false;
        }

    if (!fam.fields.empty()) {
        IntMatrix rows(values.size(), amb);
        for (std::size_t r = 0; r < values.size(); ++r) {
            std::size_t col = 0;
            for (const auto& vec : values[r])
                for (const Int& c : vec) rows(r, col++) = c;
        }
        if (bareiss_rank(rows) != values.size()) res.independent = false;
    }

    Point flipped = involute_point(fam.factors, pt);
    for (std::size_t k = 0; k < fam.fields.size(); ++k) {
        Point lhs = fam.fields[k](flipped);
        Point rhs;
        for (std::size_t i = 0; i < fam.factors.size(); ++i)
            rhs.push_back(involute(fam.factors[i], values[k][i]));
        if (lhs != rhs) res.equivariant = false;
    }
    return res;
}

struct TrialFailure {
    long trial = 0;
    std::string check;
    std::string point;
};

struct VerificationReport {
    long trials = 0;
    long fields = 0;
    std::uint64_t seed = 0;
    bool passed = true;
    std::vector<TrialFailure> failures;
};

namespace detail {

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t trial) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (trial + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

inline Point sample_point(const std::vector<SphereFactor>& factors, std::uint64_t trial_seed) {
    std::mt19937_64 rng(trial_seed);
    std::uniform_int_distribution<int> dist(-9, 9);
    Point pt;
    for (const auto& f : factors) {
        std::vector<Int> v(f.n + 1);
        for (;;) {
            bool nonzero = false;
            for (auto& c : v) {
                int x = dist(rng);
                c = x;
                if (x != 0) nonzero = true;
            }
            if (nonzero) break;
        }
        pt.push_back(std::move(v));
    }
    return pt;
}

inline std::string point_string(const Point& pt) {
    std::string s;
    for (const auto& vec : pt) {
        s += "(";
        for (std::size_t t = 0; t < vec.size(); ++t) {
            if (t) s += ",";
            s += vec[t].str();
        }
        s += ")";
    }
    return s;
}

}  // namespace detail

// Randomized exact verification: tangency, rank (at the sampled point and
// at its doubled representative), equivariance.  Trials are independent and
// may run on several threads; the report is merged in trial order, so the
// output is identical for every thread count.
inline VerificationReport verify_family(const FieldFamily& fam, long trials, std::uint64_t seed,
                                        int threads = 1) {
    VerificationReport rep;
    rep.trials = trials;
    rep.fields = static_cast<long>(fam.fields.size());
    rep.seed = seed;
    std::vector<std::vector<TrialFailure>> per_trial(trials);

    auto run_trial = [&](long t) {
        Point pt = detail::sample_point(fam.factors, detail::mix_seed(seed, t));
        PointCheck chk = verify_at(fam, pt);
        Point doubled = pt;
        for (auto& vec : doubled)
            for (Int& c : vec) c *= 2;
        PointCheck chk2 = verify_at(fam, doubled);
        const std::string ps = detail::point_string(pt);
        if (!chk.tangent) per_trial[t].push_back({t, "tangency", ps});
        if (!chk.independent) per_trial[t].push_back({t, "independence", ps});
        if (!chk.equivariant) per_trial[t].push_back({t, "equivariance", ps});
        if (chk.independent != chk2.independent)
            per_trial[t].push_back({t, "scale-invariance", ps});
    };

    if (threads <= 1) {
        for (long t = 0; t < trials; ++t) run_trial(t);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < threads; ++w)
            pool.emplace_back([&, w]() {
                for (long t = w; t < trials; t += threads) run_trial(t);
            });
        for (auto& th : pool) th.join();
    }
    for (long t = 0; t < trials; ++t)
        for (auto& f : per_trial[t]) rep.failures.push_back(std::move(f));
    rep.passed = rep.failures.empty();
    return rep;
}

}  // namespace torprod
