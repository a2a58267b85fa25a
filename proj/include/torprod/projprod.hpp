#pragma once

#include "torprod/numeric.hpp"
#include "torprod/pps_algebra.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace torprod {

// Family-level invariants of the three constructions: total Stiefel-Whitney
// classes in truncated mod-2 polynomial rings, rational Betti numbers, the
// tensor description of mod-2 cohomology over a sphere-product base, and
// Euler characteristics.

// Inhomogeneous mod-2 class in F2[x_1..x_v] / (x_i^{cap_i + 1}); each
// variable carries a topological degree (weight) used for grading output.
struct TruncPoly {
    std::vector<std::string> names;
    std::vector<int> caps;
    std::vector<int> weights;
    std::set<std::vector<int>> terms;

    static TruncPoly ring(std::vector<std::string> names, std::vector<int> caps,
                          std::vector<int> weights) {
        TruncPoly p;
        p.names = std::move(names);
        p.caps = std::move(caps);
        p.weights = std::move(weights);
        return p;
    }

    std::size_t vars() const { return names.size(); }

    TruncPoly monomial(const std::vector<int>& e) const {
        TruncPoly p = ring(names, caps, weights);
        p.insert(e);
        return p;
    }
    TruncPoly one() const { return monomial(std::vector<int>(vars(), 0)); }
    TruncPoly var(std::size_t i) const {
        std::vector<int> e(vars(), 0);
        e[i] = 1;
        return monomial(e);
    }

    void insert(const std::vector<int>& e) {  // F2 add with truncation
        for (std::size_t i = 0; i < vars(); ++i)
            if (e[i] > caps[i]) return;
        auto it = terms.find(e);
        if (it == terms.end()) terms.insert(e);
        else terms.erase(it);
    }

    TruncPoly add(const TruncPoly& o) const {
        TruncPoly p = *this;
        for (const auto& e : o.terms) p.insert(e);
        return p;
    }

    TruncPoly mul(const TruncPoly& o) const {
        TruncPoly p = ring(names, caps, weights);
        for (const auto& a : terms)
            for (const auto& b : o.terms) {
                std::vector<int> e(vars());
                for (std::size_t i = 0; i < vars(); ++i) e[i] = a[i] + b[i];
                p.insert(e);
            }
        return p;
    }

    TruncPoly pow(int e) const {
        TruncPoly p = one();
        for (int i = 0; i < e; ++i) p = p.mul(*this);
        return p;
    }

    // Inverse of a class with constant term, by degreewise back-substitution
    // in the finite truncated ring.
    TruncPoly inverse() const {
        std::vector<int> zero(vars(), 0);
        if (!terms.count(zero)) throw InputError("class has no constant term; not invertible");
        TruncPoly rest = *this;
        rest.terms.erase(zero);  // this = 1 + rest, rest nilpotent
        TruncPoly inv = one();
        TruncPoly power = one();
        for (;;) {
            power = power.mul(rest);
            if (power.terms.empty()) break;
            inv = inv.add(power);
        }
        return inv;
    }

    int weighted_degree(const std::vector<int>& e) const {
        int d = 0;
        for (std::size_t i = 0; i < vars(); ++i) d += e[i] * weights[i];
        return d;
    }

    TruncPoly component(int t) const {  // homogeneous part of topological degree t
        TruncPoly p = ring(names, caps, weights);
        for (const auto& e : terms)
            if (weighted_degree(e) == t) p.terms.insert(e);
        return p;
    }

    bool is_one() const {
        return terms.size() == 1 && *terms.begin() == std::vector<int>(vars(), 0);
    }

    std::string mono_string(const std::vector<int>& e) const {
        std::string s;
        for (std::size_t i = 0; i < vars(); ++i) {
            if (e[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += names[i];
            if (e[i] > 1) s += "^" + std::to_string(e[i]);
        }
        return s.empty() ? "1" : s;
    }

    std::string to_string() const {
        if (terms.empty()) return "0";
        std::vector<std::vector<int>> sorted(terms.begin(), terms.end());
        std::stable_sort(sorted.begin(), sorted.end(),
                         [this](const std::vector<int>& a, const std::vector<int>& b) {
                             return weighted_degree(a) < weighted_degree(b);
                         });
        std::string s;
        for (const auto& e : sorted) {
            if (!s.empty()) s += " + ";
            s += mono_string(e);
        }
        return s;
    }
};

namespace detail {

// (1 + x_i)^e in the truncated ring; negative e uses the inverse of (1+x_i),
// which exists because x_i is nilpotent.
inline TruncPoly one_plus_var_pow(const TruncPoly& ring, std::size_t i, int e) {
    TruncPoly base = ring.one().add(ring.var(i));
    if (e >= 0) return base.pow(e);
    return base.inverse().pow(-e);
}

inline void check_sorted_m(const std::vector<int>& m) {
    if (m.empty()) throw HypothesisViolation("k >= 1 fails: no m-spheres given");
    for (std::size_t i = 1; i < m.size(); ++i)
        if (m[i - 1] > m[i])
            throw HypothesisViolation("m_" + std::to_string(i) + " <= m_" + std::to_string(i + 1) +
                                      " fails: " + std::to_string(m[i - 1]) + " > " +
                                      std::to_string(m[i]));
}

inline void check_m_greater_one(const std::vector<int>& m, const std::string& what) {
    check_sorted_m(m);
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] <= 1)
            throw HypothesisViolation(what + " requires every m_i > 1; m_" + std::to_string(i + 1) +
                                      " = " + std::to_string(m[i]));
}

}  // namespace detail

struct SWClass {
    TruncPoly w;
    std::string formula;  // human-readable product form before expansion
    bool trivial = false;
};

// W = (1+a)^{sum(m_i+1) + sum(n_j-p_j+2)} in F2[a]/(a^{m_1+1}), a the class
// restricting to the RP^{m_1} generator.
inline SWClass pps_total_sw(const std::vector<int>& m, const std::vector<int>& n,
                            const std::vector<int>& p) {
    PPSAlgebra::build(m, n, p);  // hypothesis validation
    int expo = 0;
    for (int v : m) expo += v + 1;
    for (std::size_t j = 0; j < n.size(); ++j) expo += n[j] - p[j] + 2;
    TruncPoly ring = TruncPoly::ring({"a"}, {m[0]}, {1});
    SWClass out;
    out.w = detail::one_plus_var_pow(ring, 0, expo);
    out.formula = "(1+a)^" + std::to_string(expo);
    out.trivial = out.w.is_one();
    return out;
}

// W = (1+c)^{sum m_i + k - l} * prod (1+c+d_j)^{n_j+1} with c^{m_1+1} = 0,
// d_j^{n_j+1} = 0; deg c = 1, deg d_j = 2.  The exponent of (1+c) may be
// negative; (1+c) is invertible in the truncated ring.
inline SWClass toric_total_sw(const std::vector<int>& m, const std::vector<int>& cp) {
    detail::check_m_greater_one(m, "the toric Stiefel-Whitney formula");
    std::vector<std::string> names{"c"};
    std::vector<int> caps{m[0]}, weights{1};
    for (std::size_t j = 0; j < cp.size(); ++j) {
        if (cp[j] < 1) throw InputError("complex projective factor needs n_j >= 1");
        names.push_back("d" + std::to_string(j + 1));
        caps.push_back(cp[j]);
        weights.push_back(2);
    }
    TruncPoly ring = TruncPoly::ring(names, caps, weights);
    int expo = static_cast<int>(m.size()) - static_cast<int>(cp.size());
    for (int v : m) expo += v;
    TruncPoly w = detail::one_plus_var_pow(ring, 0, expo);
    std::string formula = "(1+c)^" + std::to_string(expo);
    for (std::size_t j = 0; j < cp.size(); ++j) {
        TruncPoly f = ring.one().add(ring.var(0)).add(ring.var(j + 1));
        w = w.mul(f.pow(cp[j] + 1));
        formula += "*(1+c+d" + std::to_string(j + 1) + ")^" + std::to_string(cp[j] + 1);
    }
    SWClass out;
    out.w = w;
    out.formula = formula;
    out.trivial = w.is_one();
    return out;
}

// W = (1+c)^{sum(m_i+1)} * prod (1+d_j)^{n_j+1}; all generators degree 1.
inline SWClass smallcover_total_sw(const std::vector<int>& m, const std::vector<int>& rp) {
    detail::check_m_greater_one(m, "the small-cover Stiefel-Whitney formula");
    std::vector<std::string> names{"c"};
    std::vector<int> caps{m[0]}, weights{1};
    for (std::size_t j = 0; j < rp.size(); ++j) {
        if (rp[j] < 1) throw InputError("real projective factor needs n_j >= 1");
        names.push_back("d" + std::to_string(j + 1));
        caps.push_back(rp[j]);
        weights.push_back(1);
    }
    TruncPoly ring = TruncPoly::ring(names, caps, weights);
    int expo = 0;
    for (int v : m) expo += v + 1;
    TruncPoly w = detail::one_plus_var_pow(ring, 0, expo);
    std::string formula = "(1+c)^" + std::to_string(expo);
    for (std::size_t j = 0; j < rp.size(); ++j) {
        w = w.mul(detail::one_plus_var_pow(ring, j + 1, rp[j] + 1));
        formula += "*(1+d" + std::to_string(j + 1) + ")^" + std::to_string(rp[j] + 1);
    }
    SWClass out;
    out.w = w;
    out.formula = formula;
    out.trivial = w.is_one();
    return out;
}

// Rational Betti numbers of P_{m,(n,p)}: the invariant products
// delta_{i_1}..gamma_{j_v} whose total weight sum(m_i+1) + sum(n_j-p_j+1)
// is even; delta_i has degree m_i, gamma_j degree n_j.
inline std::vector<long> pps_rational_betti(const std::vector<int>& m, const std::vector<int>& n,
                                            const std::vector<int>& p) {
    detail::check_sorted_m(m);
    if (n.size() != p.size()) throw DimensionMismatch("n and p must have the same length");
    for (std::size_t j = 0; j < n.size(); ++j)
        if (p[j] < 1 || p[j] > n[j])
            throw HypothesisViolation("1 <= p_" + std::to_string(j + 1) + " <= n_" +
                                      std::to_string(j + 1) + " fails");
    int dim = 0;
    for (int v : m) dim += v;
    for (int v : n) dim += v;
    std::vector<long> b(dim + 1, 0);
    const std::size_t total = m.size() + n.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << total); ++mask) {
        int weight = 0, deg = 0;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (mask & (std::uint64_t(1) << i)) {
                weight += m[i] + 1;
                deg += m[i];
            }
        for (std::size_t j = 0; j < n.size(); ++j)
            if (mask & (std::uint64_t(1) << (m.size() + j))) {
                weight += n[j] - p[j] + 1;
                deg += n[j];
            }
        if (weight % 2 == 0) b[deg] += 1;
    }
    return b;
}

// Rational Betti numbers of P(S(m), X): A tensor H^*(X; Q), where A is
// spanned by the sphere products with sum(m_i+1) even and the fibre
// contributes rank h_s in degree 2s.
inline std::vector<long> toric_rational_betti(const std::vector<int>& m,
                                              const std::vector<long>& fibre_h) {
    detail::check_sorted_m(m);
    int base_dim = 0;
    for (int v : m) base_dim += v;
    const int fibre_dim = 2 * (static_cast<int>(fibre_h.size()) - 1);
    std::vector<long> b(base_dim + fibre_dim + 1, 0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m.size()); ++mask) {
        int weight = 0, deg = 0;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (mask & (std::uint64_t(1) << i)) {
                weight += m[i] + 1;
                deg += m[i];
            }
        if (weight % 2 != 0) continue;
        for (std::size_t s = 0; s < fibre_h.size(); ++s) b[deg + 2 * s] += fibre_h[s];
    }
    return b;
}

// No rational formula is available for the small-cover family.
[[noreturn]] inline std::vector<long> smallcover_rational_betti() {
    throw HypothesisViolation(
        "no rational Betti formula is available for the small-cover family P(S(m), Y)");
}

// Graded mod-2 dimensions of H^*(P(S(m), F)) as the tensor product of the
// sphere-family ring (fibre = point) with the fibre; valid when every
// m_i > 1.  fibre_f2 lists dim H^s(F; Z2) for s = 0..dim F.
struct TensorCohomology {
    std::vector<long> dims;
    long total = 0;
};

inline std::vector<long> sphere_base_f2_dims(const std::vector<int>& m) {
    // Poincare coefficients of (1+t+...+t^{m_1}) * prod_{i>=2} (1+t^{m_i})
    int dim = 0;
    for (int v : m) dim += v;
    std::vector<long> base(dim + 1, 0);
    for (int a = 0; a <= m[0]; ++a) base[a] = 1;
    for (std::size_t i = 1; i < m.size(); ++i) {
        std::vector<long> next(dim + 1, 0);
        for (int d = 0; d <= dim; ++d) {
            if (base[d] == 0) continue;
            next[d] += base[d];
            if (d + m[i] <= dim) next[d + m[i]] += base[d];
        }
        base = std::move(next);
    }
    return base;
}

inline TensorCohomology tensor_cohomology_dims(const std::vector<int>& m,
                                               const std::vector<long>& fibre_f2) {
    detail::check_m_greater_one(m, "the tensor cohomology description");
    std::vector<long> base = sphere_base_f2_dims(m);
    TensorCohomology out;
    out.dims.assign(base.size() + fibre_f2.size() - 1, 0);
    for (std::size_t r = 0; r < base.size(); ++r)
        for (std::size_t s = 0; s < fibre_f2.size(); ++s) out.dims[r + s] += base[r] * fibre_f2[s];
    for (long d : out.dims) out.total += d;
    return out;
}

// mod-2 Poincare coefficients of a product of projective spaces; step = 2
// for complex factors, 1 for real.
inline std::vector<long> projective_product_f2_dims(const std::vector<int>& n, int step) {
    std::vector<long> dims{1};
    for (int nj : n) {
        std::vector<long> next(dims.size() + nj * step, 0);
        for (std::size_t d = 0; d < dims.size(); ++d)
            for (int e = 0; e <= nj; ++e) next[d + e * step] += dims[d];
        dims = std::move(next);
    }
    return dims;
}

// Euler characteristics per family.
inline Int pps_euler(const std::vector<int>& m, const std::vector<int>& n) {
    for (int v : m)
        if (v % 2 != 0) return 0;
    for (int v : n)
        if (v % 2 != 0) return 0;
    Int x = 1;
    for (std::size_t i = 1; i < m.size() + n.size(); ++i) x *= 2;
    return x;
}

inline Int toric_euler(const std::vector<int>& m, long vertex_count) {
    for (int v : m)
        if (v % 2 != 0) return 0;
    Int x = vertex_count;
    for (std::size_t i = 1; i < m.size(); ++i) x *= 2;
    return x;
}

inline Int smallcover_euler(const std::vector<int>& m, const Int& fibre_euler) {
    for (int v : m)
        if (v % 2 != 0) return 0;
    Int x = fibre_euler;
    for (std::size_t i = 1; i < m.size(); ++i) x *= 2;
    return x;
}

}  // namespace torprod
