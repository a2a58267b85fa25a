#pragma once

#include "torprod/charfunc.hpp"
#include "torprod/matrix.hpp"
#include "torprod/polytope.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace torprod {

// Graded presentation of H^*(X) for X the quasitoric manifold (ring Z, every
// generator of topological degree 2) or small cover (ring F2, degree 1) given
// by a polytope and a valid characteristic function:
//
//     Z[u_1..u_mu] / (I + J),
//
// I the Stanley-Reisner ideal of minimal non-faces, J the linear ideal.
//
// The linear ideal is consumed first: validity makes the lambda rows at any
// vertex unimodular, so the dim variables at a fixed pivot vertex can be
// eliminated with integer coefficients.  The remaining relations are the
// Stanley-Reisner generators pushed through that substitution, enforced
// degree by degree.  Per degree we bring the relation span into a fully
// reduced integer echelon form whose pivots are all +-1; the surviving
// monomials form a Z-basis (or F2-basis) and normal forms stay integral.
// Monomials are ordered lexicographically and elimination prefers to kill
// the largest monomial of a relation, so the basis consists of the
// lexicographically smallest survivors.  A pivot column that cannot be made
// a unit is retried last; if no monomial basis exists at all the build
// aborts (for a valid characteristic function this would mean torsion, which
// cannot happen, so the abort is a diagnostic and not a code path callers
// handle).

using Expo = std::vector<int>;          // exponents over the free variables
using Poly = std::map<Expo, Int>;       // free-variable polynomial

namespace detail {

inline void poly_add_term(Poly& p, const Expo& e, const Int& c, bool mod2) {
    if (c == 0) return;
    auto [it, inserted] = p.emplace(e, c);
    if (!inserted) it->second += c;
    if (mod2) it->second = ((it->second % 2) + 2) % 2;
    if (it->second == 0) p.erase(it);
}

inline Poly poly_mul(const Poly& a, const Poly& b, bool mod2) {
    Poly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Expo e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            poly_add_term(out, e, ca * cb, mod2);
        }
    return out;
}

inline int poly_degree(const Poly& p) {
    int d = -1;
    for (const auto& [e, c] : p) {
        int s = 0;
        for (int x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

// All degree-t monomials in f variables, descending lexicographic order.
inline void enumerate_monomials(int f, int t, std::vector<Expo>& out) {
    out.clear();
    if (f == 0) {
        if (t == 0) out.push_back({});
        return;
    }
    Expo cur(f, 0);
    auto rec = [&](auto&& self, int pos, int rest) -> void {
        if (pos == f - 1) {
            cur[pos] = rest;
            out.push_back(cur);
            return;
        }
        for (int e = rest; e >= 0; --e) {
            cur[pos] = e;
            self(self, pos + 1, rest - e);
        }
    };
    rec(rec, 0, t);
}

// Integer matrix inverse for |det| = 1; A^-1 = det * adj(A).
inline IntMatrix inverse_unimodular(const IntMatrix& a) {
    const std::size_t n = a.rows();
    Int det = determinant(a);
    if (det != 1 && det != -1) throw InvariantFailure("pivot matrix is not unimodular");
    IntMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            IntMatrix minor(n - 1, n - 1);
            for (std::size_t r = 0, mr = 0; r < n; ++r) {
                if (r == j) continue;
                for (std::size_t c = 0, mc = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor(mr, mc) = a(r, c);
                    ++mc;
                }
                ++mr;
            }
            Int cof = determinant(minor);
            if ((i + j) % 2 == 1) cof = -cof;
            inv(i, j) = cof * det;
        }
    return inv;
}

// Matrix inverse over F2 (entries 0/1) by Gaussian elimination.
inline IntMatrix inverse_mod2(IntMatrix a) {
    const std::size_t n = a.rows();
    IntMatrix inv = IntMatrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a(piv, c) % 2 == 0) ++piv;
        if (piv == n) throw InvariantFailure("pivot matrix is singular mod 2");
        a.swap_rows(c, piv);
        inv.swap_rows(c, piv);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a(r, c) % 2 == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                a(r, j) = (a(r, j) + a(c, j)) % 2;
                inv(r, j) = (inv(r, j) + inv(c, j)) % 2;
            }
        }
    }
    return inv;
}

}  // namespace detail

class CohomologyPresentation;

// Homogeneous class in one graded piece, stored as coefficients on the
// surviving monomial basis of its degree.
struct RingClass {
    const CohomologyPresentation* pres = nullptr;
    int udeg = 0;
    std::vector<std::pair<std::size_t, Int>> coords;  // (monomial column, coeff), sorted

    bool is_zero() const { return coords.empty(); }
};

class CohomologyPresentation {
  public:
    struct Options {
        int pivot_vertex = -1;  // -1: vertex with lexicographically largest facet set
        int max_udeg = -1;      // -1: polytope dimension
    };

    static CohomologyPresentation build(const SimplePolytope& p, const CharFunction& cf) {
        return build(p, cf, Options{});
    }

    static CohomologyPresentation build(const SimplePolytope& p, const CharFunction& cf,
                                        const Options& opts) {
        require_valid_char(p, cf);
        CohomologyPresentation pres;
        pres.poly_ = p;
        pres.cf_ = cf;
        pres.mod2_ = cf.ring == Ring::F2;
        pres.var_degree_ = pres.mod2_ ? 1 : 2;
        pres.top_udeg_ = p.dim;
        pres.max_udeg_ = opts.max_udeg >= 0 ? opts.max_udeg : p.dim;
        pres.choose_pivot(opts.pivot_vertex);
        pres.build_substitution();
        pres.build_sr_images();
        pres.tables_.resize(pres.max_udeg_ + 1);
        for (int t = 0; t <= pres.max_udeg_; ++t) pres.build_table(t);
        return pres;
    }

    Ring ring() const { return cf_.ring; }
    bool mod2() const { return mod2_; }
    int var_degree() const { return var_degree_; }
    int top_udeg() const { return top_udeg_; }
    int max_udeg() const { return max_udeg_; }
    const SimplePolytope& polytope() const { return poly_; }
    const CharFunction& char_function() const { return cf_; }
    const std::vector<int>& pivot_facets() const { return pivot_facets_; }
    const std::vector<int>& free_facets() const { return free_facets_; }
    int pivot_vertex() const { return pivot_vertex_; }
    const std::vector<std::vector<int>>& sr_generators() const { return sr_generators_; }

    long rank(int udeg) const {
        if (udeg < 0) return 0;
        if (udeg > max_udeg_) return 0;  // above the computed window; zero above top degree
        return static_cast<long>(tables_[udeg].basis.size());
    }
    std::vector<long> ranks() const {
        std::vector<long> r;
        for (int t = 0; t <= max_udeg_; ++t) r.push_back(rank(t));
        return r;
    }
    long total_rank() const {
        long s = 0;
        for (int t = 0; t <= max_udeg_; ++t) s += rank(t);
        return s;
    }

    // Basis monomials of one degree, lexicographically smallest first.
    std::vector<Expo> basis_monomials(int udeg) const {
        std::vector<Expo> out;
        if (udeg < 0 || udeg > max_udeg_) return out;
        const Table& tb = tables_[udeg];
        for (std::size_t col : tb.basis) out.push_back(tb.monomials[col]);
        return out;
    }

    // Monomial behind a table column, the index space RingClass coords use.
    const Expo& monomial_at(int udeg, std::size_t col) const {
        return tables_.at(udeg).monomials.at(col);
    }

    // Normal form of a free-variable polynomial that is homogeneous of
    // u-degree `udeg` (terms of other degrees are rejected).
    RingClass reduce(const Poly& poly, int udeg) const {
        RingClass cls;
        cls.pres = this;
        cls.udeg = udeg;
        if (poly.empty()) return cls;
        if (udeg > max_udeg_) {
            if (udeg <= top_udeg_)
                throw DimensionMismatch("degree " + std::to_string(udeg) +
                                        " is outside the computed window");
            return cls;  // vanishes above the top degree of the manifold
        }
        const Table& tb = tables_[udeg];
        std::vector<Int> row(tb.monomials.size(), 0);
        for (const auto& [e, c] : poly) {
            if (e.size() != free_facets_.size())
                throw DimensionMismatch("exponent vector has the wrong number of variables");
            int d = 0;
            for (int x : e) d += x;
            if (d != udeg) throw DimensionMismatch("polynomial is not homogeneous of the stated degree");
            row[tb.column.at(e)] += c;
            if (mod2_) row[tb.column.at(e)] = ((row[tb.column.at(e)] % 2) + 2) % 2;
        }
        apply_reducers(tb, row);
        for (std::size_t col = 0; col < row.size(); ++col)
            if (row[col] != 0) cls.coords.emplace_back(col, row[col]);
        return cls;
    }

    // Normal form of a polynomial over all mu facet variables: pivot
    // variables are substituted first.  Exponent vectors have length mu.
    RingClass reduce_full(const std::map<Expo, Int>& poly_full, int udeg) const {
        Poly acc;
        for (const auto& [e, c] : poly_full) {
            if (e.size() != poly_.facet_count())
                throw DimensionMismatch("exponent vector must cover every facet variable");
            Poly term;
            term[Expo(free_facets_.size(), 0)] = c;
            if (mod2_) term[Expo(free_facets_.size(), 0)] = ((c % 2) + 2) % 2;
            if (term.begin()->second == 0) continue;
            for (std::size_t i = 0; i < e.size(); ++i)
                for (int rep = 0; rep < e[i]; ++rep)
                    term = detail::poly_mul(term, facet_images_[i], mod2_);
            for (const auto& [te, tc] : term) detail::poly_add_term(acc, te, tc, mod2_);
        }
        return reduce(acc, udeg);
    }

    // Image of the facet variable u_i (0-based) in the free variables.
    const Poly& facet_image(std::size_t i) const { return facet_images_[i]; }

    Poly to_poly(const RingClass& cls) const {
        check_mine(cls);
        Poly p;
        if (cls.udeg > max_udeg_) return p;
        const Table& tb = tables_[cls.udeg];
        for (const auto& [col, c] : cls.coords) detail::poly_add_term(p, tb.monomials[col], c, mod2_);
        return p;
    }

    RingClass multiply(const RingClass& a, const RingClass& b) const {
        check_mine(a);
        check_mine(b);
        Poly prod = detail::poly_mul(to_poly(a), to_poly(b), mod2_);
        return reduce(prod, a.udeg + b.udeg);
    }

    RingClass add(const RingClass& a, const RingClass& b) const {
        check_mine(a);
        check_mine(b);
        if (a.udeg != b.udeg) throw DimensionMismatch("adding classes of different degrees");
        Poly s = to_poly(a);
        for (const auto& [e, c] : to_poly(b)) detail::poly_add_term(s, e, c, mod2_);
        return reduce(s, a.udeg);
    }

    RingClass scale(const RingClass& a, const Int& c) const {
        check_mine(a);
        Poly s;
        for (const auto& [e, k] : to_poly(a)) detail::poly_add_term(s, e, k * c, mod2_);
        return reduce(s, a.udeg);
    }

    bool equal(const RingClass& a, const RingClass& b) const {
        check_mine(a);
        check_mine(b);
        return a.udeg == b.udeg && a.coords == b.coords;
    }

    // Class of a single facet variable.
    RingClass generator(std::size_t facet) const {
        Poly p = facet_images_[facet];
        return reduce(p, 1);
    }

    std::string monomial_string(const Expo& e, const std::string& prefix) const {
        std::string s;
        for (std::size_t w = 0; w < e.size(); ++w) {
            if (e[w] == 0) continue;
            if (!s.empty()) s += "*";
            s += prefix + std::to_string(free_facets_[w] + 1);
            if (e[w] > 1) s += "^" + std::to_string(e[w]);
        }
        return s.empty() ? "1" : s;
    }

    std::string class_string(const RingClass& cls, const std::string& prefix = "x") const {
        check_mine(cls);
        if (cls.coords.empty()) return "0";
        const Table& tb = tables_[cls.udeg];
        std::string s;
        for (const auto& [col, c] : cls.coords) {
            std::string mono = monomial_string(tb.monomials[col], prefix);
            if (s.empty()) {
                if (c == 1) s = mono;
                else if (c == -1) s = "-" + mono;
                else s = c.str() + "*" + mono;
            } else {
                Int a = abs_int(c);
                s += c < 0 ? " - " : " + ";
                if (a == 1) s += mono;
                else s += a.str() + "*" + mono;
            }
        }
        return s;
    }

  private:
    struct Table {
        std::vector<Expo> monomials;          // descending lex
        std::map<Expo, std::size_t> column;
        std::vector<std::vector<Int>> reducer_rows;  // dense, unit pivot
        std::vector<std::size_t> reducer_pivot;
        std::vector<std::size_t> basis;       // ascending lex (smallest first)
    };

    SimplePolytope poly_;
    CharFunction cf_;
    bool mod2_ = false;
    int var_degree_ = 2;
    int top_udeg_ = 0;
    int max_udeg_ = 0;
    int pivot_vertex_ = 0;
    std::vector<int> pivot_facets_, free_facets_;
    std::vector<Poly> facet_images_;
    std::vector<std::vector<int>> sr_generators_;
    std::vector<Poly> sr_images_;
    std::vector<Table> tables_;

    void check_mine(const RingClass& cls) const {
        if (cls.pres != this) throw PresentationMismatch("class belongs to a different presentation");
    }

    void choose_pivot(int requested) {
        if (requested >= 0) {
            if (requested >= static_cast<int>(poly_.vertex_count()))
                throw InputError("pivot vertex out of range");
            pivot_vertex_ = requested;
        } else {
            pivot_vertex_ = 0;
            for (std::size_t v = 1; v < poly_.vertex_count(); ++v)
                if (poly_.vertex_facets[v] > poly_.vertex_facets[pivot_vertex_])
                    pivot_vertex_ = static_cast<int>(v);
        }
        pivot_facets_ = poly_.vertex_facets[pivot_vertex_];
        for (std::size_t i = 0; i < poly_.facet_count(); ++i)
            if (!std::binary_search(pivot_facets_.begin(), pivot_facets_.end(), static_cast<int>(i)))
                free_facets_.push_back(static_cast<int>(i));
    }

    void build_substitution() {
        const int n = poly_.dim;
        const std::size_t f = free_facets_.size();
        IntMatrix a(n, n), b(n, f);
        for (int l = 0; l < n; ++l) {
            for (int r = 0; r < n; ++r) a(l, r) = cf_.lambda[pivot_facets_[r]][l];
            for (std::size_t w = 0; w < f; ++w) b(l, w) = cf_.lambda[free_facets_[w]][l];
        }
        IntMatrix s(n, f);
        if (n > 0) {
            IntMatrix inv = mod2_ ? detail::inverse_mod2(a) : detail::inverse_unimodular(a);
            for (int r = 0; r < n; ++r)
                for (std::size_t w = 0; w < f; ++w) {
                    Int acc = 0;
                    for (int l = 0; l < n; ++l) acc -= inv(r, l) * b(l, w);
                    s(r, w) = mod2_ ? ((acc % 2) + 2) % 2 : acc;
                }
        }
        facet_images_.assign(poly_.facet_count(), {});
        for (std::size_t w = 0; w < f; ++w) {
            Expo e(f, 0);
            e[w] = 1;
            facet_images_[free_facets_[w]][e] = 1;
        }
        for (int r = 0; r < n; ++r) {
            Poly img;
            for (std::size_t w = 0; w < f; ++w) {
                Expo e(f, 0);
                e[w] = 1;
                detail::poly_add_term(img, e, s(r, w), mod2_);
            }
            facet_images_[pivot_facets_[r]] = std::move(img);
        }
    }

    bool is_face(std::uint64_t mask) const {
        for (auto vm : poly_.vertex_masks)
            if ((mask & vm) == mask) return true;
        return false;
    }

    void build_sr_images() {
        const int mu = static_cast<int>(poly_.facet_count());
        const int max_size = std::min(mu, poly_.dim + 1);
        std::vector<int> sel;
        auto rec = [&](auto&& self, int start, int remaining) -> void {
            if (remaining == 0) {
                std::uint64_t mask = 0;
                for (int i : sel) mask |= std::uint64_t(1) << i;
                if (is_face(mask)) return;
                for (int i : sel)  // minimality: all maximal proper subsets are faces
                    if (!is_face(mask & ~(std::uint64_t(1) << i))) return;
                sr_generators_.push_back(sel);
                return;
            }
            for (int i = start; i <= mu - remaining; ++i) {
                sel.push_back(i);
                self(self, i + 1, remaining - 1);
                sel.pop_back();
            }
        };
        for (int k = 2; k <= max_size; ++k) rec(rec, 0, k);

        for (const auto& gen : sr_generators_) {
            Poly img;
            img[Expo(free_facets_.size(), 0)] = 1;
            for (int i : gen) img = detail::poly_mul(img, facet_images_[i], mod2_);
            sr_images_.push_back(std::move(img));
        }
    }

    void apply_reducers(const Table& tb, std::vector<Int>& row) const {
        for (std::size_t k = 0; k < tb.reducer_rows.size(); ++k) {
            const Int& c = row[tb.reducer_pivot[k]];
            if (c == 0) continue;
            Int f = c;
            const auto& red = tb.reducer_rows[k];
            for (std::size_t j = 0; j < row.size(); ++j) {
                row[j] -= f * red[j];
                if (mod2_) row[j] = ((row[j] % 2) + 2) % 2;
            }
        }
    }

    // One elimination pass over a fixed column processing order.  Returns
    // true on success; on failure reports the column whose pivot could not
    // be reduced to a unit.
    bool eliminate(const std::vector<std::vector<Int>>& relations,
                   const std::vector<std::size_t>& colorder, Table& tb,
                   std::size_t& stuck_col) const {
        const std::size_t ncols = tb.monomials.size();
        std::vector<std::size_t> pos(ncols);
        for (std::size_t i = 0; i < ncols; ++i) pos[colorder[i]] = i;
        tb.reducer_rows.clear();
        tb.reducer_pivot.clear();
        std::vector<std::vector<Int>> pool = relations;

        auto lead_pos = [&](const std::vector<Int>& row) -> std::size_t {
            std::size_t best = ncols;
            for (std::size_t c = 0; c < ncols; ++c)
                if (row[c] != 0) best = std::min(best, pos[c]);
            return best;
        };

        while (true) {
            for (auto& row : pool) apply_reducers(tb, row);
            std::vector<std::vector<Int>> live;
            for (auto& row : pool) {
                bool nz = false;
                for (const Int& x : row)
                    if (x != 0) {
                        nz = true;
                        break;
                    }
                if (nz) live.push_back(std::move(row));
            }
            pool = std::move(live);
            if (pool.empty()) return true;

            std::size_t target = ncols;
            for (const auto& row : pool) target = std::min(target, lead_pos(row));
            const std::size_t c = colorder[target];

            // Euclidean passes until a single row is supported on column c.
            while (true) {
                std::vector<std::size_t> with_c;
                for (std::size_t i = 0; i < pool.size(); ++i)
                    if (pool[i][c] != 0) with_c.push_back(i);
                if (with_c.size() <= 1) break;
                std::size_t bi = with_c[0];
                for (std::size_t i : with_c)
                    if (abs_int(pool[i][c]) < abs_int(pool[bi][c])) bi = i;
                for (std::size_t i : with_c) {
                    if (i == bi) continue;
                    Int q = pool[i][c] / pool[bi][c];
                    for (std::size_t j = 0; j < ncols; ++j) {
                        pool[i][j] -= q * pool[bi][j];
                        if (mod2_) pool[i][j] = ((pool[i][j] % 2) + 2) % 2;
                    }
                }
            }
            std::size_t pi = pool.size();
            for (std::size_t i = 0; i < pool.size(); ++i)
                if (pool[i][c] != 0) pi = i;
            Int g = pool[pi][c];
            if (g != 1 && g != -1) {
                stuck_col = c;
                return false;
            }
            std::vector<Int> red = std::move(pool[pi]);
            pool.erase(pool.begin() + pi);
            if (g == -1)
                for (auto& x : red) x = -x;
            // keep earlier reducers fully reduced against the new pivot
            for (std::size_t k = 0; k < tb.reducer_rows.size(); ++k) {
                Int f = tb.reducer_rows[k][c];
                if (f == 0) continue;
                for (std::size_t j = 0; j < ncols; ++j) {
                    tb.reducer_rows[k][j] -= f * red[j];
                    if (mod2_) tb.reducer_rows[k][j] = ((tb.reducer_rows[k][j] % 2) + 2) % 2;
                }
            }
            tb.reducer_rows.push_back(std::move(red));
            tb.reducer_pivot.push_back(c);
        }
    }

    void build_table(int t) {
        Table& tb = tables_[t];
        detail::enumerate_monomials(static_cast<int>(free_facets_.size()), t, tb.monomials);
        std::sort(tb.monomials.begin(), tb.monomials.end(), std::greater<Expo>());
        for (std::size_t i = 0; i < tb.monomials.size(); ++i) tb.column[tb.monomials[i]] = i;

        std::vector<std::vector<Int>> relations;
        std::vector<Expo> mons;
        for (std::size_t g = 0; g < sr_images_.size(); ++g) {
            const Poly& img = sr_images_[g];
            if (img.empty()) continue;
            const int dg = static_cast<int>(sr_generators_[g].size());
            if (dg > t) continue;
            detail::enumerate_monomials(static_cast<int>(free_facets_.size()), t - dg, mons);
            for (const Expo& m : mons) {
                std::vector<Int> row(tb.monomials.size(), 0);
                for (const auto& [e, c] : img) {
                    Expo prod(e.size());
                    for (std::size_t i = 0; i < e.size(); ++i) prod[i] = e[i] + m[i];
                    row[tb.column.at(prod)] += c;
                    if (mod2_) row[tb.column.at(prod)] = ((row[tb.column.at(prod)] % 2) + 2) % 2;
                }
                relations.push_back(std::move(row));
            }
        }

        std::vector<std::size_t> colorder(tb.monomials.size());
        for (std::size_t i = 0; i < colorder.size(); ++i) colorder[i] = i;
        bool done = false;
        for (std::size_t attempt = 0; attempt <= colorder.size() && !done; ++attempt) {
            std::size_t stuck = 0;
            if (eliminate(relations, colorder, tb, stuck)) {
                done = true;
            } else {
                auto it = std::find(colorder.begin(), colorder.end(), stuck);
                colorder.erase(it);
                colorder.push_back(stuck);
            }
        }
        if (!done) diagnose_failure(relations, t);

        std::vector<char> is_pivot(tb.monomials.size(), 0);
        for (std::size_t c : tb.reducer_pivot) is_pivot[c] = 1;
        for (std::size_t c = tb.monomials.size(); c-- > 0;)
            if (!is_pivot[c]) tb.basis.push_back(c);  // ascending lex
    }

    [[noreturn]] void diagnose_failure(const std::vector<std::vector<Int>>& relations, int t) const {
        IntMatrix m(relations.size(), relations.empty() ? 0 : relations[0].size());
        for (std::size_t i = 0; i < relations.size(); ++i)
            for (std::size_t j = 0; j < relations[i].size(); ++j) m(i, j) = relations[i][j];
        SnfResult snf = smith_normal_form(m);
        for (const Int& d : snf.divisors)
            if (d > 1)
                throw ToricTorsion("relation module has torsion Z/" + d.str() + " in u-degree " +
                                   std::to_string(t));
        throw NoMonomialBasis("no monomial basis survives reduction in u-degree " + std::to_string(t));
    }
};

struct PontryaginResult {
    RingClass cls;       // degree-4 class sum_i u_i^2 in normal form
    bool is_zero = true;
};

// First Pontryagin class of the quasitoric manifold: p_1 = sum of the squares
// of all facet classes, reduced in (topological) degree 4.
inline PontryaginResult first_pontryagin(const CohomologyPresentation& pres) {
    if (pres.ring() != Ring::Z)
        throw WrongRing("the first Pontryagin class requires an integral characteristic function");
    Poly acc;
    for (std::size_t i = 0; i < pres.polytope().facet_count(); ++i) {
        Poly sq = detail::poly_mul(pres.facet_image(i), pres.facet_image(i), false);
        for (const auto& [e, c] : sq) detail::poly_add_term(acc, e, c, false);
    }
    PontryaginResult res;
    res.cls = pres.reduce(acc, 2);
    res.is_zero = res.cls.is_zero();
    return res;
}

}  // namespace torprod
