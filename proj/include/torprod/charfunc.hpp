#pragma once

#include "torprod/matrix.hpp"
#include "torprod/polytope.hpp"

#include <string>
#include <vector>

namespace torprod {

enum class Ring { Z, F2 };

inline const char* ring_name(Ring r) { return r == Ring::Z ? "Z" : "F2"; }

// Characteristic function: one row per facet, dim columns.  Over Z this is
// the data of a quasitoric manifold over the polytope; over F2 of a small
// cover.  Validity is the nondegeneracy condition at every vertex.
struct CharFunction {
    Ring ring = Ring::Z;
    std::vector<std::vector<Int>> lambda;  // facet_count rows of length dim

    static CharFunction over_z(std::vector<std::vector<Int>> rows) {
        return CharFunction{Ring::Z, std::move(rows)};
    }
    static CharFunction over_f2(std::vector<std::vector<Int>> rows) {
        CharFunction cf{Ring::F2, std::move(rows)};
        for (auto& row : cf.lambda)
            for (auto& x : row) x = ((x % 2) + 2) % 2;
        return cf;
    }
};

struct CharValidity {
    struct Offender {
        int vertex;
        std::string vertex_name;
        Int det;
    };
    bool ok = true;
    std::vector<Offender> offenders;
};

inline void check_char_shape(const SimplePolytope& p, const CharFunction& cf) {
    if (cf.lambda.size() != p.facet_count())
        throw DimensionMismatch("characteristic function has " + std::to_string(cf.lambda.size()) +
                                " rows, polytope has " + std::to_string(p.facet_count()) + " facets");
    for (const auto& row : cf.lambda)
        if (static_cast<int>(row.size()) != p.dim)
            throw DimensionMismatch("characteristic vector of wrong length, expected " +
                                    std::to_string(p.dim));
}

// Per-vertex determinant test: det = +-1 over Z, odd over F2.  Every failing
// vertex is reported with its determinant.
inline CharValidity validate_char(const SimplePolytope& p, const CharFunction& cf) {
    check_char_shape(p, cf);
    CharValidity rep;
    for (std::size_t v = 0; v < p.vertex_count(); ++v) {
        IntMatrix m(p.dim, p.dim);
        for (int r = 0; r < p.dim; ++r)
            for (int c = 0; c < p.dim; ++c) m(r, c) = cf.lambda[p.vertex_facets[v][r]][c];
        Int det = determinant(m);
        bool good = cf.ring == Ring::Z ? (det == 1 || det == -1) : (det % 2 != 0);
        if (!good) {
            rep.ok = false;
            rep.offenders.push_back({static_cast<int>(v), p.vertex_names[v], det});
        }
    }
    return rep;
}

inline void require_valid_char(const SimplePolytope& p, const CharFunction& cf) {
    CharValidity rep = validate_char(p, cf);
    if (rep.ok) return;
    std::string msg = "characteristic function fails the vertex condition at:";
    for (const auto& o : rep.offenders)
        msg += " " + o.vertex_name + " (det " + o.det.str() + ")";
    throw InvalidCharFunction(msg);
}

// Rows of the linear ideal J: for each coordinate l the relation
// sum_i lambda_{i,l} u_i = 0 over the facet variables u_1..u_mu.
inline std::vector<std::vector<Int>> linear_ideal_rows(const SimplePolytope& p, const CharFunction& cf) {
    check_char_shape(p, cf);
    std::vector<std::vector<Int>> rows(p.dim, std::vector<Int>(p.facet_count(), 0));
    for (int l = 0; l < p.dim; ++l)
        for (std::size_t i = 0; i < p.facet_count(); ++i) rows[l][i] = cf.lambda[i][l];
    return rows;
}

// ---- built-in characteristic functions ---------------------------------

// Figure assignment for the square with cyclic facets F1..F4:
// F1 -> (1,0), F2 -> (0,1), F3 -> (1,r), F4 -> (0,1).  Valid for every r.
inline CharFunction square_lambda_a(long r) {
    return CharFunction::over_z({{1, 0}, {0, 1}, {1, r}, {0, 1}});
}

// Same square; F1 -> (1,0), F2 -> (-1,1), F3 -> (1,-2), F4 -> (0,1).
inline CharFunction square_lambda_b() {
    return CharFunction::over_z({{1, 0}, {-1, 1}, {1, -2}, {0, 1}});
}

// Standard characteristic function of the simplex: e_1..e_n, then (-1,..,-1).
inline CharFunction simplex_standard_lambda(int n, Ring ring = Ring::Z) {
    std::vector<std::vector<Int>> rows;
    for (int i = 0; i < n; ++i) {
        std::vector<Int> row(n, 0);
        row[i] = 1;
        rows.push_back(row);
    }
    rows.emplace_back(n, Int(-1));
    CharFunction cf{ring, rows};
    if (ring == Ring::F2)
        for (auto& row : cf.lambda)
            for (auto& x : row) x = ((x % 2) + 2) % 2;
    return cf;
}

// Block-diagonal characteristic function on a product of simplices built by
// product_polytope; gives products of projective spaces.
inline CharFunction simplex_product_standard_lambda(const std::vector<int>& dims, Ring ring = Ring::Z) {
    int n = 0;
    for (int d : dims) n += d;
    std::vector<std::vector<Int>> rows;
    int off = 0;
    for (int d : dims) {
        for (int i = 0; i < d; ++i) {
            std::vector<Int> row(n, 0);
            row[off + i] = 1;
            rows.push_back(row);
        }
        std::vector<Int> far(n, 0);
        for (int i = 0; i < d; ++i) far[off + i] = ring == Ring::Z ? -1 : 1;
        rows.push_back(far);
        off += d;
    }
    return CharFunction{ring, rows};
}

}  // namespace torprod
