#pragma once

#include "torprod/matrix.hpp"
#include "torprod/polytope.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace torprod {

// Cell structure and integral (co)homology of the projective product space
// P(S^m, X) over a quasitoric manifold X on an n-polytope Q.
//
// The quotient is assembled from one cell (B_i, U~_v) per pair of an
// RP^m-cell B_i (0 <= i <= m) and a vertex v of Q; the cell has dimension
// i + 2*index(v) where index(v) counts inward edges for the chosen vertex
// ordering.  The only nonzero boundaries run (B_i, U~_v) -> (B_{i-1}, U~_v)
// with coefficient 1 + (-1)^i, exactly as in the standard CW structure of
// RP^m: 0 for odd i, 2 for even i >= 2.  Homology therefore splits as a
// direct sum over vertices of shifted copies of H_*(RP^m; Z), and every
// torsion coefficient is 2 — both facts are checked by the test suite
// against the matrix computation done here, which never assumes them.

struct Cell {
    int rp_index = 0;    // i of B_i
    int vertex = 0;      // vertex of Q
    int dim = 0;         // i + 2 * index(vertex)
};

struct ChainComplex {
    int top_dim = 0;
    std::vector<std::vector<Cell>> cells;      // per dimension
    std::vector<IntMatrix> boundary;           // boundary[d]: dim d -> d-1
};

struct HomologyGroup {
    long rank = 0;
    std::vector<Int> torsion;  // invariant factors > 1
};

struct HomologySummary {
    std::vector<HomologyGroup> homology;       // degree 0..top
    std::vector<HomologyGroup> cohomology;     // via universal coefficients
    ChainComplex complex;
};

inline ChainComplex build_pps_toric_complex(int m, const SimplePolytope& q,
                                            const VertexOrder& order) {
    if (m < 1) throw InputError("sphere dimension must be at least 1");
    ChainComplex cc;
    cc.top_dim = m + 2 * q.dim;
    cc.cells.resize(cc.top_dim + 1);
    for (std::size_t v = 0; v < q.vertex_count(); ++v)
        for (int i = 0; i <= m; ++i) {
            Cell cell;
            cell.rp_index = i;
            cell.vertex = static_cast<int>(v);
            cell.dim = i + 2 * order.index[v];
            cc.cells[cell.dim].push_back(cell);
        }
    for (auto& layer : cc.cells)
        std::sort(layer.begin(), layer.end(), [](const Cell& a, const Cell& b) {
            return a.vertex != b.vertex ? a.vertex < b.vertex : a.rp_index < b.rp_index;
        });

    cc.boundary.resize(cc.top_dim + 1);
    cc.boundary[0] = IntMatrix(0, 0);
    for (int d = 1; d <= cc.top_dim; ++d) {
        const auto& from = cc.cells[d];
        const auto& to = cc.cells[d - 1];
        std::map<std::pair<int, int>, std::size_t> to_col;
        for (std::size_t j = 0; j < to.size(); ++j)
            to_col[{to[j].vertex, to[j].rp_index}] = j;
        // rows index the target cells (dimension d-1), columns the source
        IntMatrix bd(to.size(), from.size());
        for (std::size_t col = 0; col < from.size(); ++col) {
            const Cell& c = from[col];
            if (c.rp_index == 0) continue;
            const Int coeff = (c.rp_index % 2 == 0) ? 2 : 0;
            if (coeff == 0) continue;
            bd(to_col.at({c.vertex, c.rp_index - 1}), col) = coeff;
        }
        cc.boundary[d] = std::move(bd);
    }

    // boundary-squared must vanish cell by cell
    for (int d = 2; d <= cc.top_dim; ++d) {
        const IntMatrix prod = cc.boundary[d - 1].multiplied_by(cc.boundary[d]);
        for (std::size_t r = 0; r < prod.rows(); ++r)
            for (std::size_t c = 0; c < prod.cols(); ++c)
                if (prod(r, c) != 0)
                    throw BoundaryNotSquareZero("boundary composite nonzero in dimension " +
                                                std::to_string(d));
    }
    return cc;
}

// Integral homology of the complex by Smith normal form:
//   H_d = Z^{n_d - r_d - r_{d+1}}  (+)  torsion from the divisors of d_{d+1}.
inline HomologySummary homology_of(const ChainComplex& cc) {
    HomologySummary out;
    out.complex = cc;
    const int top = cc.top_dim;
    std::vector<long> rank_bd(top + 2, 0);
    std::vector<std::vector<Int>> tors_bd(top + 2);
    for (int d = 1; d <= top; ++d) {
        SnfResult snf = smith_normal_form(cc.boundary[d]);
        rank_bd[d] = snf.rank;
        for (const Int& x : snf.divisors)
            if (x > 1) tors_bd[d].push_back(x);
    }
    out.homology.resize(top + 1);
    for (int d = 0; d <= top; ++d) {
        const long n_d = static_cast<long>(cc.cells[d].size());
        out.homology[d].rank = n_d - rank_bd[d] - rank_bd[d + 1];
        out.homology[d].torsion = tors_bd[d + 1];
    }
    // universal coefficients: H^d = free(H_d) + torsion(H_{d-1})
    out.cohomology.resize(top + 1);
    for (int d = 0; d <= top; ++d) {
        out.cohomology[d].rank = out.homology[d].rank;
        if (d >= 1) out.cohomology[d].torsion = out.homology[d - 1].torsion;
    }
    return out;
}

inline HomologySummary pps_toric_homology(int m, const SimplePolytope& q,
                                          const VertexOrder& order) {
    return homology_of(build_pps_toric_complex(m, q, order));
}

inline std::string group_string(const HomologyGroup& g) {
    std::string s;
    if (g.rank > 0) {
        s = g.rank == 1 ? "Z" : "Z^" + std::to_string(g.rank);
    }
    for (const Int& t : g.torsion) {
        if (!s.empty()) s += " + ";
        s += "Z/" + t.str();
    }
    return s.empty() ? "0" : s;
}

// Closed form for comparison: H_*(P) = (+)_v H_{*-2 index(v)}(RP^m; Z).
inline std::vector<HomologyGroup> pps_toric_homology_closed_form(int m, const SimplePolytope& q,
                                                                 const VertexOrder& order) {
    const int top = m + 2 * q.dim;
    std::vector<HomologyGroup> out(top + 1);
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
        const int shift = 2 * order.index[v];
        // H_j(RP^m): Z at j=0; Z/2 at odd j<m; Z at j=m odd; 0 otherwise
        for (int j = 0; j <= m; ++j) {
            if (j == 0) out[shift].rank += 1;
            else if (j == m && m % 2 == 1) out[shift + m].rank += 1;
            else if (j % 2 == 1) out[shift + j].torsion.push_back(2);
        }
    }
    for (auto& g : out) std::sort(g.torsion.begin(), g.torsion.end());
    return out;
}

}  // namespace torprod
