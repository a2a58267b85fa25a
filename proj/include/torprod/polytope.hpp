#pragma once

#include "torprod/errors.hpp"
#include "torprod/numeric.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace torprod {

// Combinatorial simple polytope: facet/vertex incidence plus the edge graph
// derived from it.  Vertices are faces of exactly `dim` facets; two vertices
// are adjacent iff their facet sets share dim-1 elements.  An optional
// rational realization supports generic-functional vertex orderings.
struct SimplePolytope {
    int dim = 0;
    std::vector<std::string> facet_names;
    std::vector<std::string> vertex_names;
    std::vector<std::vector<int>> vertex_facets;  // sorted facet indices, size dim
    std::vector<std::uint64_t> vertex_masks;      // bitmask form of vertex_facets
    std::vector<std::vector<int>> adjacency;      // vertex graph, sorted neighbor lists
    std::vector<std::pair<int, int>> edges;       // a < b
    std::vector<std::vector<Rat>> coords;         // optional, size |V| x dim when present

    std::size_t facet_count() const { return facet_names.size(); }
    std::size_t vertex_count() const { return vertex_names.size(); }
    bool has_coords() const { return !coords.empty(); }

    int facet_index(const std::string& name) const {
        for (std::size_t i = 0; i < facet_names.size(); ++i)
            if (facet_names[i] == name) return static_cast<int>(i);
        throw InputError("unknown facet name: " + name);
    }
    int vertex_index(const std::string& name) const {
        for (std::size_t i = 0; i < vertex_names.size(); ++i)
            if (vertex_names[i] == name) return static_cast<int>(i);
        throw InputError("unknown vertex name: " + name);
    }
};

// Validates incidence data and derives the edge graph.  Checks: every vertex
// lies on exactly dim distinct facets, vertex facet sets are distinct, every
// facet carries at least one vertex, the edge graph is dim-regular and
// connected.  These are the combinatorial footprints of simplicity we can
// verify without a realization.
inline SimplePolytope build_polytope(
    int dim, const std::vector<std::string>& facets,
    const std::vector<std::pair<std::string, std::vector<std::string>>>& vertices,
    const std::map<std::string, std::vector<Rat>>& coords = {}) {
    if (dim < 0) throw InputError("polytope dimension must be non-negative");
    if (facets.size() > 64) throw InputError("at most 64 facets are supported");
    SimplePolytope p;
    p.dim = dim;
    p.facet_names = facets;
    {
        std::set<std::string> seen(facets.begin(), facets.end());
        if (seen.size() != facets.size()) throw InputError("duplicate facet name");
    }
    if (vertices.empty()) throw InputError("polytope needs at least one vertex");

    for (const auto& [vname, vfacets] : vertices) {
        std::vector<int> idx;
        for (const auto& f : vfacets) {
            auto it = std::find(facets.begin(), facets.end(), f);
            if (it == facets.end()) throw InputError("vertex " + vname + " uses unknown facet " + f);
            idx.push_back(static_cast<int>(it - facets.begin()));
        }
        std::sort(idx.begin(), idx.end());
        if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
            throw NotSimple("vertex " + vname + " lists a facet twice");
        if (static_cast<int>(idx.size()) != dim)
            throw NotSimple("vertex " + vname + " lies on " + std::to_string(idx.size()) +
                            " facets, expected " + std::to_string(dim));
        std::uint64_t mask = 0;
        for (int i : idx) mask |= std::uint64_t(1) << i;
        for (std::size_t v = 0; v < p.vertex_masks.size(); ++v)
            if (p.vertex_masks[v] == mask)
                throw DuplicateVertex("vertices " + p.vertex_names[v] + " and " + vname +
                                      " have the same facet set");
        p.vertex_names.push_back(vname);
        p.vertex_facets.push_back(std::move(idx));
        p.vertex_masks.push_back(mask);
    }

    for (std::size_t f = 0; f < facets.size(); ++f) {
        bool used = false;
        for (auto m : p.vertex_masks)
            if (m >> f & 1) used = true;
        if (!used) throw InputError("facet " + facets[f] + " contains no vertex");
    }

    const std::size_t nv = p.vertex_count();
    p.adjacency.assign(nv, {});
    for (std::size_t a = 0; a < nv; ++a)
        for (std::size_t b = a + 1; b < nv; ++b) {
            int shared = __builtin_popcountll(p.vertex_masks[a] & p.vertex_masks[b]);
            if (shared == dim - 1) {
                p.adjacency[a].push_back(static_cast<int>(b));
                p.adjacency[b].push_back(static_cast<int>(a));
                p.edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
            }
        }
    for (std::size_t v = 0; v < nv; ++v)
        if (static_cast<int>(p.adjacency[v].size()) != dim)
            throw NotSimple("vertex " + p.vertex_names[v] + " has " +
                            std::to_string(p.adjacency[v].size()) + " neighbors, expected " +
                            std::to_string(dim));

    if (nv > 1) {
        std::vector<char> seen(nv, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        std::size_t reached = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : p.adjacency[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
        }
        if (reached != nv) throw Disconnected("vertex graph is disconnected");
    }

    if (!coords.empty()) {
        p.coords.resize(nv);
        for (std::size_t v = 0; v < nv; ++v) {
            auto it = coords.find(p.vertex_names[v]);
            if (it == coords.end()) throw InputError("no coordinates for vertex " + p.vertex_names[v]);
            if (static_cast<int>(it->second.size()) != dim)
                throw DimensionMismatch("coordinates of " + p.vertex_names[v] + " have wrong length");
            p.coords[v] = it->second;
        }
    }
    return p;
}

// ---- generators ---------------------------------------------------------

inline SimplePolytope point_polytope() {
    return build_polytope(0, {}, {{"v0", {}}});
}

// Delta^n realized as conv(0, e_1, ..., e_n).  Facets F1..Fn are the
// coordinate hyperplanes x_i = 0, F{n+1} is the far facet sum x_i = 1.
inline SimplePolytope simplex(int n) {
    if (n < 1) throw InputError("simplex dimension must be >= 1");
    std::vector<std::string> facets;
    for (int i = 1; i <= n + 1; ++i) facets.push_back("F" + std::to_string(i));
    std::vector<std::pair<std::string, std::vector<std::string>>> verts;
    std::map<std::string, std::vector<Rat>> coords;
    {
        std::vector<std::string> vf(facets.begin(), facets.end() - 1);
        verts.emplace_back("v0", vf);
        coords["v0"] = std::vector<Rat>(n, Rat(0));
    }
    for (int i = 1; i <= n; ++i) {
        std::vector<std::string> vf;
        for (int j = 1; j <= n; ++j)
            if (j != i) vf.push_back("F" + std::to_string(j));
        vf.push_back("F" + std::to_string(n + 1));
        verts.emplace_back("v" + std::to_string(i), vf);
        std::vector<Rat> c(n, Rat(0));
        c[i - 1] = 1;
        coords["v" + std::to_string(i)] = c;
    }
    return build_polytope(n, facets, verts, coords);
}

// [0,1]^n with facets F{2i-1}: x_i = 0 and F{2i}: x_i = 1.
inline SimplePolytope cube(int n) {
    if (n < 1) throw InputError("cube dimension must be >= 1");
    std::vector<std::string> facets;
    for (int i = 1; i <= n; ++i) {
        facets.push_back("F" + std::to_string(2 * i - 1));
        facets.push_back("F" + std::to_string(2 * i));
    }
    std::vector<std::pair<std::string, std::vector<std::string>>> verts;
    std::map<std::string, std::vector<Rat>> coords;
    for (unsigned b = 0; b < (1u << n); ++b) {
        std::string name = "v";
        std::vector<std::string> vf;
        std::vector<Rat> c(n);
        for (int i = 0; i < n; ++i) {
            int bit = b >> i & 1;
            name += char('0' + bit);
            vf.push_back("F" + std::to_string(2 * i + 1 + bit));
            c[i] = bit;
        }
        verts.emplace_back(name, vf);
        coords[name] = c;
    }
    return build_polytope(n, facets, verts, coords);
}

// The square with its cyclic facet labels: F1 bottom, F2 right, F3 top,
// F4 left, so the non-faces are the opposite pairs {F1,F3} and {F2,F4}.
inline SimplePolytope square() {
    return build_polytope(2, {"F1", "F2", "F3", "F4"},
                          {{"v00", {"F1", "F4"}},
                           {"v10", {"F1", "F2"}},
                           {"v11", {"F2", "F3"}},
                           {"v01", {"F3", "F4"}}},
                          {{"v00", {Rat(0), Rat(0)}},
                           {"v10", {Rat(1), Rat(0)}},
                           {"v11", {Rat(1), Rat(1)}},
                           {"v01", {Rat(0), Rat(1)}}});
}

// Triangular prism, vertex labels v0..v5 with the left triangle {v0,v1,v3},
// right triangle {v2,v4,v5} and horizontal edges v0v2, v1v4, v3v5.  The
// order v0 < v1 < ... < v5 then gives vertex indices 0,1,1,2,2,3.
inline SimplePolytope prism() {
    return build_polytope(
        3, {"T1", "T2", "S1", "S2", "S3"},
        {{"v0", {"T1", "S1", "S3"}},
         {"v1", {"T1", "S1", "S2"}},
         {"v2", {"T2", "S1", "S3"}},
         {"v3", {"T1", "S2", "S3"}},
         {"v4", {"T2", "S1", "S2"}},
         {"v5", {"T2", "S2", "S3"}}},
        {{"v0", {Rat(0), Rat(0), Rat(0)}},
         {"v1", {Rat(1), Rat(0), Rat(0)}},
         {"v2", {Rat(0), Rat(0), Rat(1)}},
         {"v3", {Rat(0), Rat(1), Rat(0)}},
         {"v4", {Rat(1), Rat(0), Rat(1)}},
         {"v5", {Rat(0), Rat(1), Rat(1)}}});
}

// Product polytope; facet names are prefixed to stay distinct.  Vertex names
// concatenate with '.'; coordinates concatenate when both factors carry them.
inline SimplePolytope product_polytope(const SimplePolytope& a, const SimplePolytope& b,
                                       const std::string& pa = "A.", const std::string& pb = "B.") {
    std::vector<std::string> facets;
    for (const auto& f : a.facet_names) facets.push_back(pa + f);
    for (const auto& f : b.facet_names) facets.push_back(pb + f);
    std::vector<std::pair<std::string, std::vector<std::string>>> verts;
    std::map<std::string, std::vector<Rat>> coords;
    const bool with_coords = a.has_coords() && b.has_coords();
    for (std::size_t i = 0; i < a.vertex_count(); ++i)
        for (std::size_t j = 0; j < b.vertex_count(); ++j) {
            std::string name = a.vertex_names[i] + "." + b.vertex_names[j];
            std::vector<std::string> vf;
            for (int f : a.vertex_facets[i]) vf.push_back(pa + a.facet_names[f]);
            for (int f : b.vertex_facets[j]) vf.push_back(pb + b.facet_names[f]);
            verts.emplace_back(name, vf);
            if (with_coords) {
                std::vector<Rat> c = a.coords[i];
                c.insert(c.end(), b.coords[j].begin(), b.coords[j].end());
                coords[name] = c;
            }
        }
    return build_polytope(a.dim + b.dim, facets, verts, with_coords ? coords : std::map<std::string, std::vector<Rat>>{});
}

// ---- vertex orderings and the h-vector ---------------------------------

struct VertexOrder {
    std::vector<int> position;  // position in the total order, 0-based
    std::vector<int> index;     // number of neighbors that come earlier
};

namespace detail {
inline VertexOrder order_from_positions(const SimplePolytope& p, std::vector<int> pos) {
    VertexOrder ord;
    ord.position = std::move(pos);
    ord.index.assign(p.vertex_count(), 0);
    for (std::size_t v = 0; v < p.vertex_count(); ++v)
        for (int w : p.adjacency[v])
            if (ord.position[w] < ord.position[static_cast<int>(v)]) ++ord.index[v];
    return ord;
}
}  // namespace detail

// Orders vertices by the exact value of a linear functional on the supplied
// realization.  A tie between adjacent vertices means the functional is not
// generic and the index would be ill-defined; such functionals are rejected.
// Non-adjacent ties are broken by vertex listing order.
inline VertexOrder order_from_functional(const SimplePolytope& p, const std::vector<Rat>& functional) {
    if (!p.has_coords())
        throw InputError("polytope carries no coordinates; supply an explicit vertex order");
    if (static_cast<int>(functional.size()) != p.dim)
        throw DimensionMismatch("functional has wrong length");
    std::vector<Rat> value(p.vertex_count());
    for (std::size_t v = 0; v < p.vertex_count(); ++v) {
        Rat s = 0;
        for (int i = 0; i < p.dim; ++i) s += functional[i] * p.coords[v][i];
        value[v] = s;
    }
    for (auto [a, b] : p.edges)
        if (value[a] == value[b])
            throw DegenerateFunctional("functional ties adjacent vertices " + p.vertex_names[a] +
                                       " and " + p.vertex_names[b]);
    std::vector<int> by_value(p.vertex_count());
    for (std::size_t v = 0; v < p.vertex_count(); ++v) by_value[v] = static_cast<int>(v);
    std::stable_sort(by_value.begin(), by_value.end(),
                     [&](int a, int b) { return value[a] < value[b]; });
    std::vector<int> pos(p.vertex_count());
    for (std::size_t r = 0; r < by_value.size(); ++r) pos[by_value[r]] = static_cast<int>(r);
    return detail::order_from_positions(p, pos);
}

// Direct total order given as vertex names, first = smallest.
inline VertexOrder order_from_list(const SimplePolytope& p, const std::vector<std::string>& names) {
    if (names.size() != p.vertex_count()) throw InputError("order must list every vertex exactly once");
    std::vector<int> pos(p.vertex_count(), -1);
    for (std::size_t r = 0; r < names.size(); ++r) {
        int v = p.vertex_index(names[r]);
        if (pos[v] != -1) throw InputError("vertex " + names[r] + " listed twice in order");
        pos[v] = static_cast<int>(r);
    }
    return detail::order_from_positions(p, pos);
}

// Default ordering used by generators and the CLI: the functional
// (1, 3, 9, ...), which is generic on every built-in realization because the
// vertex coordinates there are 0/1 vectors.
inline VertexOrder default_order(const SimplePolytope& p) {
    if (p.vertex_count() == 1) return detail::order_from_positions(p, {0});
    std::vector<Rat> f(p.dim);
    Rat w = 1;
    for (int i = 0; i < p.dim; ++i) {
        f[i] = w;
        w *= 3;
    }
    return order_from_functional(p, f);
}

// h_i = #{vertices of index i}.  For an ordering induced by a generic
// functional on an actual polytope this is the h-vector and must satisfy
// Dehn-Sommerville symmetry; a violation means the supplied order was not
// geometric, and we refuse to return a wrong h-vector silently.
inline std::vector<long> h_vector(const SimplePolytope& p, const VertexOrder& ord) {
    std::vector<long> h(p.dim + 1, 0);
    for (std::size_t v = 0; v < p.vertex_count(); ++v) ++h[ord.index[v]];
    for (int i = 0; i <= p.dim; ++i)
        if (h[i] != h[p.dim - i]) {
            std::string msg = "index counts are not symmetric, order is not induced by a generic functional: (";
            for (int j = 0; j <= p.dim; ++j) msg += (j ? "," : "") + std::to_string(h[j]);
            throw InvariantFailure(msg + ")");
        }
    return h;
}

// Faces of dimension d as facet-index sets of size dim-d; in a simple
// polytope a facet subset spans a face iff some vertex contains it.
inline std::vector<std::vector<int>> faces_of_dim(const SimplePolytope& p, int d) {
    if (d < 0 || d > p.dim) throw InputError("face dimension out of range");
    const int k = p.dim - d;
    std::set<std::vector<int>> out;
    std::vector<int> comb(k);
    for (std::size_t v = 0; v < p.vertex_count(); ++v) {
        const auto& vf = p.vertex_facets[v];
        // all k-subsets of the dim facets at v
        std::vector<int> sel(k);
        for (int i = 0; i < k; ++i) sel[i] = i;
        while (true) {
            for (int i = 0; i < k; ++i) comb[i] = vf[sel[i]];
            out.insert(comb);
            int i = k - 1;
            while (i >= 0 && sel[i] == p.dim - k + i) --i;
            if (i < 0) break;
            ++sel[i];
            for (int j = i + 1; j < k; ++j) sel[j] = sel[j - 1] + 1;
        }
        if (k == 0) break;  // only the whole polytope once
    }
    return {out.begin(), out.end()};
}

inline std::vector<long> f_vector(const SimplePolytope& p) {
    std::vector<long> f(p.dim + 1, 0);
    for (int d = 0; d <= p.dim; ++d) f[d] = static_cast<long>(faces_of_dim(p, d).size());
    return f;
}

}  // namespace torprod
