// torprod: topological invariants of generalized projective product spaces.
//
// Families:  PPS  P(m; (n,p))        spheres with coordinate involutions
//            PT   P(S(m), X)         quasitoric fibre over a simple polytope
//            PS   P(S(m), Y)         small-cover fibre
//
// Exit codes: 0 success, 2 hypothesis violation (with the module's message),
// 1 internal error.

#include "torprod/cellular.hpp"
#include "torprod/charfunc.hpp"
#include "torprod/descriptor.hpp"
#include "torprod/fields.hpp"
#include "torprod/json_io.hpp"
#include "torprod/polytope.hpp"
#include "torprod/pps_algebra.hpp"
#include "torprod/projprod.hpp"
#include "torprod/quotient_ring.hpp"
#include "torprod/span.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace torprod;

namespace {

struct Options {
    std::string fixture;
    std::string descriptor_path;
    std::string json_path;
    long r = 0;

    std::string family_str;
    std::vector<int> m, n, p, cp, rp;

    std::string polytope_name;
    std::string ring = "F2";
    bool show_basis = false;
    bool dump_matrices = false;

    std::string field_family = "thm63";
    long trials = 100;
    int ell = 1;
    int threads = 1;
    std::uint64_t seed = 0;
    bool seed_set = false;
};

std::uint64_t resolve_seed(const Options& o) {
    if (o.seed_set) return o.seed;
    if (const char* env = std::getenv("TORPROD_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
            throw InputError("TORPROD_SEED is not a number: " + std::string(env));
        }
    }
    return 0;
}

SpaceDescriptor resolve_descriptor(const Options& o) {
    if (!o.fixture.empty()) return builtin_fixture(o.fixture, o.r);
    if (!o.descriptor_path.empty()) return load_descriptor(o.descriptor_path);
    if (o.family_str.empty())
        throw InputError("no space given: use --fixture, --descriptor or --family with lists");
    SpaceDescriptor d;
    if (o.family_str == "pps" || o.family_str == "PPS") d.family = Family::PPS;
    else if (o.family_str == "pt" || o.family_str == "PT") d.family = Family::PT;
    else if (o.family_str == "ps" || o.family_str == "PS") d.family = Family::PS;
    else throw InputError("unknown family '" + o.family_str + "' (pps, pt or ps)");
    d.name = "inline";
    d.m = o.m;
    d.n = o.n;
    d.p = o.p;
    d.cp = o.cp;
    d.rp = o.rp;
    validate_shape(d);
    return d;
}

std::string list_string(const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

std::string space_string(const SpaceDescriptor& d) {
    switch (d.family) {
        case Family::PPS: {
            std::string s = "P(m=" + list_string(d.m) + "; ";
            for (std::size_t j = 0; j < d.n.size(); ++j)
                s += std::string(j ? "," : "") + "(" + std::to_string(d.n[j]) + "," +
                     std::to_string(d.p[j]) + ")";
            return s + ")";
        }
        case Family::PT: {
            std::string s = "P(S" + list_string(d.m) + ", ";
            if (!d.cp.empty()) {
                for (std::size_t j = 0; j < d.cp.size(); ++j)
                    s += std::string(j ? " x " : "") + "CP^" + std::to_string(d.cp[j]);
            } else {
                s += "X/" + std::to_string(d.polytope ? d.polytope->dim : 0) + "-polytope";
            }
            return s + ")";
        }
        default: {
            std::string s = "P(S" + list_string(d.m) + ", ";
            if (!d.rp.empty()) {
                for (std::size_t j = 0; j < d.rp.size(); ++j)
                    s += std::string(j ? " x " : "") + "RP^" + std::to_string(d.rp[j]);
            } else {
                s += "Y/" + std::to_string(d.polytope ? d.polytope->dim : 0) + "-polytope";
            }
            return s + ")";
        }
    }
}

std::string long_list_string(const std::vector<long>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

std::string poincare_string(const std::vector<long>& dims) {
    std::string s;
    for (std::size_t t = 0; t < dims.size(); ++t) {
        if (dims[t] == 0) continue;
        if (!s.empty()) s += " + ";
        std::string coef = dims[t] == 1 ? "" : std::to_string(dims[t]) + "*";
        if (t == 0) s += std::to_string(dims[t]);
        else if (t == 1) s += coef + "t";
        else s += coef + "t^" + std::to_string(t);
    }
    return s.empty() ? "0" : s;
}

SimplePolytope polytope_by_name(const std::string& name) {
    if (name == "square") return square();
    if (name == "prism") return prism();
    if (name == "point") return point_polytope();
    auto colon = name.find(':');
    if (colon != std::string::npos) {
        const std::string kind = name.substr(0, colon);
        int n = 0;
        try {
            n = std::stoi(name.substr(colon + 1));
        } catch (...) {
            throw InputError("bad polytope size in '" + name + "'");
        }
        if (kind == "simplex") return simplex(n);
        if (kind == "cube") return cube(n);
    }
    throw InputError("unknown polytope '" + name +
                     "' (square, prism, point, simplex:N, cube:N)");
}

// ---- subcommand bodies --------------------------------------------------

Json run_hvector(const Options& o, std::ostream& out) {
    SimplePolytope q =
        o.polytope_name.empty() ? fibre_polytope(resolve_descriptor(o)) : polytope_by_name(o.polytope_name);
    VertexOrder ord = default_order(q);
    std::vector<long> h = h_vector(q, ord);
    std::vector<long> f = f_vector(q);
    out << "polytope: dim " << q.dim << ", " << q.facet_count() << " facets, " << q.vertex_count()
        << " vertices\n";
    out << "h-vector: " << long_list_string(h) << "\n";
    out << "f-vector: " << long_list_string(f) << "\n";
    Json j;
    j["dim"] = q.dim;
    j["h"] = h;
    j["f"] = f;
    return j;
}

std::vector<long> fibre_h_vector(const SpaceDescriptor& d) {
    SimplePolytope q = fibre_polytope(d);
    return h_vector(q, default_order(q));
}

// F2 cohomology dimensions of the fibre, indexed by topological degree.
std::vector<long> fibre_f2_dims(const SpaceDescriptor& d) {
    if (d.family == Family::PT && !d.cp.empty()) return projective_product_f2_dims(d.cp, 2);
    if (d.family == Family::PS && !d.rp.empty()) return projective_product_f2_dims(d.rp, 1);
    SimplePolytope q = fibre_polytope(d);
    CharFunction cf = fibre_char_function(d);
    CharFunction cf2 = CharFunction::over_f2(cf.lambda);
    CohomologyPresentation pres = CohomologyPresentation::build(q, cf2);
    const int step = d.family == Family::PT ? 2 : 1;
    std::vector<long> dims(static_cast<std::size_t>(step * q.dim) + 1, 0);
    for (int t = 0; t <= q.dim; ++t) dims[static_cast<std::size_t>(step * t)] = pres.rank(t);
    return dims;
}

Json run_cohomology(const Options& o, std::ostream& out) {
    SpaceDescriptor d = resolve_descriptor(o);
    Json j;
    j["space"] = space_string(d);
    if (o.ring == "Q" || o.ring == "q") {
        std::vector<long> b;
        switch (d.family) {
            case Family::PPS: b = pps_rational_betti(d.m, d.n, d.p); break;
            case Family::PT: b = toric_rational_betti(d.m, fibre_h_vector(d)); break;
            case Family::PS: smallcover_rational_betti();
        }
        out << "rational Betti numbers of " << space_string(d) << ":\n";
        out << "b: " << long_list_string(b) << "\n";
        out << "Poincare polynomial: " << poincare_string(b) << "\n";
        j["ring"] = "Q";
        j["betti"] = b;
        return j;
    }
    if (o.ring != "F2" && o.ring != "f2") throw InputError("--ring must be F2 or Q");
    j["ring"] = "F2";
    if (d.family == Family::PPS) {
        PPSAlgebra alg = PPSAlgebra::build(d.m, d.n, d.p);
        std::vector<long> dims = alg.betti_vector();
        out << "F2 cohomology of " << space_string(d) << " (dim " << alg.dim() << "):\n";
        out << "presentation: F2[a]/(a^" << alg.m1() + 1 << ")";
        for (int i = 2; i <= alg.k(); ++i) out << " (x) E(a" << i << ")";
        for (int jj = 1; jj <= alg.l(); ++jj) out << " (x) E(b" << jj << ")";
        out << "\n";
        if (alg.conditional_square_active())
            out << "note: the conditional relation a_i^2 = a^{m_i} a_i is active\n";
        out << "dims: " << long_list_string(dims) << "\n";
        out << "Poincare polynomial: " << poincare_string(dims) << "\n";
        out << "total dim: " << alg.total_dim() << "\n";
        if (o.show_basis)
            for (int t = 0; t <= alg.dim(); ++t) {
                out << "deg " << t << ":";
                for (const auto& mo : alg.basis(t)) out << " " << alg.mono_string(mo);
                out << "\n";
            }
        j["dims"] = dims;
        j["total"] = alg.total_dim();
        return j;
    }
    TensorCohomology tc = tensor_cohomology_dims(d.m, fibre_f2_dims(d));
    out << "F2 cohomology of " << space_string(d) << " (tensor description):\n";
    out << "dims: " << long_list_string(tc.dims) << "\n";
    out << "Poincare polynomial: " << poincare_string(tc.dims) << "\n";
    out << "total dim: " << tc.total << "\n";
    j["dims"] = tc.dims;
    j["total"] = tc.total;
    return j;
}

Json run_homology(const Options& o, std::ostream& out) {
    SpaceDescriptor d = resolve_descriptor(o);
    if (d.family != Family::PT)
        throw HypothesisViolation("integral homology via the cellular model covers the PT family only");
    if (d.m.size() != 1)
        throw HypothesisViolation("the cellular model needs a single base sphere (k = 1)");
    SimplePolytope q = fibre_polytope(d);
    VertexOrder ord = default_order(q);
    HomologySummary s = pps_toric_homology(d.m[0], q, ord);
    std::vector<HomologyGroup> closed = pps_toric_homology_closed_form(d.m[0], q, ord);
    out << "integral homology of " << space_string(d) << " (cells: RP^" << d.m[0]
        << " blocks over " << q.vertex_count() << " vertices):\n";
    bool agree = true;
    for (int deg = 0; deg <= s.complex.top_dim; ++deg) {
        out << "H_" << deg << " = " << group_string(s.homology[deg]) << "\n";
        if (s.homology[deg].rank != closed[deg].rank || s.homology[deg].torsion != closed[deg].torsion)
            agree = false;
    }
    for (int deg = 0; deg <= s.complex.top_dim; ++deg)
        out << "H^" << deg << " = " << group_string(s.cohomology[deg]) << "\n";
    out << "per-vertex shift prediction matches: " << (agree ? "yes" : "NO") << "\n";
    if (o.dump_matrices)
        for (int deg = 1; deg <= s.complex.top_dim; ++deg) {
            const IntMatrix& b = s.complex.boundary[deg];
            out << "boundary " << deg << " (" << b.rows() << "x" << b.cols()
                << "), sparse (row, col, value):\n";
            for (std::size_t r = 0; r < b.rows(); ++r)
                for (std::size_t c = 0; c < b.cols(); ++c)
                    if (b(r, c) != 0)
                        out << "(" << r << ", " << c << ", " << b(r, c).str() << ")\n";
        }
    Json j;
    j["space"] = space_string(d);
    Json hom = Json::array(), coh = Json::array();
    for (int deg = 0; deg <= s.complex.top_dim; ++deg) {
        hom.push_back(group_to_json(s.homology[deg]));
        coh.push_back(group_to_json(s.cohomology[deg]));
    }
    j["homology"] = hom;
    j["cohomology"] = coh;
    j["shift_prediction_matches"] = agree;
    return j;
}

SWClass sw_for(const SpaceDescriptor& d) {
    switch (d.family) {
        case Family::PPS: return pps_total_sw(d.m, d.n, d.p);
        case Family::PT:
            if (d.cp.empty())
                throw HypothesisViolation(
                    "the total Stiefel-Whitney formula needs a product-of-projective-space fibre");
            return toric_total_sw(d.m, d.cp);
        default:
            if (d.rp.empty())
                throw HypothesisViolation(
                    "the total Stiefel-Whitney formula needs a product-of-projective-space fibre");
            return smallcover_total_sw(d.m, d.rp);
    }
}

Json run_sw(const Options& o, std::ostream& out) {
    SpaceDescriptor d = resolve_descriptor(o);
    SWClass sw = sw_for(d);
    out << "total Stiefel-Whitney class of " << space_string(d) << ":\n";
    out << "formula: " << sw.formula << "\n";
    out << "w = " << sw.w.to_string() << (sw.trivial ? "  (trivial)" : "  (nontrivial)") << "\n";
    Json j = sw_to_json(sw);
    j["space"] = space_string(d);
    return j;
}

Json run_pontryagin(const Options& o, std::ostream& out) {
    SpaceDescriptor d = resolve_descriptor(o);
    if (d.family != Family::PT)
        throw HypothesisViolation("the first Pontryagin class needs a quasitoric fibre (PT family)");
    SimplePolytope q = fibre_polytope(d);
    CharFunction cf = fibre_char_function(d);
    CohomologyPresentation pres = CohomologyPresentation::build(q, cf);
    PontryaginResult p1 = first_pontryagin(pres);
    out << "first Pontryagin class of the fibre of " << space_string(d) << ":\n";
    out << "p1 = " << (p1.is_zero ? "0" : pres.class_string(p1.cls)) << " ("
        << (p1.is_zero ? "zero" : "nonzero") << ")\n";
    Json j;
    j["space"] = space_string(d);
    j["p1"] = class_to_json(pres, p1.cls);
    j["is_zero"] = p1.is_zero;
    return j;
}

Int euler_for(const SpaceDescriptor& d) {
    switch (d.family) {
        case Family::PPS: return pps_euler(d.m, d.n);
        case Family::PT:
            return toric_euler(d.m, static_cast<long>(fibre_polytope(d).vertex_count()));
        default: {
            Int chi = 1;
            if (!d.rp.empty()) {
                for (int nj : d.rp) chi *= (nj % 2 == 0) ? 1 : 0;
            } else {
                SimplePolytope q = fibre_polytope(d);
                std::vector<long> h = h_vector(q, default_order(q));
                chi = 0;
                for (std::size_t i = 0; i < h.size(); ++i) chi += (i % 2 == 0) ? Int(h[i]) : Int(-h[i]);
            }
            return smallcover_euler(d.m, chi);
        }
    }
}

Json run_euler(const Options& o, std::ostream& out) {
    SpaceDescriptor d = resolve_descriptor(o);
    Int chi = euler_for(d);
    out << "Euler characteristic of " << space_string(d) << ": " << chi.str() << "\n";
    Json j;
    j["space"] = space_string(d);
    j["euler"] = chi.str();
    return j;
}

SpanReport span_for(const SpaceDescriptor& d) {
    switch (d.family) {
        case Family::PPS: return pps_span_report(d.m, d.n, d.p);
        case Family::PT:
            if (!d.cp.empty()) return toric_span_report_cp(d.m, d.cp);
            return toric_span_report_polytope(d.m, fibre_polytope(d), fibre_char_function(d));
        default:
            if (!d.rp.empty()) return smallcover_span_report_rp(d.m, d.rp);
            return smallcover_span_report_polytope(d.m, fibre_polytope(d));
    }
}

Json run_span(const Options& o, std::ostream& out) {
    SpaceDescriptor d = resolve_descriptor(o);
    SpanReport rep = span_for(d);
    out << "span report for " << space_string(d) << " (dim " << rep.dim << "):\n";
    out << "euler: " << rep.euler.str() << "\n";
    for (const auto& b : rep.constructed_bounds)
        out << "constructed lower bound " << b.value << "  [" << b.tag << "]\n";
    for (const auto& b : rep.cited_bounds)
        out << "cited lower bound " << b.value << "  [" << b.tag << "]\n";
    out << "span_lower (constructed): " << rep.span_lower << "\n";
    out << "span_lower (cited): " << rep.span_lower_cited << "\n";
    out << "span_upper: " << rep.span_upper << "\n";
    out << "stable span equals span: " << (rep.stasp_equals_span ? "yes" : "unknown") << "\n";
    out << "stable parallelizability: " << rep.verdict << " (" << rep.verdict_reason << ")\n";
    Json j = span_report_to_json(rep);
    j["space"] = space_string(d);
    return j;
}

FieldFamily fields_for_descriptor(const SpaceDescriptor& d) {
    switch (d.family) {
        case Family::PPS: return pps_field_family(d.m, d.n, d.p);
        case Family::PT: {
            if (d.cp.empty())
                throw HypothesisViolation("no field construction for a general quasitoric fibre");
            for (int nj : d.cp)
                if (nj != 1)
                    throw HypothesisViolation("the field construction needs a (CP^1)^l fibre");
            return toric_cp1_field_family(d.m, static_cast<int>(d.cp.size()));
        }
        default: throw HypothesisViolation("no field construction for the small-cover family");
    }
}

void print_verification(const VerificationReport& rep, std::ostream& out) {
    out << "fields: " << rep.fields << ", trials: " << rep.trials << ", seed: " << rep.seed << "\n";
    if (rep.fields == 0) out << "empty family: vacuously verified\n";
    out << "tangency, independence, equivariance, scale-invariance: "
        << (rep.passed ? "all pass" : "FAILURES") << "\n";
    for (const auto& f : rep.failures)
        out << "  trial " << f.trial << " fails " << f.check << " at " << f.point << "\n";
}

Json run_verify_fields(const Options& o, std::ostream& out) {
    const std::uint64_t seed = resolve_seed(o);
    FieldFamily fam;
    std::string what;
    if (o.field_family == "thm63") {
        if (o.m.size() != 1 || o.n.size() != 1 || o.p.size() != 1)
            throw InputError("thm63 needs --m M --n N --p P (single values)");
        fam = build_fields_thm63(o.m[0], o.n[0], o.p[0]);
        what = "S^" + std::to_string(o.m[0]) + " x S^" + std::to_string(o.n[0]) + " (p = " +
               std::to_string(o.p[0]) + ")";
    } else if (o.field_family == "thm65") {
        if (o.m.size() != 1) throw InputError("thm65 needs --m M (single value)");
        fam = toric_cp1_field_family({o.m[0]}, o.ell);
        what = "S^" + std::to_string(o.m[0]) + " x (S^2)^" + std::to_string(o.ell);
    } else if (o.field_family == "pps") {
        fam = pps_field_family(o.m, o.n, o.p);
        what = "product of spheres m=" + list_string(o.m) + ", n=" + list_string(o.n);
    } else if (o.field_family == "linear") {
        if (o.m.size() != 1) throw InputError("linear needs --m M (single value)");
        fam = linear_sphere_fields(o.m[0]);
        what = "S^" + std::to_string(o.m[0]);
    } else {
        throw InputError("--family must be thm63, thm65, pps or linear");
    }
    VerificationReport rep = verify_family(fam, o.trials, seed, o.threads);
    out << "verify-fields on " << what << ":\n";
    print_verification(rep, out);
    Json j = verification_to_json(rep);
    j["ambient"] = what;
    return j;
}

Json run_all(const Options& o, std::ostream& out) {
    SpaceDescriptor d = resolve_descriptor(o);
    const std::uint64_t seed = resolve_seed(o);
    Json j;
    j["command"] = "all";
    j["descriptor"] = descriptor_to_json(d);
    Json sections = Json::object();
    out << "=== space ===\n" << space_string(d) << "\n";
    auto section = [&](const std::string& name, auto&& body) {
        out << "=== " << name << " ===\n";
        try {
            sections[name] = body();
        } catch (const HypothesisViolation& e) {
            out << "hypothesis violation: " << e.what() << "\n";
            sections[name] = Json{{"hypothesis_violation", e.what()}};
        } catch (const InputError& e) {
            out << "unavailable: " << e.what() << "\n";
            sections[name] = Json{{"unavailable", e.what()}};
        }
    };
    if (d.family != Family::PPS)
        section("hvector", [&] {
            SimplePolytope q = fibre_polytope(d);
            VertexOrder ord = default_order(q);
            Json s;
            std::vector<long> h = h_vector(q, ord);
            out << "h-vector: " << long_list_string(h) << "\n";
            s["h"] = h;
            return s;
        });
    section("cohomology-F2", [&] {
        Json s;
        if (d.family == Family::PPS) {
            PPSAlgebra alg = PPSAlgebra::build(d.m, d.n, d.p);
            std::vector<long> dims = alg.betti_vector();
            out << "dims: " << long_list_string(dims) << "\n";
            out << "total dim: " << alg.total_dim() << "\n";
            s["dims"] = dims;
            s["total"] = alg.total_dim();
        } else {
            TensorCohomology tc = tensor_cohomology_dims(d.m, fibre_f2_dims(d));
            out << "dims: " << long_list_string(tc.dims) << "\n";
            out << "total dim: " << tc.total << "\n";
            s["dims"] = tc.dims;
            s["total"] = tc.total;
        }
        return s;
    });
    section("cohomology-Q", [&] {
        std::vector<long> b;
        switch (d.family) {
            case Family::PPS: b = pps_rational_betti(d.m, d.n, d.p); break;
            case Family::PT: b = toric_rational_betti(d.m, fibre_h_vector(d)); break;
            case Family::PS: smallcover_rational_betti();
        }
        out << "b: " << long_list_string(b) << "\n";
        Json s;
        s["betti"] = b;
        return s;
    });
    if (d.family == Family::PT && d.m.size() == 1)
        section("homology", [&] {
            SimplePolytope q = fibre_polytope(d);
            VertexOrder ord = default_order(q);
            HomologySummary s = pps_toric_homology(d.m[0], q, ord);
            Json hj = Json::array();
            for (int deg = 0; deg <= s.complex.top_dim; ++deg) {
                out << "H_" << deg << " = " << group_string(s.homology[deg]) << "\n";
                hj.push_back(group_to_json(s.homology[deg]));
            }
            return Json{{"homology", hj}};
        });
    section("euler", [&] {
        Int chi = euler_for(d);
        out << "chi = " << chi.str() << "\n";
        return Json{{"euler", chi.str()}};
    });
    section("sw-class", [&] {
        SWClass sw = sw_for(d);
        out << "w = " << sw.w.to_string() << (sw.trivial ? "  (trivial)" : "  (nontrivial)") << "\n";
        return sw_to_json(sw);
    });
    if (d.family == Family::PT)
        section("pontryagin", [&] {
            SimplePolytope q = fibre_polytope(d);
            CohomologyPresentation pres = CohomologyPresentation::build(q, fibre_char_function(d));
            PontryaginResult p1 = first_pontryagin(pres);
            out << "p1 = " << (p1.is_zero ? "0" : pres.class_string(p1.cls)) << " ("
                << (p1.is_zero ? "zero" : "nonzero") << ")\n";
            Json s;
            s["p1"] = class_to_json(pres, p1.cls);
            s["is_zero"] = p1.is_zero;
            return s;
        });
    section("span", [&] {
        SpanReport rep = span_for(d);
        out << "span_lower " << rep.span_lower << ", span_upper " << rep.span_upper << ", verdict "
            << rep.verdict << " (" << rep.verdict_reason << ")\n";
        return span_report_to_json(rep);
    });
    section("verify-fields", [&] {
        FieldFamily fam = fields_for_descriptor(d);
        VerificationReport rep = verify_family(fam, o.trials, seed, o.threads);
        print_verification(rep, out);
        return verification_to_json(rep);
    });
    j["sections"] = sections;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"topological invariants of generalized projective product spaces"};
    app.require_subcommand(1);
    Options o;

    auto add_descriptor_opts = [&](CLI::App* sub) {
        sub->add_option("--fixture", o.fixture, "built-in fixture (dold-1-1, square-r, cp2-connected-sum)");
        sub->add_option("--descriptor", o.descriptor_path, "descriptor JSON file");
        sub->add_option("--r", o.r, "parameter r of the square-r fixture")->default_val(0);
        sub->add_option("--family", o.family_str, "family for inline descriptors (pps, pt, ps)");
        sub->add_option("--m", o.m, "base sphere dimensions")->delimiter(',');
        sub->add_option("--n", o.n, "PPS fibre sphere dimensions")->delimiter(',');
        sub->add_option("--p", o.p, "PPS involution parameters")->delimiter(',');
        sub->add_option("--cp", o.cp, "PT fibre: product of CP^{n_j}")->delimiter(',');
        sub->add_option("--rp", o.rp, "PS fibre: product of RP^{n_j}")->delimiter(',');
        sub->add_option("--json", o.json_path, "write a JSON report to this path");
    };

    CLI::App* c_hvector = app.add_subcommand("hvector", "h- and f-vector of a simple polytope");
    add_descriptor_opts(c_hvector);
    c_hvector->add_option("--polytope", o.polytope_name, "built-in polytope name");

    CLI::App* c_cohom = app.add_subcommand("cohomology", "cohomology of the space");
    add_descriptor_opts(c_cohom);
    c_cohom->add_option("--ring", o.ring, "F2 or Q")->default_val("F2");
    c_cohom->add_flag("--basis", o.show_basis, "list basis monomials (PPS over F2)");

    CLI::App* c_hom = app.add_subcommand("homology", "integral homology via the cellular model");
    add_descriptor_opts(c_hom);
    c_hom->add_flag("--dump-matrices", o.dump_matrices, "print boundary matrices");

    CLI::App* c_sw = app.add_subcommand("sw-class", "total Stiefel-Whitney class");
    add_descriptor_opts(c_sw);

    CLI::App* c_pont = app.add_subcommand("pontryagin", "first Pontryagin class of the fibre");
    add_descriptor_opts(c_pont);

    CLI::App* c_euler = app.add_subcommand("euler", "Euler characteristic");
    add_descriptor_opts(c_euler);

    CLI::App* c_span = app.add_subcommand("span", "span bounds and parallelizability verdict");
    add_descriptor_opts(c_span);

    CLI::App* c_verify = app.add_subcommand("verify-fields", "verify constructed vector fields");
    c_verify->add_option("--family", o.field_family, "thm63, thm65, pps or linear")->default_val("thm63");
    c_verify->add_option("--m", o.m, "sphere dimension(s)")->delimiter(',');
    c_verify->add_option("--n", o.n, "fibre sphere dimension(s)")->delimiter(',');
    c_verify->add_option("--p", o.p, "involution parameter(s)")->delimiter(',');
    c_verify->add_option("--ell", o.ell, "number of (S^2, p=2) extensions for thm65")->default_val(1);
    c_verify->add_option("--trials", o.trials, "number of sample points")->default_val(100);
    c_verify->add_option("--seed", o.seed, "RNG seed (default: TORPROD_SEED or 0)");
    c_verify->add_option("--threads", o.threads, "worker threads")->default_val(1);
    c_verify->add_option("--json", o.json_path, "write a JSON report to this path");

    CLI::App* c_all = app.add_subcommand("all", "every applicable report for one space");
    add_descriptor_opts(c_all);
    c_all->add_option("--trials", o.trials, "verify-fields sample points")->default_val(100);
    c_all->add_option("--seed", o.seed, "RNG seed (default: TORPROD_SEED or 0)");
    c_all->add_option("--threads", o.threads, "verify-fields worker threads")->default_val(1);

    CLI11_PARSE(app, argc, argv);
    o.seed_set = c_verify->count("--seed") > 0 || c_all->count("--seed") > 0;

    try {
        Json j;
        std::ostringstream msg;
        if (app.got_subcommand(c_hvector)) j = run_hvector(o, msg);
        else if (app.got_subcommand(c_cohom)) j = run_cohomology(o, msg);
        else if (app.got_subcommand(c_hom)) j = run_homology(o, msg);
        else if (app.got_subcommand(c_sw)) j = run_sw(o, msg);
        else if (app.got_subcommand(c_pont)) j = run_pontryagin(o, msg);
        else if (app.got_subcommand(c_euler)) j = run_euler(o, msg);
        else if (app.got_subcommand(c_span)) j = run_span(o, msg);
        else if (app.got_subcommand(c_verify)) j = run_verify_fields(o, msg);
        else if (app.got_subcommand(c_all)) j = run_all(o, msg);
        std::cout << msg.str();
        if (!o.json_path.empty()) {
            if (!j.contains("command"))
                j["command"] = app.get_subcommands().front()->get_name();
            write_json_file(o.json_path, j);
        }
        return 0;
    } catch (const HypothesisViolation& e) {
        std::cout << "hypothesis violation: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
