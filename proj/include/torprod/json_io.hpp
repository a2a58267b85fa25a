#pragma once

#include "torprod/cellular.hpp"
#include "torprod/descriptor.hpp"
#include "torprod/fields.hpp"
#include "torprod/quotient_ring.hpp"
#include "torprod/span.hpp"

#include <json.hpp>

#include <fstream>
#include <string>
#include <vector>

namespace torprod {

using Json = nlohmann::ordered_json;

// ---- descriptor I/O -----------------------------------------------------

inline Json descriptor_to_json(const SpaceDescriptor& d) {
    Json j;
    j["family"] = family_name(d.family);
    j["name"] = d.name;
    j["m"] = d.m;
    if (d.family == Family::PPS) {
        j["n"] = d.n;
        j["p"] = d.p;
    }
    if (!d.cp.empty()) j["cp"] = d.cp;
    if (!d.rp.empty()) j["rp"] = d.rp;
    if (d.polytope) {
        Json pj;
        pj["dim"] = d.polytope->dim;
        pj["facets"] = d.polytope->facet_names;
        Json verts = Json::object();
        for (std::size_t v = 0; v < d.polytope->vertex_count(); ++v) {
            std::vector<std::string> fs;
            for (int f : d.polytope->vertex_facets[v]) fs.push_back(d.polytope->facet_names[f]);
            verts[d.polytope->vertex_names[v]] = fs;
        }
        pj["vertices"] = verts;
        if (d.polytope->has_coords()) {
            Json coords = Json::object();
            for (std::size_t v = 0; v < d.polytope->vertex_count(); ++v) {
                std::vector<std::string> row;
                for (const Rat& x : d.polytope->coords[v]) row.push_back(x.str());
                coords[d.polytope->vertex_names[v]] = row;
            }
            pj["coords"] = coords;
        }
        j["polytope"] = pj;
    }
    if (d.lambda) {
        j["ring"] = ring_name(d.lambda->ring);
        if (d.polytope && d.polytope->facet_count() == d.lambda->lambda.size()) {
            Json rows = Json::object();
            for (std::size_t i = 0; i < d.lambda->lambda.size(); ++i) {
                Json r = Json::array();
                for (const Int& x : d.lambda->lambda[i]) r.push_back(x.str());
                rows[d.polytope->facet_names[i]] = r;
            }
            j["lambda"] = rows;
        } else {
            Json rows = Json::array();
            for (const auto& row : d.lambda->lambda) {
                Json r = Json::array();
                for (const Int& x : row) r.push_back(x.str());
                rows.push_back(r);
            }
            j["lambda"] = rows;
        }
    }
    return j;
}

namespace detail {

inline std::vector<int> int_list(const Json& j, const std::string& key) {
    std::vector<int> out;
    if (!j.contains(key)) return out;
    if (!j[key].is_array()) throw InputError("descriptor field '" + key + "' must be a list");
    for (const auto& v : j[key]) out.push_back(v.get<int>());
    return out;
}

inline Rat parse_rat(const Json& v) {
    if (v.is_number_integer()) return Rat(v.get<long>());
    if (v.is_string()) return Rat(v.get<std::string>());
    throw InputError("coordinates must be integers or rational strings");
}

inline Int parse_int(const Json& v) {
    if (v.is_number_integer()) return Int(v.get<long>());
    if (v.is_string()) return Int(v.get<std::string>());
    throw InputError("lambda entries must be integers or integer strings");
}

}  // namespace detail

inline SpaceDescriptor descriptor_from_json(const Json& j) {
    SpaceDescriptor d;
    if (!j.contains("family")) throw InputError("descriptor needs a 'family' field");
    const std::string fam = j["family"].get<std::string>();
    if (fam == "PPS") d.family = Family::PPS;
    else if (fam == "PT") d.family = Family::PT;
    else if (fam == "PS") d.family = Family::PS;
    else throw InputError("unknown family '" + fam + "' (expected PPS, PT or PS)");
    if (j.contains("name")) d.name = j["name"].get<std::string>();
    d.m = detail::int_list(j, "m");
    d.n = detail::int_list(j, "n");
    d.p = detail::int_list(j, "p");
    d.cp = detail::int_list(j, "cp");
    d.rp = detail::int_list(j, "rp");
    if (j.contains("polytope")) {
        const Json& pj = j["polytope"];
        if (!pj.contains("dim") || !pj.contains("facets") || !pj.contains("vertices"))
            throw InputError("polytope needs 'dim', 'facets' and 'vertices'");
        std::vector<std::string> facets = pj["facets"].get<std::vector<std::string>>();
        std::vector<std::pair<std::string, std::vector<std::string>>> verts;
        for (const auto& [vname, fj] : pj["vertices"].items())
            verts.emplace_back(vname, fj.get<std::vector<std::string>>());
        std::map<std::string, std::vector<Rat>> coords;
        if (pj.contains("coords"))
            for (const auto& [vname, cj] : pj["coords"].items()) {
                std::vector<Rat> row;
                for (const auto& x : cj) row.push_back(detail::parse_rat(x));
                coords[vname] = row;
            }
        d.polytope = build_polytope(pj["dim"].get<int>(), facets, verts, coords);
    }
    if (j.contains("lambda")) {
        std::vector<std::vector<Int>> rows;
        if (j["lambda"].is_object()) {
            // facet-keyed form {"ring": "Z"|"F2", "lambda": {"F1": [1,0], ...}}
            if (!d.polytope)
                throw InputError("a facet-keyed lambda needs an explicit polytope");
            rows.resize(d.polytope->facet_count());
            std::size_t seen = 0;
            for (const auto& [fname, rj] : j["lambda"].items()) {
                std::vector<Int> row;
                for (const auto& x : rj) row.push_back(detail::parse_int(x));
                rows[d.polytope->facet_index(fname)] = std::move(row);
                ++seen;
            }
            if (seen != rows.size())
                throw InputError("lambda must assign a vector to every facet");
        } else {
            for (const auto& rj : j["lambda"]) {
                std::vector<Int> row;
                for (const auto& x : rj) row.push_back(detail::parse_int(x));
                rows.push_back(std::move(row));
            }
        }
        bool f2 = d.family == Family::PS;
        if (j.contains("ring")) {
            const std::string ring = j["ring"].get<std::string>();
            if (ring == "F2") f2 = true;
            else if (ring == "Z") f2 = false;
            else throw InputError("descriptor ring must be Z or F2; got '" + ring + "'");
        }
        d.lambda = f2 ? CharFunction::over_f2(std::move(rows)) : CharFunction::over_z(std::move(rows));
    }
    validate_shape(d);
    return d;
}

inline SpaceDescriptor load_descriptor(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open descriptor file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw InputError("descriptor file " + path + " is not valid JSON: " + e.what());
    }
    return descriptor_from_json(j);
}

// ---- report serialization ----------------------------------------------

inline Json group_to_json(const HomologyGroup& g) {
    Json j;
    j["rank"] = g.rank;
    Json t = Json::array();
    for (const Int& x : g.torsion) t.push_back(x.str());
    j["torsion"] = t;
    j["pretty"] = group_string(g);
    return j;
}

inline Json class_to_json(const CohomologyPresentation& pres, const RingClass& cls) {
    Json j;
    j["degree"] = cls.udeg * pres.var_degree();
    Json coords = Json::array();
    for (const auto& [col, c] : cls.coords) {
        Json term;
        // coords are keyed by table column, not by position in the basis list
        term["monomial"] = pres.monomial_string(pres.monomial_at(cls.udeg, col), "u");
        term["coeff"] = c.str();
        coords.push_back(term);
    }
    j["coords"] = coords;
    Json basis = Json::array();
    for (const Expo& e : pres.basis_monomials(cls.udeg))
        basis.push_back(pres.monomial_string(e, "u"));
    j["basis"] = basis;
    return j;
}

inline Json sw_to_json(const SWClass& sw) {
    Json j;
    j["formula"] = sw.formula;
    j["class"] = sw.w.to_string();
    j["trivial"] = sw.trivial;
    return j;
}

inline Json span_report_to_json(const SpanReport& rep) {
    Json j;
    j["dim"] = rep.dim;
    j["euler"] = rep.euler.str();
    j["span_lower"] = rep.span_lower;
    Json cons = Json::array();
    for (const auto& b : rep.constructed_bounds) cons.push_back({{"value", b.value}, {"tag", b.tag}});
    j["constructed_bounds"] = cons;
    j["span_lower_cited"] = rep.span_lower_cited;
    Json cited = Json::array();
    for (const auto& b : rep.cited_bounds) cited.push_back({{"value", b.value}, {"tag", b.tag}});
    j["cited_bounds"] = cited;
    j["span_upper"] = rep.span_upper;
    j["stable_span_equals_span"] = rep.stasp_equals_span;
    j["verdict"] = rep.verdict;
    j["verdict_reason"] = rep.verdict_reason;
    return j;
}

inline Json verification_to_json(const VerificationReport& rep) {
    Json j;
    j["trials"] = rep.trials;
    j["fields"] = rep.fields;
    j["seed"] = rep.seed;
    j["passed"] = rep.passed;
    Json fails = Json::array();
    for (const auto& f : rep.failures)
        fails.push_back({{"trial", f.trial}, {"check", f.check}, {"point", f.point}});
    j["failures"] = fails;
    return j;
}

inline void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot open JSON output file: " + path);
    out << j.dump(2) << "\n";
}

}  // namespace torprod
