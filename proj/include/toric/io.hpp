#pragma once

#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "toric/fan.hpp"
#include "toric/oracle.hpp"
#include "toric/sections.hpp"
#include "toric/splitting.hpp"

namespace toric {

using Json = nlohmann::ordered_json;

namespace detail {

// Values at desk scale fit int64; anything bigger is serialized as a string
// so nothing is silently rounded.
inline Json json_int(const Int& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return Json(v.convert_to<long long>());
    return Json(v.str());
}

inline Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("expected an integer");
}

inline Json json_vector(const LatticeVector& v) {
    Json a = Json::array();
    for (const Int& c : v) a.push_back(json_int(c));
    return a;
}

inline LatticeVector vector_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an array of integers");
    std::vector<Int> c;
    for (const auto& e : j) c.push_back(int_from_json(e));
    return LatticeVector(std::move(c));
}

}  // namespace detail

// ---- Fan files ----------------------------------------------------------
// { "dim": 2, "rays": [[1,0],...], "max_cones": [[0,1],...] }

inline Json fan_to_json(const Fan& fan) {
    Json j;
    j["dim"] = fan.dim();
    j["rays"] = Json::array();
    for (const auto& r : fan.rays()) j["rays"].push_back(detail::json_vector(r));
    j["max_cones"] = Json::array();
    for (const auto& c : fan.max_cones()) j["max_cones"].push_back(c.rays);
    return j;
}

/// Non-primitive rays are accepted and primitivized; `warn` (when given)
/// receives one line per adjusted ray.
inline Fan fan_from_json(const Json& j, std::ostream* warn = nullptr) {
    if (!j.contains("dim") || !j.contains("rays") || !j.contains("max_cones"))
        throw std::invalid_argument("fan file needs dim, rays and max_cones");
    const int dim = j.at("dim").get<int>();
    std::vector<LatticeVector> rays;
    for (const auto& r : j.at("rays")) rays.push_back(detail::vector_from_json(r));
    std::vector<std::vector<int>> cones;
    for (const auto& c : j.at("max_cones")) cones.push_back(c.get<std::vector<int>>());
    if (warn) {
        for (const auto& r : rays) {
            if (r.dim() == dim && !r.is_zero()) {
                LatticeVector p = primitive(r);
                if (p != r) *warn << "warning: ray " << r.str() << " is not primitive; using "
                                  << p.str() << "\n";
            }
        }
    }
    return build_fan(dim, std::move(rays), cones);
}

inline Fan load_fan_file(const std::string& path, std::ostream* warn = nullptr) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fan file: " + path);
    Json j;
    in >> j;
    return fan_from_json(j, warn);
}

// ---- Certificates and witnesses -----------------------------------------
// { "q": 3, "classes": [ { "class": [0,1], "rep": [0,1], "den": 3 }, ... ] }
// { "q": 2, "class": [0,1], "box": [[-1,1],[-1,1]] }

inline Json certificate_to_json(const SplitCertificate& cert) {
    Json j;
    j["q"] = detail::json_int(cert.q);
    j["classes"] = Json::array();
    for (const auto& [cls, rep] : cert.reps) {
        Json e;
        e["class"] = detail::json_vector(cls.residues());
        e["rep"] = detail::json_vector(rep.numerators());
        e["den"] = detail::json_int(rep.den());
        j["classes"].push_back(std::move(e));
    }
    return j;
}

inline SplitCertificate certificate_from_json(const Json& j) {
    SplitCertificate cert;
    cert.q = detail::int_from_json(j.at("q"));
    for (const auto& e : j.at("classes")) {
        CosetClass cls(detail::vector_from_json(e.at("class")), cert.q);
        FractionalPoint rep(detail::vector_from_json(e.at("rep")),
                            detail::int_from_json(e.at("den")));
        if (!cert.reps.emplace(cls, rep).second)
            throw std::invalid_argument("certificate repeats class " + cls.str());
    }
    return cert;
}

inline Json witness_to_json(const NonSplitWitness& w) {
    Json j;
    j["q"] = detail::json_int(w.q);
    j["class"] = detail::json_vector(w.missing.residues());
    j["box"] = Json::array();
    for (int i = 0; i < w.box.dim(); ++i)
        j["box"].push_back(Json::array({detail::json_int(w.box.lo[i]), detail::json_int(w.box.hi[i])}));
    return j;
}

inline NonSplitWitness witness_from_json(const Json& j) {
    Int q = detail::int_from_json(j.at("q"));
    CosetClass cls(detail::vector_from_json(j.at("class")), q);
    IntegerBox box;
    for (const auto& pair : j.at("box")) {
        box.lo.push_back(detail::int_from_json(pair.at(0)));
        box.hi.push_back(detail::int_from_json(pair.at(1)));
    }
    return NonSplitWitness{std::move(q), std::move(cls), std::move(box)};
}

// ---- Oracle and normality reports ----------------------------------------

inline Json polynomial_to_json(const LaurentPolynomial& p) {
    Json a = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json t;
        t["exp"] = detail::json_vector(e);
        t["coef"] = detail::json_int(c);
        a.push_back(std::move(t));
    }
    return a;
}

inline Json report_to_json(const OracleReport& r) {
    Json j;
    j["verdict"] = r.pass ? "pass" : "fail";
    j["elements_checked"] = r.elements_checked;
    if (r.counterexample) {
        Json c;
        c["chart"] = r.counterexample->chart;
        c["elements"] = Json::array();
        for (const auto& e : r.counterexample->elements) {
            Json el;
            el["nums"] = detail::json_vector(e.numerators());
            el["den"] = detail::json_int(e.den());
            c["elements"].push_back(std::move(el));
        }
        c["image"] = polynomial_to_json(r.counterexample->image);
        j["counterexample"] = std::move(c);
    }
    return j;
}

inline Json normality_to_json(const NormalityReport& r) {
    Json j;
    j["verdict"] = r.pass ? "pass" : "fail";
    j["k_max"] = detail::json_int(r.k_max);
    j["points_checked"] = r.points_checked;
    if (r.counterexample) {
        j["counterexample"] = {{"k", detail::json_int(r.counterexample->first)},
                               {"point", detail::json_vector(r.counterexample->second)}};
    }
    return j;
}

inline Json scan_to_json(const std::vector<QScanRow>& rows) {
    Json a = Json::array();
    for (const auto& row : rows) {
        Json j;
        j["q"] = detail::json_int(row.q);
        j["split"] = row.split;
        j["classes"] = detail::json_int(row.classes);
        if (row.witness) j["witness_class"] = detail::json_vector(row.witness->residues());
        a.push_back(std::move(j));
    }
    return a;
}

}  // namespace toric
