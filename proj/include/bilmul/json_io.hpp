// JSON encodings of the public value types. Polynomials and bit vectors use
// the lowercase hex encoding with the constant term in the least significant
// bit; rationals are {num, den} pairs with a decimal rendering alongside.
// Object keys serialize sorted, so equal values print identically.

#pragma once

#include <json.hpp>

#include "construct.hpp"
#include "curve_count.hpp"
#include "tower_bounds.hpp"

namespace bilmul {

using Json = nlohmann::json;

inline Json rational_to_json(const Rational& r) {
    return Json{{"num", r.numerator()},
                {"den", r.denominator()},
                {"approx", boost::rational_cast<double>(r)}};
}

inline Json algorithm_to_json(const BilinearAlgorithm& alg) {
    Json j;
    j["n"] = alg.n;
    j["rank"] = alg.rank;
    j["modulus"] = alg.field.modulus.to_hex();
    auto encode = [](const std::vector<BinaryPoly>& v) {
        Json arr = Json::array();
        for (const auto& p : v) arr.push_back(p.to_hex());
        return arr;
    };
    j["a"] = encode(alg.a_forms);
    j["b"] = encode(alg.b_forms);
    j["c"] = encode(alg.c_vecs);
    return j;
}

inline BilinearAlgorithm algorithm_from_json(const Json& j) {
    BilinearAlgorithm alg;
    alg.n = j.at("n").get<int>();
    alg.rank = j.at("rank").get<int>();
    BinaryPoly modulus = BinaryPoly::from_hex(j.at("modulus").get<std::string>());
    if (modulus.degree() != alg.n) throw std::invalid_argument("stored modulus degree does not match n");
    if (!is_irreducible(modulus)) throw std::invalid_argument("stored modulus is not irreducible");
    alg.field = FieldSpec{alg.n, modulus};
    auto decode = [&](const char* key) {
        std::vector<BinaryPoly> v;
        for (const auto& s : j.at(key)) {
            BinaryPoly p = BinaryPoly::from_hex(s.get<std::string>());
            if (p.degree() >= alg.n) throw std::invalid_argument("stored bit vector is wider than n");
            v.push_back(std::move(p));
        }
        if (static_cast<int>(v.size()) != alg.rank) throw std::invalid_argument("form count does not match rank");
        return v;
    };
    alg.a_forms = decode("a");
    alg.b_forms = decode("b");
    alg.c_vecs = decode("c");
    return alg;
}

inline Json plan_to_json(const EvaluationPlan& plan) {
    Json j;
    j["n"] = plan.n;
    j["rank"] = plan.rank;
    Json assignments = Json::array();
    for (const auto& as : plan.assignments) {
        Json a;
        a["place"] = as.place.is_infinity() ? "inf" : as.place.modulus.to_hex();
        a["degree"] = as.place.degree;
        a["u"] = as.u;
        assignments.push_back(a);
    }
    j["assignments"] = assignments;
    j["counts"] = Json{{"N1", plan.counts.N1}, {"l1", plan.counts.l1}, {"N2", plan.counts.N2},
                       {"l2", plan.counts.l2}, {"N4", plan.counts.N4}, {"l4", plan.counts.l4}};
    return j;
}

inline Json step_to_json(const TowerStep& step) {
    TowerStep t = step.normalized();
    return Json{{"k", t.k}, {"s", t.s}, {"label", t.label()}};
}

inline Json bound_report_to_json(const BoundReport& rep) {
    Json j;
    j["n"] = rep.n;
    j["selected_step"] = step_to_json(rep.selected_step);
    j["simple_bound"] = rational_to_json(rep.simple_bound);
    j["derivative_bound"] = rational_to_json(rep.derivative_bound);
    j["legacy_bounds"] =
        Json{{"arnaud_composed", rational_to_json(rep.legacy_composed)},
             {"arnaud_remark", rational_to_json(rep.legacy_remark)}};
    j["asymptotic_constants"] = Json{{"M2_simple", rational_to_json(rep.m2_simple)},
                                     {"M2_derivative", rational_to_json(rep.m2_derivative)}};
    return j;
}

inline Json place_counts_to_json(CurveStepId step) {
    PlaceCounts pc = place_counts(step);
    PlaceCounts ref = reference_place_counts(step);
    Json j;
    j["step"] = curve_step_name(step);
    j["genus"] = pc.genus;
    j["recomputed"] = Json{{"N1", pc.N1}, {"N2", pc.N2}, {"N4", pc.N4},
                           {"B1", pc.B1}, {"B2", pc.B2}, {"B4", pc.B4},
                           {"place_sum", pc.place_sum()}};
    j["reference"] = Json{{"genus", ref.genus}, {"N1", ref.N1}, {"N2", ref.N2}, {"N4", ref.N4},
                          {"place_sum", ref.place_sum()}};
    j["matches_reference"] = Json{{"genus", pc.genus == ref.genus},
                                  {"N1", pc.N1 == ref.N1},
                                  {"N2", pc.N2 == ref.N2},
                                  {"N4", pc.N4 == ref.N4}};
    if (step == CurveStepId::H21) {
        TowerStep ts{2, 1};
        j["certified_place_sum_lower"] = place_sum_lower(ts);
        j["note"] =
            "recomputed N4 differs from the reference table; the reference place sum " +
            std::to_string(ref.place_sum()) + " falls below the certified lower bound " +
            std::to_string(place_sum_lower(ts)) + ", the recomputed sum " + std::to_string(pc.place_sum()) +
            " does not";
    }
    return j;
}

}  // namespace bilmul
