#pragma once

#include <limits>
#include <string>

#include <json.hpp>

#include "mkls/formulas.hpp"
#include "mkls/graded_rep.hpp"
#include "mkls/matroid.hpp"

namespace mkls {

using nlohmann::json;

// Arbitrary-precision integers serialize as JSON numbers when they fit in
// 64 bits and as decimal strings otherwise.
inline json int_to_json(const Int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return v.convert_to<std::int64_t>();
    return v.str();
}

inline Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("expected integer or decimal string");
}

inline json partition_to_json(const Partition& la) {
    json a = json::array();
    for (int p : la.parts()) a.push_back(p);
    return a;
}

inline Partition partition_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("partition: expected array");
    std::vector<int> parts;
    for (const auto& v : j) parts.push_back(v.get<int>());
    return Partition(std::move(parts));
}

// Entries sorted lexicographically by partition (the map order).
inline json schur_vector_to_json(const SchurVector& v) {
    json a = json::array();
    for (const auto& [la, c] : v.coeffs())
        a.push_back(json{{"partition", partition_to_json(la)}, {"coeff", int_to_json(c)}});
    return a;
}

inline SchurVector schur_vector_from_json(const json& j) {
    SchurVector v;
    for (const auto& e : j)
        v.add(partition_from_json(e.at("partition")), int_from_json(e.at("coeff")));
    return v;
}

inline json poly_to_json(const IntPolynomial& p) {
    json a = json::array();
    for (const auto& c : p.coeffs()) a.push_back(int_to_json(c));
    return a;
}

inline IntPolynomial poly_from_json(const json& j) {
    std::vector<Int> c;
    for (const auto& v : j) c.push_back(int_from_json(v));
    return IntPolynomial(std::move(c));
}

inline json graded_rep_to_json(const GradedRep& f) {
    json coeffs = json::array();
    for (int i = 0; i <= f.degree(); ++i) coeffs.push_back(schur_vector_to_json(f.coeff(i)));
    return json{{"group_degree", f.group_degree()},
                {"flavor", f.flavor() == Flavor::SymmetricGroup ? "sym" : "unipotent"},
                {"coeffs", coeffs}};
}

inline GradedRep graded_rep_from_json(const json& j) {
    const std::string fl = j.at("flavor").get<std::string>();
    if (fl != "sym" && fl != "unipotent")
        throw std::invalid_argument("flavor: expected \"sym\" or \"unipotent\"");
    GradedRep f(j.at("group_degree").get<int>(),
                fl == "sym" ? Flavor::SymmetricGroup : Flavor::Unipotent);
    int i = 0;
    for (const auto& c : j.at("coeffs")) f.add(i++, schur_vector_from_json(c));
    return f;
}

inline json subset_to_json(Bits s) {
    json a = json::array();
    for (int e : bit_elements(s)) a.push_back(e);
    return a;
}

inline Bits subset_from_json(const json& j, int n) {
    Bits s = 0;
    for (const auto& v : j) {
        int e = v.get<int>();
        if (e < 0 || e >= n) throw std::invalid_argument("subset element out of range");
        s |= Bits(1) << e;
    }
    return s;
}

inline json matroid_to_json(const Matroid& m) {
    json j{{"n", m.ground_size()}, {"k", m.rank()}};
    switch (m.kind()) {
        case Matroid::Kind::Uniform:
            j["backend"] = "uniform";
            break;
        case Matroid::Kind::Boolean:
            j["backend"] = "boolean";
            break;
        case Matroid::Kind::Bases: {
            j["backend"] = "bases";
            json bb = json::array();
            for (Bits b : m.bases()) bb.push_back(subset_to_json(b));
            j["bases"] = bb;
            break;
        }
        case Matroid::Kind::SparsePaving: {
            j["backend"] = "sparse_paving";
            json hh = json::array();
            for (Bits h : m.listed_hyperplanes()) hh.push_back(subset_to_json(h));
            j["circuit_hyperplanes"] = hh;
            break;
        }
        case Matroid::Kind::Paving: {
            j["backend"] = "paving";
            json hh = json::array();
            for (Bits h : m.listed_hyperplanes()) hh.push_back(subset_to_json(h));
            j["hyperplanes"] = hh;
            break;
        }
        case Matroid::Kind::DirectSum:
            j["backend"] = "direct_sum";
            j["left"] = matroid_to_json(*m.sum_left());
            j["right"] = matroid_to_json(*m.sum_right());
            break;
        case Matroid::Kind::QNiform:
            j["backend"] = "qniform";
            j["q"] = m.qniform_q();
            j["space_dim"] = m.qniform_n();
            break;
        case Matroid::Kind::Linear: {
            j["backend"] = "linear";
            j["p"] = m.field_char();
            j["truncation"] = m.truncation();
            json cols = json::array();
            for (const auto& c : m.columns()) cols.push_back(c);
            j["columns"] = cols;
            break;
        }
    }
    return j;
}

inline Matroid matroid_from_json(const json& j) {
    const std::string backend = j.at("backend").get<std::string>();
    if (backend == "uniform")
        return Matroid::uniform(j.at("k").get<int>(), j.at("n").get<int>());
    if (backend == "boolean") return Matroid::boolean_(j.at("n").get<int>());
    const int n = j.value("n", 0);
    if (backend == "bases") {
        std::vector<Bits> bb;
        for (const auto& b : j.at("bases")) bb.push_back(subset_from_json(b, n));
        return Matroid::from_bases(n, j.at("k").get<int>(), std::move(bb));
    }
    if (backend == "sparse_paving") {
        std::vector<Bits> hh;
        for (const auto& h : j.at("circuit_hyperplanes")) hh.push_back(subset_from_json(h, n));
        return Matroid::sparse_paving(n, j.at("k").get<int>(), hh);
    }
    if (backend == "paving") {
        std::vector<Bits> hh;
        for (const auto& h : j.at("hyperplanes")) hh.push_back(subset_from_json(h, n));
        return Matroid::paving_from_hyperplanes(n, j.at("k").get<int>(), hh);
    }
    if (backend == "direct_sum")
        return Matroid::direct_sum(matroid_from_json(j.at("left")),
                                   matroid_from_json(j.at("right")));
    if (backend == "qniform")
        return Matroid::qniform(j.at("k").get<int>(), j.at("space_dim").get<int>(),
                                j.at("q").get<int>());
    if (backend == "linear") {
        std::vector<std::vector<int>> cols;
        for (const auto& c : j.at("columns")) cols.push_back(c.get<std::vector<int>>());
        return Matroid::linear(j.at("p").get<int>(), j.at("truncation").get<int>(),
                               std::move(cols));
    }
    throw std::invalid_argument("unknown matroid backend: " + backend);
}

inline json theorem_report_to_json(const TheoremReport& r) {
    return json{{"theorem_id", r.theorem_id},
                {"params", r.params},
                {"status", r.pass ? "pass" : "fail"},
                {"witnesses", r.witnesses}};
}

}  // namespace mkls
