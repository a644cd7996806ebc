#include "payload.hpp"

#include <genmat/word.hpp>

namespace genmat::cli {

namespace {

const char* mode_name(PIMode mode) {
    return mode == PIMode::Deterministic ? "deterministic" : "randomized";
}

}  // namespace

Json evaluation_to_json(const EvaluationReport& r) {
    Json j;
    j["value"] = matrix_to_json(r.value);
    j["isZero"] = r.is_zero;
    j["isScalar"] = r.is_scalar;
    j["scalar"] = r.scalar ? Json(to_string(*r.scalar)) : Json(nullptr);
    return j;
}

Json certificate_to_json(const ConjugacyCertificate& c) {
    Json j;
    j["conjugate"] = c.conjugate;
    j["intertwinerDim"] = c.intertwiner_dim;
    j["witness"] = c.witness ? matrix_to_json(*c.witness) : Json(nullptr);
    return j;
}

Json fingerprint_to_json(const Fingerprint& fp) {
    Json j;
    j["n"] = fp.n;
    j["m"] = fp.m;
    j["maxLen"] = fp.max_len;
    Json values = Json::array();
    for (const auto& [w, v] : fp.values) {
        Json entry;
        entry["necklace"] = word_key(w);
        entry["value"] = to_string(v);
        values.push_back(std::move(entry));
    }
    j["values"] = std::move(values);
    j["text"] = fp.to_text();
    return j;
}

Json pi_verdict_to_json(const PIVerdict& v) {
    Json j;
    j["isPI"] = v.is_pi;
    j["mode"] = mode_name(v.mode);
    j["downgraded"] = v.downgraded;
    j["trials"] = v.trials;
    j["seed"] = v.seed;
    j["rangeLo"] = v.range_lo;
    j["rangeHi"] = v.range_hi;
    j["witness"] = v.witness ? tuple_to_json(*v.witness) : Json(nullptr);
    j["confidence"] = v.confidence.empty() ? Json(nullptr) : Json(v.confidence);
    return j;
}

Json centrality_to_json(const CentralityVerdict& v) {
    Json j;
    j["isCentral"] = v.is_central;
    j["constantTermZero"] = v.constant_term_zero;
    j["piForSmaller"] = v.pi_for_smaller;
    j["evaluationsCentral"] = v.evaluations_central;
    j["notIdenticallyZero"] = v.not_identically_zero;
    j["commutator"] = pi_verdict_to_json(v.commutator);
    j["vanishing"] = pi_verdict_to_json(v.vanishing);
    j["smaller"] = v.smaller ? pi_verdict_to_json(*v.smaller) : Json(nullptr);
    return j;
}

Json construction_to_json(const CentralConstruction& c) {
    Json j;
    j["name"] = c.name;
    j["expr"] = c.p.to_string();
    j["m"] = c.p.generators();
    j["verification"] = centrality_to_json(c.verification);
    return j;
}

Json points_result_to_json(const CentralForPointsResult& r) {
    Json j;
    j["baseName"] = r.base_name;
    j["s"] = r.s.to_string();
    Json interpolants = Json::array();
    for (const auto& p : r.interpolants) interpolants.push_back(p.to_string());
    j["interpolants"] = std::move(interpolants);
    j["representative"] = r.representative;
    j["targets"] = tuple_to_json(r.targets);
    j["targetSeed"] = r.target_seed ? Json(*r.target_seed) : Json(nullptr);
    j["wordsUsed"] = r.words_used;
    Json reports = Json::array();
    for (const auto& rep : r.reports) reports.push_back(evaluation_to_json(rep));
    j["reports"] = std::move(reports);
    return j;
}

Json ideal_basis_to_json(const PointIdealBasis& b, int n, int m) {
    Json j;
    j["n"] = n;
    j["m"] = m;
    j["degreeBound"] = b.degree_bound;
    j["ambientDim"] = b.ambient_dim;
    j["kernelDim"] = b.kernel_dim;
    Json basis = Json::array();
    for (const auto& p : b.basis) basis.push_back(p.to_string());
    j["basis"] = std::move(basis);
    j["representative"] = b.representative;
    return j;
}

Json separation_to_json(const SeparationOutcome& s) {
    Json j;
    switch (s.status) {
        case SeparationOutcome::Status::Separated: j["status"] = "separated"; break;
        case SeparationOutcome::Status::Conjugate: j["status"] = "conjugate"; break;
        case SeparationOutcome::Status::BoundExhausted:
            j["status"] = "boundExhausted";
            break;
    }
    j["witness"] = s.witness ? Json(s.witness->to_string()) : Json(nullptr);
    j["degreeUsed"] = s.degree_used;
    j["targetValue"] =
        s.target_value ? evaluation_to_json(*s.target_value) : Json(nullptr);
    return j;
}

Json experiment_to_json(const ExperimentReport& r, int n, int m) {
    Json j;
    j["d"] = r.d;
    j["sound"] = r.sound;
    j["basis"] = ideal_basis_to_json(r.basis, n, m);
    Json targets = Json::array();
    for (const auto& v : r.targets) {
        Json t;
        t["member"] = v.member;
        t["witness"] = v.witness ? Json(v.witness->to_string()) : Json(nullptr);
        t["conjugateToPoint"] = v.conjugate_to_point;
        t["consistent"] = v.consistent;
        targets.push_back(std::move(t));
    }
    j["targets"] = std::move(targets);
    return j;
}

}  // namespace genmat::cli
