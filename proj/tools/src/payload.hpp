#pragma once

#include <genmat/central.hpp>
#include <genmat/evaluate.hpp>
#include <genmat/invariants.hpp>
#include <genmat/nullstellensatz.hpp>

#include "tuple_io.hpp"

namespace genmat::cli {

// JSON views of the library's result types. Key order is fixed so a payload
// replayed from the same seed is byte-identical.
Json evaluation_to_json(const EvaluationReport& r);
Json certificate_to_json(const ConjugacyCertificate& c);
Json fingerprint_to_json(const Fingerprint& fp);
Json pi_verdict_to_json(const PIVerdict& v);
Json centrality_to_json(const CentralityVerdict& v);
Json construction_to_json(const CentralConstruction& c);
Json points_result_to_json(const CentralForPointsResult& r);
Json ideal_basis_to_json(const PointIdealBasis& b, int n, int m);
Json separation_to_json(const SeparationOutcome& s);
Json experiment_to_json(const ExperimentReport& r, int n, int m);

}  // namespace genmat::cli
