#pragma once

#include <optional>
#include <vector>

#include "genmat/evaluate.hpp"
#include "genmat/trace_poly.hpp"

namespace genmat {

// Degree-truncated ideal of a finite set of orbits: a basis of the free-algebra
// elements of degree <= degree_bound vanishing at every defining point. The
// full ideal is infinite-dimensional; the truncation is explicit everywhere.
struct PointIdealBasis {
    int degree_bound = 0;
    int ambient_dim = 0;  // words of length <= degree_bound
    int kernel_dim = 0;
    std::vector<TracePolynomial> basis;
    std::vector<int> representative;  // input index -> dedup class representative
};

// Kernel of the joint evaluation map from the span of words of length <= d
// into one copy of M_n per non-conjugate point. Points must generate; m is
// explicit so the empty point set still has a well-defined ambient space.
PointIdealBasis ideal_of_points(const std::vector<MatrixTuple>& points, int m,
                                int d);

struct SeparationOutcome {
    enum class Status { Separated, Conjugate, BoundExhausted };
    Status status = Status::BoundExhausted;
    std::optional<TracePolynomial> witness;  // vanishes on points, not at target
    int degree_used = 0;                     // d at which the witness appeared
    std::optional<EvaluationReport> target_value;
};

// First (by degree, then basis order) element of the truncated ideal that does
// not vanish at the target. Conjugate targets are never separable; a
// BoundExhausted outcome only means d_max was too small, never nonexistence.
SeparationOutcome separate(const std::vector<MatrixTuple>& points,
                           const MatrixTuple& target, int d_max, int m);

// True when every generator of J vanishes at a; sufficient for zero-locus
// membership because a nonzero value at a generating tuple fills M_n.
bool zero_locus_member(const IdealPresentation& J, const MatrixTuple& a);

struct ExperimentTargetVerdict {
    bool member = false;
    std::optional<TracePolynomial> witness;  // basis element nonzero at target
    bool conjugate_to_point = false;
    bool consistent = false;  // member == conjugate at this degree bound
};

struct ExperimentReport {
    int d = 0;
    PointIdealBasis basis;
    bool sound = false;  // every basis element vanished at every input point
    std::vector<ExperimentTargetVerdict> targets;
};

// Computes the truncated ideal, re-verifies it against the defining points,
// and tests each target for membership, cross-checking against exact
// conjugacy. Membership at finite d can only over-approximate the orbit
// union, so member-but-not-conjugate flags d as too small, never an error.
// Per-target verdicts run on up to `jobs` threads; report order follows
// input order regardless.
ExperimentReport nullstellensatz_experiment(const std::vector<MatrixTuple>& points,
                                            const std::vector<MatrixTuple>& targets,
                                            int d, int m, int jobs = 1);

}  // namespace genmat
