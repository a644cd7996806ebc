#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "genmat/evaluate.hpp"
#include "genmat/trace_poly.hpp"

namespace genmat {

enum class PIMode { Deterministic, Randomized };

struct PIOptions {
    PIMode mode = PIMode::Deterministic;
    std::uint64_t trials = 64;
    std::uint64_t seed = 1;
    std::int64_t range_lo = -1'000'000;
    std::int64_t range_hi = 1'000'000;
    // A deterministic run past the substitution ceiling falls back to
    // randomized (and says so) instead of erroring out.
    bool allow_downgrade = true;
};

struct PIVerdict {
    bool is_pi = false;
    PIMode mode = PIMode::Deterministic;  // mode actually used
    bool downgraded = false;
    std::uint64_t trials = 0;  // randomized: evaluations performed
    std::uint64_t seed = 0;
    std::int64_t range_lo = 0;
    std::int64_t range_hi = 0;
    std::optional<MatrixTuple> witness;  // present iff is_pi is false
    std::string confidence;              // randomized positive verdicts only
};

// Decides whether trace-free p vanishes identically on n x n matrices.
// Deterministic mode polarizes p and sweeps all matrix-unit substitutions
// (complete for multilinear polynomials in characteristic zero); randomized
// mode evaluates at seeded integer tuples and reports a Schwartz-Zippel
// failure bound. Witnesses always re-evaluate to a nonzero matrix.
PIVerdict is_pi(const TracePolynomial& p, int n, const PIOptions& opts = {});

struct CentralityVerdict {
    bool is_central = false;
    // The four definitional conditions, as far as they apply.
    bool constant_term_zero = false;
    bool pi_for_smaller = true;  // vacuous at n = 1
    bool evaluations_central = false;
    bool not_identically_zero = false;
    std::optional<PIVerdict> smaller;  // is_pi(p, n-1), n >= 2
    PIVerdict commutator;              // is_pi([p, x_{m+1}], n)
    PIVerdict vanishing;               // is_pi(p, n)
};

// Centrality via the commutator route: zero constant term, [p, x_{m+1}] an
// identity of M_n, p itself not one. The independent route through
// is_pi(p, n-1) is evaluated as well; the two routes agreeing is a theorem,
// so a disagreement raises an internal error instead of a verdict.
CentralityVerdict is_central(const TracePolynomial& p, int n,
                             const PIOptions& opts = {});

struct CentralConstruction {
    TracePolynomial p;
    std::string name;
    CentralityVerdict verification;
};

// x1 for n=1, the commutator square for n=2, Formanek's polynomial beyond.
// The result is re-verified by is_central and failure throws: a central
// polynomial that does not verify must not be exposed.
CentralConstruction construct_central(int n, const PIOptions& opts = {});

struct CentralForPointsResult {
    TracePolynomial s;
    std::string base_name;
    std::vector<int> representative;            // input index -> class representative
    std::vector<TracePolynomial> interpolants;  // p_j with p_j(A_i) = b_j for all i
    MatrixTuple targets;                        // the b_j
    std::optional<std::uint64_t> target_seed;   // set when b was found by search
    int words_used = 0;                         // enumeration cutoff
    std::vector<EvaluationReport> reports;      // s at every input point
};

// Builds one polynomial s with s(A_i) a nonzero scalar at every input point:
// dedups conjugate points, fixes targets b with base(b) != 0, interpolates
// p_j through the joint evaluation at the representatives (the span of word
// evaluations fills (M_n)^r because the points are non-conjugate and
// generating), and returns s = base(p_1..p_N).
CentralForPointsResult central_for_points(const std::vector<MatrixTuple>& points,
                                          int n, const PIOptions& opts = {});

}  // namespace genmat
