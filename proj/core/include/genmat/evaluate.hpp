#pragma once

#include <optional>
#include <vector>

#include "genmat/matrix.hpp"
#include "genmat/rng.hpp"
#include "genmat/trace_poly.hpp"

namespace genmat {

struct EvaluationReport {
    Matrix value;
    bool is_zero;
    bool is_scalar;
    std::optional<Rational> scalar;  // present iff is_scalar
};

// Exact substitution of a_i for x_i; trace factors become scalars.
EvaluationReport evaluate(const TracePolynomial& p, const MatrixTuple& a);

// Whether the tuple generates the full n x n matrix algebra (with unit):
// closes span{I} under right multiplication by the a_i until it stabilizes.
bool generates(const MatrixTuple& a);

struct ConjugacyCertificate {
    bool conjugate;
    std::optional<Matrix> witness;  // invertible, witness*a_i = b_i*witness
    int intertwiner_dim;
};

// Exact conjugacy decision for generating tuples via the intertwiner space
// {g : g a_i = b_i g}. For such tuples the space has dimension 0 or 1, and a
// nonzero intertwiner is invertible; both facts are enforced, not assumed.
// The verdict is stable under field extension, so rational arithmetic decides
// conjugacy over any extension of the ground field.
ConjugacyCertificate conjugate_test(const MatrixTuple& a, const MatrixTuple& b);

struct IdealPresentation {
    int m = 0;
    int n = 0;
    std::vector<TracePolynomial> generators;  // trace-free, ambient m
};

enum class ImageKind { ZeroImage, FullImage };

// At a generating tuple a two-sided ideal either vanishes or fills M_n:
// any nonzero value generates M_n as an ideal because M_n is simple.
ImageKind ideal_dichotomy(const IdealPresentation& J, const MatrixTuple& a);

// Rejection-samples integer tuples until one generates M_n.
MatrixTuple random_generating_tuple(Rng& rng, int m, int n, std::int64_t lo,
                                    std::int64_t hi);

}  // namespace genmat
