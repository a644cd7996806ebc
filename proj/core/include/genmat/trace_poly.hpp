#pragma once

#include <optional>
#include <string>
#include <vector>

#include "genmat/rational.hpp"
#include "genmat/word.hpp"

namespace genmat {

// coefficient * tr(f_1) * ... * tr(f_k) * x_{w_1} ... x_{w_l}.
// Trace factors are nonempty words stored as their least rotations, sorted;
// the plain word may be empty (a scalar multiple of 1).
struct TraceMonomial {
    Rational coefficient;
    std::vector<Word> trace_factors;
    Word plain_word;

    int degree() const;
    bool operator==(const TraceMonomial&) const = default;
};

// Element of the trace ring of m generic matrices in normal form: monomials
// with pairwise distinct (plain word, trace factors) keys, nonzero
// coefficients, ordered graded-lex on the plain word then on the factors.
class TracePolynomial {
public:
    explicit TracePolynomial(int m);
    static TracePolynomial constant(int m, const Rational& c);
    static TracePolynomial variable(int m, int index);
    static TracePolynomial word(int m, const Word& w);
    static TracePolynomial sum_of(int m, std::vector<TraceMonomial> terms);

    int generators() const { return m_; }
    const std::vector<TraceMonomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool trace_free() const;
    bool word_free() const;
    Rational constant_coefficient() const;
    int degree() const;

    TracePolynomial operator+(const TracePolynomial&) const;
    TracePolynomial operator-(const TracePolynomial&) const;
    TracePolynomial operator*(const TracePolynomial&) const;
    TracePolynomial operator-() const;
    TracePolynomial scaled(const Rational& c) const;
    TracePolynomial pow(int k) const;
    bool operator==(const TracePolynomial&) const = default;

    // Same element viewed in a larger ambient generator count.
    TracePolynomial widened(int new_m) const;

    // Canonical printer; output reparses to the same normal form.
    std::string to_string() const;

private:
    int m_;
    std::vector<TraceMonomial> terms_;
};

// tr(p). Tracing a monomial with empty plain word multiplies its coefficient
// by n, so n is required whenever such a monomial is present.
TracePolynomial trace_of(const TracePolynomial& p, std::optional<int> n = std::nullopt);

// det(p) for n x n arguments, expanded via Newton's identities over tr(p^k).
TracePolynomial det_of(const TracePolynomial& p, int n);

// Replaces x_i by values[i-1]; p must be trace-free, values share one ambient m.
TracePolynomial substitute(const TracePolynomial& p,
                           const std::vector<TracePolynomial>& values);

// One multihomogeneous component of p after full polarization. The fresh
// variables are renumbered 1..total degree; original letter i owns the block
// offset(i)+1 .. offset(i)+multidegree[i], with offset(i) the partial sum of
// earlier multidegrees.
struct PolarizedComponent {
    std::vector<int> multidegree;  // per original letter 1..m
    TracePolynomial p;
};

std::vector<PolarizedComponent> polarized_components(const TracePolynomial& p);

// Splits trace-free p into multihomogeneous components and fully polarizes
// each: a variable of degree d is replaced by d fresh variables, summing over
// all placements; fresh variables are renumbered 1..deg per component.
// In characteristic zero p is an identity of M_n iff every output is.
std::vector<TracePolynomial> multilinearize(const TracePolynomial& p);

}  // namespace genmat
