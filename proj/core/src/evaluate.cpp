#include "genmat/evaluate.hpp"

#include <map>

#include "genmat/errors.hpp"
#include "genmat/linalg.hpp"

namespace genmat {

namespace {

RowVec flatten(const Matrix& m) { return m.flat(); }

Matrix word_value(const Word& w, const MatrixTuple& a) {
    Matrix v = Matrix::identity(a.side());
    for (int letter : w) v = v * a[letter - 1];
    return v;
}

}  // namespace

EvaluationReport evaluate(const TracePolynomial& p, const MatrixTuple& a) {
    if (p.generators() != a.arity())
        throw PreconditionError("polynomial arity does not match tuple arity");
    const int n = a.side();
    Matrix acc(n);
    std::map<Word, Rational> trace_cache;

    // Terms are sorted by plain word, so consecutive words share prefixes;
    // prefix[i] holds the product of the first i letters of the last word.
    Word prev;
    std::vector<Matrix> prefix{Matrix::identity(n)};
    for (const auto& t : p.terms()) {
        Rational c = t.coefficient;
        for (const auto& f : t.trace_factors) {
            auto it = trace_cache.find(f);
            if (it == trace_cache.end())
                it = trace_cache.emplace(f, word_value(f, a).trace()).first;
            c *= it->second;
            if (c == 0) break;
        }
        if (c == 0) continue;
        std::size_t keep = 0;
        while (keep < prev.size() && keep < t.plain_word.size() &&
               prev[keep] == t.plain_word[keep])
            ++keep;
        prefix.erase(prefix.begin() + static_cast<std::ptrdiff_t>(keep) + 1, prefix.end());
        for (std::size_t i = keep; i < t.plain_word.size(); ++i)
            prefix.push_back(prefix.back() * a[t.plain_word[i] - 1]);
        prev = t.plain_word;
        acc = acc + prefix.back().scaled(c);
    }

    EvaluationReport report{acc, acc.is_zero(), acc.is_scalar(), std::nullopt};
    if (report.is_scalar) report.scalar = acc.at(0, 0);
    return report;
}

bool generates(const MatrixTuple& a) {
    const int n = a.side();
    SpanBuilder span(n * n);
    std::vector<Matrix> basis{Matrix::identity(n)};
    span.insert(flatten(basis.front()));
    for (std::size_t next = 0; next < basis.size(); ++next) {
        if (span.dim() == n * n) return true;
        for (int i = 0; i < a.arity(); ++i) {
            Matrix prod = basis[next] * a[i];
            if (span.insert(flatten(prod))) basis.push_back(std::move(prod));
        }
    }
    return span.dim() == n * n;
}

ConjugacyCertificate conjugate_test(const MatrixTuple& a, const MatrixTuple& b) {
    if (a.side() != b.side() || a.arity() != b.arity())
        throw PreconditionError("tuples differ in size or arity");
    if (!generates(a) || !generates(b))
        throw PreconditionError("conjugacy test needs generating tuples");
    const int n = a.side();

    // Unknown g as a flat n^2 vector; one equation per (i, row, col) of
    // g*a_i - b_i*g = 0.
    std::vector<RowVec> rows;
    rows.reserve(static_cast<std::size_t>(a.arity()) * n * n);
    for (int i = 0; i < a.arity(); ++i) {
        for (int r = 0; r < n; ++r) {
            for (int s = 0; s < n; ++s) {
                RowVec row(static_cast<std::size_t>(n) * n);
                for (int k = 0; k < n; ++k) {
                    row[static_cast<std::size_t>(r * n + k)] += a[i].at(k, s);
                    row[static_cast<std::size_t>(k * n + s)] -= b[i].at(r, k);
                }
                rows.push_back(std::move(row));
            }
        }
    }
    const auto kernel = kernel_basis(rows, n * n);
    const int dim = static_cast<int>(kernel.size());
    if (dim == 0) return {false, std::nullopt, 0};
    if (dim > 1)
        throw InternalError("intertwiner space has dimension " +
                            std::to_string(dim) + "; inputs cannot both generate");
    Matrix g(n);
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s)
            g.at(r, s) = kernel.front()[static_cast<std::size_t>(r * n + s)];
    if (!g.inverse())
        throw InternalError("nonzero intertwiner is singular; inputs cannot both generate");
    for (int i = 0; i < a.arity(); ++i)
        if (!(g * a[i] == b[i] * g)) throw InternalError("intertwiner check failed");
    return {true, std::move(g), 1};
}

ImageKind ideal_dichotomy(const IdealPresentation& J, const MatrixTuple& a) {
    if (J.m != a.arity() || (J.n != 0 && J.n != a.side()))
        throw PreconditionError("ideal and tuple disagree on (m, n)");
    if (!generates(a))
        throw PreconditionError("dichotomy holds only at generating tuples");
    for (const auto& g : J.generators) {
        if (!g.trace_free())
            throw PreconditionError("ideal generators must be trace-free");
        if (!evaluate(g, a).is_zero) return ImageKind::FullImage;
    }
    return ImageKind::ZeroImage;
}

MatrixTuple random_generating_tuple(Rng& rng, int m, int n, std::int64_t lo,
                                    std::int64_t hi) {
    for (int attempt = 0; attempt < 10'000; ++attempt) {
        MatrixTuple a = rng.tuple(m, n, lo, hi);
        if (generates(a)) return a;
    }
    throw PreconditionError("no generating tuple found in 10000 draws; range too degenerate");
}

}  // namespace genmat
