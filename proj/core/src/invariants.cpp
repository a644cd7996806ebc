#include "genmat/invariants.hpp"

#include <sstream>

#include "genmat/builtins.hpp"
#include "genmat/errors.hpp"
#include "genmat/evaluate.hpp"

namespace genmat {

std::vector<Word> enumerate_necklaces(int m, int max_len) {
    return necklaces_up_to(m, max_len);
}

Fingerprint fingerprint(const MatrixTuple& a, int max_len) {
    if (max_len < 1) throw PreconditionError("max_len must be at least 1");
    const int n = a.side();
    Fingerprint fp{n, a.arity(), max_len, {}};

    // Necklaces arrive sorted, so consecutive words share prefix products.
    Word prev;
    std::vector<Matrix> prefix{Matrix::identity(n)};
    for (const auto& w : enumerate_necklaces(a.arity(), max_len)) {
        std::size_t keep = 0;
        while (keep < prev.size() && keep < w.size() && prev[keep] == w[keep]) ++keep;
        prefix.erase(prefix.begin() + static_cast<std::ptrdiff_t>(keep) + 1, prefix.end());
        for (std::size_t i = keep; i < w.size(); ++i)
            prefix.push_back(prefix.back() * a[w[i] - 1]);
        prev = w;
        fp.values.emplace_back(w, prefix.back().trace());
    }
    return fp;
}

std::string Fingerprint::to_text() const {
    std::ostringstream out;
    out << "n=" << n << " m=" << m << " maxLen=" << max_len << "\n";
    for (const auto& [w, v] : values)
        out << word_key(w) << "=" << genmat::to_string(v) << "\n";
    return out.str();
}

Separation separated_by_fingerprint(const MatrixTuple& a, const MatrixTuple& b,
                                    int max_len) {
    if (a.side() != b.side() || a.arity() != b.arity())
        throw PreconditionError("tuples differ in size or arity");
    return fingerprint(a, max_len) == fingerprint(b, max_len)
               ? Separation::Indistinguishable
               : Separation::Distinct;
}

Rational friedland(const MatrixTuple& a) {
    if (a.side() != 2 || a.arity() != 2)
        throw PreconditionError("friedland needs a pair of 2x2 matrices");
    EvaluationReport r = evaluate(friedland_invariant(), a);
    if (!r.is_scalar) throw InternalError("trace polynomial evaluated non-centrally");
    return *r.scalar;
}

}  // namespace genmat
