#include "genmat/builtins.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "genmat/errors.hpp"
#include "genmat/limits.hpp"

namespace genmat {

namespace {

int permutation_sign(const std::vector<int>& perm) {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

// Sparse commutative polynomial in t_1..t_k, keyed by exponent vector.
using CommPoly = std::map<std::vector<int>, Rational>;

CommPoly comm_linear(int k, int i, int j) {
    // t_i - t_j
    std::vector<int> ei(static_cast<std::size_t>(k), 0);
    std::vector<int> ej(static_cast<std::size_t>(k), 0);
    ei[static_cast<std::size_t>(i - 1)] = 1;
    ej[static_cast<std::size_t>(j - 1)] = 1;
    return {{ei, 1}, {ej, -1}};
}

CommPoly comm_mul(const CommPoly& a, const CommPoly& b) {
    CommPoly out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out[e] += ca * cb;
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

}  // namespace

TracePolynomial standard_identity(int k) {
    if (k < 1) throw PreconditionError("std(k) needs k >= 1");
    std::uint64_t count = 1;
    for (int i = 2; i <= k; ++i) {
        count *= static_cast<std::uint64_t>(i);
        if (count > limits::monomial_ceiling())
            throw ResourceLimitError("std(" + std::to_string(k) +
                                     ") exceeds the monomial ceiling");
    }
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<TraceMonomial> terms;
    terms.reserve(count);
    do {
        terms.push_back({permutation_sign(perm), {}, perm});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return TracePolynomial::sum_of(k, std::move(terms));
}

TracePolynomial commutator_square() {
    TracePolynomial x1 = TracePolynomial::variable(2, 1);
    TracePolynomial x2 = TracePolynomial::variable(2, 2);
    TracePolynomial c = x1 * x2 - x2 * x1;
    return c * c;
}

TracePolynomial friedland_invariant() {
    const int m = 2;
    auto tr_word = [&](const Word& w) {
        return trace_of(TracePolynomial::word(m, w));
    };
    TracePolynomial q1 = tr_word({1, 1}).scaled(2) - tr_word({1}) * tr_word({1});
    TracePolynomial q2 = tr_word({2, 2}).scaled(2) - tr_word({2}) * tr_word({2});
    TracePolynomial cross = tr_word({1, 2}).scaled(2) - tr_word({1}) * tr_word({2});
    return q1 * q2 - cross * cross;
}

TracePolynomial formanek(int n) {
    if (n < 1) throw PreconditionError("formanek(n) needs n >= 1");
    const int k = n + 1;
    CommPoly f = {{std::vector<int>(static_cast<std::size_t>(k), 0), 1}};
    for (int i = 2; i <= n; ++i) {
        f = comm_mul(f, comm_linear(k, 1, i));
        f = comm_mul(f, comm_linear(k, k, i));
    }
    for (int i = 2; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const CommPoly d = comm_linear(k, i, j);
            f = comm_mul(f, comm_mul(d, d));
        }

    // t_1^{a_1}..t_{k}^{a_k} becomes x^{a_1} y_1 x^{a_2} .. y_n x^{a_k},
    // summed over the n cyclic shifts of (y_1..y_n); x = X1, y_i = X(1+i).
    const int m = n + 1;
    std::vector<TraceMonomial> terms;
    for (const auto& [exps, coeff] : f) {
        for (int shift = 0; shift < n; ++shift) {
            Word w;
            for (int slot = 0; slot < k; ++slot) {
                for (int rep = 0; rep < exps[static_cast<std::size_t>(slot)]; ++rep)
                    w.push_back(1);
                if (slot < n) w.push_back(2 + (slot + shift) % n);
            }
            terms.push_back({coeff, {}, std::move(w)});
        }
    }
    return TracePolynomial::sum_of(m, std::move(terms));
}

TracePolynomial builtin(const std::string& name) {
    if (name == "comm_sq") return commutator_square();
    if (name == "friedland_c") return friedland_invariant();
    auto arg_of = [&](const std::string& head) -> std::optional<int> {
        if (name.size() <= head.size() + 2 || name.compare(0, head.size(), head) != 0 ||
            name[head.size()] != '(' || name.back() != ')')
            return std::nullopt;
        const std::string digits = name.substr(head.size() + 1,
                                               name.size() - head.size() - 2);
        if (digits.empty() ||
            !std::all_of(digits.begin(), digits.end(),
                         [](char c) { return c >= '0' && c <= '9'; }))
            return std::nullopt;
        if (digits.size() > 6) throw PreconditionError("builtin argument too large");
        return std::stoi(digits);
    };
    if (auto k = arg_of("std")) return standard_identity(*k);
    if (auto nn = arg_of("formanek")) return formanek(*nn);
    throw ParseError("unknown builtin '" + name + "'", 0);
}

}  // namespace genmat
