#include "genmat/trace_poly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

#include "genmat/errors.hpp"
#include "genmat/limits.hpp"

namespace genmat {

namespace {

bool factors_less(const std::vector<Word>& a, const std::vector<Word>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return graded_lex_less(a[i], b[i]);
    return false;
}

bool key_less(const TraceMonomial& a, const TraceMonomial& b) {
    if (a.plain_word != b.plain_word) return graded_lex_less(a.plain_word, b.plain_word);
    return factors_less(a.trace_factors, b.trace_factors);
}

bool key_equal(const TraceMonomial& a, const TraceMonomial& b) {
    return a.plain_word == b.plain_word && a.trace_factors == b.trace_factors;
}

void check_letters(const Word& w, int m) {
    for (int c : w)
        if (c < 1 || c > m)
            throw PreconditionError("generator index " + std::to_string(c) +
                                    " outside 1.." + std::to_string(m));
}

void check_count(std::uint64_t count) {
    if (count > limits::monomial_ceiling())
        throw ResourceLimitError("expansion would exceed the monomial ceiling (" +
                                 std::to_string(limits::monomial_ceiling()) + ")");
}

std::vector<TraceMonomial> normalize(int m, std::vector<TraceMonomial> terms) {
    check_count(terms.size());
    for (auto& t : terms) {
        check_letters(t.plain_word, m);
        for (auto& f : t.trace_factors) {
            if (f.empty()) throw InternalError("empty trace factor");
            check_letters(f, m);
            f = min_rotation(f);
        }
        std::sort(t.trace_factors.begin(), t.trace_factors.end(), graded_lex_less);
    }
    std::sort(terms.begin(), terms.end(), key_less);
    std::vector<TraceMonomial> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && key_equal(out.back(), t))
            out.back().coefficient += t.coefficient;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().coefficient == 0) out.pop_back();
    }
    return out;
}

std::string word_expr(const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += '*';
        out += 'X';
        out += std::to_string(w[i]);
    }
    return out;
}

}  // namespace

int TraceMonomial::degree() const {
    std::size_t d = plain_word.size();
    for (const auto& f : trace_factors) d += f.size();
    return static_cast<int>(d);
}

TracePolynomial::TracePolynomial(int m) : m_(m) {
    if (m < 0) throw PreconditionError("generator count must be nonnegative");
}

TracePolynomial TracePolynomial::constant(int m, const Rational& c) {
    TracePolynomial p(m);
    if (c != 0) p.terms_.push_back({c, {}, {}});
    return p;
}

TracePolynomial TracePolynomial::variable(int m, int index) {
    return word(m, Word{index});
}

TracePolynomial TracePolynomial::word(int m, const Word& w) {
    TracePolynomial p(m);
    check_letters(w, m);
    p.terms_.push_back({1, {}, w});
    return p;
}

TracePolynomial TracePolynomial::sum_of(int m, std::vector<TraceMonomial> terms) {
    TracePolynomial p(m);
    p.terms_ = normalize(m, std::move(terms));
    return p;
}

bool TracePolynomial::trace_free() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const TraceMonomial& t) { return t.trace_factors.empty(); });
}

bool TracePolynomial::word_free() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const TraceMonomial& t) { return t.plain_word.empty(); });
}

Rational TracePolynomial::constant_coefficient() const {
    for (const auto& t : terms_)
        if (t.plain_word.empty() && t.trace_factors.empty()) return t.coefficient;
    return 0;
}

int TracePolynomial::degree() const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.degree());
    return d;
}

TracePolynomial TracePolynomial::operator+(const TracePolynomial& rhs) const {
    if (m_ != rhs.m_) throw PreconditionError("generator-count mismatch");
    check_count(static_cast<std::uint64_t>(terms_.size()) + rhs.terms_.size());
    std::vector<TraceMonomial> all = terms_;
    all.insert(all.end(), rhs.terms_.begin(), rhs.terms_.end());
    return sum_of(m_, std::move(all));
}

TracePolynomial TracePolynomial::operator-(const TracePolynomial& rhs) const {
    return *this + (-rhs);
}

TracePolynomial TracePolynomial::operator*(const TracePolynomial& rhs) const {
    if (m_ != rhs.m_) throw PreconditionError("generator-count mismatch");
    check_count(static_cast<std::uint64_t>(terms_.size()) * rhs.terms_.size());
    std::vector<TraceMonomial> prod;
    prod.reserve(terms_.size() * rhs.terms_.size());
    for (const auto& a : terms_) {
        for (const auto& b : rhs.terms_) {
            TraceMonomial t;
            t.coefficient = a.coefficient * b.coefficient;
            t.trace_factors = a.trace_factors;
            t.trace_factors.insert(t.trace_factors.end(), b.trace_factors.begin(),
                                   b.trace_factors.end());
            t.plain_word = a.plain_word;
            t.plain_word.insert(t.plain_word.end(), b.plain_word.begin(),
                                b.plain_word.end());
            prod.push_back(std::move(t));
        }
    }
    return sum_of(m_, std::move(prod));
}

TracePolynomial TracePolynomial::operator-() const {
    TracePolynomial p(m_);
    p.terms_ = terms_;
    for (auto& t : p.terms_) t.coefficient = -t.coefficient;
    return p;
}

TracePolynomial TracePolynomial::scaled(const Rational& c) const {
    if (c == 0) return TracePolynomial(m_);
    TracePolynomial p(m_);
    p.terms_ = terms_;
    for (auto& t : p.terms_) t.coefficient *= c;
    return p;
}

TracePolynomial TracePolynomial::pow(int k) const {
    if (k < 0) throw PreconditionError("negative exponent");
    TracePolynomial acc = constant(m_, 1);
    for (int i = 0; i < k; ++i) acc = acc * *this;
    return acc;
}

TracePolynomial TracePolynomial::widened(int new_m) const {
    if (new_m < m_) throw PreconditionError("cannot shrink generator count");
    TracePolynomial p(new_m);
    p.terms_ = terms_;
    return p;
}

std::string TracePolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : terms_) {
        const bool negative = t.coefficient < 0;
        const Rational mag = negative ? Rational(-t.coefficient) : t.coefficient;
        if (first)
            out << (negative ? "-" : "");
        else
            out << (negative ? " - " : " + ");
        first = false;
        std::vector<std::string> pieces;
        if (mag != 1 || (t.trace_factors.empty() && t.plain_word.empty()))
            pieces.push_back(genmat::to_string(mag));
        for (const auto& f : t.trace_factors) pieces.push_back("tr(" + word_expr(f) + ")");
        if (!t.plain_word.empty()) pieces.push_back(word_expr(t.plain_word));
        for (std::size_t i = 0; i < pieces.size(); ++i)
            out << (i ? "*" : "") << pieces[i];
    }
    return out.str();
}

TracePolynomial trace_of(const TracePolynomial& p, std::optional<int> n) {
    std::vector<TraceMonomial> terms;
    terms.reserve(p.terms().size());
    for (const auto& t : p.terms()) {
        TraceMonomial out = t;
        if (t.plain_word.empty()) {
            if (!n)
                throw PreconditionError(
                    "trace of a constant term needs the matrix size n");
            out.coefficient *= *n;
        } else {
            out.trace_factors.push_back(min_rotation(t.plain_word));
            out.plain_word.clear();
        }
        terms.push_back(std::move(out));
    }
    return TracePolynomial::sum_of(p.generators(), std::move(terms));
}

TracePolynomial det_of(const TracePolynomial& p, int n) {
    if (n < 1) throw PreconditionError("matrix size must be positive");
    const int m = p.generators();
    // Newton's identities: k e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} tr(p^i).
    std::vector<TracePolynomial> pw;
    TracePolynomial power = TracePolynomial::constant(m, 1);
    for (int i = 1; i <= n; ++i) {
        power = power * p;
        pw.push_back(trace_of(power, n));
    }
    std::vector<TracePolynomial> e;
    e.push_back(TracePolynomial::constant(m, 1));
    for (int k = 1; k <= n; ++k) {
        TracePolynomial acc(m);
        for (int i = 1; i <= k; ++i) {
            TracePolynomial term = e[static_cast<std::size_t>(k - i)] *
                                   pw[static_cast<std::size_t>(i - 1)];
            acc = (i % 2 == 0) ? acc - term : acc + term;
        }
        e.push_back(acc.scaled(Rational(1) / k));
    }
    return e.back();
}

TracePolynomial substitute(const TracePolynomial& p,
                           const std::vector<TracePolynomial>& values) {
    if (!p.trace_free())
        throw PreconditionError("substitution target must be trace-free");
    if (static_cast<int>(values.size()) < p.generators())
        throw PreconditionError("substitution needs one value per generator");
    if (values.empty()) throw PreconditionError("no substitution values");
    const int m_out = values.front().generators();
    for (const auto& v : values)
        if (v.generators() != m_out)
            throw PreconditionError("substitution values disagree on generator count");
    TracePolynomial acc(m_out);
    for (const auto& t : p.terms()) {
        TracePolynomial prod = TracePolynomial::constant(m_out, t.coefficient);
        for (int letter : t.plain_word)
            prod = prod * values[static_cast<std::size_t>(letter - 1)];
        acc = acc + prod;
    }
    return acc;
}

std::vector<PolarizedComponent> polarized_components(const TracePolynomial& p) {
    if (!p.trace_free())
        throw PreconditionError("multilinearization applies to trace-free input");
    const int m = p.generators();

    // Multihomogeneous split by letter-count vector.
    std::map<std::vector<int>, std::vector<TraceMonomial>> components;
    for (const auto& t : p.terms()) {
        std::vector<int> deg(static_cast<std::size_t>(m), 0);
        for (int letter : t.plain_word) ++deg[static_cast<std::size_t>(letter - 1)];
        components[std::move(deg)].push_back(t);
    }

    std::vector<PolarizedComponent> out;
    for (const auto& [deg, terms] : components) {
        // Fresh variables: letter i owns the block offset[i]+1 .. offset[i]+deg[i].
        std::vector<int> offset(static_cast<std::size_t>(m), 0);
        int total = 0;
        for (int i = 0; i < m; ++i) {
            offset[static_cast<std::size_t>(i)] = total;
            total += deg[static_cast<std::size_t>(i)];
        }
        const int m_fresh = std::max(total, 1);

        std::uint64_t placements = 1;
        for (int d : deg) {
            for (int i = 2; i <= d; ++i) {
                placements *= static_cast<std::uint64_t>(i);
                check_count(placements);
            }
        }
        check_count(placements * terms.size());

        std::vector<TraceMonomial> expanded;
        for (const auto& t : terms) {
            // All ways to hand the occurrences of each letter its fresh block.
            std::vector<std::vector<int>> perms(static_cast<std::size_t>(m));
            for (int i = 0; i < m; ++i) {
                perms[static_cast<std::size_t>(i)].resize(
                    static_cast<std::size_t>(deg[static_cast<std::size_t>(i)]));
                std::iota(perms[static_cast<std::size_t>(i)].begin(),
                          perms[static_cast<std::size_t>(i)].end(), 0);
            }
            while (true) {
                Word w;
                w.reserve(t.plain_word.size());
                std::vector<int> seen(static_cast<std::size_t>(m), 0);
                for (int letter : t.plain_word) {
                    const auto li = static_cast<std::size_t>(letter - 1);
                    w.push_back(offset[li] + perms[li][static_cast<std::size_t>(
                                                seen[li]++)] + 1);
                }
                expanded.push_back({t.coefficient, {}, std::move(w)});
                int i = m - 1;
                while (i >= 0 &&
                       !std::next_permutation(perms[static_cast<std::size_t>(i)].begin(),
                                              perms[static_cast<std::size_t>(i)].end()))
                    --i;
                if (i < 0) break;
            }
        }
        out.push_back({deg, TracePolynomial::sum_of(m_fresh, std::move(expanded))});
    }
    return out;
}

std::vector<TracePolynomial> multilinearize(const TracePolynomial& p) {
    std::vector<TracePolynomial> out;
    for (auto& c : polarized_components(p)) out.push_back(std::move(c.p));
    return out;
}

}  // namespace genmat
