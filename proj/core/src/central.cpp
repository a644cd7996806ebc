#include "genmat/central.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "genmat/builtins.hpp"
#include "genmat/errors.hpp"
#include "genmat/limits.hpp"
#include "genmat/linalg.hpp"
#include "genmat/rng.hpp"

namespace genmat {

namespace {

// Saturating sum over components of (n^2)^vars * terms.
std::uint64_t substitution_cost(int n, const std::vector<PolarizedComponent>& comps) {
    const std::uint64_t cap = UINT64_MAX;
    const std::uint64_t base = static_cast<std::uint64_t>(n) * n;
    std::uint64_t total = 0;
    for (const auto& c : comps) {
        std::uint64_t count = 1;
        for (int v = 0; v < c.p.generators(); ++v) {
            if (count > cap / base) return cap;
            count *= base;
        }
        const std::uint64_t terms = c.p.terms().size();
        if (terms != 0 && count > cap / terms) return cap;
        count *= terms;
        if (total > cap - count) return cap;
        total += count;
    }
    return total;
}

// Exhaustive matrix-unit sweep of one polarized component. Units compose by
// E_ij E_kl = [j == k] E_il, so a word evaluates by walking its index chain.
// Returns the first assignment (odometer order) with a nonzero value.
std::optional<std::vector<int>> sweep_component(const PolarizedComponent& comp, int n) {
    const int vars = comp.p.generators();
    const int units = n * n;
    std::vector<int> u(static_cast<std::size_t>(vars), 0);
    std::vector<Rational> grid(static_cast<std::size_t>(n) * n);
    std::vector<int> touched;
    while (true) {
        for (const auto& t : comp.p.terms()) {
            if (t.plain_word.empty()) {
                for (int d = 0; d < n; ++d) {
                    grid[static_cast<std::size_t>(d * n + d)] += t.coefficient;
                    touched.push_back(d * n + d);
                }
                continue;
            }
            const int first = u[static_cast<std::size_t>(t.plain_word.front() - 1)];
            int row = first / n;
            int link = first % n;
            bool alive = true;
            for (std::size_t k = 1; k < t.plain_word.size(); ++k) {
                const int uv = u[static_cast<std::size_t>(t.plain_word[k] - 1)];
                if (link != uv / n) {
                    alive = false;
                    break;
                }
                link = uv % n;
            }
            if (alive) {
                grid[static_cast<std::size_t>(row * n + link)] += t.coefficient;
                touched.push_back(row * n + link);
            }
        }
        bool nonzero = false;
        for (int cell : touched) {
            if (grid[static_cast<std::size_t>(cell)] != 0) nonzero = true;
            grid[static_cast<std::size_t>(cell)] = 0;
        }
        touched.clear();
        if (nonzero) return u;

        int pos = vars - 1;
        while (pos >= 0 && u[static_cast<std::size_t>(pos)] == units - 1) {
            u[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) return std::nullopt;
        ++u[static_cast<std::size_t>(pos)];
    }
}

// Folds a unit assignment of the polarized component back into an m-tuple:
// A_i is a weighted sum of that block's units. The component contributes the
// only squarefree-weight monomial, so the weighted value is a nonzero
// polynomial in the weights and small weight vectors quickly expose it.
MatrixTuple restitute_witness(const TracePolynomial& p,
                              const PolarizedComponent& comp,
                              const std::vector<int>& units, int n) {
    const int m = p.generators();
    std::vector<int> offset(static_cast<std::size_t>(m), 0);
    for (int i = 1; i < m; ++i)
        offset[static_cast<std::size_t>(i)] =
            offset[static_cast<std::size_t>(i - 1)] +
            comp.multidegree[static_cast<std::size_t>(i - 1)];

    Rng rng(0x9e3779b97f4a7c15ULL);
    for (int attempt = 0; attempt < 256; ++attempt) {
        std::vector<Matrix> ms;
        ms.reserve(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) {
            Matrix sum(n);
            const int d = comp.multidegree[static_cast<std::size_t>(i)];
            for (int v = 0; v < d; ++v) {
                const int uv = units[static_cast<std::size_t>(
                    offset[static_cast<std::size_t>(i)] + v)];
                Rational weight = attempt == 0   ? Rational(1)
                                  : attempt == 1 ? Rational(v + 1)
                                                 : Rational(rng.uniform(1, 64));
                sum = sum + Matrix::unit(n, uv / n, uv % n).scaled(weight);
            }
            ms.push_back(std::move(sum));
        }
        MatrixTuple candidate(std::move(ms));
        if (!evaluate(p, candidate).is_zero) return candidate;
    }
    throw InternalError("failed to fold a unit assignment into a witness");
}

PIVerdict randomized_pi(const TracePolynomial& p, int n, const PIOptions& opts,
                        bool downgraded) {
    if (opts.trials < 1) throw PreconditionError("randomized mode needs trials >= 1");
    if (opts.range_lo >= opts.range_hi)
        throw PreconditionError("evaluation range is empty");
    PIVerdict v;
    v.mode = PIMode::Randomized;
    v.downgraded = downgraded;
    v.seed = opts.seed;
    v.range_lo = opts.range_lo;
    v.range_hi = opts.range_hi;
    Rng rng(opts.seed);
    for (std::uint64_t t = 1; t <= opts.trials; ++t) {
        MatrixTuple a = rng.tuple(p.generators(), n, opts.range_lo, opts.range_hi);
        if (!evaluate(p, a).is_zero) {
            v.is_pi = false;
            v.trials = t;
            v.witness = std::move(a);
            return v;
        }
    }
    v.is_pi = true;
    v.trials = opts.trials;
    const double deg = static_cast<double>(p.degree());
    const double size = static_cast<double>(opts.range_hi) -
                        static_cast<double>(opts.range_lo) + 1.0;
    std::ostringstream note;
    note << "all " << opts.trials << " seeded evaluations vanished; a non-identity "
         << "of degree " << p.degree() << " vanishes at one uniform draw from ["
         << opts.range_lo << "," << opts.range_hi << "]^entries with probability <= "
         << deg << "/" << size;
    if (deg < size) {
        const double digits =
            static_cast<double>(opts.trials) * (std::log10(size) - std::log10(deg));
        note << ", so the all-vanish probability is <= 10^-" << std::llround(digits);
    } else {
        note << "; the range is too small for a useful bound";
    }
    v.confidence = note.str();
    return v;
}

}  // namespace

PIVerdict is_pi(const TracePolynomial& p, int n, const PIOptions& opts) {
    if (n < 1) throw PreconditionError("matrix size must be positive");
    if (!p.trace_free())
        throw PreconditionError("identity checking needs a trace-free polynomial");
    if (p.generators() < 1)
        throw PreconditionError("polynomial needs at least one generator");
    if (p.is_zero()) {
        PIVerdict v;
        v.is_pi = true;
        v.mode = PIMode::Deterministic;
        return v;
    }
    if (opts.mode == PIMode::Deterministic) {
        bool feasible = true;
        std::vector<PolarizedComponent> comps;
        try {
            comps = polarized_components(p);
            feasible = substitution_cost(n, comps) <= limits::substitution_ceiling();
        } catch (const ResourceLimitError&) {
            feasible = false;
        }
        if (feasible) {
            for (const auto& comp : comps) {
                if (auto hit = sweep_component(comp, n)) {
                    PIVerdict v;
                    v.is_pi = false;
                    v.mode = PIMode::Deterministic;
                    v.witness = restitute_witness(p, comp, *hit, n);
                    return v;
                }
            }
            PIVerdict v;
            v.is_pi = true;
            v.mode = PIMode::Deterministic;
            return v;
        }
        if (!opts.allow_downgrade)
            throw ResourceLimitError(
                "exhaustive identity check exceeds the substitution ceiling (" +
                std::to_string(limits::substitution_ceiling()) + ")");
        return randomized_pi(p, n, opts, true);
    }
    return randomized_pi(p, n, opts, false);
}

CentralityVerdict is_central(const TracePolynomial& p, int n, const PIOptions& opts) {
    const int m = p.generators();
    CentralityVerdict v;
    v.constant_term_zero = p.constant_coefficient() == 0;

    const TracePolynomial pw = p.widened(m + 1);
    const TracePolynomial fresh = TracePolynomial::variable(m + 1, m + 1);
    v.commutator = is_pi(pw * fresh - fresh * pw, n, opts);
    v.evaluations_central = v.commutator.is_pi;

    v.vanishing = is_pi(p, n, opts);
    v.not_identically_zero = !v.vanishing.is_pi;

    if (n >= 2) {
        v.smaller = is_pi(p, n - 1, opts);
        v.pi_for_smaller = v.smaller->is_pi;
    }

    const bool commutator_route =
        v.constant_term_zero && v.evaluations_central && v.not_identically_zero;
    if (commutator_route && !v.pi_for_smaller)
        throw InternalError(
            "centrality routes disagree: central evaluations with zero constant "
            "term force an identity one size down");
    v.is_central = commutator_route && v.pi_for_smaller;
    return v;
}

CentralConstruction construct_central(int n, const PIOptions& opts) {
    if (n < 1) throw PreconditionError("matrix size must be positive");
    CentralConstruction out{TracePolynomial(1), "", {}};
    if (n == 1) {
        out.p = TracePolynomial::variable(1, 1);
        out.name = "x1";
    } else if (n == 2) {
        out.p = commutator_square();
        out.name = "comm_sq";
    } else {
        out.p = formanek(n);
        out.name = "formanek(" + std::to_string(n) + ")";
    }
    out.verification = is_central(out.p, n, opts);
    if (!out.verification.is_central)
        throw InternalError("construct_central(" + std::to_string(n) +
                            "): candidate failed its centrality verification");
    return out;
}

namespace {

// Fixed evaluation targets b with base(b) a nonzero scalar. Deterministic for
// the shipped constructions; a seeded search is the fallback.
std::pair<MatrixTuple, std::optional<std::uint64_t>> central_targets(
    const CentralConstruction& base, int n, const PIOptions& opts) {
    std::vector<Matrix> b;
    if (n == 1) {
        b = {Matrix::from_rows({{Rational(1)}})};
    } else if (n == 2) {
        b = {Matrix::unit(2, 0, 1), Matrix::unit(2, 1, 0)};
    } else {
        // x regular diagonal, y_i the cycle of matrix units: every shift of
        // the auxiliary polynomial contributes the full discriminant.
        std::vector<Rational> diag;
        for (int i = 1; i <= n; ++i) diag.emplace_back(i);
        b.push_back(Matrix::diagonal(diag));
        for (int i = 0; i < n; ++i) b.push_back(Matrix::unit(n, i, (i + 1) % n));
    }
    if (static_cast<int>(b.size()) == base.p.generators()) {
        MatrixTuple candidate(b);
        EvaluationReport r = evaluate(base.p, candidate);
        if (r.is_scalar && !r.is_zero) return {candidate, std::nullopt};
    }
    Rng rng(opts.seed);
    for (int attempt = 0; attempt < 4096; ++attempt) {
        MatrixTuple candidate = rng.tuple(base.p.generators(), n, -4, 4);
        EvaluationReport r = evaluate(base.p, candidate);
        if (r.is_scalar && !r.is_zero) return {candidate, opts.seed};
    }
    throw InternalError("no evaluation targets found for the base polynomial");
}

}  // namespace

CentralForPointsResult central_for_points(const std::vector<MatrixTuple>& points,
                                          int n, const PIOptions& opts) {
    if (points.empty()) throw PreconditionError("at least one point is required");
    const int m = points.front().arity();
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].side() != n)
            throw PreconditionError("point " + std::to_string(i) +
                                    " does not consist of " + std::to_string(n) +
                                    "x" + std::to_string(n) + " matrices");
        if (points[i].arity() != m)
            throw PreconditionError("points disagree on arity");
        if (!generates(points[i]))
            throw PreconditionError("point " + std::to_string(i) +
                                    " does not generate the matrix algebra");
    }

    CentralForPointsResult out{TracePolynomial(m), "", {}, {}, MatrixTuple{},
                               std::nullopt, 0, {}};

    // Conjugate points would impose identical interpolation conditions; keep
    // one representative per class.
    out.representative.assign(points.size(), 0);
    std::vector<int> reps;
    for (std::size_t i = 0; i < points.size(); ++i) {
        int found = -1;
        for (int r : reps) {
            if (conjugate_test(points[static_cast<std::size_t>(r)], points[i])
                    .conjugate) {
                found = r;
                break;
            }
        }
        if (found < 0) {
            reps.push_back(static_cast<int>(i));
            found = static_cast<int>(i);
        }
        out.representative[i] = found;
    }

    CentralConstruction base = construct_central(n, opts);
    out.base_name = base.name;
    const int targets_arity = base.p.generators();
    auto [targets, target_seed] = central_targets(base, n, opts);
    out.targets = targets;
    out.target_seed = target_seed;

    // Joint evaluation vectors of words at the representatives, in graded-lex
    // word order, until they span one copy of M_n per representative.
    const int dim = static_cast<int>(reps.size()) * n * n;
    SpanBuilder span(dim);
    std::vector<Word> words;
    std::vector<RowVec> columns;
    std::vector<std::vector<Matrix>> prefix(reps.size());
    for (auto& pf : prefix) pf.push_back(Matrix::identity(n));
    Word current;
    bool done = false;
    for (int len = 0; !done; ++len) {
        bool grew = false;
        Word w(static_cast<std::size_t>(len), 1);
        while (true) {
            std::size_t keep = 0;
            while (keep < current.size() && keep < w.size() &&
                   current[keep] == w[keep])
                ++keep;
            for (std::size_t r = 0; r < reps.size(); ++r) {
                prefix[r].erase(prefix[r].begin() + static_cast<std::ptrdiff_t>(keep) + 1,
                                prefix[r].end());
                for (std::size_t i = keep; i < w.size(); ++i)
                    prefix[r].push_back(
                        prefix[r].back() *
                        points[static_cast<std::size_t>(reps[r])]
                              [w[i] - 1]);
            }
            current = w;
            RowVec joint;
            joint.reserve(static_cast<std::size_t>(dim));
            for (std::size_t r = 0; r < reps.size(); ++r) {
                const auto& flat = prefix[r].back().flat();
                joint.insert(joint.end(), flat.begin(), flat.end());
            }
            words.push_back(w);
            columns.push_back(joint);
            if (span.insert(std::move(joint))) grew = true;
            if (span.dim() == dim) {
                done = true;
                break;
            }
            if (words.size() > limits::monomial_ceiling())
                throw ResourceLimitError("interpolation word list exceeds the ceiling");

            if (len == 0) break;
            int pos = len - 1;
            while (pos >= 0 && w[static_cast<std::size_t>(pos)] == m) {
                w[static_cast<std::size_t>(pos)] = 1;
                --pos;
            }
            if (pos < 0) break;
            ++w[static_cast<std::size_t>(pos)];
        }
        if (!done && !grew)
            throw InternalError(
                "joint evaluation span stalled below full dimension; "
                "a conjugate pair escaped deduplication");
    }
    out.words_used = static_cast<int>(words.size());

    // One linear solve per base variable: coefficients over the enumerated
    // words; the echelon convention keeps the support on pivot words.
    std::vector<RowVec> rows(static_cast<std::size_t>(dim),
                             RowVec(words.size()));
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (int r = 0; r < dim; ++r)
            rows[static_cast<std::size_t>(r)][c] = columns[c][static_cast<std::size_t>(r)];
    for (int j = 0; j < targets_arity; ++j) {
        RowVec rhs;
        rhs.reserve(static_cast<std::size_t>(dim));
        for (std::size_t r = 0; r < reps.size(); ++r) {
            const auto& flat = targets[j].flat();
            rhs.insert(rhs.end(), flat.begin(), flat.end());
        }
        auto sol = solve_affine(rows, rhs);
        if (!sol) throw InternalError("interpolation system is inconsistent");
        std::vector<TraceMonomial> terms;
        for (std::size_t wix = 0; wix < words.size(); ++wix)
            if ((*sol)[wix] != 0) terms.push_back({(*sol)[wix], {}, words[wix]});
        out.interpolants.push_back(TracePolynomial::sum_of(m, std::move(terms)));
    }

    out.s = substitute(base.p, out.interpolants);
    for (const auto& point : points) {
        EvaluationReport r = evaluate(out.s, point);
        if (!r.is_scalar || r.is_zero)
            throw InternalError("combined polynomial failed to be a nonzero scalar "
                                "at an input point");
        out.reports.push_back(std::move(r));
    }
    return out;
}

}  // namespace genmat
