#include "genmat/nullstellensatz.hpp"

#include <algorithm>
#include <thread>
#include <utility>

#include "genmat/errors.hpp"
#include "genmat/limits.hpp"
#include "genmat/linalg.hpp"

namespace genmat {

namespace {

void check_points(const std::vector<MatrixTuple>& points, int m) {
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].arity() != m)
            throw PreconditionError("point " + std::to_string(i) +
                                    " has arity " + std::to_string(points[i].arity()) +
                                    ", expected " + std::to_string(m));
        if (points[i].side() != points.front().side())
            throw PreconditionError("points disagree on matrix size");
        if (!generates(points[i]))
            throw PreconditionError("point " + std::to_string(i) +
                                    " does not generate the matrix algebra");
    }
}

std::vector<int> dedup_representatives(const std::vector<MatrixTuple>& points,
                                       std::vector<int>& reps) {
    std::vector<int> out(points.size(), 0);
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
        out[i] = found;
    }
    return out;
}

}  // namespace

PointIdealBasis ideal_of_points(const std::vector<MatrixTuple>& points, int m,
                                int d) {
    if (m < 1) throw PreconditionError("generator count must be positive");
    if (d < 0) throw PreconditionError("degree bound must be nonnegative");
    check_points(points, m);

    PointIdealBasis out;
    out.degree_bound = d;
    std::vector<int> reps;
    out.representative = dedup_representatives(points, reps);

    const std::vector<Word> words = words_up_to(m, d);
    if (words.size() > limits::monomial_ceiling())
        throw ResourceLimitError("word count exceeds the monomial ceiling");
    out.ambient_dim = static_cast<int>(words.size());

    // Joint evaluation rows: one row per (representative, matrix cell), one
    // column per word; the kernel is the truncated ideal.
    std::vector<RowVec> rows;
    if (!points.empty()) {
        const int n = points.front().side();
        rows.assign(reps.size() * static_cast<std::size_t>(n) * n,
                    RowVec(words.size()));
        for (std::size_t r = 0; r < reps.size(); ++r) {
            const MatrixTuple& a = points[static_cast<std::size_t>(reps[r])];
            Word prev;
            std::vector<Matrix> prefix{Matrix::identity(n)};
            for (std::size_t c = 0; c < words.size(); ++c) {
                const Word& w = words[c];
                std::size_t keep = 0;
                while (keep < prev.size() && keep < w.size() && prev[keep] == w[keep])
                    ++keep;
                prefix.erase(prefix.begin() + static_cast<std::ptrdiff_t>(keep) + 1,
                             prefix.end());
                for (std::size_t i = keep; i < w.size(); ++i)
                    prefix.push_back(prefix.back() * a[w[i] - 1]);
                prev = w;
                const auto& flat = prefix.back().flat();
                for (std::size_t cell = 0; cell < flat.size(); ++cell)
                    rows[r * flat.size() + cell][c] = flat[cell];
            }
        }
    }

    for (auto& vec : kernel_basis(rows, static_cast<int>(words.size()))) {
        std::vector<TraceMonomial> terms;
        for (std::size_t c = 0; c < words.size(); ++c)
            if (vec[c] != 0) terms.push_back({vec[c], {}, words[c]});
        out.basis.push_back(TracePolynomial::sum_of(m, std::move(terms)));
    }
    out.kernel_dim = static_cast<int>(out.basis.size());
    return out;
}

SeparationOutcome separate(const std::vector<MatrixTuple>& points,
                           const MatrixTuple& target, int d_max, int m) {
    if (d_max < 1) throw PreconditionError("degree cap must be at least 1");
    check_points(points, m);
    if (target.arity() != m || !generates(target))
        throw PreconditionError("target must be a generating tuple of matching arity");

    SeparationOutcome out;
    for (const auto& p : points) {
        if (p.side() != target.side())
            throw PreconditionError("target size differs from the points");
        if (conjugate_test(p, target).conjugate) {
            out.status = SeparationOutcome::Status::Conjugate;
            return out;
        }
    }
    for (int d = 1; d <= d_max; ++d) {
        PointIdealBasis basis = ideal_of_points(points, m, d);
        for (const auto& candidate : basis.basis) {
            EvaluationReport r = evaluate(candidate, target);
            if (!r.is_zero) {
                out.status = SeparationOutcome::Status::Separated;
                out.witness = candidate;
                out.degree_used = d;
                out.target_value = std::move(r);
                return out;
            }
        }
    }
    out.status = SeparationOutcome::Status::BoundExhausted;
    out.degree_used = d_max;
    return out;
}

bool zero_locus_member(const IdealPresentation& J, const MatrixTuple& a) {
    return ideal_dichotomy(J, a) == ImageKind::ZeroImage;
}

ExperimentReport nullstellensatz_experiment(const std::vector<MatrixTuple>& points,
                                            const std::vector<MatrixTuple>& targets,
                                            int d, int m, int jobs) {
    if (jobs < 1) throw PreconditionError("jobs must be at least 1");
    ExperimentReport report;
    report.d = d;
    report.basis = ideal_of_points(points, m, d);

    report.sound = true;
    for (const auto& p : points)
        for (const auto& b : report.basis.basis)
            if (!evaluate(b, p).is_zero) report.sound = false;
    if (!report.sound)
        throw InternalError("ideal basis fails to vanish on a defining point");

    for (const auto& t : targets) {
        if (t.arity() != m || !generates(t))
            throw PreconditionError("targets must be generating tuples of matching arity");
        if (!points.empty() && t.side() != points.front().side())
            throw PreconditionError("target size differs from the points");
    }

    report.targets.resize(targets.size());
    auto verdict_for = [&](std::size_t i) {
        const MatrixTuple& t = targets[i];
        ExperimentTargetVerdict v;
        v.member = true;
        for (const auto& b : report.basis.basis) {
            if (!evaluate(b, t).is_zero) {
                v.member = false;
                v.witness = b;
                break;
            }
        }
        for (const auto& p : points)
            if (conjugate_test(p, t).conjugate) {
                v.conjugate_to_point = true;
                break;
            }
        v.consistent = v.member == v.conjugate_to_point;
        report.targets[i] = std::move(v);
    };

    const int workers = std::min<int>(jobs, static_cast<int>(targets.size()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < targets.size(); ++i) verdict_for(i);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = static_cast<std::size_t>(w);
                         i < targets.size(); i += static_cast<std::size_t>(workers))
                        verdict_for(i);
                } catch (...) {
                    errors[static_cast<std::size_t>(w)] = std::current_exception();
                }
            });
        for (auto& th : pool) th.join();
        for (const auto& e : errors)
            if (e) std::rethrow_exception(e);
    }
    return report;
}

}  // namespace genmat
