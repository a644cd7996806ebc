#include "commands.hpp"

#include <genmat/builtins.hpp>
#include <genmat/errors.hpp>
#include <genmat/parser.hpp>

#include "payload.hpp"

namespace genmat::cli {

namespace {

[[noreturn]] void usage_error(const std::string& msg) {
    // Reported like any malformed input: the invocation itself is the input.
    throw FileError(msg);
}

void check_consistent(const char* flag, std::optional<int> given, int actual) {
    if (given && *given != actual)
        throw PreconditionError(std::string(flag) + "=" + std::to_string(*given) +
                                " disagrees with the input file (" +
                                std::to_string(actual) + ")");
}

MatrixTuple require_tuple(const CommandOptions& o) {
    if (!o.tuple_path) usage_error("this command needs --tuple <path>");
    MatrixTuple a = read_tuple_file(*o.tuple_path);
    check_consistent("--n", o.n, a.side());
    check_consistent("--m", o.m, a.arity());
    return a;
}

TupleList require_tuple_list(const CommandOptions& o) {
    if (!o.tuples_path) usage_error("this command needs --tuples <path>");
    TupleList list = read_tuple_list_file(*o.tuples_path);
    check_consistent("--n", o.n, list.n);
    check_consistent("--m", o.m, list.m);
    return list;
}

PIOptions pi_options(const CommandOptions& o) {
    PIOptions opts;
    opts.mode = o.mode == "random" ? PIMode::Randomized : PIMode::Deterministic;
    opts.trials = o.trials;
    opts.seed = o.seed;
    return opts;
}

// The polynomial a command operates on: a parsed --expr (ambient m required
// from context) or a named --builtin, widened into the ambient when smaller.
TracePolynomial resolve_polynomial(const CommandOptions& o, int m,
                                   std::optional<int> n) {
    const bool has_expr = !o.exprs.empty();
    if (has_expr == o.builtin_name.has_value())
        usage_error("exactly one of --expr and --builtin is required");
    if (has_expr) {
        if (o.exprs.size() != 1)
            usage_error("this command takes a single --expr");
        return parse_expression(o.exprs.front(), m, n);
    }
    TracePolynomial p = builtin(*o.builtin_name);
    if (p.generators() > m)
        throw PreconditionError("builtin " + *o.builtin_name + " needs " +
                                std::to_string(p.generators()) +
                                " generators, only " + std::to_string(m) +
                                " available here");
    return p.generators() < m ? p.widened(m) : p;
}

// For commands without a tuple file the ambient m comes from --m, or from the
// builtin itself when only --builtin is given.
int ambient_generators(const CommandOptions& o) {
    if (o.m) {
        if (*o.m < 1) throw PreconditionError("m must be positive");
        return *o.m;
    }
    if (!o.exprs.empty())
        usage_error("--expr needs --m to fix the number of generators");
    if (!o.builtin_name)
        usage_error("exactly one of --expr and --builtin is required");
    return builtin(*o.builtin_name).generators();
}

int require_n(const CommandOptions& o) {
    if (!o.n) usage_error("this command needs --n");
    if (*o.n < 1) throw PreconditionError("n must be positive");
    return *o.n;
}

int require_degree(const CommandOptions& o) {
    if (!o.degree) usage_error("this command needs --degree");
    return *o.degree;
}

Json cmd_eval(const CommandOptions& o) {
    MatrixTuple a = require_tuple(o);
    TracePolynomial p = resolve_polynomial(o, a.arity(), a.side());
    Json j;
    j["n"] = a.side();
    j["m"] = a.arity();
    Json inner = evaluation_to_json(evaluate(p, a));
    j.update(inner);
    return j;
}

Json cmd_generates(const CommandOptions& o) {
    MatrixTuple a = require_tuple(o);
    Json j;
    j["n"] = a.side();
    j["m"] = a.arity();
    j["generates"] = generates(a);
    return j;
}

Json cmd_conjugate(const CommandOptions& o) {
    MatrixTuple a = require_tuple(o);
    if (!o.target_path) usage_error("conjugate needs --target <path>");
    MatrixTuple b = read_tuple_file(*o.target_path);
    Json j;
    j["n"] = a.side();
    j["m"] = a.arity();
    j.update(certificate_to_json(conjugate_test(a, b)));
    return j;
}

Json cmd_fingerprint(const CommandOptions& o) {
    MatrixTuple a = require_tuple(o);
    const int max_len = o.maxlen ? *o.maxlen : a.side() * a.side();
    return fingerprint_to_json(fingerprint(a, max_len));
}

Json cmd_check_pi(const CommandOptions& o) {
    const int n = require_n(o);
    const int m = ambient_generators(o);
    TracePolynomial p = resolve_polynomial(o, m, n);
    Json j;
    j["n"] = n;
    j["m"] = m;
    j["expr"] = p.to_string();
    j.update(pi_verdict_to_json(is_pi(p, n, pi_options(o))));
    return j;
}

Json cmd_check_central(const CommandOptions& o) {
    const int n = require_n(o);
    const int m = ambient_generators(o);
    TracePolynomial p = resolve_polynomial(o, m, n);
    Json j;
    j["n"] = n;
    j["m"] = m;
    j["expr"] = p.to_string();
    j.update(centrality_to_json(is_central(p, n, pi_options(o))));
    return j;
}

Json cmd_make_central(const CommandOptions& o) {
    const int n = require_n(o);
    Json j;
    j["n"] = n;
    j.update(construction_to_json(construct_central(n, pi_options(o))));
    return j;
}

Json cmd_central_for_points(const CommandOptions& o) {
    TupleList list = require_tuple_list(o);
    Json j;
    j["n"] = list.n;
    j["m"] = list.m;
    j.update(points_result_to_json(
        central_for_points(list.tuples, list.n, pi_options(o))));
    return j;
}

Json cmd_ideal_of_points(const CommandOptions& o) {
    TupleList list = require_tuple_list(o);
    return ideal_basis_to_json(ideal_of_points(list.tuples, list.m, require_degree(o)),
                               list.n, list.m);
}

Json cmd_separate(const CommandOptions& o) {
    TupleList list = require_tuple_list(o);
    if (!o.target_path) usage_error("separate needs --target <path>");
    MatrixTuple target = read_tuple_file(*o.target_path);
    Json j;
    j["n"] = list.n;
    j["m"] = list.m;
    j.update(separation_to_json(
        separate(list.tuples, target, require_degree(o), list.m)));
    return j;
}

Json cmd_zero_locus(const CommandOptions& o) {
    MatrixTuple a = require_tuple(o);
    if (o.exprs.empty())
        usage_error("zero-locus needs at least one --expr generator");
    IdealPresentation J;
    J.m = a.arity();
    J.n = a.side();
    Json printed = Json::array();
    for (const auto& text : o.exprs) {
        TracePolynomial g = parse_expression(text, J.m, J.n);
        if (!g.trace_free())
            throw PreconditionError("ideal generators must be trace-free");
        printed.push_back(g.to_string());
        J.generators.push_back(std::move(g));
    }
    Json j;
    j["n"] = J.n;
    j["m"] = J.m;
    j["generators"] = std::move(printed);
    j["member"] = zero_locus_member(J, a);
    return j;
}

Json cmd_nss_experiment(const CommandOptions& o) {
    TupleList points = require_tuple_list(o);
    if (!o.target_path) usage_error("nss-experiment needs --target <path>");
    TupleList targets = read_tuple_list_file(*o.target_path);
    if (targets.m != points.m || targets.n != points.n)
        throw PreconditionError("targets file disagrees with points on n or m");
    ExperimentReport report =
        nullstellensatz_experiment(points.tuples, targets.tuples,
                                   require_degree(o), points.m, o.jobs);
    return experiment_to_json(report, points.n, points.m);
}

Json cmd_builtins(const CommandOptions&) {
    Json list = Json::array();
    auto add = [&](const char* name, const char* generators, const char* origin) {
        Json e;
        e["name"] = name;
        e["generators"] = generators;
        e["origin"] = origin;
        list.push_back(std::move(e));
    };
    add("std(k)", "x1..xk",
        "standard identity: alternating sum over all k! orderings; an identity "
        "of n x n matrices for k >= 2n (Amitsur-Levitzki)");
    add("comm_sq", "x1, x2",
        "(x1x2 - x2x1)^2, the classical degree-4 central polynomial for 2x2 "
        "matrices");
    add("friedland_c", "x1, x2",
        "Friedland's invariant of a 2x2 pair, expanded in traces; nonzero "
        "exactly when the pair generates the full matrix algebra");
    add("formanek(n)", "x1..x{n+1}",
        "Formanek's central polynomial for n x n matrices, built from the "
        "auxiliary commutative polynomial with the interior discriminant "
        "factor");
    Json j;
    j["builtins"] = std::move(list);
    return j;
}

}  // namespace

bool command_uses_seed(const std::string& command) {
    return command == "check-pi" || command == "check-central" ||
           command == "make-central" || command == "central-for-points";
}

Json run_command(const std::string& command, const CommandOptions& o) {
    if (command == "eval") return cmd_eval(o);
    if (command == "generates") return cmd_generates(o);
    if (command == "conjugate") return cmd_conjugate(o);
    if (command == "fingerprint") return cmd_fingerprint(o);
    if (command == "check-pi") return cmd_check_pi(o);
    if (command == "check-central") return cmd_check_central(o);
    if (command == "make-central") return cmd_make_central(o);
    if (command == "central-for-points") return cmd_central_for_points(o);
    if (command == "ideal-of-points") return cmd_ideal_of_points(o);
    if (command == "separate") return cmd_separate(o);
    if (command == "zero-locus") return cmd_zero_locus(o);
    if (command == "nss-experiment") return cmd_nss_experiment(o);
    if (command == "builtins") return cmd_builtins(o);
    usage_error("unknown command: " + command);
}

}  // namespace genmat::cli
