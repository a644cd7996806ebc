#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <genmat/errors.hpp>
#include <genmat/limits.hpp>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

using genmat::cli::CommandOptions;
using genmat::cli::Json;

Json parameters_json(const std::string& command, const CommandOptions& o) {
    Json p;
    if (o.n) p["n"] = *o.n;
    if (o.m) p["m"] = *o.m;
    if (!o.exprs.empty()) p["expr"] = o.exprs;
    if (o.builtin_name) p["builtin"] = *o.builtin_name;
    if (o.tuple_path) p["tuple"] = *o.tuple_path;
    if (o.tuples_path) p["tuples"] = *o.tuples_path;
    if (o.target_path) p["target"] = *o.target_path;
    if (o.degree) p["degree"] = *o.degree;
    if (o.maxlen) p["maxlen"] = *o.maxlen;
    if (genmat::cli::command_uses_seed(command)) {
        p["mode"] = o.mode;
        p["trials"] = o.trials;
    }
    p["jobs"] = o.jobs;
    return p;
}

int run(const std::string& command, const CommandOptions& o,
        const std::optional<std::string>& out_path) {
    const auto start = std::chrono::steady_clock::now();
    Json payload = genmat::cli::run_command(command, o);
    const auto stop = std::chrono::steady_clock::now();

    Json record;
    record["command"] = command;
    record["parameters"] = parameters_json(command, o);
    if (genmat::cli::command_uses_seed(command)) record["seed"] = o.seed;
    record["ceilings"] = {
        {"monomial", genmat::limits::monomial_ceiling()},
        {"substitution", genmat::limits::substitution_ceiling()},
    };
    record["result"] = std::move(payload);
    record["timings"] = {
        {"totalMs",
         std::chrono::duration<double, std::milli>(stop - start).count()},
    };

    const std::string text = record.dump(2) + "\n";
    if (out_path) {
        std::ofstream out(*out_path);
        if (!out) throw genmat::cli::FileError("cannot write to " + *out_path);
        out << text;
    } else {
        std::cout << text;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact computations with tuples of rational matrices: evaluation of "
        "trace-ring expressions, Burnside and conjugacy tests, trace "
        "fingerprints, polynomial-identity and centrality checks, central "
        "polynomial construction and interpolation, and degree-truncated "
        "ideals of points."};
    app.require_subcommand(1);

    CommandOptions o;
    std::optional<std::string> out_path;

    static const char* kCommands[] = {
        "eval",         "generates",          "conjugate",
        "fingerprint",  "check-pi",           "check-central",
        "make-central", "central-for-points", "ideal-of-points",
        "separate",     "zero-locus",         "nss-experiment",
        "builtins",
    };
    static const char* kDescriptions[] = {
        "evaluate an expression at a tuple",
        "decide whether a tuple generates the full matrix algebra",
        "decide simultaneous conjugacy of two generating tuples",
        "trace fingerprint over necklaces up to --maxlen",
        "decide whether an expression is an identity of n x n matrices",
        "decide whether an expression is central for n x n matrices",
        "construct and verify a central polynomial for n x n matrices",
        "one polynomial scalar and nonzero at every listed point",
        "basis of the degree-truncated ideal of a point set",
        "find an ideal element separating a target from a point set",
        "decide zero-locus membership for a finitely generated ideal",
        "truncated-ideal membership vs exact conjugacy on targets",
        "list the named builtin polynomials",
    };

    for (std::size_t i = 0; i < std::size(kCommands); ++i) {
        CLI::App* sub = app.add_subcommand(kCommands[i], kDescriptions[i]);
        sub->add_option("--n", o.n, "matrix side length");
        sub->add_option("--m", o.m, "number of generators");
        sub->add_option("--expr", o.exprs, "expression in the x/tr/det grammar");
        sub->add_option("--builtin", o.builtin_name,
                        "named polynomial: std(k), comm_sq, friedland_c, formanek(n)");
        sub->add_option("--tuple", o.tuple_path, "tuple file (JSON)");
        sub->add_option("--tuples", o.tuples_path, "tuple list file (JSON)");
        sub->add_option("--target", o.target_path, "target tuple or list file (JSON)");
        sub->add_option("--degree", o.degree, "degree bound");
        sub->add_option("--maxlen", o.maxlen, "maximum necklace length");
        sub->add_option("--mode", o.mode, "exact | random")
            ->check(CLI::IsMember({"exact", "random"}));
        sub->add_option("--trials", o.trials, "randomized trials");
        sub->add_option("--seed", o.seed, "random seed");
        sub->add_option("--out", out_path, "write the run record here instead of stdout");
        sub->add_option("--jobs", o.jobs, "worker threads for batch items")
            ->check(CLI::PositiveNumber);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        return run(command, o, out_path);
    } catch (const genmat::cli::FileError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const genmat::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const genmat::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const genmat::ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
