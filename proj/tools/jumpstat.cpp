// jumpstat: jump statistics of full binary trees from the command line.
//
// Exit codes: 0 success/pass, 1 verification failure, 2 usage or parse
// error, 3 resource refusal.

#include "jumpstat/io.hpp"
#include "jumpstat/jumpstat.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace jumpstat;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRefused = 3;

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

struct StatsOptions {
    std::string tree;
    std::size_t max_size = kDefaultParseCap;
};

int run_stats(const StatsOptions& o) {
    const BinaryTree tree = parse_tree(o.tree, o.max_size);
    print(to_json(compute_stats(tree)));
    return kExitPass;
}

struct EnumerateOptions {
    unsigned n = 0;
    unsigned cap = kDefaultEnumerationCap;
    bool list = false;
};

int run_enumerate(const EnumerateOptions& o) {
    Json trees = Json::array();
    std::uint64_t count = 0;
    for (const BinaryTree& tree : enumerate_trees(o.n, o.cap)) {
        ++count;
        if (o.list) trees.push_back(to_string(tree));
    }
    Json out{{"n", o.n}, {"count", count}, {"catalan", to_string(catalan(o.n))}};
    if (o.list) out["trees"] = std::move(trees);
    print(out);
    return kExitPass;
}

struct SeriesOptions {
    std::string which;
    unsigned order = 10;
    unsigned oracle_cap = kDefaultOracleCap;
};

int run_series(const SeriesOptions& o) {
    Series s;
    if (o.which == "catalan" || o.which == "f") {
        s = solve_catalan(o.order);
    } else if (o.which == "F") {
        s = solve_F(o.order);
    } else if (o.which == "H") {
        s = solve_H(o.order);
    } else if (o.which == "J") {
        s = solve_Jdepth(o.order);
    } else if (o.which == "K") {
        s = solve_K(o.order);
    } else if (o.which == "brute") {
        s = brute_force_enumerator(o.order, o.oracle_cap);
    } else {
        throw CLI::ValidationError("series", "unknown series '" + o.which + "'");
    }
    print(Json{{"series", o.which}, {"order", s.order()}, {"coefficients", to_json(s)}});
    return kExitPass;
}

struct VerifyOptions {
    unsigned theorem = 0;
    unsigned order = kDefaultVerifyOrder;
    unsigned oracle_cap = kDefaultOracleCap;
};

int run_verify(const VerifyOptions& o) {
    const Verdict v = verify_theorem(o.theorem, o.order, o.oracle_cap);
    print(to_json(v));
    return v.pass ? kExitPass : kExitFail;
}

struct MomentsOptions {
    std::string stat;
    unsigned max_order = kDefaultMomentOrder;
    unsigned n_max = kDefaultMomentNmax;
    std::string format = "json";
    bool check = false;
};

int run_moments(const MomentsOptions& o) {
    const MomentTable table = moment_table(parse_statistic(o.stat), o.max_order, o.n_max);
    std::vector<ClosedFormCheck> checks;
    if (o.check) checks = check_closed_forms(table);
    const bool pass = std::all_of(checks.begin(), checks.end(),
                                  [](const ClosedFormCheck& c) { return c.pass; });
    if (o.format == "csv") {
        std::cout << to_csv(table);
        for (const auto& c : checks) {
            std::cerr << "theorem " << c.theorem << ": " << (c.pass ? "pass" : "FAIL") << '\n';
        }
    } else {
        Json out = to_json(table);
        if (o.check) {
            Json list = Json::array();
            for (const auto& c : checks) list.push_back(to_json(c));
            out["checks"] = std::move(list);
        }
        print(out);
    }
    return pass ? kExitPass : kExitFail;
}

struct GuessOptions {
    std::string stat;
    std::string moment = "kurtosis";
    unsigned n_min = 2;
    unsigned n_max = kDefaultMomentNmax;
    unsigned holdout = kDefaultHoldout;
    unsigned max_degree = 30;
};

/// Fits the requested moment sequence. The degree ceiling is lowered to what
/// the available points support.
GuessResult guess_moment(const MomentTable& table, const MomentSpec& spec, const GuessOptions& o) {
    const auto points = moment_sequence(table, spec, o.n_min, o.n_max);
    const std::size_t needed = static_cast<std::size_t>(o.holdout) + 2;
    if (points.size() < needed) {
        throw ResourceRefusal("only " + std::to_string(points.size()) +
                              " defined points in range; need at least " + std::to_string(needed));
    }
    const auto supported = static_cast<unsigned>(points.size() - needed);
    return guess_rational(points, std::min(o.max_degree, supported), o.holdout);
}

int run_guess(const GuessOptions& o) {
    const Statistic stat = parse_statistic(o.stat);
    const MomentSpec spec = parse_moment_spec(o.moment);
    const MomentTable table = moment_table(stat, std::max(2u, spec.order), o.n_max);
    const GuessResult g = guess_moment(table, spec, o);
    Json out{{"stat", to_string(stat)},
             {"moment", to_string(spec)},
             {"squared", spec.kind == MomentSpec::Kind::scaled && spec.order % 2 == 1},
             {"n_min", o.n_min},
             {"n_max", o.n_max},
             {"holdout", o.holdout}};
    out.update(to_json(g));
    print(out);
    return g.formula ? kExitPass : kExitFail;
}

// The jump-distance moments of order 7 and up are rational functions of
// total degree 40 and more, so they need a longer sample than the jumps.
struct LimitsOptions {
    bool guessed = false;
    unsigned n_max_jumps = kDefaultMomentNmax;
    unsigned n_max_jumpdist = 90;
    unsigned holdout = kDefaultHoldout;
    unsigned max_degree = 70;
};

int run_limits(const LimitsOptions& o) {
    Json reference = Json::array();
    for (const auto& ref : reference_formulas()) {
        reference.push_back(Json{{"theorem", ref.theorem},
                                 {"stat", to_string(ref.stat)},
                                 {"moment", to_string(ref.moment)},
                                 {"formula", to_string(ref.formula)},
                                 {"limit", to_json(limit_at_infinity(ref.formula))}});
    }
    Json out{{"reference", std::move(reference)}};
    bool all_found = true;
    if (o.guessed) {
        Json guessed = Json::array();
        GuessOptions g;
        g.holdout = o.holdout;
        g.max_degree = o.max_degree;
        for (Statistic stat : {Statistic::jumps, Statistic::jump_distance}) {
            g.n_max = stat == Statistic::jumps ? o.n_max_jumps : o.n_max_jumpdist;
            const MomentTable table = moment_table(stat, kDefaultMomentOrder, g.n_max);
            for (unsigned r = 2; r <= kDefaultMomentOrder; ++r) {
                const MomentSpec spec{MomentSpec::Kind::scaled, r};
                const GuessResult result = guess_moment(table, spec, g);
                all_found = all_found && result.formula.has_value();
                Json entry{{"stat", to_string(stat)},
                           {"moment", to_string(spec)},
                           {"squared", r % 2 == 1}};
                entry.update(to_json(result));
                guessed.push_back(std::move(entry));
            }
        }
        out["guessed"] = std::move(guessed);
    }
    print(out);
    return all_found ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Jump statistics of full binary trees: enumeration, generating functions, "
                 "moments and rational-function guessing"};
    app.require_subcommand(1);

    StatsOptions stats;
    auto* stats_cmd = app.add_subcommand("stats", "Statistics {v, j, d, jd} of one tree");
    stats_cmd->add_option("tree", stats.tree, "Tree text, e.g. \"[[.,.],.]\"")->required();
    stats_cmd->add_option("--max-size", stats.max_size, "Refuse trees with more internal vertices")
        ->envname("JUMPSTAT_MAX_SIZE");

    EnumerateOptions enumerate;
    auto* enumerate_cmd =
        app.add_subcommand("enumerate", "Count (and optionally list) all trees of a size");
    enumerate_cmd->add_option("n", enumerate.n, "Number of internal vertices")->required();
    enumerate_cmd->add_option("--cap", enumerate.cap, "Largest n allowed")->envname("JUMPSTAT_CAP");
    enumerate_cmd->add_flag("--list", enumerate.list, "Include every tree in the output");

    SeriesOptions series;
    auto* series_cmd = app.add_subcommand("series", "Truncated generating function as JSON");
    series_cmd->add_option("which", series.which, "catalan | F | H | J | K | brute")->required();
    series_cmd->add_option("--order", series.order, "Truncation order")->envname("JUMPSTAT_ORDER");
    series_cmd->add_option("--oracle-cap", series.oracle_cap, "Enumeration cap for 'brute'")
        ->envname("JUMPSTAT_ORACLE_CAP");

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Verify identity 0..6 exactly up to a series order");
    verify_cmd->add_option("theorem", verify.theorem, "Theorem number")
        ->required()
        ->check(CLI::Range(0u, 6u));
    verify_cmd->add_option("--order", verify.order, "Series order")->envname("JUMPSTAT_ORDER");
    verify_cmd->add_option("--oracle-cap", verify.oracle_cap, "Brute-force range for identity 1")
        ->envname("JUMPSTAT_ORACLE_CAP");

    MomentsOptions moments;
    auto* moments_cmd = app.add_subcommand("moments", "Exact moment table");
    moments_cmd->add_option("stat", moments.stat, "jumps | jumpdist")->required();
    moments_cmd->add_option("-R,--R", moments.max_order, "Highest moment order")
        ->envname("JUMPSTAT_R")
        ->check(CLI::Range(2u, 1000u));
    moments_cmd->add_option("--nmax", moments.n_max, "Largest n")
        ->envname("JUMPSTAT_NMAX")
        ->check(CLI::Range(2u, 100000u));
    moments_cmd->add_option("--format", moments.format, "json | csv")
        ->envname("JUMPSTAT_FORMAT")
        ->check(CLI::IsMember({"json", "csv"}));
    moments_cmd->add_flag("--check", moments.check, "Compare with the known closed forms");

    GuessOptions guess;
    auto* guess_cmd = app.add_subcommand("guess", "Fit a moment sequence to a rational function of n");
    guess_cmd->add_option("stat", guess.stat, "jumps | jumpdist")->required();
    guess_cmd->add_option("--moment", guess.moment,
                          "mean | variance | skewness | kurtosis | raw:R | central:R | scaled:R")
        ->envname("JUMPSTAT_MOMENT");
    guess_cmd->add_option("--nmin", guess.n_min, "Smallest n sampled")->envname("JUMPSTAT_NMIN");
    guess_cmd->add_option("--nmax", guess.n_max, "Largest n sampled")->envname("JUMPSTAT_NMAX");
    guess_cmd->add_option("--holdout", guess.holdout, "Points held out for verification")
        ->envname("JUMPSTAT_HOLDOUT")
        ->check(CLI::PositiveNumber);
    guess_cmd->add_option("--max-degree", guess.max_degree, "Largest total degree tried")
        ->envname("JUMPSTAT_MAX_DEGREE");

    LimitsOptions limits;
    auto* limits_cmd = app.add_subcommand("limits", "Limits as n -> infinity of the closed forms");
    limits_cmd->add_flag("--guessed", limits.guessed,
                         "Also guess scaled moments 2..10 of both statistics and report their limits");
    limits_cmd->add_option("--nmax-jumps", limits.n_max_jumps, "Largest n sampled for jumps")
        ->envname("JUMPSTAT_NMAX_JUMPS");
    limits_cmd->add_option("--nmax-jumpdist", limits.n_max_jumpdist,
                           "Largest n sampled for the sum of jump distances")
        ->envname("JUMPSTAT_NMAX_JUMPDIST");
    limits_cmd->add_option("--holdout", limits.holdout, "Points held out for verification")
        ->envname("JUMPSTAT_HOLDOUT")
        ->check(CLI::PositiveNumber);
    limits_cmd->add_option("--max-degree", limits.max_degree, "Largest total degree tried")
        ->envname("JUMPSTAT_MAX_DEGREE");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*stats_cmd) return run_stats(stats);
        if (*enumerate_cmd) return run_enumerate(enumerate);
        if (*series_cmd) return run_series(series);
        if (*verify_cmd) return run_verify(verify);
        if (*moments_cmd) return run_moments(moments);
        if (*guess_cmd) return run_guess(guess);
        if (*limits_cmd) return run_limits(limits);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ResourceRefusal& e) {
        std::cerr << "refused: " << e.what() << '\n';
        return kExitRefused;
    } catch (const ContractViolation& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
