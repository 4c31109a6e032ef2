// Command-line front end: distances, fairness checks, closest-fair-ranking
// repairs, fair aggregation, instance generation, and micro-benchmarks.
//
// Exit codes: 0 success, 1 usage error, 2 parse/validation error,
// 3 infeasible fairness specification, 4 enumeration budget exceeded.
// Every failure prints a single line starting with "error:" to stderr.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fairrank/aggregate.hpp"
#include "fairrank/cfr.hpp"
#include "fairrank/fairness.hpp"
#include "fairrank/instance.hpp"
#include "fairrank/io.hpp"
#include "fairrank/metrics.hpp"
#include "fairrank/oracle.hpp"
#include "fairrank/ranking.hpp"
#include "fairrank/rng.hpp"

namespace {

using namespace fairrank;

// A supported flag combination was not chosen (exit code 1), as opposed to
// malformed input data (exit code 2).
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InfeasibleError : public std::runtime_error {
public:
    InfeasibleError() : std::runtime_error("infeasible: no ranking satisfies the fairness specification") {}
};

volatile long long g_bench_sink = 0;

Ranking parse_inline_ranking(const std::string& text) {
    std::istringstream in(text);
    std::vector<int> perm;
    long long value = 0;
    while (in >> value) {
        if (value < 1 || value > 1'000'000) throw ParseError("ranking: element " + std::to_string(value) + " out of range");
        perm.push_back(static_cast<int>(value) - 1);
    }
    if (!in.eof()) throw ParseError("ranking: expected space-separated integers, got \"" + text + "\"");
    if (perm.empty()) throw ParseError("ranking: empty");
    try {
        return Ranking(std::move(perm));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

// The ranking a subcommand operates on: an inline "--ranking" string, or the
// 1-based "--index" into the instance's ranking list.
Ranking select_ranking(const Instance& instance, int index, const std::string& inline_text) {
    if (!inline_text.empty()) {
        Ranking r = parse_inline_ranking(inline_text);
        if (r.size() != instance.dimension())
            throw ParseError("ranking: dimension " + std::to_string(r.size()) +
                             " does not match the instance's " + std::to_string(instance.dimension()));
        return r;
    }
    if (index < 1 || index > instance.num_rankings())
        throw ParseError("index: must be in 1.." + std::to_string(instance.num_rankings()));
    return instance.rankings[static_cast<size_t>(index - 1)];
}

std::string format_ranking(const Ranking& r) {
    std::ostringstream out;
    for (int rank = 0; rank < r.size(); ++rank) {
        if (rank > 0) out << ' ';
        out << r.at(rank) + 1;
    }
    return out.str();
}

void print_ratio(double ours, double best) {
    std::cout << "ratio: ";
    if (best == 0.0) {
        if (ours == 0.0)
            std::cout << std::fixed << std::setprecision(6) << 1.0 << "\n";
        else
            std::cout << "inf\n";
        return;
    }
    std::cout << std::fixed << std::setprecision(6) << ours / best << "\n";
}

Metric default_metric_for(FairMode mode) {
    return mode == FairMode::StrictFair ? Metric::Ulam : Metric::KendallTau;
}

// The (metric, mode) pairs the polynomial repair solvers cover.
void require_solvable(Metric metric, FairMode mode) {
    const bool ok = (metric == Metric::KendallTau &&
                     (mode == FairMode::KFair || mode == FairMode::BlockFair)) ||
                    (metric == Metric::Ulam && mode == FairMode::StrictFair);
    if (!ok)
        throw UsageError("no exact repair solver for metric \"" + to_string(metric) +
                         "\" with mode \"" + to_string(mode) + "\"");
}

FairMode parse_mode_flag(const std::string& text) {
    if (text == "kfair") return FairMode::KFair;
    if (text == "block") return FairMode::BlockFair;
    if (text == "strict") return FairMode::StrictFair;
    throw UsageError("mode: expected kfair, block, or strict");
}

double run_millis(const std::function<void()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

int run(int argc, char** argv) {
    CLI::App app{"fair ranking and fair rank aggregation toolkit"};
    app.require_subcommand(1);

    const auto metric_values = CLI::IsMember({"kt", "sf", "ulam"});
    const auto q_values = CLI::Validator(
        [](std::string& text) -> std::string {
            try {
                QExponent::parse(text);
                return {};
            } catch (const std::invalid_argument& e) {
                return e.what();
            }
        },
        "Q", "q exponent");

    // --- dist ---------------------------------------------------------
    auto* dist_cmd = app.add_subcommand("dist", "distance between two inline rankings");
    std::string dist_metric = "kt";
    std::string dist_a, dist_b;
    dist_cmd->add_option("--metric", dist_metric, "kt, sf, or ulam")->check(metric_values);
    dist_cmd->add_option("first", dist_a, "first ranking, 1-based, space-separated")->required();
    dist_cmd->add_option("second", dist_b, "second ranking")->required();
    dist_cmd->callback([&]() {
        const Ranking a = parse_inline_ranking(dist_a);
        const Ranking b = parse_inline_ranking(dist_b);
        if (a.size() != b.size()) throw ParseError("rankings have different dimensions");
        std::cout << metric_distance(parse_metric(dist_metric), a, b) << "\n";
    });

    // --- check --------------------------------------------------------
    auto* check_cmd = app.add_subcommand("check", "test a ranking against an instance's fairness spec");
    std::string check_file, check_inline;
    int check_index = 1;
    check_cmd->add_option("instance", check_file, "instance JSON file")->required();
    auto* check_index_opt = check_cmd->add_option("--index", check_index, "1-based input ranking to test (default 1)");
    check_cmd->add_option("--ranking", check_inline, "inline ranking to test instead")->excludes(check_index_opt);
    check_cmd->callback([&]() {
        const Instance instance = load_instance(check_file);
        const Ranking r = select_ranking(instance, check_index, check_inline);
        std::cout << (check_fair(r, instance.groups, instance.fairness) ? "fair" : "unfair") << "\n";
    });

    // --- cfr ----------------------------------------------------------
    auto* cfr_cmd = app.add_subcommand("cfr", "closest fair ranking to one input ranking");
    std::string cfr_file, cfr_inline, cfr_metric;
    int cfr_index = 1;
    bool cfr_oracle = false;
    cfr_cmd->add_option("instance", cfr_file, "instance JSON file")->required();
    cfr_cmd->add_option("--metric", cfr_metric, "kt or ulam (default from mode)")->check(metric_values);
    auto* cfr_index_opt = cfr_cmd->add_option("--index", cfr_index, "1-based input ranking to repair (default 1)");
    cfr_cmd->add_option("--ranking", cfr_inline, "inline ranking to repair instead")->excludes(cfr_index_opt);
    cfr_cmd->add_flag("--oracle", cfr_oracle, "cross-check against the brute-force solver (d <= 8)");
    cfr_cmd->callback([&]() {
        const Instance instance = load_instance(cfr_file);
        const Metric m = cfr_metric.empty() ? default_metric_for(instance.fairness.mode)
                                            : parse_metric(cfr_metric);
        require_solvable(m, instance.fairness.mode);
        const Ranking pi = select_ranking(instance, cfr_index, cfr_inline);
        const auto result = closest_fair_ranking(pi, instance.groups, instance.fairness, m);
        if (!result) throw InfeasibleError();
        std::cout << "ranking: " << format_ranking(result->ranking) << "\n";
        std::cout << "distance: " << result->distance << "\n";
        if (cfr_oracle) {
            const auto reference = oracle_cfr(pi, instance.groups, instance.fairness, m);
            std::cout << "oracle-distance: " << reference->distance << "\n";
            print_ratio(static_cast<double>(result->distance), static_cast<double>(reference->distance));
        }
    });

    // --- aggregate ----------------------------------------------------
    auto* agg_cmd = app.add_subcommand("aggregate", "fair rank aggregation over all input rankings");
    std::string agg_file, agg_metric, agg_algo, agg_q = "1";
    int agg_jobs = 1;
    bool agg_oracle = false;
    agg_cmd->add_option("instance", agg_file, "instance JSON file")->required();
    agg_cmd->add_option("--algo", agg_algo, "meta1 (repair every input), meta2 (repair the Spearman median), or ulam3e (combined Ulam median)")
        ->required()
        ->check(CLI::IsMember({"meta1", "meta2", "ulam3e"}));
    agg_cmd->add_option("--metric", agg_metric, "kt, sf, or ulam (default per algo)")->check(metric_values);
    agg_cmd->add_option("--q", agg_q, "q-mean exponent: positive integer or inf")->check(q_values);
    agg_cmd->add_option("--jobs", agg_jobs, "worker threads (output is identical for every value)")
        ->check(CLI::Range(1, 64));
    agg_cmd->add_flag("--oracle", agg_oracle, "cross-check against brute-force aggregation (d <= 8)");
    agg_cmd->callback([&]() {
        const Instance instance = load_instance(agg_file);
        const QExponent q = QExponent::parse(agg_q);
        Metric m = Metric::KendallTau;
        std::optional<AggResult> result;
        if (agg_algo == "meta1") {
            m = agg_metric.empty() ? default_metric_for(instance.fairness.mode) : parse_metric(agg_metric);
            require_solvable(m, instance.fairness.mode);
            const CfrSolver solver = exact_cfr_solver(instance.groups, instance.fairness, m);
            result = best_repaired_input(instance.rankings, m, q, solver, agg_jobs);
        } else if (agg_algo == "meta2") {
            m = agg_metric.empty() ? Metric::SpearmanFootrule : parse_metric(agg_metric);
            if (m != Metric::SpearmanFootrule) throw UsageError("meta2 supports --metric sf only");
            if (q != QExponent::finite(1)) throw UsageError("meta2 supports --q 1 only");
            // Spearman repair has no polynomial solver here; the brute-force
            // one stands in, so this path is limited to small d.
            const CfrSolver solver = [&instance](const Ranking& pi) {
                return oracle_cfr(pi, instance.groups, instance.fairness, Metric::SpearmanFootrule);
            };
            result = repaired_aggregate(instance.rankings, m, q,
                                        [](const std::vector<Ranking>& inputs) { return spearman_median(inputs); },
                                        solver);
        } else {
            if (instance.fairness.mode != FairMode::StrictFair)
                throw UsageError("ulam3e requires mode \"strict\"");
            if (!agg_metric.empty() && parse_metric(agg_metric) != Metric::Ulam)
                throw UsageError("ulam3e supports --metric ulam only");
            if (q != QExponent::finite(1)) throw UsageError("ulam3e supports --q 1 only");
            m = Metric::Ulam;
            result = ulam_fair_median(instance.rankings, instance.groups, instance.fairness, agg_jobs);
        }
        if (!result) throw InfeasibleError();
        std::cout << "ranking: " << format_ranking(result->ranking) << "\n";
        std::cout << "objective-exact: " << result->objective.str() << "\n";
        std::cout << "objective: " << std::fixed << std::setprecision(6) << result->objective.display() << "\n";
        if (agg_oracle) {
            const auto reference =
                oracle_fair_aggregate(instance.rankings, instance.groups, instance.fairness, m, q);
            std::cout << "oracle-exact: " << reference->objective.str() << "\n";
            print_ratio(result->objective.display(), reference->objective.display());
        }
    });

    // --- gen ----------------------------------------------------------
    auto* gen_cmd = app.add_subcommand("gen", "generate a random feasible instance");
    GenConfig gen_config;
    std::string gen_mode = "kfair", gen_out;
    gen_cmd->add_option("--d", gen_config.d, "universe size")->check(CLI::Range(1, 1'000'000));
    gen_cmd->add_option("--n", gen_config.n, "number of rankings")->check(CLI::Range(1, 100'000));
    gen_cmd->add_option("--g", gen_config.g, "number of groups")->check(CLI::Range(1, 1'000'000));
    gen_cmd->add_option("--seed", gen_config.seed, "PRNG seed");
    gen_cmd->add_option("--mode", gen_mode, "kfair, block, or strict")
        ->check(CLI::IsMember({"kfair", "block", "strict"}));
    gen_cmd->add_option("--denominator-cap", gen_config.denominator_cap, "largest quota denominator")
        ->check(CLI::Range(1, 1000));
    gen_cmd->add_option("--out", gen_out, "output file (default stdout)");
    gen_cmd->callback([&]() {
        gen_config.mode = parse_mode_flag(gen_mode);
        if (gen_config.g > gen_config.d) throw UsageError("--g must not exceed --d");
        const std::string text = write_instance(generate_instance(gen_config));
        if (gen_out.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(gen_out, std::ios::binary);
            if (!out) throw std::runtime_error(gen_out + ": cannot open for writing");
            out << text;
        }
    });

    // --- bench --------------------------------------------------------
    auto* bench_cmd = app.add_subcommand("bench", "micro-benchmark timings as CSV");
    std::string bench_op = "dist", bench_metric = "kt", bench_mode = "block";
    std::vector<int> bench_dims{1000, 2000, 4000};
    int bench_repeats = 3;
    uint64_t bench_seed = 1;
    bench_cmd->add_option("--op", bench_op, "dist or cfr")->check(CLI::IsMember({"dist", "cfr"}));
    bench_cmd->add_option("--metric", bench_metric, "kt, sf, or ulam")->check(metric_values);
    bench_cmd->add_option("--mode", bench_mode, "fairness mode for --op cfr")
        ->check(CLI::IsMember({"kfair", "block", "strict"}));
    bench_cmd->add_option("--d-list", bench_dims, "comma-separated universe sizes")->delimiter(',');
    bench_cmd->add_option("--repeats", bench_repeats, "timed repetitions per size")->check(CLI::Range(1, 1000));
    bench_cmd->add_option("--seed", bench_seed, "PRNG seed");
    bench_cmd->callback([&]() {
        std::cout << "op,metric,mode,d,repeat,millis\n";
        for (int d : bench_dims) {
            if (d < 1) throw UsageError("--d-list entries must be positive");
            if (bench_op == "dist") {
                const Metric m = parse_metric(bench_metric);
                Xorshift64Star rng(bench_seed + static_cast<uint64_t>(d));
                std::vector<int> perm(static_cast<size_t>(d));
                std::iota(perm.begin(), perm.end(), 0);
                rng.shuffle(perm);
                const Ranking a(perm);
                rng.shuffle(perm);
                const Ranking b(perm);
                for (int rep = 0; rep < bench_repeats; ++rep) {
                    const double ms = run_millis([&]() { g_bench_sink = metric_distance(m, a, b); });
                    std::cout << "dist," << bench_metric << ",-," << d << "," << rep << ","
                              << std::fixed << std::setprecision(3) << ms << "\n";
                }
            } else {
                GenConfig config;
                config.d = d;
                config.n = 1;
                config.g = 2;
                config.seed = bench_seed + static_cast<uint64_t>(d);
                config.mode = parse_mode_flag(bench_mode);
                const Metric m = default_metric_for(config.mode);
                const Instance instance = generate_instance(config);
                for (int rep = 0; rep < bench_repeats; ++rep) {
                    const double ms = run_millis([&]() {
                        const auto result = closest_fair_ranking(instance.rankings[0], instance.groups,
                                                                 instance.fairness, m);
                        g_bench_sink = result ? result->distance : -1;
                    });
                    std::cout << "cfr," << to_string(m) << "," << bench_mode << "," << d << "," << rep
                              << "," << std::fixed << std::setprecision(3) << ms << "\n";
                }
            }
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const InfeasibleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
