#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "fairrank/aggregate.hpp"
#include "fairrank/cfr.hpp"
#include "fairrank/fairness.hpp"
#include "fairrank/metrics.hpp"
#include "fairrank/oracle.hpp"
#include "fairrank/ranking.hpp"
#include "fairrank/rng.hpp"

#include "helpers.hpp"

using namespace fairrank;

namespace {

// Bounds that accept every ranking, for exercising the aggregation layer in
// isolation from feasibility questions.
FairnessSpec vacuous_spec(int g, FairMode mode) {
    std::vector<Rational> alpha(static_cast<size_t>(g), Rational(0, 1));
    std::vector<Rational> beta(static_cast<size_t>(g), Rational(1, 1));
    return FairnessSpec(std::move(alpha), std::move(beta), 1, mode,
                        mode == FairMode::BlockFair ? 1 : 0);
}

std::vector<Ranking> random_inputs(Xorshift64Star& rng, int n, int d) {
    std::vector<Ranking> inputs;
    for (int i = 0; i < n; ++i) inputs.push_back(testutil::random_ranking(rng, d));
    return inputs;
}

}  // namespace

TEST_CASE("q exponent parsing") {
    CHECK(QExponent::parse("1") == QExponent::finite(1));
    CHECK(QExponent::parse("2") == QExponent::finite(2));
    CHECK(QExponent::parse("inf") == QExponent::infinity());
    CHECK(QExponent::infinity().is_infinite());
    CHECK_THROWS_AS(QExponent::parse("0"), std::invalid_argument);
    CHECK_THROWS_AS(QExponent::parse("-1"), std::invalid_argument);
    CHECK_THROWS_AS(QExponent::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(QExponent::finite(0), std::invalid_argument);
}

TEST_CASE("objective values on frozen inputs") {
    const std::vector<Ranking> s{Ranking::from_one_based({1, 2, 3}),
                                 Ranking::from_one_based({3, 2, 1})};
    const Ranking sigma = Ranking::from_one_based({1, 2, 3});
    CHECK(ObjectiveValue::of({sigma}, sigma, Metric::KendallTau, QExponent::finite(1)).str() == "0");
    const auto q1 = ObjectiveValue::of(s, sigma, Metric::KendallTau, QExponent::finite(1));
    CHECK(q1.str() == "3");
    CHECK(q1.display() == doctest::Approx(3.0));
    const auto q2 = ObjectiveValue::of(s, sigma, Metric::KendallTau, QExponent::finite(2));
    CHECK(q2.str() == "9");
    CHECK(q2.display() == doctest::Approx(3.0));
    const auto qi = ObjectiveValue::of(s, sigma, Metric::KendallTau, QExponent::infinity());
    CHECK(qi.str() == "3");
    CHECK(qi.display() == doctest::Approx(3.0));
}

TEST_CASE("objective comparison agrees with real-valued evaluation") {
    Xorshift64Star rng(71);
    for (int iter = 0; iter < 400; ++iter) {
        const int d = 3 + static_cast<int>(rng.below(5));
        const int n = 1 + static_cast<int>(rng.below(4));
        const auto inputs = random_inputs(rng, n, d);
        const Ranking x = testutil::random_ranking(rng, d);
        const Ranking y = testutil::random_ranking(rng, d);
        for (const QExponent q : {QExponent::finite(1), QExponent::finite(2), QExponent::finite(3),
                                  QExponent::infinity()}) {
            const auto ox = ObjectiveValue::of(inputs, x, Metric::KendallTau, q);
            const auto oy = ObjectiveValue::of(inputs, y, Metric::KendallTau, q);
            const double dx = ox.display(), dy = oy.display();
            if (ox.compare(oy) < 0) CHECK(dx <= dy + 1e-9);
            if (ox.compare(oy) > 0) CHECK(dx >= dy - 1e-9);
            if (ox.compare(oy) == 0) CHECK(dx == doctest::Approx(dy));
            CHECK(ox.leq_scaled(ox, 1));
            CHECK(ox.leq_scaled(ox, 3));
        }
    }
}

TEST_CASE("repairing every input: single input degenerates to its own repair") {
    const GroupAssignment ga = GroupAssignment::from_groups({{0, 1}, {2, 3}}, 4);
    const FairnessSpec spec({Rational(1, 2), Rational(0, 1)}, {Rational(1, 1), Rational(1, 1)}, 2,
                            FairMode::KFair, 0);
    const Ranking pi = Ranking::from_one_based({3, 4, 1, 2});
    const auto solver = exact_cfr_solver(ga, spec, Metric::KendallTau);
    const auto result = best_repaired_input({pi}, Metric::KendallTau, QExponent::finite(1), solver);
    REQUIRE(result.has_value());
    const auto direct = cfr_kendall_kfair(pi, ga, spec.alpha, spec.beta, spec.k);
    REQUIRE(direct.has_value());
    CHECK(result->ranking.to_one_based() == direct->ranking.to_one_based());
    CHECK(result->objective.str() == std::to_string(direct->distance));
}

TEST_CASE("repairing every input: identical fair inputs give objective zero") {
    const GroupAssignment ga = GroupAssignment::from_groups({{0, 1}, {2, 3}}, 4);
    const FairnessSpec spec = vacuous_spec(2, FairMode::KFair);
    const Ranking pi = Ranking::from_one_based({2, 4, 1, 3});
    const auto solver = exact_cfr_solver(ga, spec, Metric::KendallTau);
    const auto result =
        best_repaired_input({pi, pi, pi}, Metric::KendallTau, QExponent::finite(1), solver);
    REQUIRE(result.has_value());
    CHECK(result->ranking.to_one_based() == pi.to_one_based());
    CHECK(result->objective.str() == "0");
}

TEST_CASE("repairing every input: infeasible specs propagate") {
    const GroupAssignment ga = GroupAssignment::from_groups({{0}, {1}}, 2);
    const FairnessSpec spec({Rational(1, 1), Rational(1, 1)}, {Rational(1, 1), Rational(1, 1)}, 2,
                            FairMode::KFair, 0);
    const auto solver = exact_cfr_solver(ga, spec, Metric::KendallTau);
    const auto result = best_repaired_input({Ranking::identity(2)}, Metric::KendallTau,
                                            QExponent::finite(1), solver);
    CHECK_FALSE(result.has_value());
}

TEST_CASE("repairing every input stays within three times the optimum") {
    Xorshift64Star rng(73);
    int checked = 0;
    for (int iter = 0; iter < 60; ++iter) {
        const int d = 3 + static_cast<int>(rng.below(4));  // 3..6
        const int n = 1 + static_cast<int>(rng.below(5));
        const int g = 1 + static_cast<int>(rng.below(2));
        const GroupAssignment ga = testutil::random_groups(rng, d, g);
        const FairMode mode = rng.below(2) ? FairMode::KFair : FairMode::BlockFair;
        const FairnessSpec spec = testutil::draw_spec(rng, d, g, 4, mode);
        const auto inputs = random_inputs(rng, n, d);
        const QExponent q = iter % 3 == 0   ? QExponent::finite(1)
                            : iter % 3 == 1 ? QExponent::finite(2)
                                            : QExponent::infinity();
        const auto solver = exact_cfr_solver(ga, spec, Metric::KendallTau);
        const auto result = best_repaired_input(inputs, Metric::KendallTau, q, solver);
        const auto reference = oracle_fair_aggregate(inputs, ga, spec, Metric::KendallTau, q);
        REQUIRE(result.has_value() == reference.has_value());
        if (!result) continue;
        CHECK(result->objective.leq_scaled(reference->objective, 3));
        ++checked;
    }
    CHECK(checked > 20);
}

TEST_CASE("parallel repair is identical to sequential") {
    Xorshift64Star rng(79);
    for (int iter = 0; iter < 20; ++iter) {
        const int d = 3 + static_cast<int>(rng.below(4));
        const int g = 1 + static_cast<int>(rng.below(2));
        const GroupAssignment ga = testutil::random_groups(rng, d, g);
        const FairnessSpec spec = testutil::draw_spec(rng, d, g, 4, FairMode::KFair);
        const auto inputs = random_inputs(rng, 6, d);
        const auto solver = exact_cfr_solver(ga, spec, Metric::KendallTau);
        const auto serial =
            best_repaired_input(inputs, Metric::KendallTau, QExponent::finite(2), solver, 1);
        const auto parallel =
            best_repaired_input(inputs, Metric::KendallTau, QExponent::finite(2), solver, 4);
        REQUIRE(serial.has_value() == parallel.has_value());
        if (serial) {
            CHECK(serial->ranking.to_one_based() == parallel->ranking.to_one_based());
            CHECK(serial->objective.str() == parallel->objective.str());
        }
    }
}

TEST_CASE("spearman median on frozen inputs") {
    const Ranking a = Ranking::from_one_based({1, 2, 3});
    const Ranking b = Ranking::from_one_based({3, 2, 1});
    CHECK(spearman_median({a}).to_one_based() == a.to_one_based());
    CHECK(spearman_median({a, a, b}).to_one_based() == a.to_one_based());
}

TEST_CASE("spearman median matches the exhaustive optimum objective") {
    Xorshift64Star rng(83);
    for (int iter = 0; iter < 40; ++iter) {
        const int d = 2 + static_cast<int>(rng.below(5));  // 2..6
        const int n = 1 + static_cast<int>(rng.below(5));
        const auto inputs = random_inputs(rng, n, d);
        const Ranking median = spearman_median(inputs);
        const auto ours =
            ObjectiveValue::of(inputs, median, Metric::SpearmanFootrule, QExponent::finite(1));
        // A vacuous fairness spec turns the fair-aggregate oracle into an
        // unconstrained exhaustive search.
        const GroupAssignment ga(std::vector<int>(static_cast<size_t>(d), 0), 1);
        const auto reference = oracle_fair_aggregate(inputs, ga, vacuous_spec(1, FairMode::KFair),
                                                     Metric::SpearmanFootrule, QExponent::finite(1));
        REQUIRE(reference.has_value());
        CHECK(ours.str() == reference->objective.str());
    }
}

TEST_CASE("repairing the spearman median stays within three times the optimum") {
    Xorshift64Star rng(89);
    int checked = 0;
    for (int iter = 0; iter < 30; ++iter) {
        const int d = 3 + static_cast<int>(rng.below(4));  // 3..6
        const int n = 1 + static_cast<int>(rng.below(5));
        const int g = 1 + static_cast<int>(rng.below(2));
        const GroupAssignment ga = testutil::random_groups(rng, d, g);
        const FairnessSpec spec = testutil::draw_spec(rng, d, g, 4, FairMode::KFair);
        const auto inputs = random_inputs(rng, n, d);
        // Spearman repair has no polynomial solver here; the enumeration
        // oracle is the plug-in, as in the command-line tool.
        const CfrSolver solver = [&](const Ranking& pi) {
            return oracle_cfr(pi, ga, spec, Metric::SpearmanFootrule);
        };
        const auto result = repaired_aggregate(
            inputs, Metric::SpearmanFootrule, QExponent::finite(1),
            [](const std::vector<Ranking>& s) { return spearman_median(s); }, solver);
        const auto reference =
            oracle_fair_aggregate(inputs, ga, spec, Metric::SpearmanFootrule, QExponent::finite(1));
        REQUIRE(result.has_value() == reference.has_value());
        if (!result) continue;
        CHECK(result->objective.leq_scaled(reference->objective, 3));
        CHECK(check_fair(result->ranking, ga, spec));
        ++checked;
    }
    CHECK(checked > 10);
}

TEST_CASE("precedence graph: unanimous inputs give a total order") {
    const Ranking a = Ranking::from_one_based({2, 3, 1});
    const auto graph = PrecedenceGraph::build({a, a, a}, Rational(1, 10));
    CHECK(graph.out[1].size() + graph.out[2].size() + graph.out[0].size() == 3);
    CHECK(relative_order_sequence({a, a, a}, Rational(1, 10)) == std::vector<int>{1, 2, 0});
}

TEST_CASE("precedence graph: a near-tie between two elements drops the edge") {
    // Two voters each way on elements 1 and 2 (0-based 0 and 1): with
    // threshold ceil(0.8 * 2) = 2, neither direction reaches two votes.
    const Ranking ab = Ranking::from_one_based({1, 2, 3});
    const Ranking ba = Ranking::from_one_based({2, 1, 3});
    const auto graph = PrecedenceGraph::build({ab, ba}, Rational(1, 10));
    const auto& out0 = graph.out[0];
    const auto& out1 = graph.out[1];
    CHECK(std::find(out0.begin(), out0.end(), 1) == out0.end());
    CHECK(std::find(out1.begin(), out1.end(), 0) == out1.end());
    // Unanimous pairs keep their edges.
    CHECK(std::find(out0.begin(), out0.end(), 2) != out0.end());
    CHECK(std::find(out1.begin(), out1.end(), 2) != out1.end());
}

TEST_CASE("precedence graph is acyclic after cycle removal on adversarial votes") {
    Xorshift64Star rng(97);
    for (int iter = 0; iter < 50; ++iter) {
        const int d = 3 + static_cast<int>(rng.below(6));
        const int n = 1 + static_cast<int>(rng.below(5));
        const auto inputs = random_inputs(rng, n, d);
        auto graph = PrecedenceGraph::build(inputs, Rational(1, 10));
        graph.remove_short_cycles();
        std::vector<int> order;
        CHECK_NOTHROW(order = graph.surviving_topological_order());
        // Every surviving edge is consistent with the order.
        std::vector<int> pos(static_cast<size_t>(d), -1);
        for (size_t i = 0; i < order.size(); ++i) pos[static_cast<size_t>(order[i])] = static_cast<int>(i);
        for (int v = 0; v < d; ++v) {
            if (graph.removed[v]) continue;
            for (int w : graph.out[v])
                if (!graph.removed[w]) CHECK(pos[v] < pos[w]);
        }
    }
    CHECK_THROWS_AS(PrecedenceGraph::build({Ranking::identity(3)}, Rational(2, 3)),
                    std::invalid_argument);
}

TEST_CASE("relative-order candidate returns the unanimous ranking when it is fair") {
    const Ranking a = Ranking::from_one_based({1, 2, 3});
    const GroupAssignment ga(std::vector<int>{0, 0, 0}, 1);
    const auto candidate = relative_order_candidate({a, a, a}, ga,
                                                    vacuous_spec(1, FairMode::StrictFair),
                                                    Rational(1, 10));
    REQUIRE(candidate.has_value());
    CHECK(candidate->to_one_based() == a.to_one_based());
}

TEST_CASE("relative-order candidate output is fair and distance-consistent") {
    Xorshift64Star rng(103);
    int produced = 0;
    for (int iter = 0; iter < 40; ++iter) {
        const int d = 3 + static_cast<int>(rng.below(4));
        const int n = 1 + static_cast<int>(rng.below(5));
        const int g = 1 + static_cast<int>(rng.below(2));
        const GroupAssignment ga = testutil::random_groups(rng, d, g);
        const FairnessSpec spec = testutil::draw_spec(rng, d, g, 4, FairMode::StrictFair);
        const auto inputs = random_inputs(rng, n, d);
        const auto candidate = relative_order_candidate(inputs, ga, spec, Rational(1, 10));
        if (!candidate) {
            CHECK_FALSE(feasibility_exists(ga, spec));
            continue;
        }
        CHECK(check_fair(*candidate, ga, spec));
        ++produced;
    }
    CHECK(produced > 10);
}

TEST_CASE("combined ulam median: single input equals its exact repair") {
    const GroupAssignment ga = GroupAssignment::from_groups({{0, 1}, {2, 3}}, 4);
    const FairnessSpec spec({Rational(1, 2), Rational(1, 2)}, {Rational(1, 2), Rational(1, 2)}, 2,
                            FairMode::StrictFair, 0);
    const Ranking pi = Ranking::from_one_based({1, 2, 3, 4});
    const auto result = ulam_fair_median({pi}, ga, spec);
    REQUIRE(result.has_value());
    CHECK(result->objective.str() == "1");  // the exact repair distance
    CHECK(check_fair(result->ranking, ga, spec));
}

TEST_CASE("combined ulam median: identical fair inputs give objective zero") {
    const GroupAssignment ga = GroupAssignment::from_groups({{0, 1}, {2, 3}}, 4);
    const FairnessSpec spec = vacuous_spec(2, FairMode::StrictFair);
    const Ranking pi = Ranking::from_one_based({4, 2, 1, 3});
    const auto result = ulam_fair_median({pi, pi, pi}, ga, spec);
    REQUIRE(result.has_value());
    CHECK(result->objective.str() == "0");
    CHECK(result->ranking.to_one_based() == pi.to_one_based());
}

TEST_CASE("combined ulam median beats neither candidate and stays within three times optimum") {
    Xorshift64Star rng(107);
    int checked = 0;
    for (int iter = 0; iter < 80; ++iter) {
        const int d = 3 + static_cast<int>(rng.below(4));  // 3..6
        const int n = 1 + static_cast<int>(rng.below(5));
        const int g = 1 + static_cast<int>(rng.below(2));
        const GroupAssignment ga = testutil::random_groups(rng, d, g);
        const FairnessSpec spec = testutil::draw_spec(rng, d, g, 4, FairMode::StrictFair);
        const auto inputs = random_inputs(rng, n, d);
        const auto result = ulam_fair_median(inputs, ga, spec);
        const auto reference =
            oracle_fair_aggregate(inputs, ga, spec, Metric::Ulam, QExponent::finite(1));
        REQUIRE(result.has_value() == reference.has_value());
        if (!result) continue;
        CHECK(check_fair(result->ranking, ga, spec));
        CHECK(result->objective.leq_scaled(reference->objective, 3));
        // Not worse than the repair-every-input candidate on its own.
        const auto repair_only = best_repaired_input(
            inputs, Metric::Ulam, QExponent::finite(1), exact_cfr_solver(ga, spec, Metric::Ulam));
        REQUIRE(repair_only.has_value());
        CHECK(result->objective.compare(repair_only->objective) <= 0);
        // Not worse than the relative-order candidate when one exists.
        const auto ordered = relative_order_candidate(inputs, ga, spec, Rational(1, 10));
        if (ordered) {
            const auto ordered_obj =
                ObjectiveValue::of(inputs, *ordered, Metric::Ulam, QExponent::finite(1));
            CHECK(result->objective.compare(ordered_obj) <= 0);
        }
        ++checked;
    }
    CHECK(checked > 10);
}

TEST_CASE("combined ulam median parallel runs match sequential") {
    Xorshift64Star rng(109);
    for (int iter = 0; iter < 15; ++iter) {
        const int d = 3 + static_cast<int>(rng.below(4));
        const int g = 1 + static_cast<int>(rng.below(2));
        const GroupAssignment ga = testutil::random_groups(rng, d, g);
        const FairnessSpec spec = testutil::draw_spec(rng, d, g, 4, FairMode::StrictFair);
        const auto inputs = random_inputs(rng, 5, d);
        const auto serial = ulam_fair_median(inputs, ga, spec, 1);
        const auto parallel = ulam_fair_median(inputs, ga, spec, 4);
        REQUIRE(serial.has_value() == parallel.has_value());
        if (serial) {
            CHECK(serial->ranking.to_one_based() == parallel->ranking.to_one_based());
            CHECK(serial->objective.str() == parallel->objective.str());
        }
    }
}
