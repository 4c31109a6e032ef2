#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fairrank/cfr.hpp"
#include "fairrank/fairness.hpp"
#include "fairrank/metrics.hpp"
#include "fairrank/ranking.hpp"
#include "fairrank/rational.hpp"

namespace fairrank {

// Exponent of the q-mean objective: a positive integer or infinity (max).
class QExponent {
public:
    static QExponent finite(unsigned q);
    static QExponent infinity();
    // "inf" or a positive integer.
    static QExponent parse(const std::string& text);

    bool is_infinite() const { return infinite_; }
    unsigned value() const { return value_; }
    std::string str() const { return infinite_ ? "inf" : std::to_string(value_); }

    friend bool operator==(const QExponent& a, const QExponent& b) {
        return a.infinite_ == b.infinite_ && a.value_ == b.value_;
    }
    friend bool operator!=(const QExponent& a, const QExponent& b) { return !(a == b); }

private:
    QExponent(unsigned value, bool infinite) : value_(value), infinite_(infinite) {}
    unsigned value_;
    bool infinite_;
};

// Value of the q-mean objective sum_pi rho(pi, sigma)^q (capped by max for
// q = infinity), kept exact: distances are integers, so the finite-q
// objective is compared through the integer power sum and the monotone
// 1/q root is applied only when a human-readable number is wanted.
// Candidates are only ever compared at equal q.
class ObjectiveValue {
public:
    using BigInt = boost::multiprecision::cpp_int;

    explicit ObjectiveValue(QExponent q) : q_(q) {}

    static ObjectiveValue of(const std::vector<Ranking>& inputs, const Ranking& sigma, Metric m,
                             QExponent q);

    void add(long long dist);

    QExponent q() const { return q_; }
    const BigInt& power_sum() const { return sum_; }
    long long max_dist() const { return max_; }

    // -1, 0, 1 as this is a better, equal, or worse objective than `other`.
    int compare(const ObjectiveValue& other) const;
    // Whether this <= factor * other holds for the real-valued objective:
    // power sums are compared against factor^q * other for finite q.
    bool leq_scaled(const ObjectiveValue& other, unsigned factor) const;

    // Exact integer surrogate as text (power sum, or max for q = inf).
    std::string str() const;
    // (power sum)^(1/q) resp. max, for display only.
    double display() const;

private:
    QExponent q_;
    BigInt sum_ = 0;
    long long max_ = 0;
};

struct AggResult {
    Ranking ranking;
    ObjectiveValue objective;
};

// A closest-fair-ranking routine used as a plug-in by the aggregation
// algorithms; empty result means the fairness constraints are unsatisfiable.
using CfrSolver = std::function<std::optional<CfrResult>(const Ranking&)>;
// An (unconstrained) rank-aggregation routine.
using Aggregator = std::function<Ranking(const std::vector<Ranking>&)>;

// The exact library solver for (metric, mode) as a plug-in handle; copies
// its arguments so it may outlive them.
CfrSolver exact_cfr_solver(const GroupAssignment& groups, const FairnessSpec& spec, Metric metric);

// Fair aggregation by repairing every input: runs the solver on each input
// ranking and returns the repaired candidate with the best objective, ties
// broken toward the lowest input index.  With an exact solver this is a
// (c+2)-approximation of the optimal fair aggregate when the metric is a
// c-approximate median-preserving choice; see README for measured ratios.
// `jobs` bounds the worker threads; results are identical for every value.
std::optional<AggResult> best_repaired_input(const std::vector<Ranking>& inputs, Metric m,
                                             QExponent q, const CfrSolver& cfr, int jobs = 1);

// Fair aggregation by repairing one unconstrained aggregate: sigma =
// cfr(agg(inputs)).
std::optional<AggResult> repaired_aggregate(const std::vector<Ranking>& inputs, Metric m,
                                            QExponent q, const Aggregator& agg,
                                            const CfrSolver& cfr);

// Exact (unconstrained) Spearman-footrule median for q = 1, via a minimum
// cost perfect matching of elements to positions with
// cost(e, p) = sum_pi |rank_pi(e) - p|.  O(n d^2 + d^3).
Ranking spearman_median(const std::vector<Ranking>& inputs);

// Directed majority-precedence graph: edge (a, b) when at least
// ceil((1 - 2 * alpha) * n) of the inputs rank a before b (threshold
// evaluated in exact rational arithmetic).
struct PrecedenceGraph {
    int d = 0;
    std::vector<std::vector<int>> out;  // adjacency lists, ascending
    std::vector<char> removed;          // vertices deleted by cycle removal

    static PrecedenceGraph build(const std::vector<Ranking>& inputs, const Rational& alpha);

    // For v = 0, 1, ... in increasing id: if some cycle passes through the
    // surviving v, delete all vertices of a shortest such cycle (found by
    // BFS over out-edges, neighbors explored in increasing id).  Afterwards
    // the surviving graph is acyclic.
    void remove_short_cycles();

    // Kahn topological order of the surviving vertices, smallest id first
    // among ready vertices.  Throws std::logic_error if a cycle survived.
    std::vector<int> surviving_topological_order() const;
};

// The surviving topological order as an element sequence (may be much
// shorter than d when cycle removal deleted vertices).
std::vector<int> relative_order_sequence(const std::vector<Ranking>& inputs,
                                         const Rational& alpha);

// Fair aggregation candidate that preserves widely-agreed relative orders:
// extends relative_order_sequence(inputs, alpha) to a full strictly fair
// ranking maximizing the common subsequence with it.  Requires a StrictFair
// spec; empty when no fair ranking exists.
std::optional<Ranking> relative_order_candidate(const std::vector<Ranking>& inputs,
                                                const GroupAssignment& groups,
                                                const FairnessSpec& spec, const Rational& alpha);

// Fair Ulam median under the sum objective (q = 1): the better of
// best_repaired_input with the exact strict-fairness Ulam solver and
// relative_order_candidate at alpha = 1/10, ties toward the former.
std::optional<AggResult> ulam_fair_median(const std::vector<Ranking>& inputs,
                                          const GroupAssignment& groups, const FairnessSpec& spec,
                                          int jobs = 1);

}  // namespace fairrank
