#include "fairrank/aggregate.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace fairrank {

QExponent QExponent::finite(unsigned q) {
    if (q < 1) throw std::invalid_argument("q must be a positive integer or inf");
    return QExponent(q, false);
}

QExponent QExponent::infinity() { return QExponent(0, true); }

QExponent QExponent::parse(const std::string& text) {
    if (text == "inf") return infinity();
    size_t pos = 0;
    unsigned long v;
    try {
        v = std::stoul(text, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("q must be a positive integer or inf");
    }
    if (pos != text.size() || v < 1 || v > 1u << 20)
        throw std::invalid_argument("q must be a positive integer or inf");
    return finite(static_cast<unsigned>(v));
}

ObjectiveValue ObjectiveValue::of(const std::vector<Ranking>& inputs, const Ranking& sigma,
                                  Metric m, QExponent q) {
    ObjectiveValue o(q);
    for (const Ranking& pi : inputs) o.add(metric_distance(m, pi, sigma));
    return o;
}

void ObjectiveValue::add(long long dist) {
    if (q_.is_infinite()) {
        if (dist > max_) max_ = dist;
    } else {
        sum_ += boost::multiprecision::pow(BigInt(dist), q_.value());
    }
}

int ObjectiveValue::compare(const ObjectiveValue& other) const {
    assert(q_ == other.q_);
    if (q_.is_infinite()) return max_ < other.max_ ? -1 : max_ > other.max_ ? 1 : 0;
    return sum_ < other.sum_ ? -1 : sum_ > other.sum_ ? 1 : 0;
}

bool ObjectiveValue::leq_scaled(const ObjectiveValue& other, unsigned factor) const {
    assert(q_ == other.q_);
    if (q_.is_infinite()) return max_ <= static_cast<long long>(factor) * other.max_;
    return sum_ <= boost::multiprecision::pow(BigInt(factor), q_.value()) * other.sum_;
}

std::string ObjectiveValue::str() const {
    if (q_.is_infinite()) return std::to_string(max_);
    return sum_.str();
}

double ObjectiveValue::display() const {
    if (q_.is_infinite()) return static_cast<double>(max_);
    double s = sum_.convert_to<double>();
    if (q_.value() == 1) return s;
    return std::pow(s, 1.0 / q_.value());
}

CfrSolver exact_cfr_solver(const GroupAssignment& groups, const FairnessSpec& spec,
                           Metric metric) {
    return [groups, spec, metric](const Ranking& pi) {
        return closest_fair_ranking(pi, groups, spec, metric);
    };
}

namespace {

// Runs fn(i) for i in [0, n) on up to `jobs` threads.  Each index writes
// only its own output slot, so results do not depend on the thread count.
template <typename Fn>
void parallel_for(int n, int jobs, const Fn& fn) {
    if (jobs < 1) throw std::invalid_argument("jobs must be at least 1");
    jobs = std::min(jobs, n);
    if (jobs <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::mutex err_mutex;
    std::exception_ptr first_error;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(jobs));
    for (int w = 0; w < jobs; ++w) {
        pool.emplace_back([&, w] {
            try {
                // Contiguous chunks keep the partition deterministic.
                int lo = static_cast<int>(static_cast<long long>(n) * w / jobs);
                int hi = static_cast<int>(static_cast<long long>(n) * (w + 1) / jobs);
                for (int i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (std::thread& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

void require_inputs(const std::vector<Ranking>& inputs) {
    if (inputs.empty()) throw std::invalid_argument("aggregate: need at least one input ranking");
    for (const Ranking& r : inputs)
        if (r.size() != inputs.front().size())
            throw std::invalid_argument("aggregate: input rankings differ in size");
}

}  // namespace

std::optional<AggResult> best_repaired_input(const std::vector<Ranking>& inputs, Metric m,
                                             QExponent q, const CfrSolver& cfr, int jobs) {
    require_inputs(inputs);
    const int n = static_cast<int>(inputs.size());

    std::vector<std::optional<CfrResult>> repaired(static_cast<size_t>(n));
    parallel_for(n, jobs, [&](int i) { repaired[i] = cfr(inputs[i]); });
    // Feasibility does not depend on the solver's input, so one empty
    // result means there is no fair ranking at all.
    for (const auto& r : repaired)
        if (!r) return std::nullopt;

    std::vector<std::optional<ObjectiveValue>> scores(static_cast<size_t>(n));
    parallel_for(n, jobs, [&](int i) { scores[i] = ObjectiveValue::of(inputs, repaired[i]->ranking, m, q); });

    int best = 0;
    for (int i = 1; i < n; ++i)
        if (scores[i]->compare(*scores[best]) < 0) best = i;  // ties keep the lowest index
    return AggResult{std::move(repaired[best]->ranking), std::move(*scores[best])};
}

std::optional<AggResult> repaired_aggregate(const std::vector<Ranking>& inputs, Metric m,
                                            QExponent q, const Aggregator& agg,
                                            const CfrSolver& cfr) {
    require_inputs(inputs);
    Ranking rough = agg(inputs);
    std::optional<CfrResult> repaired = cfr(rough);
    if (!repaired) return std::nullopt;
    ObjectiveValue score = ObjectiveValue::of(inputs, repaired->ranking, m, q);
    return AggResult{std::move(repaired->ranking), std::move(score)};
}

std::optional<AggResult> ulam_fair_median(const std::vector<Ranking>& inputs,
                                          const GroupAssignment& groups, const FairnessSpec& spec,
                                          int jobs) {
    require_inputs(inputs);
    if (spec.mode != FairMode::StrictFair)
        throw std::invalid_argument("ulam_fair_median requires a strict fairness spec");
    spec.validate_for(groups);

    const QExponent q1 = QExponent::finite(1);
    std::optional<AggResult> repaired = best_repaired_input(
        inputs, Metric::Ulam, q1, exact_cfr_solver(groups, spec, Metric::Ulam), jobs);
    if (!repaired) return std::nullopt;

    std::optional<Ranking> ordered =
        relative_order_candidate(inputs, groups, spec, Rational(1, 10));
    // Feasibility is a property of (groups, spec) alone, so both candidate
    // routes agree on it.
    assert(ordered);
    if (ordered) {
        ObjectiveValue score = ObjectiveValue::of(inputs, *ordered, Metric::Ulam, q1);
        if (score.compare(repaired->objective) < 0)
            return AggResult{std::move(*ordered), std::move(score)};
    }
    return repaired;
}

}  // namespace fairrank
