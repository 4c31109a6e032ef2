#include "fairrank/fairness.hpp"

#include <cassert>
#include <stdexcept>

#include "fairrank/cfr.hpp"

namespace fairrank {

std::string to_string(FairMode mode) {
    switch (mode) {
        case FairMode::KFair: return "kfair";
        case FairMode::BlockFair: return "block";
        case FairMode::StrictFair: return "strict";
    }
    return "?";
}

FairnessSpec::FairnessSpec(std::vector<Rational> alpha_in, std::vector<Rational> beta_in, int k_in,
                           FairMode mode_in, int block_in)
    : alpha(std::move(alpha_in)), beta(std::move(beta_in)), k(k_in), mode(mode_in), block(block_in) {
    if (alpha.size() != beta.size())
        throw std::invalid_argument("fairness: alpha and beta must have one entry per group");
    if (alpha.empty()) throw std::invalid_argument("fairness: need at least one group quota");
    const Rational one(1, 1);
    for (size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] > beta[i])
            throw std::invalid_argument("fairness: alpha[" + std::to_string(i) +
                                        "] exceeds beta[" + std::to_string(i) + "]");
        if (beta[i] > one)
            throw std::invalid_argument("fairness: beta[" + std::to_string(i) + "] exceeds 1");
    }
    if (k < 1) throw std::invalid_argument("fairness: k must be at least 1");
    if (mode == FairMode::BlockFair) {
        if (block < 1) throw std::invalid_argument("fairness: block length must be at least 1");
        for (size_t i = 0; i < alpha.size(); ++i) {
            if (!alpha[i].mul_is_integral(block) || !beta[i].mul_is_integral(block))
                throw std::invalid_argument("fairness: block * alpha and block * beta must be "
                                            "integral for group " + std::to_string(i));
        }
    }
}

void FairnessSpec::validate_for(const GroupAssignment& groups) const {
    if (static_cast<int>(alpha.size()) != groups.num_groups())
        throw std::invalid_argument("fairness: quota count differs from group count");
    if (k > groups.dimension())
        throw std::invalid_argument("fairness: k exceeds the number of elements");
    if (mode == FairMode::BlockFair && block > groups.dimension())
        throw std::invalid_argument("fairness: block length exceeds the number of elements");
}

bool check_fair(const Ranking& r, const GroupAssignment& groups, const FairnessSpec& spec) {
    if (r.size() != groups.dimension())
        throw std::invalid_argument("fairness: ranking and groups disagree on the element count");
    spec.validate_for(groups);

    const int d = r.size();
    const int g = groups.num_groups();
    std::vector<long long> count(static_cast<size_t>(g), 0);

    for (int p1 = 1; p1 <= d; ++p1) {  // p1 = prefix length
        ++count[groups.group_of(r.at(p1 - 1))];
        switch (spec.mode) {
            case FairMode::KFair:
                if (p1 != spec.k) continue;
                for (int i = 0; i < g; ++i)
                    if (count[i] < spec.alpha[i].floor_mul(p1) || count[i] > spec.beta[i].ceil_mul(p1))
                        return false;
                break;
            case FairMode::BlockFair:
                if (p1 < spec.k || p1 % spec.block != 0) continue;
                for (int i = 0; i < g; ++i) {
                    // p1 is a multiple of the block length, so both products
                    // are integers; compare without rounding.
                    assert(spec.alpha[i].mul_is_integral(p1) && spec.beta[i].mul_is_integral(p1));
                    if (spec.alpha[i].compare_mul(p1, count[i]) > 0 ||
                        spec.beta[i].compare_mul(p1, count[i]) < 0)
                        return false;
                }
                break;
            case FairMode::StrictFair:
                if (p1 < spec.k) continue;
                for (int i = 0; i < g; ++i)
                    if (count[i] < spec.alpha[i].floor_mul(p1) || count[i] > spec.beta[i].ceil_mul(p1))
                        return false;
                break;
        }
    }
    return true;
}

bool feasibility_exists(const GroupAssignment& groups, const FairnessSpec& spec) {
    spec.validate_for(groups);
    auto res = closest_fair_ranking(Ranking::identity(groups.dimension()), groups, spec,
                                    spec.mode == FairMode::StrictFair ? Metric::Ulam
                                                                      : Metric::KendallTau);
    if (!res) return false;
    assert(check_fair(res->ranking, groups, spec));
    return true;
}

}  // namespace fairrank
