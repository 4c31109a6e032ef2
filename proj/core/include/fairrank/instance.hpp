#pragma once

#include <stdexcept>
#include <vector>

#include "fairrank/fairness.hpp"
#include "fairrank/ranking.hpp"

namespace fairrank {

// A rank-aggregation problem: n rankings over a shared universe, the group
// partition, and the fairness spec.  Construction validates that everything
// agrees on d and g, so downstream code never re-checks dimensions.
struct Instance {
    GroupAssignment groups;
    FairnessSpec fairness;
    std::vector<Ranking> rankings;

    Instance(GroupAssignment groups_in, FairnessSpec fairness_in, std::vector<Ranking> rankings_in)
        : groups(std::move(groups_in)),
          fairness(std::move(fairness_in)),
          rankings(std::move(rankings_in)) {
        if (rankings.empty()) throw std::invalid_argument("instance: need at least one ranking");
        for (const Ranking& r : rankings)
            if (r.size() != groups.dimension())
                throw std::invalid_argument("instance: ranking size differs from the universe size");
        fairness.validate_for(groups);
    }

    int dimension() const { return groups.dimension(); }
    int num_rankings() const { return static_cast<int>(rankings.size()); }
};

}  // namespace fairrank
