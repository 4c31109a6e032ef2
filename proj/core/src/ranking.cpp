#include "fairrank/ranking.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace fairrank {

Ranking::Ranking(std::vector<int> perm) : perm_(std::move(perm)) {
    const int d = static_cast<int>(perm_.size());
    if (d < 1) throw std::invalid_argument("ranking: must contain at least one element");
    inv_.assign(d, -1);
    for (int r = 0; r < d; ++r) {
        int e = perm_[r];
        if (e < 0 || e >= d)
            throw std::invalid_argument("ranking: element " + std::to_string(e) + " out of range");
        if (inv_[e] != -1)
            throw std::invalid_argument("ranking: element " + std::to_string(e) + " appears twice");
        inv_[e] = r;
    }
}

Ranking Ranking::identity(int d) {
    std::vector<int> perm(static_cast<size_t>(d));
    std::iota(perm.begin(), perm.end(), 0);
    return Ranking(std::move(perm));
}

Ranking Ranking::from_one_based(const std::vector<int>& perm) {
    std::vector<int> shifted(perm.size());
    for (size_t i = 0; i < perm.size(); ++i) shifted[i] = perm[i] - 1;
    return Ranking(std::move(shifted));
}

std::vector<int> Ranking::to_one_based() const {
    std::vector<int> out(perm_.size());
    for (size_t i = 0; i < perm_.size(); ++i) out[i] = perm_[i] + 1;
    return out;
}

GroupAssignment::GroupAssignment(std::vector<int> group_of, int num_groups)
    : group_of_(std::move(group_of)) {
    const int d = static_cast<int>(group_of_.size());
    if (d < 1) throw std::invalid_argument("groups: need at least one element");
    if (num_groups < 1) throw std::invalid_argument("groups: need at least one group");
    members_.assign(static_cast<size_t>(num_groups), {});
    for (int e = 0; e < d; ++e) {
        int g = group_of_[e];
        if (g < 0 || g >= num_groups)
            throw std::invalid_argument("groups: group id " + std::to_string(g) + " out of range");
        members_[g].push_back(e);  // ascending because e is ascending
    }
    for (int g = 0; g < num_groups; ++g)
        if (members_[g].empty())
            throw std::invalid_argument("groups: group " + std::to_string(g) + " is empty");
}

GroupAssignment GroupAssignment::from_groups(const std::vector<std::vector<int>>& groups, int d) {
    if (d < 1) throw std::invalid_argument("groups: need at least one element");
    std::vector<int> group_of(static_cast<size_t>(d), -1);
    for (size_t g = 0; g < groups.size(); ++g) {
        for (int e : groups[g]) {
            if (e < 0 || e >= d)
                throw std::invalid_argument("groups: element " + std::to_string(e) + " out of range");
            if (group_of[e] != -1)
                throw std::invalid_argument("groups: element " + std::to_string(e) +
                                            " listed in more than one group");
            group_of[e] = static_cast<int>(g);
        }
    }
    for (int e = 0; e < d; ++e)
        if (group_of[e] == -1)
            throw std::invalid_argument("groups: element " + std::to_string(e) +
                                        " missing from every group");
    return GroupAssignment(std::move(group_of), static_cast<int>(groups.size()));
}

}  // namespace fairrank
