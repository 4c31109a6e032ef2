#pragma once

#include <vector>

namespace fairrank {

// A ranking of d elements: a permutation of {0, ..., d-1} together with its
// inverse.  perm()[r] is the element placed at rank r (rank 0 = best), and
// rank_of(e) is the rank of element e.  Elements and ranks are 0-based in
// the whole library; the 1-based convention of the file format and command
// line is translated exactly once at the I/O boundary.
class Ranking {
public:
    explicit Ranking(std::vector<int> perm);

    static Ranking identity(int d);
    // Builds from a 1-based permutation of {1, ..., d}.
    static Ranking from_one_based(const std::vector<int>& perm);

    int size() const { return static_cast<int>(perm_.size()); }
    int at(int rank) const { return perm_[rank]; }
    int rank_of(int element) const { return inv_[element]; }

    const std::vector<int>& perm() const { return perm_; }
    const std::vector<int>& inverse() const { return inv_; }

    std::vector<int> to_one_based() const;

    friend bool operator==(const Ranking& a, const Ranking& b) { return a.perm_ == b.perm_; }
    friend bool operator!=(const Ranking& a, const Ranking& b) { return !(a == b); }

private:
    std::vector<int> perm_;
    std::vector<int> inv_;
};

// Partition of the d elements into g non-empty groups, 0-based on both
// sides.  Construction validates that every element belongs to exactly one
// group and that no group is empty.
class GroupAssignment {
public:
    GroupAssignment(std::vector<int> group_of, int num_groups);

    // groups[i] lists the 0-based elements of group i; the lists must
    // partition {0, ..., d-1}.
    static GroupAssignment from_groups(const std::vector<std::vector<int>>& groups, int d);

    int dimension() const { return static_cast<int>(group_of_.size()); }
    int num_groups() const { return static_cast<int>(members_.size()); }
    int group_of(int element) const { return group_of_[element]; }
    int group_size(int group) const { return static_cast<int>(members_[group].size()); }
    // Members of a group in increasing element id.
    const std::vector<int>& members(int group) const { return members_[group]; }

private:
    std::vector<int> group_of_;
    std::vector<std::vector<int>> members_;
};

}  // namespace fairrank
