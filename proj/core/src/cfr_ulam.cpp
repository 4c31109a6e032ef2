#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "fairrank/cfr.hpp"

namespace fairrank {

namespace {

void validate_quotas(const GroupAssignment& groups, const std::vector<Rational>& alpha,
                     const std::vector<Rational>& beta) {
    if (static_cast<int>(alpha.size()) != groups.num_groups() || alpha.size() != beta.size())
        throw std::invalid_argument("cfr: quota count differs from group count");
    for (size_t i = 0; i < alpha.size(); ++i)
        if (alpha[i] > beta[i]) throw std::invalid_argument("cfr: alpha exceeds beta");
}

constexpr int32_t kNeg = -1;  // "no fair completion reaches this state"

}  // namespace

size_t UlamDpTable::estimate_bytes(const GroupAssignment& groups, size_t seq_len) {
    size_t layer = 1;
    for (int z = 0; z < groups.num_groups(); ++z)
        layer *= static_cast<size_t>(groups.group_size(z)) + 1;
    // Tag bytes per layer for every layer, two rolling int32 value layers,
    // and the per-cell validity mask.
    return (seq_len + 1) * layer + 2 * layer * sizeof(int32_t) + layer;
}

UlamDpTable::UlamDpTable(std::vector<int> seq, const GroupAssignment& groups,
                         const std::vector<Rational>& alpha, const std::vector<Rational>& beta,
                         int k)
    : seq_(std::move(seq)), groups_(groups) {
    validate_quotas(groups, alpha, beta);
    const int d = groups.dimension();
    const int g = groups.num_groups();
    const int m = static_cast<int>(seq_.size());
    if (k < 1 || k > d) throw std::invalid_argument("cfr: k out of range");
    if (m > d) throw std::invalid_argument("cfr: reference sequence longer than the universe");
    {
        std::vector<char> seen(static_cast<size_t>(d), 0);
        for (int e : seq_) {
            if (e < 0 || e >= d) throw std::invalid_argument("cfr: reference element out of range");
            if (seen[e]) throw std::invalid_argument("cfr: reference element repeated");
            seen[e] = 1;
        }
    }
    if (estimate_bytes(groups, seq_.size()) > (size_t{1} << 33))
        throw std::length_error("cfr: dp table would exceed 8 GiB");

    dims_.resize(g);
    strides_.resize(g);
    for (int z = 0; z < g; ++z) dims_[z] = groups.group_size(z) + 1;
    strides_[g - 1] = 1;
    for (int z = g - 2; z >= 0; --z) strides_[z] = strides_[z + 1] * dims_[z + 1];
    layer_size_ = strides_[0] * static_cast<size_t>(dims_[0]);

    // Quota bounds per constrained prefix length, computed once.
    std::vector<long long> lo(static_cast<size_t>(d + 1) * g), hi(static_cast<size_t>(d + 1) * g);
    for (int gamma = k; gamma <= d; ++gamma)
        for (int z = 0; z < g; ++z) {
            lo[static_cast<size_t>(gamma) * g + z] = alpha[z].floor_mul(gamma);
            hi[static_cast<size_t>(gamma) * g + z] = beta[z].ceil_mul(gamma);
        }

    // A placed-prefix composition is usable iff it is unconstrained
    // (gamma < k) or inside every group's quota band.  Independent of j.
    std::vector<uint8_t> usable(layer_size_);
    std::vector<int> counts(static_cast<size_t>(g), 0);
    {
        int gamma = 0;
        for (size_t idx = 0; idx < layer_size_; ++idx) {
            bool ok = true;
            if (gamma >= k) {
                const long long* lo_row = &lo[static_cast<size_t>(gamma) * g];
                const long long* hi_row = &hi[static_cast<size_t>(gamma) * g];
                for (int z = 0; z < g; ++z)
                    if (counts[z] < lo_row[z] || counts[z] > hi_row[z]) {
                        ok = false;
                        break;
                    }
            }
            usable[idx] = ok;
            // Odometer step (row-major, last group fastest).
            for (int z = g - 1; z >= 0; --z) {
                if (++counts[z] < dims_[z]) {
                    ++gamma;
                    break;
                }
                gamma -= dims_[z] - 1;
                counts[z] = 0;
            }
        }
    }

    tags_.assign(static_cast<size_t>(m + 1) * layer_size_, kUnreachable);
    std::vector<int32_t> prev(layer_size_), cur(layer_size_);

    for (int j = 0; j <= m; ++j) {
        uint8_t* tag_layer = &tags_[static_cast<size_t>(j) * layer_size_];
        const int match_group = j >= 1 ? groups.group_of(seq_[j - 1]) : -1;
        std::fill(counts.begin(), counts.end(), 0);
        for (size_t idx = 0; idx < layer_size_; ++idx) {
            if (!usable[idx]) {
                cur[idx] = kNeg;
            } else {
                int32_t best = kNeg;
                uint8_t tag = kUnreachable;
                if (j == 0 && idx == 0) {
                    best = 0;
                    tag = kBase;
                }
                if (j >= 1) {
                    if (counts[match_group] >= 1) {
                        int32_t c = prev[idx - strides_[match_group]];
                        if (c >= 0 && c + 1 > best) {
                            best = c + 1;
                            tag = kMatch;
                        }
                    }
                    int32_t c = prev[idx];
                    if (c > best) {
                        best = c;
                        tag = kSkip;
                    }
                }
                for (int z = 0; z < g; ++z) {
                    if (counts[z] >= 1) {
                        int32_t c = cur[idx - strides_[z]];
                        if (c > best) {
                            best = c;
                            tag = static_cast<uint8_t>(kFillBase + z);
                        }
                    }
                }
                cur[idx] = best;
                tag_layer[idx] = tag;
            }
            for (int z = g - 1; z >= 0; --z) {
                if (++counts[z] < dims_[z]) break;
                counts[z] = 0;
            }
        }
        std::swap(prev, cur);
    }

    int32_t full = prev[layer_size_ - 1];
    best_lcs_ = full >= 0 ? full : -1;
}

size_t UlamDpTable::layer_index(const std::vector<int>& counts) const {
    size_t idx = 0;
    for (size_t z = 0; z < counts.size(); ++z) idx += strides_[z] * static_cast<size_t>(counts[z]);
    return idx;
}

std::optional<Ranking> UlamDpTable::reconstruct() const {
    if (best_lcs_ < 0) return std::nullopt;
    const int d = groups_.dimension();
    const int g = groups_.num_groups();

    // Walk the tags back from the final state, collecting for every output
    // position its group and, for matches, the concrete element.
    struct Slot {
        int group;
        int element;  // -1 for fills
    };
    std::vector<Slot> slots;
    slots.reserve(static_cast<size_t>(d));
    std::vector<int> counts(static_cast<size_t>(g));
    for (int z = 0; z < g; ++z) counts[z] = dims_[z] - 1;
    int j = static_cast<int>(seq_.size());
    size_t idx = layer_index(counts);
    for (;;) {
        uint8_t tag = tags_[static_cast<size_t>(j) * layer_size_ + idx];
        assert(tag != kUnreachable);
        if (tag == kBase) break;
        if (tag == kSkip) {
            --j;
        } else if (tag == kMatch) {
            int e = seq_[j - 1];
            int z = groups_.group_of(e);
            slots.push_back({z, e});
            idx -= strides_[z];
            --counts[z];
            --j;
        } else {
            int z = tag - kFillBase;
            slots.push_back({z, -1});
            idx -= strides_[z];
            --counts[z];
        }
    }
    std::reverse(slots.begin(), slots.end());
    assert(static_cast<int>(slots.size()) == d);

    // Fill slots: matched elements stay where the walk placed them; the
    // remaining slots of each group take its unused elements in increasing
    // element id.
    std::vector<char> matched(static_cast<size_t>(d), 0);
    for (const Slot& s : slots)
        if (s.element >= 0) matched[s.element] = 1;
    std::vector<size_t> next_member(static_cast<size_t>(g), 0);
    std::vector<int> perm;
    perm.reserve(static_cast<size_t>(d));
    for (const Slot& s : slots) {
        if (s.element >= 0) {
            perm.push_back(s.element);
        } else {
            const std::vector<int>& mem = groups_.members(s.group);
            size_t& i = next_member[s.group];
            while (i < mem.size() && matched[mem[i]]) ++i;
            assert(i < mem.size());
            perm.push_back(mem[i++]);
        }
    }
    return Ranking(std::move(perm));
}

std::optional<CfrResult> cfr_ulam_strict(const std::vector<int>& seq, const GroupAssignment& groups,
                                         const std::vector<Rational>& alpha,
                                         const std::vector<Rational>& beta, int k) {
    UlamDpTable table(seq, groups, alpha, beta, k);
    if (table.best_lcs() < 0) return std::nullopt;
    std::optional<Ranking> sigma = table.reconstruct();
    assert(sigma);
    assert(check_fair(*sigma, groups, FairnessSpec(alpha, beta, k, FairMode::StrictFair)));
    long long dist = groups.dimension() - table.best_lcs();
    return CfrResult{std::move(*sigma), dist};
}

}  // namespace fairrank
