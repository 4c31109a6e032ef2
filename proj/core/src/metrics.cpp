#include "fairrank/metrics.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <unordered_map>

namespace fairrank {

std::string to_string(Metric m) {
    switch (m) {
        case Metric::KendallTau: return "kt";
        case Metric::SpearmanFootrule: return "sf";
        case Metric::Ulam: return "ulam";
    }
    return "?";
}

Metric parse_metric(const std::string& text) {
    if (text == "kt") return Metric::KendallTau;
    if (text == "sf") return Metric::SpearmanFootrule;
    if (text == "ulam") return Metric::Ulam;
    throw std::invalid_argument("unknown metric '" + text + "' (expected kt, sf, or ulam)");
}

namespace {

void require_same_size(const Ranking& a, const Ranking& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("metric: rankings have different sizes");
}

// Sequence whose inversions/increasing runs encode how b orders the
// elements that a lists in rank order.
std::vector<int> compose(const Ranking& a, const Ranking& b) {
    std::vector<int> s(static_cast<size_t>(a.size()));
    for (int r = 0; r < a.size(); ++r) s[r] = b.rank_of(a.at(r));
    return s;
}

long long count_inversions(std::vector<int>& v, std::vector<int>& scratch, size_t lo, size_t hi) {
    if (hi - lo < 2) return 0;
    size_t mid = lo + (hi - lo) / 2;
    long long inv = count_inversions(v, scratch, lo, mid) + count_inversions(v, scratch, mid, hi);
    size_t i = lo, j = mid, out = lo;
    while (i < mid && j < hi) {
        if (v[i] <= v[j]) {
            scratch[out++] = v[i++];
        } else {
            inv += static_cast<long long>(mid - i);
            scratch[out++] = v[j++];
        }
    }
    while (i < mid) scratch[out++] = v[i++];
    while (j < hi) scratch[out++] = v[j++];
    std::copy(scratch.begin() + lo, scratch.begin() + hi, v.begin() + lo);
    return inv;
}

// Length of the longest strictly increasing subsequence (patience sorting).
int lis_length(const std::vector<int>& s) {
    std::vector<int> tails;  // tails[l] = smallest tail of an increasing subsequence of length l+1
    tails.reserve(s.size());
    for (int x : s) {
        auto it = std::lower_bound(tails.begin(), tails.end(), x);
        if (it == tails.end())
            tails.push_back(x);
        else
            *it = x;
    }
    return static_cast<int>(tails.size());
}

}  // namespace

long long kendall_tau(const Ranking& a, const Ranking& b) {
    require_same_size(a, b);
    std::vector<int> s = compose(a, b);
    std::vector<int> scratch(s.size());
    return count_inversions(s, scratch, 0, s.size());
}

long long spearman_footrule(const Ranking& a, const Ranking& b) {
    require_same_size(a, b);
    long long sum = 0;
    for (int e = 0; e < a.size(); ++e)
        sum += std::llabs(static_cast<long long>(a.rank_of(e)) - b.rank_of(e));
    return sum;
}

long long ulam(const Ranking& a, const Ranking& b) {
    require_same_size(a, b);
    return a.size() - lis_length(compose(a, b));
}

long long metric_distance(Metric m, const Ranking& a, const Ranking& b) {
    switch (m) {
        case Metric::KendallTau: return kendall_tau(a, b);
        case Metric::SpearmanFootrule: return spearman_footrule(a, b);
        case Metric::Ulam: return ulam(a, b);
    }
    throw std::logic_error("metric: unknown enum value");
}

long long kendall_tau_naive(const Ranking& a, const Ranking& b) {
    require_same_size(a, b);
    long long disagreements = 0;
    for (int x = 0; x < a.size(); ++x)
        for (int y = x + 1; y < a.size(); ++y)
            if ((a.rank_of(x) < a.rank_of(y)) != (b.rank_of(x) < b.rank_of(y))) ++disagreements;
    return disagreements;
}

long long spearman_footrule_naive(const Ranking& a, const Ranking& b) {
    require_same_size(a, b);
    long long sum = 0;
    for (int e = 0; e < a.size(); ++e) {
        long long diff = a.rank_of(e) - b.rank_of(e);
        sum += diff < 0 ? -diff : diff;
    }
    return sum;
}

long long ulam_naive(const Ranking& a, const Ranking& b) {
    require_same_size(a, b);
    return a.size() - lcs_length_quadratic(a.perm(), b.perm());
}

long long metric_distance_naive(Metric m, const Ranking& a, const Ranking& b) {
    switch (m) {
        case Metric::KendallTau: return kendall_tau_naive(a, b);
        case Metric::SpearmanFootrule: return spearman_footrule_naive(a, b);
        case Metric::Ulam: return ulam_naive(a, b);
    }
    throw std::logic_error("metric: unknown enum value");
}

int lcs_length(const std::vector<int>& s, const std::vector<int>& t) {
    std::unordered_map<int, int> pos_in_t;
    pos_in_t.reserve(t.size() * 2);
    for (size_t i = 0; i < t.size(); ++i) pos_in_t.emplace(t[i], static_cast<int>(i));
    std::vector<int> projected;
    projected.reserve(s.size());
    for (int x : s) {
        auto it = pos_in_t.find(x);
        if (it != pos_in_t.end()) projected.push_back(it->second);
    }
    return lis_length(projected);
}

int lcs_length_quadratic(const std::vector<int>& s, const std::vector<int>& t) {
    const size_t n = s.size(), m = t.size();
    std::vector<int> prev(m + 1, 0), cur(m + 1, 0);
    for (size_t i = 1; i <= n; ++i) {
        for (size_t j = 1; j <= m; ++j) {
            if (s[i - 1] == t[j - 1])
                cur[j] = prev[j - 1] + 1;
            else
                cur[j] = std::max(prev[j], cur[j - 1]);
        }
        std::swap(prev, cur);
    }
    return prev[m];
}

}  // namespace fairrank
