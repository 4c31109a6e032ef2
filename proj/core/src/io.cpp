#include "fairrank/io.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "json.hpp"

#include "fairrank/rng.hpp"

namespace fairrank {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& field, const std::string& message) {
    throw ParseError(field + ": " + message);
}

long long get_integer(const Json& value, const std::string& field) {
    if (!value.is_number_integer()) fail(field, "expected an integer");
    return value.get<long long>();
}

const Json& get_array(const Json& value, const std::string& field) {
    if (!value.is_array()) fail(field, "expected an array");
    return value;
}

std::vector<int> get_one_based_elements(const Json& value, const std::string& field, int d) {
    std::vector<int> out;
    out.reserve(value.size());
    for (size_t i = 0; i < value.size(); ++i) {
        long long e = get_integer(value[i], field + "[" + std::to_string(i) + "]");
        if (e < 1 || e > d)
            fail(field + "[" + std::to_string(i) + "]",
                 "element " + std::to_string(e) + " outside 1.." + std::to_string(d));
        out.push_back(static_cast<int>(e) - 1);
    }
    return out;
}

std::vector<Rational> get_rationals(const Json& value, const std::string& field) {
    std::vector<Rational> out;
    out.reserve(value.size());
    for (size_t i = 0; i < value.size(); ++i) {
        const std::string item_field = field + "[" + std::to_string(i) + "]";
        if (!value[i].is_string()) fail(item_field, "expected a \"p/q\" string");
        try {
            out.push_back(Rational::parse(value[i].get<std::string>()));
        } catch (const std::invalid_argument& e) {
            fail(item_field, e.what());
        }
    }
    return out;
}

}  // namespace

Instance parse_instance(const std::string& json_text) {
    Json root;
    try {
        root = Json::parse(json_text);
    } catch (const Json::parse_error& e) {
        // Report the position as line/column rather than a byte offset.
        size_t line = 1, col = 1;
        for (size_t i = 0; i + 1 < e.byte && i < json_text.size(); ++i) {
            if (json_text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col) +
                         ": invalid JSON");
    }
    if (!root.is_object()) fail("$", "expected a JSON object");
    for (const auto& item : root.items()) {
        const std::string& key = item.key();
        if (key != "d" && key != "groups" && key != "alpha" && key != "beta" && key != "k" &&
            key != "mode" && key != "block" && key != "rankings")
            fail(key, "unknown field");
    }
    for (const char* key : {"d", "groups", "alpha", "beta", "k", "mode", "rankings"})
        if (!root.contains(key)) fail(key, "missing field");

    long long d_raw = get_integer(root["d"], "d");
    if (d_raw < 1 || d_raw > 1'000'000) fail("d", "must be in 1..1000000");
    const int d = static_cast<int>(d_raw);

    const Json& groups_json = get_array(root["groups"], "groups");
    std::vector<std::vector<int>> groups;
    groups.reserve(groups_json.size());
    for (size_t i = 0; i < groups_json.size(); ++i) {
        const std::string field = "groups[" + std::to_string(i) + "]";
        groups.push_back(get_one_based_elements(get_array(groups_json[i], field), field, d));
    }

    std::vector<Rational> alpha = get_rationals(get_array(root["alpha"], "alpha"), "alpha");
    std::vector<Rational> beta = get_rationals(get_array(root["beta"], "beta"), "beta");

    long long k = get_integer(root["k"], "k");
    if (k < 1 || k > d) fail("k", "must be in 1.." + std::to_string(d));

    if (!root["mode"].is_string()) fail("mode", "expected \"kfair\", \"block\", or \"strict\"");
    const std::string mode_text = root["mode"].get<std::string>();
    FairMode mode;
    if (mode_text == "kfair")
        mode = FairMode::KFair;
    else if (mode_text == "block")
        mode = FairMode::BlockFair;
    else if (mode_text == "strict")
        mode = FairMode::StrictFair;
    else
        fail("mode", "expected \"kfair\", \"block\", or \"strict\", got \"" + mode_text + "\"");

    int block = 0;
    if (mode == FairMode::BlockFair) {
        if (!root.contains("block")) fail("block", "missing field (required when mode is \"block\")");
        long long b = get_integer(root["block"], "block");
        if (b < 1 || b > d) fail("block", "must be in 1.." + std::to_string(d));
        block = static_cast<int>(b);
    } else if (root.contains("block")) {
        fail("block", "only allowed when mode is \"block\"");
    }

    const Json& rankings_json = get_array(root["rankings"], "rankings");
    if (rankings_json.empty()) fail("rankings", "need at least one ranking");
    std::vector<Ranking> rankings;
    rankings.reserve(rankings_json.size());
    for (size_t i = 0; i < rankings_json.size(); ++i) {
        const std::string field = "rankings[" + std::to_string(i) + "]";
        std::vector<int> perm = get_one_based_elements(get_array(rankings_json[i], field), field, d);
        try {
            rankings.emplace_back(std::move(perm));
        } catch (const std::invalid_argument& e) {
            fail(field, e.what());
        }
    }

    try {
        GroupAssignment assignment = GroupAssignment::from_groups(groups, d);
        FairnessSpec spec(std::move(alpha), std::move(beta), static_cast<int>(k), mode, block);
        return Instance(std::move(assignment), std::move(spec), std::move(rankings));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path + ": cannot open file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_instance(buffer.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string write_instance(const Instance& instance) {
    Json root = Json::object();
    root["d"] = instance.dimension();
    Json groups = Json::array();
    for (int z = 0; z < instance.groups.num_groups(); ++z) {
        Json members = Json::array();
        for (int e : instance.groups.members(z)) members.push_back(e + 1);
        groups.push_back(std::move(members));
    }
    root["groups"] = std::move(groups);
    Json alpha = Json::array(), beta = Json::array();
    for (const Rational& r : instance.fairness.alpha) alpha.push_back(r.str());
    for (const Rational& r : instance.fairness.beta) beta.push_back(r.str());
    root["alpha"] = std::move(alpha);
    root["beta"] = std::move(beta);
    root["k"] = instance.fairness.k;
    root["mode"] = to_string(instance.fairness.mode);
    if (instance.fairness.mode == FairMode::BlockFair) root["block"] = instance.fairness.block;
    Json rankings = Json::array();
    for (const Ranking& r : instance.rankings) rankings.push_back(r.to_one_based());
    root["rankings"] = std::move(rankings);
    return root.dump(2) + "\n";
}

Instance generate_instance(const GenConfig& config) {
    if (config.d < 1) throw std::invalid_argument("generator: d must be at least 1");
    if (config.n < 1) throw std::invalid_argument("generator: n must be at least 1");
    if (config.g < 1 || config.g > config.d)
        throw std::invalid_argument("generator: g must be in 1..d");
    if (config.denominator_cap < 1)
        throw std::invalid_argument("generator: denominator cap must be at least 1");

    const int d = config.d, g = config.g;
    Xorshift64Star rng(config.seed);

    for (int attempt = 0; attempt < 256; ++attempt) {
        // Elements 0..g-1 pin one member per group so no group is empty;
        // the rest land uniformly.
        std::vector<int> group_of(static_cast<size_t>(d));
        for (int e = 0; e < d; ++e)
            group_of[e] = e < g ? e : static_cast<int>(rng.below(static_cast<uint64_t>(g)));
        GroupAssignment assignment(std::move(group_of), g);

        const int block = config.mode == FairMode::BlockFair
                              ? static_cast<int>(1 + rng.below(static_cast<uint64_t>(
                                    std::min(d, config.denominator_cap))))
                              : 0;

        // Quotas straddle each group's share of the universe: the lower
        // quota is drawn at or below it and the upper quota at or above it,
        // which keeps the screening acceptance rate high.
        std::vector<Rational> alpha, beta;
        alpha.reserve(static_cast<size_t>(g));
        beta.reserve(static_cast<size_t>(g));
        for (int z = 0; z < g; ++z) {
            const long long size_z = assignment.group_size(z);
            const long long lo_den =
                block > 0 ? block : 1 + static_cast<long long>(rng.below(
                                            static_cast<uint64_t>(config.denominator_cap)));
            const long long lo_max = lo_den * size_z / d;
            alpha.emplace_back(static_cast<long long>(rng.below(static_cast<uint64_t>(lo_max + 1))),
                               lo_den);
            const long long hi_den =
                block > 0 ? block : 1 + static_cast<long long>(rng.below(
                                            static_cast<uint64_t>(config.denominator_cap)));
            const long long hi_min = std::min((hi_den * size_z + d - 1) / d, hi_den);
            beta.emplace_back(
                hi_min + static_cast<long long>(rng.below(static_cast<uint64_t>(hi_den - hi_min + 1))),
                hi_den);
        }
        const int k = static_cast<int>(1 + rng.below(static_cast<uint64_t>(d)));

        FairnessSpec spec(std::move(alpha), std::move(beta), k, config.mode, block);
        if (!feasibility_exists(assignment, spec)) continue;

        std::vector<Ranking> rankings;
        rankings.reserve(static_cast<size_t>(config.n));
        std::vector<int> perm(static_cast<size_t>(d));
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = 0; i < config.n; ++i) {
            rng.shuffle(perm);
            rankings.emplace_back(perm);
        }
        return Instance(std::move(assignment), std::move(spec), std::move(rankings));
    }
    throw std::runtime_error("generator: no feasible spec found after 256 attempts (seed " +
                             std::to_string(config.seed) + ")");
}

}  // namespace fairrank
