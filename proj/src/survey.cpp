#include "vinc/survey.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <thread>

namespace vinc {

bool occurs_in(const VincularPattern& inner, const VincularPattern& outer) {
    int s = inner.size();
    int t = outer.size();
    if (s > t) return false;
    std::vector<int> at(s);
    auto rec = [&](auto&& self, int idx, int from) -> bool {
        if (idx == s) {
            for (int i = 1; i <= s; ++i)
                for (int j = i + 1; j <= s; ++j)
                    if ((inner.sigma().letter(i) < inner.sigma().letter(j)) !=
                        (outer.sigma().letter(at[i - 1]) <
                         outer.sigma().letter(at[j - 1])))
                        return false;
            for (int a : inner.adjacencies())
                if (at[a] != at[a - 1] + 1 || !outer.adjacent_at(at[a - 1]))
                    return false;
            return true;
        }
        for (int v = from; v + (s - idx) - 1 <= t; ++v) {
            at[idx] = v;
            if (self(self, idx + 1, v + 1)) return true;
        }
        return false;
    };
    return rec(rec, 0, 1);
}

bool has_redundant_member(const std::vector<VincularPattern>& patterns) {
    for (const VincularPattern& p : patterns)
        for (const VincularPattern& q : patterns)
            if (!(p == q) && occurs_in(q, p)) return true;
    return false;
}

std::vector<VincularPattern> all_patterns_of_length(int length) {
    if (length < 1) throw std::invalid_argument("pattern length must be positive");
    std::vector<VincularPattern> out;
    std::vector<int> letters(length);
    for (int i = 0; i < length; ++i) letters[i] = i + 1;
    std::sort(letters.begin(), letters.end());
    do {
        Permutation sigma(letters);
        int masks = 1 << (length - 1);
        for (int mask = 0; mask < masks; ++mask) {
            std::vector<int> adj;
            for (int j = 1; j < length; ++j)
                if (mask & (1 << (j - 1))) adj.push_back(j);
            out.emplace_back(sigma, adj);
        }
    } while (std::next_permutation(letters.begin(), letters.end()));
    return out;
}

std::vector<int> block_type(const VincularPattern& pat) {
    std::vector<int> type;
    for (const auto& [start, len] : pat.blocks()) type.push_back(len);
    return type;
}

std::string block_type_label(const std::vector<int>& type) {
    std::vector<int> reversed(type.rbegin(), type.rend());
    const std::vector<int>& shown = std::max(type, reversed);
    std::string out = "(";
    for (size_t i = 0; i < shown.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(shown[i]);
    }
    return out + ")";
}

namespace {

using PatternSet = std::vector<VincularPattern>;

PatternSet transformed(const PatternSet& set, int which) {
    switch (which) {
        case 1: return normalize_patterns(reverse_patterns(set));
        case 2: return normalize_patterns(complement_patterns(set));
        case 3: return normalize_patterns(complement_patterns(reverse_patterns(set)));
        default: return set;
    }
}

std::vector<SurveyClass> group_into_classes(const std::vector<PatternSet>& items) {
    std::map<std::string, std::pair<PatternSet, int>> by_representative;
    for (const PatternSet& item : items) {
        std::set<std::string> orbit;
        PatternSet representative = item;
        std::string least = format_pattern_set(item);
        orbit.insert(least);
        for (int which = 1; which <= 3; ++which) {
            PatternSet image = transformed(item, which);
            std::string name = format_pattern_set(image);
            orbit.insert(name);
            if (name < least) {
                least = name;
                representative = std::move(image);
            }
        }
        by_representative.emplace(least,
                                  std::pair(representative, static_cast<int>(orbit.size())));
    }
    std::vector<SurveyClass> classes;
    for (auto& [name, entry] : by_representative) {
        SurveyClass c;
        c.representative = entry.first;
        c.members = entry.second;
        classes.push_back(std::move(c));
    }
    return classes;
}

// Workers pick up every w-th task and write only their own slots, so the
// merged result is independent of scheduling.
void parallel_over(size_t count, const std::function<void(size_t)>& task) {
    size_t workers = std::min<size_t>(std::max(1u, std::thread::hardware_concurrency()),
                                      count);
    if (workers <= 1) {
        for (size_t i = 0; i < count; ++i) task(i);
        return;
    }
    std::vector<std::thread> pool;
    for (size_t w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (size_t i = w; i < count; i += workers) task(i);
        });
    for (std::thread& t : pool) t.join();
}

SurveyReport run_survey(std::string descriptor, const std::vector<PatternSet>& items,
                        const DiscoveryParams& params) {
    SurveyReport report;
    report.class_descriptor = std::move(descriptor);
    report.classes = group_into_classes(items);
    report.classes_total = static_cast<int>(report.classes.size());
    parallel_over(report.classes.size(), [&](size_t i) {
        SurveyClass& c = report.classes[i];
        FallbackOutcome outcome = discover_with_reverse(c.representative, params);
        if (const Scheme* scheme = std::get_if<Scheme>(&outcome.result)) {
            c.success = true;
            c.depth = scheme->depth();
            c.used_reverse = outcome.used_reverse;
        }
    });
    for (const SurveyClass& c : report.classes)
        if (c.success) ++report.classes_successful;
    return report;
}

}  // namespace

SurveyReport survey_patterns_of_length(int length, const DiscoveryParams& params) {
    std::vector<PatternSet> items;
    for (VincularPattern& pat : all_patterns_of_length(length))
        items.push_back({std::move(pat)});
    return run_survey("length " + std::to_string(length), items, params);
}

SurveyReport survey_block_type(const std::vector<int>& type,
                               const DiscoveryParams& params) {
    if (type.empty()) throw std::invalid_argument("block type must be non-empty");
    int length = 0;
    for (int b : type) {
        if (b < 1) throw std::invalid_argument("block lengths must be positive");
        length += b;
    }
    std::vector<int> reversed(type.rbegin(), type.rend());
    std::vector<PatternSet> items;
    for (VincularPattern& pat : all_patterns_of_length(length)) {
        std::vector<int> t = block_type(pat);
        if (t == type || t == reversed) items.push_back({std::move(pat)});
    }
    return run_survey(block_type_label(type), items, params);
}

SurveyReport survey_set_type(const std::vector<int>& set_type,
                             const DiscoveryParams& params) {
    if (set_type.empty()) throw std::invalid_argument("set type must be non-empty");
    std::vector<int> lengths = set_type;
    std::sort(lengths.begin(), lengths.end());
    std::map<int, std::vector<VincularPattern>> pool;
    for (int len : lengths)
        if (!pool.count(len)) pool[len] = all_patterns_of_length(len);

    std::set<PatternSet> sets;
    PatternSet current;
    auto rec = [&](auto&& self, size_t idx) -> void {
        if (idx == lengths.size()) {
            PatternSet candidate = normalize_patterns(current);
            if (candidate.size() == lengths.size() && !has_redundant_member(candidate))
                sets.insert(std::move(candidate));
            return;
        }
        for (const VincularPattern& pat : pool[lengths[idx]]) {
            current.push_back(pat);
            self(self, idx + 1);
            current.pop_back();
        }
    };
    rec(rec, 0);

    std::string descriptor = "{";
    for (size_t i = 0; i < lengths.size(); ++i) {
        if (i) descriptor += ",";
        descriptor += std::to_string(lengths[i]);
    }
    descriptor += "}";
    return run_survey(std::move(descriptor), {sets.begin(), sets.end()}, params);
}

WilfClassReport classify(const std::vector<VincularPattern>& patterns, int n_max,
                         const DiscoveryParams& params) {
    if (n_max < 1) throw std::invalid_argument("n_max must be positive");
    WilfClassReport report;
    report.n_max = n_max;
    std::vector<std::optional<std::vector<BigInt>>> outcomes(patterns.size());
    parallel_over(patterns.size(), [&](size_t i) {
        FallbackOutcome outcome = discover_with_reverse({patterns[i]}, params);
        if (const Scheme* scheme = std::get_if<Scheme>(&outcome.result))
            outcomes[i] = Evaluator(*scheme).sequence(n_max);
    });
    for (size_t i = 0; i < patterns.size(); ++i) {
        if (!outcomes[i]) {
            report.unclassifiable.push_back(patterns[i]);
            continue;
        }
        bool placed = false;
        for (auto& group : report.groups) {
            if (group.values == *outcomes[i]) {
                group.patterns.push_back(patterns[i]);
                placed = true;
                break;
            }
        }
        if (!placed) report.groups.push_back({{patterns[i]}, std::move(*outcomes[i])});
    }
    size_t g = report.groups.size();
    report.witnesses.assign(g, std::vector<int>(g, 0));
    for (size_t i = 0; i < g; ++i) {
        for (size_t j = i + 1; j < g; ++j) {
            int witness = 0;
            for (int n = 1; n <= n_max; ++n) {
                if (report.groups[i].values[n - 1] != report.groups[j].values[n - 1]) {
                    witness = n;
                    break;
                }
            }
            report.witnesses[i][j] = report.witnesses[j][i] = witness;
        }
    }
    return report;
}

}  // namespace vinc
