#include "vinc/scenario.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace vinc {

namespace {
constexpr const char* kNullGlyph = "◊";
}

int ScenarioWord::ambient() const {
    int count = 0;
    for (int s : symbols) {
        if (s != 0) ++count;
    }
    return count;
}

std::vector<int> ScenarioWord::prefix_letters() const {
    return std::vector<int>(symbols.begin(), symbols.begin() + prefix_len);
}

std::string ScenarioWord::str() const {
    const bool wide = ambient() > 9;
    std::string out;
    for (size_t i = 0; i < symbols.size(); ++i) {
        if (wide && i) out += ' ';
        out += symbols[i] == 0 ? kNullGlyph : std::to_string(symbols[i]);
    }
    return out;
}

namespace {

void for_each_subset(int n, int m, std::vector<int>& acc,
                     const std::function<void(const std::vector<int>&)>& fn, int from = 1) {
    if (m == 0) {
        fn(acc);
        return;
    }
    for (int v = from; v + m - 1 <= n; ++v) {
        acc.push_back(v);
        for_each_subset(n, m - 1, acc, fn, v + 1);
        acc.pop_back();
    }
}

// One partial match of sigma's first t letters inside the prefix, completed to
// a full copy by appending the remaining pattern letters with value set S.
void emit_completions(const Permutation& p, const VincularPattern& pat,
                      const std::vector<int>& match, const GapBasis& basis,
                      std::set<ScenarioWord>& out) {
    const int k0 = p.size();
    const int k = pat.size();
    const auto& sig = pat.sigma().letters();
    const int t = static_cast<int>(match.size());

    if (t == k) {
        ScenarioWord w{p.letters(), k0};
        if (!basis.satisfied_by(spacing_vector(k0, w.prefix_letters()))) out.insert(std::move(w));
        return;
    }

    const bool junction_adjacent = pat.adjacent_at(t);
    if (junction_adjacent && match.back() != k0) return;

    const int m = k - t;
    const int n = k0 + m;

    // Appended letter for sigma position t+j gets the tail_rank[j]-th smallest
    // element of S.
    std::vector<int> tail_rank(m);
    {
        std::vector<int> tail(sig.begin() + t, sig.end());
        const auto reduced = reduce_word(tail);
        std::copy(reduced.begin(), reduced.end(), tail_rank.begin());
    }

    std::vector<int> acc;
    for_each_subset(n, m, acc, [&](const std::vector<int>& S) {
        std::vector<int> rest;
        rest.reserve(k0);
        {
            auto it = S.begin();
            for (int v = 1; v <= n; ++v) {
                if (it != S.end() && *it == v) {
                    ++it;
                } else {
                    rest.push_back(v);
                }
            }
        }
        std::vector<int> prefix_vals(k0);
        for (int j = 1; j <= k0; ++j) prefix_vals[j - 1] = rest[p.letter(j) - 1];

        std::vector<int> copy_vals;
        copy_vals.reserve(k);
        for (int pos : match) copy_vals.push_back(prefix_vals[pos - 1]);
        for (int j = 0; j < m; ++j) copy_vals.push_back(S[tail_rank[j] - 1]);
        for (int a = 0; a < k; ++a) {
            for (int b = a + 1; b < k; ++b) {
                if ((copy_vals[a] < copy_vals[b]) != (sig[a] < sig[b])) return;
            }
        }

        if (basis.satisfied_by(spacing_vector(n, prefix_vals))) return;

        ScenarioWord w;
        w.prefix_len = k0;
        w.symbols = prefix_vals;
        if (!junction_adjacent) w.symbols.push_back(0);
        for (int j = 0; j < m; ++j) {
            w.symbols.push_back(S[tail_rank[j] - 1]);
            const int sig_pos = t + j + 1;
            if (sig_pos < k && !pat.adjacent_at(sig_pos)) w.symbols.push_back(0);
        }
        out.insert(std::move(w));
    });
}

}  // namespace

std::vector<ScenarioWord> scenarios(const Permutation& p,
                                    const std::vector<VincularPattern>& patterns,
                                    const GapBasis& basis) {
    const int k0 = p.size();
    std::set<ScenarioWord> out;
    for (const auto& pat : patterns) {
        const int k = pat.size();
        const auto& sig = pat.sigma().letters();
        std::vector<int> match;
        std::function<void(int)> extend = [&](int from) {
            const int t = static_cast<int>(match.size());
            if (t > 0) emit_completions(p, pat, match, basis, out);
            if (t == k) return;
            const int lo = (t > 0 && pat.adjacent_at(t)) ? match.back() + 1 : from;
            const int hi = (t > 0 && pat.adjacent_at(t)) ? std::min(match.back() + 1, k0) : k0;
            for (int pos = lo; pos <= hi; ++pos) {
                bool ok = true;
                for (int a = 0; a < t && ok; ++a) {
                    ok = (p.letter(match[a]) < p.letter(pos)) == (sig[a] < sig[t]);
                }
                if (!ok) continue;
                match.push_back(pos);
                extend(pos + 1);
                match.pop_back();
            }
        };
        extend(1);
    }
    return std::vector<ScenarioWord>(out.begin(), out.end());
}

ScenarioWord scenario_delete(const ScenarioWord& w, const std::vector<int>& positions) {
    std::vector<char> drop(w.prefix_len + 1, 0);
    for (int pos : positions) {
        if (pos < 1 || pos > w.prefix_len) {
            throw std::invalid_argument("deletion position outside the prefix");
        }
        drop[pos] = 1;
    }
    std::vector<int> removed;
    for (int pos = 1; pos <= w.prefix_len; ++pos) {
        if (drop[pos]) removed.push_back(w.symbols[pos - 1]);
    }
    std::sort(removed.begin(), removed.end());
    ScenarioWord out;
    out.prefix_len = w.prefix_len - static_cast<int>(removed.size());
    out.symbols.reserve(w.symbols.size() - removed.size());
    for (size_t i = 0; i < w.symbols.size(); ++i) {
        if (i < static_cast<size_t>(w.prefix_len) && drop[i + 1]) continue;
        const int s = w.symbols[i];
        if (s == 0) {
            out.symbols.push_back(0);
        } else {
            const int below = static_cast<int>(
                std::lower_bound(removed.begin(), removed.end(), s) - removed.begin());
            out.symbols.push_back(s - below);
        }
    }
    return out;
}

namespace {

struct ScenarioMatcher {
    const std::vector<int>& sym;
    const std::vector<int>& sig;
    std::vector<char> adj_after;
    std::vector<int> pos;

    bool search(int c, int from) {
        const int k = static_cast<int>(sig.size());
        const int len = static_cast<int>(sym.size());
        if (c > k) return true;
        int lo = from;
        int hi = len;
        if (c > 1 && adj_after[c - 1]) {
            lo = pos[c - 2] + 1;
            hi = std::min(hi, lo);
        }
        for (int s = lo; s <= hi; ++s) {
            const int v = sym[s - 1];
            if (v == 0) continue;
            bool ok = true;
            for (int j = 0; j < c - 1 && ok; ++j) {
                ok = (sym[pos[j] - 1] < v) == (sig[j] < sig[c - 1]);
            }
            if (!ok) continue;
            pos[c - 1] = s;
            if (search(c + 1, s + 1)) return true;
        }
        return false;
    }
};

}  // namespace

bool scenario_contains(const ScenarioWord& w, const VincularPattern& pat) {
    const int k = pat.size();
    if (k == 0) return true;
    ScenarioMatcher m{w.symbols, pat.sigma().letters(), std::vector<char>(k, 0),
                      std::vector<int>(k, 0)};
    for (int j : pat.adjacencies()) m.adj_after[j] = 1;
    return m.search(1, 1);
}

bool scenario_contains(const ScenarioWord& w, const std::vector<VincularPattern>& patterns) {
    for (const auto& pat : patterns) {
        if (scenario_contains(w, pat)) return true;
    }
    return false;
}

std::vector<ScenarioWord> preimages(const ScenarioWord& s, const Permutation& p,
                                    const std::vector<int>& R) {
    const int k = p.size();
    std::vector<int> ins(R);
    std::sort(ins.begin(), ins.end());
    if (std::adjacent_find(ins.begin(), ins.end()) != ins.end()) {
        throw std::invalid_argument("duplicate insertion position");
    }
    for (int pos : ins) {
        if (pos < 1 || pos > k) throw std::invalid_argument("insertion position out of range");
    }
    if (s.prefix_len + static_cast<int>(ins.size()) != k) {
        throw std::invalid_argument("prefix length mismatch");
    }

    const int n_old = s.ambient();
    const int n_new = n_old + static_cast<int>(ins.size());

    // Positions in ins, ordered by the rank p assigns them, receive the chosen
    // new values in increasing order.
    std::vector<int> by_rank(ins);
    std::sort(by_rank.begin(), by_rank.end(),
              [&](int a, int b) { return p.letter(a) < p.letter(b); });

    std::set<ScenarioWord> out;
    std::vector<int> acc;
    for_each_subset(n_new, static_cast<int>(ins.size()), acc, [&](const std::vector<int>& N) {
        std::vector<int> rest;
        rest.reserve(n_old);
        {
            auto it = N.begin();
            for (int v = 1; v <= n_new; ++v) {
                if (it != N.end() && *it == v) {
                    ++it;
                } else {
                    rest.push_back(v);
                }
            }
        }
        std::vector<int> new_prefix(k, 0);
        for (size_t j = 0; j < by_rank.size(); ++j) new_prefix[by_rank[j] - 1] = N[j];
        {
            std::vector<char> taken(k + 1, 0);
            for (int pos : ins) taken[pos] = 1;
            int old_idx = 0;
            for (int pos = 1; pos <= k; ++pos) {
                if (!taken[pos]) new_prefix[pos - 1] = rest[s.symbols[old_idx++] - 1];
            }
        }
        if (reduce(new_prefix) != p) return;
        ScenarioWord w;
        w.prefix_len = k;
        w.symbols = new_prefix;
        for (size_t i = s.prefix_len; i < s.symbols.size(); ++i) {
            const int v = s.symbols[i];
            w.symbols.push_back(v == 0 ? 0 : rest[v - 1]);
        }
        out.insert(std::move(w));
    });
    return std::vector<ScenarioWord>(out.begin(), out.end());
}

DeletionSearch::DeletionSearch(std::vector<VincularPattern> patterns, int max_gap_norm)
    : patterns_(normalize_patterns(std::move(patterns))), max_gap_norm_(max_gap_norm) {}

const GapBasis& DeletionSearch::basis(const Permutation& p) {
    auto it = bases_.find(p);
    if (it == bases_.end()) {
        it = bases_.emplace(p, gap_basis(p, patterns_, max_gap_norm_)).first;
    }
    return it->second;
}

const std::vector<ScenarioWord>& DeletionSearch::scenario_set(const Permutation& p) {
    auto it = scenario_sets_.find(p);
    if (it == scenario_sets_.end()) {
        it = scenario_sets_.emplace(p, scenarios(p, patterns_, basis(p))).first;
    }
    return it->second;
}

bool DeletionSearch::is_reversibly_deletable(const Permutation& p,
                                             const std::vector<int>& R) {
    for (const auto& s : scenario_set(p)) {
        if (!scenario_contains(scenario_delete(s, R), patterns_)) return false;
    }
    const Permutation q = delete_positions(p, R);
    const GapBasis& pbasis = basis(p);
    for (const auto& s2 : scenario_set(q)) {
        for (const auto& w : preimages(s2, p, R)) {
            if (pbasis.satisfied_by(spacing_vector(w.ambient(), w.prefix_letters()))) {
                continue;
            }
            if (!scenario_contains(w, patterns_)) return false;
        }
    }
    return true;
}

std::optional<std::vector<int>> DeletionSearch::find_rd_set(const Permutation& p) {
    const int k0 = p.size();
    for (int size = k0; size >= 1; --size) {
        std::optional<std::vector<int>> found;
        std::vector<int> acc;
        for_each_subset(k0, size, acc, [&](const std::vector<int>& R) {
            if (!found && is_reversibly_deletable(p, R)) found = R;
        });
        if (found) return found;
    }
    return std::nullopt;
}

bool is_reversibly_deletable(const std::vector<int>& R, const Permutation& p,
                             const std::vector<VincularPattern>& patterns,
                             int max_gap_norm) {
    DeletionSearch search(patterns, max_gap_norm);
    return search.is_reversibly_deletable(p, R);
}

std::optional<std::vector<int>> find_rd_set(const Permutation& p,
                                            const std::vector<VincularPattern>& patterns,
                                            int max_gap_norm) {
    DeletionSearch search(patterns, max_gap_norm);
    return search.find_rd_set(p);
}

}  // namespace vinc
