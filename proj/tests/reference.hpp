#pragma once

#include <vector>

#include "vinc/pattern.hpp"
#include "vinc/perm.hpp"

// Exhaustive reference implementations used only by tests. They enumerate all
// index subsets directly, with no shared machinery with the library matcher.
namespace testref {

inline bool ref_match_exists(const vinc::Permutation& host,
                             const vinc::VincularPattern& pat, int head_limit) {
    const int n = host.size();
    const int k = pat.size();
    if (k == 0) return true;
    if (k > n || n > 20) return k <= n ? throw std::invalid_argument("host too big") : false;
    const auto& hw = host.letters();
    const auto& sig = pat.sigma().letters();
    const int h = pat.head_length();
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        if (__builtin_popcountl(mask) != k) continue;
        std::vector<int> idx;
        for (int i = 0; i < n; ++i) {
            if (mask & (1ul << i)) idx.push_back(i + 1);
        }
        bool ok = true;
        for (int j : pat.adjacencies()) {
            if (idx[j] != idx[j - 1] + 1) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        if (head_limit >= 0 && idx[h - 1] > head_limit) continue;
        for (int a = 0; a < k && ok; ++a) {
            for (int b = a + 1; b < k; ++b) {
                if ((hw[idx[a] - 1] < hw[idx[b] - 1]) != (sig[a] < sig[b])) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) return true;
    }
    return false;
}

inline bool ref_contains(const vinc::Permutation& host, const vinc::VincularPattern& pat) {
    return ref_match_exists(host, pat, -1);
}

inline bool ref_contains_head(const vinc::Permutation& host, int prefix_len,
                              const vinc::VincularPattern& pat) {
    return ref_match_exists(host, pat, prefix_len);
}

}  // namespace testref
