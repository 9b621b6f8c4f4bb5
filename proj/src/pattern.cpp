#include "vinc/pattern.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace vinc {

VincularPattern::VincularPattern(Permutation sigma, std::vector<int> adjacencies)
    : sigma_(std::move(sigma)), adjacencies_(std::move(adjacencies)) {
    std::sort(adjacencies_.begin(), adjacencies_.end());
    adjacencies_.erase(std::unique(adjacencies_.begin(), adjacencies_.end()),
                       adjacencies_.end());
    for (int j : adjacencies_) {
        if (j < 1 || j >= sigma_.size()) {
            throw std::invalid_argument("adjacency position out of range");
        }
    }
}

bool VincularPattern::adjacent_at(int j) const {
    return std::binary_search(adjacencies_.begin(), adjacencies_.end(), j);
}

bool VincularPattern::is_consecutive() const {
    return static_cast<int>(adjacencies_.size()) == size() - 1;
}

std::vector<std::pair<int, int>> VincularPattern::blocks() const {
    std::vector<std::pair<int, int>> out;
    int start = 1;
    for (int j = 1; j <= size(); ++j) {
        if (j == size() || !adjacent_at(j)) {
            out.emplace_back(start, j - start + 1);
            start = j + 1;
        }
    }
    return out;
}

int VincularPattern::head_length() const {
    return adjacencies_.empty() ? 1 : adjacencies_.back() + 1;
}

VincularPattern VincularPattern::head() const {
    const int h = head_length();
    std::vector<int> first(sigma_.letters().begin(), sigma_.letters().begin() + h);
    return VincularPattern(reduce(first), adjacencies_);
}

VincularPattern VincularPattern::reversed() const {
    const int k = size();
    std::vector<int> adj;
    adj.reserve(adjacencies_.size());
    for (int j : adjacencies_) adj.push_back(k - j);
    return VincularPattern(sigma_.reversed(), std::move(adj));
}

VincularPattern VincularPattern::complemented() const {
    return VincularPattern(sigma_.complemented(), adjacencies_);
}

std::string VincularPattern::str() const {
    std::string out;
    for (int j = 1; j <= size(); ++j) {
        out += std::to_string(sigma_.letter(j));
        if (j < size() && !adjacent_at(j)) out += '-';
    }
    return out;
}

VincularPattern parse_pattern(const std::string& text) {
    std::vector<int> letters;
    std::vector<int> adjacencies;
    bool block_open = false;
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (ch == '-') {
            if (!block_open) throw std::invalid_argument("dash without preceding letter");
            block_open = false;
        } else if (ch >= '1' && ch <= '9') {
            if (block_open) adjacencies.push_back(static_cast<int>(letters.size()));
            letters.push_back(ch - '0');
            block_open = true;
        } else {
            throw std::invalid_argument(std::string("unexpected character '") + ch +
                                        "' in pattern");
        }
    }
    if (letters.empty()) throw std::invalid_argument("empty pattern");
    if (!block_open) throw std::invalid_argument("pattern ends with a dash");
    return VincularPattern(Permutation(std::move(letters)), std::move(adjacencies));
}

std::vector<VincularPattern> parse_pattern_set(const std::string& text) {
    std::vector<VincularPattern> out;
    size_t start = 0;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        if (comma == std::string::npos) comma = text.size();
        out.push_back(parse_pattern(text.substr(start, comma - start)));
        start = comma + 1;
    }
    return normalize_patterns(std::move(out));
}

std::vector<VincularPattern> normalize_patterns(std::vector<VincularPattern> patterns) {
    std::sort(patterns.begin(), patterns.end());
    patterns.erase(std::unique(patterns.begin(), patterns.end()), patterns.end());
    return patterns;
}

std::vector<VincularPattern> reverse_patterns(const std::vector<VincularPattern>& patterns) {
    std::vector<VincularPattern> out;
    out.reserve(patterns.size());
    for (const auto& p : patterns) out.push_back(p.reversed());
    return normalize_patterns(std::move(out));
}

std::vector<VincularPattern> complement_patterns(
    const std::vector<VincularPattern>& patterns) {
    std::vector<VincularPattern> out;
    out.reserve(patterns.size());
    for (const auto& p : patterns) out.push_back(p.complemented());
    return normalize_patterns(std::move(out));
}

std::string format_pattern_set(const std::vector<VincularPattern>& patterns) {
    std::string out;
    for (size_t i = 0; i < patterns.size(); ++i) {
        if (i) out += ", ";
        out += patterns[i].str();
    }
    return out;
}

namespace {

struct Matcher {
    const std::vector<int>& host;
    const std::vector<int>& sig;
    std::vector<char> adj_after;  // adj_after[c] != 0: copy letters c and c+1 adjacent
    int head_len = 0;
    int head_limit = 0;
    std::vector<int> pos;

    bool search(int c, int from) {
        const int k = static_cast<int>(sig.size());
        const int n = static_cast<int>(host.size());
        if (c > k) return true;
        int lo = from;
        int hi = n - (k - c);
        if (c > 1 && adj_after[c - 1]) {
            lo = pos[c - 2] + 1;
            hi = std::min(hi, lo);
        }
        if (c <= head_len) hi = std::min(hi, head_limit);
        for (int p = lo; p <= hi; ++p) {
            const int v = host[p - 1];
            bool ok = true;
            for (int j = 0; j < c - 1; ++j) {
                const int u = host[pos[j] - 1];
                if ((u < v) != (sig[j] < sig[c - 1])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            pos[c - 1] = p;
            if (search(c + 1, p + 1)) return true;
        }
        return false;
    }
};

bool run_match(const Permutation& host, const VincularPattern& pat, int head_len,
               int head_limit) {
    const int k = pat.size();
    if (k == 0) return true;
    if (k > host.size()) return false;
    Matcher m{host.letters(), pat.sigma().letters(), std::vector<char>(k, 0),
              head_len, head_limit, std::vector<int>(k, 0)};
    for (int j : pat.adjacencies()) m.adj_after[j] = 1;
    return m.search(1, 1);
}

}  // namespace

bool contains(const Permutation& host, const VincularPattern& pat) {
    return run_match(host, pat, 0, host.size());
}

bool contains_with_head_in_prefix(const Permutation& host, int prefix_len,
                                  const VincularPattern& pat) {
    if (pat.size() == 0) return true;
    if (prefix_len < pat.head_length()) return false;
    return run_match(host, pat, pat.head_length(), prefix_len);
}

bool avoids_all(const Permutation& host, const std::vector<VincularPattern>& patterns) {
    for (const auto& pat : patterns) {
        if (contains(host, pat)) return false;
    }
    return true;
}

bool contains_any_with_head_in_prefix(const Permutation& host, int prefix_len,
                                      const std::vector<VincularPattern>& patterns) {
    for (const auto& pat : patterns) {
        if (contains_with_head_in_prefix(host, prefix_len, pat)) return true;
    }
    return false;
}

}  // namespace vinc
