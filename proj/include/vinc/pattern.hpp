#pragma once

#include <compare>
#include <string>
#include <vector>

#include "vinc/perm.hpp"

namespace vinc {

// A vincular pattern: an underlying permutation sigma plus adjacency
// requirements. adjacencies() lists the positions j (1-based, j < size) where
// copy letters j and j+1 must sit in consecutive host positions. In the string
// form, letters joined without a dash are adjacent: "124-3" is sigma 1243 with
// adjacencies {1,2}.
class VincularPattern {
public:
    VincularPattern() = default;
    VincularPattern(Permutation sigma, std::vector<int> adjacencies);

    int size() const { return sigma_.size(); }
    const Permutation& sigma() const { return sigma_; }
    const std::vector<int>& adjacencies() const { return adjacencies_; }
    bool adjacent_at(int j) const;

    bool is_classical() const { return adjacencies_.empty(); }
    bool is_consecutive() const;

    // Maximal dash-free runs, as (start position, length) pairs.
    std::vector<std::pair<int, int>> blocks() const;

    // The pattern restricted to letters 1..L+1 where L is the largest
    // adjacency position; every adjacency requirement lives inside the head.
    // For a classical pattern the head is the single letter "1".
    VincularPattern head() const;
    int head_length() const;

    VincularPattern reversed() const;
    VincularPattern complemented() const;

    std::string str() const;

    auto operator<=>(const VincularPattern&) const = default;

private:
    Permutation sigma_;
    std::vector<int> adjacencies_;
};

// Accepts block strings like "124-3" or "1-3-2"; whitespace is ignored.
// Letters are the digits 1..9, all distinct, and must form {1..k}.
VincularPattern parse_pattern(const std::string& text);

// Comma-separated patterns; duplicates are dropped, order is normalized.
std::vector<VincularPattern> parse_pattern_set(const std::string& text);

// Sort and dedupe, the canonical in-memory form of a pattern set.
std::vector<VincularPattern> normalize_patterns(std::vector<VincularPattern> patterns);

std::vector<VincularPattern> reverse_patterns(const std::vector<VincularPattern>& patterns);
std::vector<VincularPattern> complement_patterns(const std::vector<VincularPattern>& patterns);

std::string format_pattern_set(const std::vector<VincularPattern>& patterns);

bool contains(const Permutation& host, const VincularPattern& pat);

// True when some copy of pat places its entire head inside the first
// prefix_len positions of the host.
bool contains_with_head_in_prefix(const Permutation& host, int prefix_len,
                                  const VincularPattern& pat);

bool avoids_all(const Permutation& host, const std::vector<VincularPattern>& patterns);

bool contains_any_with_head_in_prefix(const Permutation& host, int prefix_len,
                                      const std::vector<VincularPattern>& patterns);

}  // namespace vinc
