#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vinc/gap.hpp"
#include "vinc/pattern.hpp"
#include "vinc/perm.hpp"

namespace vinc {

// A word over letters 1..ambient plus a null marker (symbol 0). Nulls stand
// for host positions whose letter is irrelevant but whose presence breaks
// adjacency. The first prefix_len symbols are always letters.
struct ScenarioWord {
    std::vector<int> symbols;
    int prefix_len = 0;

    int ambient() const;
    std::vector<int> prefix_letters() const;
    std::string str() const;

    auto operator<=>(const ScenarioWord&) const = default;
};

// The minimal ways a completion of the prefix can come to contain one of the
// patterns: for each partial match inside the prefix, the remaining pattern
// letters are appended with nulls holding open the non-adjacent junctions.
// Words whose prefix already satisfies the gap basis are dropped.
std::vector<ScenarioWord> scenarios(const Permutation& p,
                                    const std::vector<VincularPattern>& patterns,
                                    const GapBasis& basis);

// Remove the given prefix positions and renumber the surviving letters.
ScenarioWord scenario_delete(const ScenarioWord& w, const std::vector<int>& positions);

// Containment in a scenario word: adjacency is satisfied only by literally
// consecutive symbols, so an intervening null defeats it.
bool scenario_contains(const ScenarioWord& w, const VincularPattern& pat);
bool scenario_contains(const ScenarioWord& w, const std::vector<VincularPattern>& patterns);

// Every word with prefix pattern p that scenario_delete(., R) maps onto s.
// The result is unfiltered; callers apply their own gap-basis filter.
std::vector<ScenarioWord> preimages(const ScenarioWord& s, const Permutation& p,
                                    const std::vector<int>& R);

// Shared cache of gap bases and scenario sets for one pattern set, plus the
// two-test reversible-deletability search built on them.
class DeletionSearch {
public:
    DeletionSearch(std::vector<VincularPattern> patterns, int max_gap_norm);

    const std::vector<VincularPattern>& patterns() const { return patterns_; }
    int max_gap_norm() const { return max_gap_norm_; }

    const GapBasis& basis(const Permutation& p);
    const std::vector<ScenarioWord>& scenario_set(const Permutation& p);

    bool is_reversibly_deletable(const Permutation& p, const std::vector<int>& R);

    // Candidate sets ordered by decreasing size, then lexicographically;
    // returns the first that passes both tests.
    std::optional<std::vector<int>> find_rd_set(const Permutation& p);

private:
    std::vector<VincularPattern> patterns_;
    int max_gap_norm_;
    std::map<Permutation, GapBasis, LenLexLess> bases_;
    std::map<Permutation, std::vector<ScenarioWord>, LenLexLess> scenario_sets_;
};

bool is_reversibly_deletable(const std::vector<int>& R, const Permutation& p,
                             const std::vector<VincularPattern>& patterns,
                             int max_gap_norm);

std::optional<std::vector<int>> find_rd_set(const Permutation& p,
                                            const std::vector<VincularPattern>& patterns,
                                            int max_gap_norm);

}  // namespace vinc
