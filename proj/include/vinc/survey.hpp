#pragma once

#include <string>
#include <vector>

#include "vinc/evaluate.hpp"
#include "vinc/pattern.hpp"
#include "vinc/scheme.hpp"

namespace vinc {

// True when every permutation containing outer also contains inner: inner
// embeds into outer with every required adjacency landing on a forced
// adjacency of outer.
bool occurs_in(const VincularPattern& inner, const VincularPattern& outer);

// A set with a member whose containment is implied by another member counts
// the same permutations as the smaller set, so surveys skip it.
bool has_redundant_member(const std::vector<VincularPattern>& patterns);

std::vector<VincularPattern> all_patterns_of_length(int length);

// Lengths of the maximal dash-free runs: 12-35-467 has block type (2,2,3).
std::vector<int> block_type(const VincularPattern& pat);

// Reversal flips a block type, so the printed label is the lexicographically
// larger of the two orientations.
std::string block_type_label(const std::vector<int>& type);

struct SurveyClass {
    std::vector<VincularPattern> representative;
    int members = 0;
    bool success = false;
    int depth = 0;
    bool used_reverse = false;
};

struct SurveyReport {
    std::string class_descriptor;
    int classes_total = 0;
    int classes_successful = 0;
    std::vector<SurveyClass> classes;
};

SurveyReport survey_patterns_of_length(int length, const DiscoveryParams& params = {});

SurveyReport survey_block_type(const std::vector<int>& type,
                               const DiscoveryParams& params = {});

// set_type lists the pattern lengths of the sets to enumerate, e.g. {3, 3}
// for pairs of length-three patterns.
SurveyReport survey_set_type(const std::vector<int>& set_type,
                             const DiscoveryParams& params = {});

struct WilfClassReport {
    struct Group {
        std::vector<VincularPattern> patterns;
        std::vector<BigInt> values;
    };
    int n_max = 0;
    std::vector<Group> groups;
    std::vector<VincularPattern> unclassifiable;
    // witnesses[i][j] is the first n where groups i and j diverge, 0 on the
    // diagonal.
    std::vector<std::vector<int>> witnesses;
};

WilfClassReport classify(const std::vector<VincularPattern>& patterns, int n_max,
                         const DiscoveryParams& params = {});

}  // namespace vinc
