#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "vinc/gap.hpp"
#include "vinc/pattern.hpp"
#include "vinc/perm.hpp"

namespace vinc {

// One counting rule. States whose spacing satisfies a basis vector count
// zero; otherwise a non-empty rd lists prefix positions whose deletion
// preserves the count, and an empty rd means the state splits across the
// children of the prefix.
struct SchemeTriple {
    Permutation prefix;
    GapBasis gap_basis;
    std::vector<int> rd;

    bool operator==(const SchemeTriple&) const = default;
};

struct Scheme {
    std::vector<VincularPattern> patterns;
    int max_gap_norm = 0;
    std::map<Permutation, SchemeTriple, LenLexLess> triples;

    int depth() const;
    bool has(const Permutation& p) const { return triples.find(p) != triples.end(); }
    const SchemeTriple& at(const Permutation& p) const;

    bool operator==(const Scheme&) const = default;
};

struct DiscoveryParams {
    int max_depth = 5;
    int max_gap_norm = 2;
};

struct NoScheme {
    std::vector<Permutation> blocking;
};

using DiscoveryResult = std::variant<Scheme, NoScheme>;

DiscoveryResult discover(const std::vector<VincularPattern>& patterns,
                         const DiscoveryParams& params = {});

// Retries the reversed pattern set when the direct search fails; a scheme for
// the reversed set yields the same counting sequence.
struct FallbackOutcome {
    DiscoveryResult result;
    bool used_reverse = false;
};

FallbackOutcome discover_with_reverse(const std::vector<VincularPattern>& patterns,
                                      const DiscoveryParams& params = {});

struct ValidationReport {
    std::vector<std::string> problems;
    bool ok() const { return problems.empty(); }
};

ValidationReport validate(const Scheme& scheme);

// Direct construction for sets whose patterns are each either fully adjacent
// or fully adjacent except for a free final letter. Throws
// std::invalid_argument for any other shape. The per-prefix bases are unions
// of single-pattern contributions; minimize prunes dominated vectors.
Scheme guaranteed_scheme(const std::vector<VincularPattern>& patterns,
                         bool minimize = false);

Scheme complement_scheme(const Scheme& scheme);

std::string serialize(const Scheme& scheme);

// Parses and validates; throws std::invalid_argument on malformed input.
Scheme deserialize(const std::string& text);

}  // namespace vinc
