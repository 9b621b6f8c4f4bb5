#pragma once

#include <compare>
#include <string>
#include <vector>

#include "vinc/pattern.hpp"
#include "vinc/perm.hpp"

namespace vinc {

// Counts of free values between consecutive prefix letters. For a prefix of
// length k inside an ambient 1..n there are k+1 entries: entry i is the number
// of values strictly between the (i-1)-th and i-th smallest prefix letters,
// with sentinels 0 below and n+1 above. The entries sum to n-k.
struct GapVector {
    std::vector<int> comps;

    GapVector() = default;
    explicit GapVector(std::vector<int> c) : comps(std::move(c)) {}

    int size() const { return static_cast<int>(comps.size()); }
    int norm() const;
    bool dominates(const GapVector& other) const;
    std::string str() const;

    auto operator<=>(const GapVector&) const = default;
};

// The minimal gap vectors found up to a norm bound. Satisfying any of them
// forces a pattern copy, so such states count zero.
struct GapBasis {
    std::vector<GapVector> vectors;
    int max_norm = 0;

    bool contains_zero() const;
    bool satisfied_by(const GapVector& g) const;

    auto operator<=>(const GapBasis&) const = default;
};

GapVector spacing_vector(int n, const std::vector<int>& letters);

int ambient_size(const Permutation& p, const GapVector& g);

// The unique word with pattern p and spacing g; together (p, g) is a lossless
// encoding of a prefix word inside its ambient interval.
std::vector<int> prefix_word(const Permutation& p, const GapVector& g);

// Every permutation of length |p| + norm(v) beginning with the prefix word
// encoded by (p, v), one per ordering of the free values.
std::vector<Permutation> build_A(const Permutation& p, const GapVector& v);

// v qualifies when every member of build_A(p, v) contains some pattern with
// its head inside the first |p| positions.
bool is_gap_vector(const Permutation& p, const GapVector& v,
                   const std::vector<VincularPattern>& patterns);

// Antichain of minimal gap vectors over norms 0..max_norm.
GapBasis gap_basis(const Permutation& p, const std::vector<VincularPattern>& patterns,
                   int max_norm);

}  // namespace vinc
