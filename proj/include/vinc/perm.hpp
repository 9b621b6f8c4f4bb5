#pragma once

#include <compare>
#include <string>
#include <vector>

namespace vinc {

// A permutation of {1..n} in one-line notation. Positions and letters are
// 1-based everywhere in this library.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> letters);

    static Permutation identity(int n);

    int size() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }

    // 1-based access.
    int letter(int pos) const;
    const std::vector<int>& letters() const { return letters_; }

    Permutation reversed() const;
    Permutation complemented() const;

    std::string str() const;

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> letters_;
};

// Orders by length first, then lexicographically. Used wherever prefixes are
// enumerated shortest-first.
struct LenLexLess {
    bool operator()(const Permutation& a, const Permutation& b) const;
};

// Replace each letter by its rank: the i-th smallest value becomes i, equal
// values get equal ranks. reduce_word({8,3,9,1,8,3}) = {3,2,4,1,3,2}.
std::vector<int> reduce_word(const std::vector<int>& w);

// reduce for distinct letters; the result is a permutation.
Permutation reduce(const std::vector<int>& w);

// Drop the letters at the given 1-based positions and renumber: each survivor
// decreases by the number of removed letters smaller than it.
// delete_positions({6,3,4,8}, {3}) = {5,3,7}.
std::vector<int> delete_positions(const std::vector<int>& w,
                                  const std::vector<int>& positions);
Permutation delete_positions(const Permutation& p,
                             const std::vector<int>& positions);

// All permutations of length n+1 whose first n letters reduce to p, sorted
// lexicographically.
std::vector<Permutation> children(const Permutation& p);

long long inversions(const Permutation& p);

}  // namespace vinc
