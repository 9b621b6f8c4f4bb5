#pragma once

#include <functional>
#include <vector>

#include "vinc/pattern.hpp"
#include "vinc/perm.hpp"
#include "vinc/qpoly.hpp"

namespace vinc {

// Brute force is the ground truth everything else is checked against. The
// limit guards against accidentally requesting an n! sweep that will not
// finish; callers that really want more pass a bigger limit explicitly.
inline constexpr int kDefaultOracleLimit = 10;

// Visits all n! permutations in lexicographic order.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit);

std::vector<Permutation> brute_avoiders(int n,
                                        const std::vector<VincularPattern>& patterns,
                                        int limit = kDefaultOracleLimit);

long long brute_count(int n, const std::vector<VincularPattern>& patterns,
                      int limit = kDefaultOracleLimit);

// Restrict to permutations whose first letters are exactly prefix_letters
// (values in 1..n, distinct).
std::vector<Permutation> brute_avoiders_with_prefix(
    int n, const std::vector<int>& prefix_letters,
    const std::vector<VincularPattern>& patterns, int limit = kDefaultOracleLimit);

long long brute_count_with_prefix(int n, const std::vector<int>& prefix_letters,
                                  const std::vector<VincularPattern>& patterns,
                                  int limit = kDefaultOracleLimit);

QPolynomial brute_count_by_inversions(int n,
                                      const std::vector<VincularPattern>& patterns,
                                      int limit = kDefaultOracleLimit);

}  // namespace vinc
