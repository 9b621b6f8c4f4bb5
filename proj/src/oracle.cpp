#include "vinc/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace vinc {

namespace {

void check_limit(int n, int limit) {
    if (n < 0) throw std::invalid_argument("negative length");
    if (n > limit) {
        throw std::invalid_argument("brute force refused: n=" + std::to_string(n) +
                                    " exceeds limit " + std::to_string(limit));
    }
}

// Visits every permutation of n whose prefix is exactly `prefix`.
void for_each_completion(int n, const std::vector<int>& prefix,
                         const std::function<void(const Permutation&)>& visit) {
    std::vector<char> used(n + 1, 0);
    for (int v : prefix) {
        if (v < 1 || v > n || used[v]) {
            throw std::invalid_argument("prefix letters must be distinct values in 1..n");
        }
        used[v] = 1;
    }
    std::vector<int> rest;
    for (int v = 1; v <= n; ++v) {
        if (!used[v]) rest.push_back(v);
    }
    std::vector<int> word(prefix);
    word.resize(n);
    do {
        std::copy(rest.begin(), rest.end(), word.begin() + prefix.size());
        visit(Permutation(word));
    } while (std::next_permutation(rest.begin(), rest.end()));
}

}  // namespace

void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit) {
    for_each_completion(n, {}, visit);
}

std::vector<Permutation> brute_avoiders(int n, const std::vector<VincularPattern>& patterns,
                                        int limit) {
    return brute_avoiders_with_prefix(n, {}, patterns, limit);
}

long long brute_count(int n, const std::vector<VincularPattern>& patterns, int limit) {
    return brute_count_with_prefix(n, {}, patterns, limit);
}

std::vector<Permutation> brute_avoiders_with_prefix(
    int n, const std::vector<int>& prefix_letters,
    const std::vector<VincularPattern>& patterns, int limit) {
    check_limit(n, limit);
    std::vector<Permutation> out;
    for_each_completion(n, prefix_letters, [&](const Permutation& p) {
        if (avoids_all(p, patterns)) out.push_back(p);
    });
    return out;
}

long long brute_count_with_prefix(int n, const std::vector<int>& prefix_letters,
                                  const std::vector<VincularPattern>& patterns,
                                  int limit) {
    check_limit(n, limit);
    long long count = 0;
    for_each_completion(n, prefix_letters, [&](const Permutation& p) {
        if (avoids_all(p, patterns)) ++count;
    });
    return count;
}

QPolynomial brute_count_by_inversions(int n, const std::vector<VincularPattern>& patterns,
                                      int limit) {
    check_limit(n, limit);
    QPolynomial out;
    for_each_permutation(n, [&](const Permutation& p) {
        if (avoids_all(p, patterns)) out.add_term(inversions(p), 1);
    });
    out.trim();
    return out;
}

}  // namespace vinc
