#pragma once

#include <map>
#include <vector>

#include "vinc/gap.hpp"
#include "vinc/qpoly.hpp"
#include "vinc/scheme.hpp"

namespace vinc {

// Inversion pairs lost when the prefix positions R are deleted from any
// ambient permutation of 1..n with prefix word w: pairs inside the prefix
// involving R, plus the smaller letters outside the prefix for each deleted
// letter. Every letter below a prefix letter and not in the prefix must
// appear after it, so the suffix term is exact.
long long inversion_increment(const std::vector<int>& w, int n,
                              const std::vector<int>& R);

// Runs a scheme as a recurrence over (prefix, spacing) states. One evaluator
// owns one memo table; results for different n share it.
class Evaluator {
public:
    explicit Evaluator(Scheme scheme);

    const Scheme& scheme() const { return scheme_; }

    BigInt count(int n);
    std::vector<BigInt> sequence(int n_max);
    QPolynomial count_by_inversions(int n);

private:
    struct StateKey {
        Permutation prefix;
        GapVector spacing;

        auto operator<=>(const StateKey&) const = default;
    };

    BigInt eval(const Permutation& p, const GapVector& g);
    QPolynomial eval_refined(const Permutation& p, const GapVector& g);

    Scheme scheme_;
    std::map<StateKey, BigInt> plain_;
    std::map<StateKey, QPolynomial> refined_;
};

BigInt count(const Scheme& scheme, int n);
std::vector<BigInt> sequence(const Scheme& scheme, int n_max);
QPolynomial count_by_inversions(const Scheme& scheme, int n);

}  // namespace vinc
