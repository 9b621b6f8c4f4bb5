#include "vinc/evaluate.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace vinc {

long long inversion_increment(const std::vector<int>& w, int n,
                              const std::vector<int>& R) {
    int k = static_cast<int>(w.size());
    std::vector<char> deleted(k + 1, 0);
    for (int r : R) {
        if (r < 1 || r > k)
            throw std::invalid_argument("deleted position outside the prefix");
        deleted[r] = 1;
    }
    (void)n;
    long long total = 0;
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j)
            if (w[i - 1] > w[j - 1] && (deleted[i] || deleted[j])) ++total;
    for (int r : R) {
        long long below_in_prefix = 0;
        for (int v : w)
            if (v < w[r - 1]) ++below_in_prefix;
        total += (w[r - 1] - 1) - below_in_prefix;
    }
    return total;
}

namespace {

// Deleting the prefix letter of value rank rho joins the free slots on either
// side of it; higher ranks first keeps lower slot indices stable.
GapVector merge_slots(const GapVector& g, const Permutation& p,
                      const std::vector<int>& rd) {
    std::vector<int> ranks;
    for (int r : rd) ranks.push_back(p.letter(r));
    std::sort(ranks.rbegin(), ranks.rend());
    GapVector merged = g;
    for (int rho : ranks) {
        merged.comps[rho - 1] += merged.comps[rho];
        merged.comps.erase(merged.comps.begin() + rho);
    }
    return merged;
}

long long freed_below(const GapVector& g, const Permutation& p,
                      const std::vector<int>& rd) {
    long long total = 0;
    for (int r : rd) {
        int rho = p.letter(r);
        for (int i = 0; i < rho; ++i) total += g.comps[i];
    }
    return total;
}

Permutation child_prefix(const Permutation& p, int rank) {
    std::vector<int> letters = p.letters();
    for (int& v : letters)
        if (v >= rank) ++v;
    letters.push_back(rank);
    return Permutation(letters);
}

}  // namespace

Evaluator::Evaluator(Scheme scheme) : scheme_(std::move(scheme)) {
    ValidationReport report = validate(scheme_);
    if (!report.ok()) {
        std::string joined;
        for (const std::string& p : report.problems) {
            if (!joined.empty()) joined += "; ";
            joined += p;
        }
        throw std::invalid_argument("scheme fails validation: " + joined);
    }
}

BigInt Evaluator::eval(const Permutation& p, const GapVector& g) {
    StateKey key{p, g};
    if (auto it = plain_.find(key); it != plain_.end()) return it->second;

    const SchemeTriple& triple = scheme_.at(p);
    BigInt result = 0;
    if (triple.gap_basis.satisfied_by(g)) {
        result = 0;
    } else if (g.norm() == 0) {
        result = avoids_all(p, scheme_.patterns) ? 1 : 0;
    } else if (!triple.rd.empty()) {
        result = eval(delete_positions(p, triple.rd), merge_slots(g, p, triple.rd));
    } else {
        for (int slot = 1; slot <= g.size(); ++slot) {
            int free = g.comps[slot - 1];
            if (free == 0) continue;
            Permutation child = child_prefix(p, slot);
            for (int a = 0; a + 1 <= free; ++a) {
                GapVector split = g;
                split.comps[slot - 1] = a;
                split.comps.insert(split.comps.begin() + slot, free - 1 - a);
                result += eval(child, split);
            }
        }
    }
    return plain_.emplace(std::move(key), std::move(result)).first->second;
}

QPolynomial Evaluator::eval_refined(const Permutation& p, const GapVector& g) {
    StateKey key{p, g};
    if (auto it = refined_.find(key); it != refined_.end()) return it->second;

    const SchemeTriple& triple = scheme_.at(p);
    QPolynomial result;
    if (triple.gap_basis.satisfied_by(g)) {
        ;
    } else if (g.norm() == 0) {
        if (avoids_all(p, scheme_.patterns)) result = QPolynomial::one();
    } else if (!triple.rd.empty()) {
        QPolynomial inner =
            eval_refined(delete_positions(p, triple.rd), merge_slots(g, p, triple.rd));
        result.add_scaled(inner, static_cast<size_t>(freed_below(g, p, triple.rd)));
    } else {
        int k = p.size();
        for (int slot = 1; slot <= g.size(); ++slot) {
            int free = g.comps[slot - 1];
            if (free == 0) continue;
            Permutation child = child_prefix(p, slot);
            for (int a = 0; a + 1 <= free; ++a) {
                GapVector split = g;
                split.comps[slot - 1] = a;
                split.comps.insert(split.comps.begin() + slot, free - 1 - a);
                result.add_scaled(eval_refined(child, split),
                                  static_cast<size_t>(k + 1 - slot));
            }
        }
    }
    result.trim();
    return refined_.emplace(std::move(key), std::move(result)).first->second;
}

BigInt Evaluator::count(int n) {
    if (n < 0) throw std::invalid_argument("length must be non-negative");
    return eval(Permutation{}, GapVector({n}));
}

std::vector<BigInt> Evaluator::sequence(int n_max) {
    if (n_max < 0) throw std::invalid_argument("length must be non-negative");
    std::vector<BigInt> values;
    for (int n = 1; n <= n_max; ++n) values.push_back(count(n));
    return values;
}

QPolynomial Evaluator::count_by_inversions(int n) {
    if (n < 0) throw std::invalid_argument("length must be non-negative");
    return eval_refined(Permutation{}, GapVector({n}));
}

BigInt count(const Scheme& scheme, int n) { return Evaluator(scheme).count(n); }

std::vector<BigInt> sequence(const Scheme& scheme, int n_max) {
    return Evaluator(scheme).sequence(n_max);
}

QPolynomial count_by_inversions(const Scheme& scheme, int n) {
    return Evaluator(scheme).count_by_inversions(n);
}

}  // namespace vinc
