#include "vinc/gap.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace vinc {

int GapVector::norm() const {
    return std::accumulate(comps.begin(), comps.end(), 0);
}

bool GapVector::dominates(const GapVector& other) const {
    if (comps.size() != other.comps.size()) return false;
    for (size_t i = 0; i < comps.size(); ++i) {
        if (comps[i] < other.comps[i]) return false;
    }
    return true;
}

std::string GapVector::str() const {
    std::string out = "<";
    for (size_t i = 0; i < comps.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(comps[i]);
    }
    return out + ">";
}

bool GapBasis::contains_zero() const {
    for (const auto& v : vectors) {
        if (v.norm() == 0) return true;
    }
    return false;
}

bool GapBasis::satisfied_by(const GapVector& g) const {
    for (const auto& v : vectors) {
        if (g.dominates(v)) return true;
    }
    return false;
}

GapVector spacing_vector(int n, const std::vector<int>& letters) {
    std::vector<int> sorted(letters);
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> comps;
    comps.reserve(sorted.size() + 1);
    int prev = 0;
    for (int c : sorted) {
        if (c <= prev || c > n) throw std::invalid_argument("letters out of range");
        comps.push_back(c - prev - 1);
        prev = c;
    }
    comps.push_back(n - prev);
    return GapVector(std::move(comps));
}

int ambient_size(const Permutation& p, const GapVector& g) {
    if (g.size() != p.size() + 1) throw std::invalid_argument("gap vector length mismatch");
    return p.size() + g.norm();
}

std::vector<int> prefix_word(const Permutation& p, const GapVector& g) {
    if (g.size() != p.size() + 1) throw std::invalid_argument("gap vector length mismatch");
    std::vector<int> values(p.size());
    int c = 0;
    for (int i = 0; i < p.size(); ++i) {
        c += g.comps[i] + 1;
        values[i] = c;
    }
    std::vector<int> word(p.size());
    for (int j = 1; j <= p.size(); ++j) word[j - 1] = values[p.letter(j) - 1];
    return word;
}

std::vector<Permutation> build_A(const Permutation& p, const GapVector& v) {
    const int n = ambient_size(p, v);
    const std::vector<int> prefix = prefix_word(p, v);
    std::vector<char> used(n + 1, 0);
    for (int x : prefix) used[x] = 1;
    std::vector<int> rest;
    for (int x = 1; x <= n; ++x) {
        if (!used[x]) rest.push_back(x);
    }
    std::vector<Permutation> out;
    std::vector<int> word(prefix);
    word.resize(n);
    do {
        std::copy(rest.begin(), rest.end(), word.begin() + prefix.size());
        out.emplace_back(word);
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

bool is_gap_vector(const Permutation& p, const GapVector& v,
                   const std::vector<VincularPattern>& patterns) {
    for (const auto& pi : build_A(p, v)) {
        if (!contains_any_with_head_in_prefix(pi, p.size(), patterns)) return false;
    }
    return true;
}

namespace {

void for_each_composition(int total, int parts, std::vector<int>& acc,
                          const std::function<void(const std::vector<int>&)>& fn) {
    if (parts == 1) {
        acc.push_back(total);
        fn(acc);
        acc.pop_back();
        return;
    }
    for (int first = 0; first <= total; ++first) {
        acc.push_back(first);
        for_each_composition(total - first, parts - 1, acc, fn);
        acc.pop_back();
    }
}

}  // namespace

GapBasis gap_basis(const Permutation& p, const std::vector<VincularPattern>& patterns,
                   int max_norm) {
    GapBasis basis;
    basis.max_norm = max_norm;
    const int parts = p.size() + 1;
    for (int m = 0; m <= max_norm; ++m) {
        std::vector<int> acc;
        for_each_composition(m, parts, acc, [&](const std::vector<int>& comps) {
            GapVector v(comps);
            if (basis.satisfied_by(v)) return;
            if (is_gap_vector(p, v, patterns)) basis.vectors.push_back(std::move(v));
        });
    }
    return basis;
}

}  // namespace vinc
