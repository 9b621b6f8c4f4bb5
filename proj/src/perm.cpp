#include "vinc/perm.hpp"

#include <algorithm>
#include <stdexcept>

namespace vinc {

Permutation::Permutation(std::vector<int> letters) : letters_(std::move(letters)) {
    const int n = static_cast<int>(letters_.size());
    std::vector<char> seen(n + 1, 0);
    for (int v : letters_) {
        if (v < 1 || v > n || seen[v]) {
            throw std::invalid_argument("not a permutation of 1..n");
        }
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1;
    return Permutation(std::move(w));
}

int Permutation::letter(int pos) const {
    if (pos < 1 || pos > size()) throw std::out_of_range("position out of range");
    return letters_[pos - 1];
}

Permutation Permutation::reversed() const {
    std::vector<int> w(letters_.rbegin(), letters_.rend());
    return Permutation(std::move(w));
}

Permutation Permutation::complemented() const {
    const int n = size();
    std::vector<int> w(letters_.size());
    for (size_t i = 0; i < letters_.size(); ++i) w[i] = n + 1 - letters_[i];
    return Permutation(std::move(w));
}

std::string Permutation::str() const {
    std::string out;
    for (size_t i = 0; i < letters_.size(); ++i) {
        if (letters_[i] <= 9) {
            out += static_cast<char>('0' + letters_[i]);
        } else {
            if (i > 0) out += ' ';
            out += std::to_string(letters_[i]);
            if (i + 1 < letters_.size()) out += ' ';
        }
    }
    return out;
}

bool LenLexLess::operator()(const Permutation& a, const Permutation& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.letters() < b.letters();
}

std::vector<int> reduce_word(const std::vector<int>& w) {
    std::vector<int> sorted(w);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> out(w.size());
    for (size_t i = 0; i < w.size(); ++i) {
        out[i] = static_cast<int>(
                     std::lower_bound(sorted.begin(), sorted.end(), w[i]) - sorted.begin()) +
                 1;
    }
    return out;
}

Permutation reduce(const std::vector<int>& w) {
    return Permutation(reduce_word(w));
}

std::vector<int> delete_positions(const std::vector<int>& w,
                                  const std::vector<int>& positions) {
    std::vector<char> drop(w.size() + 1, 0);
    for (int pos : positions) {
        if (pos < 1 || pos > static_cast<int>(w.size())) {
            throw std::invalid_argument("delete position out of range");
        }
        drop[pos] = 1;
    }
    std::vector<int> removed;
    for (size_t i = 0; i < w.size(); ++i) {
        if (drop[i + 1]) removed.push_back(w[i]);
    }
    std::sort(removed.begin(), removed.end());
    std::vector<int> out;
    out.reserve(w.size() - removed.size());
    for (size_t i = 0; i < w.size(); ++i) {
        if (drop[i + 1]) continue;
        const int below = static_cast<int>(
            std::lower_bound(removed.begin(), removed.end(), w[i]) - removed.begin());
        out.push_back(w[i] - below);
    }
    return out;
}

Permutation delete_positions(const Permutation& p, const std::vector<int>& positions) {
    return Permutation(delete_positions(p.letters(), positions));
}

std::vector<Permutation> children(const Permutation& p) {
    const int k = p.size();
    std::vector<Permutation> out;
    out.reserve(k + 1);
    for (int v = 1; v <= k + 1; ++v) {
        std::vector<int> w;
        w.reserve(k + 1);
        for (int x : p.letters()) w.push_back(x >= v ? x + 1 : x);
        w.push_back(v);
        out.emplace_back(std::move(w));
    }
    std::sort(out.begin(), out.end());
    return out;
}

long long inversions(const Permutation& p) {
    long long count = 0;
    const auto& w = p.letters();
    for (size_t i = 0; i < w.size(); ++i) {
        for (size_t j = i + 1; j < w.size(); ++j) {
            if (w[i] > w[j]) ++count;
        }
    }
    return count;
}

}  // namespace vinc
