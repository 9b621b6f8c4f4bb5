#include "vinc/qpoly.hpp"

namespace vinc {

BigInt QPolynomial::total() const {
    BigInt sum = 0;
    for (const auto& c : coeffs) sum += c;
    return sum;
}

void QPolynomial::add_term(size_t k, const BigInt& c) {
    if (coeffs.size() <= k) coeffs.resize(k + 1);
    coeffs[k] += c;
}

void QPolynomial::add_scaled(const QPolynomial& other, size_t shift) {
    if (other.coeffs.empty()) return;
    const size_t need = other.coeffs.size() + shift;
    if (coeffs.size() < need) coeffs.resize(need);
    for (size_t k = 0; k < other.coeffs.size(); ++k) {
        coeffs[k + shift] += other.coeffs[k];
    }
}

void QPolynomial::trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

bool QPolynomial::is_zero() const {
    for (const auto& c : coeffs) {
        if (c != 0) return false;
    }
    return true;
}

bool QPolynomial::operator==(const QPolynomial& other) const {
    const size_t n = std::max(coeffs.size(), other.coeffs.size());
    for (size_t k = 0; k < n; ++k) {
        if (coeff(k) != other.coeff(k)) return false;
    }
    return true;
}

std::string QPolynomial::str() const {
    QPolynomial t = *this;
    t.trim();
    if (t.coeffs.empty()) return "0";
    std::string out;
    for (size_t k = 0; k < t.coeffs.size(); ++k) {
        if (t.coeffs[k] == 0) continue;
        if (!out.empty()) out += " + ";
        const bool unit = t.coeffs[k] == 1;
        if (k == 0) {
            out += t.coeffs[k].str();
        } else {
            if (!unit) out += t.coeffs[k].str() + "*";
            out += (k == 1) ? "q" : "q^" + std::to_string(k);
        }
    }
    return out;
}

}  // namespace vinc
