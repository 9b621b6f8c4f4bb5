#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace vinc {

using BigInt = boost::multiprecision::cpp_int;

// Avoiders binned by inversion count: coeffs[k] is the number with exactly k
// inversions. Trailing zeros are insignificant.
struct QPolynomial {
    std::vector<BigInt> coeffs;

    QPolynomial() = default;
    explicit QPolynomial(std::vector<BigInt> c) : coeffs(std::move(c)) {}

    static QPolynomial one() { return QPolynomial({BigInt(1)}); }

    BigInt coeff(size_t k) const { return k < coeffs.size() ? coeffs[k] : BigInt(0); }

    // Value at q = 1.
    BigInt total() const;

    void add_term(size_t k, const BigInt& c);

    // *this += q^shift * other.
    void add_scaled(const QPolynomial& other, size_t shift);

    void trim();

    bool is_zero() const;

    bool operator==(const QPolynomial& other) const;

    std::string str() const;
};

}  // namespace vinc
