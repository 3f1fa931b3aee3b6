#pragma once

#include "cdes/bigint.hpp"

#include <string>
#include <vector>

namespace cdes {

/// Dense univariate polynomial in X, ascending degree, no trailing zeros.
class UniPolynomial {
public:
    UniPolynomial() = default;
    explicit UniPolynomial(std::vector<BigInt> coefficients);

    const std::vector<BigInt>& coefficients() const { return coeffs_; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    BigInt evaluate(const BigInt& x) const;
    /// p(X + 1), by binomial expansion.
    UniPolynomial shifted() const;

    friend UniPolynomial operator+(const UniPolynomial& a, const UniPolynomial& b);
    friend UniPolynomial operator-(const UniPolynomial& a, const UniPolynomial& b);
    friend UniPolynomial operator*(const UniPolynomial& a, const UniPolynomial& b);

    /// e.g. "6*X^2 - 4*X + 1", highest degree first.
    std::string to_string() const;

    friend bool operator==(const UniPolynomial&, const UniPolynomial&) = default;

private:
    void trim();

    std::vector<BigInt> coeffs_;
};

/// A_n^{(k)}: A_0 = 1, A_{m+1}(X) = X^k A_m(X + 1) - (X - 1)^k A_m(X).
UniPolynomial gandhi_poly(int k, int n);

/// G_{2n}^{(k)} = A_{n-1}^{(k)}(1). Requires k >= 1, n >= 1.
BigInt genocchi_number(int k, int n);

inline constexpr int kDefaultGenocchiCap = 8;

/// #{p in S_{kn} : p(i) >= i  <=>  k | p(i)}. Throws CapExceeded when k*n > cap.
BigInt brute_genocchi_perm_count(int k, int n, int cap = kDefaultGenocchiCap);

} // namespace cdes
