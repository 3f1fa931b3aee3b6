#include "cdes/genocchi.hpp"

#include "cdes/error.hpp"

#include <algorithm>
#include <numeric>

namespace cdes {

UniPolynomial::UniPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

void UniPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt UniPolynomial::evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPolynomial UniPolynomial::shifted() const {
    // sum_i c_i (X+1)^i = sum_j X^j sum_{i>=j} C(i, j) c_i
    std::vector<BigInt> out(coeffs_.size(), BigInt(0));
    std::vector<BigInt> binom_row{BigInt(1)};
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i > 0) {
            std::vector<BigInt> next(i + 1, BigInt(1));
            for (std::size_t j = 1; j < i; ++j) next[j] = binom_row[j - 1] + binom_row[j];
            binom_row = std::move(next);
        }
        for (std::size_t j = 0; j <= i; ++j) out[j] += binom_row[j] * coeffs_[i];
    }
    return UniPolynomial(std::move(out));
}

UniPolynomial operator+(const UniPolynomial& a, const UniPolynomial& b) {
    std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
    return UniPolynomial(std::move(out));
}

UniPolynomial operator-(const UniPolynomial& a, const UniPolynomial& b) {
    std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] -= b.coeffs_[i];
    return UniPolynomial(std::move(out));
}

UniPolynomial operator*(const UniPolynomial& a, const UniPolynomial& b) {
    if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UniPolynomial(std::move(out));
}

std::string UniPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const BigInt& c = coeffs_[i];
        if (c == 0) continue;
        const BigInt magnitude = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (i == 0) {
            out += to_decimal(magnitude);
        } else {
            out += to_decimal(magnitude) + "*X";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

namespace {

UniPolynomial power(const UniPolynomial& base, int exp) {
    UniPolynomial out({BigInt(1)});
    for (int i = 0; i < exp; ++i) out = out * base;
    return out;
}

} // namespace

UniPolynomial gandhi_poly(int k, int n) {
    if (k < 1) throw InvalidArgument("k must be positive");
    if (n < 0) throw InvalidArgument("n must be nonnegative");
    const UniPolynomial x_to_k = power(UniPolynomial({BigInt(0), BigInt(1)}), k);
    const UniPolynomial x_minus_one_to_k = power(UniPolynomial({BigInt(-1), BigInt(1)}), k);

    UniPolynomial a({BigInt(1)});
    for (int m = 0; m < n; ++m) a = x_to_k * a.shifted() - x_minus_one_to_k * a;
    return a;
}

BigInt genocchi_number(int k, int n) {
    if (n < 1) throw InvalidArgument("n must be positive");
    return gandhi_poly(k, n - 1).evaluate(BigInt(1));
}

BigInt brute_genocchi_perm_count(int k, int n, int cap) {
    if (k < 1 || n < 1) throw InvalidArgument("k and n must be positive");
    const int size = k * n;
    if (size > cap) {
        throw CapExceeded("k*n = " + std::to_string(size) + " exceeds the enumeration cap " + std::to_string(cap));
    }
    if (size > 20) throw CapExceeded("exhaustive enumeration is limited to k*n <= 20");

    std::vector<int> p(static_cast<std::size_t>(size));
    std::iota(p.begin(), p.end(), 1);
    unsigned long count = 0;
    do {
        bool ok = true;
        for (int i = 1; i <= size && ok; ++i) {
            const int v = p[static_cast<std::size_t>(i - 1)];
            ok = (v >= i) == (v % k == 0);
        }
        count += ok;
    } while (std::next_permutation(p.begin(), p.end()));
    return BigInt(count);
}

} // namespace cdes
