#pragma once

#include "cdes/bigint.hpp"
#include "cdes/value_set.hpp"

#include <compare>
#include <map>
#include <string>

namespace cdes {

/// x-variables (each to the first power, indices in `xvars`) times y^ydeg.
struct Monomial {
    ValueSet xvars;
    unsigned ydeg = 0;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    /// ydeg first, then xvars lexicographically.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
};

/**
 * Sparse polynomial over squarefree x-monomials and powers of y with exact
 * integer coefficients. Zero coefficients are never stored.
 *
 * Products whose x-parts overlap would leave the squarefree space and throw
 * std::domain_error.
 */
class SparsePolynomial {
public:
    using Terms = std::map<Monomial, BigInt>;

    SparsePolynomial() = default;
    static SparsePolynomial constant(const BigInt& c);
    static SparsePolynomial term(const BigInt& c, Monomial m);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    BigInt coefficient(const Monomial& m) const;

    void add_term(const Monomial& m, const BigInt& c);

    SparsePolynomial& operator+=(const SparsePolynomial& other);
    SparsePolynomial& operator-=(const SparsePolynomial& other);
    SparsePolynomial& operator*=(const BigInt& scalar);

    friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
    friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }
    friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b);
    friend SparsePolynomial operator*(SparsePolynomial a, const BigInt& s) { return a *= s; }

    /// d/dx_var. Drops monomials without x_var and removes x_var from the rest.
    SparsePolynomial partial_x(int var) const;
    /// d/dy.
    SparsePolynomial partial_y() const;

    /// All x_i := x_value, y := y_value.
    BigInt evaluate(const BigInt& x_value, const BigInt& y_value) const;

    /// Terms joined by " + " in canonical order, each "<coeff>*x<i>*...*y^<k>";
    /// y^1 is written "y", the constant term is the bare coefficient. Zero is "0".
    std::string to_string() const;

    friend bool operator==(const SparsePolynomial&, const SparsePolynomial&) = default;

private:
    Terms terms_;
};

} // namespace cdes
