#include "cdes/polynomial.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace cdes {

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.ydeg <=> b.ydeg; c != 0) return c;
    return std::lexicographical_compare_three_way(a.xvars.begin(), a.xvars.end(), b.xvars.begin(),
                                                  b.xvars.end());
}

SparsePolynomial SparsePolynomial::constant(const BigInt& c) { return term(c, Monomial{}); }

SparsePolynomial SparsePolynomial::term(const BigInt& c, Monomial m) {
    SparsePolynomial p;
    p.add_term(m, c);
    return p;
}

BigInt SparsePolynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void SparsePolynomial::add_term(const Monomial& m, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

SparsePolynomial& SparsePolynomial::operator*=(const BigInt& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= scalar;
    return *this;
}

SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
    SparsePolynomial out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            std::vector<int> merged;
            std::set_union(ma.xvars.begin(), ma.xvars.end(), mb.xvars.begin(), mb.xvars.end(),
                           std::back_inserter(merged));
            if (merged.size() != ma.xvars.size() + mb.xvars.size()) {
                throw std::domain_error("product of " + ma.xvars.to_string() + " and " +
                                        mb.xvars.to_string() + " is not squarefree");
            }
            out.add_term(Monomial{ValueSet::from_sorted(std::move(merged)), ma.ydeg + mb.ydeg}, ca * cb);
        }
    }
    return out;
}

SparsePolynomial SparsePolynomial::partial_x(int var) const {
    SparsePolynomial out;
    for (const auto& [m, c] : terms_) {
        if (m.xvars.contains(var)) out.add_term(Monomial{m.xvars.without(var), m.ydeg}, c);
    }
    return out;
}

SparsePolynomial SparsePolynomial::partial_y() const {
    SparsePolynomial out;
    for (const auto& [m, c] : terms_) {
        if (m.ydeg > 0) out.add_term(Monomial{m.xvars, m.ydeg - 1}, c * m.ydeg);
    }
    return out;
}

BigInt SparsePolynomial::evaluate(const BigInt& x_value, const BigInt& y_value) const {
    BigInt sum = 0;
    for (const auto& [m, c] : terms_) {
        sum += c * ipow(x_value, m.xvars.size()) * ipow(y_value, m.ydeg);
    }
    return sum;
}

std::string SparsePolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += to_decimal(c);
        for (int v : m.xvars) out += "*x" + std::to_string(v);
        if (m.ydeg == 1) {
            out += "*y";
        } else if (m.ydeg > 1) {
            out += "*y^" + std::to_string(m.ydeg);
        }
    }
    return out;
}

} // namespace cdes
