#include "cdes/descent_polynomial.hpp"

#include "cdes/descent_formula.hpp"
#include "cdes/error.hpp"
#include "cdes/generating_tree.hpp"

#include <algorithm>

namespace cdes {

Monomial descent_monomial(const ValueSet& descent_set) {
    std::vector<int> vars;
    vars.reserve(descent_set.size());
    for (int s : descent_set) {
        if (s < 2) throw InvalidArgument("descent sets carrying a monomial must avoid 1");
        vars.push_back(s - 1);
    }
    return Monomial{ValueSet::from_sorted(std::move(vars)), static_cast<unsigned>(descent_set.size())};
}

ValueSet descent_set_of(const Monomial& monomial) {
    std::vector<int> elems;
    elems.reserve(monomial.xvars.size());
    for (int v : monomial.xvars) elems.push_back(v + 1);
    return ValueSet::from_sorted(std::move(elems));
}

SparsePolynomial gn(int n) {
    if (n < 2) throw InvalidArgument("g_n is defined for n >= 2");
    const Monomial y{ValueSet{}, 1};
    SparsePolynomial g = SparsePolynomial::constant(1) + SparsePolynomial::term(1, Monomial{ValueSet{1}, 1});

    for (int m = 2; m < n; ++m) {
        const auto x_m = SparsePolynomial::term(1, Monomial{ValueSet{m}, 0});
        const auto x_m_y = SparsePolynomial::term(m, Monomial{ValueSet{m}, 1});
        const auto x_m_y2 = SparsePolynomial::term(1, Monomial{ValueSet{m}, 2});

        SparsePolynomial x_partials;
        for (int i = 1; i < m; ++i) x_partials += g.partial_x(i);

        g = (SparsePolynomial::constant(1) + x_m_y) * g + x_m * x_partials - x_m_y2 * g.partial_y();
    }
    return g;
}

SparsePolynomial polynomial_from_table(const CountTable& table) {
    SparsePolynomial out;
    for (const auto& [set, count] : table.entries()) out.add_term(descent_monomial(set), count);
    return out;
}

ValueSet tau(const std::vector<unsigned>& parts) {
    std::vector<int> elems;
    elems.reserve(parts.size());
    int value = 1;
    for (unsigned d : parts) {
        if (d == 0) throw InvalidArgument("composition parts must be positive");
        value += static_cast<int>(d);
        elems.push_back(value);
    }
    return ValueSet::from_sorted(std::move(elems));
}

namespace {

void extend(unsigned remaining, unsigned slots, std::vector<unsigned>& current,
            std::vector<std::vector<unsigned>>& out) {
    if (slots == 0) {
        if (remaining == 0) out.push_back(current);
        return;
    }
    // Leave at least one unit for each later slot.
    for (unsigned part = 1; part + (slots - 1) <= remaining; ++part) {
        current.push_back(part);
        extend(remaining - part, slots - 1, current, out);
        current.pop_back();
    }
}

} // namespace

std::vector<std::vector<unsigned>> compositions(unsigned total, unsigned parts) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> current;
    current.reserve(parts);
    extend(total, parts, current, out);
    return out;
}

SparsePolynomial gnk(int n, int k) {
    if (n < 1) throw InvalidArgument("n must be positive");
    if (k < 0 || k > n - 1) {
        throw InvalidArgument("k = " + std::to_string(k) + " is outside [0, " + std::to_string(n - 1) + "]");
    }
    SparsePolynomial out;
    for (int top = k + 1; top <= n; ++top) {
        for (const auto& parts : compositions(static_cast<unsigned>(top - 1), static_cast<unsigned>(k))) {
            const ValueSet set = tau(parts);
            Monomial m = descent_monomial(set);
            m.ydeg = 0;
            out.add_term(m, tree_weight_sum(gap_vector(set).gaps));
        }
    }
    return out;
}

} // namespace cdes
