#pragma once

#include "cdes/perm_core.hpp"
#include "cdes/polynomial.hpp"
#include "cdes/value_set.hpp"

#include <vector>

namespace cdes {

/// Monomial attached to descent set S: prod_{s in S} x_{s-1}, times y^|S|.
Monomial descent_monomial(const ValueSet& descent_set);

/// Inverse of descent_monomial on the x-part: {i + 1 : i in xvars}.
ValueSet descent_set_of(const Monomial& monomial);

/**
 * Circular descent polynomial g_n, built from g_2 = 1 + x_1 y by
 *
 *   g_{m+1} = (1 + m x_m y) g_m + x_m sum_{i<m} dg_m/dx_i - x_m y^2 dg_m/dy
 *
 * Requires n >= 2.
 */
SparsePolynomial gn(int n);

/// g_n assembled from a count table: sum_S count(S) * descent_monomial(S).
SparsePolynomial polynomial_from_table(const CountTable& table);

/// {1 + d_1, 1 + d_1 + d_2, ...}. Rejects nonpositive parts.
ValueSet tau(const std::vector<unsigned>& parts);

/// Compositions of `total` into `parts` positive parts, lexicographic order.
std::vector<std::vector<unsigned>> compositions(unsigned total, unsigned parts);

/**
 * Size-k slice of g_n with y dropped: sum over descent sets S subset [2, n]
 * with |S| = k of cdes_n(S) x_{S-1}. Sets are generated as tau(D) for
 * compositions D of m - 1 (m = k+1..n) into k parts, and each coefficient is
 * the tree weight of gap_vector(tau(D)), which is D reversed.
 * Requires 0 <= k <= n - 1.
 */
SparsePolynomial gnk(int n, int k);

} // namespace cdes
