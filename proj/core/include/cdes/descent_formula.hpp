#pragma once

#include "cdes/bigint.hpp"
#include "cdes/value_set.hpp"

#include <vector>

namespace cdes {

/**
 * Consecutive gaps of a descent set read from its largest element down.
 *
 * For S = {s_1 > s_2 > ... > s_k}: gaps = (s_1 - s_2, ..., s_{k-1} - s_k, s_k - 1).
 * Every gap is >= 1 and the gaps sum to max(S) - 1.
 */
struct GapVector {
    std::vector<unsigned> gaps;

    friend bool operator==(const GapVector&, const GapVector&) = default;
};

/// Rejects sets containing 1. The empty set maps to the empty vector.
GapVector gap_vector(const ValueSet& set);

/// Inverse of gap_vector: cumulative sums from 1, read in reverse.
ValueSet set_from_gaps(const GapVector& gaps);

/// One maximal run [top - length + 1, top] of consecutive elements.
struct Run {
    int top;
    int length;

    friend bool operator==(const Run&, const Run&) = default;
};

/// Maximal runs of S, tops strictly decreasing.
struct RunType {
    std::vector<Run> runs;

    ValueSet to_set() const;

    friend bool operator==(const RunType&, const RunType&) = default;
};

RunType set_type(const ValueSet& set);

/**
 * cdes_n(S) from the alternating sum over the cube {0,1}^k:
 *
 *   sum_x (-1)^(k - |x|) prod_{i=1..k} (1 + x_1 + ... + x_i)^(d_i(S))
 *
 * The cube is walked as a binary counter with x_1 as the high bit; partial
 * products are cached per prefix so each step only rebuilds the suffix that
 * changed. Returns 0 when 1 is in S and 1 for the empty set. Throws
 * InvalidArgument when n < max(S).
 */
BigInt cdes_formula(int n, const ValueSet& set);

/// The same count grouped by run type: one linear factor per position and
/// one powered factor per run. Must agree with cdes_formula everywhere.
BigInt cdes_formula_typed(int n, const ValueSet& set);

} // namespace cdes
