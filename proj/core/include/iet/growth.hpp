#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "iet/interval_exchange.hpp"

namespace iet {

/// The discontinuity-growth record of a map under iteration.
struct GrowthReport {
    /// (n, D_n) with D_n = delta(h^n), n = 1..N.
    std::vector<std::pair<int, int>> powers;
    /// D_{n+1} - D_n for n = 1..N-1.
    std::vector<int> first_differences;
    /// (C, onset): every difference from index `onset` on equals C, and the
    /// constant tail contains at least two differences.
    std::optional<std::pair<int, int>> eventually_constant_difference;
    /// Exact least-squares slope of D_n against n over the last ceil(N/2)
    /// powers.
    Rational slope_estimate;
};

/// Exact least-squares slope of D_n against n over lo <= n <= hi.
Rational least_squares_slope(const std::vector<std::pair<int, int>>& powers, int lo, int hi);

/// Iterates h^(n+1) = h o h^n, recording delta at each power. Throws
/// CapacityError naming the power reached if a partition outgrows
/// max_pieces.
GrowthReport growth(const IntervalExchange& h, int N, int max_pieces = 1 << 20);

} // namespace iet
