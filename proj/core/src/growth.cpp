#include "iet/growth.hpp"

#include <algorithm>
#include <stdexcept>

#include "iet/errors.hpp"

namespace iet {

Rational least_squares_slope(const std::vector<std::pair<int, int>>& powers, int lo, int hi) {
    BigInt k = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [n, d] : powers) {
        if (n < lo || n > hi) continue;
        ++k;
        sx += n;
        sy += d;
        sxx += BigInt(n) * n;
        sxy += BigInt(n) * d;
    }
    if (k < 2) throw std::invalid_argument("least_squares_slope: need at least two points");
    Rational slope(k * sxy - sx * sy, k * sxx - sx * sx);
    slope.canonicalize();
    return slope;
}

GrowthReport growth(const IntervalExchange& h, int N, int max_pieces) {
    if (N < 1) throw std::domain_error("growth: N must be >= 1");
    GrowthReport report;
    report.powers.reserve(static_cast<size_t>(N));

    IntervalExchange power = h;
    for (int n = 1; n <= N; ++n) {
        if (power.size() > max_pieces)
            throw CapacityError("growth: partition size " + std::to_string(power.size()) +
                                " exceeds capacity at power n=" + std::to_string(n));
        report.powers.emplace_back(n, power.delta());
        if (n < N) power = compose(h, power);
    }

    for (int n = 0; n + 1 < N; ++n) {
        report.first_differences.push_back(report.powers[static_cast<size_t>(n) + 1].second -
                                           report.powers[static_cast<size_t>(n)].second);
    }

    const auto& diffs = report.first_differences;
    if (diffs.size() >= 2) {
        size_t onset = diffs.size() - 1;
        while (onset > 0 && diffs[onset - 1] == diffs.back()) --onset;
        if (diffs.size() - onset >= 2) {
            // onset indexes differences D_{n+1}-D_n by n starting at 1
            report.eventually_constant_difference = {diffs.back(), static_cast<int>(onset) + 1};
        }
    }

    if (N >= 2) {
        const int lo = std::min(N - (N + 1) / 2 + 1, N - 1);
        report.slope_estimate = least_squares_slope(report.powers, lo, N);
    }
    return report;
}

} // namespace iet
