#pragma once

#include "iet/interval_exchange.hpp"

namespace iet {

/// The f_n sequence: f_1 is the half swap; for n >= 2, the pairwise swap of
/// 2n intervals of length 1/2^{n+1} followed by a fixed remainder of length
/// 1 - n/2^n. Converges to the identity in d, uniformly as well, with
/// delta(f_n) = 2n + 1 for n >= 2.
IntervalExchange golden_fn(int n);

/// The g_n sequence: permutation (1 3) on four intervals of lengths
/// (1/2^n, (2^{n-1}-1)/2^n, 1/2^n, (2^{n-1}-1)/2^n). Converges to the
/// identity in d while two intervals stay displaced by exactly 1/2, so the
/// convergence is never uniform. For n = 1 the middle intervals degenerate
/// and the map collapses to the half swap.
IntervalExchange golden_gn(int n);

} // namespace iet
