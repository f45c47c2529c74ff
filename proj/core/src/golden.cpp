#include "iet/golden.hpp"

#include <stdexcept>

namespace iet {

namespace {

Rational pow2_inv(int k) {
    Rational r(1, BigInt(1) << k);
    r.canonicalize();
    return r;
}

} // namespace

IntervalExchange golden_fn(int n) {
    if (n < 1) throw std::domain_error("golden_fn: n must be >= 1");
    if (n == 1) {
        return IntervalExchange::canonicalize(Permutation::from_one_based({2, 1}),
                                              {Scalar(1, 2), Scalar(1, 2)});
    }
    std::vector<int> perm;
    std::vector<Scalar> lengths;
    const Scalar small(pow2_inv(n + 1));
    for (int j = 0; j < n; ++j) {
        perm.push_back(2 * j + 2);
        perm.push_back(2 * j + 1);
        lengths.push_back(small);
        lengths.push_back(small);
    }
    perm.push_back(2 * n + 1);
    lengths.push_back(Scalar(1) - Scalar(Rational(n)) * Scalar(pow2_inv(n)));
    return IntervalExchange::canonicalize(Permutation::from_one_based(perm), std::move(lengths));
}

IntervalExchange golden_gn(int n) {
    if (n < 1) throw std::domain_error("golden_gn: n must be >= 1");
    Scalar small(pow2_inv(n));
    Scalar big = Scalar(1, 2) - small;
    return IntervalExchange::canonicalize(Permutation::from_one_based({3, 2, 1, 4}),
                                          {small, big, small, big});
}

} // namespace iet
