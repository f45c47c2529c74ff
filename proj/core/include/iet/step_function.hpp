#pragma once

#include <vector>

#include "iet/interval_exchange.hpp"
#include "iet/scalar.hpp"

namespace iet {

/// A piecewise-constant function on [0, 1) with exact breakpoints
/// 0 = c_0 < ... < c_m = 1 and one value per piece [c_{k-1}, c_k).
/// Canonical: adjacent pieces carry distinct values.
class StepFunction {
public:
    /// Canonicalizes: merges adjacent pieces with equal values.
    static StepFunction of(std::vector<Scalar> breakpoints, std::vector<Scalar> values);
    static StepFunction constant(const Scalar& v);
    /// Indicator of [a, b), 0 <= a < b <= 1.
    static StepFunction indicator(const Scalar& a, const Scalar& b);

    int pieces() const { return static_cast<int>(values_.size()); }
    const std::vector<Scalar>& breakpoints() const { return breaks_; }
    const std::vector<Scalar>& values() const { return values_; }

    Scalar at(const Scalar& x) const;

    bool operator==(const StepFunction& o) const {
        return breaks_ == o.breaks_ && values_ == o.values_;
    }

private:
    StepFunction() = default;

    std::vector<Scalar> breaks_;
    std::vector<Scalar> values_;
};

/// phi composed with g: x -> phi(g(x)); exact breakpoints computed by
/// pulling phi's breakpoints back through g.
StepFunction precompose(const StepFunction& phi, const IntervalExchange& g);

/// Exact integral over [0,1) of (u - v)^2.
Scalar l2_sq_diff(const StepFunction& u, const StepFunction& v);

} // namespace iet
