#pragma once

#include <utility>
#include <vector>

#include "iet/scalar.hpp"

namespace iet {

/// A finite union of half-open intervals [a, b) inside [0, 1), kept in the
/// canonical form: sorted by left endpoint, disjoint, nonempty, with
/// touching intervals merged. Structural equality then matches set equality.
class IntervalSet {
public:
    using Interval = std::pair<Scalar, Scalar>;

    IntervalSet() = default;

    /// Normalizes an arbitrary list of half-open intervals.
    static IntervalSet of(std::vector<Interval> parts);
    static IntervalSet whole();

    const std::vector<Interval>& parts() const { return parts_; }
    bool is_empty() const { return parts_.empty(); }
    Scalar measure() const;
    bool contains(const Scalar& x) const;
    bool covers(const IntervalSet& other) const;

    IntervalSet unite(const IntervalSet& other) const;

    bool operator==(const IntervalSet& o) const { return parts_ == o.parts_; }

private:
    std::vector<Interval> parts_;
};

} // namespace iet
