#include "iet/interval_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace iet {

IntervalSet IntervalSet::of(std::vector<Interval> parts) {
    std::erase_if(parts, [](const Interval& iv) { return !(iv.first < iv.second); });
    for (const Interval& iv : parts) {
        if (iv.first.sign() < 0 || Scalar(1) < iv.second)
            throw std::invalid_argument("IntervalSet: interval outside [0,1)");
    }
    std::sort(parts.begin(), parts.end(),
              [](const Interval& a, const Interval& b) { return a.first < b.first; });
    IntervalSet out;
    for (Interval& iv : parts) {
        if (!out.parts_.empty() && !(out.parts_.back().second < iv.first)) {
            if (out.parts_.back().second < iv.second) out.parts_.back().second = std::move(iv.second);
        } else {
            out.parts_.push_back(std::move(iv));
        }
    }
    return out;
}

IntervalSet IntervalSet::whole() { return of({{Scalar(0), Scalar(1)}}); }

Scalar IntervalSet::measure() const {
    Scalar m(0);
    for (const Interval& iv : parts_) m += iv.second - iv.first;
    return m;
}

bool IntervalSet::contains(const Scalar& x) const {
    for (const Interval& iv : parts_) {
        if (!(x < iv.first) && x < iv.second) return true;
    }
    return false;
}

bool IntervalSet::covers(const IntervalSet& other) const {
    for (const Interval& iv : other.parts_) {
        bool inside = false;
        for (const Interval& mine : parts_) {
            if (!(iv.first < mine.first) && !(mine.second < iv.second)) {
                inside = true;
                break;
            }
        }
        if (!inside) return false;
    }
    return true;
}

IntervalSet IntervalSet::unite(const IntervalSet& other) const {
    std::vector<Interval> all = parts_;
    all.insert(all.end(), other.parts_.begin(), other.parts_.end());
    return of(std::move(all));
}

} // namespace iet
