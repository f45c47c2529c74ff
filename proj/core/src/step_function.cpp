#include "iet/step_function.hpp"

#include <algorithm>
#include <stdexcept>

namespace iet {

StepFunction StepFunction::of(std::vector<Scalar> breakpoints, std::vector<Scalar> values) {
    if (breakpoints.size() != values.size() + 1 || values.empty())
        throw std::invalid_argument("StepFunction: need m+1 breakpoints for m values");
    if (!breakpoints.front().is_zero() || !(breakpoints.back() == Scalar(1)))
        throw std::invalid_argument("StepFunction: breakpoints must start at 0 and end at 1");
    for (size_t k = 0; k + 1 < breakpoints.size(); ++k) {
        if (!(breakpoints[k] < breakpoints[k + 1]))
            throw std::invalid_argument("StepFunction: breakpoints must be strictly increasing");
    }

    StepFunction out;
    out.breaks_.push_back(std::move(breakpoints.front()));
    for (size_t k = 0; k < values.size(); ++k) {
        if (!out.values_.empty() && out.values_.back() == values[k]) {
            out.breaks_.back() = std::move(breakpoints[k + 1]);
        } else {
            out.values_.push_back(std::move(values[k]));
            out.breaks_.push_back(std::move(breakpoints[k + 1]));
        }
    }
    return out;
}

StepFunction StepFunction::constant(const Scalar& v) {
    return of({Scalar(0), Scalar(1)}, {v});
}

StepFunction StepFunction::indicator(const Scalar& a, const Scalar& b) {
    if (a.sign() < 0 || !(a < b) || Scalar(1) < b)
        throw std::invalid_argument("StepFunction: indicator needs 0 <= a < b <= 1");
    std::vector<Scalar> breaks{Scalar(0)};
    std::vector<Scalar> vals;
    if (a.sign() > 0) {
        breaks.push_back(a);
        vals.push_back(Scalar(0));
    }
    breaks.push_back(b);
    vals.push_back(Scalar(1));
    if (b < Scalar(1)) {
        breaks.push_back(Scalar(1));
        vals.push_back(Scalar(0));
    }
    return of(std::move(breaks), std::move(vals));
}

Scalar StepFunction::at(const Scalar& x) const {
    if (x.sign() < 0 || !(x < Scalar(1)))
        throw std::domain_error("StepFunction: point outside [0,1)");
    auto it = std::upper_bound(breaks_.begin(), breaks_.end(), x);
    return values_[static_cast<size_t>(it - breaks_.begin()) - 1];
}

StepFunction precompose(const StepFunction& phi, const IntervalExchange& g) {
    // On each piece of g with translation w, phi(g(x)) = phi(x + w): a step
    // function whose cuts are the pullbacks c - w of phi's breakpoints.
    std::vector<Scalar> breaks{Scalar(0)};
    std::vector<Scalar> vals;
    for (int j = 0; j < g.size(); ++j) {
        const Scalar& u = g.breakpoints()[static_cast<size_t>(j)];
        const Scalar& v = g.breakpoints()[static_cast<size_t>(j) + 1];
        const Scalar& w = g.translations()[static_cast<size_t>(j)];
        Scalar left = u;
        while (left < v) {
            Scalar image = left + w;
            auto it = std::upper_bound(phi.breakpoints().begin(), phi.breakpoints().end(), image);
            const size_t k = static_cast<size_t>(it - phi.breakpoints().begin()) - 1;
            Scalar cut = phi.breakpoints()[k + 1] - w; // next phi-cut in domain coordinates
            Scalar right = cut < v ? cut : v;
            breaks.push_back(right);
            vals.push_back(phi.values()[k]);
            left = std::move(right);
        }
    }
    return StepFunction::of(std::move(breaks), std::move(vals));
}

Scalar l2_sq_diff(const StepFunction& u, const StepFunction& v) {
    Scalar total(0);
    Scalar left(0);
    size_t i = 0;
    size_t j = 0;
    while (i < u.values().size() && j < v.values().size()) {
        const Scalar& eu = u.breakpoints()[i + 1];
        const Scalar& ev = v.breakpoints()[j + 1];
        const Scalar& right = eu < ev ? eu : ev;
        Scalar diff = u.values()[i] - v.values()[j];
        total += (right - left) * diff * diff;
        if (!(ev < eu)) ++j;
        if (!(eu < ev)) ++i;
        left = right;
    }
    return total;
}

} // namespace iet
