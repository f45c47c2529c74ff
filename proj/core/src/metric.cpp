#include "iet/metric.hpp"

#include <stdexcept>

namespace iet {

namespace {

// Walks the common refinement of the partitions of f and g, handing each
// piece (left, right, omega_f, omega_g) to the visitor.
template <typename Visit>
void refine(const IntervalExchange& f, const IntervalExchange& g, Visit&& visit) {
    Scalar left(0);
    size_t i = 0;
    size_t j = 0;
    while (i < static_cast<size_t>(f.size()) && j < static_cast<size_t>(g.size())) {
        const Scalar& ef = f.breakpoints()[i + 1];
        const Scalar& eg = g.breakpoints()[j + 1];
        const Scalar& right = ef < eg ? ef : eg;
        visit(left, right, f.translations()[i], g.translations()[j]);
        if (!(eg < ef)) ++j;
        if (!(ef < eg)) ++i;
        left = right;
    }
}

} // namespace

Scalar circle_displacement_length(const Scalar& c) {
    Scalar r = frac(c);
    Scalar other = Scalar(1) - r;
    return r < other ? r : other;
}

Scalar circle_distance(const Scalar& u, const Scalar& v) {
    if (u.sign() < 0 || !(u < Scalar(1)) || v.sign() < 0 || !(v < Scalar(1)))
        throw std::domain_error("circle_distance: points must lie in [0,1)");
    return circle_displacement_length(u - v);
}

Scalar distance(const IntervalExchange& f, const IntervalExchange& g) {
    Scalar total(0);
    refine(f, g, [&](const Scalar& left, const Scalar& right, const Scalar& wf, const Scalar& wg) {
        total += (right - left) * circle_displacement_length(wf - wg);
    });
    return total;
}

Scalar sup_displacement(const IntervalExchange& f, const IntervalExchange& g) {
    Scalar best(0);
    refine(f, g, [&](const Scalar&, const Scalar&, const Scalar& wf, const Scalar& wg) {
        Scalar rho = circle_displacement_length(wf - wg);
        if (best < rho) best = std::move(rho);
    });
    return best;
}

Scalar koopman_l2_sq(const IntervalExchange& f, const IntervalExchange& g,
                     const StepFunction& phi) {
    return l2_sq_diff(precompose(phi, f.inverse()), precompose(phi, g.inverse()));
}

} // namespace iet
