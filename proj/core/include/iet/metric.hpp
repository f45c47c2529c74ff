#pragma once

#include "iet/interval_exchange.hpp"
#include "iet/step_function.hpp"

namespace iet {

/// Shortest-path distance on the circle [0,1): min(|u-v|, 1-|u-v|).
Scalar circle_distance(const Scalar& u, const Scalar& v);

/// Circle length of a displacement: the representative of c in (-1/2, 1/2]
/// taken in absolute value. A tie at exactly 1/2 gives 1/2.
Scalar circle_displacement_length(const Scalar& c);

/// The integral metric d(f, g) = integral of rho(f(x), g(x)) over [0,1),
/// computed exactly on the common refinement of the two partitions, where
/// the integrand is the constant circle length of omega_f - omega_g.
Scalar distance(const IntervalExchange& f, const IntervalExchange& g);

/// The uniform displacement sup_x rho(f(x), g(x)); exact, and always an
/// upper bound for distance(f, g).
Scalar sup_displacement(const IntervalExchange& f, const IntervalExchange& g);

/// Squared L2 distance of the Koopman images of phi: the operator acts by
/// precomposition with the inverse, T_f phi = phi o f^{-1}, which makes
/// f -> T_f a homomorphism.
Scalar koopman_l2_sq(const IntervalExchange& f, const IntervalExchange& g,
                     const StepFunction& phi);

} // namespace iet
