#pragma once

// Test-only oracles, kept deliberately independent of the library's
// composition/refinement machinery: everything here works by direct formula
// evaluation or by enumerating pieces and probing points.

#include <vector>

#include "iet/interval_exchange.hpp"
#include "iet/permutation.hpp"
#include "iet/scalar.hpp"
#include "iet/step_function.hpp"

namespace iet::testing {

// Translation vector by the defining double sum: omega_j =
// sum_{pi(i) < pi(j)} lambda_i - sum_{i < j} lambda_i.
inline std::vector<Scalar> naive_omega(const Permutation& perm,
                                       const std::vector<Scalar>& lengths) {
    const int n = perm.size();
    std::vector<Scalar> out;
    for (int j = 0; j < n; ++j) {
        Scalar w(0);
        for (int i = 0; i < n; ++i) {
            if (perm(i) < perm(j)) w += lengths[static_cast<size_t>(i)];
            if (i < j) w -= lengths[static_cast<size_t>(i)];
        }
        out.push_back(std::move(w));
    }
    return out;
}

// Evaluates the (possibly non-canonical, possibly degenerate) description
// directly from the defining formulas.
inline Scalar naive_eval(const Permutation& perm, const std::vector<Scalar>& lengths,
                         const Scalar& x) {
    std::vector<Scalar> w = naive_omega(perm, lengths);
    Scalar beta(0);
    for (size_t j = 0; j < lengths.size(); ++j) {
        Scalar next = beta + lengths[j];
        if (!(x < beta) && x < next) return x + w[j];
        beta = std::move(next);
    }
    throw std::domain_error("naive_eval: point outside [0,1)");
}

// All breakpoints of both maps, then midpoint sampling: on each refinement
// piece the integrand rho(f(x), g(x)) is constant, so the midpoint value is
// the exact piece value.
inline Scalar brute_distance(const IntervalExchange& f, const IntervalExchange& g) {
    std::vector<Scalar> cuts = f.breakpoints();
    cuts.insert(cuts.end(), g.breakpoints().begin(), g.breakpoints().end());
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    Scalar total(0);
    for (size_t k = 0; k + 1 < cuts.size(); ++k) {
        Scalar mid = (cuts[k] + cuts[k + 1]) / Scalar(2);
        Scalar diff = (f.apply(mid) - g.apply(mid)).abs();
        Scalar wrap = Scalar(1) - diff;
        const Scalar& rho = diff < wrap ? diff : wrap;
        total += (cuts[k + 1] - cuts[k]) * rho;
    }
    return total;
}

// Exact Koopman oracle by point probing: cut at every image of a phi
// breakpoint under f and g and at every image-interval endpoint, then
// evaluate the squared difference at midpoints.
inline Scalar brute_koopman_l2_sq(const IntervalExchange& f, const IntervalExchange& g,
                                  const StepFunction& phi) {
    const IntervalExchange finv = f.inverse();
    const IntervalExchange ginv = g.inverse();
    std::vector<Scalar> cuts;
    for (const IntervalExchange* m : {&finv, &ginv}) {
        cuts.insert(cuts.end(), m->breakpoints().begin(), m->breakpoints().end());
        for (const Scalar& c : phi.breakpoints()) {
            if (c < Scalar(1)) {
                for (int j = 0; j < m->size(); ++j) {
                    // preimage of c under m, i.e. image of c under its inverse
                    const Scalar& u = m->breakpoints()[static_cast<size_t>(j)];
                    const Scalar& v = m->breakpoints()[static_cast<size_t>(j) + 1];
                    const Scalar& w = m->translations()[static_cast<size_t>(j)];
                    Scalar pre = c - w;
                    if (!(pre < u) && pre < v) cuts.push_back(std::move(pre));
                }
            }
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    Scalar total(0);
    for (size_t k = 0; k + 1 < cuts.size(); ++k) {
        Scalar mid = (cuts[k] + cuts[k + 1]) / Scalar(2);
        Scalar diff = phi.at(finv.apply(mid)) - phi.at(ginv.apply(mid));
        total += (cuts[k + 1] - cuts[k]) * diff * diff;
    }
    return total;
}

// Interval comparison oracle: brackets each scalar between rationals that
// agree to `bits` fractional bits using only integer square roots, with no
// call into Scalar's sign analysis.
inline int interval_compare(const Scalar& x, const Scalar& y, unsigned bits) {
    auto bounds = [bits](const Scalar& s) -> std::pair<Rational, Rational> {
        Rational lo, hi;
        if (s.radicand() == 0) {
            lo = hi = s.rational_part();
        } else {
            mpz_class scaled = mpz_class(s.radicand()) << (2 * bits);
            mpz_class root = sqrt(scaled);
            Rational rlo(root, BigInt(1) << bits);
            rlo.canonicalize();
            Rational rhi(root + 1, BigInt(1) << bits);
            rhi.canonicalize();
            const Rational& b = s.radical_part();
            if (b >= 0) {
                lo = s.rational_part() + b * rlo;
                hi = s.rational_part() + b * rhi;
            } else {
                lo = s.rational_part() + b * rhi;
                hi = s.rational_part() + b * rlo;
            }
        }
        return {lo, hi};
    };
    auto [xlo, xhi] = bounds(x);
    auto [ylo, yhi] = bounds(y);
    if (xhi < ylo) return -1;
    if (yhi < xlo) return 1;
    return 0; // intervals overlap: no verdict
}

} // namespace iet::testing
