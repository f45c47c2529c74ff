#pragma once

#include <vector>

#include "iet/interval_set.hpp"
#include "iet/permutation.hpp"
#include "iet/scalar.hpp"

namespace iet {

/// An interval exchange transformation of [0, 1) in canonical coordinates:
/// an unpartitioned permutation together with strictly positive lengths
/// summing to one. Canonical coordinates are unique, so structural equality
/// of two objects coincides with pointwise equality of the maps.
///
/// Derived data kept alongside: breakpoints beta_0 = 0 < ... < beta_n = 1
/// (partial sums of the lengths) and the translation vector omega, where the
/// map sends x in [beta_{j-1}, beta_j) to x + omega_j.
class IntervalExchange {
public:
    static IntervalExchange identity();

    /// The rotation x -> x + {t} (mod 1).
    static IntervalExchange rotation(const Scalar& t);

    /// General entry point: accepts any bijective permutation and any
    /// nonnegative lengths summing to one, drops degenerate intervals,
    /// merges continuity points, and reindexes. Idempotent; the returned
    /// map is pointwise equal to the described one.
    static IntervalExchange canonicalize(const Permutation& perm, std::vector<Scalar> lengths);

    int size() const { return static_cast<int>(lengths_.size()); }

    /// Number of discontinuities as a map [0,1) -> [0,1), counting 0;
    /// equal to the canonical n, so delta(identity) == 1.
    int delta() const { return size(); }

    const Permutation& permutation() const { return perm_; }
    const std::vector<Scalar>& lengths() const { return lengths_; }
    const std::vector<Scalar>& breakpoints() const { return breakpoints_; }
    const std::vector<Scalar>& translations() const { return translations_; }

    /// Left endpoint of the image of the j-th interval (0-based).
    Scalar image_start(int j) const {
        return breakpoints_[static_cast<size_t>(j)] + translations_[static_cast<size_t>(j)];
    }

    /// Index of the interval containing x.
    int interval_index(const Scalar& x) const;

    Scalar apply(const Scalar& x) const;

    IntervalExchange inverse() const;

    /// The pointwise fixed set: the union of intervals translated by zero.
    IntervalSet fixed_set() const;

    bool operator==(const IntervalExchange& o) const {
        return perm_ == o.perm_ && lengths_ == o.lengths_;
    }

private:
    friend IntervalExchange compose(const IntervalExchange&, const IntervalExchange&);
    friend class CanonicalBuilder;

    IntervalExchange(Permutation perm, std::vector<Scalar> lengths);

    Permutation perm_;
    std::vector<Scalar> lengths_;
    std::vector<Scalar> breakpoints_;
    std::vector<Scalar> translations_;
};

/// The linear map Omega_pi: translation vector of f_(pi, lambda).
/// Accepts the closed length simplex (zero entries allowed).
std::vector<Scalar> omega(const Permutation& perm, const std::vector<Scalar>& lengths);

/// Composition f after g, in canonical form. The breakpoints of the result
/// refine g's partition by the pullbacks of f's breakpoints through g, so
/// delta(f o g) <= delta(f) + delta(g).
IntervalExchange compose(const IntervalExchange& f, const IntervalExchange& g);

/// Pushes a set forward through the map: the image h(S).
IntervalSet push_forward(const IntervalSet& s, const IntervalExchange& h);

} // namespace iet
