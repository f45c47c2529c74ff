#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "iet/interval_exchange.hpp"
#include "iet/interval_set.hpp"
#include "iet/scalar.hpp"

namespace iet {

/// A point of the n-torus: coordinates in [0, 1).
class TorusPoint {
public:
    explicit TorusPoint(std::vector<Scalar> coords);

    /// Reduces arbitrary reals coordinate-wise mod 1.
    static TorusPoint reduce(const std::vector<Scalar>& raw);

    int size() const { return static_cast<int>(coords_.size()); }
    const Scalar& operator[](int i) const { return coords_[static_cast<size_t>(i)]; }
    const std::vector<Scalar>& coords() const { return coords_; }

    bool operator==(const TorusPoint&) const = default;

private:
    std::vector<Scalar> coords_;
};

/// The standard torus action element: on the j-th lambda-block, rotate by
/// lambda_j * alpha_j modulo lambda_j. Built from the doubled description
/// (lengths lambda_j(1-alpha_j), alpha_j lambda_j and the pairwise swap
/// permutation) and canonicalized, so degenerate pieces vanish.
IntervalExchange torus_element(const std::vector<Scalar>& lambda, const TorusPoint& alpha);

/// One-parameter rotation flow data: t -> h f_([t a], lambda) h^{-1}.
class FlowSpec {
public:
    FlowSpec(std::vector<Scalar> base_lengths, std::vector<Scalar> rates,
             std::optional<IntervalExchange> conjugator = std::nullopt);

    int blocks() const { return static_cast<int>(base_lengths_.size()); }
    const std::vector<Scalar>& base_lengths() const { return base_lengths_; }
    const std::vector<Scalar>& rates() const { return rates_; }
    const std::optional<IntervalExchange>& conjugator() const { return conjugator_; }

private:
    std::vector<Scalar> base_lengths_;
    std::vector<Scalar> rates_;
    std::optional<IntervalExchange> conjugator_;
};

/// The flow element at time t: coordinates alpha_j = {t * a_j}, conjugated
/// when the spec carries a conjugator. flow_at(spec, 0) is the identity and
/// flow_at(spec, s) o flow_at(spec, t) == flow_at(spec, s + t) exactly.
IntervalExchange flow_at(const FlowSpec& spec, const Scalar& t);

/// Restricted rotation: rotates [0, delta) by {s} * delta, fixes [delta, 1).
IntervalExchange restricted_rotation(const Scalar& s, const Scalar& delta);

/// Global fixed set of the flow: the zero-rate blocks, pushed forward
/// through the conjugator when present.
IntervalSet flow_fixed_set(const FlowSpec& spec);

/// One invariant block [left, right) rotated by amount in [0, right - left).
struct RotationBlock {
    Scalar left;
    Scalar right;
    Scalar amount;
};

/// Successful standard-form recognition: blocks partition [0,1), each
/// invariant, and torus_element(lambda(), alpha()) reproduces the map.
struct RotationDecomposition {
    std::vector<RotationBlock> blocks;

    std::vector<Scalar> lambda() const;
    TorusPoint alpha() const; // normalized amounts, amount / block length
};

/// Witness that the finest invariant prefix decomposition contains a block
/// that is not a two-piece rotation.
struct NotStandard {
    Scalar block_left;
    Scalar block_right;
    std::vector<Scalar> translations; // piece translations inside the block
};

/// Recognizes elements of standard torus actions: splits [0,1) into the
/// finest f-invariant prefix blocks (cut points at breakpoints of f) and
/// checks the two-piece rotation form on each.
std::variant<RotationDecomposition, NotStandard> decompose_standard(const IntervalExchange& f);

} // namespace iet
