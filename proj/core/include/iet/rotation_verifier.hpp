#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "iet/interval_exchange.hpp"
#include "iet/scalar.hpp"

namespace iet {

/// One observation of a would-be flow: the element at a sampled time.
struct FlowSample {
    Scalar time;
    IntervalExchange map;
};

/// A piece of the common refinement with its reconstructed local rate;
/// pieces swallowed by boundary effects carry no rate.
struct RatePiece {
    Scalar left;
    Scalar right;
    std::optional<Scalar> rate;
};

struct ConsistentWithRotation {
    std::vector<RatePiece> rates;
    int max_delta = 0;
};

/// f_s o f_t differs from the sampled element at time s + t.
struct HomomorphismWitness {
    Scalar s;
    Scalar t;
};

/// Discontinuity counts grew strictly along an arithmetic time progression.
struct DeltaGrowthWitness {
    std::vector<Scalar> times;
    std::vector<int> deltas;
};

/// Local displacements are not generated by any rate on a set of pieces too
/// large to blame on block boundaries.
struct LocalTranslationWitness {
    Scalar left;
    Scalar right;
    Scalar inconsistent_measure;
};

struct NotRotation {
    std::variant<HomomorphismWitness, DeltaGrowthWitness, LocalTranslationWitness> witness;
};

struct Inconclusive {
    std::string reason;
};

using RotationVerdict = std::variant<ConsistentWithRotation, NotRotation, Inconclusive>;

/// Finite-sample check of a candidate one-parameter family.
///
/// NotRotation verdicts are exact, witness-backed refutations (a failed
/// group law, sustained discontinuity growth, or a non-rotational local
/// displacement field of large measure). ConsistentWithRotation only
/// reports that no refutation was found; finitely many samples can never
/// certify a genuine flow. A missing time-zero sample is added implicitly;
/// duplicate times are rejected.
RotationVerdict verify_rotation_family(std::vector<FlowSample> samples);

} // namespace iet
