#include "iet/rotation_verifier.hpp"

#include <algorithm>
#include <stdexcept>

namespace iet {

namespace {

// Strict-growth run length (in samples) along an arithmetic progression that
// is taken as evidence against membership in a rotation subgroup; rotation
// flows keep delta bounded by a conjugacy-dependent constant, so sustained
// growth this long does not occur at desk scale.
constexpr int kGrowthRunSamples = 5;

// Representative of c mod 1 in (-1/2, 1/2].
Scalar reduced_displacement(const Scalar& c) {
    Scalar r = frac(c);
    if (Scalar(1, 2) < r) r -= Scalar(1);
    return r;
}

std::optional<size_t> find_time(const std::vector<FlowSample>& samples, const Scalar& t) {
    auto it = std::lower_bound(samples.begin(), samples.end(), t,
                               [](const FlowSample& s, const Scalar& v) { return s.time < v; });
    if (it != samples.end() && it->time == t) return static_cast<size_t>(it - samples.begin());
    return std::nullopt;
}

} // namespace

RotationVerdict verify_rotation_family(std::vector<FlowSample> samples) {
    if (samples.empty()) throw std::invalid_argument("verify_rotation_family: no samples");
    std::sort(samples.begin(), samples.end(),
              [](const FlowSample& a, const FlowSample& b) { return a.time < b.time; });
    for (size_t i = 0; i + 1 < samples.size(); ++i) {
        if (samples[i].time == samples[i + 1].time)
            throw std::invalid_argument("verify_rotation_family: duplicate sample times");
    }
    if (!find_time(samples, Scalar(0))) {
        samples.push_back({Scalar(0), IntervalExchange::identity()});
        std::sort(samples.begin(), samples.end(),
                  [](const FlowSample& a, const FlowSample& b) { return a.time < b.time; });
    }

    // (a) group law on every sampled triple t_i + t_j = t_k
    for (size_t i = 0; i < samples.size(); ++i) {
        for (size_t j = i; j < samples.size(); ++j) {
            Scalar sum = samples[i].time + samples[j].time;
            if (auto k = find_time(samples, sum)) {
                if (!(compose(samples[i].map, samples[j].map) == samples[*k].map))
                    return NotRotation{HomomorphismWitness{samples[i].time, samples[j].time}};
            }
        }
    }

    // (b) discontinuity growth along arithmetic progressions
    int max_delta = 0;
    for (const FlowSample& s : samples) max_delta = std::max(max_delta, s.map.delta());
    for (size_t i = 0; i < samples.size(); ++i) {
        for (size_t j = i + 1; j < samples.size(); ++j) {
            const Scalar step = samples[j].time - samples[i].time;
            std::vector<size_t> chain{i, j};
            Scalar next = samples[j].time + step;
            while (auto k = find_time(samples, next)) {
                chain.push_back(*k);
                next += step;
            }
            if (chain.size() < static_cast<size_t>(kGrowthRunSamples)) continue;
            size_t run = 1;
            for (size_t m = 1; m < chain.size(); ++m) {
                if (samples[chain[m - 1]].map.delta() < samples[chain[m]].map.delta())
                    ++run;
                else
                    run = 1;
                if (run >= static_cast<size_t>(kGrowthRunSamples)) {
                    DeltaGrowthWitness w;
                    for (size_t p = m + 1 - run; p <= m; ++p) {
                        w.times.push_back(samples[chain[p]].time);
                        w.deltas.push_back(samples[chain[p]].map.delta());
                    }
                    return NotRotation{std::move(w)};
                }
            }
        }
    }

    // (c) local rate reconstruction at the smallest positive times
    std::vector<size_t> positive;
    for (size_t i = 0; i < samples.size(); ++i) {
        if (samples[i].time.sign() > 0) positive.push_back(i);
    }
    if (positive.size() < 2)
        return Inconclusive{"fewer than two small positive sample times"};
    const Scalar& t1 = samples[positive[0]].time;
    const Scalar& t2 = samples[positive[1]].time;
    const Scalar small_cutoff = t1 + t2;
    std::vector<size_t> small;
    for (size_t i : positive) {
        if (!(small_cutoff < samples[i].time)) small.push_back(i);
    }
    const Scalar& t_small_max = samples[small.back()].time;

    std::vector<Scalar> cuts{Scalar(0)};
    for (const FlowSample& s : samples) {
        const auto& b = s.map.breakpoints();
        cuts.insert(cuts.end(), b.begin() + 1, b.end() - 1);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    cuts.push_back(Scalar(1));

    std::vector<RatePiece> rates;
    Scalar bad_measure(0);
    Scalar rate_cap(1);
    std::optional<LocalTranslationWitness> worst;
    for (size_t p = 0; p + 1 < cuts.size(); ++p) {
        const Scalar& left = cuts[p];
        const Scalar& right = cuts[p + 1];
        Scalar w1 = samples[positive[0]].map.apply(left) - left;
        Scalar rate = reduced_displacement(w1) / t1;
        bool ok = true;
        for (size_t i : small) {
            Scalar wi = samples[i].map.apply(left) - left;
            if (!frac(wi - samples[i].time * rate).is_zero()) {
                ok = false;
                break;
            }
        }
        if (ok) {
            Scalar mag = rate.abs();
            if (rate_cap < mag) rate_cap = std::move(mag);
            rates.push_back(RatePiece{left, right, std::move(rate)});
        } else {
            Scalar len = right - left;
            bad_measure += len;
            if (!worst || worst->inconsistent_measure < len)
                worst = LocalTranslationWitness{left, right, len};
            rates.push_back(RatePiece{left, right, std::nullopt});
        }
    }

    if (bad_measure.is_zero()) return ConsistentWithRotation{std::move(rates), max_delta};

    // Boundary effects of a genuine rotation flow can break the linear form
    // near block ends and conjugator discontinuities; tolerate at most that
    // much measure, and admit defeat when the bound says nothing.
    Scalar tolerated = Scalar(max_delta) * t_small_max * rate_cap;
    if (!(tolerated < Scalar(1, 2)))
        return Inconclusive{"sample times too coarse for the local-translation check"};
    if (!(tolerated < bad_measure)) return ConsistentWithRotation{std::move(rates), max_delta};
    worst->inconsistent_measure = bad_measure;
    return NotRotation{std::move(*worst)};
}

} // namespace iet
