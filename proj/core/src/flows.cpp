#include "iet/flows.hpp"

#include <stdexcept>

namespace iet {

namespace {

void check_open_simplex(const std::vector<Scalar>& lengths) {
    if (lengths.empty()) throw std::invalid_argument("length vector is empty");
    Scalar sum(0);
    for (const Scalar& l : lengths) {
        if (l.sign() <= 0) throw std::invalid_argument("length vector must be strictly positive");
        sum += l;
    }
    if (!(sum == Scalar(1))) throw std::invalid_argument("length vector must sum to 1");
}

} // namespace

TorusPoint::TorusPoint(std::vector<Scalar> coords) : coords_(std::move(coords)) {
    for (const Scalar& c : coords_) {
        if (c.sign() < 0 || !(c < Scalar(1)))
            throw std::invalid_argument("TorusPoint: coordinates must lie in [0,1)");
    }
}

TorusPoint TorusPoint::reduce(const std::vector<Scalar>& raw) {
    std::vector<Scalar> out;
    out.reserve(raw.size());
    for (const Scalar& c : raw) out.push_back(frac(c));
    return TorusPoint(std::move(out));
}

IntervalExchange torus_element(const std::vector<Scalar>& lambda, const TorusPoint& alpha) {
    check_open_simplex(lambda);
    if (static_cast<int>(lambda.size()) != alpha.size())
        throw std::invalid_argument("torus_element: dimension mismatch");

    const int n = static_cast<int>(lambda.size());
    std::vector<int> perm;
    std::vector<Scalar> lengths;
    perm.reserve(2 * static_cast<size_t>(n));
    lengths.reserve(2 * static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        const Scalar& l = lambda[static_cast<size_t>(j)];
        Scalar moved = l * alpha[j];
        perm.push_back(2 * j + 1);
        perm.push_back(2 * j);
        lengths.push_back(l - moved);
        lengths.push_back(std::move(moved));
    }
    return IntervalExchange::canonicalize(Permutation(std::move(perm)), std::move(lengths));
}

FlowSpec::FlowSpec(std::vector<Scalar> base_lengths, std::vector<Scalar> rates,
                   std::optional<IntervalExchange> conjugator)
    : base_lengths_(std::move(base_lengths)),
      rates_(std::move(rates)),
      conjugator_(std::move(conjugator)) {
    check_open_simplex(base_lengths_);
    if (base_lengths_.size() != rates_.size())
        throw std::invalid_argument("FlowSpec: need one rate per block");
}

IntervalExchange flow_at(const FlowSpec& spec, const Scalar& t) {
    std::vector<Scalar> coords;
    coords.reserve(spec.rates().size());
    for (const Scalar& a : spec.rates()) coords.push_back(frac(t * a));
    IntervalExchange f = torus_element(spec.base_lengths(), TorusPoint(std::move(coords)));
    if (spec.conjugator()) {
        const IntervalExchange& h = *spec.conjugator();
        f = compose(compose(h, f), h.inverse());
    }
    return f;
}

IntervalExchange restricted_rotation(const Scalar& s, const Scalar& delta) {
    if (delta.sign() <= 0 || Scalar(1) < delta)
        throw std::domain_error("restricted_rotation: delta must lie in (0, 1]");
    if (delta == Scalar(1)) return IntervalExchange::rotation(s);
    std::vector<Scalar> lambda{delta, Scalar(1) - delta};
    return torus_element(lambda, TorusPoint({frac(s), Scalar(0)}));
}

IntervalSet flow_fixed_set(const FlowSpec& spec) {
    std::vector<IntervalSet::Interval> parts;
    Scalar left(0);
    for (int j = 0; j < spec.blocks(); ++j) {
        Scalar right = left + spec.base_lengths()[static_cast<size_t>(j)];
        if (spec.rates()[static_cast<size_t>(j)].is_zero()) parts.emplace_back(left, right);
        left = std::move(right);
    }
    IntervalSet fixed = IntervalSet::of(std::move(parts));
    if (spec.conjugator()) fixed = push_forward(fixed, *spec.conjugator());
    return fixed;
}

std::vector<Scalar> RotationDecomposition::lambda() const {
    std::vector<Scalar> out;
    out.reserve(blocks.size());
    for (const RotationBlock& b : blocks) out.push_back(b.right - b.left);
    return out;
}

TorusPoint RotationDecomposition::alpha() const {
    std::vector<Scalar> out;
    out.reserve(blocks.size());
    for (const RotationBlock& b : blocks) out.push_back(b.amount / (b.right - b.left));
    return TorusPoint(std::move(out));
}

std::variant<RotationDecomposition, NotStandard> decompose_standard(const IntervalExchange& f) {
    RotationDecomposition dec;
    const int n = f.size();
    int j = 0;
    while (j < n) {
        // Minimal invariant block starting at beta_j: extend until the
        // pieces seen so far map inside [beta_start, beta_end).
        const int start = j;
        Scalar max_image_end = f.image_start(j) + f.lengths()[static_cast<size_t>(j)];
        while (f.breakpoints()[static_cast<size_t>(j) + 1] < max_image_end) {
            ++j;
            Scalar end = f.image_start(j) + f.lengths()[static_cast<size_t>(j)];
            if (max_image_end < end) max_image_end = std::move(end);
        }
        const Scalar& block_left = f.breakpoints()[static_cast<size_t>(start)];
        const Scalar& block_right = f.breakpoints()[static_cast<size_t>(j) + 1];

        // Two-piece rotation form: translations rho on [left, right - rho)
        // and rho - length on [right - rho, right).
        const Scalar rho = f.translations()[static_cast<size_t>(start)];
        const Scalar wrapped = rho - (block_right - block_left);
        bool ok = true;
        for (int k = start; k <= j; ++k) {
            const Scalar& w = f.translations()[static_cast<size_t>(k)];
            if (!(w == rho) && !(w == wrapped)) {
                ok = false;
                break;
            }
        }
        if (!ok) {
            NotStandard witness{block_left, block_right, {}};
            for (int k = start; k <= j; ++k)
                witness.translations.push_back(f.translations()[static_cast<size_t>(k)]);
            return witness;
        }
        dec.blocks.push_back(RotationBlock{block_left, block_right, rho});
        ++j;
    }
    return dec;
}

} // namespace iet
