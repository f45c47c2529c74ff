#include "iet/interval_exchange.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace iet {

namespace {

void check_lengths(const std::vector<Scalar>& lengths, bool allow_zero) {
    Scalar sum(0);
    for (const Scalar& l : lengths) {
        const int s = l.sign();
        if (s < 0 || (s == 0 && !allow_zero))
            throw std::invalid_argument("IntervalExchange: lengths must be positive");
        sum += l;
    }
    if (!(sum == Scalar(1)))
        throw std::invalid_argument("IntervalExchange: lengths must sum to 1");
}

} // namespace

std::vector<Scalar> omega(const Permutation& perm, const std::vector<Scalar>& lengths) {
    const int n = perm.size();
    if (static_cast<int>(lengths.size()) != n)
        throw std::invalid_argument("omega: permutation/length size mismatch");

    // Prefix sums on the image side: position where each interval lands.
    const Permutation inv = perm.inverse();
    std::vector<Scalar> image_start(static_cast<size_t>(n), Scalar(0));
    Scalar acc(0);
    for (int r = 0; r < n; ++r) {
        const int j = inv(r);
        image_start[static_cast<size_t>(j)] = acc;
        acc += lengths[static_cast<size_t>(j)];
    }

    std::vector<Scalar> out;
    out.reserve(static_cast<size_t>(n));
    Scalar beta(0);
    for (int j = 0; j < n; ++j) {
        out.push_back(image_start[static_cast<size_t>(j)] - beta);
        beta += lengths[static_cast<size_t>(j)];
    }
    return out;
}

IntervalExchange::IntervalExchange(Permutation perm, std::vector<Scalar> lengths)
    : perm_(std::move(perm)), lengths_(std::move(lengths)) {
    breakpoints_.reserve(lengths_.size() + 1);
    breakpoints_.push_back(Scalar(0));
    for (const Scalar& l : lengths_) breakpoints_.push_back(breakpoints_.back() + l);
    translations_ = omega(perm_, lengths_);
}

// Builds the canonical form from a run of (length, translation) pieces that
// describe a bijection of [0,1) piece by piece, in domain order.
class CanonicalBuilder {
public:
    void add(Scalar length, Scalar translation) {
        if (length.sign() <= 0) return; // degenerate piece
        if (!pieces_.empty() && pieces_.back().second == translation) {
            pieces_.back().first += length;
        } else {
            pieces_.emplace_back(std::move(length), std::move(translation));
        }
    }

    IntervalExchange build() && {
        const int n = static_cast<int>(pieces_.size());
        if (n == 0) throw std::invalid_argument("IntervalExchange: no pieces");

        // Rank the image starts to recover the permutation, then check the
        // images tile [0,1).
        std::vector<Scalar> starts;
        starts.reserve(static_cast<size_t>(n));
        Scalar beta(0);
        for (const auto& [len, w] : pieces_) {
            starts.push_back(beta + w);
            beta += len;
        }
        std::vector<int> order(static_cast<size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return starts[static_cast<size_t>(a)] < starts[static_cast<size_t>(b)]; });

        Scalar expect(0);
        for (int r = 0; r < n; ++r) {
            const int j = order[static_cast<size_t>(r)];
            if (!(starts[static_cast<size_t>(j)] == expect))
                throw std::invalid_argument("IntervalExchange: image intervals do not tile [0,1)");
            expect += pieces_[static_cast<size_t>(j)].first;
        }
        if (!(expect == Scalar(1)))
            throw std::invalid_argument("IntervalExchange: image intervals do not tile [0,1)");

        std::vector<int> images(static_cast<size_t>(n));
        for (int r = 0; r < n; ++r) images[static_cast<size_t>(order[static_cast<size_t>(r)])] = r;

        std::vector<Scalar> lengths;
        lengths.reserve(static_cast<size_t>(n));
        for (auto& [len, w] : pieces_) lengths.push_back(std::move(len));

        IntervalExchange out(Permutation(std::move(images)), std::move(lengths));
        assert(out.permutation().is_unpartitioned());
        return out;
    }

private:
    std::vector<std::pair<Scalar, Scalar>> pieces_; // (length, translation)
};

IntervalExchange IntervalExchange::identity() {
    CanonicalBuilder b;
    b.add(Scalar(1), Scalar(0));
    return std::move(b).build();
}

IntervalExchange IntervalExchange::rotation(const Scalar& t) {
    Scalar r = frac(t);
    CanonicalBuilder b;
    b.add(Scalar(1) - r, r);
    b.add(r, r - Scalar(1));
    return std::move(b).build();
}

IntervalExchange IntervalExchange::canonicalize(const Permutation& perm,
                                                std::vector<Scalar> lengths) {
    if (perm.size() != static_cast<int>(lengths.size()))
        throw std::invalid_argument("IntervalExchange: permutation/length size mismatch");
    check_lengths(lengths, /*allow_zero=*/true);
    std::vector<Scalar> w = omega(perm, lengths);
    CanonicalBuilder b;
    for (size_t j = 0; j < lengths.size(); ++j) b.add(std::move(lengths[j]), std::move(w[j]));
    return std::move(b).build();
}

int IntervalExchange::interval_index(const Scalar& x) const {
    if (x.sign() < 0 || !(x < Scalar(1)))
        throw std::domain_error("IntervalExchange: point outside [0,1)");
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
    return static_cast<int>(it - breakpoints_.begin()) - 1;
}

Scalar IntervalExchange::apply(const Scalar& x) const {
    return x + translations_[static_cast<size_t>(interval_index(x))];
}

IntervalExchange IntervalExchange::inverse() const {
    const int n = size();
    std::vector<int> order(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) order[static_cast<size_t>(perm_(j))] = j;

    CanonicalBuilder b;
    for (int r = 0; r < n; ++r) {
        const int j = order[static_cast<size_t>(r)];
        b.add(lengths_[static_cast<size_t>(j)], -translations_[static_cast<size_t>(j)]);
    }
    return std::move(b).build();
}

IntervalSet IntervalExchange::fixed_set() const {
    std::vector<IntervalSet::Interval> parts;
    for (int j = 0; j < size(); ++j) {
        if (translations_[static_cast<size_t>(j)].is_zero())
            parts.emplace_back(breakpoints_[static_cast<size_t>(j)], breakpoints_[static_cast<size_t>(j) + 1]);
    }
    return IntervalSet::of(std::move(parts));
}

IntervalExchange compose(const IntervalExchange& f, const IntervalExchange& g) {
    // Refine g's partition by the pullbacks of f's interior breakpoints,
    // then add translations piecewise.
    CanonicalBuilder b;
    const int ng = g.size();
    for (int j = 0; j < ng; ++j) {
        const Scalar& u = g.breakpoints()[static_cast<size_t>(j)];
        const Scalar& v = g.breakpoints()[static_cast<size_t>(j) + 1];
        const Scalar& w = g.translations()[static_cast<size_t>(j)];

        // Image [u+w, v+w) of this piece, cut by f's breakpoints inside it.
        Scalar left = u + w;
        const Scalar right = v + w;
        int k = f.interval_index(left);
        while (true) {
            const Scalar& cut = f.breakpoints()[static_cast<size_t>(k) + 1];
            if (right < cut || right == cut) {
                b.add(right - left, w + f.translations()[static_cast<size_t>(k)]);
                break;
            }
            b.add(cut - left, w + f.translations()[static_cast<size_t>(k)]);
            left = cut;
            ++k;
        }
    }
    return std::move(b).build();
}

IntervalSet push_forward(const IntervalSet& s, const IntervalExchange& h) {
    std::vector<IntervalSet::Interval> parts;
    for (const auto& [a, bnd] : s.parts()) {
        for (int j = 0; j < h.size(); ++j) {
            const Scalar& u = h.breakpoints()[static_cast<size_t>(j)];
            const Scalar& v = h.breakpoints()[static_cast<size_t>(j) + 1];
            Scalar lo = a < u ? u : a;
            Scalar hi = bnd < v ? bnd : v;
            if (lo < hi) {
                const Scalar& w = h.translations()[static_cast<size_t>(j)];
                parts.emplace_back(lo + w, hi + w);
            }
        }
    }
    return IntervalSet::of(std::move(parts));
}

} // namespace iet
