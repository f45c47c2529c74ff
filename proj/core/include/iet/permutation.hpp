#pragma once

#include <vector>

namespace iet {

/// A bijection of {0, ..., n-1}, stored as the image sequence.
///
/// Serialized forms are 1-based to match the usual combinatorial notation;
/// in memory everything is 0-based.
class Permutation {
public:
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    static Permutation from_one_based(const std::vector<int>& images);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<size_t>(i)]; }
    const std::vector<int>& images() const { return images_; }
    std::vector<int> to_one_based() const;

    Permutation inverse() const;

    /// pi(j+1) != pi(j) + 1 for all j: no two adjacent intervals stay adjacent
    /// in order, so the induced interval exchange has no mergeable pieces.
    bool is_unpartitioned() const;

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

} // namespace iet
