#include "iet/permutation.hpp"

#include <stdexcept>

namespace iet {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = size();
    if (n == 0) throw std::invalid_argument("Permutation: empty image list");
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int v : images_) {
        if (v < 0 || v >= n || seen[static_cast<size_t>(v)])
            throw std::invalid_argument("Permutation: image list is not a bijection");
        seen[static_cast<size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) im[static_cast<size_t>(i)] = i;
    return Permutation(std::move(im));
}

Permutation Permutation::from_one_based(const std::vector<int>& images) {
    std::vector<int> im;
    im.reserve(images.size());
    for (int v : images) im.push_back(v - 1);
    return Permutation(std::move(im));
}

std::vector<int> Permutation::to_one_based() const {
    std::vector<int> out;
    out.reserve(images_.size());
    for (int v : images_) out.push_back(v + 1);
    return out;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 0; i < size(); ++i) inv[static_cast<size_t>(images_[static_cast<size_t>(i)])] = i;
    return Permutation(std::move(inv));
}

bool Permutation::is_unpartitioned() const {
    for (int j = 0; j + 1 < size(); ++j) {
        if (images_[static_cast<size_t>(j) + 1] == images_[static_cast<size_t>(j)] + 1) return false;
    }
    return true;
}

} // namespace iet
