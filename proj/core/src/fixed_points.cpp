#include "peterson/fixed_points.hpp"

#include <algorithm>
#include <sstream>

namespace peterson {

Permutation::Permutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {
    std::vector<bool> seen(one_line_.size(), false);
    for (int v : one_line_) {
        if (v < 1 || v > static_cast<int>(one_line_.size()) ||
            seen[static_cast<std::size_t>(v - 1)])
            throw DomainError("not a permutation in one-line notation");
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

bool Permutation::is_involution() const {
    for (int i = 1; i <= n(); ++i)
        if ((*this)((*this)(i)) != i) return false;
    return true;
}

std::string Permutation::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < one_line_.size(); ++i) {
        if (i > 0) os << ",";
        os << one_line_[i];
    }
    os << "]";
    return os.str();
}

namespace {

// descending runs over the blocks cut by the subset
std::vector<int> one_line_from_subset(int n, const std::vector<int>& subset) {
    std::vector<int> cuts = subset;
    cuts.push_back(n);
    std::vector<int> w;
    w.reserve(static_cast<std::size_t>(n));
    int lo = 0;
    for (int hi : cuts) {
        for (int v = hi; v > lo; --v) w.push_back(v);
        lo = hi;
    }
    return w;
}

}  // namespace

PetersonFixedPoint::PetersonFixedPoint(int n, std::vector<int> subset)
    : n_(n), subset_(std::move(subset)), w_(one_line_from_subset(n, subset_)) {
    if (n_ < 2) throw DomainError("fixed points require n >= 2");
    for (std::size_t i = 0; i < subset_.size(); ++i) {
        if (subset_[i] < 1 || subset_[i] > n_ - 1)
            throw DomainError("fixed-point subset entry out of range");
        if (i > 0 && subset_[i] <= subset_[i - 1])
            throw DomainError("fixed-point subset must be strictly increasing");
    }
    // re-derive the subset from the permutation's ascents and cross-check
    std::vector<int> ascents;
    for (int i = 1; i < n_; ++i)
        if (w_(i) < w_(i + 1)) ascents.push_back(i);
    if (ascents != subset_ || !w_.is_involution())
        throw InternalError("fixed-point permutation fails its defining form");
}

std::uint64_t PetersonFixedPoint::mask() const {
    std::uint64_t m = 0;
    for (int j : subset_) m |= std::uint64_t{1} << (j - 1);
    return m;
}

std::vector<PetersonFixedPoint> enumerate_fixed_points(int n) {
    if (n < 2) throw DomainError("fixed-point enumeration requires n >= 2");
    if (n > 40) throw DomainError("fixed-point enumeration is limited to n <= 40");
    std::vector<PetersonFixedPoint> points;
    std::uint64_t count = std::uint64_t{1} << (n - 1);
    points.reserve(count);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        std::vector<int> subset;
        for (int j = 1; j <= n - 1; ++j)
            if (mask & (std::uint64_t{1} << (j - 1))) subset.push_back(j);
        points.emplace_back(n, std::move(subset));
    }
    return points;
}

}  // namespace peterson
