#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "peterson/errors.hpp"

namespace peterson {

/// Permutation of {1..n} in one-line notation (1-based values).
class Permutation {
  public:
    explicit Permutation(std::vector<int> one_line);

    int n() const { return static_cast<int>(one_line_.size()); }
    /// w(i) for 1 <= i <= n.
    int operator()(int i) const { return one_line_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& one_line() const { return one_line_; }

    bool is_involution() const;
    std::string str() const;  // e.g. "[3,1,2]"

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.one_line_ == b.one_line_;
    }

  private:
    std::vector<int> one_line_;
};

/// A circle-fixed point of the Peterson variety: a subset
/// J = {j_1 < ... < j_m} of {1..n-1} together with the permutation built
/// from it as the concatenation of descending runs
///   j_1 .. 1 | j_2 .. j_1+1 | ... | n .. j_m+1.
/// The permutation is always an involution.
class PetersonFixedPoint {
  public:
    PetersonFixedPoint(int n, std::vector<int> subset);

    int n() const { return n_; }
    const std::vector<int>& subset() const { return subset_; }
    const Permutation& w() const { return w_; }
    /// Bit i-1 set iff i is in the subset; the canonical key.
    std::uint64_t mask() const;

    friend bool operator==(const PetersonFixedPoint& a, const PetersonFixedPoint& b) {
        return a.n_ == b.n_ && a.subset_ == b.subset_;
    }

  private:
    int n_;
    std::vector<int> subset_;
    Permutation w_;
};

/// All 2^{n-1} fixed points, ordered by ascending subset bitmask; n >= 2.
std::vector<PetersonFixedPoint> enumerate_fixed_points(int n);

}  // namespace peterson
