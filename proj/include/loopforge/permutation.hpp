#pragma once

#include <string>
#include <vector>

#include "loopforge/errors.hpp"

namespace loopforge {

/// Bijection on {0, ..., n-1}, written postfix: the image of x under p is p[x].
///
/// Products read LEFT TO RIGHT: x(p*q) = (x p) q. Strings of translations and
/// inverse mappings such as R_y J_rho L_y therefore transliterate one-to-one
/// into `r * j * l`.
class Permutation {
public:
    Permutation() = default;

    /// Throws ShapeError unless `image` is a bijection on 0..image.size()-1.
    explicit Permutation(std::vector<int> image);

    static Permutation identity(int degree);

    int degree() const { return static_cast<int>(image_.size()); }
    int operator[](int x) const { return image_[static_cast<size_t>(x)]; }
    const std::vector<int>& image() const { return image_; }

    bool is_identity() const;

    Permutation inverse() const;

    /// Left-to-right composition: apply *this first, then q.
    Permutation then(const Permutation& q) const;

    /// p^m, with negative m meaning powers of the inverse.
    Permutation pow(int m) const;

    std::vector<std::vector<int>> cycles() const;

    /// Sorted cycle lengths (including fixed points); equal for conjugate permutations.
    std::vector<int> cycle_type() const;

    /// Order of the permutation in the symmetric group (lcm of cycle lengths).
    long order() const;

    int fixed_points() const;

    bool commutes_with(const Permutation& q) const;

    std::string to_cycle_string() const;

    bool operator==(const Permutation&) const = default;
    bool operator<(const Permutation& rhs) const { return image_ < rhs.image_; }

private:
    std::vector<int> image_;
};

inline Permutation operator*(const Permutation& p, const Permutation& q) { return p.then(q); }

}  // namespace loopforge
