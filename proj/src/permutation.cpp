#include "loopforge/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace loopforge {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
    const int n = degree();
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int x : image_) {
        if (x < 0 || x >= n) throw ShapeError("permutation image out of range");
        if (seen[static_cast<size_t>(x)]) throw ShapeError("permutation image repeats a value");
        seen[static_cast<size_t>(x)] = true;
    }
}

Permutation Permutation::identity(int degree) {
    std::vector<int> img(static_cast<size_t>(degree));
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
    for (int x = 0; x < degree(); ++x)
        if (image_[static_cast<size_t>(x)] != x) return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(image_.size());
    for (int x = 0; x < degree(); ++x) inv[static_cast<size_t>(image_[static_cast<size_t>(x)])] = x;
    Permutation p;
    p.image_ = std::move(inv);
    return p;
}

Permutation Permutation::then(const Permutation& q) const {
    if (degree() != q.degree()) throw DegreeMismatch("cannot compose permutations of different degree");
    std::vector<int> img(image_.size());
    for (int x = 0; x < degree(); ++x)
        img[static_cast<size_t>(x)] = q.image_[static_cast<size_t>(image_[static_cast<size_t>(x)])];
    Permutation p;
    p.image_ = std::move(img);
    return p;
}

Permutation Permutation::pow(int m) const {
    Permutation base = m >= 0 ? *this : inverse();
    int k = m >= 0 ? m : -m;
    Permutation acc = identity(degree());
    for (int i = 0; i < k; ++i) acc = acc.then(base);
    return acc;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(image_.size(), false);
    for (int start = 0; start < degree(); ++start) {
        if (seen[static_cast<size_t>(start)]) continue;
        std::vector<int> cyc;
        int x = start;
        do {
            seen[static_cast<size_t>(x)] = true;
            cyc.push_back(x);
            x = image_[static_cast<size_t>(x)];
        } while (x != start);
        out.push_back(std::move(cyc));
    }
    return out;
}

std::vector<int> Permutation::cycle_type() const {
    std::vector<int> lens;
    for (const auto& c : cycles()) lens.push_back(static_cast<int>(c.size()));
    std::sort(lens.begin(), lens.end());
    return lens;
}

long Permutation::order() const {
    long ord = 1;
    for (const auto& c : cycles()) ord = std::lcm(ord, static_cast<long>(c.size()));
    return ord;
}

int Permutation::fixed_points() const {
    int k = 0;
    for (int x = 0; x < degree(); ++x)
        if (image_[static_cast<size_t>(x)] == x) ++k;
    return k;
}

bool Permutation::commutes_with(const Permutation& q) const { return then(q) == q.then(*this); }

std::string Permutation::to_cycle_string() const {
    if (is_identity()) return "()";
    std::ostringstream os;
    for (const auto& c : cycles()) {
        if (c.size() == 1) continue;
        os << '(';
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) os << ' ';
            os << c[i];
        }
        os << ')';
    }
    return os.str();
}

}  // namespace loopforge
