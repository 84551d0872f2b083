#pragma once

// Test-only oracles, deliberately implemented with different algorithms than
// the library paths they check and kept independent of them.

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "loopforge/loop.hpp"

namespace loopforge::testing {

// Reduced Cayley tables of order n by row-wise search: each row r >= 1 ranges
// over all permutations of 0..n-1 with first entry r (via next_permutation),
// kept when it has no column clash with the rows above. No bitmasks, no
// cell-level backtracking; shares nothing with LoopEnumerator.
inline void oracle_reduced_tables_rec(int n, std::vector<std::vector<int>>& rows,
                                      std::vector<std::vector<int>>& out, long* count_only) {
    const int r = static_cast<int>(rows.size());
    if (r == n) {
        if (count_only)
            ++*count_only;
        else
            out.push_back([&] {
                std::vector<int> flat;
                for (const auto& row : rows) flat.insert(flat.end(), row.begin(), row.end());
                return flat;
            }());
        return;
    }
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
        if (v != r) rest.push_back(v);
    do {
        std::vector<int> row;
        row.push_back(r);
        row.insert(row.end(), rest.begin(), rest.end());
        bool ok = true;
        for (int c = 1; c < n && ok; ++c)
            for (int above = 0; above < r && ok; ++above)
                if (rows[static_cast<size_t>(above)][static_cast<size_t>(c)] == row[static_cast<size_t>(c)])
                    ok = false;
        if (ok) {
            rows.push_back(std::move(row));
            oracle_reduced_tables_rec(n, rows, out, count_only);
            rows.pop_back();
        }
    } while (std::next_permutation(rest.begin(), rest.end()));
}

inline long oracle_count_reduced_tables(int n) {
    if (n == 1) return 1;
    std::vector<std::vector<int>> rows;
    rows.push_back([&] {
        std::vector<int> r0(static_cast<size_t>(n));
        std::iota(r0.begin(), r0.end(), 0);
        return r0;
    }());
    std::vector<std::vector<int>> unused;
    long count = 0;
    oracle_reduced_tables_rec(n, rows, unused, &count);
    return count;
}

inline std::vector<std::vector<int>> oracle_reduced_tables(int n) {
    std::vector<std::vector<int>> out;
    if (n == 1) return {{0}};
    std::vector<std::vector<int>> rows;
    rows.push_back([&] {
        std::vector<int> r0(static_cast<size_t>(n));
        std::iota(r0.begin(), r0.end(), 0);
        return r0;
    }());
    oracle_reduced_tables_rec(n, rows, out, nullptr);
    return out;
}

// Isomorphism by sheer force: every bijection of 0..n-1, no pruning.
inline std::optional<Permutation> oracle_find_isomorphism(const FiniteLoop& G, const FiniteLoop& H) {
    if (G.order() != H.order()) return std::nullopt;
    const int n = G.order();
    std::vector<int> img(static_cast<size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    do {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            for (int y = 0; y < n && ok; ++y)
                ok = H.mul(img[static_cast<size_t>(x)], img[static_cast<size_t>(y)]) ==
                     img[static_cast<size_t>(G.mul(x, y))];
        if (ok) return Permutation(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return std::nullopt;
}

}  // namespace loopforge::testing
