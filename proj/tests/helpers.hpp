#pragma once

#include <numeric>
#include <vector>

#include "loopforge/loop.hpp"

namespace loopforge::testing {

// Z_n as a reduced table: x*y = x+y mod n.
inline FiniteLoop cyclic(int n) {
    std::vector<std::vector<int>> rows(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) rows[static_cast<size_t>(x)][static_cast<size_t>(y)] = (x + y) % n;
    return FiniteLoop::from_rows(rows);
}

// Z_2 x Z_2 with xor as the operation.
inline FiniteLoop klein() {
    std::vector<std::vector<int>> rows(4, std::vector<int>(4));
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) rows[static_cast<size_t>(x)][static_cast<size_t>(y)] = x ^ y;
    return FiniteLoop::from_rows(rows);
}

// The symmetric group on three letters, identity labeled 0.
inline FiniteLoop sym3() {
    const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    auto index_of = [&](const int* p) {
        for (int i = 0; i < 6; ++i)
            if (perms[i][0] == p[0] && perms[i][1] == p[1] && perms[i][2] == p[2]) return i;
        return -1;
    };
    std::vector<std::vector<int>> rows(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            int prod[3];  // (a then b) acting on points: prod[i] = b[a[i]]
            for (int i = 0; i < 3; ++i) prod[i] = perms[b][perms[a][i]];
            rows[static_cast<size_t>(a)][static_cast<size_t>(b)] = index_of(prod);
        }
    return FiniteLoop::from_rows(rows);
}

}  // namespace loopforge::testing
