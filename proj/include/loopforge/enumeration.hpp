#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include <json.hpp>

#include "loopforge/loop.hpp"

namespace loopforge {

/// Hard cap on exhaustive enumeration; beyond it callers must opt in
/// explicitly (the reduced-table count grows super-exponentially).
inline constexpr int kEnumerationCap = 7;
inline constexpr int kIsoEnumerationCap = 6;

/// Streams every reduced Cayley table of order n (row 0 and column 0 in
/// natural order, so the identity is 0) exactly once, in lexicographic
/// row-major order. Restartable: state() round-trips through JSON.
///
/// The cell-by-cell search keeps per-row and per-column bitmasks of used
/// symbols; candidates for a cell are the clear bits of their union.
class LoopEnumerator {
public:
    explicit LoopEnumerator(int n, bool allow_large = false);

    std::optional<FiniteLoop> next();

    long emitted() const { return emitted_; }
    bool exhausted() const { return exhausted_; }
    int order() const { return n_; }

    nlohmann::json state() const;
    static LoopEnumerator resume(const nlohmann::json& j);

private:
    int n_ = 0;
    int m_ = 0;  // number of free cells, (n-1)^2
    bool started_ = false;
    bool exhausted_ = false;
    long emitted_ = 0;
    std::vector<int> chosen_;     // per free cell, -1 when unset
    std::vector<uint32_t> rows_;  // used-symbol masks
    std::vector<uint32_t> cols_;

    int cell_row(int k) const { return 1 + k / (n_ - 1); }
    int cell_col(int k) const { return 1 + k % (n_ - 1); }
    void place(int k, int v);
    void unplace(int k);
    FiniteLoop build() const;
};

/// Streams exactly one canonical representative per isomorphism class of
/// loops of order n, in order of first appearance in the reduced stream.
class IsoClassEnumerator {
public:
    explicit IsoClassEnumerator(int n, bool allow_large = false);

    std::optional<FiniteLoop> next();
    long emitted() const { return emitted_; }

    nlohmann::json state() const;
    static IsoClassEnumerator resume(const nlohmann::json& j);

private:
    explicit IsoClassEnumerator(LoopEnumerator inner) : inner_(std::move(inner)) {}
    LoopEnumerator inner_;
    std::set<std::vector<int>> seen_;
    long emitted_ = 0;
};

std::vector<FiniteLoop> enumerate_loops(int n, bool allow_large = false);
std::vector<FiniteLoop> enumerate_up_to_isomorphism(int n, bool allow_large = false);

/// Reduced loop table by randomized backtracking with restarts; deterministic
/// per (n, seed). The distribution is NOT uniform over loops of order n (the
/// restart policy biases toward tables reachable with little backtracking);
/// use it for counterexample hunting, not statistics.
FiniteLoop random_loop(int n, std::uint64_t seed);

}  // namespace loopforge
