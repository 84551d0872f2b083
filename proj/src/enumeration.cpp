#include "loopforge/enumeration.hpp"

#include <algorithm>
#include <random>

#include "loopforge/isomorphy.hpp"

namespace loopforge {

LoopEnumerator::LoopEnumerator(int n, bool allow_large) : n_(n) {
    if (n < 1) throw OrderTooLarge("order must be >= 1");
    if (n > kEnumerationCap && !allow_large)
        throw OrderTooLarge("enumeration capped at order " + std::to_string(kEnumerationCap) +
                            "; pass allow_large to override");
    if (n > 31) throw OrderTooLarge("bitmask enumeration supports order <= 31");
    m_ = (n - 1) * (n - 1);
    chosen_.assign(static_cast<size_t>(m_), -1);
    rows_.assign(static_cast<size_t>(n_), 0);
    cols_.assign(static_cast<size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) {
        rows_[static_cast<size_t>(i)] = 1u << i;  // column 0 entry: i
        cols_[static_cast<size_t>(i)] = 1u << i;  // row 0 entry: i
    }
}

void LoopEnumerator::place(int k, int v) {
    chosen_[static_cast<size_t>(k)] = v;
    rows_[static_cast<size_t>(cell_row(k))] |= 1u << v;
    cols_[static_cast<size_t>(cell_col(k))] |= 1u << v;
}

void LoopEnumerator::unplace(int k) {
    int v = chosen_[static_cast<size_t>(k)];
    chosen_[static_cast<size_t>(k)] = -1;
    rows_[static_cast<size_t>(cell_row(k))] &= ~(1u << v);
    cols_[static_cast<size_t>(cell_col(k))] &= ~(1u << v);
}

FiniteLoop LoopEnumerator::build() const {
    std::vector<int> table(static_cast<size_t>(n_) * n_);
    for (int c = 0; c < n_; ++c) table[static_cast<size_t>(c)] = c;
    for (int r = 1; r < n_; ++r) table[static_cast<size_t>(r) * n_] = r;
    for (int k = 0; k < m_; ++k)
        table[static_cast<size_t>(cell_row(k)) * n_ + cell_col(k)] = chosen_[static_cast<size_t>(k)];
    return loop_from_flat(n_, std::move(table));
}

std::optional<FiniteLoop> LoopEnumerator::next() {
    if (exhausted_) return std::nullopt;
    const uint32_t full = n_ >= 31 ? 0xffffffffu : ((1u << n_) - 1);

    int k;
    bool descending;
    if (!started_) {
        started_ = true;
        k = 0;
        descending = true;
    } else {
        k = m_ - 1;  // resume by backtracking out of the last emitted table
        descending = false;
    }

    while (true) {
        if (descending && k == m_) {
            ++emitted_;
            return build();
        }
        if (k < 0) {
            exhausted_ = true;
            return std::nullopt;
        }
        uint32_t avail = ~(rows_[static_cast<size_t>(cell_row(k))] |
                           cols_[static_cast<size_t>(cell_col(k))]) & full;
        if (!descending) {
            // Invalidate the current choice and only consider larger symbols.
            int prev = chosen_[static_cast<size_t>(k)];
            unplace(k);
            avail = ~(rows_[static_cast<size_t>(cell_row(k))] |
                      cols_[static_cast<size_t>(cell_col(k))]) & full;
            avail &= ~((1u << (prev + 1)) - 1);
        }
        if (avail == 0) {
            descending = false;
            --k;
            continue;
        }
        int v = std::countr_zero(avail);
        place(k, v);
        descending = true;
        ++k;
    }
}

nlohmann::json LoopEnumerator::state() const {
    return nlohmann::json{{"n", n_},
                          {"mode", "reduced"},
                          {"started", started_},
                          {"exhausted", exhausted_},
                          {"emitted", emitted_},
                          {"cells", chosen_}};
}

LoopEnumerator LoopEnumerator::resume(const nlohmann::json& j) {
    LoopEnumerator e(j.at("n").get<int>(), true);
    e.started_ = j.at("started").get<bool>();
    e.exhausted_ = j.at("exhausted").get<bool>();
    e.emitted_ = j.at("emitted").get<long>();
    auto cells = j.at("cells").get<std::vector<int>>();
    if (static_cast<int>(cells.size()) != e.m_) throw ShapeError("cursor state has wrong cell count");
    for (int k = 0; k < e.m_; ++k)
        if (cells[static_cast<size_t>(k)] >= 0) e.place(k, cells[static_cast<size_t>(k)]);
    return e;
}

IsoClassEnumerator::IsoClassEnumerator(int n, bool allow_large) : inner_(n, allow_large) {
    if (n > kIsoEnumerationCap && !allow_large)
        throw OrderTooLarge("up-to-isomorphism enumeration capped at order " +
                            std::to_string(kIsoEnumerationCap));
}

std::optional<FiniteLoop> IsoClassEnumerator::next() {
    while (auto L = inner_.next()) {
        CanonicalForm cf = canonical_form(*L);
        if (seen_.insert(cf.loop.flat_table()).second) {
            ++emitted_;
            return cf.loop;
        }
    }
    return std::nullopt;
}

nlohmann::json IsoClassEnumerator::state() const {
    nlohmann::json j{{"mode", "up-to-isomorphism"}, {"inner", inner_.state()}, {"emitted", emitted_}};
    j["seen"] = nlohmann::json::array();
    for (const auto& t : seen_) j["seen"].push_back(t);
    return j;
}

IsoClassEnumerator IsoClassEnumerator::resume(const nlohmann::json& j) {
    IsoClassEnumerator e(LoopEnumerator::resume(j.at("inner")));
    e.emitted_ = j.at("emitted").get<long>();
    for (const auto& t : j.at("seen")) e.seen_.insert(t.get<std::vector<int>>());
    return e;
}

std::vector<FiniteLoop> enumerate_loops(int n, bool allow_large) {
    LoopEnumerator e(n, allow_large);
    std::vector<FiniteLoop> out;
    while (auto L = e.next()) out.push_back(std::move(*L));
    return out;
}

std::vector<FiniteLoop> enumerate_up_to_isomorphism(int n, bool allow_large) {
    IsoClassEnumerator e(n, allow_large);
    std::vector<FiniteLoop> out;
    while (auto L = e.next()) out.push_back(std::move(*L));
    return out;
}

FiniteLoop random_loop(int n, std::uint64_t seed) {
    if (n < 1) throw OrderTooLarge("order must be >= 1");
    if (n > 31) throw OrderTooLarge("random tables support order <= 31");
    std::seed_seq seq{static_cast<std::uint64_t>(n), seed};
    std::mt19937_64 rng(seq);

    const int m = (n - 1) * (n - 1);
    const uint32_t full = n >= 31 ? 0xffffffffu : ((1u << n) - 1);
    constexpr int kMaxRestarts = 256;
    constexpr long kStepBudget = 200000;

    for (int attempt = 0; attempt < kMaxRestarts; ++attempt) {
        std::vector<uint32_t> rows(static_cast<size_t>(n)), cols(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) rows[static_cast<size_t>(i)] = cols[static_cast<size_t>(i)] = 1u << i;
        std::vector<std::vector<int>> options(static_cast<size_t>(m));
        std::vector<size_t> pos(static_cast<size_t>(m), 0);
        std::vector<int> chosen(static_cast<size_t>(m), -1);
        long steps = 0;
        int k = 0;
        while (k < m && steps < kStepBudget) {
            ++steps;
            const int r = 1 + k / (n - 1), c = 1 + k % (n - 1);
            auto& opts = options[static_cast<size_t>(k)];
            if (chosen[static_cast<size_t>(k)] < 0 && pos[static_cast<size_t>(k)] == 0) {
                opts.clear();
                uint32_t avail = ~(rows[static_cast<size_t>(r)] | cols[static_cast<size_t>(c)]) & full;
                for (int v = 0; v < n; ++v)
                    if (avail & (1u << v)) opts.push_back(v);
                std::shuffle(opts.begin(), opts.end(), rng);
            }
            if (chosen[static_cast<size_t>(k)] >= 0) {
                int v = chosen[static_cast<size_t>(k)];
                rows[static_cast<size_t>(r)] &= ~(1u << v);
                cols[static_cast<size_t>(c)] &= ~(1u << v);
                chosen[static_cast<size_t>(k)] = -1;
            }
            if (pos[static_cast<size_t>(k)] < opts.size()) {
                int v = opts[pos[static_cast<size_t>(k)]++];
                chosen[static_cast<size_t>(k)] = v;
                rows[static_cast<size_t>(r)] |= 1u << v;
                cols[static_cast<size_t>(c)] |= 1u << v;
                ++k;
            } else {
                pos[static_cast<size_t>(k)] = 0;
                --k;
                if (k < 0) break;
            }
        }
        if (k == m) {
            std::vector<int> table(static_cast<size_t>(n) * n);
            for (int c = 0; c < n; ++c) table[static_cast<size_t>(c)] = c;
            for (int r = 1; r < n; ++r) table[static_cast<size_t>(r) * n] = r;
            for (int i = 0; i < m; ++i)
                table[static_cast<size_t>(1 + i / (n - 1)) * n + (1 + i % (n - 1))] =
                    chosen[static_cast<size_t>(i)];
            return loop_from_flat(n, std::move(table));
        }
    }
    throw GenerationFailure("random table generation exceeded restart budget");
}

}  // namespace loopforge
