#include "loopforge/isomorphy.hpp"

#include <algorithm>
#include <array>

namespace loopforge {

namespace {

// Isomorphism-invariant fingerprint of an element: cycle data of its
// translations plus cheap pointwise facts. Images must have equal
// fingerprints, which prunes most of the n! space.
using Fingerprint = std::array<long, 7>;

Fingerprint fingerprint(const FiniteLoop& L, int x) {
    const Permutation lx = L.left_translation(x);
    const Permutation rx = L.right_translation(x);
    return {lx.order(),
            rx.order(),
            lx.fixed_points(),
            rx.fixed_points(),
            L.mul(x, x) == x,
            L.rho(x) == x,
            L.rho(x) == L.lambda(x)};
}

struct IsoSearcher {
    const FiniteLoop& G;
    const FiniteLoop& H;
    int n;
    bool collect_all = false;
    std::vector<int> map;        // G element -> H element, -1 unassigned
    std::vector<bool> used;      // H side
    std::vector<int> assigned;   // G elements in assignment order
    std::vector<std::vector<int>> candidates;  // per G element
    std::vector<Permutation> found;

    IsoSearcher(const FiniteLoop& g, const FiniteLoop& h) : G(g), H(h), n(g.order()) {}

    bool prepare() {
        if (G.order() != H.order()) return false;
        if (G.j_rho().cycle_type() != H.j_rho().cycle_type()) return false;

        std::vector<Fingerprint> fg(static_cast<size_t>(n)), fh(static_cast<size_t>(n));
        for (int x = 0; x < n; ++x) {
            fg[static_cast<size_t>(x)] = fingerprint(G, x);
            fh[static_cast<size_t>(x)] = fingerprint(H, x);
        }
        auto sg = fg, sh = fh;
        std::sort(sg.begin(), sg.end());
        std::sort(sh.begin(), sh.end());
        if (sg != sh) return false;

        candidates.assign(static_cast<size_t>(n), {});
        for (int x = 0; x < n; ++x) {
            if (x == G.identity()) {
                candidates[static_cast<size_t>(x)] = {H.identity()};
                continue;
            }
            for (int h = 0; h < n; ++h)
                if (h != H.identity() && fg[static_cast<size_t>(x)] == fh[static_cast<size_t>(h)])
                    candidates[static_cast<size_t>(x)].push_back(h);
            if (candidates[static_cast<size_t>(x)].empty()) return false;
        }

        map.assign(static_cast<size_t>(n), -1);
        used.assign(static_cast<size_t>(n), false);
        assigned.clear();
        assigned.push_back(G.identity());  // assignment order: identity, then 0,1,...
        for (int x = 0; x < n; ++x)
            if (x != G.identity()) assigned.push_back(x);
        return true;
    }

    bool consistent(int x) const {
        for (int y : assigned) {
            if (map[static_cast<size_t>(y)] < 0) break;
            int p = G.mul(x, y);
            if (map[static_cast<size_t>(p)] >= 0 &&
                H.mul(map[static_cast<size_t>(x)], map[static_cast<size_t>(y)]) != map[static_cast<size_t>(p)])
                return false;
            p = G.mul(y, x);
            if (map[static_cast<size_t>(p)] >= 0 &&
                H.mul(map[static_cast<size_t>(y)], map[static_cast<size_t>(x)]) != map[static_cast<size_t>(p)])
                return false;
        }
        return true;
    }

    bool search(size_t k) {
        if (k == assigned.size()) {
            Permutation a(map);
            IsotopismTriple t{a, a, a};
            if (!is_isotopism(G, H, t)) throw std::logic_error("isomorphism search produced a non-isomorphism");
            found.push_back(std::move(a));
            return !collect_all;
        }
        const int x = assigned[k];
        for (int h : candidates[static_cast<size_t>(x)]) {
            if (used[static_cast<size_t>(h)]) continue;
            map[static_cast<size_t>(x)] = h;
            used[static_cast<size_t>(h)] = true;
            if (consistent(x) && search(k + 1)) return true;
            map[static_cast<size_t>(x)] = -1;
            used[static_cast<size_t>(h)] = false;
        }
        return false;
    }
};

}  // namespace

std::optional<Permutation> find_isomorphism(const FiniteLoop& G, const FiniteLoop& H) {
    IsoSearcher s(G, H);
    if (!s.prepare()) return std::nullopt;
    s.search(0);
    if (s.found.empty()) return std::nullopt;
    return s.found.front();
}

std::vector<Permutation> automorphisms(const FiniteLoop& G) {
    IsoSearcher s(G, G);
    s.collect_all = true;
    if (!s.prepare()) throw std::logic_error("loop not isomorphic to itself; fingerprint bug");
    s.search(0);
    std::sort(s.found.begin(), s.found.end());
    // group axioms on the collected set
    for (const auto& p : s.found) {
        if (!std::binary_search(s.found.begin(), s.found.end(), p.inverse()))
            throw std::logic_error("automorphism set not closed under inversion");
        for (const auto& q : s.found)
            if (!std::binary_search(s.found.begin(), s.found.end(), p * q))
                throw std::logic_error("automorphism set not closed under composition");
    }
    return s.found;
}

std::optional<IsotopismTriple> are_isotopic(const FiniteLoop& G, const FiniteLoop& H) {
    if (G.order() != H.order()) return std::nullopt;
    const int n = G.order();
    for (int f = 0; f < n; ++f)
        for (int g = 0; g < n; ++g) {
            FiniteLoop K = principal_isotope(G, f, g);
            auto a = find_isomorphism(K, H);
            if (!a) continue;
            // Compose G --(R_g, L_f, I)--> K --(A, A, A)--> H.
            IsotopismTriple t{G.right_translation(g) * *a, G.left_translation(f) * *a, *a};
            if (!is_isotopism(G, H, t)) throw std::logic_error("composed isotopism failed to verify");
            return t;
        }
    return std::nullopt;
}

CanonicalForm canonical_form(const FiniteLoop& G) {
    const int n = G.order();
    const int e = G.identity();

    std::vector<int> others;
    for (int x = 0; x < n; ++x)
        if (x != e) others.push_back(x);

    std::vector<int> best_table;
    std::vector<int> best_sigma;  // original -> canonical
    std::vector<int> sigma_inv(static_cast<size_t>(n)), sigma(static_cast<size_t>(n));
    std::vector<int> table(static_cast<size_t>(n) * n);

    do {
        sigma_inv[0] = e;
        for (int k = 1; k < n; ++k) sigma_inv[static_cast<size_t>(k)] = others[static_cast<size_t>(k - 1)];
        for (int k = 0; k < n; ++k) sigma[static_cast<size_t>(sigma_inv[static_cast<size_t>(k)])] = k;

        // Build the relabeled table row-major, abandoning as soon as it
        // compares worse than the best so far.
        bool viable = true;
        bool strictly_better = best_table.empty();
        for (int u = 0; u < n && viable; ++u) {
            for (int v = 0; v < n; ++v) {
                int w = sigma[static_cast<size_t>(G.mul(sigma_inv[static_cast<size_t>(u)],
                                                        sigma_inv[static_cast<size_t>(v)]))];
                size_t idx = static_cast<size_t>(u) * n + v;
                table[idx] = w;
                if (!strictly_better) {
                    if (w > best_table[idx]) {
                        viable = false;
                        break;
                    }
                    if (w < best_table[idx]) strictly_better = true;
                }
            }
        }
        if (viable && strictly_better) {
            best_table = table;
            best_sigma = sigma;
        }
    } while (std::next_permutation(others.begin(), others.end()));

    CanonicalForm cf{loop_from_flat(n, best_table), Permutation(best_sigma)};
    if (cf.loop.identity() != 0) throw std::logic_error("canonical identity must be 0");
    return cf;
}

FiniteLoop relabeled(const FiniteLoop& L, const Permutation& sigma) {
    if (sigma.degree() != L.order()) throw DegreeMismatch("relabeling degree mismatch");
    const int n = L.order();
    std::vector<int> table(static_cast<size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            table[static_cast<size_t>(sigma[x]) * n + sigma[y]] = sigma[L.mul(x, y)];
    return loop_from_flat(n, std::move(table));
}

}  // namespace loopforge
