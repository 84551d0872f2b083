#include "loopforge/properties.hpp"

#include <algorithm>
#include <set>

namespace loopforge {

nlohmann::json PropertyReport::to_json() const {
    nlohmann::json j{{"property", property}, {"holds", holds}};
    if (holds)
        j["witness"] = nullptr;
    else
        j["witness"] = witness;
    return j;
}

PropertyReport has_wip(const FiniteLoop& L, WipMethod method) {
    PropertyReport r;
    r.property = "wip";
    const int n = L.order();
    if (method == WipMethod::definitional) {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (L.mul(y, L.rho(L.mul(x, y))) != L.rho(x)) {
                    r.holds = false;
                    r.witness = {x, y};
                    return r;
                }
    } else {
        // R_y J_rho L_y = J_rho, evaluated as a permutation equality per y.
        for (int y = 0; y < n; ++y) {
            const Permutation composite = L.right_translation(y) * L.j_rho() * L.left_translation(y);
            if (composite == L.j_rho()) continue;
            for (int x = 0; x < n; ++x)
                if (composite[x] != L.j_rho()[x]) {
                    r.holds = false;
                    r.witness = {x, y};
                    return r;
                }
        }
    }
    return r;
}

PropertyReport wip_lambda_form(const FiniteLoop& L) {
    PropertyReport r;
    r.property = "wip-lambda";
    const int n = L.order();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (L.mul(L.lambda(L.mul(x, y)), x) != L.lambda(y)) {
                r.holds = false;
                r.witness = {x, y};
                return r;
            }
    return r;
}

PropertyReport wip_implication_form(const FiniteLoop& L) {
    PropertyReport r;
    r.property = "wip-implication";
    const int n = L.order();
    const int e = L.identity();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (L.mul(L.mul(x, y), z) == e && L.mul(x, L.mul(y, z)) != e) {
                    r.holds = false;
                    r.witness = {x, y, z};
                    return r;
                }
    return r;
}

PropertyReport wip_translational_lambda(const FiniteLoop& L) {
    PropertyReport r;
    r.property = "wip-translational-lambda";
    const int n = L.order();
    for (int x = 0; x < n; ++x) {
        const Permutation composite = L.left_translation(x) * L.j_lambda() * L.right_translation(x);
        if (composite == L.j_lambda()) continue;
        for (int y = 0; y < n; ++y)
            if (composite[y] != L.j_lambda()[y]) {
                r.holds = false;
                r.witness = {y, x};
                return r;
            }
    }
    return r;
}

PropertyReport has_cip(const FiniteLoop& L) {
    PropertyReport r;
    r.property = "cip";
    const int n = L.order();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (L.mul(L.mul(x, y), L.rho(x)) != y) {
                r.holds = false;
                r.witness = {x, y};
                return r;
            }
    return r;
}

PropertyReport has_lip(const FiniteLoop& L) {
    PropertyReport r;
    r.property = "lip";
    const int n = L.order();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (L.mul(L.lambda(x), L.mul(x, y)) != y) {
                r.holds = false;
                r.witness = {x, y};
                return r;
            }
    return r;
}

PropertyReport has_rip(const FiniteLoop& L) {
    PropertyReport r;
    r.property = "rip";
    const int n = L.order();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (L.mul(L.mul(x, y), L.rho(y)) != x) {
                r.holds = false;
                r.witness = {x, y};
                return r;
            }
    return r;
}

PropertyReport has_ip(const FiniteLoop& L) {
    PropertyReport r;
    r.property = "ip";
    PropertyReport lip = has_lip(L);
    if (!lip.holds) {
        r.holds = false;
        r.witness = lip.witness;
        return r;
    }
    PropertyReport rip = has_rip(L);
    if (!rip.holds) {
        r.holds = false;
        r.witness = rip.witness;
    }
    return r;
}

PropertyReport m_inverse_check(const FiniteLoop& L, int m) {
    PropertyReport r;
    r.property = "m-inverse:" + std::to_string(m);
    const Permutation jm = L.j_rho().pow(m);
    const Permutation jm1 = L.j_rho().pow(m + 1);
    const int n = L.order();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (L.mul(jm[L.mul(x, y)], jm1[x]) != jm[y]) {
                r.holds = false;
                r.witness = {x, y};
                return r;
            }
    return r;
}

std::vector<int> centrum(const FiniteLoop& L) {
    std::vector<int> out;
    const int n = L.order();
    for (int x = 0; x < n; ++x) {
        bool central = true;
        for (int y = 0; y < n && central; ++y) central = L.mul(x, y) == L.mul(y, x);
        if (central) out.push_back(x);
    }
    return out;
}

Nuclei nuclei(const FiniteLoop& L) {
    Nuclei ns;
    const int n = L.order();
    for (int a = 0; a < n; ++a) {
        bool left = true, middle = true, right = true;
        for (int x = 0; x < n && (left || middle || right); ++x)
            for (int y = 0; y < n; ++y) {
                if (left && L.mul(L.mul(a, x), y) != L.mul(a, L.mul(x, y))) left = false;
                if (middle && L.mul(L.mul(x, a), y) != L.mul(x, L.mul(a, y))) middle = false;
                if (right && L.mul(L.mul(x, y), a) != L.mul(x, L.mul(y, a))) right = false;
            }
        if (left) ns.left.push_back(a);
        if (middle) ns.middle.push_back(a);
        if (right) ns.right.push_back(a);
    }
    return ns;
}

std::string to_string(TriFlag f) {
    switch (f) {
        case TriFlag::holds: return "true";
        case TriFlag::fails: return "false";
        default: return "n/a";
    }
}

nlohmann::json ElementTraits::to_json() const {
    return nlohmann::json{
        {"element", element},
        {"flexible", flexible},
        {"left_alternative", left_alternative},
        {"right_alternative", right_alternative},
        {"centrum", centrum},
        {"rho_aipe", to_string(rho_aipe)},
        {"lambda_aipe", to_string(lambda_aipe)},
        {"rho_aaipe", to_string(rho_aaipe)},
        {"lambda_aaipe", to_string(lambda_aaipe)},
    };
}

ElementTraits element_traits(const FiniteLoop& L, int x) {
    if (x < 0 || x >= L.order()) throw std::out_of_range("element index out of range");
    ElementTraits t;
    t.element = x;
    const int n = L.order();

    t.flexible = t.left_alternative = t.right_alternative = t.centrum = true;
    for (int y = 0; y < n; ++y) {
        if (L.mul(x, L.mul(y, x)) != L.mul(L.mul(x, y), x)) t.flexible = false;
        if (L.mul(L.mul(x, x), y) != L.mul(x, L.mul(x, y))) t.left_alternative = false;
        if (L.mul(y, L.mul(x, x)) != L.mul(L.mul(y, x), x)) t.right_alternative = false;
        if (L.mul(x, y) != L.mul(y, x)) t.centrum = false;
    }

    // The identities below quantify over all y, so every element's inverse is
    // referenced; they apply exactly when inverses are two-sided throughout.
    if (!L.has_two_sided_inverses()) return t;

    const Permutation& inv = L.j_rho();
    bool rho_aipe = true, lam_aipe = true, rho_aaipe = true, lam_aaipe = true;
    for (int y = 0; y < n; ++y) {
        if (inv[L.mul(y, x)] != L.mul(inv[y], inv[x])) rho_aipe = false;
        if (inv[L.mul(x, y)] != L.mul(inv[x], inv[y])) lam_aipe = false;
        if (inv[L.mul(y, x)] != L.mul(inv[x], inv[y])) rho_aaipe = false;
        if (inv[L.mul(x, y)] != L.mul(inv[y], inv[x])) lam_aaipe = false;
    }
    t.rho_aipe = rho_aipe ? TriFlag::holds : TriFlag::fails;
    t.lambda_aipe = lam_aipe ? TriFlag::holds : TriFlag::fails;
    t.rho_aaipe = rho_aaipe ? TriFlag::holds : TriFlag::fails;
    t.lambda_aaipe = lam_aaipe ? TriFlag::holds : TriFlag::fails;
    return t;
}

bool is_aip_loop(const FiniteLoop& L) {
    if (!L.has_two_sided_inverses()) return false;
    const Permutation& inv = L.j_rho();
    const int n = L.order();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (inv[L.mul(x, y)] != L.mul(inv[x], inv[y])) return false;
    return true;
}

WeakInverseFlags is_weak_inverse_permutation(const FiniteLoop& L, const Permutation& alpha) {
    if (alpha.degree() != L.order())
        throw DegreeMismatch("permutation degree does not match loop order");
    WeakInverseFlags f;
    f.right = L.j_rho() == alpha * L.j_rho() * alpha;
    f.left = L.j_lambda() == alpha * L.j_lambda() * alpha;
    if (f.right != f.left)
        throw std::logic_error("weak right/left inverse flags diverged; this cannot happen");
    return f;
}

std::vector<Permutation> weak_inverse_closure(const FiniteLoop& L,
                                              const std::vector<Permutation>& generators) {
    for (const auto& g : generators)
        if (!is_weak_inverse_permutation(L, g).both())
            throw NotWeakInverse("generator is not a weak inverse permutation");
    for (size_t i = 0; i < generators.size(); ++i)
        for (size_t j = i + 1; j < generators.size(); ++j)
            if (!generators[i].commutes_with(generators[j]))
                throw NotCommuting("generators " + std::to_string(i) + " and " + std::to_string(j) +
                                   " do not commute");

    std::set<Permutation> closure;
    closure.insert(Permutation::identity(L.order()));
    std::vector<Permutation> frontier(closure.begin(), closure.end());
    for (const auto& g : generators)
        if (closure.insert(g).second) frontier.push_back(g);
    while (!frontier.empty()) {
        Permutation p = frontier.back();
        frontier.pop_back();
        std::vector<Permutation> next{p.inverse()};
        for (const auto& q : closure) {
            next.push_back(p * q);
            next.push_back(q * p);
        }
        for (auto& q : next)
            if (closure.insert(q).second) frontier.push_back(q);
    }

    std::vector<Permutation> out(closure.begin(), closure.end());
    for (const auto& p : out) {
        if (!is_weak_inverse_permutation(L, p).both())
            throw Error("closure left the weak inverse permutations");
        for (const auto& q : out)
            if (!p.commutes_with(q)) throw Error("closure is not abelian");
    }
    return out;
}

}  // namespace loopforge
