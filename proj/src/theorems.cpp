#include "loopforge/theorems.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "loopforge/enumeration.hpp"
#include "loopforge/isomorphy.hpp"
#include "loopforge/isotopy.hpp"
#include "loopforge/properties.hpp"

namespace loopforge {

namespace {

using nlohmann::json;

constexpr long kWitnessCap = 3;
constexpr long kOrdinalStride = 1'000'000;  // sub-instances per loop ordinal
constexpr long kScanBlock = 4096;

// ---------------------------------------------------------------------------
// accumulation

struct ClaimAccum {
    long seen = 0;
    long hyp = 0;
    long violations = 0;
    bool truncated = false;
    std::vector<std::pair<std::string, long>> stages;
    std::vector<std::pair<long, json>> wits;  // (ordinal, bundle)
    std::map<std::string, long> detail_counters;

    void ensure_stages(std::initializer_list<const char*> names) {
        for (const char* n : names) stages.emplace_back(n, 0);
    }
    void bump(const std::string& name, long d = 1) {
        for (auto& [k, v] : stages)
            if (k == name) {
                v += d;
                return;
            }
        stages.emplace_back(name, d);
    }
    void detail(const std::string& key, long d = 1) { detail_counters[key] += d; }
    void witness(long ordinal, json w) {
        ++violations;
        wits.emplace_back(ordinal, std::move(w));
    }
    void merge(const ClaimAccum& o) {
        seen += o.seen;
        hyp += o.hyp;
        violations += o.violations;
        truncated = truncated || o.truncated;
        for (const auto& [k, v] : o.stages) bump(k, v);
        for (const auto& w : o.wits) wits.push_back(w);
        for (const auto& [k, v] : o.detail_counters) detail_counters[k] += v;
    }
    void finalize() {
        std::sort(wits.begin(), wits.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        if (static_cast<long>(wits.size()) > kWitnessCap) wits.resize(kWitnessCap);
    }
};

struct Outcome {
    bool hypothesis = false;
    bool conclusion = true;
};

// ---------------------------------------------------------------------------
// shared scan drivers

template <typename Fn>  // Fn: void(const FiniteLoop&, int order, long ordinal, ClaimAccum&)
void scan_loops(const ScanScope& sc, int order_cap, ClaimAccum& acc, Fn per_loop) {
    long ordinal = 0;
    const int lo = std::max(1, sc.min_order);
    const int hi = std::min(sc.max_order, order_cap);
    for (int n = lo; n <= hi; ++n) {
        LoopEnumerator cursor(n, true);
        std::vector<FiniteLoop> block;
        for (;;) {
            block.clear();
            while (static_cast<long>(block.size()) < kScanBlock) {
                auto L = cursor.next();
                if (!L) break;
                block.push_back(std::move(*L));
            }
            if (block.empty()) break;
            const int T = std::max(1, sc.threads);
            if (T == 1 || block.size() < 64) {
                for (size_t i = 0; i < block.size(); ++i)
                    per_loop(block[i], n, ordinal + static_cast<long>(i), acc);
            } else {
                std::vector<ClaimAccum> locals(static_cast<size_t>(T));
                std::vector<std::thread> workers;
                for (int w = 0; w < T; ++w)
                    workers.emplace_back([&, w] {
                        for (size_t i = static_cast<size_t>(w); i < block.size(); i += static_cast<size_t>(T))
                            per_loop(block[i], n, ordinal + static_cast<long>(i),
                                     locals[static_cast<size_t>(w)]);
                    });
                for (auto& t : workers) t.join();
                for (const auto& l : locals) acc.merge(l);
            }
            ordinal += static_cast<long>(block.size());
        }
    }
}

json loop_json(const FiniteLoop& L) { return json(L.rows()); }

json pair_bundle(const FiniteLoop& G, int f, int g) {
    return json{{"loop", loop_json(G)}, {"f", f}, {"g", g}};
}

// Record one instance outcome; the witness bundle is only built on violation.
template <typename MakeBundle>
void record(ClaimAccum& acc, long ordinal, const Outcome& o, MakeBundle make_bundle) {
    ++acc.seen;
    if (!o.hypothesis) return;
    ++acc.hyp;
    if (!o.conclusion) acc.witness(ordinal, make_bundle());
}

// Isomorphic pairs of order <= cap sharing a canonical form, filtered by a
// per-representative predicate. A = relabeling_i * relabeling_j^{-1} is an
// isomorphism L_i -> L_j by construction.
template <typename Filter, typename Fn>
// Fn: void(const FiniteLoop& Gi, const FiniteLoop& Gj, const Permutation& A, long ordinal, ClaimAccum&)
void scan_isomorphic_pairs(const ScanScope& sc, int order_cap, bool include_self,
                           ClaimAccum& acc, Filter keep, Fn per_pair) {
    long ordinal = 0;
    const int lo = std::max(1, sc.min_order);
    const int hi = std::min(sc.max_order, order_cap);
    for (int n = lo; n <= hi; ++n) {
        std::vector<FiniteLoop> loops = enumerate_loops(n, true);
        std::map<std::vector<int>, std::vector<size_t>> classes;
        std::vector<Permutation> to_canonical(loops.size());
        std::vector<std::vector<int>> keys(loops.size());
        for (size_t i = 0; i < loops.size(); ++i) {
            if (!keep(loops[i])) continue;
            CanonicalForm cf = canonical_form(loops[i]);
            to_canonical[i] = cf.relabeling;
            keys[i] = cf.loop.flat_table();
            classes[keys[i]].push_back(i);
        }
        for (auto& [key, members] : classes) {
            for (size_t a = 0; a < members.size(); ++a)
                for (size_t b = 0; b < members.size(); ++b) {
                    if (!include_self && a == b) continue;
                    const size_t i = members[a], j = members[b];
                    Permutation A = to_canonical[i] * to_canonical[j].inverse();
                    per_pair(loops[i], loops[j], A, ordinal++, acc);
                }
        }
    }
}

// ---------------------------------------------------------------------------
// per-pair context for f,g-principal isotopes

struct PairCtx {
    const FiniteLoop& G;
    int f, g;
    FiniteLoop H;
    IsotopismTriple t;
    TConditionReport rep;

    PairCtx(const FiniteLoop& G_, int f_, int g_)
        : G(G_), f(f_), g(g_), H(principal_isotope(G_, f_, g_)), t(principal_triple(G_, f_, g_)),
          rep(t_conditions(G_, H, t)) {}
};

bool wip_of(const FiniteLoop& L) { return has_wip(L).holds; }

// thm3.1b transfer equations: J_l R_x J_r B = C J'_l R'_{xA} J'_r and the dual, all x.
bool transfer_equations_hold(const FiniteLoop& G, const FiniteLoop& H, const IsotopismTriple& t) {
    const Permutation& jr = G.j_rho();
    const Permutation& jl = G.j_lambda();
    const Permutation& Jr = H.j_rho();
    const Permutation& Jl = H.j_lambda();
    for (int x = 0; x < G.order(); ++x) {
        if (!((jl * G.right_translation(x) * jr * t.B) ==
              (t.C * Jl * H.right_translation(t.A[x]) * Jr)))
            return false;
        if (!((jr * G.left_translation(x) * jl * t.A) ==
              (t.C * Jr * H.left_translation(t.B[x]) * Jl)))
            return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// claim cores (one per registered claim, shared by scans / sampling / recheck)

Outcome lem21_core(const FiniteLoop& L, const Permutation& alpha, const Permutation& beta) {
    Outcome o;
    o.hypothesis = is_weak_inverse_permutation(L, alpha).both() &&
                   is_weak_inverse_permutation(L, beta).both() && alpha.commutes_with(beta);
    if (!o.hypothesis) return o;
    try {
        weak_inverse_closure(L, {alpha, beta});
    } catch (const Error&) {
        o.conclusion = false;
    }
    return o;
}

Outcome lem22_core(const FiniteLoop& L) {
    Outcome o;
    o.hypothesis = true;
    const bool impl = wip_implication_form(L).holds;
    const bool rho = has_wip(L, WipMethod::definitional).holds;
    const bool lam = wip_lambda_form(L).holds;
    o.conclusion = impl == rho && rho == lam;
    return o;
}

Outcome lem23_core(const FiniteLoop& L) {
    Outcome o;
    o.hypothesis = true;
    const bool impl = wip_implication_form(L).holds;
    const bool tr = has_wip(L, WipMethod::translational).holds;
    const bool tl = wip_translational_lambda(L).holds;
    o.conclusion = impl == tr && tr == tl;
    return o;
}

Outcome thm31a_core(const PairCtx& P, bool wip_g) {
    Outcome o;
    o.hypothesis = P.rep.t();
    if (o.hypothesis) o.conclusion = wip_g == wip_of(P.H);
    return o;
}

Outcome thm31b_core(const FiniteLoop& G, int f, int g, const std::optional<Permutation>& post,
                    bool wip_g) {
    Outcome o;
    FiniteLoop H0 = principal_isotope(G, f, g);
    IsotopismTriple t = principal_triple(G, f, g);
    FiniteLoop H = H0;
    if (post) {
        t = IsotopismTriple{t.A * *post, t.B * *post, t.C * *post};
        H = apply_isotopism(G, t).as_loop();
    }
    o.hypothesis = wip_g && wip_of(H);
    if (o.hypothesis) o.conclusion = transfer_equations_hold(G, H, t);
    return o;
}

Outcome cor31_core(const PairCtx& P, bool wip_g) {
    Outcome o;
    o.hypothesis = wip_g && P.rep.t();
    if (!o.hypothesis) return o;
    const Permutation alpha = P.t.C * P.t.A.inverse();  // R_g^{-1} for principal triples
    const Permutation beta = P.t.C * P.t.B.inverse();   // L_f^{-1}
    const bool jj = (P.H.j_rho() == P.H.j_lambda()) == (P.G.j_rho() == P.G.j_lambda());
    o.conclusion = wip_of(P.H) && is_weak_inverse_permutation(P.G, alpha).both() &&
                   is_weak_inverse_permutation(P.G, beta).both() && jj;
    return o;
}

Outcome thm32_core(const PairCtx& P, bool wip_g, bool* mechanism_applied) {
    Outcome o;
    o.hypothesis = P.rep.t() && wip_g && wip_of(P.H);
    if (mechanism_applied) *mechanism_applied = false;
    if (!o.hypothesis) return o;
    o.conclusion = find_isomorphism(P.G, P.H).has_value();
    if (P.t.A == P.t.C && P.t.A == P.t.B) {
        if (mechanism_applied) *mechanism_applied = true;
        if (!is_isotopism(P.G, P.H, IsotopismTriple{P.t.A, P.t.A, P.t.A}))
            o.conclusion = false;  // A=B=C yet not an isomorphism would refute the mechanism
    }
    return o;
}

// lem3.2 identity groups (1)-(4). The fourth identity of group (2) is
// taken with the isotope translation L'_f (the form the derivation yields);
// the raw L_f variant is reported alongside.
bool lem32_items(const PairCtx& P, bool& literal_2d) {
    const FiniteLoop& G = P.G;
    const FiniteLoop& H = P.H;
    const Permutation& jr = G.j_rho();
    const Permutation& jl = G.j_lambda();
    const Permutation& Jr = H.j_rho();
    const Permutation& Jl = H.j_lambda();
    const Permutation Lf = G.left_translation(P.f);
    const Permutation Rg = G.right_translation(P.g);
    const Permutation Rf = G.right_translation(P.f);
    const Permutation Lg = G.left_translation(P.g);
    const Permutation Lpf = H.left_translation(P.f);
    const Permutation Rpg = H.right_translation(P.g);

    bool ok = true;
    ok = ok && (jl * Rf * jr) == Lf.inverse();
    ok = ok && (jr * Lg * jl) == Rg.inverse();
    ok = ok && (Jl * Rpg * Jr) == Lf;
    ok = ok && (Jr * Lpf * Jl) == Rg;

    ok = ok && (jr * Lf) == (Rf.inverse() * jr);
    ok = ok && (Jr * Lf) == (Rpg * Jr);
    ok = ok && (jl * Rg) == (Lg.inverse() * jl);
    ok = ok && (Jl * Rg) == (Lpf * Jl);
    literal_2d = (Jl * Rg) == (Lf * Jl);

    ok = ok && (jl * Rf.inverse() * jr) == (Jl * Rpg * Jr);
    ok = ok && (jr * Lg.inverse() * jl) == (Jr * Lpf * Jl);

    ok = ok && Rg == (jr * Lg.inverse() * jl);
    ok = ok && Lf == (jl * Rf.inverse() * jr);
    ok = ok && Rg == (Jr * Lpf * Jl);
    ok = ok && Lf == (Jl * Rpg * Jr);
    return ok;
}

Outcome lem32_core(const PairCtx& P, bool wip_g, bool* literal_2d, bool* c34_applies) {
    Outcome o;
    o.hypothesis = wip_g && wip_of(P.H);
    if (literal_2d) *literal_2d = true;
    if (c34_applies) *c34_applies = false;
    if (!o.hypothesis) return o;
    bool lit = true;
    o.conclusion = lem32_items(P, lit);
    if (literal_2d) *literal_2d = lit;
    if (P.rep.t2() || P.rep.t3()) {
        if (c34_applies) *c34_applies = true;
        // triple rewrite under T2/T3: (R_g, L_f, I) = (J_r J'_l, J_l J'_r, I).
        const bool rewrite = P.G.right_translation(P.g) == (P.G.j_rho() * P.H.j_lambda()) &&
                             P.G.left_translation(P.f) == (P.G.j_lambda() * P.H.j_rho());
        o.conclusion = o.conclusion && rewrite;
    }
    return o;
}

Outcome cor32_core(const PairCtx& P, bool wip_g) {
    Outcome o;
    o.hypothesis = wip_g;
    if (!o.hypothesis) return o;
    const bool wip_h = wip_of(P.H);
    bool ok = true;
    if (P.rep.t()) ok = ok && wip_h;
    if ((P.rep.t1 && P.rep.t21) || (P.rep.t1 && P.rep.t22))
        if (wip_h) ok = ok && P.rep.t();
    if (P.rep.t() && wip_h)
        ok = ok && is_weak_inverse_permutation(P.G, P.G.left_translation(P.f)).both() &&
             is_weak_inverse_permutation(P.G, P.G.right_translation(P.g)).both();
    o.conclusion = ok;
    return o;
}

Outcome cor33_core(const PairCtx& P, bool wip_g) {
    Outcome o;
    o.hypothesis = wip_g;
    if (!o.hypothesis) return o;
    const bool wip_h = wip_of(P.H);
    bool ok = true;
    if (P.rep.t()) ok = ok && wip_h;
    if (wip_h) ok = ok && transfer_equations_hold(P.G, P.H, P.t);
    o.conclusion = ok;
    return o;
}

Outcome lem33_core(const FiniteLoop& G, int f1, int g1, int f2, int g2, bool wip_g) {
    Outcome o;
    if (f1 == f2 && g1 == g2) return o;
    if (!wip_g) return o;
    PairCtx p1(G, f1, g1), p2(G, f2, g2);
    o.hypothesis = p1.rep.t2() && p2.rep.t2();
    if (o.hypothesis) o.conclusion = !(p1.H.j_rho() == p2.H.j_rho());
    return o;
}

// lem3.4 hypothesis: WIPL with the full T condition, or the T1+T21/T22
// route with a WIP isotope.
bool lem34_hypothesis(const PairCtx& P, bool wip_g) {
    if (!wip_g) return false;
    if (P.rep.t()) return true;
    return P.rep.t1 && (P.rep.t21 || P.rep.t22) && wip_of(P.H);
}

bool lem34_item(const PairCtx& P, char item) {
    const FiniteLoop& G = P.G;
    const int n = G.order(), f = P.f, g = P.g, e = G.identity();
    switch (item) {
        case 'a': {
            for (int x = 0; x < n; ++x)
                if (G.mul(x, g) != G.mul(f, x)) return false;
            for (int y = 0; y < n; ++y)
                if (G.mul(f, y) != G.mul(y, f) || G.mul(g, y) != G.mul(y, g)) return false;
            return true;
        }
        case 'b': {
            for (int x = 0; x < n; ++x)
                if (P.H.rho(x) != G.mul(f, G.rho(x))) return false;
            return true;
        }
        case 'c': {
            for (int x = 0; x < n; ++x)
                if (P.H.lambda(x) != G.mul(G.lambda(x), g)) return false;
            return true;
        }
        case 'd': {
            const int gg = G.mul(g, g), ff = G.mul(f, f), fg = G.mul(f, g), gf = G.mul(g, f);
            return gg == ff && ff == fg && fg == gf;
        }
        case 'e':
            return P.H.rho(f) == e && P.H.lambda(g) == e;
        default:
            throw std::logic_error("bad item");
    }
}

Outcome lem34_core(const PairCtx& P, bool wip_g, char item /* 0 = all */) {
    Outcome o;
    o.hypothesis = lem34_hypothesis(P, wip_g);
    if (!o.hypothesis) return o;
    if (item)
        o.conclusion = lem34_item(P, item);
    else
        o.conclusion = lem34_item(P, 'a') && lem34_item(P, 'b') && lem34_item(P, 'c') &&
                       lem34_item(P, 'd') && lem34_item(P, 'e');
    return o;
}

Outcome cor35_core(const PairCtx& P, bool cip_g) {
    Outcome o;
    o.hypothesis = cip_g && P.rep.t() && is_aip_loop(P.H);
    if (!o.hypothesis) return o;
    bool ok = P.f == P.g;
    for (int x : {P.f, P.g}) {
        ElementTraits tr = element_traits(P.G, x);
        ok = ok && tr.left_alternative && tr.right_alternative && tr.flexible && tr.centrum;
    }
    o.conclusion = ok;
    return o;
}

Outcome rem32_core(const PairCtx& P, bool cip_g) {
    Outcome o;
    o.hypothesis = cip_g && P.rep.t();
    if (!o.hypothesis) return o;
    const FiniteLoop& G = P.G;
    const int n = G.order(), f = P.f, g = P.g;
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
        for (int y = 0; y < n && ok; ++y) {
            const int xy = G.mul(x, y);
            const int ref = G.mul(G.mul(x, g), G.mul(g, y));
            ok = ref == G.mul(G.mul(g, g), xy) && ref == G.mul(G.mul(xy, g), g) &&
                 ref == G.mul(G.mul(g, xy), g) && ref == G.mul(G.mul(f, f), xy) &&
                 ref == G.mul(f, G.mul(xy, g)) && ref == G.mul(f, G.mul(f, xy));
        }
        if (!ok) break;
        const int ref2 = G.mul(G.mul(x, g), g);
        ok = ref2 == G.mul(g, G.mul(g, x)) && ref2 == G.mul(G.mul(g, g), x) &&
             ref2 == G.mul(G.mul(g, x), g) && ref2 == G.mul(G.mul(f, f), x) &&
             ref2 == G.mul(f, G.mul(x, g)) && ref2 == G.mul(f, G.mul(f, x));
    }
    if (ok) {
        const Permutation Rg = G.right_translation(g), Lg = G.left_translation(g);
        const Permutation Lf = G.left_translation(f);
        const Permutation Lgg = G.left_translation(G.mul(g, g));
        const Permutation Lff = G.left_translation(G.mul(f, f));
        const IsotopismTriple triples[] = {
            {Rg, Lg, Lgg},     {Rg, Lg, Rg * Rg}, {Rg, Lg, Lg * Rg}, {Lf, Lg, Lf * Rg},
            {Lf, Lg, Lg * Lf}, {Lf, Lg, Rg * Lf}, {Lf, Lg, Lf * Lf}, {Lf, Lg, Lff},
        };
        for (const auto& t : triples) ok = ok && is_autotopism(G, t);
    }
    o.conclusion = ok;
    return o;
}

Outcome cor36_core(const PairCtx& P, bool wip_g) {
    Outcome o;
    o.hypothesis = wip_g && P.rep.t();
    if (!o.hypothesis) return o;
    const int eprime = P.H.identity();
    o.conclusion = P.H.rho(P.f) == P.H.lambda(P.g) && P.G.mul(P.g, P.g) == eprime &&
                   P.G.mul(P.f, P.f) == eprime;
    return o;
}

Outcome lem35_core(const FiniteLoop& L) {
    Outcome o;
    const bool lip = has_lip(L).holds, rip = has_rip(L).holds;
    o.hypothesis = lip || rip;
    if (!o.hypothesis) return o;
    const bool wip = wip_of(L);
    o.conclusion = (!lip || (wip == rip)) && (!rip || (wip == lip));
    return o;
}

Outcome thm33_core(const PairCtx& P, bool lip_g, bool rip_g, bool wip_g) {
    Outcome o;
    o.hypothesis = (lip_g || rip_g) && wip_g && wip_of(P.H);
    if (!o.hypothesis) return o;
    const ElementTraits tg = element_traits(P.G, P.g);
    const ElementTraits tf = element_traits(P.G, P.f);
    o.conclusion = tg.rho_aipe == TriFlag::holds && tf.lambda_aipe == TriFlag::holds &&
                   tg.centrum && tf.centrum;
    return o;
}

Outcome rem33_core(const FiniteLoop& L, int a, const std::string& side) {
    Outcome o;
    const Nuclei ns = nuclei(L);
    if (side == "rho") {
        o.hypothesis = has_rip(L).holds &&
                       std::find(ns.right.begin(), ns.right.end(), a) != ns.right.end();
    } else {
        o.hypothesis = has_lip(L).holds &&
                       std::find(ns.left.begin(), ns.left.end(), a) != ns.left.end();
    }
    if (!o.hypothesis) return o;
    const ElementTraits tr = element_traits(L, a);
    o.conclusion = tr.rho_aaipe == TriFlag::holds && tr.lambda_aaipe == TriFlag::holds;
    return o;
}

bool verified_isomorphism(const FiniteLoop& G, const FiniteLoop& H, const Permutation& A) {
    return G.order() == H.order() && A.degree() == G.order() &&
           is_isotopism(G, H, IsotopismTriple{A, A, A});
}

Outcome thm35_core(const FiniteLoop& G, const FiniteLoop& H, const Permutation& A) {
    Outcome o;
    o.hypothesis = has_cip(G).holds && verified_isomorphism(G, H, A);
    if (!o.hypothesis) return o;
    const Permutation C = G.j_lambda() * A;
    const Permutation D = G.j_rho() * A;
    o.conclusion = has_cip(H).holds && (C * H.j_rho()) == (G.j_rho() * C) &&
                   (D * H.j_lambda()) == (G.j_lambda() * D);
    return o;
}

Outcome cor37_core(const FiniteLoop& G, const FiniteLoop& H, const Permutation& A) {
    Outcome o;
    o.hypothesis = has_cip(G).holds && verified_isomorphism(G, H, A);
    if (o.hypothesis) o.conclusion = weak_t21(G, H, A);
    return o;
}

Outcome lem36_core(const FiniteLoop& G, const FiniteLoop& H, const Permutation& A) {
    Outcome o;
    o.hypothesis = has_cip(G).holds && verified_isomorphism(G, H, A);
    if (!o.hypothesis) return o;
    const Permutation C = G.j_lambda() * A;
    const Permutation D = G.j_rho() * A;
    bool ok = D == (G.j_rho().pow(2) * C) && C == (G.j_lambda().pow(2) * D);
    if (has_rip(G).holds || has_lip(G).holds)
        ok = ok && C == D && G.j_rho() == G.j_lambda();
    o.conclusion = ok;
    return o;
}

struct Thm34Extras {
    long unpaired_premises = 0;
    long unpaired_disjunction_failures = 0;
};

// Proof-construction replay: quadruples B_y = A R'_y A^-1, C_y = A L'_y A^-1,
// D = R_x, E = L_x, paired through y = xA. The unpaired all-(x,y) reading is
// tallied separately and not treated as a refutation.
Outcome thm34_core(const FiniteLoop& G, const FiniteLoop& H, const Permutation& A,
                   Thm34Extras* extras) {
    Outcome o;
    o.hypothesis = verified_isomorphism(G, H, A) && wip_of(G) && wip_of(H) && weak_t21(G, H, A);
    if (!o.hypothesis) return o;
    const int n = G.order();
    const Permutation ainv = A.inverse();
    const Permutation& jr = G.j_rho();
    std::vector<Permutation> B(static_cast<size_t>(n)), C(static_cast<size_t>(n));
    std::vector<Permutation> R(static_cast<size_t>(n)), Lx(static_cast<size_t>(n));
    for (int y = 0; y < n; ++y) {
        B[static_cast<size_t>(y)] = A * H.right_translation(y) * ainv;
        C[static_cast<size_t>(y)] = A * H.left_translation(y) * ainv;
    }
    for (int x = 0; x < n; ++x) {
        R[static_cast<size_t>(x)] = G.right_translation(x);
        Lx[static_cast<size_t>(x)] = G.left_translation(x);
    }
    bool ok = true;
    for (int x = 0; x < n; ++x) {
        const int y = A[x];
        const bool premise = (B[static_cast<size_t>(y)] * jr * C[static_cast<size_t>(y)]) ==
                             (R[static_cast<size_t>(x)] * jr * Lx[static_cast<size_t>(x)]);
        if (premise && !(B[static_cast<size_t>(y)] == R[static_cast<size_t>(x)] ||
                         C[static_cast<size_t>(y)] == Lx[static_cast<size_t>(x)]))
            ok = false;
    }
    o.conclusion = ok;
    if (extras) {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                const bool premise = (B[static_cast<size_t>(y)] * jr * C[static_cast<size_t>(y)]) ==
                                     (R[static_cast<size_t>(x)] * jr * Lx[static_cast<size_t>(x)]);
                if (!premise) continue;
                ++extras->unpaired_premises;
                if (!(B[static_cast<size_t>(y)] == R[static_cast<size_t>(x)] ||
                      C[static_cast<size_t>(y)] == Lx[static_cast<size_t>(x)]))
                    ++extras->unpaired_disjunction_failures;
            }
    }
    return o;
}

Outcome sec4_core(const FiniteLoop& L, int m) {
    Outcome o;
    o.hypothesis = true;
    const bool mi = m_inverse_check(L, m).holds;
    o.conclusion = mi == (m == -1 ? wip_of(L) : has_cip(L).holds);
    return o;
}

// ---------------------------------------------------------------------------
// claim registry

struct ClaimDef {
    std::string id;
    std::string description;
    int order_cap = kEnumerationCap;
    std::string scope_note;
    std::function<void(const ScanScope&, ClaimAccum&)> run;
    std::function<Outcome(const json&)> eval;        // witness recheck / random search
    std::function<json(std::mt19937_64&)> sample;    // random instance for find_counterexample
};

FiniteLoop loop_of(const json& j, const char* key = "loop") {
    return FiniteLoop::from_rows(j.at(key).get<std::vector<std::vector<int>>>());
}

int rand_order(std::mt19937_64& rng) { return 3 + static_cast<int>(rng() % 6); }  // 3..8

json sample_loop_only(std::mt19937_64& rng) {
    const int n = rand_order(rng);
    return json{{"loop", loop_json(random_loop(n, rng()))}};
}

json sample_loop_pair(std::mt19937_64& rng) {
    const int n = rand_order(rng);
    FiniteLoop L = random_loop(n, rng());
    return json{{"loop", loop_json(L)},
                {"f", static_cast<int>(rng() % static_cast<std::uint64_t>(n))},
                {"g", static_cast<int>(rng() % static_cast<std::uint64_t>(n))}};
}

Permutation random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> img(static_cast<size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation(std::move(img));
}

json sample_iso_pair(std::mt19937_64& rng) {
    const int n = rand_order(rng);
    FiniteLoop G = random_loop(n, rng());
    Permutation sigma = random_permutation(n, rng);
    FiniteLoop H = relabeled(G, sigma);
    return json{{"loop_g", loop_json(G)}, {"loop_h", loop_json(H)}, {"iso", sigma.image()}};
}

// Scan driver over all loops and all n^2 principal-isotope pairs; the lambda
// receives the pair context plus cached per-loop property flags.
struct LoopFlags {
    bool wip = false, cip = false, lip = false, rip = false;
};

template <typename Fn>  // Fn: Outcome(const PairCtx&, const LoopFlags&, ClaimAccum&, long ordinal)
std::function<void(const ScanScope&, ClaimAccum&)> pair_scan(int order_cap, Fn core) {
    return [order_cap, core](const ScanScope& sc, ClaimAccum& acc) {
        scan_loops(sc, order_cap, acc,
                   [core](const FiniteLoop& G, int /*n*/, long ordinal, ClaimAccum& a) {
                       LoopFlags fl;
                       fl.wip = wip_of(G);
                       fl.cip = has_cip(G).holds;
                       fl.lip = has_lip(G).holds;
                       fl.rip = has_rip(G).holds;
                       const int n = G.order();
                       long sub = 0;
                       for (int f = 0; f < n; ++f)
                           for (int g = 0; g < n; ++g) {
                               PairCtx P(G, f, g);
                               Outcome o = core(P, fl, a, ordinal * kOrdinalStride + sub);
                               record(a, ordinal * kOrdinalStride + sub, o,
                                      [&] { return pair_bundle(G, f, g); });
                               ++sub;
                           }
                   });
    };
}

using Registry = std::vector<ClaimDef>;

const Registry& registry() {
    static const Registry reg = [] {
        Registry r;

        r.push_back(ClaimDef{
            "lem2.1",
            "commuting weak inverse permutations generate an abelian group of weak inverse "
            "permutations",
            kEnumerationCap,
            "all bijection pairs for n <= 5; first 12 weak-inverse bijections per loop for n >= 6",
            [](const ScanScope& sc, ClaimAccum& acc) {
                acc.ensure_stages({"loops", "weak_inverse_perms", "commuting_pairs"});
                scan_loops(sc, kEnumerationCap, acc,
                           [&sc](const FiniteLoop& L, int n, long ordinal, ClaimAccum& a) {
                               a.bump("loops");
                               std::vector<int> img(static_cast<size_t>(n));
                               std::iota(img.begin(), img.end(), 0);
                               std::vector<Permutation> sprime;
                               do {
                                   Permutation p(img);
                                   if (is_weak_inverse_permutation(L, p).both()) sprime.push_back(p);
                               } while (std::next_permutation(img.begin(), img.end()));
                               a.bump("weak_inverse_perms", static_cast<long>(sprime.size()));
                               size_t lim = sprime.size();
                               if (n >= 6 && lim > 12) {
                                   lim = 12;
                                   a.truncated = true;
                               }
                               long sub = 0;
                               for (size_t i = 0; i < lim; ++i)
                                   for (size_t j = i; j < lim; ++j) {
                                       if (!sprime[i].commutes_with(sprime[j])) continue;
                                       a.bump("commuting_pairs");
                                       Outcome o = lem21_core(L, sprime[i], sprime[j]);
                                       record(a, ordinal * kOrdinalStride + sub++, o, [&] {
                                           return json{{"loop", loop_json(L)},
                                                       {"alpha", sprime[i].image()},
                                                       {"beta", sprime[j].image()}};
                                       });
                                   }
                           });
            },
            [](const json& j) {
                return lem21_core(loop_of(j), Permutation(j.at("alpha").get<std::vector<int>>()),
                                  Permutation(j.at("beta").get<std::vector<int>>()));
            },
            [](std::mt19937_64& rng) {
                const int n = rand_order(rng);
                FiniteLoop L = random_loop(n, rng());
                auto pick = [&](std::uint64_t v) {
                    return v % 2 ? L.j_rho().pow(static_cast<int>(v % 5)) : random_permutation(n, rng);
                };
                return json{{"loop", loop_json(L)},
                            {"alpha", pick(rng()).image()},
                            {"beta", pick(rng()).image()}};
            }});

        r.push_back(ClaimDef{
            "lem2.2",
            "the three WIPL characterizations (implication form, y(xy)^rho = x^rho, "
            "(xy)^lambda x = y^lambda) coincide",
            kEnumerationCap,
            "",
            [](const ScanScope& sc, ClaimAccum& acc) {
                scan_loops(sc, kEnumerationCap, acc,
                           [](const FiniteLoop& L, int, long ordinal, ClaimAccum& a) {
                               record(a, ordinal, lem22_core(L), [&] { return json{{"loop", loop_json(L)}}; });
                           });
            },
            [](const json& j) { return lem22_core(loop_of(j)); },
            sample_loop_only});

        r.push_back(ClaimDef{
            "lem2.3",
            "WIPL iff R_y J_rho L_y = J_rho for all y iff L_x J_lambda R_x = J_lambda for all x",
            kEnumerationCap,
            "",
            [](const ScanScope& sc, ClaimAccum& acc) {
                scan_loops(sc, kEnumerationCap, acc,
                           [](const FiniteLoop& L, int, long ordinal, ClaimAccum& a) {
                               record(a, ordinal, lem23_core(L), [&] { return json{{"loop", loop_json(L)}}; });
                           });
            },
            [](const json& j) { return lem23_core(loop_of(j)); },
            sample_loop_only});

        r.push_back(ClaimDef{
            "thm3.1a",
            "for an isotopic pair with the T condition, one loop is a WIPL iff the other is",
            kEnumerationCap,
            "all n^2 principal isotopes per loop",
            [](const ScanScope& sc, ClaimAccum& acc) {
                acc.ensure_stages({"pairs", "t1_pairs", "t_pairs"});
                pair_scan(kEnumerationCap,
                          [](const PairCtx& P, const LoopFlags& fl, ClaimAccum& a, long) {
                              a.bump("pairs");
                              if (P.rep.t1) a.bump("t1_pairs");
                              // the unproven t2 == t3 equivalence, logged if ever violated
                              if (P.rep.t2() != P.rep.t3()) a.detail("t2_ne_t3_divergences");
                              if (P.rep.t()) {
                                  a.bump("t_pairs");
                                  a.detail("hyp_order_" + std::to_string(P.G.order()));
                              }
                              return thm31a_core(P, fl.wip);
                          })(sc, acc);
            },
            [](const json& j) {
                FiniteLoop G = loop_of(j);
                PairCtx P(G, j.at("f").get<int>(), j.at("g").get<int>());
                return thm31a_core(P, wip_of(G));
            },
            sample_loop_pair});

        r.push_back(ClaimDef{
            "thm3.1b",
            "for isotopic WIP pairs, J_l R_x J_r B = C J'_l R'_{xA} J'_r and the dual hold for "
            "all x",
            kEnumerationCap,
            "principal triples plus one seeded post-isomorphism per pair",
            [](const ScanScope& sc, ClaimAccum& acc) {
                acc.ensure_stages({"pairs", "wip_pairs"});
                scan_loops(sc, kEnumerationCap, acc,
                           [](const FiniteLoop& G, int n, long ordinal, ClaimAccum& a) {
                               const bool wip_g = wip_of(G);
                               long sub = 0;
                               for (int f = 0; f < n; ++f)
                                   for (int g = 0; g < n; ++g) {
                                       a.bump("pairs", 2);
                                       Outcome o1 = thm31b_core(G, f, g, std::nullopt, wip_g);
                                       if (o1.hypothesis) a.bump("wip_pairs");
                                       record(a, ordinal * kOrdinalStride + sub++, o1,
                                              [&] { return pair_bundle(G, f, g); });
                                       std::seed_seq seq{static_cast<std::uint64_t>(n),
                                                         static_cast<std::uint64_t>(ordinal),
                                                         static_cast<std::uint64_t>(f),
                                                         static_cast<std::uint64_t>(g)};
                                       std::mt19937_64 prng(seq);
                                       Permutation post = random_permutation(n, prng);
                                       Outcome o2 = thm31b_core(G, f, g, post, wip_g);
                                       if (o2.hypothesis) a.bump("wip_pairs");
                                       record(a, ordinal * kOrdinalStride + sub++, o2, [&] {
                                           json b = pair_bundle(G, f, g);
                                           b["post"] = post.image();
                                           return b;
                                       });
                                   }
                           });
            },
            [](const json& j) {
                FiniteLoop G = loop_of(j);
                std::optional<Permutation> post;
                if (j.contains("post")) post = Permutation(j.at("post").get<std::vector<int>>());
                return thm31b_core(G, j.at("f").get<int>(), j.at("g").get<int>(), post, wip_of(G));
            },
            [](std::mt19937_64& rng) {
                json j = sample_loop_pair(rng);
                if (rng() % 2) {
                    const int n = static_cast<int>(j.at("loop").size());
                    j["post"] = random_permutation(n, rng).image();
                }
                return j;
            }});

        r.push_back(ClaimDef{
            "cor3.1",
            "WIPL with T: the isotope is a WIPL, CA^-1 and CB^-1 are weak inverse permutations, "
            "and J'_r = J'_l iff J_r = J_l",
            kEnumerationCap,
            "all n^2 principal isotopes per loop",
            [](const ScanScope& sc, ClaimAccum& acc) {
                acc.ensure_stages({"pairs", "hyp_pairs"});
                pair_scan(kEnumerationCap,
                          [](const PairCtx& P, const LoopFlags& fl, ClaimAccum& a, long) {
                              a.bump("pairs");
                              Outcome o = cor31_core(P, fl.wip);
                              if (o.hypothesis) a.bump("hyp_pairs");
                              return o;
                          })(sc, acc);
            },
            [](const json& j) {
                FiniteLoop G = loop_of(j);
                PairCtx P(G, j.at("f").get<int>(), j.at("g").get<int>());
                return cor31_core(P, wip_of(G));
            },
            sample_loop_pair});

        r.push_back(ClaimDef{
            "thm3.2",
            "with the T condition, isotopic WIP loops are isomorphic",
            kEnumerationCap,
            "all n^2 principal isotopes per loop",
            [](const ScanScope& sc, ClaimAccum& acc) {
                acc.ensure_stages({"pairs", "hyp_pairs", "mechanism_A_eq_B_eq_C"});
                pair_scan(kEnumerationCap,
                          [](const PairCtx& P, const LoopFlags& fl, ClaimAccum& a, long) {
                              a.bump("pairs");
                              bool mech = false;
                              Outcome o = thm32_core(P, fl.wip, &mech);
                              if (o.hypothesis) a.bump("hyp_pairs");
                              if (mech) a.bump("mechanism_A_eq_B_eq_C");
                              return o;
                          })(sc, acc);
            },
            [](const json& j) {
                FiniteLoop G = loop_of(j);
                PairCtx P(G, j.at("f").get<int>(), j.at("g").get<int>());
                return thm32_core(P, wip_of(G), nullptr);
            },
            sample_loop_pair});

        r.push_back(ClaimDef{
            "lem3.2",
            "identity groups (1)-(4) for a WIPL with a WIP f,g-principal isotope, plus the "
            "(J_r J'_l, J_l J'_r, I) rewrite when T2 or T3 holds",
            kEnumerationCap,
            "all n^2 principal isotopes per loop; fourth item of group (2) uses the isotope "
            "translation, the raw-L_f variant is tallied in details",
            [](const ScanScope& sc, ClaimAccum& acc) {
                acc.ensure_stages({"pairs", "wip_pairs", "t2_or_t3_pairs"});
                pair_scan(kEnumerationCap,
                          [](const PairCtx& P, const LoopFlags& fl, ClaimAccum& a, long) {
                              a.bump("pairs");
                              bool literal = true, c34 = false;
                              Outcome o = lem32_core(P, fl.wip, &literal, &c34);
                              if (o.hypothesis) {
                                  a.bump("wip_pairs");
                                  if (!literal) a.detail("literal_group2_fourth_identity_failures");
                              }
                              if (c34) a.bump("t2_or_t3_pairs");
                              return o;
                          })(sc, acc);
            },
            [](const json& j) {
                FiniteLoop G = loop_of(j);
                PairCtx P(G, j.at("f").get<int>(), j.at("g").get<int>());
                return lem32_core(P, wip_of(G), nullptr, nullptr);
            },
            sample_loop_pair});

        r.push_back(ClaimDef{
            "cor3.2",
            "WIPL: T implies the isotope is WIP; with T1+T21 or T1+T22, a WIP isotope forces T; "
            "then L_f, R_g are weak inverse permutations",
            kEnumerationCap,
            "all n^2 principal isotopes per WIP loop",
            [](const ScanScope& sc, ClaimAccum& acc) {
                acc.ensure_stages({"pairs", "wip_loops_pairs"});
                pair_scan(kEnumerationCap,
                          [](const PairCtx& P, const LoopFlags& fl, ClaimAccum& a, long) {
                              a.bump("pairs");
                              Outcome o = cor32_core(P, fl.wip);
                              if (o.hypothesis) a.bump("wip_loops_pairs");
                              return o;
                          })(sc, acc);
            },
            [](const json& j) {
                FiniteLoop G = loop_of(j);
                PairCtx P(G, j.at("f").get<int>(), j.at("g").get<int>());
                return cor32_core(P, wip_of(G));
            },
            sample_loop_pair});

        r.push_back(ClaimDef{
            "cor3.3",
            "WIPL: T implies the isotope is WIP; a WIP isotope satisfies the specialized "
            "transfer identities (14)/(15)",
            kEnumerationCap,
            "all n^2 principal isotopes per WIP loop",
            [](const ScanScope& sc, ClaimAccum& acc) {
                acc.ensure_stages({"pairs", "wip_loops_pairs"});
                pair_scan(kEnumerationCap,
                          [](const PairCtx& P, const LoopFlags& fl, ClaimAccum& a, long) {
                              a.bump("pairs");
                              Outcome o = cor33_core(P, fl.wip);
                              if (o.hypothesis) a.bump("wip_loops_pairs");
                              return o;
                          })(sc, acc);
            },
            [](const json& j) {
                FiniteLoop G = loop_of(j);
                PairCtx P(G, j.at("f").get<int>(), j.at("g").get<int>());
                return cor33_core(P, wip_of(G));
            },
            sample_loop_pair});

        r.push_back(ClaimDef{
            "lem3.3",
            "in a WIPL, distinct principal-isotope pairs both satisfying T2 have distinct "
            "right inverse mappings",
            kEnumerationCap,
            "pairs of T2-satisfying (f,g) pairs per WIP loop",
            [](const ScanScope& sc, ClaimAccum& acc) {
                acc.ensure_stages({"loops", "wip_loops", "t2_pairs", "pair_pairs"});
                scan_loops(sc, kEnumerationCap, acc,
                           [](const FiniteLoop& G, int n, long ordinal, ClaimAccum& a) {
                               a.bump("loops");
                               if (!wip_of(G)) return;
                               a.bump("wip_loops");
                               std::vector<std::pair<int, int>> t2pairs;
                               std::vector<Permutation> jprimes;
                               for (int f = 0; f < n; ++f)
                                   for (int g = 0; g < n; ++g) {
                                       PairCtx P(G, f, g);
                                       if (P.rep.t2()) {
                                           t2pairs.emplace_back(f, g);
                                           jprimes.push_back(P.H.j_rho());
                                       }
                                   }
                               a.bump("t2_pairs", static_cast<long>(t2pairs.size()));
                               long sub = 0;
                               for (size_t i = 0; i < t2pairs.size(); ++i)
                                   for (size_t j = i + 1; j < t2pairs.size(); ++j) {
                                       a.bump("pair_pairs");
                                       Outcome o;
                                       o.hypothesis = true;
                                       o.conclusion = !(jprimes[i] == jprimes[j]);
                                       record(a, ordinal * kOrdinalStride + sub++, o, [&] {
                                           return json{
                                               {"loop", loop_json(G)},
                                               {"pair1", {t2pairs[i].first, t2pairs[i].second}},
                                               {"pair2", {t2pairs[j].first, t2pairs[j].second}}};
                                       });
                                   }
                           });
            },
            [](const json& j) {
                FiniteLoop G = loop_of(j);
                auto p1 = j.at("pair1").get<std::vector<int>>();
                auto p2 = j.at("pair2").get<std::vector<int>>();
                return lem33_core(G, p1[0], p1[1], p2[0], p2[1], wip_of(G));
            },
            [](std::mt19937_64& rng) {
                const int n = rand_order(rng);
                FiniteLoop L = random_loop(n, rng());
                auto e = [&] { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };
                return json{{"loop", loop_json(L)}, {"pair1", {e(), e()}}, {"pair2", {e(), e()}}};
            }});

        auto lem34_claim = [](char item) {
            std::string id = "lem3.4";
            std::string desc = "T-condition consequences: ";
            switch (item) {
                case 0: desc += "(a) xg = fx with f,g central, (b) x^rho' = f x^rho, (c) x^lambda' = x^lambda g, (d) gg = ff = fg = gf, (e) f^rho' = g^lambda' = e"; break;
                case 'a': id += "a"; desc += "xg = fx for all x, and f, g lie in the centrum"; break;
                case 'b': id += "b"; desc += "x^rho' = f x^rho for all x"; break;
                case 'c': id += "c"; desc += "x^lambda' = x^lambda g for all x"; break;
                case 'd': id += "d"; desc += "gg = ff = fg = gf"; break;
                case 'e': id += "e"; desc += "f^rho' = g^lambda' = e"; break;
            }
            return ClaimDef{
                id, desc, kEnumerationCap,
                "all n^2 principal isotopes per loop; hypothesis = WIPL with T, or with "
                "T1+(T21 or T22) and a WIP isotope",
                [item](const ScanScope& sc, ClaimAccum& acc) {
                    acc.ensure_stages({"loops", "wip_loops", "pairs", "t1_pairs", "form1_T",
                                       "form2_T1_T2x_wip_isotope", "hyp_pairs"});
                    scan_loops(sc, kEnumerationCap, acc,
                               [item](const FiniteLoop& G, int n, long ordinal, ClaimAccum& a) {
                                   a.bump("loops");
                                   const bool wip_g = wip_of(G);
                                   if (wip_g) a.bump("wip_loops");
                                   long sub = 0;
                                   for (int f = 0; f < n; ++f)
                                       for (int g = 0; g < n; ++g) {
                                           a.bump("pairs");
                                           PairCtx P(G, f, g);
                                           if (wip_g && P.rep.t1) a.bump("t1_pairs");
                                           if (wip_g && P.rep.t()) a.bump("form1_T");
                                           else if (wip_g && P.rep.t1 && (P.rep.t21 || P.rep.t22) &&
                                                    wip_of(P.H))
                                               a.bump("form2_T1_T2x_wip_isotope");
                                           Outcome o = lem34_core(P, wip_g, item);
                                           if (o.hypothesis) a.bump("hyp_pairs");
                                           record(a, ordinal * kOrdinalStride + sub++, o,
                                                  [&] { return pair_bundle(G, f, g); });
                                       }
                               });
                },
                [item](const json& j) {
                    FiniteLoop G = loop_of(j);
                    PairCtx P(G, j.at("f").get<int>(), j.at("g").get<int>());
                    return lem34_core(P, wip_of(G), item);
                },
                sample_loop_pair};
        };
        r.push_back(lem34_claim(0));
        for (char c : {'a', 'b', 'c', 'd', 'e'}) r.push_back(lem34_claim(c));

        r.push_back(ClaimDef{
            "cor3.5",
            "CIPL with T whose isotope is an AIPL: f and g are alternative, flexible, centrum "
            "and equal",
            kEnumerationCap,
            "all n^2 principal isotopes per loop",
            [](const ScanScope& sc, ClaimAccum& acc) {
                acc.ensure_stages({"pairs", "cip_loops_pairs", "cip_T_pairs", "hyp_pairs"});
                pair_scan(kEnumerationCap,
                          [](const PairCtx& P, const LoopFlags& fl, ClaimAccum& a, long) {
                              a.bump("pairs");
                              if (fl.cip) a.bump("cip_loops_pairs");
                              if (fl.cip && P.rep.t()) a.bump("cip_T_pairs");
                              Outcome o = cor35_core(P, fl.cip);
                              if (o.hypothesis) a.bump("hyp_pairs");
                              return o;
                          })(sc, acc);
            },
            [](const json& j) {
                FiniteLoop G = loop_of(j);
                PairCtx P(G, j.at("f").get<int>(), j.at("g").get<int>());
                return cor35_core(P, has_cip(G).holds);
            },
            sample_loop_pair});

        r.push_back(ClaimDef{
            "rem3.2",
            "the listed two-variable and one-variable identity chains and all eight autotopism "
            "triples hold in a CIPL with the T condition",
            kEnumerationCap,
            "all n^2 principal isotopes per loop",
            [](const ScanScope& sc, ClaimAccum& acc) {
                acc.ensure_stages({"pairs", "hyp_pairs"});
                pair_scan(kEnumerationCap,
                          [](const PairCtx& P, const LoopFlags& fl, ClaimAccum& a, long) {
                              a.bump("pairs");
                              Outcome o = rem32_core(P, fl.cip);
                              if (o.hypothesis) a.bump("hyp_pairs");
                              return o;
                          })(sc, acc);
            },
            [](const json& j) {
                FiniteLoop G = loop_of(j);
                PairCtx P(G, j.at("f").get<int>(), j.at("g").get<int>());
                return rem32_core(P, has_cip(G).holds);
            },
            sample_loop_pair});

        r.push_back(ClaimDef{
            "cor3.6",
            "WIPL with T: f^rho' = g^lambda' and gg = ff = e' in the isotope",
            kEnumerationCap,
            "all n^2 principal isotopes per loop",
            [](const ScanScope& sc, ClaimAccum& acc) {
                acc.ensure_stages({"pairs", "hyp_pairs"});
                pair_scan(kEnumerationCap,
                          [](const PairCtx& P, const LoopFlags& fl, ClaimAccum& a, long) {
                              a.bump("pairs");
                              Outcome o = cor36_core(P, fl.wip);
                              if (o.hypothesis) a.bump("hyp_pairs");
                              return o;
                          })(sc, acc);
            },
            [](const json& j) {
                FiniteLoop G = loop_of(j);
                PairCtx P(G, j.at("f").get<int>(), j.at("g").get<int>());
                return cor36_core(P, wip_of(G));
            },
            sample_loop_pair});

        r.push_back(ClaimDef{
            "lem3.5",
            "a LIPL (RIPL) is a WIPL iff it is a RIPL (LIPL)",
            kEnumerationCap,
            "",
            [](const ScanScope& sc, ClaimAccum& acc) {
                acc.ensure_stages({"loops", "lip_or_rip"});
                scan_loops(sc, kEnumerationCap, acc,
                           [](const FiniteLoop& L, int, long ordinal, ClaimAccum& a) {
                               a.bump("loops");
                               Outcome o = lem35_core(L);
                               if (o.hypothesis) a.bump("lip_or_rip");
                               record(a, ordinal, o, [&] { return json{{"loop", loop_json(L)}}; });
                           });
            },
            [](const json& j) { return lem35_core(loop_of(j)); },
            sample_loop_only});

        r.push_back(ClaimDef{
            "thm3.3",
            "LIP/RIP WIPL with a WIP f,g-principal isotope: g is a rho-AIPE, f is a lambda-AIPE, "
            "both central",
            kEnumerationCap,
            "all n^2 principal isotopes per loop; hypothesis as stated (no T condition)",
            [](const ScanScope& sc, ClaimAccum& acc) {
                acc.ensure_stages({"pairs", "lip_rip_wip_loops_pairs", "hyp_pairs"});
                pair_scan(kEnumerationCap,
                          [](const PairCtx& P, const LoopFlags& fl, ClaimAccum& a, long) {
                              a.bump("pairs");
                              if ((fl.lip || fl.rip) && fl.wip) a.bump("lip_rip_wip_loops_pairs");
                              Outcome o = thm33_core(P, fl.lip, fl.rip, fl.wip);
                              if (o.hypothesis) a.bump("hyp_pairs");
                              return o;
                          })(sc, acc);
            },
            [](const json& j) {
                FiniteLoop G = loop_of(j);
                PairCtx P(G, j.at("f").get<int>(), j.at("g").get<int>());
                return thm33_core(P, has_lip(G).holds, has_rip(G).holds, wip_of(G));
            },
            sample_loop_pair});

        r.push_back(ClaimDef{
            "rem3.3",
            "in a RIP (LIP) loop, right (left) nuclear elements are rho- and lambda-AAIPE",
            kEnumerationCap,
            "every (loop, nuclear element, side) instance",
            [](const ScanScope& sc, ClaimAccum& acc) {
                acc.ensure_stages({"loops", "rip_loops", "lip_loops", "nuclear_instances"});
                scan_loops(sc, kEnumerationCap, acc,
                           [](const FiniteLoop& L, int n, long ordinal, ClaimAccum& a) {
                               a.bump("loops");
                               const bool rip = has_rip(L).holds, lip = has_lip(L).holds;
                               if (rip) a.bump("rip_loops");
                               if (lip) a.bump("lip_loops");
                               long sub = 0;
                               for (int x = 0; x < n; ++x)
                                   for (const char* side : {"rho", "lambda"}) {
                                       Outcome o = rem33_core(L, x, side);
                                       if (o.hypothesis) a.bump("nuclear_instances");
                                       record(a, ordinal * kOrdinalStride + sub++, o, [&] {
                                           return json{{"loop", loop_json(L)},
                                                       {"element", x},
                                                       {"side", side}};
                                       });
                                   }
                           });
            },
            [](const json& j) {
                return rem33_core(loop_of(j), j.at("element").get<int>(),
                                  j.at("side").get<std::string>());
            },
            [](std::mt19937_64& rng) {
                const int n = rand_order(rng);
                FiniteLoop L = random_loop(n, rng());
                return json{{"loop", loop_json(L)},
                            {"element", static_cast<int>(rng() % static_cast<std::uint64_t>(n))},
                            {"side", rng() % 2 ? "rho" : "lambda"}};
            }});

        r.push_back(ClaimDef{
            "thm3.4",
            "proof-construction replay on isomorphic WIP pairs: the constructed quadruples "
            "satisfy the displayed implication; the unpaired reading is tallied in details",
            kIsoEnumerationCap,
            "isomorphic pairs (distinct loops) via canonical forms; order capped at 6",
            [](const ScanScope& sc, ClaimAccum& acc) {
                acc.ensure_stages({"iso_pairs", "hyp_pairs"});
                scan_isomorphic_pairs(
                    sc, kIsoEnumerationCap, /*include_self=*/false, acc,
                    [](const FiniteLoop& L) { return wip_of(L); },
                    [](const FiniteLoop& Gi, const FiniteLoop& Gj, const Permutation& A,
                       long ordinal, ClaimAccum& a) {
                        a.bump("iso_pairs");
                        Thm34Extras ex;
                        Outcome o = thm34_core(Gi, Gj, A, &ex);
                        if (o.hypothesis) a.bump("hyp_pairs");
                        a.detail("unpaired_premises", ex.unpaired_premises);
                        a.detail("unpaired_disjunction_failures", ex.unpaired_disjunction_failures);
                        record(a, ordinal, o, [&] {
                            return json{{"loop_g", loop_json(Gi)},
                                        {"loop_h", loop_json(Gj)},
                                        {"iso", A.image()}};
                        });
                    });
            },
            [](const json& j) {
                return thm34_core(loop_of(j, "loop_g"), loop_of(j, "loop_h"),
                                  Permutation(j.at("iso").get<std::vector<int>>()), nullptr);
            },
            sample_iso_pair});

        r.push_back(ClaimDef{
            "thm3.5",
            "for a CIPL and an isomorph (via A): the isomorph is CIP, C J'_rho = J_rho C with "
            "C = J_lambda A, and D J'_lambda = J_lambda D with D = J_rho A",
            kIsoEnumerationCap,
            "isomorphic pairs of CIP loops via canonical forms (self-pairs included); order "
            "capped at 6; A from find_isomorphism",
            [](const ScanScope& sc, ClaimAccum& acc) {
                acc.ensure_stages({"iso_pairs", "hyp_pairs"});
                scan_isomorphic_pairs(
                    sc, kIsoEnumerationCap, /*include_self=*/true, acc,
                    [](const FiniteLoop& L) { return has_cip(L).holds; },
                    [](const FiniteLoop& Gi, const FiniteLoop& Gj, const Permutation&,
                       long ordinal, ClaimAccum& a) {
                        a.bump("iso_pairs");
                        auto A = find_isomorphism(Gi, Gj);
                        if (!A) throw std::logic_error("canonical classmates must be isomorphic");
                        Outcome o = thm35_core(Gi, Gj, *A);
                        if (o.hypothesis) a.bump("hyp_pairs");
                        record(a, ordinal, o, [&] {
                            return json{{"loop_g", loop_json(Gi)},
                                        {"loop_h", loop_json(Gj)},
                                        {"iso", A->image()}};
                        });
                    });
            },
            [](const json& j) {
                return thm35_core(loop_of(j, "loop_g"), loop_of(j, "loop_h"),
                                  Permutation(j.at("iso").get<std::vector<int>>()));
            },
            sample_iso_pair});

        r.push_back(ClaimDef{
            "cor3.7",
            "a CIPL and a loop isomorph have the weak T21 condition",
            kIsoEnumerationCap,
            "isomorphic pairs of CIP loops via canonical forms (self-pairs included); order "
            "capped at 6; A from find_isomorphism",
            [](const ScanScope& sc, ClaimAccum& acc) {
                acc.ensure_stages({"iso_pairs", "hyp_pairs"});
                scan_isomorphic_pairs(
                    sc, kIsoEnumerationCap, /*include_self=*/true, acc,
                    [](const FiniteLoop& L) { return has_cip(L).holds; },
                    [](const FiniteLoop& Gi, const FiniteLoop& Gj, const Permutation&,
                       long ordinal, ClaimAccum& a) {
                        a.bump("iso_pairs");
                        auto A = find_isomorphism(Gi, Gj);
                        if (!A) throw std::logic_error("canonical classmates must be isomorphic");
                        Outcome o = cor37_core(Gi, Gj, *A);
                        if (o.hypothesis) a.bump("hyp_pairs");
                        record(a, ordinal, o, [&] {
                            return json{{"loop_g", loop_json(Gi)},
                                        {"loop_h", loop_json(Gj)},
                                        {"iso", A->image()}};
                        });
                    });
            },
            [](const json& j) {
                return cor37_core(loop_of(j, "loop_g"), loop_of(j, "loop_h"),
                                  Permutation(j.at("iso").get<std::vector<int>>()));
            },
            sample_iso_pair});

        r.push_back(ClaimDef{
            "lem3.6",
            "for a CIPL: D = J_rho^2 C and C = J_lambda^2 D; with RIP or LIP additionally C = D "
            "and J_rho = J_lambda",
            kIsoEnumerationCap,
            "isomorphic pairs of CIP loops via canonical forms (self-pairs included); order "
            "capped at 6",
            [](const ScanScope& sc, ClaimAccum& acc) {
                acc.ensure_stages({"iso_pairs", "hyp_pairs"});
                scan_isomorphic_pairs(
                    sc, kIsoEnumerationCap, /*include_self=*/true, acc,
                    [](const FiniteLoop& L) { return has_cip(L).holds; },
                    [](const FiniteLoop& Gi, const FiniteLoop& Gj, const Permutation& A,
                       long ordinal, ClaimAccum& a) {
                        a.bump("iso_pairs");
                        Outcome o = lem36_core(Gi, Gj, A);
                        if (o.hypothesis) a.bump("hyp_pairs");
                        record(a, ordinal, o, [&] {
                            return json{{"loop_g", loop_json(Gi)},
                                        {"loop_h", loop_json(Gj)},
                                        {"iso", A.image()}};
                        });
                    });
            },
            [](const json& j) {
                return lem36_core(loop_of(j, "loop_g"), loop_of(j, "loop_h"),
                                  Permutation(j.at("iso").get<std::vector<int>>()));
            },
            sample_iso_pair});

        r.push_back(ClaimDef{
            "sec4.wip",
            "the m-inverse identity at m = -1 is exactly the weak inverse property",
            kEnumerationCap,
            "",
            [](const ScanScope& sc, ClaimAccum& acc) {
                scan_loops(sc, kEnumerationCap, acc,
                           [](const FiniteLoop& L, int, long ordinal, ClaimAccum& a) {
                               record(a, ordinal, sec4_core(L, -1), [&] { return json{{"loop", loop_json(L)}}; });
                           });
            },
            [](const json& j) { return sec4_core(loop_of(j), -1); },
            sample_loop_only});

        r.push_back(ClaimDef{
            "sec4.cip",
            "the m-inverse identity at m = 0 is exactly the cross inverse property",
            kEnumerationCap,
            "",
            [](const ScanScope& sc, ClaimAccum& acc) {
                scan_loops(sc, kEnumerationCap, acc,
                           [](const FiniteLoop& L, int, long ordinal, ClaimAccum& a) {
                               record(a, ordinal, sec4_core(L, 0), [&] { return json{{"loop", loop_json(L)}}; });
                           });
            },
            [](const json& j) { return sec4_core(loop_of(j), 0); },
            sample_loop_only});

        return r;
    }();
    return reg;
}

const ClaimDef& lookup(const std::string& id) {
    for (const auto& c : registry())
        if (c.id == id) return c;
    throw UnknownClaim("unknown claim id: " + id);
}

}  // namespace

std::string to_string(VerifyStatus s) {
    switch (s) {
        case VerifyStatus::confirmed_exhaustive: return "confirmed-exhaustive";
        case VerifyStatus::confirmed_sampled: return "confirmed-sampled";
        case VerifyStatus::counterexample: return "counterexample";
        default: return "vacuous";
    }
}

nlohmann::json VerificationReport::to_json() const {
    json stages_j = json::object();
    for (const auto& [k, v] : stages) stages_j[k] = v;
    return json{{"claim", claim},
                {"description", description},
                {"scope", scope_text},
                {"status", to_string(status)},
                {"instances_seen", instances_seen},
                {"instances_checked", instances_checked},
                {"vacuous_instances", vacuous_instances},
                {"violations", violations},
                {"stages", stages_j},
                {"witnesses", witnesses},
                {"details", details}};
}

std::string VerificationReport::to_table() const {
    std::ostringstream os;
    os << "claim       " << claim << '\n';
    os << "about       " << description << '\n';
    os << "scope       " << scope_text << '\n';
    os << "status      " << to_string(status);
    if (status == VerifyStatus::vacuous)
        os << "  (hypothesis never satisfied in scope -- NOT a confirmation)";
    os << '\n';
    os << "instances   " << instances_seen << " seen, " << instances_checked
       << " hypothesis-satisfying, " << violations << " violating\n";
    if (!stages.empty()) {
        os << "stages      ";
        bool first = true;
        for (const auto& [k, v] : stages) {
            if (!first) os << ", ";
            os << k << "=" << v;
            first = false;
        }
        os << '\n';
    }
    if (!details.empty()) os << "details     " << details.dump() << '\n';
    for (const auto& w : witnesses) os << "witness     " << w.dump() << '\n';
    return os.str();
}

std::vector<ClaimInfo> registered_claims() {
    std::vector<ClaimInfo> out;
    for (const auto& c : registry()) out.push_back({c.id, c.description});
    return out;
}

bool is_registered_claim(const std::string& id) {
    for (const auto& c : registry())
        if (c.id == id) return true;
    return false;
}

VerificationReport verify(const std::string& claim, const ScanScope& scope) {
    const ClaimDef& def = lookup(claim);

    ScanScope sc = scope;
    sc.min_order = std::max(1, sc.min_order);
    const int cap = std::min(def.order_cap, kEnumerationCap);
    const bool clamped = sc.max_order > cap;
    sc.max_order = std::min(sc.max_order, cap);

    ClaimAccum acc;
    def.run(sc, acc);
    acc.finalize();

    VerificationReport rep;
    rep.claim = def.id;
    rep.description = def.description;
    std::ostringstream scope_os;
    scope_os << "orders " << sc.min_order << ".." << sc.max_order;
    if (clamped) scope_os << " (requested max clamped to the claim cap)";
    if (!def.scope_note.empty()) scope_os << "; " << def.scope_note;
    rep.scope_text = scope_os.str();
    rep.instances_seen = acc.seen;
    rep.instances_checked = acc.hyp;
    rep.vacuous_instances = acc.seen - acc.hyp;
    rep.violations = acc.violations;
    rep.stages = acc.stages;
    for (const auto& [ord, w] : acc.wits) rep.witnesses.push_back(w);
    rep.details = json::object();
    for (const auto& [k, v] : acc.detail_counters) rep.details[k] = v;

    if (acc.violations > 0)
        rep.status = VerifyStatus::counterexample;
    else if (acc.hyp == 0)
        rep.status = VerifyStatus::vacuous;
    else if (acc.truncated)
        rep.status = VerifyStatus::confirmed_sampled;
    else
        rep.status = VerifyStatus::confirmed_exhaustive;
    return rep;
}

std::optional<nlohmann::json> find_counterexample(const std::string& claim, long budget,
                                                  std::uint64_t seed) {
    const ClaimDef& def = lookup(claim);
    std::seed_seq seq{seed, static_cast<std::uint64_t>(0x10075eeduLL)};
    std::mt19937_64 rng(seq);
    for (long i = 0; i < budget; ++i) {
        json inst = def.sample(rng);
        Outcome o = def.eval(inst);
        if (o.hypothesis && !o.conclusion) {
            inst["claim"] = claim;
            inst["sample_index"] = i;
            inst["seed"] = seed;
            return inst;
        }
    }
    return std::nullopt;
}

bool recheck_witness(const std::string& claim, const nlohmann::json& witness) {
    const ClaimDef& def = lookup(claim);
    Outcome o = def.eval(witness);
    return o.hypothesis && !o.conclusion;
}

}  // namespace loopforge
