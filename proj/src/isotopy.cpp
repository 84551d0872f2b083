#include "loopforge/isotopy.hpp"

namespace loopforge {

nlohmann::json IsotopismTriple::to_json() const {
    return nlohmann::json{{"A", A.image()}, {"B", B.image()}, {"C", C.image()}};
}

IsotopismTriple IsotopismTriple::from_json(const nlohmann::json& j) {
    IsotopismTriple t;
    t.A = Permutation(j.at("A").get<std::vector<int>>());
    t.B = Permutation(j.at("B").get<std::vector<int>>());
    t.C = Permutation(j.at("C").get<std::vector<int>>());
    if (!t.well_formed()) throw DegreeMismatch("triple components have different degrees");
    return t;
}

Quasigroup apply_isotopism(const FiniteLoop& L, const IsotopismTriple& t) {
    if (!t.well_formed() || t.degree() != L.order())
        throw DegreeMismatch("triple degree does not match loop order");
    const int n = L.order();
    const Permutation ainv = t.A.inverse();
    const Permutation binv = t.B.inverse();
    std::vector<std::vector<int>> rows(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            rows[static_cast<size_t>(a)][static_cast<size_t>(b)] = t.C[L.mul(ainv[a], binv[b])];
    return Quasigroup::from_rows(rows);
}

bool is_isotopism(const FiniteLoop& G, const FiniteLoop& H, const IsotopismTriple& t) {
    if (G.order() != H.order()) return false;
    if (!t.well_formed() || t.degree() != G.order())
        throw DegreeMismatch("triple degree does not match loop order");
    const int n = G.order();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (H.mul(t.A[x], t.B[y]) != t.C[G.mul(x, y)]) return false;
    return true;
}

FiniteLoop principal_isotope(const FiniteLoop& L, int f, int g) {
    const int n = L.order();
    if (f < 0 || f >= n || g < 0 || g >= n) throw std::out_of_range("translation element out of range");
    // x o y = (x R_g^-1) * (y L_f^-1), via the precomputed division tables.
    std::vector<int> table(static_cast<size_t>(n) * n);
    for (int x = 0; x < n; ++x) {
        const int xr = L.right_divide(x, g);
        for (int y = 0; y < n; ++y)
            table[static_cast<size_t>(x) * n + y] = L.mul(xr, L.left_divide(f, y));
    }
    FiniteLoop iso = loop_from_flat(n, std::move(table));
    if (iso.identity() != L.mul(f, g))
        throw Error("principal isotope identity is not f*g; construction bug");
    return iso;
}

IsotopismTriple principal_triple(const FiniteLoop& L, int f, int g) {
    return IsotopismTriple{L.right_translation(g), L.left_translation(f),
                           Permutation::identity(L.order())};
}

nlohmann::json TConditionReport::to_json() const {
    return nlohmann::json{
        {"t1", t1},   {"t21", t21}, {"t22", t22}, {"t31", t31}, {"t32", t32},
        {"t2", t2()}, {"t3", t3()}, {"t", t()},
    };
}

TConditionReport t_conditions(const FiniteLoop& G, const FiniteLoop& H, const IsotopismTriple& t) {
    if (G.order() != H.order() || !t.well_formed() || t.degree() != G.order())
        throw DegreeMismatch("orders/degrees do not match");
    if (!is_isotopism(G, H, t)) throw NotAnIsotopism("(A,B,C) is not an isotopism of the pair");

    // J' maps come from H's own table; the defining equalities are then
    // measured, never assumed.
    const Permutation ainv = t.A.inverse();
    const Permutation binv = t.B.inverse();
    const Permutation cinv = t.C.inverse();

    TConditionReport r;
    r.t1 = t.A == t.B;
    r.t21 = H.j_rho() == cinv * G.j_rho() * t.B;
    r.t22 = H.j_rho() == ainv * G.j_rho() * t.C;
    r.t31 = H.j_lambda() == cinv * G.j_lambda() * t.A;
    r.t32 = H.j_lambda() == binv * G.j_lambda() * t.C;
    return r;
}

bool weak_t21(const FiniteLoop& G, const FiniteLoop& H, const Permutation& A) {
    if (G.order() != H.order() || A.degree() != G.order())
        throw DegreeMismatch("orders/degrees do not match");
    const Permutation ainv = A.inverse();
    return H.j_rho() == ainv * G.j_rho() * A || H.j_lambda() == ainv * G.j_lambda() * A;
}

std::vector<TWitness> find_t_witnesses(const FiniteLoop& L, bool allow_large) {
    if (L.order() > 8 && !allow_large)
        throw OrderTooLarge("witness scan is O(n^4); pass allow_large for n > 8");
    std::vector<TWitness> out;
    const int n = L.order();
    for (int f = 0; f < n; ++f)
        for (int g = 0; g < n; ++g) {
            FiniteLoop H = principal_isotope(L, f, g);
            TConditionReport rep = t_conditions(L, H, principal_triple(L, f, g));
            if (rep.t()) out.push_back(TWitness{f, g, rep});
        }
    return out;
}

bool is_autotopism(const FiniteLoop& L, const IsotopismTriple& t) {
    return is_isotopism(L, L, t);
}

}  // namespace loopforge
