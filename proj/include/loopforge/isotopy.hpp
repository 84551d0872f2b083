#pragma once

#include <vector>

#include <json.hpp>

#include "loopforge/loop.hpp"

namespace loopforge {

/// Ordered triple (A, B, C) of degree-n bijections; it is an isotopism from
/// (G,*) onto (H,o) when xA o yB = (x*y)C for all x, y.
struct IsotopismTriple {
    Permutation A, B, C;

    int degree() const { return A.degree(); }
    bool well_formed() const { return A.degree() == B.degree() && B.degree() == C.degree(); }

    nlohmann::json to_json() const;  // {"A":[...],"B":[...],"C":[...]}
    static IsotopismTriple from_json(const nlohmann::json& j);

    bool operator==(const IsotopismTriple&) const = default;
};

/// The image structure under (A,B,C): a o b = ((a A^-1) * (b B^-1)) C.
/// Always a quasigroup; a two-sided identity may or may not exist.
Quasigroup apply_isotopism(const FiniteLoop& L, const IsotopismTriple& t);

/// Pointwise check of xA o yB = (x*y)C where o is H's operation.
bool is_isotopism(const FiniteLoop& G, const FiniteLoop& H, const IsotopismTriple& t);

/// The f,g-principal isotope, i.e. the isotope under (R_g, L_f, I):
/// x o y = (x R_g^-1) * (y L_f^-1). Its identity element is f*g.
FiniteLoop principal_isotope(const FiniteLoop& L, int f, int g);

IsotopismTriple principal_triple(const FiniteLoop& L, int f, int g);  // (R_g, L_f, I)

/// Truth values of the permutation equalities linking the inverse mappings of
/// an isotopic pair. Primitive flags are measured independently from the two
/// tables; t2/t3/t are derived.
struct TConditionReport {
    bool t1 = false;   // A = B
    bool t21 = false;  // J'_rho = C^-1 J_rho B
    bool t22 = false;  // J'_rho = A^-1 J_rho C
    bool t31 = false;  // J'_lambda = C^-1 J_lambda A
    bool t32 = false;  // J'_lambda = B^-1 J_lambda C

    bool t2() const { return t21 && t22; }
    bool t3() const { return t31 && t32; }
    bool t() const { return t1 && (t2() || t3()); }

    nlohmann::json to_json() const;
};

/// Evaluates every sub-condition for a verified isotopic pair. Throws
/// NotAnIsotopism when (A,B,C) is not an isotopism from G onto H.
TConditionReport t_conditions(const FiniteLoop& G, const FiniteLoop& H, const IsotopismTriple& t);

/// J'_rho = A^-1 J_rho A or J'_lambda = A^-1 J_lambda A; G and H need not be
/// isotopic.
bool weak_t21(const FiniteLoop& G, const FiniteLoop& H, const Permutation& A);

struct TWitness {
    int f = 0, g = 0;
    TConditionReport report;
};

/// All (f, g) whose principal isotope satisfies the full condition
/// (t1 and (t2 or t3)), in f-major order. Exhaustive over all n^2 pairs;
/// orders above 8 require allow_large.
std::vector<TWitness> find_t_witnesses(const FiniteLoop& L, bool allow_large = false);

/// xA * yB = (x*y)C inside L itself.
bool is_autotopism(const FiniteLoop& L, const IsotopismTriple& t);

}  // namespace loopforge
