#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "loopforge/loop.hpp"

namespace loopforge {

/// Outcome of a quantified identity check. When the property fails, `witness`
/// holds the lexicographically first violating tuple and re-evaluates to a
/// violation.
struct PropertyReport {
    std::string property;
    bool holds = true;
    std::vector<int> witness;  // empty when holds

    nlohmann::json to_json() const;  // {"property":..., "holds":..., "witness":[...]|null}
};

enum class WipMethod {
    definitional,    // y (xy)^rho = x^rho for all x, y
    translational,   // R_y J_rho L_y = J_rho for all y
};

/// Weak inverse property. The two methods are independent code paths and must
/// agree; tests cross-validate them.
PropertyReport has_wip(const FiniteLoop& L, WipMethod method = WipMethod::definitional);

/// The dual characterization (xy)^lambda x = y^lambda for all x, y.
PropertyReport wip_lambda_form(const FiniteLoop& L);

/// The implication form: xy*z = e  =>  x*yz = e over all triples.
PropertyReport wip_implication_form(const FiniteLoop& L);

/// Dual translational form L_x J_lambda R_x = J_lambda for all x.
PropertyReport wip_translational_lambda(const FiniteLoop& L);

/// Cross inverse property: xy * x^rho = y for all x, y.
PropertyReport has_cip(const FiniteLoop& L);

/// Left inverse property: x^lambda (x y) = y.
PropertyReport has_lip(const FiniteLoop& L);
/// Right inverse property: (x y) y^rho = x.
PropertyReport has_rip(const FiniteLoop& L);
/// Inverse property: LIP and RIP.
PropertyReport has_ip(const FiniteLoop& L);

/// m-inverse identity (xy)J_rho^m * xJ_rho^{m+1} = yJ_rho^m; negative powers
/// of J_rho are powers of J_lambda. m = -1 is WIP, m = 0 is CIP.
PropertyReport m_inverse_check(const FiniteLoop& L, int m);

/// Elements commuting with everything.
std::vector<int> centrum(const FiniteLoop& L);

struct Nuclei {
    std::vector<int> left;    // a with (a x) y = a (x y)
    std::vector<int> middle;  // a with (x a) y = x (a y)
    std::vector<int> right;   // a with (x y) a = x (y a)
};
Nuclei nuclei(const FiniteLoop& L);

/// Tri-state for the inverse-based element traits: those read "x^{-1}" as the
/// two-sided inverse and are reported not_applicable when J_rho != J_lambda.
enum class TriFlag { holds, fails, not_applicable };

std::string to_string(TriFlag f);

struct ElementTraits {
    int element = 0;
    bool flexible = false;           // x(yx) = (xy)x for all y
    bool left_alternative = false;   // (xx)y = x(xy) for all y
    bool right_alternative = false;  // y(xx) = (yx)x for all y
    bool centrum = false;            // xy = yx for all y
    TriFlag rho_aipe = TriFlag::not_applicable;     // (yx)^-1 = y^-1 x^-1
    TriFlag lambda_aipe = TriFlag::not_applicable;  // (xy)^-1 = x^-1 y^-1
    TriFlag rho_aaipe = TriFlag::not_applicable;    // (yx)^-1 = x^-1 y^-1
    TriFlag lambda_aaipe = TriFlag::not_applicable; // (xy)^-1 = y^-1 x^-1

    nlohmann::json to_json() const;
};

ElementTraits element_traits(const FiniteLoop& L, int x);

/// Whole-loop automorphic inverse property: two-sided inverses exist and
/// (xy)^-1 = x^-1 y^-1 for all x, y.
bool is_aip_loop(const FiniteLoop& L);

struct WeakInverseFlags {
    bool right = false;  // J_rho = alpha J_rho alpha
    bool left = false;   // J_lambda = alpha J_lambda alpha
    bool both() const { return right && left; }
};

/// Decides whether alpha is a weak (right/left) inverse permutation of L.
/// The two flags provably coincide; a disagreement would be a bug and throws.
WeakInverseFlags is_weak_inverse_permutation(const FiniteLoop& L, const Permutation& alpha);

/// Closure of pairwise-commuting weak inverse permutations under composition
/// and inversion. Verifies the closure is an abelian group of weak inverse
/// permutations; returns its elements sorted. Throws NotWeakInverse /
/// NotCommuting on bad generators.
std::vector<Permutation> weak_inverse_closure(const FiniteLoop& L,
                                              const std::vector<Permutation>& generators);

}  // namespace loopforge
