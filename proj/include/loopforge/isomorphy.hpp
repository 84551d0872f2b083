#pragma once

#include <optional>
#include <vector>

#include "loopforge/isotopy.hpp"
#include "loopforge/loop.hpp"

namespace loopforge {

/// Searches for A with xA o yA = (x*y)A. Backtracking over images, pruned by
/// identity-to-identity, J_rho cycle type, and per-element translation
/// invariants; any result is re-verified through is_isotopism(G,H,(A,A,A)).
std::optional<Permutation> find_isomorphism(const FiniteLoop& G, const FiniteLoop& H);

/// Every isomorphism G -> G. The returned set always contains the identity
/// and is closed under composition and inversion.
std::vector<Permutation> automorphisms(const FiniteLoop& G);

/// Isotopy test via the principal-isotope reduction: G and H are isotopic
/// exactly when some f,g-principal isotope of G is isomorphic to H. Returns a
/// verified triple, or nullopt.
std::optional<IsotopismTriple> are_isotopic(const FiniteLoop& G, const FiniteLoop& H);

/// Relabeled copy with identity 0 and the lexicographically least table over
/// all admissible relabelings; two loops are isomorphic iff their canonical
/// tables are equal. `relabeling` maps input labels to canonical labels.
struct CanonicalForm {
    FiniteLoop loop;
    Permutation relabeling;
};

CanonicalForm canonical_form(const FiniteLoop& G);

/// The isomorphic copy of L under sigma: new_table[x sigma][y sigma] = (x*y) sigma.
FiniteLoop relabeled(const FiniteLoop& L, const Permutation& sigma);

}  // namespace loopforge
