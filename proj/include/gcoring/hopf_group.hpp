#pragma once

#include <optional>

#include "gcoring/dual_ring.hpp"
#include "gcoring/galois.hpp"
#include "gcoring/hopf.hpp"

namespace gcoring {

struct ComoduleAlgebraCoring {
    CoringPtr coring;  // C_α = A⊗_k H_α
    GrouplikeFamily grouplike;  // x_α = 1⊗1
};

// a'(b⊗h)a = a'ba_[0]⊗ha_[1,α], Δ(b⊗h) = (b⊗h₁)⊗_A(1⊗h₂), ε(b⊗h) = ε(h)b.
ComoduleAlgebraCoring coring_from_comodule_algebra(const ComoduleAlgebra& a);

// A^0 = {a | ρ_α(a) = a⊗1 for all α}, as columns in A.
Mat coaction_invariants(const ComoduleAlgebra& a);

// λ_α: H_e → H_α exhibiting H as the cofree H_e⟨G⟩.
CheckReport validate_cofree_hopf_family(const HopfGCoalgebra& h, const std::vector<Mat>& lambdas);
// true when the identity family works, false when some H_α has another dimension,
// nothing when neither test decides.
std::optional<bool> literal_cofree(const HopfGCoalgebra& h);

struct HopfGaloisResult {
    bool galois = false;              // (A⊗H, 1⊗1) is a Galois group coring
    bool coinvariants_match = false;  // A^{coC} = A^0
    std::optional<bool> cofree;
    bool e_galois = false;            // A is H_e-Galois over A^{co H_e}
    CheckReport report;
};
// `x` must be the grouplike family of coring_from_comodule_algebra(a).
HopfGaloisResult hopf_galois_check(const ComoduleAlgebra& a, const GrouplikeFamily& x, const RingMorphism& b);

// Right relative (H,A)-Hopf module: ρ_α: M → M⊗_k H_α.
struct RelativeHopfModule {
    Bimodule module;       // right A-module
    std::vector<Mat> rho;  // (dim M·dim H_α) × dim M
};
// Group version: ρ_{α,β}: M_{αβ} → M_α⊗_k H_β, index α*|G|+β.
struct RelativeGroupHopfModule {
    std::vector<Bimodule> comps;
    std::vector<Mat> rho;
};
CheckReport validate_relative_hopf_module(const ComoduleAlgebra& a, const RelativeHopfModule& m);
CheckReport validate_relative_group_hopf_module(const ComoduleAlgebra& a, const RelativeGroupHopfModule& m);
// The category isomorphisms through M⊗_A(A⊗H_α) ≅ M⊗H_α.
RelativeHopfModule hopf_module_from_comodule(const Comodule& m);
Comodule comodule_from_hopf_module(const CoringPtr& c, const RelativeHopfModule& m);
RelativeGroupHopfModule hopf_module_from_g_comodule(const GComodule& m);
GComodule g_comodule_from_hopf_module(const CoringPtr& c, const RelativeGroupHopfModule& m);

// Both conversions on every test object (and its F1 image), then the structure battery.
CheckReport relative_hopf_module_check(const ComoduleAlgebra& a, const GrouplikeFamily& x, const RingMorphism& b,
                                       const StructureTheoremObjects& objects);

// K = ⊕_α H*_{α^{-1}} (block α), its action h*·a = <h*, a_[1,α^{-1}]>a_[0] and K^op#A
// with (h#a)(k#b) = k₁h#(k₂·a)b, compared with the dual ring through
// λ_α(h*⊗a)(b⊗h) = <h*,h>ba.
struct SmashDual {
    HopfAlgebra k;
    Blocks k_blocks;
    std::vector<Mat> action;  // per K basis element, dim A × dim A
    GradedRing smash;
    DualRing dual;
    GradedRingMorphism lambda;
    CheckReport report;
};
SmashDual smash_dual(const ComoduleAlgebra& a, const CoringPtr& c);

}  // namespace gcoring
