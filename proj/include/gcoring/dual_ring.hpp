#pragma once

#include <vector>

#include "gcoring/comodule.hpp"

namespace gcoring {

// Every column of mat lies in block `to`.
bool lands_in_block(const Mat& mat, const Blocks& dst, std::size_t to);
Blocks uniform_blocks(std::size_t n, std::size_t d);
std::size_t block_of(const Blocks& b, std::size_t i);

// G-graded algebra stored as one algebra whose basis is ordered in degree blocks,
// together with a ring map A → R_e.
struct GradedRing {
    FiniteGroup group;
    AlgebraPtr total;
    Blocks blocks;
    AlgebraPtr base;  // A; null when no base ring is attached
    Mat base_map;     // total.dim × A.dim, lands in degree e

    std::size_t n() const { return group.order; }
    // Structure constants R_α ⊗_k R_β → R_{αβ}.
    Mat mul_block(std::size_t a, std::size_t b) const;
    std::size_t degree_of(std::size_t basis_index) const;
    // R_α as an A-bimodule through the base map.
    Bimodule component(std::size_t a) const;
    // R_e as an algebra.
    AlgebraPtr degree_e_algebra() const;
};

// Assembles the total algebra from block structure constants mul[α*|G|+β].
GradedRing make_graded_ring(const FiniteGroup& g, const std::vector<std::size_t>& dims, const std::vector<Mat>& mul,
                            const Mat& unit_e, AlgebraPtr base, const Mat& base_map_e, const std::string& name);
CheckReport validate_graded_ring(const GradedRing& r);

struct GradedRingMorphism {
    GradedRing src;
    GradedRing dst;
    Mat mat;
};
CheckReport validate_graded_ring_morphism(const GradedRingMorphism& f);

// The left dual R = *C with R_α = left A-linear functionals on C_{α^{-1}}.
struct DualRing {
    CoringPtr coring;
    GradedRing ring;
    std::vector<LeftDual> duals;  // duals[α] spans R_α = *C_{α^{-1}}
    std::vector<Bimodule> comps;  // R_α with (a·f·b)(c) = f(ca)b

    // f#g for f ∈ R_α and g ∈ R_β in component coordinates.
    Mat sharp(std::size_t a, const Mat& f, std::size_t b, const Mat& g) const;
    // Matrix of the functional with degree-α coordinates v.
    Mat functional(std::size_t a, const Mat& v) const { return duals[a].functional(v); }
};

DualRing dual_ring(const CoringPtr& c);
// Checks the graded ring axioms plus ε as unit, i unital, and a·f = i(a)#f, f·b = f#i(b).
CheckReport validate_dual_ring(const DualRing& r);

// *f: *D → *C, g ↦ g∘f_{α^{-1}}.
GradedRingMorphism dual_morphism(const GroupCoringMorphism& f, const DualRing& dst_dual, const DualRing& src_dual);

// Graded right R-module, stored as a right module over the total ring.
struct GradedModule {
    GradedRing ring;
    Blocks blocks;
    Bimodule module;  // right_ring = ring.total
    std::size_t dim() const { return module.dim; }
};
CheckReport validate_graded_module(const GradedModule& m);
bool same_graded_module(const GradedModule& a, const GradedModule& b);

// m·f = m_{[0,αβ]} f(m_{[1,β^{-1}]}) for m ∈ M_α, f ∈ R_β.
GradedModule F3(const GComodule& m, const DualRing& r);
// ρ_{α,β}(m) = Σ m·f^{(β)}⊗c^{(β)} with a dual basis of C_β; throws MissingDualBasis.
GComodule G3(const GradedModule& m, const DualRing& r);
// m·f = Σ_α m_[0] f_α(m_[1,α^{-1}]) as a right module over the total ring.
Bimodule F4(const Comodule& m, const DualRing& r);
Bimodule F5(const GradedModule& m);
// ⊕_α μ_α(M) with μ_α(m)r = μ_{αβ}(mr) for r ∈ R_β.
GradedModule G5(const Bimodule& m, const GradedRing& r);

// F4∘F1 = F5∘F3 on a G-comodule and F3∘G1 = G5∘F4 on a comodule.
CheckReport check_square(const GComodule& m, const Comodule& n, const DualRing& r);

// φ: R_e[G] → R, φ(r u_α) = r∘γ_{α^{-1}}^{-1}. Throws MissingCofreeWitness.
struct CofreeDualIso {
    GradedRing group_ring;  // R_e[G]
    GradedRingMorphism phi;
    CheckReport report;
};
CofreeDualIso cofree_dual_iso(const DualRing& r, const CofreeWitness& w);

// ι_α: C_{α^{-1}} → R_α^* is bijective onto the right A-linear functionals on R_α.
CheckReport check_iota(const DualRing& r);
// Evaluation *M⊗_A P → Hom(M, P) is injective for M = C_{βγ}, P = C_β⊗C_γ.
CheckReport check_dual_basis_lemma(const DualRing& r);
// f^{(βγ)}⊗Δ(c^{(βγ)}) = f^{(γ)}#f^{(β)}⊗c^{(β)}⊗c^{(γ)} for all (β,γ).
CheckReport check_dual_basis_comultiplication(const DualRing& r);

// M⊗_k C → M, m_i⊗c_j ↦ m_i·F(c_j), on ambient coordinates of M⊗_k C.
Mat evaluation_map(const Bimodule& m, const Mat& functional);

// Right A-linear functionals h: M → A, h(m·b) = h(m)b, as dim A × dim M matrices.
std::vector<Mat> right_linear_functionals(const Bimodule& m);

}  // namespace gcoring
