#pragma once

#include <memory>
#include <vector>

#include "gcoring/algebra.hpp"
#include "gcoring/group.hpp"

namespace gcoring {

// G-A-coring: bimodules C_α, comultiplications C_{αβ} → C_α⊗_A C_β and a
// counit C_e → A. Pair tensor products are built once at construction.
struct GroupCoring {
    FiniteGroup group;
    AlgebraPtr base;
    Bimodule base_module;  // A over itself
    std::vector<Bimodule> comps;
    std::vector<TensorProduct> pairs;  // index α*|G|+β
    std::vector<Mat> delta;            // C_{αβ} → pairs[α*|G|+β], quotient coordinates
    Mat counit;                        // A.dim × C_e.dim

    std::size_t n() const { return group.order; }
    const TensorProduct& pair(std::size_t a, std::size_t b) const { return pairs[a * n() + b]; }
    const Mat& delta_at(std::size_t a, std::size_t b) const { return delta[a * n() + b]; }
    Field field() const { return base->field; }
};

using CoringPtr = std::shared_ptr<const GroupCoring>;

// delta[α*|G|+β] given in quotient coordinates of C_α ⊗_A C_β.
CoringPtr make_group_coring(FiniteGroup g, AlgebraPtr base, std::vector<Bimodule> comps, std::vector<Mat> delta,
                            Mat counit);
// delta given by representatives in C_α ⊗_k C_β; projected to the quotient.
CoringPtr make_group_coring_from_ambient(FiniteGroup g, AlgebraPtr base, std::vector<Bimodule> comps,
                                         const std::vector<Mat>& delta_ambient, Mat counit);

// C_α = A, Δ = inverse of multiplication A⊗_A A → A, ε = id.
CoringPtr trivial_coring(const AlgebraPtr& a, const FiniteGroup& g);

CheckReport validate_group_coring(const GroupCoring& c);

struct GroupCoringMorphism {
    CoringPtr src;
    CoringPtr dst;
    std::vector<Mat> maps;  // f_α: src C_α → dst C_α
};

GroupCoringMorphism identity_coring_morphism(const CoringPtr& c);
CheckReport validate_coring_morphism(const GroupCoringMorphism& f);

// The e-component as a coring over the trivial group.
CoringPtr e_slice(const GroupCoring& c);

struct CofreeWitness {
    std::vector<Mat> gammas;  // γ_α: C_e → C_α
};

struct CofreeResult {
    CoringPtr coring;
    CofreeWitness witness;
};

// C_e⟨G⟩: every component is a tagged copy of C_e, γ_α = identity.
CofreeResult cofree(const GroupCoring& ce, const FiniteGroup& g);
CheckReport verify_cofree(const GroupCoring& c, const CofreeWitness& w);
// The two derived identities of a cofree witness, per (α,β).
CheckReport verify_cofree_identities(const GroupCoring& c, const CofreeWitness& w);

// ⊕_α C_α as a single A-coring with C_α C_β-graded comultiplication.
struct GradedCoring {
    FiniteGroup group;
    AlgebraPtr base;
    Bimodule module;
    std::vector<std::size_t> offset, dims;
    TensorProduct square;  // C ⊗_A C
    Mat delta;             // C → C⊗_A C
    Mat counit;            // C → A
};

GradedCoring pack_graded_coring(const GroupCoring& c);
CoringPtr unpack_graded_coring(const GradedCoring& g);
std::vector<Bimodule> component_modules(const GradedCoring& g);
// Validates as an ordinary A-coring plus the grading conditions.
CheckReport validate_graded_coring(const GradedCoring& g);
bool same_coring(const GroupCoring& a, const GroupCoring& b);

// Component inclusion/projection helpers for ⊕_α of per-degree dims.
struct Blocks {
    std::vector<std::size_t> offset, dims;
    std::size_t total = 0;
    Mat incl(Field f, std::size_t a) const;
    Mat proj(Field f, std::size_t a) const;
};
Blocks make_blocks(const std::vector<std::size_t>& dims);

}  // namespace gcoring
