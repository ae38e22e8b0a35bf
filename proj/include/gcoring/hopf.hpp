#pragma once

#include <memory>
#include <vector>

#include "gcoring/coring.hpp"

namespace gcoring {

// Classical Hopf algebra over k.
struct HopfAlgebra {
    AlgebraPtr alg;
    Mat delta;     // dim² × dim, basis e_i⊗e_j
    Mat counit;    // 1 × dim
    Mat antipode;  // dim × dim
};

HopfAlgebra group_hopf_algebra(Field f, const FiniteGroup& g);
HopfAlgebra trivial_hopf_algebra(Field f);

// Hopf G-coalgebra: algebras H_α, Δ_{α,β}: H_{αβ} → H_α⊗_k H_β, ε: H_e → k,
// S_α: H_{α^{-1}} → H_α.
struct HopfGCoalgebra {
    FiniteGroup group;
    Field field;
    std::vector<AlgebraPtr> comps;
    std::vector<Mat> delta;  // index α*|G|+β
    Mat counit;
    std::vector<Mat> antipode;

    std::size_t n() const { return group.order; }
    const Mat& delta_at(std::size_t a, std::size_t b) const { return delta[a * n() + b]; }
};

using HopfPtr = std::shared_ptr<const HopfGCoalgebra>;

CheckReport validate_hopf_algebra(const HopfAlgebra& h);
CheckReport validate_hopf_g_coalgebra(const HopfGCoalgebra& h);
// Copies of h_e in every degree with the same Δ, ε and S.
HopfPtr cofree_hopf(const HopfAlgebra& he, const FiniteGroup& g);

// Right G-H-comodule algebra: algebra maps ρ_α: A → A⊗_k H_α.
struct ComoduleAlgebra {
    AlgebraPtr alg;
    HopfPtr hopf;
    std::vector<Mat> rho;  // (dim A·dim H_α) × dim A
};

CheckReport validate_comodule_algebra(const ComoduleAlgebra& a);
// A itself with ρ_α(a) = a⊗1.
ComoduleAlgebra trivial_comodule_algebra(const AlgebraPtr& a, const HopfPtr& h);

}  // namespace gcoring
