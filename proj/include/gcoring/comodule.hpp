#pragma once

#include <cstdint>
#include <vector>

#include "gcoring/coring.hpp"

namespace gcoring {

// Right comodule: one right A-module M with coactions ρ_α: M → M⊗_A C_α.
struct Comodule {
    CoringPtr coring;
    Bimodule space;                   // left side forgotten
    std::vector<TensorProduct> tens;  // M⊗_A C_α
    std::vector<Mat> rho;             // quotient coordinates

    std::size_t dim() const { return space.dim; }
};

// Right G-comodule: modules M_α with ρ_{α,β}: M_{αβ} → M_α⊗_A C_β.
struct GComodule {
    CoringPtr coring;
    std::vector<Bimodule> comps;
    std::vector<TensorProduct> tens;  // index α*|G|+β: M_α⊗_A C_β
    std::vector<Mat> rho;             // index α*|G|+β

    std::size_t n() const { return comps.size(); }
    const TensorProduct& tensor(std::size_t a, std::size_t b) const { return tens[a * n() + b]; }
    const Mat& rho_at(std::size_t a, std::size_t b) const { return rho[a * n() + b]; }
    std::size_t total_dim() const;
};

Comodule make_comodule(CoringPtr c, const Bimodule& space, std::vector<Mat> rho);
GComodule make_g_comodule(CoringPtr c, const std::vector<Bimodule>& comps, std::vector<Mat> rho);

CheckReport validate_comodule(const Comodule& m);
CheckReport validate_g_comodule(const GComodule& m);

bool is_comodule_map(const Comodule& src, const Comodule& dst, const Mat& f);
bool is_g_comodule_map(const GComodule& src, const GComodule& dst, const std::vector<Mat>& f);
// Bases of the hom spaces, solved from linearity and colinearity.
std::vector<Mat> comodule_homs(const Comodule& src, const Comodule& dst);
std::vector<std::vector<Mat>> g_comodule_homs(const GComodule& src, const GComodule& dst);

// The coring over itself, ρ_{α,β} = Δ_{α,β}.
GComodule coring_as_g_comodule(const CoringPtr& c);
// X⊗_A C_α with coaction X⊗Δ, for a right A-module X.
GComodule induced_g_comodule(const CoringPtr& c, const Bimodule& x);
Comodule zero_comodule(const CoringPtr& c);
GComodule zero_g_comodule(const CoringPtr& c);
// Seeded random right A-module: free of the given rank in a random basis.
Bimodule random_free_module(const AlgebraPtr& a, std::size_t rank, std::uint64_t seed);

// M = ⊕_β M_β with ρ_α restricted to M_β through M_{βα^{-1}}⊗C_α.
Comodule F1(const GComodule& m);
// Copies of N in every degree with ρ_{α,β} = ρ_β.
GComodule G1(const Comodule& n);
bool same_comodule(const Comodule& a, const Comodule& b);
bool same_g_comodule(const GComodule& a, const GComodule& b);

// Unit and counit components of both adjunctions on concrete objects.
struct AdjunctionWitness {
    // F1 ⊣ G1: η_M: M → G1F1M and ε_N: F1G1N → N.
    std::vector<Mat> eta;  // per degree, M_β → F1M
    Mat epsilon;           // ⊕_α N → N
    Mat epsilon_F1M;       // counit at F1M
    std::vector<Mat> eta_G1N;
    // G1 ⊣ F1: ν_N: N → F1G1N and ζ_M: G1F1M → M.
    Mat nu;
    std::vector<Mat> zeta;  // per degree, F1M → M_β
    Mat nu_F1M;
    std::vector<Mat> zeta_G1N;
};

AdjunctionWitness adjunction_witness(const GComodule& m, const Comodule& n);

// Hom bijections ψ/φ for (M, N), unit/counit colinearity, triangle identities and
// naturality along endomorphism bases.
CheckReport check_adjunction_F1G1(const GComodule& m, const Comodule& n, const AdjunctionWitness& w);
CheckReport check_adjunction_F1G1(const GComodule& m, const Comodule& n);
// Hom bijections Φ/Ψ for G1 ⊣ F1 with units ν and counits ζ.
CheckReport check_frobenius_F1G1(const GComodule& m, const Comodule& n, const AdjunctionWitness& w);
CheckReport check_frobenius_F1G1(const GComodule& m, const Comodule& n);

// Cofree equivalence. The comodule n lives over e_slice(c).
GComodule F2(const CoringPtr& c, const CofreeWitness& w, const Comodule& n);
Comodule G2(const CoringPtr& ce, const GComodule& m);

struct CofreeComparison {
    std::vector<Mat> phi;  // M_α → M_e
    std::vector<Mat> psi;  // M_e → M_α
};
// Throws MissingCofreeWitness when w does not verify.
CofreeComparison cofree_comparison(const GComodule& m, const CofreeWitness& w);
CheckReport check_cofree_equivalence(const GComodule& m, const CofreeWitness& w, const CoringPtr& ce);

}  // namespace gcoring
