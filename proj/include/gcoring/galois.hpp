#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gcoring/comodule.hpp"

namespace gcoring {

struct GrouplikeFamily {
    CoringPtr coring;
    std::vector<Mat> x;  // x_α ∈ C_α
};

CheckReport validate_grouplike(const GrouplikeFamily& x);
// A with ρ_α(a) = 1⊗x_α a.
Comodule comodule_from_grouplike(const GrouplikeFamily& x);
// x_α = ρ_α(1_A) read through A⊗_A C_α ≅ C_α.
GrouplikeFamily grouplike_from_comodule(const Comodule& m);
// (C_e, x_e) over the trivial group.
GrouplikeFamily e_slice_grouplike(const GrouplikeFamily& x);
bool same_grouplike(const GrouplikeFamily& a, const GrouplikeFamily& b);

struct CoinvariantsResult {
    Mat basis;                        // columns in the ambient module
    std::optional<Subalgebra> ring;  // set for the coinvariants of A
    std::size_t dim() const { return basis.cols(); }
};

CoinvariantsResult coinvariants(const Comodule& m, const GrouplikeFamily& x);
// Families (m_α) in ⊕_α M_α with ρ_{α,β}(m_{αβ}) = m_α⊗x_β.
CoinvariantsResult g_coinvariants(const GComodule& m, const GrouplikeFamily& x);
// T = {a : a x_α = x_α a for all α}, as a subalgebra of A.
CoinvariantsResult coinvariant_ring(const GrouplikeFamily& x);
// Inclusion T → A.
RingMorphism coinvariant_inclusion(const GrouplikeFamily& x);
// Throws ImageNotInCoinvariants unless the image of b lies in T.
void require_image_in_coinvariants(const GrouplikeFamily& x, const RingMorphism& b);

// A as a left B-module, a right B-module, and the B-A bimodule used by N⊗_B A.
Bimodule base_as_left_b_module(const RingMorphism& b);

// N⊗_B A with ρ_α(n⊗a) = (n⊗1)⊗x_α a; n is a right B-module.
struct InducedComodule {
    Comodule comodule;
    TensorProduct tensor;  // N⊗_B A
};
InducedComodule F6(const GrouplikeFamily& x, const RingMorphism& b, const Bimodule& n);
// G1∘F6.
GComodule F7(const GrouplikeFamily& x, const RingMorphism& b, const Bimodule& n);
// N⊗_B A as a comodule over the e-slice with x_e.
Comodule F8(const GrouplikeFamily& x, const RingMorphism& b, const Bimodule& n);

// Coinvariants of a G-comodule as a right B-module.
struct CoinvariantModule {
    Bimodule module;  // right B-module
    Mat basis;        // columns in ⊕_α M_α
    Mat coords;       // left inverse of basis
};
CoinvariantModule G7(const GComodule& m, const GrouplikeFamily& x, const RingMorphism& b);
CoinvariantModule G6(const Comodule& m, const GrouplikeFamily& x, const RingMorphism& b);

// η_7: N → G7F7N in coinvariant coordinates, and ε_7: F7G7M → M per degree.
Mat unit_7(const GrouplikeFamily& x, const RingMorphism& b, const Bimodule& n);
std::vector<Mat> counit_7(const GComodule& m, const GrouplikeFamily& x, const RingMorphism& b);
// Hom bijection of the F7 ⊣ G7 adjunction on hom-space bases.
CheckReport check_adjunction_F7G7(const GrouplikeFamily& x, const RingMorphism& b, const Bimodule& n,
                                  const GComodule& m);

// D_e = A⊗_B A with Δ(a⊗b) = (a⊗1)⊗(1⊗b), ε(a⊗b) = ab, over the trivial group.
CoringPtr sweedler_coring(const RingMorphism& b);

struct CanonicalMorphism {
    CoringPtr sweedler;   // D_e
    CofreeResult cofree;  // D = D_e⟨G⟩ with identity witness
    GroupCoringMorphism can;
};
// can_α(a⊗b) = a x_α b.
CanonicalMorphism canonical_morphism(const GrouplikeFamily& x, const RingMorphism& b);

struct GaloisVerdict {
    bool galois = false;
    CheckReport report;
    std::vector<std::string> warnings;
};
GaloisVerdict is_galois(const GrouplikeFamily& x);
// b is compared with the computed inclusion of T; a mismatch is reported as a warning.
GaloisVerdict is_galois(const GrouplikeFamily& x, const RingMorphism& b);

struct GaloisDecomposition {
    CofreeWitness witness;  // γ_α = can_α∘can_e^{-1}
    bool e_galois = false;
    CheckReport report;
};
std::optional<GaloisDecomposition> galois_decomposition(const GrouplikeFamily& x);
// Converse direction: cofree witness with γ_α(x_e) = x_α plus (C_e, x_e) Galois.
bool galois_from_cofree(const GrouplikeFamily& x, const CofreeWitness& w);
// Coinvariants of (C, x) and of (C_e, x_e) coincide.
bool coinvariants_match_e_slice(const GrouplikeFamily& x);

struct StructureTheoremObjects {
    std::vector<Bimodule> b_modules;  // right B-modules
    std::vector<GComodule> comodules;
};
StructureTheoremObjects default_structure_objects(const GrouplikeFamily& x, const RingMorphism& b,
                                                  std::uint64_t seed);

struct StructureTheoremResult {
    bool side_galois = false;       // B ≅ T, Galois, A faithfully flat over B
    bool side_equivalence = false;  // η_7, ε_7 iso on all test objects, A flat over B
    bool agree = false;
    std::string summary;
    CheckReport report;
};
StructureTheoremResult structure_theorem_battery(const GrouplikeFamily& x, const RingMorphism& b,
                                                 const StructureTheoremObjects& objects);

}  // namespace gcoring
