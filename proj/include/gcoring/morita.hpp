#pragma once

#include <array>
#include <string>
#include <vector>

#include "gcoring/dual_ring.hpp"
#include "gcoring/galois.hpp"

namespace gcoring {

// Morita context (T̂, R̂, P, Q, τ, μ). The connecting maps are stored on k-tensor
// representatives so that balancedness can be checked.
struct MoritaContext {
    std::string name;
    AlgebraPtr left_ring;   // T̂
    AlgebraPtr right_ring;  // R̂
    Bimodule p;             // T̂-R̂
    Bimodule q;             // R̂-T̂
    TensorProduct pq;       // P⊗_R̂ Q
    TensorProduct qp;       // Q⊗_T̂ P
    Mat tau_ambient;        // P⊗_k Q → T̂
    Mat mu_ambient;         // Q⊗_k P → R̂

    Mat tau() const { return tau_ambient * pq.sect(); }
    Mat mu() const { return mu_ambient * qp.sect(); }
};

MoritaContext make_morita_context(std::string name, AlgebraPtr t, AlgebraPtr r, Bimodule p, Bimodule q,
                                  Mat tau_ambient, Mat mu_ambient);
CheckReport validate_morita_context(const MoritaContext& m);

struct GradedMoritaContext {
    MoritaContext ctx;
    FiniteGroup group;
    Blocks left_blocks, right_blocks, p_blocks, q_blocks;
};
CheckReport validate_graded_morita_context(const GradedMoritaContext& m);

struct Strictness {
    bool strict = false;
    bool tau_surjective = false, mu_surjective = false;
    bool tau_bijective = false, mu_bijective = false;
    // fails only when a connecting map is surjective without being injective
    CheckReport report;
};
Strictness is_strict(const MoritaContext& m);
inline Strictness is_strict(const GradedMoritaContext& m) { return is_strict(m.ctx); }

// (End(P), R, P, Hom(P,R)) for a right R-module generated standard context.
MoritaContext standard_context(const Bimodule& p);

// χ(f) = Σ_α f_α(x_{α^{-1}}), as a dim A × dim R matrix.
Mat grouplike_character(const GrouplikeFamily& x, const DualRing& r);
CheckReport validate_character(const GrouplikeFamily& x, const DualRing& r, const Mat& chi);

// Solution spaces inside R (columns in total coordinates): c_(1)q_α(c_(2)) = q_{αβ}(c)x.
// The weak form only asks equality after applying every functional.
Mat o_space(const GrouplikeFamily& x, const DualRing& r, bool weak);
// {a | a x_α = x_α a} read through all functionals.
Mat weak_coinvariants(const GrouplikeFamily& x, const DualRing& r);

struct CoringMoritaContexts {
    Subalgebra t, t_weak;
    Mat o, o_weak;
    MoritaContext m, m_weak;
    CheckReport report;  // O left ideal, T = T', O = O', τ lands in T
};
CoringMoritaContexts build_context_M(const GrouplikeFamily& x, const DualRing& r);

// Graded homomorphisms HOM_R(M,N)_σ as full matrices, grouped by σ.
struct GradedHom {
    std::vector<Mat> basis;
    Blocks blocks;  // dimension of each degree σ
    std::size_t rows = 0, cols = 0;
    Mat embed, coords_of;
    Mat coordinates(const Mat& h) const { return coords_of * h.flatten(); }
    std::size_t dim() const { return basis.size(); }
};
GradedHom graded_hom(const GradedModule& m, const GradedModule& n);
// END_R(M) with s·t = s∘t.
GradedRing graded_end(const GradedModule& m, const GradedHom& end);
GradedModule regular_graded_module(const GradedRing& r);

struct ModuleContext {
    GradedHom end, hom;
    GradedRing end_ring;
    GradedMoritaContext ctx;
};
// (END(P), R, P, HOM(P,R), φ, ψ) with φ(p⊗q)(p') = p·q(p') and ψ(q⊗p) = q(p).
ModuleContext context_from_graded_module(const GradedModule& p);

// M_e[G] built from an ungraded context.
GradedMoritaContext group_ring_context(const MoritaContext& me, const FiniteGroup& g);

// A{G} = F3(G1(A)).
GradedModule build_A_braces_G(const GrouplikeFamily& x, const DualRing& r);

struct TwistedRings {
    AlgebraPtr power;             // ∏_α A, block α
    std::vector<Mat> shift;       // b ↦ b^σ on ∏_α A
    Subalgebra s, s_weak;
    GradedRing gs, gs_weak;       // G*S, G*S'
    CheckReport report;
};
// G*S with u_α b u_β c = u_{αβ} b^β c.
GradedRing twisted_group_ring(const Subalgebra& s, const FiniteGroup& g, const std::vector<Mat>& shift,
                              const std::string& name);
TwistedRings build_S_and_twisted(const GrouplikeFamily& x, const DualRing& r);

struct GradedMoritaData {
    DualRing dual;
    GrouplikeFamily x;
    GradedModule a_g;
    TwistedRings tw;
    Mat q, q_weak;
    GradedMoritaContext gm, gm_weak;
    CheckReport report;
};
GradedMoritaData build_Q_and_contexts(const GrouplikeFamily& x, const DualRing& r);

// Ξ: END_R(A{G}) → G*S' and Ψ: HOM_R(A{G},R) → Q'G with both connecting-map squares.
struct EndHomIsos {
    ModuleContext module_ctx;
    Mat xi, psi;
    CheckReport report;
};
EndHomIsos check_end_hom_isomorphisms(const GradedMoritaData& d);

// ϑ, Θ, j and GM ≅ M_e[G]. Throws MissingCofreeWitness.
CheckReport verify_cofree_isomorphisms(const GradedMoritaData& d, const CofreeWitness& w);

struct GaloisEquivalences {
    std::array<bool, 4> statements{};
    bool agree = false;
    std::string summary;
    CheckReport report;
};
// Throws HypothesisFailed when some C_α is not a left A-progenerator.
GaloisEquivalences galois_equivalence_battery(const GrouplikeFamily& x, const RingMorphism& b, std::uint64_t seed = 0);

}  // namespace gcoring
