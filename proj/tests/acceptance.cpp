// One PASS/FAIL line per acceptance criterion. Optional argument: path to the
// CLI executable, used for the cross-process determinism check.
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "gcoring/comodule.hpp"
#include "gcoring/dual_ring.hpp"
#include "gcoring/error.hpp"
#include "gcoring/fixtures.hpp"
#include "gcoring/galois.hpp"
#include "gcoring/hopf_group.hpp"
#include "gcoring/morita.hpp"
#include "gcoring/suites.hpp"

using namespace gcoring;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    void require(bool cond, const std::string& what) {
        if (!cond) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

const Field Q = Field::rationals();
std::string cli_path;

bool passes(const CheckReport& r, const std::string& id) {
    const CheckItem* it = r.find(id);
    return it && it->pass;
}

Outcome axiom_batteries() {
    Outcome o;
    for (const auto& name : fixture_names()) {
        Fixture fx = fixture_by_name(name);
        Comodule a = comodule_from_grouplike(fx.grouplike);
        GComodule self = coring_as_g_comodule(fx.coring);
        o.require(validate_group_coring(*fx.coring).ok(), name + " coring");
        o.require(validate_grouplike(fx.grouplike).ok(), name + " grouplike");
        o.require(validate_comodule(a).ok(), name + " comodule A");
        o.require(validate_comodule(F1(self)).ok(), name + " comodule F1(C)");
        o.require(validate_g_comodule(self).ok(), name + " G-comodule C");
        o.require(validate_g_comodule(G1(a)).ok(), name + " G-comodule G1(A)");
    }
    return o;
}

Outcome adjunctions() {
    Outcome o;
    for (const char* name : {"FIX-KC2", "FIX-TRIV"}) {
        Fixture fx = fixture_by_name(name);
        Comodule a = comodule_from_grouplike(fx.grouplike);
        GComodule self = coring_as_g_comodule(fx.coring);
        const std::string n = name;
        o.require(check_adjunction_F1G1(G1(a), a).ok(), n + " F1 ⊣ G1 on (G1(A), A)");
        o.require(check_adjunction_F1G1(self, F1(self)).ok(), n + " F1 ⊣ G1 on (C, C)");
        o.require(check_frobenius_F1G1(G1(a), a).ok(), n + " G1 ⊣ F1 on (G1(A), A)");
        o.require(check_frobenius_F1G1(self, F1(self)).ok(), n + " G1 ⊣ F1 on (C, C)");
    }
    return o;
}

Outcome cofree_comparisons() {
    Outcome o;
    for (const char* name : {"FIX-KC2", "FIX-SWE"}) {
        Fixture fx = fixture_by_name(name);
        const std::string n = name;
        for (const GComodule& m : {coring_as_g_comodule(fx.coring), G1(comodule_from_grouplike(fx.grouplike)),
                                   induced_g_comodule(fx.coring, random_free_module(fx.coring->base, 2, 0))}) {
            CofreeComparison cmp = cofree_comparison(m, *fx.witness);
            for (std::size_t a = 0; a < fx.coring->n(); ++a) {
                o.require((cmp.phi[a] * cmp.psi[a]).is_identity(), n + " φ∘ψ at " + std::to_string(a));
                o.require((cmp.psi[a] * cmp.phi[a]).is_identity(), n + " ψ∘φ at " + std::to_string(a));
            }
        }
        o.require(check_cofree_equivalence(coring_as_g_comodule(fx.coring), *fx.witness, e_slice(*fx.coring)).ok(),
                  n + " cofree equivalence battery");
    }
    return o;
}

Outcome dual_rings() {
    Outcome o;
    for (const auto& name : fixture_names()) {
        Fixture fx = fixture_by_name(name);
        DualRing r = dual_ring(fx.coring);
        o.require(validate_dual_ring(r).ok(), name + " # associative and unital");
        o.require(check_dual_basis_comultiplication(r).ok(), name + " dual basis comultiplication");
        Comodule a = comodule_from_grouplike(fx.grouplike);
        for (const GComodule& m : {coring_as_g_comodule(fx.coring), G1(a), zero_g_comodule(fx.coring)}) {
            GradedModule f3 = F3(m, r);
            GComodule back = G3(f3, r);
            o.require(same_g_comodule(back, m) && same_graded_module(F3(back, r), f3), name + " F3/G3 roundtrip");
        }
        o.require(check_square(coring_as_g_comodule(fx.coring), a, r).ok(), name + " forgetful square");
    }
    Fixture t = fixture_triv();
    CofreeDualIso it = cofree_dual_iso(dual_ring(t.coring), *t.witness);
    o.require(it.report.ok() && it.group_ring.total->table == group_algebra(Q, FiniteGroup::cyclic(2))->table &&
                  it.phi.mat.is_identity(),
              "FIX-TRIV R_e[G] ≅ Q[C_2]");
    Fixture s = fixture_swe();
    CofreeDualIso is = cofree_dual_iso(dual_ring(s.coring), *s.witness);
    o.require(is.report.ok() && validate_graded_ring_morphism(is.phi).ok(), "FIX-SWE R_e[G] → R multiplicative");
    return o;
}

Outcome galois_verdicts() {
    Outcome o;
    o.require(is_galois(fixture_kc2().grouplike).galois, "FIX-KC2 Galois");
    o.require(is_galois(fixture_triv().grouplike).galois, "FIX-TRIV Galois");
    GaloisVerdict n = is_galois(fixture_nongal().grouplike);
    o.require(!n.galois, "FIX-NONGAL not Galois");
    for (const char* id : {"can-bijective/0", "can-bijective/1"}) {
        const CheckItem* it = n.report.find(id);
        o.require(it && !it->pass && it->witness.find("dim 1 → dim 2") != std::string::npos,
                  std::string("FIX-NONGAL witness ") + id);
    }
    return o;
}

Outcome structure_theorem() {
    Outcome o;
    for (const char* name : {"FIX-KC2", "FIX-NONGAL"}) {
        Fixture fx = fixture_by_name(name);
        StructureTheoremResult r =
            structure_theorem_battery(fx.grouplike, fx.base_map, default_structure_objects(fx.grouplike, fx.base_map, 0));
        const bool expect = std::string(name) == "FIX-KC2";
        o.require(r.agree && r.report.ok(), std::string(name) + " sides agree");
        o.require(r.side_galois == expect && r.side_equivalence == expect, std::string(name) + " side values");
    }
    return o;
}

Outcome morita_contexts() {
    Outcome o;
    for (const auto& name : fixture_names()) {
        Fixture fx = fixture_by_name(name);
        DualRing r = dual_ring(fx.coring);
        CoringMoritaContexts m = build_context_M(fx.grouplike, r);
        o.require(passes(m.report, "O=O'") && passes(m.report, "T=T'"), name + " O = O′");
        GradedMoritaData d = build_Q_and_contexts(fx.grouplike, r);
        for (const char* id : {"Q=Q'", "S=S'", "S^G=T", "S'^G=T'"}) o.require(passes(d.report, id), name + " " + id);
        EndHomIsos iso = check_end_hom_isomorphisms(d);
        o.require(passes(iso.report, "square/phi") && passes(iso.report, "square/psi") && iso.report.ok(),
                  name + " END/HOM squares");
        if (name == "FIX-KC2") o.require(is_strict(d.gm).strict, "FIX-KC2 𝔾𝕄 strict");
        if (name == "FIX-NONGAL") o.require(!is_strict(d.gm).strict, "FIX-NONGAL 𝔾𝕄 not strict");
        if (name == "FIX-KC2" || name == "FIX-SWE")
            o.require(verify_cofree_isomorphisms(d, *fx.witness).ok(), name + " 𝔾𝕄 ≅ 𝕄_e[G]");
    }
    return o;
}

Outcome four_way() {
    Outcome o;
    for (const char* name : {"FIX-KC2", "FIX-TRIV", "FIX-NONGAL"}) {
        Fixture fx = fixture_by_name(name);
        GaloisEquivalences r = galois_equivalence_battery(fx.grouplike, fx.base_map, 0);
        const bool v = std::string(name) != "FIX-NONGAL";
        o.require(r.agree && r.report.ok(), std::string(name) + " agreement");
        o.require(r.statements == std::array<bool, 4>{v, v, v, v}, std::string(name) + " values");
    }
    return o;
}

Outcome hopf_applications() {
    Outcome o;
    Fixture kc2 = fixture_kc2();
    const ComoduleAlgebra& ca = *kc2.comodule_algebra;
    SmashDual s = smash_dual(ca, kc2.coring);
    o.require(s.report.ok(), "smash dual battery");
    bool mult = false;
    for (const auto& it : s.report.items) mult = mult || it.id.rfind("lambda/ring/", 0) == 0;
    o.require(mult, "λ multiplicativity items present");
    for (std::size_t a = 0; a < kc2.coring->n(); ++a)
        o.require(s.smash.blocks.dims[a] == s.dual.ring.blocks.dims[a], "degree " + std::to_string(a) + " dims");
    HopfGaloisResult g = hopf_galois_check(ca, kc2.grouplike, kc2.base_map);
    o.require(passes(g.report, "cofree-criterion"), "Galois ⇔ cofree ∧ e-Galois");
    o.require(g.galois && g.cofree == std::optional<bool>(true) && g.e_galois, "FIX-KC2 both sides true");
    CheckReport bad = validate_hopf_g_coalgebra(corrupted_antipode_hopf());
    bool only_antipode = !bad.ok();
    for (const auto& id : bad.failed_ids()) only_antipode = only_antipode && id.rfind("antipode/", 0) == 0;
    o.require(only_antipode, "corrupted fixture fails exactly the antipode law");
    return o;
}

std::string capture(const std::string& cmd, int& status) {
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) {
        status = -1;
        return out;
    }
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    status = pclose(p);
    return out;
}

Outcome determinism() {
    Outcome o;
    Fixture fx = fixture_kc2();
    const std::string a = format_machine(run_suite(fx, "all", 0), fx.name, 0);
    const std::string b = format_machine(run_suite(fx, "all", 0), fx.name, 0);
    o.require(a == b, "in-process reports differ");
    if (!cli_path.empty()) {
        const std::string cmd = "'" + cli_path + "' check FIX-KC2 --suite all --seed 0 --format machine";
        int s1 = 0, s2 = 0;
        const std::string r1 = capture(cmd, s1), r2 = capture(cmd, s2);
        o.require(s1 == 0 && s2 == 0, "CLI exit status");
        o.require(!r1.empty() && r1 == r2, "CLI reports differ");
        o.require(r1 == a, "CLI report differs from the library report");
    }
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) cli_path = argv[1];
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"AC-1 axiom batteries on FIX-TRIV, FIX-KC2, FIX-SWE, FIX-NONGAL", axiom_batteries},
        {"AC-2 adjunction and Frobenius hom bijections on FIX-KC2, FIX-TRIV", adjunctions},
        {"AC-3 cofree comparison maps mutually inverse on FIX-KC2, FIX-SWE", cofree_comparisons},
        {"AC-4 dual ring associativity, dual basis identity, F3/G3, squares, cofree dual", dual_rings},
        {"AC-5 Galois verdicts with dimension witness", galois_verdicts},
        {"AC-6 structure theorem sides agree", structure_theorem},
        {"AC-7 Morita subspace equalities, strictness, END/HOM squares, cofree contexts", morita_contexts},
        {"AC-8 four-way Galois agreement", four_way},
        {"AC-9 smash dual, Hopf-Galois criterion, antipode negative test", hopf_applications},
        {"AC-10 CLI determinism of check FIX-KC2 --suite all --seed 0 --format machine", determinism},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        if (ms > 10000) o.require(false, "took " + std::to_string(ms) + " ms");
        std::cout << (o.pass ? "PASS " : "FAIL ") << name << " (" << ms << " ms)";
        if (!o.pass) std::cout << ": " << o.detail;
        std::cout << "\n";
        failed += o.pass ? 0 : 1;
    }
    std::cout << (failed == 0 ? "ALL CRITERIA PASS" : std::to_string(failed) + " CRITERIA FAIL") << "\n";
    return failed == 0 ? 0 : 1;
}
