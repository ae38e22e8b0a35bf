#include "gcoring/suites.hpp"

#include <functional>
#include <future>
#include <sstream>

#include <json.hpp>

#include "gcoring/comodule.hpp"
#include "gcoring/dual_ring.hpp"
#include "gcoring/error.hpp"
#include "gcoring/galois.hpp"
#include "gcoring/hopf_group.hpp"
#include "gcoring/morita.hpp"

namespace gcoring {

namespace {

using Battery = std::function<void(const Fixture&, std::uint64_t, CheckReport&)>;

GComodule seeded_induced(const Fixture& fx, std::uint64_t seed) {
    return induced_g_comodule(fx.coring, random_free_module(fx.coring->base, 2, seed));
}

void validate_suite(const Fixture& fx, std::uint64_t seed, CheckReport& r) {
    const CoringPtr& c = fx.coring;
    r.merge(validate_group(c->group), "group");
    r.merge(validate_algebra(*c->base), "base");
    r.merge(validate_group_coring(*c), "coring");
    r.merge(validate_grouplike(fx.grouplike), "grouplike");
    r.merge(validate_ring_morphism(fx.base_map), "base-map");
    Comodule a = comodule_from_grouplike(fx.grouplike);
    GComodule self = coring_as_g_comodule(c);
    GComodule ind = seeded_induced(fx, seed);
    r.merge(validate_comodule(a), "comodule/A");
    r.merge(validate_comodule(F1(self)), "comodule/F1C");
    r.merge(validate_comodule(F1(ind)), "comodule/F1X");
    r.merge(validate_g_comodule(self), "g-comodule/C");
    r.merge(validate_g_comodule(G1(a)), "g-comodule/G1A");
    r.merge(validate_g_comodule(ind), "g-comodule/X");
    if (fx.witness) r.merge(verify_cofree(*c, *fx.witness), "cofree-witness");
    if (fx.comodule_algebra) {
        r.merge(validate_hopf_g_coalgebra(*fx.comodule_algebra->hopf), "hopf");
        r.merge(validate_comodule_algebra(*fx.comodule_algebra), "comodule-algebra");
    }
}

void comodules_suite(const Fixture& fx, std::uint64_t seed, CheckReport& r) {
    const CoringPtr& c = fx.coring;
    Comodule a = comodule_from_grouplike(fx.grouplike);
    GComodule g1a = G1(a);
    GComodule self = coring_as_g_comodule(c);
    r.merge(check_adjunction_F1G1(g1a, a), "adjunction/G1A,A");
    r.merge(check_adjunction_F1G1(self, F1(self)), "adjunction/C,C");
    r.merge(check_frobenius_F1G1(g1a, a), "frobenius/G1A,A");
    r.merge(check_frobenius_F1G1(self, F1(self)), "frobenius/C,C");
    if (fx.witness) {
        CoringPtr ce = e_slice(*c);
        r.merge(check_cofree_equivalence(self, *fx.witness, ce), "cofree/C");
        r.merge(check_cofree_equivalence(g1a, *fx.witness, ce), "cofree/G1A");
        r.merge(check_cofree_equivalence(seeded_induced(fx, seed), *fx.witness, ce), "cofree/X");
    }
}

void dual_ring_suite(const Fixture& fx, std::uint64_t seed, CheckReport& r) {
    const CoringPtr& c = fx.coring;
    DualRing d = dual_ring(c);
    r.merge(validate_dual_ring(d), "ring");
    r.merge(check_iota(d), "iota");
    r.merge(check_dual_basis_lemma(d), "dual-basis");
    r.merge(check_dual_basis_comultiplication(d), "dual-basis-delta");
    Comodule a = comodule_from_grouplike(fx.grouplike);
    GComodule self = coring_as_g_comodule(c);
    const std::vector<std::pair<std::string, GComodule>> objects{
        {"C", self}, {"G1A", G1(a)}, {"X", seeded_induced(fx, seed)}, {"0", zero_g_comodule(c)}};
    for (const auto& [name, m] : objects) {
        GradedModule f3 = F3(m, d);
        r.merge(validate_graded_module(f3), "F3/" + name);
        GComodule back = G3(f3, d);
        r.add("G3F3/" + name, "G3∘F3 = id on graded comodules", same_g_comodule(back, m), "G3(F3(M)) differs from M");
        r.add("F3G3/" + name, "F3∘G3 = id on graded modules", same_graded_module(F3(back, d), f3),
              "F3(G3(N)) differs from N");
    }
    r.merge(check_square(self, a, d), "square/C,A");
    r.merge(check_square(G1(a), F1(self), d), "square/G1A,F1C");
    if (fx.witness) r.merge(cofree_dual_iso(d, *fx.witness).report, "cofree-dual");
}

void galois_suite(const Fixture& fx, std::uint64_t, CheckReport& r) {
    GaloisVerdict v = is_galois(fx.grouplike, fx.base_map);
    r.merge(v.report, "verdict");
    r.add("coinvariants/e-slice", "coinvariants agree with those of the e-slice",
          coinvariants_match_e_slice(fx.grouplike), "T differs from the coinvariants of (C_e, x_e)");
    if (auto dec = galois_decomposition(fx.grouplike)) {
        r.merge(dec->report, "decomposition");
        r.add("decomposition/converse", "cofree witness of a Galois coring gives back the Galois property",
              galois_from_cofree(fx.grouplike, dec->witness), "converse direction failed");
    }
    Bimodule b = forget_left(regular_bimodule(fx.base_map.src));
    r.merge(check_adjunction_F7G7(fx.grouplike, fx.base_map, b, coring_as_g_comodule(fx.coring)), "adjunction/F7G7");
}

void structure_suite(const Fixture& fx, std::uint64_t seed, CheckReport& r) {
    StructureTheoremResult s =
        structure_theorem_battery(fx.grouplike, fx.base_map, default_structure_objects(fx.grouplike, fx.base_map, seed));
    r.merge(s.report, "battery");
}

void morita_suite(const Fixture& fx, std::uint64_t, CheckReport& r) {
    DualRing d = dual_ring(fx.coring);
    r.merge(validate_character(fx.grouplike, d, grouplike_character(fx.grouplike, d)), "character");
    CoringMoritaContexts m = build_context_M(fx.grouplike, d);
    r.merge(m.report, "context");
    r.merge(is_strict(m.m).report, "strictness");
}

void graded_morita_suite(const Fixture& fx, std::uint64_t, CheckReport& r) {
    GradedMoritaData d = build_Q_and_contexts(fx.grouplike, dual_ring(fx.coring));
    r.merge(d.report, "contexts");
    r.merge(check_end_hom_isomorphisms(d).report, "end-hom");
    r.merge(is_strict(d.gm).report, "strictness");
    if (fx.witness) r.merge(verify_cofree_isomorphisms(d, *fx.witness), "cofree");
}

void equivalences_suite(const Fixture& fx, std::uint64_t seed, CheckReport& r) {
    try {
        r.merge(galois_equivalence_battery(fx.grouplike, fx.base_map, seed).report, "battery");
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::HypothesisFailed && e.kind() != ErrorKind::ImageNotInCoinvariants) throw;
        r.add("hypotheses", "components are left progenerators and B lands in the coinvariants", false, e.what());
    }
}

void hopf_suite(const Fixture& fx, std::uint64_t seed, CheckReport& r) {
    if (!fx.comodule_algebra) {
        r.add("skipped", "no comodule algebra attached", true);
        return;
    }
    const ComoduleAlgebra& ca = *fx.comodule_algebra;
    r.merge(validate_hopf_g_coalgebra(*ca.hopf), "hopf");
    r.merge(validate_comodule_algebra(ca), "comodule-algebra");
    ComoduleAlgebraCoring cc = coring_from_comodule_algebra(ca);
    r.add("coring/matches", "the attached coring is A⊗H", same_coring(*cc.coring, *fx.coring),
          "coring differs from A⊗H built from the comodule algebra");
    RingMorphism b = same_algebra(fx.base_map.dst, ca.alg) ? fx.base_map : coinvariant_inclusion(cc.grouplike);
    r.merge(hopf_galois_check(ca, cc.grouplike, b).report, "galois");
    r.merge(relative_hopf_module_check(ca, cc.grouplike, b, default_structure_objects(cc.grouplike, b, seed)),
            "relative-modules");
    r.merge(smash_dual(ca, cc.coring).report, "smash");
}

const std::vector<std::pair<std::string, Battery>>& batteries() {
    static const std::vector<std::pair<std::string, Battery>> table{
        {"validate", validate_suite},   {"comodules", comodules_suite},
        {"dual-ring", dual_ring_suite}, {"galois", galois_suite},
        {"structure-theorem", structure_suite}, {"morita", morita_suite},
        {"graded-morita", graded_morita_suite}, {"section9", equivalences_suite},
        {"hopf", hopf_suite},
    };
    return table;
}

CheckReport run_battery(const std::string& name, const Battery& b, const Fixture& fx, std::uint64_t seed) {
    CheckReport r;
    r.suite = name;
    try {
        b(fx, seed, r);
    } catch (const std::exception& e) {
        r.add("error", "battery ran to completion", false, e.what());
    }
    r.sort_items();
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& [name, b] : batteries()) n.push_back(name);
        n.push_back("all");
        return n;
    }();
    return names;
}

CheckReport run_suite(const Fixture& fx, const std::string& suite, std::uint64_t seed) {
    if (suite == "all") {
        std::vector<std::future<CheckReport>> parts;
        for (const auto& [name, b] : batteries())
            parts.push_back(std::async(std::launch::async, run_battery, name, b, std::cref(fx), seed));
        CheckReport r;
        r.suite = "all";
        for (std::size_t i = 0; i < parts.size(); ++i) r.merge(parts[i].get(), batteries()[i].first);
        r.sort_items();
        return r;
    }
    for (const auto& [name, b] : batteries())
        if (name == suite) return run_battery(name, b, fx, seed);
    throw Error(ErrorKind::UnknownSuite, "unknown suite \"" + suite + "\"");
}

CheckReport run_suite(const StructureFile& sf, const std::string& suite, std::uint64_t seed) {
    return run_suite(sf.target, suite, seed);
}

std::string format_machine(const CheckReport& r, const std::string& target, std::uint64_t seed) {
    nlohmann::ordered_json out;
    out["target"] = target;
    out["suite"] = r.suite;
    out["seed"] = seed;
    out["verdict"] = r.ok() ? "pass" : "fail";
    out["failures"] = r.failures();
    nlohmann::ordered_json items = nlohmann::ordered_json::array();
    for (const auto& it : r.items) {
        nlohmann::ordered_json j;
        j["id"] = it.id;
        j["anchor"] = it.anchor;
        j["pass"] = it.pass;
        if (!it.pass) j["witness"] = it.witness;
        items.push_back(std::move(j));
    }
    out["items"] = std::move(items);
    return out.dump(2) + "\n";
}

std::string format_text(const CheckReport& r, const std::string& target, std::uint64_t seed) {
    std::ostringstream os;
    os << "suite " << r.suite << " on " << target << " (seed " << seed << ")\n";
    for (const auto& it : r.items) {
        os << (it.pass ? "PASS " : "FAIL ") << it.id << "  [" << it.anchor << "]";
        if (!it.pass && !it.witness.empty()) os << "\n     witness: " << it.witness;
        os << "\n";
    }
    os << (r.ok() ? "OVERALL PASS" : "OVERALL FAIL") << " (" << r.items.size() - r.failures() << "/" << r.items.size()
       << " checks passed)\n";
    return os.str();
}

}  // namespace gcoring
