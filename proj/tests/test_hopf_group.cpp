#include <doctest.h>

#include "gcoring/error.hpp"
#include "gcoring/fixtures.hpp"
#include "gcoring/hopf_group.hpp"

using namespace gcoring;

namespace {
const Field Q = Field::rationals();
const FiniteGroup C2 = FiniteGroup::cyclic(2);

std::string failures(const CheckReport& r) {
    std::string out;
    for (const auto& item : r.items)
        if (!item.pass) out += item.id + " ";
    return out;
}

// H_e = k, H_g = 0: a Hopf C_2-coalgebra that is not cofree.
HopfPtr collapsed_hopf() {
    auto h = std::make_shared<HopfGCoalgebra>();
    h->group = C2;
    h->field = Q;
    AlgebraPtr zero = make_algebra(Q, "0", 0, Mat(Q, 0, 0), Mat(Q, 0, 1));
    h->comps = {field_algebra(Q), zero};
    h->delta = {Mat::identity(Q, 1), Mat(Q, 0, 0), Mat(Q, 0, 0), Mat(Q, 0, 1)};
    h->counit = Mat::identity(Q, 1);
    h->antipode = {Mat::identity(Q, 1), Mat(Q, 0, 0)};
    return h;
}

RingMorphism unit_of(const AlgebraPtr& a) { return RingMorphism{field_algebra(Q), a, a->unit}; }
}  // namespace

TEST_CASE("Hopf G-coalgebra validation") {
    CHECK(validate_hopf_g_coalgebra(*cofree_hopf(trivial_hopf_algebra(Q), FiniteGroup::cyclic(3))).ok());
    HopfPtr kc2 = cofree_hopf(group_hopf_algebra(Q, C2), C2);
    CHECK(validate_hopf_g_coalgebra(*kc2).ok());
    CHECK(validate_hopf_g_coalgebra(*collapsed_hopf()).ok());

    // on Q[C_3] the antipode is g ↦ g^{-1}, so the identity breaks exactly the antipode law
    CheckReport bad = validate_hopf_g_coalgebra(corrupted_antipode_hopf());
    CHECK_FALSE(bad.ok());
    for (const auto& item : bad.items)
        if (!item.pass) CHECK(item.id.rfind("antipode/", 0) == 0);
}

TEST_CASE("cofree Hopf G-coalgebras transport the antipode") {
    HopfAlgebra he = group_hopf_algebra(Q, FiniteGroup::cyclic(3));
    HopfPtr h = cofree_hopf(he, C2);
    std::vector<Mat> l(2, Mat::identity(Q, 3));
    CHECK(validate_cofree_hopf_family(*h, l).ok());
    for (std::size_t a = 0; a < 2; ++a) CHECK(h->antipode[a] * l[C2.inverse(a)] == l[a] * he.antipode);
    CHECK(literal_cofree(*h) == std::optional<bool>(true));
    CHECK(literal_cofree(*collapsed_hopf()) == std::optional<bool>(false));
    // a non-multiplicative connecting map is rejected
    l[1] = l[1].scaled(Scalar(Q, 2));
    CHECK_FALSE(validate_cofree_hopf_family(*h, l).find("cofree/iso/1")->pass);
}

TEST_CASE("the coring A⊗H") {
    for (const char* name : {"FIX-KC2", "FIX-NONGAL"}) {
        CAPTURE(name);
        Fixture fx = fixture_by_name(name);
        REQUIRE(fx.comodule_algebra);
        CHECK(validate_comodule_algebra(*fx.comodule_algebra).ok());
        ComoduleAlgebraCoring cc = coring_from_comodule_algebra(*fx.comodule_algebra);
        CHECK(validate_group_coring(*cc.coring).ok());
        CHECK(validate_grouplike(cc.grouplike).ok());
    }
    // A = k, H = k gives the trivial coring
    HopfPtr k = cofree_hopf(trivial_hopf_algebra(Q), C2);
    ComoduleAlgebraCoring t = coring_from_comodule_algebra(trivial_comodule_algebra(field_algebra(Q), k));
    CHECK(validate_group_coring(*t.coring).ok());
    for (std::size_t a = 0; a < 2; ++a) {
        CHECK(t.coring->comps[a].dim == 1);
        CHECK(t.grouplike.x[a] == Mat::identity(Q, 1));
    }
    Fixture ng = fixture_nongal();
    for (std::size_t a = 0; a < 2; ++a) CHECK(ng.coring->comps[a].dim == 2);
}

TEST_CASE("Hopf-Galois detection") {
    Fixture kc2 = fixture_kc2();
    HopfGaloisResult g = hopf_galois_check(*kc2.comodule_algebra, kc2.grouplike, kc2.base_map);
    CHECK(g.galois);
    CHECK(g.coinvariants_match);
    CHECK(g.cofree == std::optional<bool>(true));
    CHECK(g.e_galois);
    CHECK_MESSAGE(g.report.ok(), failures(g.report));
    CHECK(coaction_invariants(*kc2.comodule_algebra).cols() == 1);

    Fixture ng = fixture_nongal();
    HopfGaloisResult n = hopf_galois_check(*ng.comodule_algebra, ng.grouplike, ng.base_map);
    CHECK_FALSE(n.galois);
    CHECK(n.coinvariants_match);
    CHECK_FALSE(n.e_galois);
    CHECK(n.report.find("cofree-criterion")->pass);
}

TEST_CASE("cofree criterion on a collapsed Hopf G-coalgebra") {
    HopfPtr h = collapsed_hopf();
    ComoduleAlgebra a{field_algebra(Q), h, {Mat::identity(Q, 1), Mat(Q, 0, 1)}};
    CHECK(validate_comodule_algebra(a).ok());
    ComoduleAlgebraCoring cc = coring_from_comodule_algebra(a);
    CHECK(validate_group_coring(*cc.coring).ok());
    HopfGaloisResult r = hopf_galois_check(a, cc.grouplike, unit_of(a.alg));
    CHECK_FALSE(r.galois);
    // the e-slice alone is Galois; cofreeness is what fails
    CHECK(r.e_galois);
    CHECK(r.cofree == std::optional<bool>(false));
    CHECK(r.report.find("cofree-criterion")->pass);
}

TEST_CASE("relative Hopf modules are comodules over A⊗H") {
    for (const char* name : {"FIX-KC2", "FIX-NONGAL"}) {
        CAPTURE(name);
        Fixture fx = fixture_by_name(name);
        const ComoduleAlgebra& ca = *fx.comodule_algebra;

        // A itself: ρ_α is the coaction
        RelativeHopfModule a = hopf_module_from_comodule(comodule_from_grouplike(fx.grouplike));
        CHECK(validate_relative_hopf_module(ca, a).ok());
        for (std::size_t x = 0; x < 2; ++x) CHECK(a.rho[x] == ca.rho[x]);

        RelativeHopfModule z = hopf_module_from_comodule(zero_comodule(fx.coring));
        CHECK(validate_relative_hopf_module(ca, z).ok());

        StructureTheoremObjects objs = default_structure_objects(fx.grouplike, fx.base_map, 0);
        CheckReport rep = relative_hopf_module_check(ca, fx.grouplike, fx.base_map, objs);
        CHECK_MESSAGE(rep.ok(), failures(rep));
    }
    // a coaction that breaks the compatibility with the A-action
    Fixture kc2 = fixture_kc2();
    RelativeHopfModule a = hopf_module_from_comodule(comodule_from_grouplike(kc2.grouplike));
    RelativeHopfModule bad = a;
    bad.module.right[1] = Mat::identity(Q, 2);
    CHECK_FALSE(validate_relative_hopf_module(*kc2.comodule_algebra, bad).find("compatibility/0")->pass);
}

TEST_CASE("the dual ring of A⊗H is a smash product") {
    Fixture kc2 = fixture_kc2();
    SmashDual s = smash_dual(*kc2.comodule_algebra, kc2.coring);
    CHECK_MESSAGE(s.report.ok(), failures(s.report));
    for (std::size_t a = 0; a < 2; ++a) {
        CHECK(s.smash.blocks.dims[a] == 4);
        CHECK(s.dual.ring.blocks.dims[a] == 4);
    }
    CHECK(validate_algebra(*s.smash.total).ok());

    HopfPtr k = cofree_hopf(trivial_hopf_algebra(Q), C2);
    AlgebraPtr a = group_algebra(Q, C2);
    ComoduleAlgebra ta = trivial_comodule_algebra(a, k);
    SmashDual t = smash_dual(ta, coring_from_comodule_algebra(ta).coring);
    CHECK(t.report.ok());
    for (std::size_t d = 0; d < 2; ++d) CHECK(t.smash.blocks.dims[d] == a->dim);

    Fixture ng = fixture_nongal();
    SmashDual n = smash_dual(*ng.comodule_algebra, ng.coring);
    CHECK(n.report.ok());
}
