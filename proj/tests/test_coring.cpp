#include <doctest.h>

#include "gcoring/fixtures.hpp"

using namespace gcoring;

namespace {
const Field Q = Field::rationals();
}

TEST_CASE("group tables") {
    CHECK(validate_group(FiniteGroup::cyclic(2)).ok());
    CHECK(validate_group(FiniteGroup::cyclic(3)).ok());
    CHECK(validate_group(FiniteGroup::symmetric3()).ok());
    // quasigroup that is not associative
    FiniteGroup bad = FiniteGroup::from_table({{0, 1, 2}, {1, 0, 2}, {2, 2, 0}});
    CHECK_FALSE(validate_group(bad).ok());
}

TEST_CASE("trivial coring over several bases") {
    for (AlgebraPtr a : {field_algebra(Q), product_algebra(Q, 2), group_algebra(Q, FiniteGroup::cyclic(2))})
        for (const FiniteGroup& g : {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3)}) {
            CoringPtr c = trivial_coring(a, g);
            CHECK(validate_group_coring(*c).ok());
        }
}

TEST_CASE("trivial coring with doubled counit fails the counit law at every element") {
    CoringPtr c = trivial_coring(field_algebra(Q), FiniteGroup::cyclic(2));
    CoringPtr bad = make_group_coring(c->group, c->base, c->comps, c->delta, c->counit.scaled(Scalar(Q, 2)));
    CheckReport r = validate_group_coring(*bad);
    CHECK_FALSE(r.find("counit/0")->pass);
    CHECK_FALSE(r.find("counit/1")->pass);
    CHECK(r.find("coassociativity/0,1,1")->pass);
}

TEST_CASE("fixture corings validate") {
    for (const auto& name : fixture_names()) {
        CAPTURE(name);
        Fixture fx = fixture_by_name(name);
        CHECK(validate_group_coring(*fx.coring).ok());
        CHECK(validate_grouplike(fx.grouplike).ok());
        REQUIRE(fx.witness.has_value());
        CHECK(verify_cofree(*fx.coring, *fx.witness).ok());
        CHECK(verify_cofree_identities(*fx.coring, *fx.witness).ok());
    }
}

TEST_CASE("fixture dimensions") {
    Fixture kc2 = fixture_kc2();
    CHECK(kc2.coring->comps[0].dim == 4);
    CHECK(kc2.coring->comps[1].dim == 4);
    Fixture swe = fixture_swe();
    CHECK(swe.coring->comps[0].dim == 4);
    CHECK(swe.coring->comps[1].dim == 4);
    Fixture ng = fixture_nongal();
    CHECK(ng.coring->comps[1].dim == 2);
}

TEST_CASE("coring morphisms") {
    Fixture kc2 = fixture_kc2();
    CHECK(validate_coring_morphism(identity_coring_morphism(kc2.coring)).ok());
    GroupCoringMorphism z = identity_coring_morphism(kc2.coring);
    for (auto& m : z.maps) m = Mat(Q, m.rows(), m.cols());
    CHECK_FALSE(validate_coring_morphism(z).find("morphism/counit")->pass);
}

TEST_CASE("cofree witness corruption") {
    Fixture swe = fixture_swe();
    CofreeWitness w = *swe.witness;
    w.gammas[1] = Mat(Q, 4, 4);
    CHECK_FALSE(verify_cofree(*swe.coring, w).find("cofree/iso/1")->pass);
    CofreeWitness w2 = *swe.witness;
    w2.gammas[1] = w2.gammas[1].scaled(Scalar(Q, 2));
    CheckReport r = verify_cofree(*swe.coring, w2);
    CHECK(r.find("cofree/iso/1")->pass);
    CHECK(r.find("cofree/comultiplication/0,0")->pass);
    // both sides pick up one factor 2 at (e,α) and (α,e); only (α,α) separates 1 from 4
    CHECK(r.find("cofree/comultiplication/0,1")->pass);
    CHECK(r.find("cofree/comultiplication/1,0")->pass);
    CHECK_FALSE(r.find("cofree/comultiplication/1,1")->pass);
}

TEST_CASE("graded packing roundtrip") {
    for (const auto& name : fixture_names()) {
        CAPTURE(name);
        Fixture fx = fixture_by_name(name);
        GradedCoring g = pack_graded_coring(*fx.coring);
        CHECK(validate_graded_coring(g).ok());
        CHECK(same_coring(*unpack_graded_coring(g), *fx.coring));
        for (std::size_t a = 1; a < fx.coring->n(); ++a)
            CHECK((g.counit * make_blocks(g.dims).incl(Q, a)).is_zero());
    }
    GradedCoring t = pack_graded_coring(*trivial_coring(field_algebra(Q), FiniteGroup::cyclic(2)));
    CHECK(t.module.dim == 2);
}
