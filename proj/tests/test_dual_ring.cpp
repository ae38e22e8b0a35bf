#include <doctest.h>

#include "gcoring/dual_ring.hpp"
#include "gcoring/error.hpp"
#include "gcoring/fixtures.hpp"

using namespace gcoring;

namespace {
const Field Q = Field::rationals();
}

TEST_CASE("dual of the trivial coring over Q is the group ring") {
    FiniteGroup c2 = FiniteGroup::cyclic(2);
    DualRing r = dual_ring(trivial_coring(field_algebra(Q), c2));
    CHECK(validate_dual_ring(r).ok());
    CHECK(r.ring.total->table == group_algebra(Q, c2)->table);
    CHECK(r.ring.total->unit == group_algebra(Q, c2)->unit);
}

TEST_CASE("dual rings of fixtures") {
    for (const auto& name : fixture_names()) {
        CAPTURE(name);
        Fixture fx = fixture_by_name(name);
        DualRing r = dual_ring(fx.coring);
        CHECK(validate_dual_ring(r).ok());
        const Algebra& t = *r.ring.total;
        for (std::size_t k = 0; k < t.dim; ++k) {
            // ε is a two-sided unit
            CHECK(t.product(t.unit, t.basis(k)) == t.basis(k));
            CHECK(t.product(t.basis(k), t.unit) == t.basis(k));
        }
        CHECK(check_iota(r).ok());
        CHECK(check_dual_basis_lemma(r).ok());
        CHECK(check_dual_basis_comultiplication(r).ok());
    }
    DualRing kc2 = dual_ring(fixture_kc2().coring);
    for (std::size_t a = 0; a < 2; ++a) CHECK(kc2.comps[a].dim == 4);
}

TEST_CASE("graded ring validation catches a product outside its degree") {
    DualRing r = dual_ring(trivial_coring(field_algebra(Q), FiniteGroup::cyclic(2)));
    GradedRing bad = r.ring;
    // u·u = u instead of 1
    Mat table = bad.total->table;
    table(0, 3) = Scalar(Q, 0);
    table(1, 3) = Scalar(Q, 1);
    bad.total = make_algebra(Q, "bad", 2, table, bad.total->unit);
    CHECK_FALSE(validate_graded_ring(bad).find("degree/1,1")->pass);
}

TEST_CASE("dual morphisms") {
    Fixture kc2 = fixture_kc2();
    DualRing r = dual_ring(kc2.coring);
    GradedRingMorphism id = dual_morphism(identity_coring_morphism(kc2.coring), r, r);
    CHECK(id.mat.is_identity());
    CHECK(validate_graded_ring_morphism(id).ok());

    CanonicalMorphism can = canonical_morphism(kc2.grouplike, kc2.base_map);
    DualRing rs = dual_ring(can.can.src);
    DualRing rc = dual_ring(can.can.dst);
    GradedRingMorphism dcan = dual_morphism(can.can, rc, rs);
    CHECK(validate_graded_ring_morphism(dcan).ok());
    for (std::size_t a = 0; a < 2; ++a) {
        Mat blk = rs.ring.blocks.proj(Q, a) * dcan.mat * rc.ring.blocks.incl(Q, a);
        CHECK(is_invertible(blk));
    }

    GroupCoringMorphism z = identity_coring_morphism(kc2.coring);
    z.maps[0] = Mat(Q, z.maps[0].rows(), z.maps[0].cols());
    CHECK_FALSE(validate_graded_ring_morphism(dual_morphism(z, r, r)).find("ring/ring-morphism/unit")->pass);
}

TEST_CASE("F3 and G3 are mutually inverse") {
    for (const auto& name : fixture_names()) {
        CAPTURE(name);
        Fixture fx = fixture_by_name(name);
        DualRing r = dual_ring(fx.coring);
        for (const GComodule& m : {coring_as_g_comodule(fx.coring), G1(comodule_from_grouplike(fx.grouplike)),
                                   zero_g_comodule(fx.coring)}) {
            GradedModule f3 = F3(m, r);
            CHECK(validate_graded_module(f3).ok());
            GComodule back = G3(f3, r);
            CHECK(same_g_comodule(back, m));
            CHECK(same_graded_module(F3(back, r), f3));
        }
    }
}

TEST_CASE("F4 of A is the action a·f = Σ f_α(x_{α^{-1}} a)") {
    Fixture kc2 = fixture_kc2();
    DualRing r = dual_ring(kc2.coring);
    Comodule a = comodule_from_grouplike(kc2.grouplike);
    Bimodule f4 = F4(a, r);
    CHECK(validate_bimodule(f4).ok());
    const FiniteGroup& g = kc2.coring->group;
    for (std::size_t k = 0; k < r.ring.total->dim; ++k) {
        const std::size_t al = r.ring.degree_of(k), ai = g.inverse(al);
        Mat fn = r.functional(al, Mat::unit_vector(Q, 4, k - r.ring.blocks.offset[al]));
        for (std::size_t j = 0; j < a.dim(); ++j)
            CHECK(f4.right[k].col(j) == fn * kc2.coring->comps[ai].right[j] * kc2.grouplike.x[ai]);
    }
    CHECK(F4(zero_comodule(kc2.coring), r).dim == 0);
    GradedModule g5 = G5(f4, r.ring);
    CHECK(validate_graded_module(g5).ok());
    CHECK(F5(g5).dim == 2 * f4.dim);
    CHECK(G5(F4(zero_comodule(kc2.coring), r), r.ring).dim() == 0);
}

TEST_CASE("forgetful and cofree squares commute") {
    for (const auto& name : fixture_names()) {
        CAPTURE(name);
        Fixture fx = fixture_by_name(name);
        DualRing r = dual_ring(fx.coring);
        Comodule a = comodule_from_grouplike(fx.grouplike);
        CHECK(check_square(coring_as_g_comodule(fx.coring), a, r).ok());
        CHECK(check_square(G1(a), F1(coring_as_g_comodule(fx.coring)), r).ok());
        CHECK(check_square(zero_g_comodule(fx.coring), zero_comodule(fx.coring), r).ok());
    }
}

TEST_CASE("cofree duals are group rings over R_e") {
    Fixture t = fixture_triv();
    DualRing rt = dual_ring(t.coring);
    CofreeDualIso it = cofree_dual_iso(rt, *t.witness);
    CHECK(it.report.ok());
    CHECK(it.phi.mat.is_identity());

    for (const char* name : {"FIX-SWE", "FIX-KC2"}) {
        CAPTURE(name);
        Fixture fx = fixture_by_name(name);
        DualRing r = dual_ring(fx.coring);
        CofreeDualIso iso = cofree_dual_iso(r, *fx.witness);
        CHECK(iso.report.ok());
        for (std::size_t a = 0; a < fx.coring->n(); ++a) CHECK(r.ring.blocks.dims[a] == 4);
    }

    Fixture swe = fixture_swe();
    CofreeWitness w = *swe.witness;
    w.gammas[1] = Mat(Q, 4, 4);
    try {
        cofree_dual_iso(dual_ring(swe.coring), w);
        FAIL("expected MissingCofreeWitness");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::MissingCofreeWitness);
    }
}
