#include <doctest.h>

#include "gcoring/error.hpp"
#include "gcoring/fixtures.hpp"
#include "gcoring/morita.hpp"

using namespace gcoring;

namespace {
const Field Q = Field::rationals();

std::string failures(const CheckReport& r) {
    std::string out;
    for (const auto& item : r.items)
        if (!item.pass) out += item.id + " ";
    return out;
}
}  // namespace

TEST_CASE("grouplike character laws") {
    for (const auto& name : fixture_names()) {
        CAPTURE(name);
        Fixture fx = fixture_by_name(name);
        DualRing r = dual_ring(fx.coring);
        Mat chi = grouplike_character(fx.grouplike, r);
        CheckReport rep = validate_character(fx.grouplike, r, chi);
        CHECK_MESSAGE(rep.ok(), failures(rep));
    }
    // a wrong character breaks the unit law
    Fixture kc2 = fixture_kc2();
    DualRing r = dual_ring(kc2.coring);
    Mat bad = grouplike_character(kc2.grouplike, r).scaled(Scalar(Q, 2));
    CHECK_FALSE(validate_character(kc2.grouplike, r, bad).find("character/unit")->pass);
}

TEST_CASE("context M on fixtures") {
    for (const auto& name : fixture_names()) {
        CAPTURE(name);
        Fixture fx = fixture_by_name(name);
        CoringMoritaContexts m = build_context_M(fx.grouplike, dual_ring(fx.coring));
        CHECK_MESSAGE(m.report.ok(), failures(m.report));
        CHECK(m.report.find("T=T'")->pass);
        CHECK(m.report.find("O=O'")->pass);
    }
}

TEST_CASE("ungraded M for a Galois coring: tau bijective, mu bounded by dimension") {
    Fixture kc2 = fixture_kc2();
    DualRing r = dual_ring(kc2.coring);
    CoringMoritaContexts m = build_context_M(kc2.grouplike, r);
    Strictness s = is_strict(m.m);
    CHECK(s.tau_bijective);
    // O⊗_T A has dim ≤ dim O · dim A = 4 < dim R = 8
    CHECK(m.m.qp.module.dim == 4);
    CHECK(r.ring.total->dim == 8);
    CHECK(rank(m.m.mu()) == 4);
    CHECK_FALSE(s.strict);
    CHECK(s.report.ok());
    // the graded context is strict
    GradedMoritaData d = build_Q_and_contexts(kc2.grouplike, r);
    CHECK(is_strict(d.gm).strict);
}

TEST_CASE("M for the trivial coaction: tau is onto, mu is not") {
    Fixture ng = fixture_nongal();
    DualRing r = dual_ring(ng.coring);
    CoringMoritaContexts m = build_context_M(ng.grouplike, r);
    CHECK(m.o.cols() == 1);
    Strictness s = is_strict(m.m);
    CHECK(s.tau_surjective);
    CHECK_FALSE(s.mu_surjective);
    CHECK(rank(m.m.mu()) == 1);
    CHECK(r.ring.total->dim == 4);
    CHECK_FALSE(s.strict);
}

TEST_CASE("graded endomorphisms and homs") {
    Fixture kc2 = fixture_kc2();
    DualRing r = dual_ring(kc2.coring);
    GradedModule reg = regular_graded_module(r.ring);
    GradedHom end = graded_hom(reg, reg);
    // END_R(R_R) ≅ R by left multiplication
    CHECK(end.dim() == r.ring.total->dim);
    for (std::size_t a = 0; a < 2; ++a) CHECK(end.blocks.dims[a] == r.ring.blocks.dims[a]);
    GradedRing e = graded_end(reg, end);
    CHECK(validate_graded_ring(e).ok());

    GradedModule zero = F3(zero_g_comodule(kc2.coring), r);
    CHECK(graded_hom(reg, zero).dim() == 0);
    CHECK(graded_hom(zero, reg).dim() == 0);
}

TEST_CASE("module contexts: regular is strict, zero is degenerate") {
    Fixture kc2 = fixture_kc2();
    DualRing r = dual_ring(kc2.coring);
    ModuleContext reg = context_from_graded_module(regular_graded_module(r.ring));
    CheckReport rep = validate_graded_morita_context(reg.ctx);
    CHECK_MESSAGE(rep.ok(), failures(rep));
    CHECK(is_strict(reg.ctx).strict);

    ModuleContext z = context_from_graded_module(F3(zero_g_comodule(kc2.coring), r));
    CHECK(validate_graded_morita_context(z.ctx).ok());
    Strictness s = is_strict(z.ctx);
    CHECK_FALSE(s.strict);
    CHECK_FALSE(s.mu_surjective);

    MoritaContext st = standard_context(regular_bimodule(kc2.coring->base));
    CHECK(validate_morita_context(st).ok());
    CHECK(is_strict(st).strict);
}

TEST_CASE("A{G} carries a·f = Σ f_α(x a) in each degree") {
    Fixture kc2 = fixture_kc2();
    DualRing r = dual_ring(kc2.coring);
    GradedModule ag = build_A_braces_G(kc2.grouplike, r);
    CHECK(validate_graded_module(ag).ok());
    const std::size_t da = kc2.coring->base->dim;
    for (std::size_t a = 0; a < 2; ++a) CHECK(ag.blocks.dims[a] == da);
    CHECK(da == 2);
    // the unit of R acts trivially
    CHECK(ag.module.right_action(r.ring.total->unit).is_identity());
    const FiniteGroup& g = kc2.coring->group;
    const Blocks& pb = ag.blocks;
    for (std::size_t k = 0; k < r.ring.total->dim; ++k) {
        const std::size_t be = r.ring.degree_of(k), bi = g.inverse(be);
        Mat fn = r.functional(be, Mat::unit_vector(Q, r.ring.blocks.dims[be], k - r.ring.blocks.offset[be]));
        for (std::size_t a = 0; a < 2; ++a)
            for (std::size_t i = 0; i < da; ++i) {
                Mat expect = fn * (kc2.coring->comps[bi].right[i] * kc2.grouplike.x[bi]);
                Mat got = pb.proj(Q, g.mul(a, be)) * ag.module.right[k] * pb.incl(Q, a) * kc2.coring->base->basis(i);
                CHECK(got == expect);
            }
    }
}

TEST_CASE("twisted rings, Q and graded contexts on fixtures") {
    for (const auto& name : fixture_names()) {
        CAPTURE(name);
        Fixture fx = fixture_by_name(name);
        GradedMoritaData d = build_Q_and_contexts(fx.grouplike, dual_ring(fx.coring));
        CHECK_MESSAGE(d.report.ok(), failures(d.report));
        for (const char* id : {"S=S'", "S^G=T", "Q=Q'", "GM/associativity/P", "GM/degree/tau"})
            CHECK(d.report.find(id)->pass);
        EndHomIsos iso = check_end_hom_isomorphisms(d);
        CHECK_MESSAGE(iso.report.ok(), failures(iso.report));
    }
}

TEST_CASE("GM strictness follows the Galois property") {
    Fixture kc2 = fixture_kc2();
    GradedMoritaData d = build_Q_and_contexts(kc2.grouplike, dual_ring(kc2.coring));
    CHECK(is_strict(d.gm).strict);
    CHECK(d.tw.s.algebra->dim == coinvariant_ring(kc2.grouplike).dim());

    Fixture ng = fixture_nongal();
    GradedMoritaData dn = build_Q_and_contexts(ng.grouplike, dual_ring(ng.coring));
    CHECK_FALSE(is_strict(dn.gm).strict);
}

TEST_CASE("twisted group ring of a trivial shift is the group ring") {
    FiniteGroup c2 = FiniteGroup::cyclic(2);
    AlgebraPtr k = field_algebra(Q);
    AlgebraPtr pw = tensor_algebra(product_algebra(Q, 2), k);
    Mat diag = Mat::column_ints(Q, {1, 1});
    Subalgebra s = make_subalgebra(pw, diag, "k");
    std::vector<Mat> shift{Mat::identity(Q, 2), Mat::from_ints(Q, {{0, 1}, {1, 0}})};
    GradedRing gs = twisted_group_ring(s, c2, shift, "kC2");
    CHECK(validate_graded_ring(gs).ok());
    CHECK(gs.total->table == group_algebra(Q, c2)->table);
}

TEST_CASE("cofree contexts are group-ring contexts") {
    for (const char* name : {"FIX-KC2", "FIX-SWE", "FIX-TRIV"}) {
        CAPTURE(name);
        Fixture fx = fixture_by_name(name);
        GradedMoritaData d = build_Q_and_contexts(fx.grouplike, dual_ring(fx.coring));
        CheckReport rep = verify_cofree_isomorphisms(d, *fx.witness);
        CHECK_MESSAGE(rep.ok(), failures(rep));
    }
    Fixture swe = fixture_swe();
    GradedMoritaData d = build_Q_and_contexts(swe.grouplike, dual_ring(swe.coring));
    CofreeWitness w = *swe.witness;
    w.gammas[1] = Mat(Q, 4, 4);
    CHECK_THROWS_AS(verify_cofree_isomorphisms(d, w), Error);
}

TEST_CASE("equivalent Galois statements agree") {
    GaloisEquivalences kc2 = galois_equivalence_battery(fixture_kc2().grouplike, fixture_kc2().base_map);
    CHECK(kc2.statements == std::array<bool, 4>{true, true, true, true});
    CHECK(kc2.report.ok());

    Fixture ng = fixture_nongal();
    GaloisEquivalences n = galois_equivalence_battery(ng.grouplike, ng.base_map);
    CHECK(n.statements == std::array<bool, 4>{false, false, false, false});
    CHECK(n.agree);

    Fixture t = fixture_triv();
    GaloisEquivalences tr = galois_equivalence_battery(t.grouplike, t.base_map);
    CHECK(tr.statements == std::array<bool, 4>{true, true, true, true});
}

TEST_CASE("section battery checks its hypotheses") {
    Fixture kc2 = fixture_kc2();
    // B = A is not inside the coinvariants
    RingMorphism id{kc2.coring->base, kc2.coring->base, Mat::identity(Q, kc2.coring->base->dim)};
    try {
        galois_equivalence_battery(kc2.grouplike, id);
        FAIL("expected ImageNotInCoinvariants");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ImageNotInCoinvariants);
    }
}
