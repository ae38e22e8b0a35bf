#include <doctest.h>

#include "gcoring/algebra.hpp"
#include "gcoring/error.hpp"
#include "gcoring/group.hpp"

using namespace gcoring;

namespace {
const Field Q = Field::rationals();
}

TEST_CASE("structure constants of k^2 and k[C_2] validate") {
    CHECK(validate_algebra(*product_algebra(Q, 2)).ok());
    AlgebraPtr kc2 = group_algebra(Q, FiniteGroup::cyclic(2));
    CHECK(validate_algebra(*kc2).ok());
    CHECK(kc2->product(kc2->basis(1), kc2->basis(1)) == kc2->basis(0));
    CHECK(validate_algebra(*group_algebra(Q, FiniteGroup::symmetric3())).ok());
}

TEST_CASE("non-associative table is reported") {
    // e0 unit, e1·e1 = e2, e2·e1 = e1, e1·e2 = 0, e2·e2 = 0
    Mat t(Q, 3, 9);
    for (std::size_t i = 0; i < 3; ++i) {
        t(i, 0 * 3 + i) = Scalar::one(Q);
        t(i, i * 3 + 0) = Scalar::one(Q);
    }
    t(2, 1 * 3 + 1) = Scalar::one(Q);
    t(1, 2 * 3 + 1) = Scalar::one(Q);
    AlgebraPtr a = make_algebra(Q, "bad", 3, t, Mat::unit_vector(Q, 3, 0));
    CheckReport r = validate_algebra(*a);
    CHECK_FALSE(r.find("algebra/associativity")->pass);
    CHECK(r.find("algebra/unit")->pass);
}

TEST_CASE("tensor product over k^2 and over k") {
    AlgebraPtr a = product_algebra(Q, 2);
    Bimodule reg = regular_bimodule(a);
    CHECK(tensor_over(reg, reg).module.dim == 2);
    AlgebraPtr k = field_algebra(Q);
    Bimodule ak = restrict_right(reg, RingMorphism{k, a, a->unit});
    Bimodule ka = restrict_left(reg, RingMorphism{k, a, a->unit});
    TensorProduct t = tensor_over(ak, ka);
    CHECK(t.module.dim == 4);
    CHECK(validate_bimodule(t.module).ok());
    CHECK_THROWS_AS(tensor_over(ka, ka), Error);
}

TEST_CASE("unitors and associator are isomorphisms") {
    AlgebraPtr a = group_algebra(Q, FiniteGroup::cyclic(3));
    Bimodule reg = regular_bimodule(a);
    TensorProduct rr = tensor_over(reg, reg);
    Mat ru = right_unitor(rr, reg);
    Mat lu = left_unitor(rr, reg);
    CHECK(is_invertible(ru));
    CHECK(ru == lu);
    TensorProduct rrr1 = tensor_over(rr.module, reg), rrr2 = tensor_over(reg, rr.module);
    Mat as = associator(rr, rrr1, rr, rrr2);
    Mat ai = associator_inverse(rr, rrr1, rr, rrr2);
    CHECK((as * ai).is_identity());
    CHECK((ai * as).is_identity());
}

TEST_CASE("left dual and dual basis of e·A^2 over k^2") {
    AlgebraPtr a = product_algebra(Q, 2);
    Bimodule reg = regular_bimodule(a);
    LeftDual d = left_dual(reg);
    CHECK(d.module.dim == 2);
    CHECK(validate_bimodule(d.module).ok());
    auto db = find_dual_basis(reg);
    REQUIRE(db.has_value());
    CHECK(check_dual_basis(reg, *db));
    // first factor e_0·A as a left A-module
    Bimodule first;
    first.field = Q;
    first.dim = 1;
    first.left_ring = a;
    first.left = {Mat::from_ints(Q, {{1}}), Mat::from_ints(Q, {{0}})};
    auto p = module_predicates(first);
    CHECK(p.flat_projective);
    CHECK_FALSE(p.generator);
    CHECK_FALSE(p.faithfully_flat);
    CHECK(p.trace_rank == 1);
}

TEST_CASE("module predicates") {
    AlgebraPtr k = field_algebra(Q);
    AlgebraPtr kc2 = group_algebra(Q, FiniteGroup::cyclic(2));
    auto p = module_predicates(RingMorphism{k, kc2, kc2->unit}, regular_bimodule(kc2));
    CHECK(p.flat_projective);
    CHECK(p.generator);
    CHECK(p.faithfully_flat);
    CHECK(p.progenerator);
    auto z = module_predicates(zero_module(Q, k, nullptr));
    CHECK(z.flat_projective);
    CHECK_FALSE(z.generator);
    CHECK_FALSE(z.faithfully_flat);
    CHECK_FALSE(z.progenerator);
}

TEST_CASE("subalgebra and ring morphism checks") {
    AlgebraPtr kc2 = group_algebra(Q, FiniteGroup::cyclic(2));
    Subalgebra s = make_subalgebra(kc2, kc2->unit, "k");
    CHECK(s.algebra->dim == 1);
    CHECK(validate_ring_morphism(s.inclusion).ok());
    CHECK_THROWS_AS(make_subalgebra(kc2, kc2->basis(1), "g"), Error);
    RingMorphism zero{s.algebra, kc2, Mat(Q, 2, 1)};
    CHECK_FALSE(validate_ring_morphism(zero).find("ring-morphism/unit")->pass);
}
