#include "gcoring/fixtures.hpp"

#include "gcoring/error.hpp"

namespace gcoring {

namespace {

const Field Q = Field::rationals();

CofreeWitness identity_witness(const GroupCoring& c) {
    CofreeWitness w;
    for (const auto& comp : c.comps) w.gammas.push_back(Mat::identity(c.field(), comp.dim));
    return w;
}

RingMorphism unit_map(const AlgebraPtr& a) { return RingMorphism{field_algebra(a->field), a, a->unit}; }

Fixture from_comodule_algebra(std::string name, std::string description, const ComoduleAlgebra& ca) {
    ComoduleAlgebraCoring cc = coring_from_comodule_algebra(ca);
    Fixture fx;
    fx.name = std::move(name);
    fx.description = std::move(description);
    fx.coring = cc.coring;
    fx.grouplike = cc.grouplike;
    fx.base_map = unit_map(ca.alg);
    fx.witness = identity_witness(*cc.coring);
    fx.comodule_algebra = ca;
    return fx;
}

}  // namespace

Fixture fixture_triv(const AlgebraPtr& a) {
    Fixture fx;
    fx.name = "FIX-TRIV";
    fx.description = "trivial coring C_α = A over G = C_2";
    fx.coring = trivial_coring(a, FiniteGroup::cyclic(2));
    fx.grouplike.coring = fx.coring;
    fx.grouplike.x.assign(2, a->unit);
    fx.base_map = identity_morphism(a);
    fx.witness = identity_witness(*fx.coring);
    return fx;
}

Fixture fixture_triv() { return fixture_triv(field_algebra(Q)); }

Fixture fixture_kc2() {
    FiniteGroup c2 = FiniteGroup::cyclic(2);
    HopfAlgebra h = group_hopf_algebra(Q, c2);
    HopfPtr hg = cofree_hopf(h, c2);
    ComoduleAlgebra ca{h.alg, hg, std::vector<Mat>(2, h.delta)};
    return from_comodule_algebra("FIX-KC2", "A = Q[C_2] with regular coaction over Q[C_2]<C_2>", ca);
}

Fixture fixture_swe() {
    AlgebraPtr a = product_algebra(Q, 2);
    RingMorphism b = unit_map(a);
    CoringPtr de = sweedler_coring(b);
    CofreeResult cf = cofree(*de, FiniteGroup::cyclic(2));
    Fixture fx;
    fx.name = "FIX-SWE";
    fx.description = "cofree coring on the Sweedler coring of Q ⊂ Q×Q, G = C_2";
    fx.coring = cf.coring;
    fx.grouplike.coring = cf.coring;
    TensorProduct t = tensor_over(restrict_right(regular_bimodule(a), b), restrict_left(regular_bimodule(a), b));
    Mat one = t.element(a->unit, a->unit);
    fx.grouplike.x.assign(2, one);
    fx.base_map = b;
    fx.witness = cf.witness;
    return fx;
}

Fixture fixture_nongal() {
    FiniteGroup c2 = FiniteGroup::cyclic(2);
    HopfPtr hg = cofree_hopf(group_hopf_algebra(Q, c2), c2);
    ComoduleAlgebra ca = trivial_comodule_algebra(field_algebra(Q), hg);
    return from_comodule_algebra("FIX-NONGAL", "A = Q with trivial coaction over Q[C_2]<C_2>", ca);
}

std::vector<std::string> fixture_names() { return {"FIX-KC2", "FIX-NONGAL", "FIX-SWE", "FIX-TRIV"}; }

Fixture fixture_by_name(const std::string& name) {
    if (name == "FIX-TRIV") return fixture_triv();
    if (name == "FIX-KC2") return fixture_kc2();
    if (name == "FIX-SWE") return fixture_swe();
    if (name == "FIX-NONGAL") return fixture_nongal();
    throw Error(ErrorKind::UnknownSuite, "unknown fixture " + name);
}

HopfGCoalgebra corrupted_antipode_hopf() {
    HopfPtr h = cofree_hopf(group_hopf_algebra(Q, FiniteGroup::cyclic(3)), FiniteGroup::cyclic(2));
    HopfGCoalgebra out = *h;
    for (auto& s : out.antipode) s = Mat::identity(Q, 3);
    return out;
}

}  // namespace gcoring
