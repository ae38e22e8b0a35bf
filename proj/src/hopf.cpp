#include "gcoring/hopf.hpp"

#include "gcoring/error.hpp"

namespace gcoring {

namespace {

std::string idx(std::size_t a) { return std::to_string(a); }
std::string idx(std::size_t a, std::size_t b) { return idx(a) + "," + idx(b); }
std::string idx(std::size_t a, std::size_t b, std::size_t c) { return idx(a, b) + "," + idx(c); }

// Checks that m: X → Y is a unital algebra map, with Y given as an algebra.
void check_algebra_map(CheckReport& r, const std::string& id, const std::string& anchor, const Algebra& x,
                       const Algebra& y, const Mat& m) {
    bool unital = m * x.unit == y.unit;
    std::string fail;
    for (std::size_t i = 0; i < x.dim; ++i)
        for (std::size_t j = 0; j < x.dim; ++j)
            if (m * x.table.col(i * x.dim + j) != y.product(m.col(i), m.col(j))) fail += "(" + idx(i, j) + ") ";
    r.add(id + "/unit", anchor + " preserves 1", unital, "image of 1 is not 1");
    r.add(id + "/multiplicative", anchor + " is multiplicative", fail.empty(), "basis pairs " + fail);
}

}  // namespace

HopfAlgebra group_hopf_algebra(Field f, const FiniteGroup& g) {
    HopfAlgebra h;
    h.alg = group_algebra(f, g);
    const std::size_t n = g.order;
    h.delta = Mat(f, n * n, n);
    h.counit = Mat(f, 1, n);
    h.antipode = Mat(f, n, n);
    for (std::size_t a = 0; a < n; ++a) {
        h.delta(a * n + a, a) = Scalar::one(f);
        h.counit(0, a) = Scalar::one(f);
        h.antipode(g.inverse(a), a) = Scalar::one(f);
    }
    return h;
}

HopfAlgebra trivial_hopf_algebra(Field f) {
    return HopfAlgebra{field_algebra(f), Mat::identity(f, 1), Mat::identity(f, 1), Mat::identity(f, 1)};
}

CheckReport validate_hopf_algebra(const HopfAlgebra& h) {
    HopfGCoalgebra g;
    g.group = FiniteGroup::trivial();
    g.field = h.alg->field;
    g.comps = {h.alg};
    g.delta = {h.delta};
    g.counit = h.counit;
    g.antipode = {h.antipode};
    return validate_hopf_g_coalgebra(g);
}

CheckReport validate_hopf_g_coalgebra(const HopfGCoalgebra& h) {
    CheckReport r;
    const std::size_t n = h.n();
    Field f = h.field;
    AlgebraPtr kf = field_algebra(f);
    for (std::size_t a = 0; a < n; ++a) r.merge(validate_algebra(*h.comps[a]), "component/" + idx(a));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            AlgebraPtr t = tensor_algebra(h.comps[a], h.comps[b]);
            check_algebra_map(r, "delta/" + idx(a, b), "Δ", *h.comps[h.group.mul(a, b)], *t, h.delta_at(a, b));
        }
    check_algebra_map(r, "counit", "ε", *h.comps[0], *kf, h.counit);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                std::size_t ab = h.group.mul(a, b), bc = h.group.mul(b, c);
                Mat ia = Mat::identity(f, h.comps[a]->dim), ic = Mat::identity(f, h.comps[c]->dim);
                Mat lhs = kron(h.delta_at(a, b), ic) * h.delta_at(ab, c);
                Mat rhs = kron(ia, h.delta_at(b, c)) * h.delta_at(a, bc);
                r.add("coassociativity/" + idx(a, b, c), "Hopf G-coalgebra coassociativity", lhs == rhs,
                      "fails at (" + idx(a, b, c) + ")");
            }
    for (std::size_t a = 0; a < n; ++a) {
        Mat ia = Mat::identity(f, h.comps[a]->dim);
        bool ok = kron(h.counit, ia) * h.delta_at(0, a) == ia && kron(ia, h.counit) * h.delta_at(a, 0) == ia;
        r.add("counit-law/" + idx(a), "Hopf G-coalgebra counit law", ok, "fails at " + idx(a));
    }
    const Algebra& he = *h.comps[0];
    for (std::size_t a = 0; a < n; ++a) {
        std::size_t ai = h.group.inverse(a);
        const Algebra& ha = *h.comps[a];
        const Mat& s = h.antipode[a];
        if (s.rows() != ha.dim || s.cols() != h.comps[ai]->dim) {
            r.add("antipode/shape/" + idx(a), "antipode", false, "S_α has the wrong shape");
            continue;
        }
        Mat iota = ha.unit * h.counit;  // h ↦ ε(h)1
        Mat ia = Mat::identity(f, ha.dim);
        Mat left = ha.table * kron(s, ia) * h.delta_at(ai, a);
        Mat right = ha.table * kron(ia, s) * h.delta_at(a, ai);
        std::string lf, rf;
        for (std::size_t j = 0; j < he.dim; ++j) {
            if (left.col(j) != iota.col(j)) lf += idx(j) + " ";
            if (right.col(j) != iota.col(j)) rf += idx(j) + " ";
        }
        r.add("antipode/left/" + idx(a), "antipode law S(h₁)h₂ = ε(h)1", lf.empty(), "basis elements " + lf);
        r.add("antipode/right/" + idx(a), "antipode law h₁S(h₂) = ε(h)1", rf.empty(), "basis elements " + rf);
    }
    return r;
}

HopfPtr cofree_hopf(const HopfAlgebra& he, const FiniteGroup& g) {
    auto h = std::make_shared<HopfGCoalgebra>();
    h->group = g;
    h->field = he.alg->field;
    const std::size_t n = g.order;
    h->comps.assign(n, he.alg);
    h->delta.assign(n * n, he.delta);
    h->counit = he.counit;
    h->antipode.assign(n, he.antipode);
    return h;
}

CheckReport validate_comodule_algebra(const ComoduleAlgebra& a) {
    CheckReport r;
    const HopfGCoalgebra& h = *a.hopf;
    const std::size_t n = h.n();
    Field f = h.field;
    Mat ia = Mat::identity(f, a.alg->dim);
    r.merge(validate_algebra(*a.alg), "algebra");
    bool shape = a.rho.size() == n;
    for (std::size_t x = 0; shape && x < n; ++x)
        shape = a.rho[x].rows() == a.alg->dim * h.comps[x]->dim && a.rho[x].cols() == a.alg->dim;
    r.add("shape", "comodule algebra", shape, "coaction shapes");
    if (!shape) return r;
    for (std::size_t x = 0; x < n; ++x) {
        AlgebraPtr t = tensor_algebra(a.alg, h.comps[x]);
        check_algebra_map(r, "rho/" + idx(x), "coaction", *a.alg, *t, a.rho[x]);
    }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            std::size_t xy = h.group.mul(x, y);
            Mat lhs = kron(a.rho[x], Mat::identity(f, h.comps[y]->dim)) * a.rho[y];
            Mat rhs = kron(ia, h.delta_at(x, y)) * a.rho[xy];
            r.add("coassociativity/" + idx(x, y), "comodule algebra coassociativity", lhs == rhs,
                  "fails at (" + idx(x, y) + ")");
        }
    r.add("counit", "comodule algebra counit law", kron(ia, h.counit) * a.rho[0] == ia, "(id⊗ε)ρ_e ≠ id");
    return r;
}

ComoduleAlgebra trivial_comodule_algebra(const AlgebraPtr& a, const HopfPtr& h) {
    ComoduleAlgebra c{a, h, {}};
    Mat ia = Mat::identity(a->field, a->dim);
    for (std::size_t x = 0; x < h->n(); ++x) c.rho.push_back(kron(ia, h->comps[x]->unit));
    return c;
}

}  // namespace gcoring
