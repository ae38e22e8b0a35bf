#include "gcoring/coring.hpp"

#include "gcoring/error.hpp"

namespace gcoring {

namespace {

std::string idx(std::size_t a) { return std::to_string(a); }
std::string idx(std::size_t a, std::size_t b) { return idx(a) + "," + idx(b); }
std::string idx(std::size_t a, std::size_t b, std::size_t c) { return idx(a, b) + "," + idx(c); }

void build_pairs(GroupCoring& c) {
    const std::size_t n = c.n();
    c.pairs.clear();
    c.pairs.reserve(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) c.pairs.push_back(tensor_over(c.comps[a], c.comps[b]));
}

GroupCoring skeleton(FiniteGroup g, AlgebraPtr base, std::vector<Bimodule> comps) {
    if (comps.size() != g.order) throw Error(ErrorKind::DimensionMismatch, "one component per group element");
    for (const auto& m : comps)
        if (!same_algebra(m.left_ring, base) || !same_algebra(m.right_ring, base))
            throw Error(ErrorKind::BaseMismatch, "coring component is not an A-bimodule");
    GroupCoring c;
    c.group = std::move(g);
    c.base = base;
    c.base_module = regular_bimodule(base);
    c.comps = std::move(comps);
    build_pairs(c);
    return c;
}

}  // namespace

Blocks make_blocks(const std::vector<std::size_t>& dims) {
    Blocks b;
    b.dims = dims;
    for (auto d : dims) {
        b.offset.push_back(b.total);
        b.total += d;
    }
    return b;
}

Mat Blocks::incl(Field f, std::size_t a) const {
    Mat m(f, total, dims[a]);
    for (std::size_t i = 0; i < dims[a]; ++i) m(offset[a] + i, i) = Scalar::one(f);
    return m;
}

Mat Blocks::proj(Field f, std::size_t a) const {
    Mat m(f, dims[a], total);
    for (std::size_t i = 0; i < dims[a]; ++i) m(i, offset[a] + i) = Scalar::one(f);
    return m;
}

CoringPtr make_group_coring(FiniteGroup g, AlgebraPtr base, std::vector<Bimodule> comps, std::vector<Mat> delta,
                            Mat counit) {
    GroupCoring c = skeleton(std::move(g), std::move(base), std::move(comps));
    const std::size_t n = c.n();
    if (delta.size() != n * n) throw Error(ErrorKind::DimensionMismatch, "one comultiplication per pair");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const Mat& d = delta[a * n + b];
            if (d.rows() != c.pair(a, b).module.dim || d.cols() != c.comps[c.group.mul(a, b)].dim)
                throw Error(ErrorKind::DimensionMismatch, "comultiplication shape at (" + idx(a, b) + ")");
        }
    if (counit.rows() != c.base->dim || counit.cols() != c.comps[0].dim)
        throw Error(ErrorKind::DimensionMismatch, "counit shape");
    c.delta = std::move(delta);
    c.counit = std::move(counit);
    return std::make_shared<const GroupCoring>(std::move(c));
}

CoringPtr make_group_coring_from_ambient(FiniteGroup g, AlgebraPtr base, std::vector<Bimodule> comps,
                                         const std::vector<Mat>& delta_ambient, Mat counit) {
    GroupCoring c = skeleton(std::move(g), std::move(base), std::move(comps));
    const std::size_t n = c.n();
    if (delta_ambient.size() != n * n) throw Error(ErrorKind::DimensionMismatch, "one comultiplication per pair");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const Mat& d = delta_ambient[a * n + b];
            if (d.rows() != c.comps[a].dim * c.comps[b].dim || d.cols() != c.comps[c.group.mul(a, b)].dim)
                throw Error(ErrorKind::DimensionMismatch, "comultiplication shape at (" + idx(a, b) + ")");
            c.delta.push_back(c.pair(a, b).proj() * d);
        }
    if (counit.rows() != c.base->dim || counit.cols() != c.comps[0].dim)
        throw Error(ErrorKind::DimensionMismatch, "counit shape");
    c.counit = std::move(counit);
    return std::make_shared<const GroupCoring>(std::move(c));
}

CoringPtr trivial_coring(const AlgebraPtr& a, const FiniteGroup& g) {
    Field f = a->field;
    const std::size_t n = g.order;
    std::vector<Bimodule> comps(n, regular_bimodule(a));
    std::vector<Mat> d;
    Mat amb = kron(a->unit, Mat::identity(f, a->dim));  // a ↦ 1⊗a
    for (std::size_t i = 0; i < n * n; ++i) d.push_back(amb);
    return make_group_coring_from_ambient(g, a, std::move(comps), d, Mat::identity(f, a->dim));
}

CheckReport validate_group_coring(const GroupCoring& c) {
    CheckReport r;
    const std::size_t n = c.n();
    Field f = c.field();
    for (std::size_t a = 0; a < n; ++a) r.merge(validate_bimodule(c.comps[a]), "component/" + idx(a));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            r.add("delta-bimodule-map/" + idx(a, b), "comultiplication is a bimodule map",
                  is_bimodule_map(c.comps[c.group.mul(a, b)], c.pair(a, b).module, c.delta_at(a, b)),
                  "not A-bilinear");
    r.add("counit-bimodule-map", "counit is a bimodule map", is_bimodule_map(c.comps[0], c.base_module, c.counit),
          "not A-bilinear");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t g = 0; g < n; ++g) {
                std::size_t ab = c.group.mul(a, b), bg = c.group.mul(b, g);
                const TensorProduct& pab = c.pair(a, b);
                const TensorProduct& pbg = c.pair(b, g);
                TensorProduct left = tensor_over(pab.module, c.comps[g]);
                TensorProduct right = tensor_over(c.comps[a], pbg.module);
                Mat lhs = tensor_maps(c.delta_at(a, b), Mat::identity(f, c.comps[g].dim), c.pair(ab, g), left) *
                          c.delta_at(ab, g);
                Mat rhs = tensor_maps(Mat::identity(f, c.comps[a].dim), c.delta_at(b, g), c.pair(a, bg), right) *
                          c.delta_at(a, bg);
                Mat assoc = associator(pab, left, pbg, right);
                r.add("coassociativity/" + idx(a, b, g), "group coring coassociativity", assoc * lhs == rhs,
                      "fails at (" + idx(a, b, g) + ")");
            }
    for (std::size_t a = 0; a < n; ++a) {
        const Bimodule& ca = c.comps[a];
        Mat id = Mat::identity(f, ca.dim);
        TensorProduct ca_a = tensor_over(ca, c.base_module);
        TensorProduct a_ca = tensor_over(c.base_module, ca);
        Mat rlaw = right_unitor(ca_a, ca) * tensor_maps(id, c.counit, c.pair(a, 0), ca_a) * c.delta_at(a, 0);
        Mat llaw = left_unitor(a_ca, ca) * tensor_maps(c.counit, id, c.pair(0, a), a_ca) * c.delta_at(0, a);
        r.add("counit/" + idx(a), "group coring counit law", rlaw == id && llaw == id,
              std::string("fails at ") + idx(a) + (rlaw == id ? " (left)" : " (right)"));
    }
    return r;
}

GroupCoringMorphism identity_coring_morphism(const CoringPtr& c) {
    GroupCoringMorphism m{c, c, {}};
    for (const auto& comp : c->comps) m.maps.push_back(Mat::identity(c->field(), comp.dim));
    return m;
}

CheckReport validate_coring_morphism(const GroupCoringMorphism& m) {
    CheckReport r;
    const GroupCoring& s = *m.src;
    const GroupCoring& d = *m.dst;
    const std::size_t n = s.n();
    bool shape = m.maps.size() == n && d.n() == n;
    for (std::size_t a = 0; shape && a < n; ++a)
        shape = m.maps[a].rows() == d.comps[a].dim && m.maps[a].cols() == s.comps[a].dim;
    r.add("morphism/shape", "group coring morphism", shape, "component map shapes");
    if (!shape) return r;
    for (std::size_t a = 0; a < n; ++a)
        r.add("morphism/bimodule-map/" + idx(a), "group coring morphism components are bimodule maps",
              is_bimodule_map(s.comps[a], d.comps[a], m.maps[a]), "not A-bilinear at " + idx(a));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            std::size_t ab = s.group.mul(a, b);
            Mat lhs = tensor_maps(m.maps[a], m.maps[b], s.pair(a, b), d.pair(a, b)) * s.delta_at(a, b);
            Mat rhs = d.delta_at(a, b) * m.maps[ab];
            r.add("morphism/comultiplication/" + idx(a, b), "group coring morphism law", lhs == rhs,
                  "square fails at (" + idx(a, b) + ")");
        }
    r.add("morphism/counit", "group coring morphism counit", d.counit * m.maps[0] == s.counit,
          "counit not preserved");
    return r;
}

CoringPtr e_slice(const GroupCoring& c) {
    return make_group_coring(FiniteGroup::trivial(), c.base, {c.comps[0]}, {c.delta_at(0, 0)}, c.counit);
}

CofreeResult cofree(const GroupCoring& ce, const FiniteGroup& g) {
    if (ce.n() != 1) throw Error(ErrorKind::InvalidArgument, "cofree needs a coring over the trivial group");
    const std::size_t n = g.order;
    std::vector<Bimodule> comps(n, ce.comps[0]);
    std::vector<Mat> delta(n * n, ce.delta_at(0, 0));
    CofreeResult res;
    res.coring = make_group_coring(g, ce.base, std::move(comps), std::move(delta), ce.counit);
    res.witness.gammas.assign(n, Mat::identity(ce.field(), ce.comps[0].dim));
    return res;
}

CheckReport verify_cofree(const GroupCoring& c, const CofreeWitness& w) {
    CheckReport r;
    const std::size_t n = c.n();
    bool shape = w.gammas.size() == n;
    for (std::size_t a = 0; shape && a < n; ++a)
        shape = w.gammas[a].rows() == c.comps[a].dim && w.gammas[a].cols() == c.comps[0].dim;
    r.add("cofree/shape", "cofree witness", shape, "one map C_e → C_α per element required");
    if (!shape) return r;
    for (std::size_t a = 0; a < n; ++a) {
        bool iso = is_invertible(w.gammas[a]) && is_bimodule_map(c.comps[0], c.comps[a], w.gammas[a]);
        r.add("cofree/iso/" + idx(a), "cofree witness components are bimodule isomorphisms", iso,
              "not an isomorphism at " + idx(a));
    }
    r.add("cofree/identity-at-e", "cofree witness is the identity at e", w.gammas[0].is_identity(),
          "γ_e is not the identity");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            std::size_t ab = c.group.mul(a, b);
            Mat lhs = c.delta_at(a, b) * w.gammas[ab];
            Mat rhs = tensor_maps(w.gammas[a], w.gammas[b], c.pair(0, 0), c.pair(a, b)) * c.delta_at(0, 0);
            r.add("cofree/comultiplication/" + idx(a, b), "cofree coring compatibility", lhs == rhs,
                  "fails at (" + idx(a, b) + ")");
        }
    return r;
}

CheckReport verify_cofree_identities(const GroupCoring& c, const CofreeWitness& w) {
    CheckReport r;
    const std::size_t n = c.n();
    Field f = c.field();
    std::vector<Mat> ginv;
    for (const auto& g : w.gammas) {
        auto inv = try_inverse(g);
        if (!inv) {
            r.add("cofree-identities/invertible", "cofree witness invertible", false, "some γ_α is singular");
            return r;
        }
        ginv.push_back(*inv);
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            std::size_t ab = c.group.mul(a, b);
            const Bimodule& ca = c.comps[a];
            const Bimodule& cb = c.comps[b];
            TensorProduct a_cb = tensor_over(c.base_module, cb);
            TensorProduct ca_a = tensor_over(ca, c.base_module);
            Mat lhs1 = left_unitor(a_cb, cb) *
                       tensor_maps(c.counit * ginv[a], Mat::identity(f, cb.dim), c.pair(a, b), a_cb) *
                       c.delta_at(a, b);
            Mat rhs1 = w.gammas[b] * ginv[ab];
            r.add("cofree-identities/left/" + idx(a, b), "cofree derived identity (counit on the left factor)",
                  lhs1 == rhs1, "fails at (" + idx(a, b) + ")");
            Mat lhs2 = right_unitor(ca_a, ca) *
                       tensor_maps(Mat::identity(f, ca.dim), c.counit * ginv[b], c.pair(a, b), ca_a) *
                       c.delta_at(a, b);
            Mat rhs2 = w.gammas[a] * ginv[ab];
            r.add("cofree-identities/right/" + idx(a, b), "cofree derived identity (counit on the right factor)",
                  lhs2 == rhs2, "fails at (" + idx(a, b) + ")");
        }
    return r;
}

GradedCoring pack_graded_coring(const GroupCoring& c) {
    GradedCoring g;
    Field f = c.field();
    const std::size_t n = c.n();
    g.group = c.group;
    g.base = c.base;
    DirectSum s = direct_sum(c.comps);
    g.module = s.module;
    g.offset = s.offset;
    for (const auto& comp : c.comps) g.dims.push_back(comp.dim);
    g.square = tensor_over(g.module, g.module);
    g.delta = Mat(f, g.square.module.dim, g.module.dim);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Mat inc = tensor_maps(s.incl[a], s.incl[b], c.pair(a, b), g.square);
            g.delta += inc * c.delta_at(a, b) * s.proj[c.group.mul(a, b)];
        }
    g.counit = c.counit * s.proj[0];
    return g;
}

std::vector<Bimodule> component_modules(const GradedCoring& g) {
    Field f = g.module.field;
    Blocks bl = make_blocks(g.dims);
    std::vector<Bimodule> comps;
    for (std::size_t a = 0; a < g.group.order; ++a) {
        Mat i = bl.incl(f, a), p = bl.proj(f, a);
        Bimodule m;
        m.field = f;
        m.dim = g.dims[a];
        m.left_ring = g.module.left_ring;
        m.right_ring = g.module.right_ring;
        for (const auto& l : g.module.left) m.left.push_back(p * l * i);
        for (const auto& x : g.module.right) m.right.push_back(p * x * i);
        comps.push_back(std::move(m));
    }
    return comps;
}

CoringPtr unpack_graded_coring(const GradedCoring& g) {
    Field f = g.module.field;
    const std::size_t n = g.group.order;
    Blocks bl = make_blocks(g.dims);
    std::vector<Bimodule> comps = component_modules(g);
    GroupCoring skel = skeleton(g.group, g.base, comps);
    std::vector<Mat> delta;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Mat pr = tensor_maps(bl.proj(f, a), bl.proj(f, b), g.square, skel.pair(a, b));
            delta.push_back(pr * g.delta * bl.incl(f, g.group.mul(a, b)));
        }
    return make_group_coring(g.group, g.base, std::move(comps), std::move(delta), g.counit * bl.incl(f, 0));
}

CheckReport validate_graded_coring(const GradedCoring& g) {
    CheckReport r;
    Field f = g.module.field;
    auto plain = make_group_coring(FiniteGroup::trivial(), g.base, {g.module}, {g.delta}, g.counit);
    r.merge(validate_group_coring(*plain), "plain");
    Blocks bl = make_blocks(g.dims);
    const std::size_t n = g.group.order;
    for (std::size_t a = 1; a < n; ++a)
        r.add("grading/counit-vanishes/" + idx(a), "graded counit vanishes off degree e",
              (g.counit * bl.incl(f, a)).is_zero(), "counit nonzero on degree " + idx(a));
    // Δ(C_γ) ⊆ ⊕_{αβ=γ} C_α⊗C_β: the off-degree blocks vanish.
    auto comps = component_modules(g);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            TensorProduct pab = tensor_over(comps[a], comps[b]);
            Mat pr = tensor_maps(bl.proj(f, a), bl.proj(f, b), g.square, pab);
            bool ok = true;
            for (std::size_t gam = 0; gam < n; ++gam)
                if (g.group.mul(a, b) != gam && !(pr * g.delta * bl.incl(f, gam)).is_zero()) ok = false;
            r.add("grading/comultiplication/" + idx(a, b), "graded comultiplication respects degrees", ok,
                  "component (" + idx(a, b) + ") receives off-degree terms");
        }
    return r;
}

bool same_coring(const GroupCoring& a, const GroupCoring& b) {
    if (!(a.group == b.group) || !same_algebra(a.base, b.base) || a.comps.size() != b.comps.size()) return false;
    for (std::size_t i = 0; i < a.comps.size(); ++i)
        if (!same_bimodule(a.comps[i], b.comps[i])) return false;
    return a.delta == b.delta && a.counit == b.counit;
}

}  // namespace gcoring
