#include "gcoring/galois.hpp"

#include "gcoring/error.hpp"

namespace gcoring {

namespace {

std::string idx(std::size_t a) { return std::to_string(a); }

Mat empty_basis(Field f, std::size_t rows) { return Mat(f, rows, 0); }

Mat kernel_columns(const Mat& system, std::size_t n) {
    if (system.rows() == 0) return Mat::identity(system.field(), n);
    Mat k = kernel(system);
    if (k.rows() == 0) return empty_basis(system.field(), n);
    return k.transpose();
}

// Columns R^{C}(e_j)·x for the basis e_j of A.
Mat right_translates(const Bimodule& c, const Mat& x) {
    std::vector<Mat> cols;
    for (const auto& r : c.right) cols.push_back(r * x);
    return hstack(c.field, c.dim, cols);
}

Bimodule b_module_right(const RingMorphism& b) { return restrict_right(regular_bimodule(b.dst), b); }

// N⊗_B A with ρ(n⊗a) = (n⊗1)⊗x a over the given coring.
InducedComodule induce(const CoringPtr& c, const std::vector<Mat>& xs, const RingMorphism& b, const Bimodule& n) {
    const Algebra& a = *b.dst;
    Field f = a.field;
    Bimodule nr = n.has_left() ? forget_left(n) : n;
    InducedComodule out;
    out.tensor = tensor_over(nr, base_as_left_b_module(b));
    Bimodule t = out.tensor.module;
    std::vector<Mat> rho;
    for (std::size_t al = 0; al < c->n(); ++al) {
        TensorProduct t2 = tensor_over(t, c->comps[al]);
        Mat tr = right_translates(c->comps[al], xs[al]);
        Mat amb(f, t2.module.dim, nr.dim * a.dim);
        for (std::size_t i = 0; i < nr.dim; ++i) {
            Mat ni = out.tensor.element(Mat::unit_vector(f, nr.dim, i), a.unit);
            for (std::size_t j = 0; j < a.dim; ++j) amb.set_block(0, i * a.dim + j, t2.element(ni, tr.col(j)));
        }
        rho.push_back(amb * out.tensor.sect());
    }
    out.comodule = make_comodule(c, t, std::move(rho));
    return out;
}

CoinvariantModule as_b_module(const Mat& basis, const std::vector<Bimodule>& comps, const RingMorphism& b) {
    Field f = b.dst->field;
    CoinvariantModule out;
    out.basis = basis;
    out.coords = basis.cols() == 0 ? Mat(f, 0, basis.rows()) : left_inverse(basis);
    out.module.field = f;
    out.module.dim = basis.cols();
    out.module.right_ring = b.src;
    for (std::size_t k = 0; k < b.src->dim; ++k) {
        std::vector<Mat> blocks;
        for (const auto& m : comps) blocks.push_back(m.right_action(b.mat.col(k)));
        out.module.right.push_back(out.coords * block_diag(f, blocks) * basis);
    }
    return out;
}

TensorProduct sweedler_tensor(const RingMorphism& b) {
    return tensor_over(b_module_right(b), base_as_left_b_module(b));
}

bool all_bijective(const std::vector<Mat>& ms) {
    for (const auto& m : ms)
        if (!is_invertible(m)) return false;
    return true;
}

}  // namespace

CheckReport validate_grouplike(const GrouplikeFamily& x) {
    CheckReport r;
    const GroupCoring& c = *x.coring;
    const std::size_t n = c.n();
    bool shape = x.x.size() == n;
    for (std::size_t a = 0; shape && a < n; ++a) shape = x.x[a].rows() == c.comps[a].dim && x.x[a].cols() == 1;
    r.add("grouplike/shape", "grouplike family", shape, "one vector per component required");
    if (!shape) return r;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            std::size_t ab = c.group.mul(a, b);
            bool ok = c.delta_at(a, b) * x.x[ab] == c.pair(a, b).element(x.x[a], x.x[b]);
            r.add("grouplike/comultiplication/" + idx(a) + "," + idx(b), "grouplike Δ(x_αβ) = x_α⊗x_β", ok,
                  "fails at (" + idx(a) + "," + idx(b) + ")");
        }
    r.add("grouplike/counit", "grouplike ε(x_e) = 1", c.counit * x.x[0] == c.base->unit, "ε(x_e) ≠ 1");
    return r;
}

Comodule comodule_from_grouplike(const GrouplikeFamily& x) {
    const GroupCoring& c = *x.coring;
    Bimodule a = forget_left(c.base_module);
    std::vector<Mat> rho;
    for (std::size_t al = 0; al < c.n(); ++al) {
        TensorProduct t = tensor_over(a, c.comps[al]);
        rho.push_back(t.proj() * kron(c.base->unit, right_translates(c.comps[al], x.x[al])));
    }
    return make_comodule(x.coring, a, std::move(rho));
}

GrouplikeFamily grouplike_from_comodule(const Comodule& m) {
    const GroupCoring& c = *m.coring;
    if (m.dim() != c.base->dim) throw Error(ErrorKind::DimensionMismatch, "comodule is not on A");
    GrouplikeFamily g{m.coring, {}};
    for (std::size_t a = 0; a < c.n(); ++a)
        g.x.push_back(left_unitor(m.tens[a], c.comps[a]) * m.rho[a] * c.base->unit);
    return g;
}

GrouplikeFamily e_slice_grouplike(const GrouplikeFamily& x) { return GrouplikeFamily{e_slice(*x.coring), {x.x[0]}}; }

bool same_grouplike(const GrouplikeFamily& a, const GrouplikeFamily& b) { return a.x == b.x; }

CoinvariantsResult coinvariants(const Comodule& m, const GrouplikeFamily& x) {
    Field f = m.coring->field();
    std::vector<Mat> blocks;
    Mat id = Mat::identity(f, m.dim());
    for (std::size_t a = 0; a < m.coring->n(); ++a) blocks.push_back(m.rho[a] - m.tens[a].proj() * kron(id, x.x[a]));
    CoinvariantsResult r;
    r.basis = kernel_columns(vstack(f, m.dim(), blocks), m.dim());
    return r;
}

CoinvariantsResult g_coinvariants(const GComodule& m, const GrouplikeFamily& x) {
    const GroupCoring& c = *m.coring;
    Field f = c.field();
    const std::size_t n = c.n();
    std::vector<std::size_t> dims;
    for (const auto& comp : m.comps) dims.push_back(comp.dim);
    Blocks bl = make_blocks(dims);
    std::vector<Mat> rows;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            std::size_t ab = c.group.mul(a, b);
            rows.push_back(m.rho_at(a, b) * bl.proj(f, ab) - m.tensor(a, b).proj() * kron(bl.proj(f, a), x.x[b]));
        }
    CoinvariantsResult r;
    r.basis = kernel_columns(vstack(f, bl.total, rows), bl.total);
    return r;
}

CoinvariantsResult coinvariant_ring(const GrouplikeFamily& x) {
    CoinvariantsResult r = coinvariants(comodule_from_grouplike(x), x);
    r.ring = make_subalgebra(x.coring->base, r.basis, "T");
    return r;
}

RingMorphism coinvariant_inclusion(const GrouplikeFamily& x) { return coinvariant_ring(x).ring->inclusion; }

void require_image_in_coinvariants(const GrouplikeFamily& x, const RingMorphism& b) {
    if (!same_algebra(b.dst, x.coring->base))
        throw Error(ErrorKind::BaseMismatch, "ring morphism does not land in the base ring");
    CoinvariantsResult t = coinvariants(comodule_from_grouplike(x), x);
    if (!column_space_contains(t.basis, b.mat))
        throw Error(ErrorKind::ImageNotInCoinvariants, "image of B is not contained in the coinvariants");
}

Bimodule base_as_left_b_module(const RingMorphism& b) { return restrict_left(regular_bimodule(b.dst), b); }

InducedComodule F6(const GrouplikeFamily& x, const RingMorphism& b, const Bimodule& n) {
    require_image_in_coinvariants(x, b);
    return induce(x.coring, x.x, b, n);
}

GComodule F7(const GrouplikeFamily& x, const RingMorphism& b, const Bimodule& n) { return G1(F6(x, b, n).comodule); }

Comodule F8(const GrouplikeFamily& x, const RingMorphism& b, const Bimodule& n) {
    require_image_in_coinvariants(x, b);
    return induce(e_slice(*x.coring), {x.x[0]}, b, n).comodule;
}

CoinvariantModule G7(const GComodule& m, const GrouplikeFamily& x, const RingMorphism& b) {
    return as_b_module(g_coinvariants(m, x).basis, m.comps, b);
}

CoinvariantModule G6(const Comodule& m, const GrouplikeFamily& x, const RingMorphism& b) {
    return as_b_module(coinvariants(m, x).basis, {m.space}, b);
}

Mat unit_7(const GrouplikeFamily& x, const RingMorphism& b, const Bimodule& n) {
    InducedComodule ind = F6(x, b, n);
    GComodule f7 = G1(ind.comodule);
    CoinvariantModule g = G7(f7, x, b);
    Field f = b.dst->field;
    Mat one_tensor(f, ind.tensor.module.dim, n.dim);
    for (std::size_t i = 0; i < n.dim; ++i)
        one_tensor.set_block(0, i, ind.tensor.element(Mat::unit_vector(f, n.dim, i), b.dst->unit));
    Mat copies = vstack(f, n.dim, std::vector<Mat>(f7.n(), one_tensor));
    return g.coords * copies;
}

std::vector<Mat> counit_7(const GComodule& m, const GrouplikeFamily& x, const RingMorphism& b) {
    CoinvariantModule v = G7(m, x, b);
    InducedComodule ind = F6(x, b, v.module);
    Field f = b.dst->field;
    const Algebra& a = *b.dst;
    std::vector<std::size_t> dims;
    for (const auto& comp : m.comps) dims.push_back(comp.dim);
    Blocks bl = make_blocks(dims);
    std::vector<Mat> out;
    for (std::size_t al = 0; al < m.n(); ++al) {
        Mat pv = bl.proj(f, al) * v.basis;
        Mat amb(f, m.comps[al].dim, v.module.dim * a.dim);
        for (std::size_t i = 0; i < v.module.dim; ++i)
            for (std::size_t j = 0; j < a.dim; ++j)
                amb.set_block(0, i * a.dim + j, m.comps[al].right[j] * pv.col(i));
        out.push_back(amb * ind.tensor.sect());
    }
    return out;
}

CheckReport check_adjunction_F7G7(const GrouplikeFamily& x, const RingMorphism& b, const Bimodule& n,
                                  const GComodule& m) {
    CheckReport r;
    Field f = b.dst->field;
    InducedComodule fn = F6(x, b, n);
    GComodule f7 = G1(fn.comodule);
    CoinvariantModule g7n = G7(f7, x, b);
    CoinvariantModule g7m = G7(m, x, b);
    InducedComodule fv = F6(x, b, g7m.module);
    std::vector<Mat> eps = counit_7(m, x, b);
    Mat eta = unit_7(x, b, n);
    Mat ia = Mat::identity(f, b.dst->dim);
    const std::size_t nd = n.dim, vd = g7m.module.dim;
    auto homs_b = [&]() {
        auto op = [&](const Mat& v) {
            Mat h = Mat::unflatten(v, vd, nd);
            std::vector<Mat> parts;
            for (std::size_t k = 0; k < b.src->dim; ++k)
                parts.push_back((h * n.right[k] - g7m.module.right[k] * h).flatten());
            return vstack(f, 1, parts);
        };
        std::vector<Mat> out;
        if (vd * nd == 0) return out;
        Mat sol = linear_solution_space(f, vd * nd, op);
        for (std::size_t j = 0; j < sol.cols(); ++j) out.push_back(Mat::unflatten(sol.col(j), vd, nd));
        return out;
    }();
    auto homs_g = g_comodule_homs(f7, m);
    auto psi = [&](const Mat& h) {
        Mat f6h = tensor_maps(h, ia, fn.tensor, fv.tensor);
        std::vector<Mat> out;
        for (const auto& e : eps) out.push_back(e * f6h);
        return out;
    };
    auto phi = [&](const std::vector<Mat>& g) { return g7m.coords * block_diag(f, g) * g7n.basis * eta; };
    r.add("hom-dimensions", "F7 ⊣ G7 hom spaces have equal dimension", homs_b.size() == homs_g.size(),
          idx(homs_b.size()) + " vs " + idx(homs_g.size()));
    std::string bad1, bad2;
    for (std::size_t i = 0; i < homs_b.size(); ++i) {
        auto p = psi(homs_b[i]);
        if (!is_g_comodule_map(f7, m, p) || phi(p) != homs_b[i]) bad1 += idx(i) + " ";
    }
    for (std::size_t i = 0; i < homs_g.size(); ++i)
        if (psi(phi(homs_g[i])) != homs_g[i]) bad2 += idx(i) + " ";
    r.add("phi-after-psi", "ψ lands in G-comodule maps and φψ = id", bad1.empty(), "basis homs " + bad1);
    r.add("psi-after-phi", "ψφ = id", bad2.empty(), "basis homs " + bad2);
    return r;
}

CoringPtr sweedler_coring(const RingMorphism& b) {
    const Algebra& a = *b.dst;
    Field f = a.field;
    TensorProduct d = sweedler_tensor(b);
    TensorProduct dd = tensor_over(d.module, d.module);
    Mat amb(f, dd.q.ambient_dim, a.dim * a.dim);
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
            amb.set_block(0, i * a.dim + j,
                          kron(d.element(a.basis(i), a.unit), d.element(a.unit, a.basis(j))));
    Mat delta = dd.proj() * amb * d.sect();
    Mat eps = a.table * d.sect();
    return make_group_coring(FiniteGroup::trivial(), b.dst, {d.module}, {delta}, eps);
}

CanonicalMorphism canonical_morphism(const GrouplikeFamily& x, const RingMorphism& b) {
    require_image_in_coinvariants(x, b);
    const GroupCoring& c = *x.coring;
    const Algebra& a = *c.base;
    Field f = a.field;
    CanonicalMorphism out;
    out.sweedler = sweedler_coring(b);
    out.cofree = cofree(*out.sweedler, c.group);
    TensorProduct d = sweedler_tensor(b);
    out.can.src = out.cofree.coring;
    out.can.dst = x.coring;
    for (std::size_t al = 0; al < c.n(); ++al) {
        const Bimodule& ca = c.comps[al];
        Mat amb(f, ca.dim, a.dim * a.dim);
        for (std::size_t i = 0; i < a.dim; ++i)
            for (std::size_t j = 0; j < a.dim; ++j) amb.set_block(0, i * a.dim + j, ca.left[i] * ca.right[j] * x.x[al]);
        out.can.maps.push_back(amb * d.sect());
    }
    return out;
}

GaloisVerdict is_galois(const GrouplikeFamily& x) {
    GaloisVerdict v;
    RingMorphism t = coinvariant_inclusion(x);
    CanonicalMorphism can = canonical_morphism(x, t);
    v.report.merge(validate_coring_morphism(can.can), "can");
    for (std::size_t a = 0; a < can.can.maps.size(); ++a) {
        const Mat& m = can.can.maps[a];
        std::size_t rk = rank(m);
        bool bij = m.rows() == m.cols() && rk == m.rows();
        v.report.add("can-bijective/" + idx(a), "canonical map is bijective", bij,
                     "can_" + idx(a) + ": dim " + idx(m.cols()) + " → dim " + idx(m.rows()) + ", rank " + idx(rk));
    }
    v.galois = v.report.ok();
    return v;
}

GaloisVerdict is_galois(const GrouplikeFamily& x, const RingMorphism& b) {
    RingMorphism t = coinvariant_inclusion(x);
    GaloisVerdict v = is_galois(x);
    if (b.src->dim != t.src->dim || !same_column_space(b.mat, t.mat))
        v.warnings.push_back("supplied base ring differs from the coinvariants; using the coinvariants");
    return v;
}

std::optional<GaloisDecomposition> galois_decomposition(const GrouplikeFamily& x) {
    GaloisVerdict v = is_galois(x);
    if (!v.galois) return std::nullopt;
    CanonicalMorphism can = canonical_morphism(x, coinvariant_inclusion(x));
    const GroupCoring& c = *x.coring;
    GaloisDecomposition d;
    Mat ce_inv = inverse(can.can.maps[0]);
    for (std::size_t a = 0; a < c.n(); ++a) d.witness.gammas.push_back(can.can.maps[a] * ce_inv);
    d.report.merge(verify_cofree(c, d.witness), "witness");
    for (std::size_t a = 0; a < c.n(); ++a)
        d.report.add("witness/grouplike/" + idx(a), "γ_α(x_e) = x_α", d.witness.gammas[a] * x.x[0] == x.x[a],
                     "fails at " + idx(a));
    d.e_galois = is_galois(e_slice_grouplike(x)).galois;
    d.report.add("e-slice-galois", "(C_e, x_e) is Galois", d.e_galois, "e-slice is not Galois");
    return d;
}

bool galois_from_cofree(const GrouplikeFamily& x, const CofreeWitness& w) {
    const GroupCoring& c = *x.coring;
    if (!verify_cofree(c, w).ok()) return false;
    for (std::size_t a = 0; a < c.n(); ++a)
        if (w.gammas[a] * x.x[0] != x.x[a]) return false;
    return is_galois(e_slice_grouplike(x)).galois;
}

bool coinvariants_match_e_slice(const GrouplikeFamily& x) {
    Mat t = coinvariants(comodule_from_grouplike(x), x).basis;
    GrouplikeFamily xe = e_slice_grouplike(x);
    Mat te = coinvariants(comodule_from_grouplike(xe), xe).basis;
    return t.cols() == te.cols() && (t.cols() == 0 || same_column_space(t, te));
}

StructureTheoremObjects default_structure_objects(const GrouplikeFamily& x, const RingMorphism& b,
                                                  std::uint64_t seed) {
    StructureTheoremObjects o;
    Bimodule bb = forget_left(regular_bimodule(b.src));
    o.b_modules.push_back(bb);
    o.b_modules.push_back(direct_sum({bb, bb}).module);
    o.comodules.push_back(coring_as_g_comodule(x.coring));
    o.comodules.push_back(G1(comodule_from_grouplike(x)));
    o.comodules.push_back(F7(x, b, bb));
    o.comodules.push_back(induced_g_comodule(x.coring, random_free_module(x.coring->base, 1, seed)));
    return o;
}

StructureTheoremResult structure_theorem_battery(const GrouplikeFamily& x, const RingMorphism& b,
                                                 const StructureTheoremObjects& objects) {
    StructureTheoremResult res;
    CheckReport& r = res.report;
    CoinvariantsResult t = coinvariants(comodule_from_grouplike(x), x);
    bool in_t = column_space_contains(t.basis, b.mat);
    std::size_t rk = rank(b.mat);
    bool base_iso = in_t && rk == b.src->dim && rk == t.dim();
    bool galois = is_galois(x).galois;
    ModulePredicates pred = module_predicates(b, regular_bimodule(x.coring->base));
    res.side_galois = base_iso && galois && pred.faithfully_flat;

    bool units = true, counits = true;
    std::string unit_fail, counit_fail;
    if (in_t) {
        for (std::size_t i = 0; i < objects.b_modules.size(); ++i)
            if (!is_invertible(unit_7(x, b, objects.b_modules[i]))) {
                units = false;
                unit_fail += idx(i) + " ";
            }
        for (std::size_t i = 0; i < objects.comodules.size(); ++i)
            if (!all_bijective(counit_7(objects.comodules[i], x, b))) {
                counits = false;
                counit_fail += idx(i) + " ";
            }
    } else {
        units = counits = false;
        unit_fail = counit_fail = "image of B not in coinvariants";
    }
    res.side_equivalence = units && counits && pred.flat_projective;
    res.agree = res.side_galois == res.side_equivalence;
    auto yn = [](bool v) { return std::string(v ? "true" : "false"); };
    std::string summary = "B≅T " + yn(base_iso) + ", Galois " + yn(galois) + ", faithfully flat " +
                          yn(pred.faithfully_flat) + "; unit iso " + yn(units) + (unit_fail.empty() ? "" : " (fails on " + unit_fail + ")") +
                          ", counit iso " + yn(counits) + (counit_fail.empty() ? "" : " (fails on " + counit_fail + ")") +
                          ", flat " + yn(pred.flat_projective);
    r.add("structure-theorem/agreement", "structure theorem, object-level equivalence", res.agree,
          "sides disagree: " + summary);
    r.add("structure-theorem/unit-implies-base-iso", "unit iso on test objects forces B ≅ T", !units || base_iso,
          summary);
    bool can_b = in_t && all_bijective(canonical_morphism(x, b).can.maps);
    r.add("structure-theorem/counit-implies-can-bijective", "counit iso on test objects forces can bijective",
          !counits || can_b, summary);
    res.summary = summary;
    return res;
}

}  // namespace gcoring
