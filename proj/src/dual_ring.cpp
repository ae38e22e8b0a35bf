#include "gcoring/dual_ring.hpp"

#include "gcoring/error.hpp"

namespace gcoring {

namespace {

std::string idx(std::size_t a) { return std::to_string(a); }
std::string idx(std::size_t a, std::size_t b) { return idx(a) + "," + idx(b); }

bool lands_in(const Mat& mat, const Blocks& dst, std::size_t to) { return lands_in_block(mat, dst, to); }

}  // namespace

bool lands_in_block(const Mat& mat, const Blocks& dst, std::size_t to) {
    Field f = mat.field();
    Mat keep = dst.incl(f, to) * dst.proj(f, to);
    return (mat - keep * mat).is_zero();
}

Blocks uniform_blocks(std::size_t n, std::size_t d) { return make_blocks(std::vector<std::size_t>(n, d)); }

std::size_t block_of(const Blocks& b, std::size_t i) {
    for (std::size_t a = 0; a < b.dims.size(); ++a)
        if (i >= b.offset[a] && i < b.offset[a] + b.dims[a]) return a;
    throw Error(ErrorKind::InvalidArgument, "basis index out of range");
}

Mat evaluation_map(const Bimodule& m, const Mat& fn) {
    const std::size_t dc = fn.cols();
    Mat ev(m.field, m.dim, m.dim * dc);
    for (std::size_t j = 0; j < dc; ++j) {
        Mat act = m.right_action(fn.col(j));
        for (std::size_t i = 0; i < m.dim; ++i) ev.set_block(0, i * dc + j, act.col(i));
    }
    return ev;
}

Mat GradedRing::mul_block(std::size_t a, std::size_t b) const {
    Field f = total->field;
    return blocks.proj(f, group.mul(a, b)) * total->table * kron(blocks.incl(f, a), blocks.incl(f, b));
}

std::size_t GradedRing::degree_of(std::size_t i) const { return block_of(blocks, i); }

Bimodule GradedRing::component(std::size_t a) const {
    if (!base) throw Error(ErrorKind::InvalidArgument, "graded ring has no base ring");
    Field f = total->field;
    Mat in = blocks.incl(f, a), out = blocks.proj(f, a);
    Bimodule m;
    m.field = f;
    m.dim = blocks.dims[a];
    m.left_ring = base;
    m.right_ring = base;
    for (std::size_t k = 0; k < base->dim; ++k) {
        Mat ik = base_map.col(k);
        m.left.push_back(out * total->left_mult(ik) * in);
        m.right.push_back(out * total->right_mult(ik) * in);
    }
    return m;
}

AlgebraPtr GradedRing::degree_e_algebra() const {
    Field f = total->field;
    return make_algebra(f, total->name + "_e", blocks.dims[0], mul_block(0, 0), blocks.proj(f, 0) * total->unit);
}

GradedRing make_graded_ring(const FiniteGroup& g, const std::vector<std::size_t>& dims, const std::vector<Mat>& mul,
                            const Mat& unit_e, AlgebraPtr base, const Mat& base_map_e, const std::string& name) {
    const std::size_t n = g.order;
    if (dims.size() != n || mul.size() != n * n)
        throw Error(ErrorKind::DimensionMismatch, "graded ring needs |G| components and |G|² products");
    Field f = unit_e.field();
    GradedRing r;
    r.group = g;
    r.blocks = make_blocks(dims);
    const std::size_t d = r.blocks.total;
    Mat table(f, d, d * d);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const Mat& m = mul[a * n + b];
            const std::size_t t = g.mul(a, b);
            if (m.rows() != dims[t] || m.cols() != dims[a] * dims[b])
                throw Error(ErrorKind::DimensionMismatch, "product block shape at " + idx(a, b));
            Mat in = r.blocks.incl(f, t);
            for (std::size_t p = 0; p < dims[a]; ++p)
                for (std::size_t q = 0; q < dims[b]; ++q)
                    table.set_block(0, (r.blocks.offset[a] + p) * d + r.blocks.offset[b] + q,
                                    in * m.col(p * dims[b] + q));
        }
    r.total = make_algebra(f, name, d, table, r.blocks.incl(f, 0) * unit_e);
    r.base = std::move(base);
    if (r.base) r.base_map = r.blocks.incl(f, 0) * base_map_e;
    return r;
}

CheckReport validate_graded_ring(const GradedRing& r) {
    CheckReport rep;
    Field f = r.total->field;
    rep.merge(validate_algebra(*r.total), "algebra");
    rep.add("unit-degree", "unit lies in degree e", lands_in(r.total->unit, r.blocks, 0));
    const std::size_t n = r.n();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Mat prod = r.total->table * kron(r.blocks.incl(f, a), r.blocks.incl(f, b));
            rep.add("degree/" + idx(a, b), "R_α R_β ⊆ R_{αβ}", lands_in(prod, r.blocks, r.group.mul(a, b)));
        }
    if (r.base) {
        const Algebra& a = *r.base;
        rep.add("base/unit", "base map is unital", r.base_map * a.unit == r.total->unit);
        bool mult = true;
        for (std::size_t i = 0; i < a.dim && mult; ++i)
            for (std::size_t j = 0; j < a.dim && mult; ++j)
                mult = r.base_map * a.table.col(i * a.dim + j) ==
                       r.total->product(r.base_map.col(i), r.base_map.col(j));
        rep.add("base/multiplicative", "base map is multiplicative", mult);
        rep.add("base/degree", "base map lands in degree e", lands_in(r.base_map, r.blocks, 0));
    }
    return rep;
}

CheckReport validate_graded_ring_morphism(const GradedRingMorphism& m) {
    CheckReport rep;
    Field f = m.src.total->field;
    rep.merge(validate_ring_morphism(RingMorphism{m.src.total, m.dst.total, m.mat}), "ring");
    for (std::size_t a = 0; a < m.src.n(); ++a)
        rep.add("degree/" + idx(a), "graded morphism preserves degree",
                lands_in(m.mat * m.src.blocks.incl(f, a), m.dst.blocks, a));
    if (m.src.base && m.dst.base)
        rep.add("base", "graded morphism commutes with the base maps", m.mat * m.src.base_map == m.dst.base_map);
    return rep;
}

Mat DualRing::sharp(std::size_t a, const Mat& fc, std::size_t b, const Mat& gc) const {
    const FiniteGroup& g = coring->group;
    const std::size_t ai = g.inverse(a), bi = g.inverse(b);
    Mat fn = functional(a, fc), gn = functional(b, gc);
    const Bimodule& cb = coring->comps[bi];
    Mat mf = evaluation_map(cb, fn);
    Mat prod = gn * mf * coring->pair(bi, ai).sect() * coring->delta_at(bi, ai);
    return duals[g.mul(a, b)].coordinates(prod);
}

DualRing dual_ring(const CoringPtr& c) {
    DualRing r;
    r.coring = c;
    const FiniteGroup& g = c->group;
    const std::size_t n = g.order;
    Field f = c->field();
    std::vector<std::size_t> dims;
    for (std::size_t a = 0; a < n; ++a) {
        r.duals.push_back(left_dual(c->comps[g.inverse(a)]));
        r.comps.push_back(r.duals.back().module);
        dims.push_back(r.comps.back().dim);
    }
    std::vector<Mat> mul;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Mat m(f, dims[g.mul(a, b)], dims[a] * dims[b]);
            for (std::size_t p = 0; p < dims[a]; ++p)
                for (std::size_t q = 0; q < dims[b]; ++q)
                    m.set_block(0, p * dims[b] + q,
                                r.sharp(a, Mat::unit_vector(f, dims[a], p), b, Mat::unit_vector(f, dims[b], q)));
            mul.push_back(std::move(m));
        }
    const Algebra& a = *c->base;
    Mat base_map(f, dims[0], a.dim);
    for (std::size_t k = 0; k < a.dim; ++k) base_map.set_block(0, k, r.duals[0].coordinates(a.right_basis[k] * c->counit));
    r.ring = make_graded_ring(g, dims, mul, r.duals[0].coordinates(c->counit), c->base, base_map, "*" + a.name);
    return r;
}

CheckReport validate_dual_ring(const DualRing& r) {
    CheckReport rep = validate_graded_ring(r.ring);
    for (std::size_t a = 0; a < r.ring.n(); ++a) {
        Bimodule via = r.ring.component(a);
        rep.add("bimodule/" + idx(a) + "/left", "a·f = i(a)#f", via.left == r.comps[a].left);
        rep.add("bimodule/" + idx(a) + "/right", "f·b = f#i(b)", via.right == r.comps[a].right);
    }
    return rep;
}

GradedRingMorphism dual_morphism(const GroupCoringMorphism& fm, const DualRing& target, const DualRing& source) {
    const FiniteGroup& g = fm.src->group;
    Field f = fm.src->field();
    const Blocks& bs = target.ring.blocks;
    const Blocks& bd = source.ring.blocks;
    Mat mat(f, bd.total, bs.total);
    for (std::size_t a = 0; a < g.order; ++a)
        for (std::size_t p = 0; p < bs.dims[a]; ++p) {
            Mat gn = target.functional(a, Mat::unit_vector(f, bs.dims[a], p));
            mat.set_block(bd.offset[a], bs.offset[a] + p, source.duals[a].coordinates(gn * fm.maps[g.inverse(a)]));
        }
    return GradedRingMorphism{target.ring, source.ring, mat};
}

CheckReport validate_graded_module(const GradedModule& m) {
    CheckReport rep;
    rep.merge(validate_bimodule(m.module), "module");
    const GradedRing& r = m.ring;
    Field f = r.total->field;
    for (std::size_t b = 0; b < r.n(); ++b)
        for (std::size_t a = 0; a < r.n(); ++a) {
            bool ok = true;
            for (std::size_t q = 0; q < r.blocks.dims[b] && ok; ++q)
                ok = lands_in(m.module.right[r.blocks.offset[b] + q] * m.blocks.incl(f, a), m.blocks, r.group.mul(a, b));
            rep.add("degree/" + idx(a, b), "M_α R_β ⊆ M_{αβ}", ok);
        }
    return rep;
}

bool same_graded_module(const GradedModule& a, const GradedModule& b) {
    return a.blocks.dims == b.blocks.dims && same_bimodule(a.module, b.module);
}

GradedModule F3(const GComodule& m, const DualRing& r) {
    const FiniteGroup& g = m.coring->group;
    Field f = m.coring->field();
    std::vector<std::size_t> dims;
    for (const auto& c : m.comps) dims.push_back(c.dim);
    GradedModule out;
    out.ring = r.ring;
    out.blocks = make_blocks(dims);
    const Blocks& rb = r.ring.blocks;
    const std::size_t d = out.blocks.total;
    out.module.field = f;
    out.module.dim = d;
    out.module.right_ring = r.ring.total;
    for (std::size_t b = 0; b < g.order; ++b) {
        const std::size_t bi = g.inverse(b);
        for (std::size_t q = 0; q < rb.dims[b]; ++q) {
            Mat fn = r.functional(b, Mat::unit_vector(f, rb.dims[b], q));
            Mat act(f, d, d);
            for (std::size_t a = 0; a < g.order; ++a) {
                const std::size_t t = g.mul(a, b);
                Mat blk = evaluation_map(m.comps[t], fn) * m.tensor(t, bi).sect() * m.rho_at(t, bi);
                act.set_block(out.blocks.offset[t], out.blocks.offset[a], blk);
            }
            out.module.right.push_back(std::move(act));
        }
    }
    return out;
}

GComodule G3(const GradedModule& m, const DualRing& r) {
    const CoringPtr& c = r.coring;
    const FiniteGroup& g = c->group;
    const std::size_t n = g.order;
    Field f = c->field();
    std::vector<DualBasis> bases;
    for (std::size_t b = 0; b < n; ++b) {
        auto db = find_dual_basis(c->comps[b]);
        if (!db) throw Error(ErrorKind::MissingDualBasis, "component " + idx(b) + " has no dual basis");
        bases.push_back(std::move(*db));
    }
    const Blocks& mb = m.blocks;
    const Blocks& rb = r.ring.blocks;
    auto piece = [&](std::size_t to, const Mat& ring_elt, std::size_t from) {
        return mb.proj(f, to) * m.module.right_action(ring_elt) * mb.incl(f, from);
    };
    std::vector<Bimodule> comps;
    for (std::size_t a = 0; a < n; ++a) {
        Bimodule x;
        x.field = f;
        x.dim = mb.dims[a];
        x.right_ring = c->base;
        for (std::size_t k = 0; k < c->base->dim; ++k) x.right.push_back(piece(a, r.ring.base_map.col(k), a));
        comps.push_back(std::move(x));
    }
    std::vector<Mat> rho;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const std::size_t t = g.mul(a, b), bi = g.inverse(b);
            TensorProduct tp = tensor_over(comps[a], c->comps[b]);
            Mat acc(f, tp.module.dim, mb.dims[t]);
            const DualBasis& db = bases[b];
            for (std::size_t i = 0; i < db.functionals.size(); ++i) {
                Mat coeff = rb.incl(f, bi) * r.duals[bi].coordinates(db.functionals[i]);
                acc += tp.proj() * kron(piece(a, coeff, t), db.elements[i]);
            }
            rho.push_back(std::move(acc));
        }
    return make_g_comodule(c, comps, std::move(rho));
}

Bimodule F4(const Comodule& m, const DualRing& r) {
    const FiniteGroup& g = m.coring->group;
    Field f = m.coring->field();
    const Blocks& rb = r.ring.blocks;
    Bimodule out;
    out.field = f;
    out.dim = m.dim();
    out.right_ring = r.ring.total;
    for (std::size_t a = 0; a < g.order; ++a) {
        const std::size_t ai = g.inverse(a);
        for (std::size_t q = 0; q < rb.dims[a]; ++q) {
            Mat fn = r.functional(a, Mat::unit_vector(f, rb.dims[a], q));
            out.right.push_back(evaluation_map(m.space, fn) * m.tens[ai].sect() * m.rho[ai]);
        }
    }
    return out;
}

Bimodule F5(const GradedModule& m) { return m.module; }

GradedModule G5(const Bimodule& m, const GradedRing& r) {
    if (!m.has_right() || !same_algebra(m.right_ring, r.total))
        throw Error(ErrorKind::BaseMismatch, "module is not over the graded ring");
    const std::size_t n = r.n();
    Field f = m.field;
    GradedModule out;
    out.ring = r;
    out.blocks = uniform_blocks(n, m.dim);
    const std::size_t d = out.blocks.total;
    out.module.field = f;
    out.module.dim = d;
    out.module.right_ring = r.total;
    for (std::size_t k = 0; k < r.total->dim; ++k) {
        const std::size_t b = r.degree_of(k);
        Mat act(f, d, d);
        for (std::size_t a = 0; a < n; ++a)
            act.set_block(out.blocks.offset[r.group.mul(a, b)], out.blocks.offset[a], m.right[k]);
        out.module.right.push_back(std::move(act));
    }
    return out;
}

CheckReport check_square(const GComodule& m, const Comodule& n, const DualRing& r) {
    CheckReport rep;
    rep.add("square/F4F1=F5F3", "forgetful square commutes on objects", same_bimodule(F4(F1(m), r), F5(F3(m, r))));
    rep.add("square/F3G1=G5F4", "cofree square commutes on objects",
            same_graded_module(F3(G1(n), r), G5(F4(n, r), r.ring)));
    return rep;
}

CofreeDualIso cofree_dual_iso(const DualRing& r, const CofreeWitness& w) {
    const GroupCoring& c = *r.coring;
    if (!verify_cofree(c, w).ok()) throw Error(ErrorKind::MissingCofreeWitness, "cofree witness does not verify");
    const FiniteGroup& g = c.group;
    const std::size_t n = g.order;
    Field f = c.field();
    AlgebraPtr re = r.ring.degree_e_algebra();
    const std::size_t de = re->dim;

    CofreeDualIso out;
    GradedRing& gr = out.group_ring;
    gr.group = g;
    gr.total = tensor_algebra(group_algebra(f, g), re);
    gr.blocks = uniform_blocks(n, de);
    gr.base = r.ring.base;
    gr.base_map = gr.blocks.incl(f, 0) * r.ring.blocks.proj(f, 0) * r.ring.base_map;

    const Blocks& rb = r.ring.blocks;
    Mat phi(f, rb.total, gr.blocks.total);
    bool shapes = true;
    for (std::size_t a = 0; a < n; ++a) {
        shapes = shapes && rb.dims[a] == de;
        Mat ginv = inverse(w.gammas[g.inverse(a)]);
        for (std::size_t p = 0; p < de; ++p) {
            Mat fn = r.functional(0, Mat::unit_vector(f, de, p)) * ginv;
            phi.set_block(rb.offset[a], gr.blocks.offset[a] + p, r.duals[a].coordinates(fn));
        }
    }
    out.phi = GradedRingMorphism{gr, r.ring, phi};
    out.report.merge(validate_graded_ring(gr), "group-ring");
    out.report.merge(validate_graded_ring_morphism(out.phi), "phi");
    out.report.add("phi/bijective", "R_e[G] ≅ R", shapes && is_invertible(phi),
                   "dims " + std::to_string(rb.total) + " vs " + std::to_string(gr.blocks.total));
    return out;
}

std::vector<Mat> right_linear_functionals(const Bimodule& m) {
    if (!m.right_ring) throw Error(ErrorKind::InvalidArgument, "right dual needs a right action");
    const auto& a = *m.right_ring;
    Field f = m.field;
    const std::size_t da = a.dim, dm = m.dim;
    std::vector<Mat> out;
    if (dm == 0) return out;
    Mat sol = linear_solution_space(f, da * dm, [&](const Mat& x) {
        Mat h = Mat::unflatten(x, da, dm);
        std::vector<Mat> parts;
        for (std::size_t i = 0; i < da; ++i) parts.push_back((h * m.right[i] - a.right_basis[i] * h).flatten());
        return vstack(f, 1, parts);
    });
    for (std::size_t j = 0; j < sol.cols(); ++j) out.push_back(Mat::unflatten(sol.col(j), da, dm));
    return out;
}

CheckReport check_iota(const DualRing& r) {
    CheckReport rep;
    const GroupCoring& c = *r.coring;
    Field f = c.field();
    const std::size_t da = c.base->dim;
    for (std::size_t a = 0; a < c.n(); ++a) {
        const Bimodule& ra = r.comps[a];
        const std::size_t dc = c.comps[c.group.inverse(a)].dim;
        std::vector<Mat> space;
        for (const auto& h : right_linear_functionals(ra)) space.push_back(h.flatten());
        Mat span = hstack(f, da * ra.dim, space);
        std::vector<Mat> images;
        for (std::size_t j = 0; j < dc; ++j) {
            std::vector<Mat> cols;
            for (std::size_t p = 0; p < ra.dim; ++p) cols.push_back(r.duals[a].basis[p].col(j));
            images.push_back(hstack(f, da, cols).flatten());
        }
        Mat iota = hstack(f, da * ra.dim, images);
        const std::size_t k = rank(iota);
        rep.add("iota/" + idx(a) + "/image", "ι_α lands in right A-linear functionals",
                iota.cols() == 0 || column_space_contains(span, iota));
        rep.add("iota/" + idx(a) + "/bijective", "ι_α is bijective", k == dc && dc == space.size(),
                "dim C " + std::to_string(dc) + ", dim R^* " + std::to_string(space.size()) + ", rank " +
                    std::to_string(k));
    }
    return rep;
}

namespace {

// *C_{βγ} as a right A-module through f·b = f(−)b.
const Bimodule& dual_component(const DualRing& r, std::size_t bg) { return r.comps[r.coring->group.inverse(bg)]; }

}  // namespace

CheckReport check_dual_basis_lemma(const DualRing& r) {
    CheckReport rep;
    const GroupCoring& c = *r.coring;
    const FiniteGroup& g = c.group;
    Field f = c.field();
    for (std::size_t b = 0; b < g.order; ++b)
        for (std::size_t gm = 0; gm < g.order; ++gm) {
            const std::size_t bg = g.mul(b, gm);
            const Bimodule& m = c.comps[bg];
            const TensorProduct& p = c.pair(b, gm);
            const LeftDual& ld = r.duals[g.inverse(bg)];
            TensorProduct t = tensor_over(dual_component(r, bg), p.module);
            const std::size_t dp = p.module.dim;
            Mat ev(f, dp * m.dim, ld.basis.size() * dp);
            for (std::size_t i = 0; i < ld.basis.size(); ++i)
                for (std::size_t j = 0; j < dp; ++j) {
                    Mat h(f, dp, m.dim);
                    Mat pj = Mat::unit_vector(f, dp, j);
                    for (std::size_t k = 0; k < m.dim; ++k)
                        h.set_block(0, k, p.module.left_action(ld.basis[i].col(k)) * pj);
                    ev.set_block(0, i * dp + j, h.flatten());
                }
            const std::size_t k = rank(ev * t.sect());
            rep.add("evaluation-injective/" + idx(b, gm), "*M⊗_A P → Hom(M,P) is injective", k == t.module.dim,
                    "dim " + std::to_string(t.module.dim) + ", rank " + std::to_string(k));
        }
    return rep;
}

CheckReport check_dual_basis_comultiplication(const DualRing& r) {
    CheckReport rep;
    const GroupCoring& c = *r.coring;
    const FiniteGroup& g = c.group;
    std::vector<DualBasis> bases;
    for (std::size_t a = 0; a < g.order; ++a) {
        auto db = find_dual_basis(c.comps[a]);
        if (!db) throw Error(ErrorKind::MissingDualBasis, "component " + idx(a) + " has no dual basis");
        bases.push_back(std::move(*db));
    }
    for (std::size_t b = 0; b < g.order; ++b)
        for (std::size_t gm = 0; gm < g.order; ++gm) {
            const std::size_t bg = g.mul(b, gm);
            const LeftDual& ld = r.duals[g.inverse(bg)];
            const TensorProduct& p = c.pair(b, gm);
            TensorProduct t = tensor_over(dual_component(r, bg), p.module);
            Mat lhs(c.field(), t.module.dim, 1), rhs = lhs;
            const DualBasis& d = bases[bg];
            for (std::size_t i = 0; i < d.functionals.size(); ++i)
                lhs += t.element(ld.coordinates(d.functionals[i]), c.delta_at(b, gm) * d.elements[i]);
            const DualBasis& db = bases[b];
            const DualBasis& dg = bases[gm];
            const std::size_t bi = g.inverse(b), gi = g.inverse(gm);
            for (std::size_t j = 0; j < db.functionals.size(); ++j)
                for (std::size_t k = 0; k < dg.functionals.size(); ++k) {
                    Mat prod = r.sharp(gi, r.duals[gi].coordinates(dg.functionals[k]), bi,
                                       r.duals[bi].coordinates(db.functionals[j]));
                    rhs += t.element(prod, p.element(db.elements[j], dg.elements[k]));
                }
            rep.add("dual-basis-comultiplication/" + idx(b, gm), "dual basis of C_{βγ} splits along Δ", lhs == rhs);
        }
    return rep;
}

}  // namespace gcoring
