#include "gcoring/morita.hpp"

#include "gcoring/error.hpp"

namespace gcoring {

namespace {

std::string idx(std::size_t a) { return std::to_string(a); }

Mat left_inverse_or_empty(const Mat& b) {
    return b.cols() == 0 ? Mat(b.field(), 0, b.rows()) : left_inverse(b);
}

bool closed_under_product(const Algebra& a, const Mat& basis) {
    for (std::size_t i = 0; i < basis.cols(); ++i)
        for (std::size_t j = 0; j < basis.cols(); ++j)
            if (!column_space_contains(basis, a.product(basis.col(i), basis.col(j)))) return false;
    return column_space_contains(basis, a.unit);
}

bool contains_all(const Mat& space, const Mat& cols) { return cols.cols() == 0 || column_space_contains(space, cols); }

// Component α of a vector in ∏_α A.
Mat part(const Mat& v, std::size_t a, std::size_t d) { return v.block(a * d, 0, d, 1); }

// Residual of c_(1)q_α(c_(2)) - q_{αβ}(c)x_{β^{-1}} over all (α,β); optionally read through all f ∈ R_β.
Mat o_residual(const GrouplikeFamily& x, const DualRing& r, bool weak, const Mat& q) {
    const GroupCoring& c = *r.coring;
    const FiniteGroup& g = c.group;
    Field f = c.field();
    const Blocks& rb = r.ring.blocks;
    std::vector<Mat> parts;
    for (std::size_t a = 0; a < g.order; ++a)
        for (std::size_t b = 0; b < g.order; ++b) {
            const std::size_t t = g.mul(a, b), bi = g.inverse(b), ai = g.inverse(a);
            const Bimodule& cb = c.comps[bi];
            Mat qa = r.functional(a, rb.proj(f, a) * q);
            Mat qt = r.functional(t, rb.proj(f, t) * q);
            Mat lhs = evaluation_map(cb, qa) * c.pair(bi, ai).sect() * c.delta_at(bi, ai);
            Mat rhs(f, cb.dim, qt.cols());
            for (std::size_t j = 0; j < qt.cols(); ++j) rhs.set_block(0, j, cb.left_action(qt.col(j)) * x.x[bi]);
            Mat diff = lhs - rhs;
            if (weak)
                for (const auto& fn : r.duals[b].basis) parts.push_back((fn * diff).flatten());
            else
                parts.push_back(diff.flatten());
        }
    return vstack(f, 1, parts);
}

// Residual of b_{αβ}x_{β^{-1}} - x_{β^{-1}}b_α on ∏_α A.
Mat s_residual(const GrouplikeFamily& x, const DualRing& r, bool weak, const Mat& b) {
    const GroupCoring& c = *r.coring;
    const FiniteGroup& g = c.group;
    const std::size_t da = c.base->dim;
    std::vector<Mat> parts;
    for (std::size_t a = 0; a < g.order; ++a)
        for (std::size_t be = 0; be < g.order; ++be) {
            const std::size_t t = g.mul(a, be), bi = g.inverse(be);
            const Bimodule& cb = c.comps[bi];
            Mat diff = cb.left_action(part(b, t, da)) * x.x[bi] - cb.right_action(part(b, a, da)) * x.x[bi];
            if (weak)
                for (const auto& fn : r.duals[be].basis) parts.push_back(fn * diff);
            else
                parts.push_back(diff);
        }
    return vstack(c.field(), 1, parts);
}

Mat solve_space(Field f, std::size_t n, const std::function<Mat(const Mat&)>& op) {
    if (n == 0) return Mat(f, 0, 0);
    return linear_solution_space(f, n, op);
}

Bimodule blank_module(Field f, std::size_t dim) {
    Bimodule m;
    m.field = f;
    m.dim = dim;
    return m;
}

// 𝕄 or 𝕄' on (T, R, A, O).
MoritaContext coring_context(const std::string& name, const GrouplikeFamily& x, const DualRing& r, const Subalgebra& t,
                             const Mat& o) {
    const GroupCoring& c = *r.coring;
    Field f = c.field();
    const Algebra& a = *c.base;
    const Algebra& rt = *r.ring.total;
    const std::size_t da = a.dim, dO = o.cols();
    const Mat& tin = t.inclusion.mat;
    Mat tli = left_inverse(tin), oli = left_inverse_or_empty(o);

    Bimodule p = blank_module(f, da);
    p.left_ring = t.algebra;
    for (std::size_t k = 0; k < t.algebra->dim; ++k) p.left.push_back(a.left_mult(tin.col(k)));
    p.right_ring = r.ring.total;
    p.right = F4(comodule_from_grouplike(x), r).right;

    Bimodule q = blank_module(f, dO);
    q.left_ring = r.ring.total;
    for (std::size_t k = 0; k < rt.dim; ++k) q.left.push_back(oli * rt.left_mult(rt.basis(k)) * o);
    q.right_ring = t.algebra;
    for (std::size_t k = 0; k < t.algebra->dim; ++k)
        q.right.push_back(oli * rt.right_mult(r.ring.base_map * tin.col(k)) * o);

    Mat tau(f, t.algebra->dim, da * dO), mu(f, rt.dim, dO * da);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < dO; ++j) {
            tau.set_block(0, i * dO + j, tli * (p.right_action(o.col(j)) * a.basis(i)));
            mu.set_block(0, j * da + i, rt.right_mult(r.ring.base_map.col(i)) * o.col(j));
        }
    return make_morita_context(name, t.algebra, r.ring.total, std::move(p), std::move(q), std::move(tau), std::move(mu));
}

// ∏_α A-valued right action q ↦ (q_α·b_α)_α on R.
Mat componentwise_right(const DualRing& r, const Mat& b) {
    Field f = r.ring.total->field;
    const Blocks& rb = r.ring.blocks;
    const std::size_t da = r.coring->base->dim;
    Mat out(f, rb.total, rb.total);
    for (std::size_t g = 0; g < r.ring.n(); ++g)
        out += r.ring.total->right_mult(r.ring.base_map * part(b, g, da)) * rb.incl(f, g) * rb.proj(f, g);
    return out;
}

// 𝔾𝕄 or 𝔾𝕄' on (G*S, R, A{G}, QG).
GradedMoritaContext graded_coring_context(const std::string& name, const GrouplikeFamily& x, const DualRing& r,
                                          const GradedModule& ag, const Subalgebra& s, const GradedRing& gs,
                                          const std::vector<Mat>& shift, const Mat& qb) {
    const GroupCoring& c = *r.coring;
    const FiniteGroup& g = c.group;
    const std::size_t n = g.order;
    Field f = c.field();
    const Algebra& a = *c.base;
    const Algebra& rt = *r.ring.total;
    const Blocks& rb = r.ring.blocks;
    const std::size_t da = a.dim, ds = s.algebra->dim, dq = qb.cols();
    const Mat& sb = s.inclusion.mat;
    Mat sli = left_inverse(sb), qli = left_inverse_or_empty(qb);

    Bimodule p = blank_module(f, n * da);
    p.left_ring = gs.total;
    for (std::size_t sg = 0; sg < n; ++sg)
        for (std::size_t k = 0; k < ds; ++k) {
            Mat act(f, n * da, n * da);
            for (std::size_t al = 0; al < n; ++al)
                act.set_block(g.mul(sg, al) * da, al * da, a.left_mult(part(sb.col(k), al, da)));
            p.left.push_back(std::move(act));
        }
    p.right_ring = r.ring.total;
    p.right = ag.module.right;

    Bimodule q = blank_module(f, n * dq);
    q.left_ring = r.ring.total;
    for (std::size_t k = 0; k < rt.dim; ++k) {
        const std::size_t be = r.ring.degree_of(k);
        Mat blk = qli * rt.left_mult(rt.basis(k)) * qb;
        Mat act(f, n * dq, n * dq);
        for (std::size_t al = 0; al < n; ++al) act.set_block(g.mul(be, al) * dq, al * dq, blk);
        q.left.push_back(std::move(act));
    }
    q.right_ring = gs.total;
    for (std::size_t tu = 0; tu < n; ++tu)
        for (std::size_t k = 0; k < ds; ++k) {
            Mat act(f, n * dq, n * dq);
            for (std::size_t al = 0; al < n; ++al) {
                const std::size_t t = g.mul(al, tu);
                Mat bt = shift[g.inverse(t)] * sb.col(k);
                act.set_block(t * dq, al * dq, qli * componentwise_right(r, bt) * qb);
            }
            q.right.push_back(std::move(act));
        }

    Mat tau(f, n * ds, n * da * n * dq), mu(f, rt.dim, n * dq * n * da);
    for (std::size_t al = 0; al < n; ++al)
        for (std::size_t i = 0; i < da; ++i)
            for (std::size_t sg = 0; sg < n; ++sg)
                for (std::size_t j = 0; j < dq; ++j) {
                    Mat qv = qb.col(j);
                    Mat bv(f, n * da, 1);
                    for (std::size_t be = 0; be < n; ++be) {
                        const std::size_t t = g.mul(sg, be), ti = g.inverse(t);
                        Mat qt = r.functional(t, rb.proj(f, t) * qv);
                        bv.set_block(be * da, 0, qt * (c.comps[ti].right_action(a.basis(i)) * x.x[ti]));
                    }
                    tau.set_block(g.mul(al, sg) * ds, (al * da + i) * (n * dq) + sg * dq + j, sli * bv);
                    Mat lo = rb.incl(f, g.mul(sg, al)) * rb.proj(f, g.mul(sg, al)) * qv;
                    mu.set_block(0, (sg * dq + j) * (n * da) + al * da + i, rt.right_mult(r.ring.base_map.col(i)) * lo);
                }
    GradedMoritaContext out;
    out.ctx = make_morita_context(name, gs.total, r.ring.total, std::move(p), std::move(q), std::move(tau),
                                  std::move(mu));
    out.group = g;
    out.left_blocks = gs.blocks;
    out.right_blocks = rb;
    out.p_blocks = uniform_blocks(n, da);
    out.q_blocks = uniform_blocks(n, dq);
    return out;
}

// ω lands in G*S: every S-component read back exactly.
bool omega_lands_in_s(const GrouplikeFamily& x, const DualRing& r, const Subalgebra& s, const Mat& qb) {
    const GroupCoring& c = *r.coring;
    const FiniteGroup& g = c.group;
    Field f = c.field();
    const std::size_t n = g.order, da = c.base->dim;
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t sg = 0; sg < n; ++sg)
            for (std::size_t j = 0; j < qb.cols(); ++j) {
                Mat bv(f, n * da, 1);
                for (std::size_t be = 0; be < n; ++be) {
                    const std::size_t t = g.mul(sg, be), ti = g.inverse(t);
                    Mat qt = r.functional(t, r.ring.blocks.proj(f, t) * qb.col(j));
                    bv.set_block(be * da, 0, qt * (c.comps[ti].right_action(c.base->basis(i)) * x.x[ti]));
                }
                if (!column_space_contains(s.inclusion.mat, bv)) return false;
            }
    return true;
}

}  // namespace

MoritaContext make_morita_context(std::string name, AlgebraPtr t, AlgebraPtr r, Bimodule p, Bimodule q,
                                  Mat tau_ambient, Mat mu_ambient) {
    if (!same_algebra(p.left_ring, t) || !same_algebra(q.right_ring, t) || !same_algebra(p.right_ring, r) ||
        !same_algebra(q.left_ring, r))
        throw Error(ErrorKind::BaseMismatch, "Morita context bimodules over the wrong rings");
    if (tau_ambient.rows() != t->dim || tau_ambient.cols() != p.dim * q.dim || mu_ambient.rows() != r->dim ||
        mu_ambient.cols() != q.dim * p.dim)
        throw Error(ErrorKind::DimensionMismatch, "connecting map shape");
    MoritaContext m;
    m.name = std::move(name);
    m.left_ring = std::move(t);
    m.right_ring = std::move(r);
    m.p = std::move(p);
    m.q = std::move(q);
    m.pq = tensor_over(m.p, m.q);
    m.qp = tensor_over(m.q, m.p);
    m.tau_ambient = std::move(tau_ambient);
    m.mu_ambient = std::move(mu_ambient);
    return m;
}

CheckReport validate_morita_context(const MoritaContext& m) {
    CheckReport rep;
    rep.merge(validate_bimodule(m.p), "P");
    rep.merge(validate_bimodule(m.q), "Q");
    rep.add("tau/balanced", "τ is balanced over R", kills_relations(m.tau_ambient, m.pq));
    rep.add("mu/balanced", "μ is balanced over T", kills_relations(m.mu_ambient, m.qp));
    rep.add("tau/bimodule", "τ is a T-bimodule map", is_bimodule_map(m.pq.module, regular_bimodule(m.left_ring), m.tau()));
    rep.add("mu/bimodule", "μ is an R-bimodule map", is_bimodule_map(m.qp.module, regular_bimodule(m.right_ring), m.mu()));
    const std::size_t dp = m.p.dim, dq = m.q.dim;
    std::string fail_p, fail_q;
    for (std::size_t i = 0; i < dp; ++i)
        for (std::size_t j = 0; j < dq; ++j)
            for (std::size_t l = 0; l < dp && fail_p.empty(); ++l)
                if (m.p.left_action(m.tau_ambient.col(i * dq + j)).col(l) !=
                    m.p.right_action(m.mu_ambient.col(j * dp + l)).col(i))
                    fail_p = "(" + idx(i) + "," + idx(j) + "," + idx(l) + ")";
    for (std::size_t j = 0; j < dq; ++j)
        for (std::size_t i = 0; i < dp; ++i)
            for (std::size_t l = 0; l < dq && fail_q.empty(); ++l)
                if (m.q.left_action(m.mu_ambient.col(j * dp + i)).col(l) !=
                    m.q.right_action(m.tau_ambient.col(i * dq + l)).col(j))
                    fail_q = "(" + idx(j) + "," + idx(i) + "," + idx(l) + ")";
    rep.add("associativity/P", "τ(p⊗q)p' = pμ(q⊗p')", fail_p.empty(), fail_p);
    rep.add("associativity/Q", "μ(q⊗p)q' = qτ(p⊗q')", fail_q.empty(), fail_q);
    return rep;
}

CheckReport validate_graded_morita_context(const GradedMoritaContext& m) {
    CheckReport rep = validate_morita_context(m.ctx);
    const MoritaContext& c = m.ctx;
    Field f = c.p.field;
    const FiniteGroup& g = m.group;
    auto acts = [&](const std::vector<Mat>& mats, const Blocks& ring, const Blocks& mod, bool left) {
        for (std::size_t k = 0; k < mats.size(); ++k)
            for (std::size_t a = 0; a < g.order; ++a) {
                const std::size_t d = block_of(ring, k);
                const std::size_t to = left ? g.mul(d, a) : g.mul(a, d);
                if (!lands_in_block(mats[k] * mod.incl(f, a), mod, to)) return false;
            }
        return true;
    };
    rep.add("degree/P-left", "S_σ P_α ⊆ P_{σα}", acts(c.p.left, m.left_blocks, m.p_blocks, true));
    rep.add("degree/P-right", "P_α R_σ ⊆ P_{ασ}", acts(c.p.right, m.right_blocks, m.p_blocks, false));
    rep.add("degree/Q-left", "R_σ Q_α ⊆ Q_{σα}", acts(c.q.left, m.right_blocks, m.q_blocks, true));
    rep.add("degree/Q-right", "Q_α S_σ ⊆ Q_{ασ}", acts(c.q.right, m.left_blocks, m.q_blocks, false));
    auto maps = [&](const Mat& amb, std::size_t d1, const Blocks& b1, const Blocks& b2, const Blocks& target) {
        for (std::size_t i = 0; i < d1; ++i)
            for (std::size_t j = 0; j < b2.total; ++j) {
                const std::size_t to = g.mul(block_of(b1, i), block_of(b2, j));
                if (!lands_in_block(amb.col(i * b2.total + j), target, to)) return false;
            }
        return true;
    };
    rep.add("degree/tau", "τ is homogeneous of degree e",
            maps(c.tau_ambient, c.p.dim, m.p_blocks, m.q_blocks, m.left_blocks));
    rep.add("degree/mu", "μ is homogeneous of degree e",
            maps(c.mu_ambient, c.q.dim, m.q_blocks, m.p_blocks, m.right_blocks));
    return rep;
}

Strictness is_strict(const MoritaContext& m) {
    Strictness s;
    Mat t = m.tau(), u = m.mu();
    const std::size_t rt = rank(t), ru = rank(u);
    s.tau_surjective = rt == m.left_ring->dim;
    s.mu_surjective = ru == m.right_ring->dim;
    s.tau_bijective = s.tau_surjective && rt == m.pq.module.dim;
    s.mu_bijective = s.mu_surjective && ru == m.qp.module.dim;
    s.strict = s.tau_surjective && s.mu_surjective;
    s.report.add("strict/tau", "surjective connecting map is bijective", !s.tau_surjective || s.tau_bijective,
                 "rank " + idx(rt) + ", source dim " + idx(m.pq.module.dim));
    s.report.add("strict/mu", "surjective connecting map is bijective", !s.mu_surjective || s.mu_bijective,
                 "rank " + idx(ru) + ", source dim " + idx(m.qp.module.dim));
    return s;
}

MoritaContext standard_context(const Bimodule& p) {
    if (!p.has_right()) throw Error(ErrorKind::InvalidArgument, "standard context needs a right module");
    GradedRing r;
    r.group = FiniteGroup::trivial();
    r.total = p.right_ring;
    r.blocks = make_blocks({p.right_ring->dim});
    GradedModule gp{r, make_blocks({p.dim}), forget_left(p)};
    return context_from_graded_module(gp).ctx.ctx;
}

Mat grouplike_character(const GrouplikeFamily& x, const DualRing& r) {
    const GroupCoring& c = *r.coring;
    Field f = c.field();
    const Blocks& rb = r.ring.blocks;
    Mat chi(f, c.base->dim, rb.total);
    for (std::size_t k = 0; k < rb.total; ++k) {
        const std::size_t a = block_of(rb, k);
        Mat fn = r.functional(a, Mat::unit_vector(f, rb.dims[a], k - rb.offset[a]));
        chi.set_block(0, k, fn * x.x[c.group.inverse(a)]);
    }
    return chi;
}

CheckReport validate_character(const GrouplikeFamily& x, const DualRing& r, const Mat& chi) {
    (void)x;
    CheckReport rep;
    const Algebra& a = *r.coring->base;
    const Algebra& rt = *r.ring.total;
    bool lin = true;
    for (std::size_t k = 0; k < a.dim && lin; ++k)
        lin = chi * rt.right_mult(r.ring.base_map.col(k)) == a.right_basis[k] * chi;
    rep.add("character/right-linear", "χ(f·a) = χ(f)a", lin);
    bool mult = true;
    for (std::size_t i = 0; i < rt.dim && mult; ++i)
        for (std::size_t j = 0; j < rt.dim && mult; ++j) {
            Mat lhs = chi * rt.product(r.ring.base_map * chi.col(i), rt.basis(j));
            mult = lhs == chi * rt.product(rt.basis(i), rt.basis(j));
        }
    rep.add("character/multiplicative", "χ(χ(f)·g) = χ(f#g)", mult);
    rep.add("character/unit", "χ(ε) = 1", chi * rt.unit == a.unit);
    return rep;
}

Mat o_space(const GrouplikeFamily& x, const DualRing& r, bool weak) {
    return solve_space(r.ring.total->field, r.ring.total->dim,
                       [&](const Mat& q) { return o_residual(x, r, weak, q); });
}

Mat weak_coinvariants(const GrouplikeFamily& x, const DualRing& r) {
    const GroupCoring& c = *r.coring;
    return solve_space(c.field(), c.base->dim, [&](const Mat& a) {
        std::vector<Mat> parts;
        for (std::size_t al = 0; al < c.n(); ++al) {
            const Bimodule& ca = c.comps[al];
            Mat diff = ca.left_action(a) * x.x[al] - ca.right_action(a) * x.x[al];
            for (const auto& fn : r.duals[c.group.inverse(al)].basis) parts.push_back(fn * diff);
        }
        return vstack(c.field(), 1, parts);
    });
}

CoringMoritaContexts build_context_M(const GrouplikeFamily& x, const DualRing& r) {
    CoringMoritaContexts out;
    const AlgebraPtr& a = r.coring->base;
    const Algebra& rt = *r.ring.total;
    out.t = *coinvariant_ring(x).ring;
    out.t_weak = make_subalgebra(a, weak_coinvariants(x, r), "T'");
    out.o = o_space(x, r, false);
    out.o_weak = o_space(x, r, true);
    CheckReport& rep = out.report;
    bool recheck = true;
    for (std::size_t j = 0; j < out.o.cols(); ++j) recheck = recheck && o_residual(x, r, false, out.o.col(j)).is_zero();
    rep.add("O/membership", "solved basis satisfies the defining identities", recheck);
    bool ideal = true;
    for (std::size_t k = 0; k < rt.dim && ideal; ++k) ideal = contains_all(out.o, rt.left_mult(rt.basis(k)) * out.o);
    rep.add("O/left-ideal", "f#q ∈ O", ideal);
    bool right = true;
    for (std::size_t k = 0; k < out.t.algebra->dim && right; ++k)
        right = contains_all(out.o, rt.right_mult(r.ring.base_map * out.t.inclusion.mat.col(k)) * out.o);
    rep.add("O/right-T", "q·t ∈ O", right);
    rep.add("T=T'", "coinvariants agree with R-invariants", same_column_space(out.t.inclusion.mat, out.t_weak.inclusion.mat));
    rep.add("O=O'", "O agrees with its weak form", same_column_space(out.o, out.o_weak) || (out.o.cols() == 0 && out.o_weak.cols() == 0));
    out.m = coring_context("M", x, r, out.t, out.o);
    out.m_weak = coring_context("M'", x, r, out.t_weak, out.o_weak);
    bool in_t = true;
    for (std::size_t j = 0; j < out.m.tau_ambient.cols() && in_t; ++j) {
        Mat v = out.m.p.right_action(out.o.col(j % std::max<std::size_t>(out.o.cols(), 1))) *
                a->basis(j / std::max<std::size_t>(out.o.cols(), 1));
        in_t = column_space_contains(out.t.inclusion.mat, v);
    }
    rep.add("tau/lands-in-T", "τ(a⊗q) ∈ T", in_t);
    rep.merge(validate_morita_context(out.m), "M");
    rep.merge(validate_morita_context(out.m_weak), "M'");
    return out;
}

GradedHom graded_hom(const GradedModule& m, const GradedModule& n) {
    if (!same_algebra(m.ring.total, n.ring.total)) throw Error(ErrorKind::BaseMismatch, "modules over different rings");
    const FiniteGroup& g = m.ring.group;
    Field f = m.module.field;
    GradedHom h;
    h.rows = n.dim();
    h.cols = m.dim();
    std::vector<std::size_t> dims;
    for (std::size_t s = 0; s < g.order; ++s) {
        Mat sol = solve_space(f, h.rows * h.cols, [&](const Mat& v) {
            Mat x = Mat::unflatten(v, h.rows, h.cols);
            std::vector<Mat> parts;
            for (std::size_t k = 0; k < m.module.right.size(); ++k)
                parts.push_back((x * m.module.right[k] - n.module.right[k] * x).flatten());
            for (std::size_t a = 0; a < g.order; ++a) {
                const std::size_t t = g.mul(s, a);
                Mat xa = x * m.blocks.incl(f, a);
                parts.push_back((xa - n.blocks.incl(f, t) * n.blocks.proj(f, t) * xa).flatten());
            }
            return vstack(f, 1, parts);
        });
        dims.push_back(sol.cols());
        for (std::size_t j = 0; j < sol.cols(); ++j) h.basis.push_back(Mat::unflatten(sol.col(j), h.rows, h.cols));
    }
    h.blocks = make_blocks(dims);
    std::vector<Mat> flat;
    for (const auto& b : h.basis) flat.push_back(b.flatten());
    h.embed = hstack(f, h.rows * h.cols, flat);
    h.coords_of = left_inverse_or_empty(h.embed);
    return h;
}

GradedRing graded_end(const GradedModule& m, const GradedHom& end) {
    Field f = m.module.field;
    const std::size_t e = end.dim();
    Mat table(f, e, e * e);
    for (std::size_t i = 0; i < e; ++i)
        for (std::size_t j = 0; j < e; ++j) table.set_block(0, i * e + j, end.coordinates(end.basis[i] * end.basis[j]));
    GradedRing r;
    r.group = m.ring.group;
    r.total = make_algebra(f, "END", e, table, end.coordinates(Mat::identity(f, m.dim())));
    r.blocks = end.blocks;
    return r;
}

GradedModule regular_graded_module(const GradedRing& r) {
    return GradedModule{r, r.blocks, forget_left(regular_bimodule(r.total))};
}

ModuleContext context_from_graded_module(const GradedModule& p) {
    ModuleContext out;
    const GradedRing& r = p.ring;
    const Algebra& rt = *r.total;
    Field f = rt.field;
    out.end = graded_hom(p, p);
    out.end_ring = graded_end(p, out.end);
    out.hom = graded_hom(p, regular_graded_module(r));
    const std::size_t dp = p.dim(), dq = out.hom.dim(), de = out.end.dim();

    Bimodule pb = blank_module(f, dp);
    pb.left_ring = out.end_ring.total;
    pb.left = out.end.basis;
    pb.right_ring = r.total;
    pb.right = p.module.right;

    Bimodule qb = blank_module(f, dq);
    qb.left_ring = r.total;
    for (std::size_t k = 0; k < rt.dim; ++k) {
        Mat act(f, dq, dq);
        for (std::size_t j = 0; j < dq; ++j)
            act.set_block(0, j, out.hom.coordinates(rt.left_mult(rt.basis(k)) * out.hom.basis[j]));
        qb.left.push_back(std::move(act));
    }
    qb.right_ring = out.end_ring.total;
    for (std::size_t k = 0; k < de; ++k) {
        Mat act(f, dq, dq);
        for (std::size_t j = 0; j < dq; ++j) act.set_block(0, j, out.hom.coordinates(out.hom.basis[j] * out.end.basis[k]));
        qb.right.push_back(std::move(act));
    }

    Mat tau(f, de, dp * dq), mu(f, rt.dim, dq * dp);
    for (std::size_t i = 0; i < dp; ++i)
        for (std::size_t j = 0; j < dq; ++j) {
            Mat s(f, dp, dp);
            for (std::size_t l = 0; l < dp; ++l)
                s.set_block(0, l, p.module.right_action(out.hom.basis[j].col(l)).col(i));
            tau.set_block(0, i * dq + j, out.end.coordinates(s));
            mu.set_block(0, j * dp + i, out.hom.basis[j].col(i));
        }
    out.ctx.ctx = make_morita_context("END-context", out.end_ring.total, r.total, std::move(pb), std::move(qb),
                                      std::move(tau), std::move(mu));
    out.ctx.group = r.group;
    out.ctx.left_blocks = out.end.blocks;
    out.ctx.right_blocks = r.blocks;
    out.ctx.p_blocks = p.blocks;
    out.ctx.q_blocks = out.hom.blocks;
    return out;
}

GradedMoritaContext group_ring_context(const MoritaContext& me, const FiniteGroup& g) {
    Field f = me.p.field;
    const std::size_t n = g.order;
    AlgebraPtr kg = group_algebra(f, g);
    AlgebraPtr s = tensor_algebra(kg, me.left_ring), r = tensor_algebra(kg, me.right_ring);
    const std::size_t ds = me.left_ring->dim, dr = me.right_ring->dim, dp = me.p.dim, dq = me.q.dim;
    auto extend = [&](const Bimodule& m, const AlgebraPtr& left, const AlgebraPtr& right) {
        Bimodule out = blank_module(f, n * m.dim);
        out.left_ring = left;
        out.right_ring = right;
        for (std::size_t sg = 0; sg < n; ++sg)
            for (const auto& l : m.left) {
                Mat act(f, out.dim, out.dim);
                for (std::size_t t = 0; t < n; ++t) act.set_block(g.mul(sg, t) * m.dim, t * m.dim, l);
                out.left.push_back(std::move(act));
            }
        for (std::size_t rho = 0; rho < n; ++rho)
            for (const auto& rr : m.right) {
                Mat act(f, out.dim, out.dim);
                for (std::size_t t = 0; t < n; ++t) act.set_block(g.mul(t, rho) * m.dim, t * m.dim, rr);
                out.right.push_back(std::move(act));
            }
        return out;
    };
    Bimodule p = extend(me.p, s, r), q = extend(me.q, r, s);
    Mat tau(f, n * ds, n * dp * n * dq), mu(f, n * dr, n * dq * n * dp);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const std::size_t t = g.mul(a, b);
            for (std::size_t i = 0; i < dp; ++i)
                for (std::size_t j = 0; j < dq; ++j) {
                    tau.set_block(t * ds, (a * dp + i) * (n * dq) + b * dq + j, me.tau_ambient.col(i * dq + j));
                    mu.set_block(t * dr, (a * dq + j) * (n * dp) + b * dp + i, me.mu_ambient.col(j * dp + i));
                }
        }
    GradedMoritaContext out;
    out.ctx = make_morita_context(me.name + "[G]", s, r, std::move(p), std::move(q), std::move(tau), std::move(mu));
    out.group = g;
    out.left_blocks = uniform_blocks(n, ds);
    out.right_blocks = uniform_blocks(n, dr);
    out.p_blocks = uniform_blocks(n, dp);
    out.q_blocks = uniform_blocks(n, dq);
    return out;
}

GradedModule build_A_braces_G(const GrouplikeFamily& x, const DualRing& r) {
    return F3(G1(comodule_from_grouplike(x)), r);
}

GradedRing twisted_group_ring(const Subalgebra& s, const FiniteGroup& g, const std::vector<Mat>& shift,
                              const std::string& name) {
    const Algebra& power = *s.inclusion.dst;
    Field f = power.field;
    const std::size_t n = g.order, ds = s.algebra->dim, d = n * ds;
    const Mat& sb = s.inclusion.mat;
    Mat sli = left_inverse(sb);
    Mat table(f, d, d * d);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t i = 0; i < ds; ++i)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t j = 0; j < ds; ++j) {
                    Mat prod = sli * power.product(shift[b] * sb.col(i), sb.col(j));
                    table.set_block(g.mul(a, b) * ds, (a * ds + i) * d + b * ds + j, prod);
                }
    Mat unit(f, d, 1);
    unit.set_block(0, 0, s.algebra->unit);
    GradedRing r;
    r.group = g;
    r.total = make_algebra(f, name, d, table, unit);
    r.blocks = uniform_blocks(n, ds);
    return r;
}

TwistedRings build_S_and_twisted(const GrouplikeFamily& x, const DualRing& r) {
    const GroupCoring& c = *r.coring;
    const FiniteGroup& g = c.group;
    Field f = c.field();
    const std::size_t n = g.order, da = c.base->dim;
    TwistedRings out;
    out.power = tensor_algebra(product_algebra(f, n), c.base);
    for (std::size_t sg = 0; sg < n; ++sg) {
        Mat p(f, n * da, n * da);
        for (std::size_t a = 0; a < n; ++a) p.set_block(a * da, g.mul(sg, a) * da, Mat::identity(f, da));
        out.shift.push_back(std::move(p));
    }
    CheckReport& rep = out.report;
    Mat sb = solve_space(f, n * da, [&](const Mat& b) { return s_residual(x, r, false, b); });
    Mat sw = solve_space(f, n * da, [&](const Mat& b) { return s_residual(x, r, true, b); });
    bool recheck = true;
    for (std::size_t j = 0; j < sb.cols(); ++j) recheck = recheck && s_residual(x, r, false, sb.col(j)).is_zero();
    rep.add("S/membership", "solved basis satisfies b_{αβ}x = xb_α", recheck);
    const bool cs = closed_under_product(*out.power, sb), cw = closed_under_product(*out.power, sw);
    rep.add("S/closed", "S is a subring of ∏A", cs);
    rep.add("S'/closed", "S' is a subring of ∏A", cw);
    if (!cs || !cw) throw Error(ErrorKind::SemanticError, "coefficient subspace is not a ring");
    out.s = make_subalgebra(out.power, sb, "S");
    out.s_weak = make_subalgebra(out.power, sw, "S'");
    for (std::size_t sg = 0; sg < n; ++sg) {
        rep.add("S/shift/" + idx(sg), "S^σ ⊆ S", column_space_contains(sb, out.shift[sg] * sb));
        rep.add("S'/shift/" + idx(sg), "S'^σ ⊆ S'", column_space_contains(sw, out.shift[sg] * sw));
    }
    rep.add("S=S'", "S agrees with its weak form", same_column_space(sb, sw));
    auto fixed = [&](const Mat& basis) {
        std::vector<Mat> rows;
        for (std::size_t sg = 0; sg < n; ++sg) rows.push_back((out.shift[sg] - Mat::identity(f, n * da)) * basis);
        Mat k = kernel(vstack(f, basis.cols(), rows)).transpose();
        return basis * k;
    };
    auto diagonal = [&](const Mat& t) {
        std::vector<Mat> parts(n, t);
        return vstack(f, t.cols(), parts);
    };
    Mat t = coinvariant_ring(x).basis;
    Mat tw = weak_coinvariants(x, r);
    rep.add("S^G=T", "G-fixed part of S is T", same_column_space(fixed(sb), diagonal(t)));
    rep.add("S'^G=T'", "G-fixed part of S' is T'", same_column_space(fixed(sw), diagonal(tw)));
    out.gs = twisted_group_ring(out.s, g, out.shift, "G*S");
    out.gs_weak = twisted_group_ring(out.s_weak, g, out.shift, "G*S'");
    rep.merge(validate_graded_ring(out.gs), "G*S");
    rep.merge(validate_graded_ring(out.gs_weak), "G*S'");
    return out;
}

GradedMoritaData build_Q_and_contexts(const GrouplikeFamily& x, const DualRing& r) {
    GradedMoritaData d;
    d.dual = r;
    d.x = x;
    d.a_g = build_A_braces_G(x, r);
    d.tw = build_S_and_twisted(x, r);
    d.q = o_space(x, r, false);
    d.q_weak = o_space(x, r, true);
    CheckReport& rep = d.report;
    rep.merge(validate_graded_module(d.a_g), "A{G}");
    rep.merge(d.tw.report);
    const Algebra& rt = *r.ring.total;
    auto left_closed = [&](const Mat& q) {
        for (std::size_t k = 0; k < rt.dim; ++k)
            if (!contains_all(q, rt.left_mult(rt.basis(k)) * q)) return false;
        return true;
    };
    auto s_closed = [&](const Mat& q, const Subalgebra& s) {
        for (std::size_t k = 0; k < s.algebra->dim; ++k)
            if (!contains_all(q, componentwise_right(r, s.inclusion.mat.col(k)) * q)) return false;
        return true;
    };
    rep.add("Q/left-closure", "f·q ∈ Q", left_closed(d.q));
    rep.add("Q'/left-closure", "f·q ∈ Q'", left_closed(d.q_weak));
    rep.add("Q/S-closure", "q·b ∈ Q for b ∈ S", s_closed(d.q, d.tw.s));
    rep.add("Q'/S-closure", "q·b ∈ Q' for b ∈ S'", s_closed(d.q_weak, d.tw.s_weak));
    rep.add("Q=Q'", "Q agrees with its weak form",
            d.q.cols() == d.q_weak.cols() && (d.q.cols() == 0 || same_column_space(d.q, d.q_weak)));
    rep.add("omega/lands-in-S", "ω takes values in G*S", omega_lands_in_s(x, r, d.tw.s, d.q));
    rep.add("omega'/lands-in-S'", "ω' takes values in G*S'", omega_lands_in_s(x, r, d.tw.s_weak, d.q_weak));
    d.gm = graded_coring_context("GM", x, r, d.a_g, d.tw.s, d.tw.gs, d.tw.shift, d.q);
    d.gm_weak = graded_coring_context("GM'", x, r, d.a_g, d.tw.s_weak, d.tw.gs_weak, d.tw.shift, d.q_weak);
    rep.merge(validate_graded_morita_context(d.gm), "GM");
    rep.merge(validate_graded_morita_context(d.gm_weak), "GM'");
    return d;
}

EndHomIsos check_end_hom_isomorphisms(const GradedMoritaData& d) {
    EndHomIsos out;
    out.module_ctx = context_from_graded_module(d.a_g);
    const ModuleContext& mc = out.module_ctx;
    const GradedMoritaContext& gm = d.gm_weak;
    const DualRing& r = d.dual;
    const FiniteGroup& g = r.coring->group;
    Field f = r.coring->field();
    const std::size_t n = g.order, da = r.coring->base->dim;
    const Mat& sb = d.tw.s_weak.inclusion.mat;
    const std::size_t ds = sb.cols(), dq = d.q_weak.cols();
    Mat sli = left_inverse(sb), qli = left_inverse_or_empty(d.q_weak);
    const Blocks& pb = d.a_g.blocks;
    const Mat one = r.coring->base->unit;
    CheckReport& rep = out.report;

    out.xi = Mat(f, n * ds, mc.end.dim());
    for (std::size_t k = 0; k < mc.end.dim(); ++k) {
        const std::size_t s = block_of(mc.end.blocks, k);
        Mat b(f, n * da, 1);
        for (std::size_t a = 0; a < n; ++a)
            b.set_block(a * da, 0, pb.proj(f, g.mul(s, a)) * mc.end.basis[k] * pb.incl(f, a) * one);
        out.xi.set_block(s * ds, k, sli * b);
    }
    out.psi = Mat(f, n * dq, mc.hom.dim());
    for (std::size_t k = 0; k < mc.hom.dim(); ++k) {
        const std::size_t s = block_of(mc.hom.blocks, k), si = g.inverse(s);
        Mat qv(f, r.ring.total->dim, 1);
        for (std::size_t a = 0; a < n; ++a) qv += mc.hom.basis[k] * pb.incl(f, g.mul(si, a)) * one;
        out.psi.set_block(s * dq, k, qli * qv);
    }
    rep.merge(validate_graded_morita_context(mc.ctx), "END-context");
    rep.merge(validate_graded_ring_morphism(GradedRingMorphism{mc.end_ring, d.tw.gs_weak, out.xi}), "Xi");
    rep.add("Xi/bijective", "END_R(A{G}) ≅ G*S'", is_invertible(out.xi));
    bool pl = true;
    for (std::size_t k = 0; k < mc.end.dim() && pl; ++k) pl = mc.end.basis[k] == gm.ctx.p.left_action(out.xi.col(k));
    rep.add("Xi/P-action", "h(p) = Ξ(h)·p", pl);
    rep.add("Psi/bijective", "HOM_R(A{G},R) ≅ Q'G", is_invertible(out.psi));
    bool ll = true, rl = true;
    for (std::size_t k = 0; k < mc.ctx.ctx.q.left.size() && ll; ++k)
        ll = out.psi * mc.ctx.ctx.q.left[k] == gm.ctx.q.left[k] * out.psi;
    for (std::size_t k = 0; k < mc.ctx.ctx.q.right.size() && rl; ++k)
        rl = out.psi * mc.ctx.ctx.q.right[k] == gm.ctx.q.right_action(out.xi.col(k)) * out.psi;
    rep.add("Psi/left-linear", "Ψ is left R-linear", ll);
    rep.add("Psi/right-linear", "Ψ(φ∘h) = Ψ(φ)·Ξ(h)", rl);
    Mat idp = Mat::identity(f, d.a_g.dim());
    if (is_invertible(out.psi)) {
        rep.add("square/phi", "Ξ∘φ = ω'∘(A{G}⊗Ψ)",
                out.xi * mc.ctx.ctx.tau() == gm.ctx.tau() * tensor_maps(idp, out.psi, mc.ctx.ctx.pq, gm.ctx.pq));
        rep.add("square/psi", "ψ = ν'∘(Ψ⊗A{G})",
                mc.ctx.ctx.mu() == gm.ctx.mu() * tensor_maps(out.psi, idp, mc.ctx.ctx.qp, gm.ctx.qp));
    } else {
        rep.add("square/phi", "Ξ∘φ = ω'∘(A{G}⊗Ψ)", false, "Ψ is not invertible");
        rep.add("square/psi", "ψ = ν'∘(Ψ⊗A{G})", false, "Ψ is not invertible");
    }
    return out;
}

CheckReport verify_cofree_isomorphisms(const GradedMoritaData& d, const CofreeWitness& w) {
    const DualRing& r = d.dual;
    const GroupCoring& c = *r.coring;
    if (!verify_cofree(c, w).ok()) throw Error(ErrorKind::MissingCofreeWitness, "cofree witness does not verify");
    const FiniteGroup& g = c.group;
    Field f = c.field();
    const Algebra& a = *c.base;
    const std::size_t n = g.order, da = a.dim;
    CheckReport rep;

    CofreeDualIso iso = cofree_dual_iso(r, w);
    rep.merge(iso.report, "R_e[G]");
    const Mat& phi = iso.phi.mat;
    AlgebraPtr re = r.ring.degree_e_algebra();
    const std::size_t dre = re->dim;
    Mat ie = r.ring.blocks.proj(f, 0) * r.ring.base_map;

    // Θ: T_e[G] → G*S
    Subalgebra te = *coinvariant_ring(e_slice_grouplike(d.x)).ring;
    const std::size_t dte = te.algebra->dim;
    rep.add("T=T_e", "coinvariants agree with the e-slice", same_column_space(te.inclusion.mat, coinvariant_ring(d.x).basis));
    const Mat& sb = d.tw.s.inclusion.mat;
    const std::size_t ds = sb.cols();
    Mat sli = left_inverse(sb);
    Mat theta(f, n * ds, n * dte);
    for (std::size_t al = 0; al < n; ++al)
        for (std::size_t k = 0; k < dte; ++k) {
            std::vector<Mat> copies(n, te.inclusion.mat.col(k));
            theta.set_block(al * ds, al * dte + k, sli * vstack(f, 1, copies));
        }
    AlgebraPtr teg = tensor_algebra(group_algebra(f, g), te.algebra);
    GradedRing teg_graded;
    teg_graded.group = g;
    teg_graded.total = teg;
    teg_graded.blocks = uniform_blocks(n, dte);
    rep.merge(validate_graded_ring_morphism(GradedRingMorphism{teg_graded, d.tw.gs, theta}), "Theta");
    const bool theta_iso = is_invertible(theta);
    rep.add("Theta/bijective", "T[G] ≅ G*S", theta_iso);
    rep.add("i/bijective", "T ≅ S", ds == dte);

    // Q_e and j: Q_e → Q
    const Bimodule& ce = c.comps[0];
    Mat qe = solve_space(f, dre, [&](const Mat& q) {
        Mat qf = r.functional(0, q);
        Mat lhs = evaluation_map(ce, qf) * c.pair(0, 0).sect() * c.delta_at(0, 0);
        Mat rhs(f, ce.dim, ce.dim);
        for (std::size_t j = 0; j < ce.dim; ++j) rhs.set_block(0, j, ce.left_action(qf.col(j)) * d.x.x[0]);
        return (lhs - rhs).flatten();
    });
    const std::size_t dqe = qe.cols(), dq = d.q.cols();
    Mat qli = left_inverse_or_empty(d.q), qeli = left_inverse_or_empty(qe);
    Mat jm(f, dq, dqe);
    bool j_in = true;
    for (std::size_t k = 0; k < dqe; ++k) {
        Mat v(f, r.ring.blocks.total, 1);
        for (std::size_t al = 0; al < n; ++al) v += phi * iso.group_ring.blocks.incl(f, al) * qe.col(k);
        j_in = j_in && column_space_contains(d.q, v);
        jm.set_block(0, k, qli * v);
    }
    rep.add("j/lands-in-Q", "j(q) ∈ Q", j_in);
    const bool j_iso = j_in && dq == dqe && is_invertible(jm);
    rep.add("j/bijective", "Q_e ≅ Q", j_iso, "dim Q_e " + idx(dqe) + ", dim Q " + idx(dq));

    // 𝕄_e = (T_e, R_e, A, Q_e) and 𝕄_e[G]
    Bimodule p = blank_module(f, da);
    p.left_ring = te.algebra;
    for (std::size_t k = 0; k < dte; ++k) p.left.push_back(a.left_mult(te.inclusion.mat.col(k)));
    p.right_ring = re;
    for (std::size_t k = 0; k < dre; ++k) {
        Mat fn = r.functional(0, Mat::unit_vector(f, dre, k));
        Mat act(f, da, da);
        for (std::size_t i = 0; i < da; ++i) act.set_block(0, i, fn * (ce.right_action(a.basis(i)) * d.x.x[0]));
        p.right.push_back(std::move(act));
    }
    Bimodule qm = blank_module(f, dqe);
    qm.left_ring = re;
    for (std::size_t k = 0; k < dre; ++k) qm.left.push_back(qeli * re->left_mult(re->basis(k)) * qe);
    qm.right_ring = te.algebra;
    for (std::size_t k = 0; k < dte; ++k) qm.right.push_back(qeli * re->right_mult(ie * te.inclusion.mat.col(k)) * qe);
    Mat tli = left_inverse(te.inclusion.mat);
    Mat tau(f, dte, da * dqe), mu(f, dre, dqe * da);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < dqe; ++j) {
            Mat qf = r.functional(0, qe.col(j));
            tau.set_block(0, i * dqe + j, tli * (qf * (ce.right_action(a.basis(i)) * d.x.x[0])));
            mu.set_block(0, j * da + i, re->right_mult(ie.col(i)) * qe.col(j));
        }
    MoritaContext me = make_morita_context("M_e", te.algebra, re, std::move(p), std::move(qm), std::move(tau), std::move(mu));
    rep.merge(validate_morita_context(me), "M_e");
    GradedMoritaContext meg = group_ring_context(me, g);
    rep.merge(validate_graded_morita_context(meg), "M_e[G]");
    rep.add("strictness", "GM strict iff M_e strict", is_strict(me).strict == is_strict(d.gm).strict);

    if (!theta_iso || !j_iso || !is_invertible(phi)) {
        rep.add("context-iso", "GM ≅ M_e[G]", false, "a component map is not invertible");
        return rep;
    }
    Mat theta_inv = inverse(theta), phi_inv = inverse(phi);
    Mat vartheta = Mat::identity(f, n * da);
    Mat jinv = inverse(jm);
    Mat big_j = block_diag(f, std::vector<Mat>(n, jinv));
    const MoritaContext& gmc = d.gm.ctx;
    const MoritaContext& mec = meg.ctx;
    bool vr = true, vl = true, jl = true, jr = true;
    for (std::size_t k = 0; k < gmc.p.right.size() && vr; ++k)
        vr = vartheta * gmc.p.right[k] == mec.p.right_action(phi_inv.col(k)) * vartheta;
    for (std::size_t k = 0; k < gmc.p.left.size() && vl; ++k)
        vl = vartheta * gmc.p.left[k] == mec.p.left_action(theta_inv.col(k)) * vartheta;
    for (std::size_t k = 0; k < gmc.q.left.size() && jl; ++k)
        jl = big_j * gmc.q.left[k] == mec.q.left_action(phi_inv.col(k)) * big_j;
    for (std::size_t k = 0; k < gmc.q.right.size() && jr; ++k)
        jr = big_j * gmc.q.right[k] == mec.q.right_action(theta_inv.col(k)) * big_j;
    rep.add("vartheta/right-linear", "ϑ: A{G} → A[G] is R-linear", vr);
    rep.add("vartheta/left-linear", "ϑ is G*S-linear through Θ", vl);
    rep.add("jG/left-linear", "j^{-1}G is R-linear through φ", jl);
    rep.add("jG/right-linear", "j^{-1}G is G*S-linear through Θ", jr);
    rep.add("square/omega", "ω = Θ∘φ_e[G]∘(ϑ⊗j^{-1}G)",
            gmc.tau() == theta * mec.tau() * tensor_maps(vartheta, big_j, gmc.pq, mec.pq));
    rep.add("square/nu", "ν = φ∘ψ_e[G]∘(j^{-1}G⊗ϑ)",
            gmc.mu() == phi * mec.mu() * tensor_maps(big_j, vartheta, gmc.qp, mec.qp));
    return rep;
}

GaloisEquivalences galois_equivalence_battery(const GrouplikeFamily& x, const RingMorphism& b, std::uint64_t seed) {
    const CoringPtr& c = x.coring;
    for (std::size_t a = 0; a < c->n(); ++a)
        if (!module_predicates(c->comps[a]).progenerator)
            throw Error(ErrorKind::HypothesisFailed, "component " + idx(a) + " is not a left progenerator");
    require_image_in_coinvariants(x, b);
    GaloisEquivalences out;
    Bimodule a = regular_bimodule(c->base);
    ModulePredicates pred = module_predicates(b, a);

    CanonicalMorphism can = canonical_morphism(x, b);
    bool can_iso = true;
    for (const auto& m : can.can.maps) can_iso = can_iso && is_invertible(m);
    out.statements[0] = can_iso && pred.faithfully_flat;

    DualRing rc = dual_ring(c), rd = dual_ring(can.can.src);
    GradedRingMorphism dcan = dual_morphism(can.can, rc, rd);
    const bool dual_iso = validate_graded_ring_morphism(dcan).ok() && is_invertible(dcan.mat);
    out.statements[1] = dual_iso && pred.progenerator;

    CoinvariantsResult t = coinvariant_ring(x);
    const bool b_is_t = same_column_space(b.mat, t.basis);
    GradedMoritaData gd = build_Q_and_contexts(x, rc);
    const bool t_s = gd.tw.s.algebra->dim == t.dim();
    const Strictness st = is_strict(gd.gm);
    out.statements[2] = b_is_t && t_s && st.strict;

    StructureTheoremResult str = structure_theorem_battery(x, b, default_structure_objects(x, b, seed));
    out.statements[3] = b_is_t && str.side_equivalence;

    out.agree = out.statements[0] == out.statements[1] && out.statements[1] == out.statements[2] &&
                out.statements[2] == out.statements[3];
    auto bit = [](bool v) { return v ? std::string("true") : std::string("false"); };
    out.summary = "statements (" + bit(out.statements[0]) + "," + bit(out.statements[1]) + "," +
                  bit(out.statements[2]) + "," + bit(out.statements[3]) + "); can' iso " + bit(can_iso) +
                  ", faithfully flat " + bit(pred.faithfully_flat) + ", dual can' iso " + bit(dual_iso) +
                  ", progenerator " + bit(pred.progenerator) + ", B = T " + bit(b_is_t) + ", T ≅ S " + bit(t_s) +
                  ", GM strict " + bit(st.strict) + ", (F7,G7) equivalence " + bit(str.side_equivalence);
    out.report.add("equivalences/agreement", "the four statement groups agree", out.agree, out.summary);
    out.report.merge(st.report, "GM");
    return out;
}

}  // namespace gcoring
