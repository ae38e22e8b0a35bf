#include "gcoring/comodule.hpp"

#include <random>

#include "gcoring/error.hpp"

namespace gcoring {

namespace {

std::string idx(std::size_t a) { return std::to_string(a); }
std::string idx(std::size_t a, std::size_t b) { return idx(a) + "," + idx(b); }
std::string idx(std::size_t a, std::size_t b, std::size_t c) { return idx(a, b) + "," + idx(c); }

Bimodule right_only(const Bimodule& m) { return m.has_left() ? forget_left(m) : m; }

Mat stack_rows(Field f, const std::vector<Mat>& parts) {
    std::vector<Mat> flat;
    for (const auto& p : parts) flat.push_back(p.flatten());
    return vstack(f, 1, flat);
}

// Block-diagonal map from a list of component maps.
Mat diag(Field f, const std::vector<Mat>& parts) { return block_diag(f, parts); }

std::vector<Mat> split_unknowns(const Mat& x, const std::vector<std::pair<std::size_t, std::size_t>>& shapes) {
    std::vector<Mat> out;
    std::size_t off = 0;
    for (auto [r, c] : shapes) {
        out.push_back(Mat::unflatten(x.block(off, 0, r * c, 1), r, c));
        off += r * c;
    }
    return out;
}

}  // namespace

std::size_t GComodule::total_dim() const {
    std::size_t t = 0;
    for (const auto& c : comps) t += c.dim;
    return t;
}

Comodule make_comodule(CoringPtr c, const Bimodule& space, std::vector<Mat> rho) {
    if (!space.has_right() || !same_algebra(space.right_ring, c->base))
        throw Error(ErrorKind::BaseMismatch, "comodule is not a right module over the base ring");
    if (rho.size() != c->n()) throw Error(ErrorKind::DimensionMismatch, "one coaction per group element");
    Comodule m;
    m.coring = c;
    m.space = right_only(space);
    for (std::size_t a = 0; a < c->n(); ++a) {
        m.tens.push_back(tensor_over(m.space, c->comps[a]));
        if (rho[a].rows() != m.tens[a].module.dim || rho[a].cols() != m.space.dim)
            throw Error(ErrorKind::DimensionMismatch, "coaction shape at " + idx(a));
    }
    m.rho = std::move(rho);
    return m;
}

GComodule make_g_comodule(CoringPtr c, const std::vector<Bimodule>& comps, std::vector<Mat> rho) {
    const std::size_t n = c->n();
    if (comps.size() != n || rho.size() != n * n)
        throw Error(ErrorKind::DimensionMismatch, "G-comodule needs |G| components and |G|² coactions");
    GComodule m;
    m.coring = c;
    for (const auto& x : comps) {
        if (!x.has_right() || !same_algebra(x.right_ring, c->base))
            throw Error(ErrorKind::BaseMismatch, "G-comodule component is not a right module over the base ring");
        m.comps.push_back(right_only(x));
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            m.tens.push_back(tensor_over(m.comps[a], c->comps[b]));
            const Mat& r = rho[a * n + b];
            if (r.rows() != m.tens.back().module.dim || r.cols() != m.comps[c->group.mul(a, b)].dim)
                throw Error(ErrorKind::DimensionMismatch, "coaction shape at " + idx(a, b));
        }
    m.rho = std::move(rho);
    return m;
}

CheckReport validate_comodule(const Comodule& m) {
    CheckReport r;
    const GroupCoring& c = *m.coring;
    const std::size_t n = c.n();
    Field f = c.field();
    Mat idm = Mat::identity(f, m.dim());
    r.merge(validate_bimodule(m.space), "module");
    for (std::size_t a = 0; a < n; ++a)
        r.add("right-linear/" + idx(a), "coaction is right A-linear",
              is_right_linear(m.space, m.tens[a].module, m.rho[a]), "not A-linear at " + idx(a));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            std::size_t ab = c.group.mul(a, b);
            const Mat idb = Mat::identity(f, c.comps[b].dim);
            TensorProduct m_ab = tensor_over(m.space, c.pair(a, b).module);
            TensorProduct ma_b = tensor_over(m.tens[a].module, c.comps[b]);
            Mat lhs = tensor_maps(idm, c.delta_at(a, b), m.tens[ab], m_ab) * m.rho[ab];
            Mat rhs = tensor_maps(m.rho[a], idb, m.tens[b], ma_b) * m.rho[b];
            Mat assoc = associator(m.tens[a], ma_b, c.pair(a, b), m_ab);
            r.add("coassociativity/" + idx(a, b), "comodule coassociativity", assoc * rhs == lhs,
                  "fails at (" + idx(a, b) + ")");
        }
    TensorProduct ma = tensor_over(m.space, c.base_module);
    Mat law = right_unitor(ma, m.space) * tensor_maps(idm, c.counit, m.tens[0], ma) * m.rho[0];
    r.add("counit", "comodule counit law", law == idm, "(id⊗ε)ρ_e is not the identity");
    return r;
}

CheckReport validate_g_comodule(const GComodule& m) {
    CheckReport r;
    const GroupCoring& c = *m.coring;
    const std::size_t n = c.n();
    Field f = c.field();
    for (std::size_t a = 0; a < n; ++a) r.merge(validate_bimodule(m.comps[a]), "module/" + idx(a));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            r.add("right-linear/" + idx(a, b), "coaction is right A-linear",
                  is_right_linear(m.comps[c.group.mul(a, b)], m.tensor(a, b).module, m.rho_at(a, b)),
                  "not A-linear at " + idx(a, b));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t g = 0; g < n; ++g) {
                std::size_t ab = c.group.mul(a, b), bg = c.group.mul(b, g);
                Mat ida = Mat::identity(f, m.comps[a].dim);
                Mat idg = Mat::identity(f, c.comps[g].dim);
                TensorProduct a_bg = tensor_over(m.comps[a], c.pair(b, g).module);
                TensorProduct ab_g = tensor_over(m.tensor(a, b).module, c.comps[g]);
                Mat lhs = tensor_maps(ida, c.delta_at(b, g), m.tensor(a, bg), a_bg) * m.rho_at(a, bg);
                Mat rhs = tensor_maps(m.rho_at(a, b), idg, m.tensor(ab, g), ab_g) * m.rho_at(ab, g);
                Mat assoc = associator(m.tensor(a, b), ab_g, c.pair(b, g), a_bg);
                r.add("coassociativity/" + idx(a, b, g), "G-comodule coassociativity", assoc * rhs == lhs,
                      "fails at (" + idx(a, b, g) + ")");
            }
    for (std::size_t a = 0; a < n; ++a) {
        Mat ida = Mat::identity(f, m.comps[a].dim);
        TensorProduct ma = tensor_over(m.comps[a], c.base_module);
        Mat law = right_unitor(ma, m.comps[a]) * tensor_maps(ida, c.counit, m.tensor(a, 0), ma) * m.rho_at(a, 0);
        r.add("counit/" + idx(a), "G-comodule counit law", law == ida, "(id⊗ε)ρ_{α,e} fails at " + idx(a));
    }
    return r;
}

bool is_comodule_map(const Comodule& src, const Comodule& dst, const Mat& f) {
    if (f.rows() != dst.dim() || f.cols() != src.dim()) return false;
    if (!is_right_linear(src.space, dst.space, f)) return false;
    Field k = f.field();
    for (std::size_t a = 0; a < src.rho.size(); ++a) {
        Mat id = Mat::identity(k, src.coring->comps[a].dim);
        if (tensor_maps(f, id, src.tens[a], dst.tens[a]) * src.rho[a] != dst.rho[a] * f) return false;
    }
    return true;
}

bool is_g_comodule_map(const GComodule& src, const GComodule& dst, const std::vector<Mat>& f) {
    const std::size_t n = src.n();
    if (f.size() != n || dst.n() != n) return false;
    for (std::size_t a = 0; a < n; ++a) {
        if (f[a].rows() != dst.comps[a].dim || f[a].cols() != src.comps[a].dim) return false;
        if (!is_right_linear(src.comps[a], dst.comps[a], f[a])) return false;
    }
    const GroupCoring& c = *src.coring;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Mat id = Mat::identity(c.field(), c.comps[b].dim);
            Mat lhs = tensor_maps(f[a], id, src.tensor(a, b), dst.tensor(a, b)) * src.rho_at(a, b);
            if (lhs != dst.rho_at(a, b) * f[c.group.mul(a, b)]) return false;
        }
    return true;
}

std::vector<Mat> comodule_homs(const Comodule& src, const Comodule& dst) {
    Field k = src.coring->field();
    const std::size_t r = dst.dim(), c = src.dim();
    const GroupCoring& cor = *src.coring;
    auto op = [&](const Mat& x) {
        Mat f = Mat::unflatten(x, r, c);
        std::vector<Mat> parts;
        for (std::size_t i = 0; i < cor.base->dim; ++i) parts.push_back(f * src.space.right[i] - dst.space.right[i] * f);
        for (std::size_t a = 0; a < cor.n(); ++a) {
            Mat id = Mat::identity(k, cor.comps[a].dim);
            parts.push_back(tensor_maps(f, id, src.tens[a], dst.tens[a]) * src.rho[a] - dst.rho[a] * f);
        }
        return stack_rows(k, parts);
    };
    Mat sol = linear_solution_space(k, r * c, op);
    std::vector<Mat> out;
    for (std::size_t j = 0; j < sol.cols(); ++j) out.push_back(Mat::unflatten(sol.col(j), r, c));
    return out;
}

std::vector<std::vector<Mat>> g_comodule_homs(const GComodule& src, const GComodule& dst) {
    const GroupCoring& cor = *src.coring;
    Field k = cor.field();
    const std::size_t n = cor.n();
    std::vector<std::pair<std::size_t, std::size_t>> shapes;
    std::size_t total = 0;
    for (std::size_t a = 0; a < n; ++a) {
        shapes.emplace_back(dst.comps[a].dim, src.comps[a].dim);
        total += dst.comps[a].dim * src.comps[a].dim;
    }
    auto op = [&](const Mat& x) {
        std::vector<Mat> f = split_unknowns(x, shapes);
        std::vector<Mat> parts;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t i = 0; i < cor.base->dim; ++i)
                parts.push_back(f[a] * src.comps[a].right[i] - dst.comps[a].right[i] * f[a]);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                Mat id = Mat::identity(k, cor.comps[b].dim);
                parts.push_back(tensor_maps(f[a], id, src.tensor(a, b), dst.tensor(a, b)) * src.rho_at(a, b) -
                                dst.rho_at(a, b) * f[cor.group.mul(a, b)]);
            }
        return stack_rows(k, parts);
    };
    std::vector<std::vector<Mat>> out;
    if (total == 0) return out;
    Mat sol = linear_solution_space(k, total, op);
    for (std::size_t j = 0; j < sol.cols(); ++j) out.push_back(split_unknowns(sol.col(j), shapes));
    return out;
}

GComodule coring_as_g_comodule(const CoringPtr& c) { return make_g_comodule(c, c->comps, c->delta); }

GComodule induced_g_comodule(const CoringPtr& c, const Bimodule& x) {
    const std::size_t n = c->n();
    Field f = c->field();
    Bimodule xr = right_only(x);
    Mat idx_ = Mat::identity(f, xr.dim);
    std::vector<TensorProduct> xc;
    std::vector<Bimodule> comps;
    for (std::size_t a = 0; a < n; ++a) {
        xc.push_back(tensor_over(xr, c->comps[a]));
        comps.push_back(xc.back().module);
    }
    std::vector<Mat> rho;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            std::size_t ab = c->group.mul(a, b);
            TensorProduct x_ab = tensor_over(xr, c->pair(a, b).module);
            TensorProduct xa_b = tensor_over(comps[a], c->comps[b]);
            Mat into = tensor_maps(idx_, c->delta_at(a, b), xc[ab], x_ab);
            rho.push_back(associator_inverse(xc[a], xa_b, c->pair(a, b), x_ab) * into);
        }
    return make_g_comodule(c, comps, std::move(rho));
}

Comodule zero_comodule(const CoringPtr& c) {
    Bimodule z = zero_module(c->field(), nullptr, c->base);
    std::vector<Mat> rho(c->n(), Mat(c->field(), 0, 0));
    return make_comodule(c, z, std::move(rho));
}

GComodule zero_g_comodule(const CoringPtr& c) {
    Bimodule z = zero_module(c->field(), nullptr, c->base);
    const std::size_t n = c->n();
    return make_g_comodule(c, std::vector<Bimodule>(n, z), std::vector<Mat>(n * n, Mat(c->field(), 0, 0)));
}

Bimodule random_free_module(const AlgebraPtr& a, std::size_t rank, std::uint64_t seed) {
    Field f = a->field;
    std::vector<Bimodule> parts(rank, forget_left(regular_bimodule(a)));
    Bimodule free = direct_sum(parts).module;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> d(-2, 2);
    const std::size_t n = free.dim;
    // Unipotent upper times lower triangular, always invertible.
    Mat u = Mat::identity(f, n), l = Mat::identity(f, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            u(i, j) = Scalar(f, d(rng));
            l(j, i) = Scalar(f, d(rng));
        }
    return change_basis(free, u * l);
}

Comodule F1(const GComodule& m) {
    const GroupCoring& c = *m.coring;
    const std::size_t n = c.n();
    Field f = c.field();
    DirectSum s = direct_sum(m.comps);
    std::vector<Mat> rho;
    for (std::size_t a = 0; a < n; ++a) {
        TensorProduct t = tensor_over(s.module, c.comps[a]);
        Mat ida = Mat::identity(f, c.comps[a].dim);
        Mat r(f, t.module.dim, s.module.dim);
        std::size_t ainv = c.group.inverse(a);
        for (std::size_t b = 0; b < n; ++b) {
            std::size_t d = c.group.mul(b, ainv);  // d·α = β
            Mat part = tensor_maps(s.incl[d], ida, m.tensor(d, a), t) * m.rho_at(d, a) * s.proj[b];
            r += part;
        }
        rho.push_back(std::move(r));
    }
    return make_comodule(m.coring, s.module, std::move(rho));
}

GComodule G1(const Comodule& n) {
    const std::size_t k = n.coring->n();
    std::vector<Mat> rho;
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) rho.push_back(n.rho[b]);
    return make_g_comodule(n.coring, std::vector<Bimodule>(k, n.space), std::move(rho));
}

bool same_comodule(const Comodule& a, const Comodule& b) {
    return same_bimodule(a.space, b.space) && a.rho == b.rho;
}

bool same_g_comodule(const GComodule& a, const GComodule& b) {
    if (a.n() != b.n()) return false;
    for (std::size_t i = 0; i < a.n(); ++i)
        if (!same_bimodule(a.comps[i], b.comps[i])) return false;
    return a.rho == b.rho;
}

AdjunctionWitness adjunction_witness(const GComodule& m, const Comodule& n) {
    Field f = m.coring->field();
    const std::size_t k = m.n();
    AdjunctionWitness w;
    DirectSum s = direct_sum(m.comps);
    w.eta = s.incl;
    auto sum_of_copies = [&](std::size_t d) {
        std::vector<Mat> blocks(k, Mat::identity(f, d));
        return hstack(f, d, blocks);
    };
    auto copies_incl = [&](std::size_t d) {
        std::vector<Mat> out;
        for (std::size_t b = 0; b < k; ++b) {
            Mat inc(f, k * d, d);
            inc.set_block(b * d, 0, Mat::identity(f, d));
            out.push_back(std::move(inc));
        }
        return out;
    };
    w.epsilon = sum_of_copies(n.dim());
    w.epsilon_F1M = sum_of_copies(s.module.dim);
    w.eta_G1N = copies_incl(n.dim());
    w.nu = vstack(f, n.dim(), std::vector<Mat>(k, Mat::identity(f, n.dim())));
    w.zeta = s.proj;
    w.nu_F1M = vstack(f, s.module.dim, std::vector<Mat>(k, Mat::identity(f, s.module.dim)));
    for (std::size_t b = 0; b < k; ++b) {
        Mat p(f, n.dim(), k * n.dim());
        p.set_block(0, b * n.dim(), Mat::identity(f, n.dim()));
        w.zeta_G1N.push_back(std::move(p));
    }
    return w;
}

CheckReport check_adjunction_F1G1(const GComodule& m, const Comodule& n, const AdjunctionWitness& w) {
    CheckReport r;
    Field f = m.coring->field();
    const std::size_t k = m.n();
    r.merge(validate_g_comodule(m), "object-M");
    r.merge(validate_comodule(n), "object-N");
    Comodule fm = F1(m);
    GComodule gn = G1(n);
    auto psi = [&](const Mat& h) {
        std::vector<Mat> out;
        for (std::size_t b = 0; b < k; ++b) out.push_back(h * w.eta[b]);
        return out;
    };
    auto phi = [&](const std::vector<Mat>& g) { return w.epsilon * diag(f, g); };
    auto homs_c = comodule_homs(fm, n);
    auto homs_g = g_comodule_homs(m, gn);
    r.add("hom-dimensions", "adjunction hom spaces have equal dimension", homs_c.size() == homs_g.size(),
          std::to_string(homs_c.size()) + " vs " + std::to_string(homs_g.size()));
    std::string bad_psi, bad_phi;
    for (std::size_t i = 0; i < homs_c.size(); ++i) {
        auto p = psi(homs_c[i]);
        if (!is_g_comodule_map(m, gn, p) || phi(p) != homs_c[i]) bad_psi += idx(i) + " ";
    }
    for (std::size_t i = 0; i < homs_g.size(); ++i) {
        Mat p = phi(homs_g[i]);
        if (!is_comodule_map(fm, n, p) || psi(p) != homs_g[i]) bad_phi += idx(i) + " ";
    }
    r.add("phi-after-psi", "ψ lands in G-comodule maps and φψ = id", bad_psi.empty(), "basis homs " + bad_psi);
    r.add("psi-after-phi", "φ lands in comodule maps and ψφ = id", bad_phi.empty(), "basis homs " + bad_phi);
    r.add("unit-colinear", "unit is a G-comodule map", is_g_comodule_map(m, G1(fm), w.eta), "η_M not colinear");
    r.add("counit-colinear", "counit is a comodule map", is_comodule_map(F1(gn), n, w.epsilon),
          "ε_N not colinear");
    bool tri1 = (w.epsilon_F1M * diag(f, w.eta)).is_identity();
    bool tri2 = true;
    for (std::size_t b = 0; b < k; ++b) tri2 = tri2 && (w.epsilon * w.eta_G1N[b]).is_identity();
    r.add("triangle/F1", "ε_{F1M}∘F1(η_M) = id", tri1, "triangle identity fails");
    r.add("triangle/G1", "G1(ε_N)∘η_{G1N} = id", tri2, "triangle identity fails");
    std::string nat_eta, nat_eps;
    auto ends_m = g_comodule_homs(m, m);
    for (std::size_t i = 0; i < ends_m.size(); ++i)
        for (std::size_t b = 0; b < k; ++b)
            if (w.eta[b] * ends_m[i][b] != diag(f, ends_m[i]) * w.eta[b]) {
                nat_eta += idx(i) + " ";
                break;
            }
    auto ends_n = comodule_homs(n, n);
    for (std::size_t i = 0; i < ends_n.size(); ++i)
        if (w.epsilon * diag(f, std::vector<Mat>(k, ends_n[i])) != ends_n[i] * w.epsilon) nat_eps += idx(i) + " ";
    r.add("naturality/unit", "unit natural along endomorphisms", nat_eta.empty(), "endomorphisms " + nat_eta);
    r.add("naturality/counit", "counit natural along endomorphisms", nat_eps.empty(), "endomorphisms " + nat_eps);
    return r;
}

CheckReport check_adjunction_F1G1(const GComodule& m, const Comodule& n) {
    return check_adjunction_F1G1(m, n, adjunction_witness(m, n));
}

CheckReport check_frobenius_F1G1(const GComodule& m, const Comodule& n, const AdjunctionWitness& w) {
    CheckReport r;
    Field f = m.coring->field();
    const std::size_t k = m.n();
    r.merge(validate_g_comodule(m), "object-M");
    r.merge(validate_comodule(n), "object-N");
    Comodule fm = F1(m);
    GComodule gn = G1(n);
    auto Phi = [&](const std::vector<Mat>& g) { return diag(f, g) * w.nu; };
    auto Psi = [&](const Mat& h) {
        std::vector<Mat> out;
        for (std::size_t b = 0; b < k; ++b) out.push_back(w.zeta[b] * h);
        return out;
    };
    auto homs_g = g_comodule_homs(gn, m);
    auto homs_c = comodule_homs(n, fm);
    r.add("hom-dimensions", "Frobenius hom spaces have equal dimension", homs_c.size() == homs_g.size(),
          std::to_string(homs_g.size()) + " vs " + std::to_string(homs_c.size()));
    std::string bad1, bad2;
    for (std::size_t i = 0; i < homs_g.size(); ++i) {
        Mat p = Phi(homs_g[i]);
        if (!is_comodule_map(n, fm, p) || Psi(p) != homs_g[i]) bad1 += idx(i) + " ";
    }
    for (std::size_t i = 0; i < homs_c.size(); ++i) {
        auto p = Psi(homs_c[i]);
        if (!is_g_comodule_map(gn, m, p) || Phi(p) != homs_c[i]) bad2 += idx(i) + " ";
    }
    r.add("Psi-after-Phi", "Φ lands in comodule maps and ΨΦ = id", bad1.empty(), "basis homs " + bad1);
    r.add("Phi-after-Psi", "Ψ lands in G-comodule maps and ΦΨ = id", bad2.empty(), "basis homs " + bad2);
    r.add("unit-colinear", "unit ν_N is a comodule map", is_comodule_map(n, F1(gn), w.nu), "ν_N not colinear");
    r.add("counit-colinear", "counit ζ_M is a G-comodule map", is_g_comodule_map(G1(fm), m, w.zeta),
          "ζ_M not colinear");
    bool tri1 = (diag(f, w.zeta) * w.nu_F1M).is_identity();
    bool tri2 = true;
    for (std::size_t b = 0; b < k; ++b) tri2 = tri2 && (w.zeta_G1N[b] * w.nu).is_identity();
    r.add("triangle/F1", "F1(ζ_M)∘ν_{F1M} = id", tri1, "triangle identity fails");
    r.add("triangle/G1", "ζ_{G1N}∘G1(ν_N) = id", tri2, "triangle identity fails");
    std::string nat_nu, nat_zeta;
    auto ends_n = comodule_homs(n, n);
    for (std::size_t i = 0; i < ends_n.size(); ++i)
        if (w.nu * ends_n[i] != diag(f, std::vector<Mat>(k, ends_n[i])) * w.nu) nat_nu += idx(i) + " ";
    auto ends_m = g_comodule_homs(m, m);
    for (std::size_t i = 0; i < ends_m.size(); ++i)
        for (std::size_t b = 0; b < k; ++b)
            if (w.zeta[b] * diag(f, ends_m[i]) != ends_m[i][b] * w.zeta[b]) {
                nat_zeta += idx(i) + " ";
                break;
            }
    r.add("naturality/unit", "ν natural along endomorphisms", nat_nu.empty(), "endomorphisms " + nat_nu);
    r.add("naturality/counit", "ζ natural along endomorphisms", nat_zeta.empty(), "endomorphisms " + nat_zeta);
    return r;
}

CheckReport check_frobenius_F1G1(const GComodule& m, const Comodule& n) {
    return check_frobenius_F1G1(m, n, adjunction_witness(m, n));
}

GComodule F2(const CoringPtr& c, const CofreeWitness& w, const Comodule& n) {
    if (!verify_cofree(*c, w).ok()) throw Error(ErrorKind::MissingCofreeWitness, "coring has no verified cofree witness");
    const std::size_t k = c->n();
    Field f = c->field();
    Mat id = Mat::identity(f, n.dim());
    std::vector<Mat> rho;
    std::vector<TensorProduct> nc;
    for (std::size_t b = 0; b < k; ++b) nc.push_back(tensor_over(n.space, c->comps[b]));
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) rho.push_back(tensor_maps(id, w.gammas[b], n.tens[0], nc[b]) * n.rho[0]);
    return make_g_comodule(c, std::vector<Bimodule>(k, n.space), std::move(rho));
}

Comodule G2(const CoringPtr& ce, const GComodule& m) {
    if (ce->n() != 1) throw Error(ErrorKind::InvalidArgument, "G2 lands in comodules over a trivial-group coring");
    return make_comodule(ce, m.comps[0], {m.rho_at(0, 0)});
}

CofreeComparison cofree_comparison(const GComodule& m, const CofreeWitness& w) {
    const GroupCoring& c = *m.coring;
    if (!verify_cofree(c, w).ok()) throw Error(ErrorKind::MissingCofreeWitness, "coring has no verified cofree witness");
    Field f = c.field();
    const std::size_t k = c.n();
    CofreeComparison out;
    TensorProduct me_a = tensor_over(m.comps[0], c.base_module);
    for (std::size_t a = 0; a < k; ++a) {
        std::size_t ainv = c.group.inverse(a);
        Mat ide = Mat::identity(f, m.comps[0].dim), ida = Mat::identity(f, m.comps[a].dim);
        Mat eg_a = c.counit * inverse(w.gammas[a]);
        Mat eg_ainv = c.counit * inverse(w.gammas[ainv]);
        out.phi.push_back(right_unitor(me_a, m.comps[0]) * tensor_maps(ide, eg_a, m.tensor(0, a), me_a) *
                          m.rho_at(0, a));
        TensorProduct ma_a = tensor_over(m.comps[a], c.base_module);
        out.psi.push_back(right_unitor(ma_a, m.comps[a]) * tensor_maps(ida, eg_ainv, m.tensor(a, ainv), ma_a) *
                          m.rho_at(a, ainv));
    }
    return out;
}

CheckReport check_cofree_equivalence(const GComodule& m, const CofreeWitness& w, const CoringPtr& ce) {
    CheckReport r;
    r.merge(validate_g_comodule(m), "object");
    CofreeComparison cmp = cofree_comparison(m, w);
    for (std::size_t a = 0; a < m.n(); ++a) {
        r.add("phi-psi/" + idx(a), "φ_α∘ψ_α = id", (cmp.phi[a] * cmp.psi[a]).is_identity(), "fails at " + idx(a));
        r.add("psi-phi/" + idx(a), "ψ_α∘φ_α = id", (cmp.psi[a] * cmp.phi[a]).is_identity(), "fails at " + idx(a));
    }
    Comodule g2 = G2(ce, m);
    GComodule back = F2(m.coring, w, g2);
    r.add("phi-colinear", "φ: M → F2(G2(M)) is a G-comodule map", is_g_comodule_map(m, back, cmp.phi),
          "φ is not colinear");
    r.add("G2F2", "G2(F2(N)) = N", same_comodule(G2(ce, back), g2), "structural mismatch");
    r.merge(validate_g_comodule(back), "F2G2");
    return r;
}

}  // namespace gcoring
