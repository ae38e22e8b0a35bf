#include "gcoring/algebra.hpp"

#include "gcoring/error.hpp"

namespace gcoring {

Mat linear_solution_space(Field f, std::size_t n, const std::function<Mat(const Mat&)>& op) {
    if (n == 0) return Mat(f, 0, 0);
    std::vector<Mat> cols;
    cols.reserve(n);
    std::size_t rows = 0;
    for (std::size_t i = 0; i < n; ++i) {
        Mat out = op(Mat::unit_vector(f, n, i)).flatten();
        if (i == 0) rows = out.rows();
        else if (out.rows() != rows) throw Error(ErrorKind::DimensionMismatch, "linear_solution_space: op output size");
        cols.push_back(std::move(out));
    }
    if (rows == 0) return Mat::identity(f, n);
    Mat system = hstack(f, rows, cols);
    Mat k = kernel(system);
    return k.transpose();
}

// ---- Algebra ----

Mat Algebra::product(const Mat& a, const Mat& b) const { return left_mult(a) * b; }

Mat Algebra::left_mult(const Mat& a) const {
    if (a.rows() != dim) throw Error(ErrorKind::DimensionMismatch, "algebra element length");
    Mat r(field, dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        if (!a[i].is_zero()) r += a[i].is_one() ? left_basis[i] : left_basis[i].scaled(a[i]);
    return r;
}

Mat Algebra::right_mult(const Mat& b) const {
    if (b.rows() != dim) throw Error(ErrorKind::DimensionMismatch, "algebra element length");
    Mat r(field, dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        if (!b[i].is_zero()) r += b[i].is_one() ? right_basis[i] : right_basis[i].scaled(b[i]);
    return r;
}

AlgebraPtr make_algebra(Field f, std::string name, std::size_t dim, Mat table, Mat unit) {
    if (table.rows() != dim || table.cols() != dim * dim)
        throw Error(ErrorKind::DimensionMismatch, "structure constants of " + name);
    if (unit.rows() != dim || unit.cols() != 1) throw Error(ErrorKind::DimensionMismatch, "unit of " + name);
    if (table.field() != f || unit.field() != f) throw Error(ErrorKind::FieldMismatch, "algebra " + name);
    auto a = std::make_shared<Algebra>();
    a->field = f;
    a->name = std::move(name);
    a->dim = dim;
    a->table = std::move(table);
    a->unit = std::move(unit);
    for (std::size_t i = 0; i < dim; ++i) {
        Mat l(f, dim, dim), r(f, dim, dim);
        for (std::size_t j = 0; j < dim; ++j) {
            l.set_block(0, j, a->table.col(i * dim + j));
            r.set_block(0, j, a->table.col(j * dim + i));
        }
        a->left_basis.push_back(std::move(l));
        a->right_basis.push_back(std::move(r));
    }
    return a;
}

AlgebraPtr field_algebra(Field f) {
    return make_algebra(f, "k", 1, Mat::identity(f, 1), Mat::identity(f, 1));
}

AlgebraPtr product_algebra(Field f, std::size_t n) {
    Mat t(f, n, n * n), u(f, n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        t(i, i * n + i) = Scalar::one(f);
        u(i, 0) = Scalar::one(f);
    }
    return make_algebra(f, "k^" + std::to_string(n), n, t, u);
}

AlgebraPtr tensor_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
    Field f = a->field;
    const std::size_t da = a->dim, db = b->dim, d = da * db;
    Mat t(f, d, d * d);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j)
            for (std::size_t k = 0; k < da; ++k)
                for (std::size_t l = 0; l < db; ++l)
                    t.set_block(0, (i * db + j) * d + (k * db + l),
                                kron(a->table.col(i * da + k), b->table.col(j * db + l)));
    return make_algebra(f, a->name + "⊗" + b->name, d, t, kron(a->unit, b->unit));
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->field == b->field && a->dim == b->dim && a->table == b->table && a->unit == b->unit;
}

CheckReport validate_algebra(const Algebra& a) {
    CheckReport r;
    std::string fail;
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) {
            Mat lhs = a.left_basis[i] * a.left_basis[j];
            Mat rhs = a.left_mult(a.table.col(i * a.dim + j));
            if (lhs == rhs) continue;
            for (std::size_t k = 0; k < a.dim; ++k)
                if (lhs.col(k) != rhs.col(k)) {
                    fail += "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ") ";
                    break;
                }
        }
    r.add("algebra/associativity", "algebra associativity", fail.empty(), "violated triples " + fail);
    std::string ufail;
    Mat lu = a.left_mult(a.unit), ru = a.right_mult(a.unit);
    Mat id = Mat::identity(a.field, a.dim);
    for (std::size_t i = 0; i < a.dim; ++i)
        if (lu.col(i) != id.col(i) || ru.col(i) != id.col(i)) ufail += std::to_string(i) + " ";
    r.add("algebra/unit", "algebra unit", ufail.empty(), "unit fails on basis " + ufail);
    return r;
}

// ---- Ring morphisms ----

RingMorphism identity_morphism(const AlgebraPtr& a) {
    return RingMorphism{a, a, Mat::identity(a->field, a->dim)};
}

CheckReport validate_ring_morphism(const RingMorphism& m) {
    CheckReport r;
    const auto& s = *m.src;
    const auto& d = *m.dst;
    bool shape = m.mat.rows() == d.dim && m.mat.cols() == s.dim;
    r.add("ring-morphism/shape", "ring morphism", shape, "matrix shape mismatch");
    if (!shape) return r;
    r.add("ring-morphism/unit", "ring morphism unital", m.mat * s.unit == d.unit, "image of 1 is not 1");
    std::string fail;
    for (std::size_t i = 0; i < s.dim; ++i)
        for (std::size_t j = 0; j < s.dim; ++j) {
            Mat lhs = m.mat * s.table.col(i * s.dim + j);
            Mat rhs = d.product(m.mat.col(i), m.mat.col(j));
            if (lhs != rhs) fail += "(" + std::to_string(i) + "," + std::to_string(j) + ") ";
        }
    r.add("ring-morphism/multiplicative", "ring morphism multiplicative", fail.empty(), "pairs " + fail);
    return r;
}

RingMorphism compose(const RingMorphism& g, const RingMorphism& f) {
    return RingMorphism{f.src, g.dst, g.mat * f.mat};
}

Subalgebra make_subalgebra(const AlgebraPtr& a, const Mat& basis_cols, const std::string& name) {
    Field f = a->field;
    const std::size_t t = basis_cols.cols();
    if (t == 0) throw Error(ErrorKind::InvalidArgument, "empty subalgebra basis");
    Mat li = left_inverse(basis_cols);
    Mat table(f, t, t * t);
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j) {
            Mat p = a->product(basis_cols.col(i), basis_cols.col(j));
            Mat c = li * p;
            if (basis_cols * c != p) throw Error(ErrorKind::InvalidArgument, "subspace not closed under product");
            table.set_block(0, i * t + j, c);
        }
    Mat u = li * a->unit;
    if (basis_cols * u != a->unit) throw Error(ErrorKind::InvalidArgument, "subspace does not contain 1");
    auto sub = make_algebra(f, name, t, table, u);
    return Subalgebra{sub, RingMorphism{sub, a, basis_cols}};
}

// ---- Bimodules ----

Mat Bimodule::left_action(const Mat& a) const {
    if (!left_ring) throw Error(ErrorKind::InvalidArgument, "module has no left action");
    Mat r(field, dim, dim);
    for (std::size_t i = 0; i < left_ring->dim; ++i)
        if (!a[i].is_zero()) r += a[i].is_one() ? left[i] : left[i].scaled(a[i]);
    return r;
}

Mat Bimodule::right_action(const Mat& a) const {
    if (!right_ring) throw Error(ErrorKind::InvalidArgument, "module has no right action");
    Mat r(field, dim, dim);
    for (std::size_t i = 0; i < right_ring->dim; ++i)
        if (!a[i].is_zero()) r += a[i].is_one() ? right[i] : right[i].scaled(a[i]);
    return r;
}

Bimodule regular_bimodule(const AlgebraPtr& a) {
    Bimodule m;
    m.field = a->field;
    m.dim = a->dim;
    m.left_ring = a;
    m.right_ring = a;
    m.left = a->left_basis;
    m.right = a->right_basis;
    return m;
}

Bimodule zero_module(Field f, const AlgebraPtr& left, const AlgebraPtr& right) {
    Bimodule m;
    m.field = f;
    m.dim = 0;
    m.left_ring = left;
    m.right_ring = right;
    if (left) m.left.assign(left->dim, Mat(f, 0, 0));
    if (right) m.right.assign(right->dim, Mat(f, 0, 0));
    return m;
}

Bimodule forget_left(const Bimodule& m) {
    Bimodule r = m;
    r.left_ring = nullptr;
    r.left.clear();
    return r;
}

Bimodule forget_right(const Bimodule& m) {
    Bimodule r = m;
    r.right_ring = nullptr;
    r.right.clear();
    return r;
}

Bimodule restrict_left(const Bimodule& m, const RingMorphism& along) {
    if (!same_algebra(along.dst, m.left_ring)) throw Error(ErrorKind::BaseMismatch, "restrict_left target ring");
    Bimodule r = m;
    r.left_ring = along.src;
    r.left.clear();
    for (std::size_t i = 0; i < along.src->dim; ++i) r.left.push_back(m.left_action(along.mat.col(i)));
    return r;
}

Bimodule restrict_right(const Bimodule& m, const RingMorphism& along) {
    if (!same_algebra(along.dst, m.right_ring)) throw Error(ErrorKind::BaseMismatch, "restrict_right target ring");
    Bimodule r = m;
    r.right_ring = along.src;
    r.right.clear();
    for (std::size_t i = 0; i < along.src->dim; ++i) r.right.push_back(m.right_action(along.mat.col(i)));
    return r;
}

Bimodule change_basis(const Bimodule& m, const Mat& p) {
    Mat pi = inverse(p);
    Bimodule r = m;
    for (auto& l : r.left) l = pi * l * p;
    for (auto& x : r.right) x = pi * x * p;
    return r;
}

bool same_bimodule(const Bimodule& a, const Bimodule& b) {
    if (a.dim != b.dim || a.field != b.field) return false;
    if ((a.left_ring == nullptr) != (b.left_ring == nullptr)) return false;
    if ((a.right_ring == nullptr) != (b.right_ring == nullptr)) return false;
    if (a.left_ring && !same_algebra(a.left_ring, b.left_ring)) return false;
    if (a.right_ring && !same_algebra(a.right_ring, b.right_ring)) return false;
    return a.left == b.left && a.right == b.right;
}

CheckReport validate_bimodule(const Bimodule& m) {
    CheckReport r;
    Mat id = Mat::identity(m.field, m.dim);
    if (m.left_ring) {
        const auto& a = *m.left_ring;
        bool shapes = m.left.size() == a.dim;
        for (const auto& l : m.left) shapes = shapes && l.rows() == m.dim && l.cols() == m.dim;
        r.add("bimodule/left-shape", "left action", shapes, "left action matrices have wrong shape");
        if (shapes) {
            r.add("bimodule/left-unit", "left action unital", m.left_action(a.unit) == id, "1 does not act as identity");
            std::string fail;
            for (std::size_t i = 0; i < a.dim; ++i)
                for (std::size_t j = 0; j < a.dim; ++j)
                    if (m.left[i] * m.left[j] != m.left_action(a.table.col(i * a.dim + j)))
                        fail += "(" + std::to_string(i) + "," + std::to_string(j) + ") ";
            r.add("bimodule/left-assoc", "left action associative", fail.empty(), "pairs " + fail);
        }
    }
    if (m.right_ring) {
        const auto& a = *m.right_ring;
        bool shapes = m.right.size() == a.dim;
        for (const auto& x : m.right) shapes = shapes && x.rows() == m.dim && x.cols() == m.dim;
        r.add("bimodule/right-shape", "right action", shapes, "right action matrices have wrong shape");
        if (shapes) {
            r.add("bimodule/right-unit", "right action unital", m.right_action(a.unit) == id,
                  "1 does not act as identity");
            std::string fail;
            for (std::size_t i = 0; i < a.dim; ++i)
                for (std::size_t j = 0; j < a.dim; ++j)
                    if (m.right[j] * m.right[i] != m.right_action(a.table.col(i * a.dim + j)))
                        fail += "(" + std::to_string(i) + "," + std::to_string(j) + ") ";
            r.add("bimodule/right-assoc", "right action associative", fail.empty(), "pairs " + fail);
        }
    }
    if (m.left_ring && m.right_ring && m.left.size() == m.left_ring->dim && m.right.size() == m.right_ring->dim) {
        std::string fail;
        for (std::size_t i = 0; i < m.left.size(); ++i)
            for (std::size_t j = 0; j < m.right.size(); ++j)
                if (m.left[i] * m.right[j] != m.right[j] * m.left[i])
                    fail += "(" + std::to_string(i) + "," + std::to_string(j) + ") ";
        r.add("bimodule/commute", "left and right actions commute", fail.empty(), "pairs " + fail);
    }
    return r;
}

bool is_left_linear(const Bimodule& src, const Bimodule& dst, const Mat& f) {
    if (f.rows() != dst.dim || f.cols() != src.dim) return false;
    if (!src.left_ring || !dst.left_ring) return true;
    for (std::size_t i = 0; i < src.left.size(); ++i)
        if (f * src.left[i] != dst.left[i] * f) return false;
    return true;
}

bool is_right_linear(const Bimodule& src, const Bimodule& dst, const Mat& f) {
    if (f.rows() != dst.dim || f.cols() != src.dim) return false;
    if (!src.right_ring || !dst.right_ring) return true;
    for (std::size_t i = 0; i < src.right.size(); ++i)
        if (f * src.right[i] != dst.right[i] * f) return false;
    return true;
}

bool is_bimodule_map(const Bimodule& src, const Bimodule& dst, const Mat& f) {
    return is_left_linear(src, dst, f) && is_right_linear(src, dst, f);
}

bool is_bimodule_iso(const BimoduleMap& f) { return is_invertible(f.mat); }

DirectSum direct_sum(const std::vector<Bimodule>& parts) {
    if (parts.empty()) throw Error(ErrorKind::InvalidArgument, "direct sum of no modules");
    DirectSum s;
    Field f = parts[0].field;
    std::size_t total = 0;
    for (const auto& p : parts) {
        if (!same_algebra(p.left_ring, parts[0].left_ring) || !same_algebra(p.right_ring, parts[0].right_ring))
            throw Error(ErrorKind::BaseMismatch, "direct sum of modules over different rings");
        s.offset.push_back(total);
        total += p.dim;
    }
    s.module.field = f;
    s.module.dim = total;
    s.module.left_ring = parts[0].left_ring;
    s.module.right_ring = parts[0].right_ring;
    if (s.module.left_ring)
        for (std::size_t i = 0; i < s.module.left_ring->dim; ++i) {
            std::vector<Mat> blocks;
            for (const auto& p : parts) blocks.push_back(p.left[i]);
            s.module.left.push_back(block_diag(f, blocks));
        }
    if (s.module.right_ring)
        for (std::size_t i = 0; i < s.module.right_ring->dim; ++i) {
            std::vector<Mat> blocks;
            for (const auto& p : parts) blocks.push_back(p.right[i]);
            s.module.right.push_back(block_diag(f, blocks));
        }
    for (std::size_t k = 0; k < parts.size(); ++k) {
        Mat inc(f, total, parts[k].dim), pr(f, parts[k].dim, total);
        for (std::size_t i = 0; i < parts[k].dim; ++i) {
            inc(s.offset[k] + i, i) = Scalar::one(f);
            pr(i, s.offset[k] + i) = Scalar::one(f);
        }
        s.incl.push_back(std::move(inc));
        s.proj.push_back(std::move(pr));
    }
    return s;
}

// ---- Tensor products ----

Mat TensorProduct::element(const Mat& m, const Mat& n) const { return q.proj * kron(m, n); }

TensorProduct tensor_over(const Bimodule& m, const Bimodule& n) {
    if (!m.right_ring || !n.left_ring || !same_algebra(m.right_ring, n.left_ring))
        throw Error(ErrorKind::BaseMismatch, "tensor product needs matching middle ring");
    if (m.field != n.field) throw Error(ErrorKind::FieldMismatch, "tensor product fields");
    Field f = m.field;
    const std::size_t dm = m.dim, dn = n.dim, amb = dm * dn;
    Mat idm = Mat::identity(f, dm), idn = Mat::identity(f, dn);
    std::vector<Mat> rel_blocks;
    for (std::size_t k = 0; k < m.right_ring->dim; ++k)
        rel_blocks.push_back((kron(m.right[k], idn) - kron(idm, n.left[k])).transpose());
    Mat rel = amb == 0 ? Mat(f, 0, 0) : vstack(f, amb, rel_blocks);
    TensorProduct t;
    t.left_dim = dm;
    t.right_dim = dn;
    t.q = quotient_by(f, amb, rel);
    t.module.field = f;
    t.module.dim = t.q.dim;
    t.module.left_ring = m.left_ring;
    t.module.right_ring = n.right_ring;
    for (const auto& l : m.left) t.module.left.push_back(t.q.proj * kron(l, idn) * t.q.sect);
    for (const auto& r : n.right) t.module.right.push_back(t.q.proj * kron(idm, r) * t.q.sect);
    return t;
}

Mat tensor_maps(const Mat& f, const Mat& g, const TensorProduct& src, const TensorProduct& dst) {
    if (f.cols() != src.left_dim || g.cols() != src.right_dim || f.rows() != dst.left_dim ||
        g.rows() != dst.right_dim)
        throw Error(ErrorKind::DimensionMismatch, "tensor_maps shapes");
    return dst.q.proj * kron(f, g) * src.q.sect;
}

Mat right_unitor(const TensorProduct& mr, const Bimodule& m) {
    const std::size_t dr = mr.right_dim;
    Mat amb(m.field, m.dim, m.dim * dr);
    for (std::size_t i = 0; i < m.dim; ++i)
        for (std::size_t k = 0; k < dr; ++k) amb.set_block(0, i * dr + k, m.right[k].col(i));
    return amb * mr.q.sect;
}

Mat left_unitor(const TensorProduct& rm, const Bimodule& m) {
    const std::size_t dr = rm.left_dim;
    Mat amb(m.field, m.dim, dr * m.dim);
    for (std::size_t k = 0; k < dr; ++k)
        for (std::size_t j = 0; j < m.dim; ++j) amb.set_block(0, k * m.dim + j, m.left[k].col(j));
    return amb * rm.q.sect;
}

Mat associator(const TensorProduct& xy, const TensorProduct& xy_z, const TensorProduct& yz,
               const TensorProduct& x_yz) {
    Field f = xy.module.field;
    const std::size_t dx = xy.left_dim, dz = xy_z.right_dim;
    return x_yz.q.proj * kron(Mat::identity(f, dx), yz.q.proj) * kron(xy.q.sect, Mat::identity(f, dz)) *
           xy_z.q.sect;
}

Mat associator_inverse(const TensorProduct& xy, const TensorProduct& xy_z, const TensorProduct& yz,
                       const TensorProduct& x_yz) {
    Field f = xy.module.field;
    const std::size_t dx = xy.left_dim, dz = xy_z.right_dim;
    return xy_z.q.proj * kron(xy.q.proj, Mat::identity(f, dz)) * kron(Mat::identity(f, dx), yz.q.sect) *
           x_yz.q.sect;
}

Mat induced_on_tensor(const Mat& ambient_map, const TensorProduct& t) { return ambient_map * t.q.sect; }

bool kills_relations(const Mat& ambient_map, const TensorProduct& t) {
    if (t.q.relations.rows() == 0) return true;
    return (ambient_map * t.q.relations.transpose()).is_zero();
}

// ---- Left duals ----

std::vector<Mat> left_linear_functionals(const Bimodule& m) {
    if (!m.left_ring) throw Error(ErrorKind::InvalidArgument, "left dual needs a left action");
    const auto& a = *m.left_ring;
    Field f = m.field;
    const std::size_t da = a.dim, dm = m.dim;
    std::vector<Mat> out;
    if (dm == 0) return out;
    Mat sol = linear_solution_space(f, da * dm, [&](const Mat& x) {
        Mat F = Mat::unflatten(x, da, dm);
        std::vector<Mat> parts;
        for (std::size_t i = 0; i < da; ++i) parts.push_back((F * m.left[i] - a.left_basis[i] * F).flatten());
        return vstack(f, 1, parts);
    });
    for (std::size_t j = 0; j < sol.cols(); ++j) out.push_back(Mat::unflatten(sol.col(j), da, dm));
    return out;
}

Mat LeftDual::functional(const Mat& coords) const {
    Mat v = embed * coords;
    return Mat::unflatten(v, ring_dim, source_dim);
}

Mat LeftDual::coordinates(const Mat& functional) const { return coords_of * functional.flatten(); }

LeftDual left_dual(const Bimodule& m) {
    LeftDual d;
    Field f = m.field;
    d.ring_dim = m.left_ring ? m.left_ring->dim : 0;
    d.source_dim = m.dim;
    d.basis = left_linear_functionals(m);
    const std::size_t n = d.basis.size();
    std::vector<Mat> cols;
    for (const auto& b : d.basis) cols.push_back(b.flatten());
    d.embed = hstack(f, d.ring_dim * d.source_dim, cols);
    d.coords_of = n == 0 ? Mat(f, 0, d.ring_dim * d.source_dim) : left_inverse(d.embed);
    d.module.field = f;
    d.module.dim = n;
    d.module.right_ring = m.left_ring;
    for (std::size_t b = 0; b < m.left_ring->dim; ++b) {
        Mat act(f, n, n);
        for (std::size_t j = 0; j < n; ++j) act.set_block(0, j, d.coordinates(m.left_ring->right_basis[b] * d.basis[j]));
        d.module.right.push_back(std::move(act));
    }
    if (m.right_ring) {
        d.module.left_ring = m.right_ring;
        for (std::size_t x = 0; x < m.right_ring->dim; ++x) {
            Mat act(f, n, n);
            for (std::size_t j = 0; j < n; ++j) act.set_block(0, j, d.coordinates(d.basis[j] * m.right[x]));
            d.module.left.push_back(std::move(act));
        }
    }
    return d;
}

std::optional<DualBasis> find_dual_basis(const Bimodule& m) {
    DualBasis db;
    if (m.dim == 0) return db;
    auto fs = left_linear_functionals(m);
    if (fs.empty()) return std::nullopt;
    Field f = m.field;
    const std::size_t dm = m.dim, d = fs.size();
    Mat sys(f, dm * dm, d * dm), rhs(f, dm * dm, 1);
    for (std::size_t c = 0; c < dm; ++c) {
        Mat ec = Mat::unit_vector(f, dm, c);
        for (std::size_t j = 0; j < d; ++j) sys.set_block(c * dm, j * dm, m.left_action(fs[j] * ec));
        rhs(c * dm + c, 0) = Scalar::one(f);
    }
    auto sol = solve(sys, rhs);
    if (!sol) return std::nullopt;
    for (std::size_t j = 0; j < d; ++j) {
        Mat e = sol->block(j * dm, 0, dm, 1);
        if (e.is_zero()) continue;
        db.functionals.push_back(fs[j]);
        db.elements.push_back(std::move(e));
    }
    return db;
}

bool check_dual_basis(const Bimodule& m, const DualBasis& d) {
    Mat total(m.field, m.dim, m.dim);
    for (std::size_t c = 0; c < m.dim; ++c) {
        Mat ec = Mat::unit_vector(m.field, m.dim, c);
        Mat s(m.field, m.dim, 1);
        for (std::size_t j = 0; j < d.functionals.size(); ++j)
            s += m.left_action(d.functionals[j] * ec) * d.elements[j];
        total.set_block(0, c, s);
    }
    return total.is_identity() || (m.dim == 0);
}

ModulePredicates module_predicates(const Bimodule& m) {
    ModulePredicates p;
    p.flat_projective = find_dual_basis(m).has_value();
    const std::size_t db = m.left_ring->dim;
    std::vector<Mat> vals;
    if (m.dim > 0)
        for (const auto& fn : left_linear_functionals(m))
            for (std::size_t c = 0; c < m.dim; ++c) vals.push_back(fn * Mat::unit_vector(m.field, m.dim, c));
    p.trace_rank = vals.empty() ? 0 : rank(hstack(m.field, db, vals));
    p.generator = p.trace_rank == db;
    p.faithfully_flat = p.flat_projective && p.generator;
    p.progenerator = p.flat_projective && p.generator;  // finitely generated always holds
    return p;
}

ModulePredicates module_predicates(const RingMorphism& b, const Bimodule& m) {
    Bimodule r = forget_right(restrict_left(m, b));
    return module_predicates(r);
}

}  // namespace gcoring
