#include "gcoring/matrix.hpp"

#include <sstream>

#include "gcoring/error.hpp"

namespace gcoring {

Mat::Mat(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

Mat Mat::identity(Field f, std::size_t n) {
    Mat m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
    return m;
}

Mat Mat::from_ints(Field f, std::initializer_list<std::initializer_list<long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    Mat m(f, r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
        std::size_t j = 0;
        for (long v : row) m(i, j++) = Scalar(f, v);
        ++i;
    }
    return m;
}

Mat Mat::from_rows(Field f, std::size_t cols, const std::vector<std::vector<Scalar>>& rows) {
    Mat m(f, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
        for (std::size_t j = 0; j < cols; ++j) {
            if (rows[i][j].field() != f) throw Error(ErrorKind::FieldMismatch, "matrix entry field");
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

Mat Mat::column(Field f, const std::vector<Scalar>& entries) {
    Mat m(f, entries.size(), 1);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].field() != f) throw Error(ErrorKind::FieldMismatch, "vector entry field");
        m.data_[i] = entries[i];
    }
    return m;
}

Mat Mat::column_ints(Field f, std::initializer_list<long> entries) {
    Mat m(f, entries.size(), 1);
    std::size_t i = 0;
    for (long v : entries) m.data_[i++] = Scalar(f, v);
    return m;
}

Mat Mat::unit_vector(Field f, std::size_t n, std::size_t i) {
    Mat m(f, n, 1);
    m.data_[i] = Scalar::one(f);
    return m;
}

void Mat::check_same_field(const Mat& o) const {
    if (field_ != o.field_)
        throw Error(ErrorKind::FieldMismatch, "matrices over " + field_.name() + " and " + o.field_.name());
}

Mat Mat::operator*(const Mat& o) const {
    check_same_field(o);
    if (cols_ != o.rows_)
        throw Error(ErrorKind::DimensionMismatch,
                    "product of " + std::to_string(rows_) + "x" + std::to_string(cols_) + " and " +
                        std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
    Mat r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = data_[i * cols_ + k];
            if (a.is_zero()) continue;
            const Scalar* brow = &o.data_[k * o.cols_];
            Scalar* rrow = &r.data_[i * o.cols_];
            if (a.is_one()) {
                for (std::size_t j = 0; j < o.cols_; ++j)
                    if (!brow[j].is_zero()) rrow[j] += brow[j];
            } else {
                for (std::size_t j = 0; j < o.cols_; ++j)
                    if (!brow[j].is_zero()) rrow[j] += a * brow[j];
            }
        }
    }
    return r;
}

Mat Mat::operator+(const Mat& o) const {
    Mat r = *this;
    r += o;
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    Mat r = *this;
    r -= o;
    return r;
}

Mat& Mat::operator+=(const Mat& o) {
    check_same_field(o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::DimensionMismatch, "sum of unequal shapes");
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (!o.data_[i].is_zero()) data_[i] += o.data_[i];
    return *this;
}

Mat& Mat::operator-=(const Mat& o) {
    check_same_field(o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::DimensionMismatch, "difference of unequal shapes");
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (!o.data_[i].is_zero()) data_[i] -= o.data_[i];
    return *this;
}

Mat Mat::operator-() const {
    Mat r = *this;
    for (auto& x : r.data_) x = -x;
    return r;
}

Mat Mat::scaled(const Scalar& s) const {
    Mat r = *this;
    for (auto& x : r.data_) x = x * s;
    return r;
}

Mat operator*(const Scalar& s, const Mat& m) { return m.scaled(s); }

bool Mat::operator==(const Mat& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Mat Mat::transpose() const {
    Mat r(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

Mat Mat::col(std::size_t j) const { return block(0, j, rows_, 1); }
Mat Mat::row(std::size_t i) const { return block(i, 0, 1, cols_); }

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw Error(ErrorKind::DimensionMismatch, "block out of range");
    Mat r(field_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) r(i, j) = (*this)(r0 + i, c0 + j);
    return r;
}

void Mat::set_block(std::size_t r0, std::size_t c0, const Mat& b) {
    check_same_field(b);
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw Error(ErrorKind::DimensionMismatch, "block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

void Mat::add_block(std::size_t r0, std::size_t c0, const Mat& b) {
    check_same_field(b);
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw Error(ErrorKind::DimensionMismatch, "block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j)
            if (!b(i, j).is_zero()) (*this)(r0 + i, c0 + j) += b(i, j);
}

bool Mat::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

bool Mat::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const Scalar& x = (*this)(i, j);
            if (i == j ? !x.is_one() : !x.is_zero()) return false;
        }
    return true;
}

Mat Mat::flatten() const {
    Mat r(field_, data_.size(), 1);
    r.data_ = data_;
    return r;
}

Mat Mat::unflatten(const Mat& v, std::size_t rows, std::size_t cols) {
    if (v.rows_ * v.cols_ != rows * cols) throw Error(ErrorKind::DimensionMismatch, "unflatten size");
    Mat r(v.field_, rows, cols);
    r.data_ = v.data_;
    return r;
}

std::string Mat::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) os << ", ";
        os << "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << (*this)(i, j).str();
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

Mat kron(const Mat& f, const Mat& g) {
    if (f.field() != g.field()) throw Error(ErrorKind::FieldMismatch, "kron of different fields");
    Mat r(f.field(), f.rows() * g.rows(), f.cols() * g.cols());
    for (std::size_t i = 0; i < f.rows(); ++i)
        for (std::size_t j = 0; j < f.cols(); ++j) {
            const Scalar& a = f(i, j);
            if (a.is_zero()) continue;
            for (std::size_t k = 0; k < g.rows(); ++k)
                for (std::size_t l = 0; l < g.cols(); ++l) {
                    const Scalar& b = g(k, l);
                    if (b.is_zero()) continue;
                    r(i * g.rows() + k, j * g.cols() + l) = a.is_one() ? b : a * b;
                }
        }
    return r;
}

Mat tensor_k(std::size_t dim_m, std::size_t dim_n, const Mat& f, const Mat& g) {
    if (f.cols() != dim_m || g.cols() != dim_n) throw Error(ErrorKind::DimensionMismatch, "tensor_k source dims");
    return kron(f, g);
}

Mat hstack(Field f, std::size_t rows, const std::vector<Mat>& blocks) {
    std::size_t cols = 0;
    for (const auto& b : blocks) {
        if (b.rows() != rows) throw Error(ErrorKind::DimensionMismatch, "hstack row count");
        cols += b.cols();
    }
    Mat r(f, rows, cols);
    std::size_t c = 0;
    for (const auto& b : blocks) {
        r.set_block(0, c, b);
        c += b.cols();
    }
    return r;
}

Mat vstack(Field f, std::size_t cols, const std::vector<Mat>& blocks) {
    std::size_t rows = 0;
    for (const auto& b : blocks) {
        if (b.cols() != cols) throw Error(ErrorKind::DimensionMismatch, "vstack column count");
        rows += b.rows();
    }
    Mat r(f, rows, cols);
    std::size_t rr = 0;
    for (const auto& b : blocks) {
        r.set_block(rr, 0, b);
        rr += b.rows();
    }
    return r;
}

Mat block_diag(Field f, const std::vector<Mat>& blocks) {
    std::size_t rows = 0, cols = 0;
    for (const auto& b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    Mat r(f, rows, cols);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
        r.set_block(r0, c0, b);
        r0 += b.rows();
        c0 += b.cols();
    }
    return r;
}

RrefResult rref_full(const Mat& m) {
    Mat a = m;
    for (const auto& x : m.data())
        if (x.field() != m.field()) throw Error(ErrorKind::FieldMismatch, "mixed field tags in rref");
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    const std::size_t rows = a.rows(), cols = a.cols();
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a(p, c).is_zero()) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
        Scalar inv = a(r, c).inverse();
        if (!inv.is_one())
            for (std::size_t j = c; j < cols; ++j)
                if (!a(r, j).is_zero()) a(r, j) = a(r, j) * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            Scalar factor = a(i, c);
            for (std::size_t j = c; j < cols; ++j)
                if (!a(r, j).is_zero()) a(i, j) -= factor * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(a), std::move(pivots)};
}

Mat rref(const Mat& m) { return rref_full(m).reduced; }

std::size_t rank(const Mat& m) { return rref_full(m).pivots.size(); }

Mat kernel(const Mat& m) {
    auto [r, pivots] = rref_full(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < n; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    Mat k(m.field(), free_cols.size(), n);
    for (std::size_t t = 0; t < free_cols.size(); ++t) {
        std::size_t j = free_cols[t];
        k(t, j) = Scalar::one(m.field());
        for (std::size_t row = 0; row < pivots.size(); ++row)
            if (!r(row, j).is_zero()) k(t, pivots[row]) = -r(row, j);
    }
    return k;
}

std::optional<Mat> solve(const Mat& m, const Mat& b) {
    if (b.cols() != 1 || b.rows() != m.rows())
        throw Error(ErrorKind::DimensionMismatch, "solve: right-hand side length");
    if (b.field() != m.field()) throw Error(ErrorKind::FieldMismatch, "solve: field");
    Mat aug = hstack(m.field(), m.rows(), {m, b});
    auto [r, pivots] = rref_full(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    Mat x(m.field(), m.cols(), 1);
    for (std::size_t row = 0; row < pivots.size(); ++row) x(pivots[row], 0) = r(row, m.cols());
    return x;
}

std::optional<Mat> try_inverse(const Mat& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    const std::size_t n = m.rows();
    Mat aug = hstack(m.field(), n, {m, Mat::identity(m.field(), n)});
    auto [r, pivots] = rref_full(aug);
    if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
    return r.block(0, n, n, n);
}

Mat inverse(const Mat& m) {
    auto inv = try_inverse(m);
    if (!inv) throw Error(ErrorKind::InvalidArgument, "matrix is not invertible");
    return *inv;
}

bool is_invertible(const Mat& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

Mat left_inverse(const Mat& e) {
    // Pick linearly independent rows of e (pivot columns of eᵀ).
    auto pivots = rref_full(e.transpose()).pivots;
    if (pivots.size() != e.cols()) throw Error(ErrorKind::InvalidArgument, "left_inverse needs full column rank");
    const std::size_t d = e.cols();
    Mat sub(e.field(), d, d), sel(e.field(), d, e.rows());
    for (std::size_t t = 0; t < d; ++t) {
        for (std::size_t j = 0; j < d; ++j) sub(t, j) = e(pivots[t], j);
        sel(t, pivots[t]) = Scalar::one(e.field());
    }
    return inverse(sub) * sel;
}

Mat column_space_canonical(const Mat& m) {
    auto [r, pivots] = rref_full(m.transpose());
    return r.block(0, 0, pivots.size(), m.rows());
}

bool same_column_space(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) return false;
    return column_space_canonical(a) == column_space_canonical(b);
}

Mat column_space_basis(const Mat& m) {
    auto pivots = rref_full(m).pivots;
    std::vector<Mat> cols;
    for (auto p : pivots) cols.push_back(m.col(p));
    return hstack(m.field(), m.rows(), cols);
}

bool column_space_contains(const Mat& b, const Mat& a) {
    if (a.cols() == 0) return true;
    return rank(hstack(b.field(), b.rows(), {b, a})) == rank(b);
}

QuotientSpace quotient_by(Field f, std::size_t ambient_dim, const Mat& relations) {
    if (relations.cols() != ambient_dim && !(relations.rows() == 0))
        throw Error(ErrorKind::DimensionMismatch, "quotient_by: relation length " +
                                                      std::to_string(relations.cols()) + " vs ambient " +
                                                      std::to_string(ambient_dim));
    QuotientSpace q;
    q.ambient_dim = ambient_dim;
    std::vector<std::size_t> pivots;
    Mat r(f, 0, ambient_dim);
    if (relations.rows() > 0) {
        if (relations.field() != f) throw Error(ErrorKind::FieldMismatch, "quotient_by: field");
        auto res = rref_full(relations);
        pivots = res.pivots;
        r = res.reduced.block(0, 0, pivots.size(), ambient_dim);
    }
    q.relations = r;
    std::vector<bool> is_pivot(ambient_dim, false);
    std::vector<std::size_t> pivot_row(ambient_dim, 0);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        is_pivot[pivots[i]] = true;
        pivot_row[pivots[i]] = i;
    }
    std::vector<std::size_t> index_of(ambient_dim, 0);
    for (std::size_t j = 0; j < ambient_dim; ++j)
        if (!is_pivot[j]) {
            index_of[j] = q.basis_coords.size();
            q.basis_coords.push_back(j);
        }
    q.dim = q.basis_coords.size();
    q.proj = Mat(f, q.dim, ambient_dim);
    q.sect = Mat(f, ambient_dim, q.dim);
    for (std::size_t t = 0; t < q.dim; ++t) {
        q.proj(t, q.basis_coords[t]) = Scalar::one(f);
        q.sect(q.basis_coords[t], t) = Scalar::one(f);
    }
    // A pivot coordinate e_j equals -(sum of its row's free entries) modulo relations.
    for (std::size_t j = 0; j < ambient_dim; ++j) {
        if (!is_pivot[j]) continue;
        std::size_t row = pivot_row[j];
        for (std::size_t t = 0; t < q.dim; ++t) {
            const Scalar& v = r(row, q.basis_coords[t]);
            if (!v.is_zero()) q.proj(t, j) = -v;
        }
    }
    return q;
}

}  // namespace gcoring
