#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "gcoring/scalar.hpp"

namespace gcoring {

// Dense row-major matrix over a single field. Vectors are n×1 matrices.
class Mat {
public:
    Mat() = default;
    Mat(Field f, std::size_t rows, std::size_t cols);

    static Mat identity(Field f, std::size_t n);
    static Mat zero(Field f, std::size_t rows, std::size_t cols) { return Mat(f, rows, cols); }
    static Mat from_ints(Field f, std::initializer_list<std::initializer_list<long>> rows);
    static Mat from_rows(Field f, std::size_t cols, const std::vector<std::vector<Scalar>>& rows);
    static Mat column(Field f, const std::vector<Scalar>& entries);
    static Mat column_ints(Field f, std::initializer_list<long> entries);
    static Mat unit_vector(Field f, std::size_t n, std::size_t i);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Field field() const { return field_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    const Scalar& operator[](std::size_t i) const { return data_[i]; }  // vectors
    const std::vector<Scalar>& data() const { return data_; }

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator-() const;
    Mat& operator+=(const Mat& o);
    Mat& operator-=(const Mat& o);
    Mat scaled(const Scalar& s) const;
    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat transpose() const;
    Mat col(std::size_t j) const;
    Mat row(std::size_t i) const;
    Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Mat& b);
    void add_block(std::size_t r0, std::size_t c0, const Mat& b);
    bool is_zero() const;
    bool is_identity() const;

    // Row-major flattening to a column and back.
    Mat flatten() const;
    static Mat unflatten(const Mat& v, std::size_t rows, std::size_t cols);

    std::string str() const;

private:
    void check_same_field(const Mat& o) const;

    Field field_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> data_;
};

Mat operator*(const Scalar& s, const Mat& m);

// Kronecker product: matrix of f⊗g in the basis e_i⊗e_j, i major.
Mat kron(const Mat& f, const Mat& g);
Mat tensor_k(std::size_t dim_m, std::size_t dim_n, const Mat& f, const Mat& g);
Mat hstack(Field f, std::size_t rows, const std::vector<Mat>& blocks);
Mat vstack(Field f, std::size_t cols, const std::vector<Mat>& blocks);
Mat block_diag(Field f, const std::vector<Mat>& blocks);

struct RrefResult {
    Mat reduced;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

RrefResult rref_full(const Mat& m);
Mat rref(const Mat& m);
std::size_t rank(const Mat& m);
// Rows form a basis of the null space.
Mat kernel(const Mat& m);
// Some x with m·x = b (free variables 0), or nothing when inconsistent.
std::optional<Mat> solve(const Mat& m, const Mat& b);
std::optional<Mat> try_inverse(const Mat& m);
Mat inverse(const Mat& m);
// L with L·e = I for e of full column rank.
Mat left_inverse(const Mat& e);
bool is_invertible(const Mat& m);

// Canonical basis (nonzero rref rows) of the span of the columns of m.
Mat column_space_canonical(const Mat& m);
bool same_column_space(const Mat& a, const Mat& b);
// Column-basis of the span of the columns of m (pivot columns of m).
Mat column_space_basis(const Mat& m);
// True if every column of a lies in the column span of b.
bool column_space_contains(const Mat& b, const Mat& a);

struct QuotientSpace {
    std::size_t ambient_dim = 0;
    Mat relations;  // nonzero rows of rref of the supplied relations
    Mat proj;       // ambient -> quotient
    Mat sect;       // quotient -> ambient
    std::size_t dim = 0;
    std::vector<std::size_t> basis_coords;  // ambient coordinates representing classes
};

QuotientSpace quotient_by(Field f, std::size_t ambient_dim, const Mat& relations);

}  // namespace gcoring
