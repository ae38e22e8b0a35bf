#include <doctest.h>

#include <random>

#include "gcoring/error.hpp"
#include "gcoring/matrix.hpp"

using namespace gcoring;

namespace {
const Field Q = Field::rationals();

Mat random_mat(std::mt19937_64& rng, std::size_t r, std::size_t c) {
    std::uniform_int_distribution<long> d(-3, 3);
    Mat m(Q, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar(Q, d(rng));
    return m;
}
}  // namespace

TEST_CASE("rationals stay in lowest terms") {
    Scalar a = Scalar::parse(Q, "-6/4");
    CHECK(a.str() == "-3/2");
    CHECK((a + Scalar(Q, 2)).str() == "1/2");
    CHECK((Scalar::parse(Q, "2/4") * Scalar(Q, 2)).str() == "1");
    CHECK(Scalar::parse(Q, "0/7").str() == "0");
}

TEST_CASE("rational arithmetic does not overflow") {
    Scalar big(Q, 1L << 40);
    Scalar x = big * big * big;  // 2^120
    CHECK(x.str() == "1329227995784915872903807060280344576");
    Scalar y = x / (big * big);
    CHECK(y == big);
    CHECK((x - x).is_zero());
}

TEST_CASE("prime field residues") {
    Field F7 = Field::prime(7);
    Scalar a(F7, -1);
    CHECK(a.residue() == 6);
    CHECK((a * a).is_one());
    CHECK((Scalar(F7, 3).inverse() * Scalar(F7, 3)).is_one());
    CHECK(Scalar::parse(F7, "1/2").residue() == 4);
}

TEST_CASE("mixed fields are rejected") {
    Field F5 = Field::prime(5);
    CHECK_THROWS_AS(Scalar(Q, 1) + Scalar(F5, 1), Error);
    CHECK_THROWS_AS(Mat::identity(Q, 2) * Mat::identity(F5, 2), Error);
    try {
        (void)(Mat::identity(Q, 1) + Mat::identity(F5, 1));
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::FieldMismatch);
    }
}

TEST_CASE("rref examples") {
    CHECK(rref(Mat::identity(Q, 2)) == Mat::identity(Q, 2));
    CHECK(rref(Mat(Q, 2, 2)) == Mat(Q, 2, 2));
    CHECK(rref(Mat::from_ints(Q, {{2, 4}, {1, 2}})) == Mat::from_ints(Q, {{1, 2}, {0, 0}}));
}

TEST_CASE("kernel examples") {
    CHECK(kernel(Mat::identity(Q, 3)).rows() == 0);
    CHECK(kernel(Mat(Q, 3, 3)) == Mat::identity(Q, 3));
    Mat k = kernel(Mat::from_ints(Q, {{1, 1}}));
    REQUIRE(k.rows() == 1);
    CHECK(same_column_space(k.transpose(), Mat::column_ints(Q, {1, -1})));
}

TEST_CASE("solve examples") {
    Mat b = Mat::column_ints(Q, {3, -2});
    CHECK(*solve(Mat::identity(Q, 2), b) == b);
    CHECK_FALSE(solve(Mat(Q, 2, 2), b).has_value());
    auto x = solve(Mat::from_ints(Q, {{1, 1}}), Mat::column_ints(Q, {2}));
    REQUIRE(x.has_value());
    CHECK(*x == Mat::column_ints(Q, {2, 0}));
    CHECK_THROWS_AS(solve(Mat::identity(Q, 2), Mat::column_ints(Q, {1})), Error);
}

TEST_CASE("quotient examples") {
    auto q0 = quotient_by(Q, 3, Mat(Q, 0, 3));
    CHECK(q0.dim == 3);
    CHECK(q0.proj.is_identity());
    CHECK(q0.sect.is_identity());
    CHECK(quotient_by(Q, 2, Mat::identity(Q, 2)).dim == 0);
    auto q1 = quotient_by(Q, 2, Mat::from_ints(Q, {{1, -1}}));
    CHECK(q1.dim == 1);
    CHECK(q1.proj.col(0) == q1.proj.col(1));
    CHECK_THROWS_AS(quotient_by(Q, 3, Mat::from_ints(Q, {{1, -1}})), Error);
}

TEST_CASE("tensor_k examples") {
    CHECK(tensor_k(2, 3, Mat::identity(Q, 2), Mat::identity(Q, 3)) == Mat::identity(Q, 6));
    CHECK(kron(Mat::from_ints(Q, {{1, 2}, {3, 4}}), Mat(Q, 2, 2)).is_zero());
    CHECK(kron(Mat::from_ints(Q, {{2}}), Mat::from_ints(Q, {{3}})) == Mat::from_ints(Q, {{6}}));
    // basis order e_i⊗e_j, i major
    Mat v = kron(Mat::column_ints(Q, {1, 0}), Mat::column_ints(Q, {0, 1, 0}));
    CHECK(v == Mat::unit_vector(Q, 6, 1));
}

TEST_CASE("property: rref idempotent, rank-nullity, quotient sections") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 40; ++t) {
        std::size_t r = 1 + rng() % 5, c = 1 + rng() % 6;
        Mat m = random_mat(rng, r, c);
        Mat rr = rref(m);
        CHECK(rref(rr) == rr);
        Mat k = kernel(m);
        CHECK(rank(m) + k.rows() == c);
        for (std::size_t i = 0; i < k.rows(); ++i) CHECK((m * k.row(i).transpose()).is_zero());
        auto q = quotient_by(Q, c, m);
        CHECK((q.proj * q.sect).is_identity());
        CHECK((q.proj * m.transpose()).is_zero());
        CHECK(q.dim == c - rank(m));
    }
}

TEST_CASE("property: tensor_k is bilinear and functorial") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 20; ++t) {
        Mat f = random_mat(rng, 2, 3), f2 = random_mat(rng, 3, 2);
        Mat g = random_mat(rng, 2, 2), g2 = random_mat(rng, 2, 3);
        Mat h = random_mat(rng, 2, 3);
        CHECK(kron(f * f2, g * g2) == kron(f, g) * kron(f2, g2));
        CHECK(kron(f + h, g) == kron(f, g) + kron(h, g));
        CHECK(kron(f, g.scaled(Scalar(Q, 3))) == kron(f, g).scaled(Scalar(Q, 3)));
    }
}

TEST_CASE("inverse and left inverse") {
    Mat m = Mat::from_ints(Q, {{2, 1}, {1, 1}});
    CHECK((inverse(m) * m).is_identity());
    CHECK_FALSE(try_inverse(Mat::from_ints(Q, {{1, 2}, {2, 4}})).has_value());
    Mat e = Mat::from_ints(Q, {{1, 0}, {1, 1}, {0, 2}});
    CHECK((left_inverse(e) * e).is_identity());
}
