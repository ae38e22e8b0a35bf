#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gcoring/matrix.hpp"
#include "gcoring/report.hpp"

namespace gcoring {

// Basis of {x in k^n : op(x) = 0} for a linear op, returned as columns.
Mat linear_solution_space(Field f, std::size_t n, const std::function<Mat(const Mat&)>& op);

// Finite-dimensional unital algebra given by structure constants.
struct Algebra {
    Field field;
    std::string name;
    std::size_t dim = 0;
    Mat table;  // dim × dim²; column i*dim+j holds e_i·e_j
    Mat unit;   // coordinates of 1
    std::vector<Mat> left_basis;   // x ↦ e_i·x
    std::vector<Mat> right_basis;  // x ↦ x·e_i

    Mat product(const Mat& a, const Mat& b) const;
    Mat left_mult(const Mat& a) const;   // x ↦ a·x
    Mat right_mult(const Mat& b) const;  // x ↦ x·b
    Mat basis(std::size_t i) const { return Mat::unit_vector(field, dim, i); }
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

AlgebraPtr make_algebra(Field f, std::string name, std::size_t dim, Mat table, Mat unit);
AlgebraPtr field_algebra(Field f);
// k^n with componentwise product.
AlgebraPtr product_algebra(Field f, std::size_t n);
// a⊗b with (a⊗b)(a'⊗b') = aa'⊗bb'.
AlgebraPtr tensor_algebra(const AlgebraPtr& a, const AlgebraPtr& b);
bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

CheckReport validate_algebra(const Algebra& a);

struct RingMorphism {
    AlgebraPtr src;
    AlgebraPtr dst;
    Mat mat;  // dst.dim × src.dim
};

RingMorphism identity_morphism(const AlgebraPtr& a);
CheckReport validate_ring_morphism(const RingMorphism& m);
RingMorphism compose(const RingMorphism& g, const RingMorphism& f);  // g∘f

// Subalgebra spanned by the given columns; throws if not closed or missing 1.
struct Subalgebra {
    AlgebraPtr algebra;
    RingMorphism inclusion;
};
Subalgebra make_subalgebra(const AlgebraPtr& a, const Mat& basis_cols, const std::string& name);

// Module with optional left and right ring actions. Action matrices act on
// coordinate columns; right[i] is the matrix of m ↦ m·e_i.
struct Bimodule {
    Field field;
    std::size_t dim = 0;
    AlgebraPtr left_ring;   // null when there is no left action
    AlgebraPtr right_ring;  // null when there is no right action
    std::vector<Mat> left;
    std::vector<Mat> right;

    Mat left_action(const Mat& a) const;
    Mat right_action(const Mat& a) const;
    bool has_left() const { return left_ring != nullptr; }
    bool has_right() const { return right_ring != nullptr; }
};

Bimodule regular_bimodule(const AlgebraPtr& a);
Bimodule zero_module(Field f, const AlgebraPtr& left, const AlgebraPtr& right);
Bimodule forget_left(const Bimodule& m);
Bimodule forget_right(const Bimodule& m);
// Pull back actions along ring morphisms into the existing rings.
Bimodule restrict_left(const Bimodule& m, const RingMorphism& along);
Bimodule restrict_right(const Bimodule& m, const RingMorphism& along);
// Base change of coordinates: new basis vectors are the columns of p.
Bimodule change_basis(const Bimodule& m, const Mat& p);
bool same_bimodule(const Bimodule& a, const Bimodule& b);

CheckReport validate_bimodule(const Bimodule& m);
// f: src → dst commutes with every available action on both sides.
bool is_bimodule_map(const Bimodule& src, const Bimodule& dst, const Mat& f);
bool is_right_linear(const Bimodule& src, const Bimodule& dst, const Mat& f);
bool is_left_linear(const Bimodule& src, const Bimodule& dst, const Mat& f);

struct BimoduleMap {
    Bimodule src;
    Bimodule dst;
    Mat mat;
};
bool is_bimodule_iso(const BimoduleMap& f);

struct DirectSum {
    Bimodule module;
    std::vector<Mat> incl;  // summand → sum
    std::vector<Mat> proj;  // sum → summand
    std::vector<std::size_t> offset;
};
DirectSum direct_sum(const std::vector<Bimodule>& parts);

// M ⊗_R N for M.right_ring ≅ N.left_ring = R, as a quotient of M ⊗_k N.
struct TensorProduct {
    Bimodule module;
    QuotientSpace q;
    std::size_t left_dim = 0, right_dim = 0;

    // Class of m⊗n.
    Mat element(const Mat& m, const Mat& n) const;
    const Mat& proj() const { return q.proj; }
    const Mat& sect() const { return q.sect; }
};

TensorProduct tensor_over(const Bimodule& m, const Bimodule& n);
inline TensorProduct tensor_over_A(const Bimodule& m, const Bimodule& n) { return tensor_over(m, n); }

// f⊗g between tensor products: f: src.left → dst.left, g: src.right → dst.right.
Mat tensor_maps(const Mat& f, const Mat& g, const TensorProduct& src, const TensorProduct& dst);
// M ⊗_R R → M, m⊗r ↦ m·r.
Mat right_unitor(const TensorProduct& mr, const Bimodule& m);
// R ⊗_R M → M, r⊗m ↦ r·m.
Mat left_unitor(const TensorProduct& rm, const Bimodule& m);
// (X⊗Y)⊗Z → X⊗(Y⊗Z).
Mat associator(const TensorProduct& xy, const TensorProduct& xy_z, const TensorProduct& yz,
               const TensorProduct& x_yz);
// X⊗(Y⊗Z) → (X⊗Y)⊗Z.
Mat associator_inverse(const TensorProduct& xy, const TensorProduct& xy_z, const TensorProduct& yz,
                       const TensorProduct& x_yz);
// Linear map X ⊗_k Y → Z that kills the middle relations, induced on X ⊗_R Y.
Mat induced_on_tensor(const Mat& ambient_map, const TensorProduct& t);
// Checks that an ambient map kills the middle relations.
bool kills_relations(const Mat& ambient_map, const TensorProduct& t);

// Left-linear functionals M → R (R = M's left ring): f(r·m) = r·f(m).
// Bimodule structure (x·f·b)(m) = f(m·x)·b when M has a right action.
struct LeftDual {
    Bimodule module;
    std::vector<Mat> basis;  // each R.dim × M.dim
    Mat embed;               // columns: flattened basis functionals
    Mat coords_of;           // left inverse of embed
    std::size_t ring_dim = 0, source_dim = 0;

    Mat functional(const Mat& coords) const;
    Mat coordinates(const Mat& functional) const;
};

LeftDual left_dual(const Bimodule& m);
std::vector<Mat> left_linear_functionals(const Bimodule& m);

struct DualBasis {
    std::vector<Mat> functionals;  // R.dim × M.dim
    std::vector<Mat> elements;     // columns in M
};

// Solves Σ f_i(m)·m_i = m; none when M is not projective over its left ring.
std::optional<DualBasis> find_dual_basis(const Bimodule& m);
bool check_dual_basis(const Bimodule& m, const DualBasis& d);

struct ModulePredicates {
    bool flat_projective = false;
    bool generator = false;
    bool faithfully_flat = false;
    bool progenerator = false;
    std::size_t trace_rank = 0;
};

// Predicates for m as a left module over its left ring.
ModulePredicates module_predicates(const Bimodule& m);
// Predicates for m as a left B-module via b: B → (m's left ring).
ModulePredicates module_predicates(const RingMorphism& b, const Bimodule& m);

}  // namespace gcoring
