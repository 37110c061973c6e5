#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "smallarr/arrangement.hpp"
#include "smallarr/matrix.hpp"

namespace smallarr {

/// Homogeneous linear form as its coefficient vector (length = ambient rank).
using LinearForm = std::vector<Rational>;

/// A quadric that is the product of two independent linear forms. `summand`
/// is the index j of the product-of-ideals summand it was emitted from; 0
/// marks the padding forms added for arrangements that do not span the
/// ambient space.
struct QuadricProduct {
    LinearForm left;
    LinearForm right;
    int summand = 0;
};

struct GeneratorSet {
    std::vector<QuadricProduct> quadrics;
    std::size_t degree2_rank = 0;  // rank of the quadrics inside Sym^2
    std::size_t mu_predicted = 0;  // from mu_count
};

/// Monomial exponent vectors of total degree `degree` in `nvars` variables,
/// in a fixed deterministic order. Coefficient vectors of degree-d forms are
/// indexed against this list.
const std::vector<std::vector<int>>& monomial_exponents(std::size_t nvars, int degree);

/// Coefficient vector of the product of two linear forms over the degree-2
/// monomial basis.
std::vector<Rational> quadric_coefficients(const LinearForm& left, const LinearForm& right);

/// Multiply a degree-d coefficient vector by a linear form, producing a
/// degree-(d+1) coefficient vector.
std::vector<Rational> multiply_by_form(const std::vector<Rational>& coeffs, int degree,
                                       const LinearForm& form);

/// Canonical basis of the linear forms vanishing on the subspace; the count
/// is ambient rank minus the subspace rank.
std::vector<LinearForm> vanishing_forms(const Subspace& sub);

/// Number of minimal generators of the arrangement's ideal inside its span,
/// computed by running the two-piece generator-count formula along the given
/// linearly joined order. Throws input_error if the order fails verification.
std::size_t mu_count(const Arrangement& arr, const std::vector<int>& order);

/// Quadratic generators of the arrangement's ideal along a verified linearly
/// joined order: for each j >= 2 all products of a form vanishing on
/// span(L_j, L'_{j+1},..) with a form vanishing on span(L_1,..,L_{j-1},
/// L'_{j+1},..), where L'_i is the first-fit complement of the attachment
/// intersection inside L_i. When the arrangement does not span the ambient
/// space the construction runs inside the span and products of span-vanishing
/// forms with a spanning set of independent forms are appended.
GeneratorSet equations_for_ordered_arrangement(const Arrangement& arr,
                                               const std::vector<int>& order);

struct DegreePiece {
    std::size_t rank = 0;
    Matrix basis;  // rows = coefficient vectors over monomial_exponents(ambient, degree)
};

/// Exact degree-d graded piece of the intersection of the component ideals,
/// for d in {2, 3}: a form lies in it iff it vanishes identically after
/// substituting a parametrization of each component.
DegreePiece degree_piece(const Arrangement& arr, int degree);

struct GenerationReport {
    bool spans_degree2 = false;     // emitted quadrics span the exact degree-2 piece
    bool degree3_surjective = false;  // linear multiples of the piece span degree 3
    bool all_vanish = false;        // every generator vanishes on every component
    bool count_matches = false;     // rank (modulo the span's ideal) equals mu_predicted
    std::size_t degree2_rank = 0;
    std::size_t degree3_rank = 0;
    std::size_t reduced_generator_count = 0;
    std::string detail;             // first failure, when any

    bool all_ok() const { return spans_degree2 && degree3_surjective && all_vanish && count_matches; }
};

GenerationReport verify_generation(const Arrangement& arr, const GeneratorSet& gens);

}  // namespace smallarr
