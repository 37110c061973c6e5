#include "smallarr/generate.hpp"

#include <algorithm>

#include "smallarr/errors.hpp"
#include "smallarr/rng.hpp"

namespace smallarr {

namespace {

/// Random full-rank combination of the rows of `pool` with small integer
/// coefficients. rank 0 yields the empty matrix.
Matrix random_subspace_of(const Matrix& pool, std::size_t target_rank, Rng& rng) {
    if (target_rank == 0) return Matrix::empty(pool.cols());
    for (;;) {
        Matrix picked(0, pool.cols());
        for (std::size_t r = 0; r < target_rank; ++r) {
            std::vector<Rational> coeffs(pool.rows());
            for (auto& c : coeffs) c = Rational(rng.int_in(-3, 3));
            picked.append_row(combine_rows(pool, coeffs));
        }
        picked = rref(picked);
        if (picked.rows() == target_rank) return picked;
    }
}

}  // namespace

Arrangement random_small_arrangement(int components, int ambient_rank, std::uint64_t seed) {
    if (components < 1) throw input_error("components must be at least 1");
    if (ambient_rank < components)
        throw input_error("infeasible parameters: every component of a linearly joined "
                          "sequence adds at least one fresh direction, so ambient_rank must "
                          "be at least the component count");
    Rng rng(seed);
    const Matrix full = Matrix::identity(static_cast<std::size_t>(ambient_rank));

    std::vector<Matrix> built;
    const int first_cap = std::min(ambient_rank - (components - 1), 4);
    built.push_back(random_subspace_of(full, static_cast<std::size_t>(rng.int_in(1, first_cap)),
                                       rng));
    Matrix current_span = built[0];

    for (int i = 1; i < components; ++i) {
        const int attach = static_cast<int>(rng.int_in(0, i - 1));
        const std::size_t section_rank =
            static_cast<std::size_t>(rng.int_in(0, static_cast<int>(built[attach].rows()) - 1));
        const Matrix section = random_subspace_of(built[attach], section_rank, rng);

        const int remaining = components - 1 - i;
        const int room = ambient_rank - static_cast<int>(current_span.rows());
        const int fresh_cap = std::min(room - remaining, 3);
        const std::size_t fresh = static_cast<std::size_t>(rng.int_in(1, fresh_cap));
        const Matrix outside = complement_within(full, current_span);
        const Matrix directions = random_subspace_of(outside, fresh, rng);

        const Matrix basis = rref(vstack(section, directions));
        built.push_back(basis);
        current_span = row_space_sum(current_span, basis);
    }

    std::vector<Subspace> subs;
    for (int i = 0; i < components; ++i)
        subs.push_back(Subspace{"C" + std::to_string(i), built[i]});
    Arrangement arr = Arrangement::create(static_cast<std::size_t>(ambient_rank), std::move(subs));
    if (!is_small(arr).small)
        throw std::logic_error("random_small_arrangement produced a non-small instance");
    return arr;
}

}  // namespace smallarr
