#include "smallarr/ideals.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "smallarr/errors.hpp"

namespace smallarr {

namespace {

std::vector<std::vector<int>> build_exponents(std::size_t nvars, int degree) {
    std::vector<std::vector<int>> out;
    std::vector<int> current(nvars, 0);
    auto rec = [&](auto&& self, std::size_t var, int remaining) -> void {
        if (var + 1 == nvars) {
            current[var] = remaining;
            out.push_back(current);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            current[var] = e;
            self(self, var + 1, remaining - e);
        }
        current[var] = 0;
    };
    if (nvars == 0) return out;
    rec(rec, 0, degree);
    return out;
}

std::size_t exponent_index(std::size_t nvars, int degree, const std::vector<int>& expo) {
    const auto& all = monomial_exponents(nvars, degree);
    const auto it = std::lower_bound(all.begin(), all.end(), expo,
                                     [](const auto& a, const auto& b) { return a > b; });
    return static_cast<std::size_t>(it - all.begin());
}

/// Expand the substitution of one ambient monomial into the parameter
/// variables of a component: the product over variables k of the linear form
/// (row-combination column k of the basis) raised to the monomial's exponent.
std::vector<Rational> substituted_monomial(const Matrix& basis, const std::vector<int>& expo) {
    const std::size_t params = basis.rows();
    std::vector<Rational> poly{Rational(1)};  // degree-0 polynomial in the parameters
    int current_degree = 0;
    for (std::size_t k = 0; k < expo.size(); ++k) {
        for (int rep = 0; rep < expo[k]; ++rep) {
            const auto& next_monos = monomial_exponents(params, current_degree + 1);
            std::vector<Rational> next(next_monos.size());
            const auto& cur_monos = monomial_exponents(params, current_degree);
            for (std::size_t m = 0; m < cur_monos.size(); ++m) {
                if (poly[m] == 0) continue;
                for (std::size_t t = 0; t < params; ++t) {
                    if (basis.at(t, k) == 0) continue;
                    std::vector<int> e = cur_monos[m];
                    ++e[t];
                    next[exponent_index(params, current_degree + 1, e)] +=
                        poly[m] * basis.at(t, k);
                }
            }
            poly = std::move(next);
            ++current_degree;
        }
    }
    return poly;
}

/// Rows expressing "vanishes identically on the component" as linear
/// conditions on a degree-d coefficient vector.
Matrix component_constraints(const Matrix& basis, std::size_t ambient, int degree) {
    const auto& cols = monomial_exponents(ambient, degree);
    const std::size_t param_rows = monomial_exponents(basis.rows(), degree).size();
    Matrix constraints(param_rows, cols.size());
    for (std::size_t mc = 0; mc < cols.size(); ++mc) {
        const auto expanded = substituted_monomial(basis, cols[mc]);
        for (std::size_t r = 0; r < param_rows; ++r) constraints.at(r, mc) = expanded[r];
    }
    return constraints;
}

bool proportional(const LinearForm& a, const LinearForm& b) {
    Matrix m(0, a.size());
    m.append_row(a);
    m.append_row(b);
    return rank(m) <= 1;
}

}  // namespace

const std::vector<std::vector<int>>& monomial_exponents(std::size_t nvars, int degree) {
    static std::map<std::pair<std::size_t, int>, std::vector<std::vector<int>>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto [it, inserted] = cache.try_emplace({nvars, degree});
    if (inserted) it->second = build_exponents(nvars, degree);
    return it->second;
}

std::vector<Rational> quadric_coefficients(const LinearForm& left, const LinearForm& right) {
    const std::size_t n = left.size();
    const auto& monos = monomial_exponents(n, 2);
    std::vector<Rational> out(monos.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (left[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (right[j] == 0) continue;
            std::vector<int> e(n, 0);
            ++e[i];
            ++e[j];
            out[exponent_index(n, 2, e)] += left[i] * right[j];
        }
    }
    return out;
}

std::vector<Rational> multiply_by_form(const std::vector<Rational>& coeffs, int degree,
                                       const LinearForm& form) {
    const std::size_t n = form.size();
    const auto& monos = monomial_exponents(n, degree);
    const auto& out_monos = monomial_exponents(n, degree + 1);
    std::vector<Rational> out(out_monos.size());
    for (std::size_t m = 0; m < monos.size(); ++m) {
        if (coeffs[m] == 0) continue;
        for (std::size_t k = 0; k < n; ++k) {
            if (form[k] == 0) continue;
            std::vector<int> e = monos[m];
            ++e[k];
            out[exponent_index(n, degree + 1, e)] += coeffs[m] * form[k];
        }
    }
    return out;
}

std::vector<LinearForm> vanishing_forms(const Subspace& sub) {
    const Matrix k = kernel(sub.basis);
    std::vector<LinearForm> forms;
    forms.reserve(k.rows());
    for (std::size_t r = 0; r < k.rows(); ++r) forms.push_back(k.row(r));
    return forms;
}

std::size_t mu_count(const Arrangement& arr, const std::vector<int>& order) {
    const VerifyResult check = verify_linearly_joined(arr, order);
    if (!check.ok)
        throw input_error("mu_count: order fails the linearly joined verification at step " +
                          std::to_string(*check.first_failure));
    if (arr.size() <= 1) return 0;
    std::size_t mu = 0;
    Matrix prefix = arr.component(order[0]).basis;
    for (std::size_t i = 1; i < order.size(); ++i) {
        const Matrix& next = arr.component(order[i]).basis;
        const Matrix joint = row_space_sum(prefix, next);
        const std::size_t prefix_codim = joint.rows() - prefix.rows();
        const std::size_t next_codim = joint.rows() - next.rows();
        mu += prefix_codim * next_codim;
        prefix = joint;
    }
    return mu;
}

GeneratorSet equations_for_ordered_arrangement(const Arrangement& arr,
                                               const std::vector<int>& order) {
    const VerifyResult check = verify_linearly_joined(arr, order);
    if (!check.ok)
        throw input_error("equations: order fails the linearly joined verification at step " +
                          std::to_string(*check.first_failure));

    GeneratorSet gens;
    const std::size_t n = arr.size();
    const std::size_t ambient = arr.ambient_rank();
    if (n <= 1) return gens;

    // Work inside the span: with the span's canonical (rref) basis S, the
    // coordinates of a vector of the span are its entries at S's pivot
    // columns, and a form on the span pulls back to the ambient form
    // supported on those pivot columns.
    const Matrix span = arr.span();
    const std::size_t s = span.rows();
    std::vector<std::size_t> pivots;
    for (std::size_t r = 0; r < s; ++r) {
        std::size_t c = 0;
        while (span.at(r, c) == 0) ++c;
        pivots.push_back(c);
    }
    auto to_span_coords = [&](const Matrix& m) {
        Matrix out(m.rows(), s);
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < s; ++c) out.at(r, c) = m.at(r, pivots[c]);
        return out;
    };
    auto pull_back = [&](const std::vector<Rational>& form) {
        LinearForm out(ambient);
        for (std::size_t c = 0; c < s; ++c) out[pivots[c]] = form[c];
        return out;
    };

    std::vector<Matrix> comp(n);  // components in span coordinates, ordered
    for (std::size_t i = 0; i < n; ++i) comp[i] = to_span_coords(arr.component(order[i]).basis);

    // L'_i: complement of the attachment intersection inside L_i.
    std::vector<Matrix> reduced(n);
    Matrix prefix = comp[0];
    reduced[0] = comp[0];
    for (std::size_t i = 1; i < n; ++i) {
        const Matrix meet = row_space_intersect(prefix, comp[i]);
        reduced[i] = meet.rows() == 0 ? comp[i] : complement_within(comp[i], meet);
        prefix = row_space_sum(prefix, comp[i]);
    }

    for (std::size_t j = 1; j < n; ++j) {  // summand index j+1 in 1-based terms
        Matrix left_space = comp[j];
        for (std::size_t t = j + 1; t < n; ++t) left_space = row_space_sum(left_space, reduced[t]);
        Matrix right_space(0, s);
        for (std::size_t t = 0; t < j; ++t) right_space = row_space_sum(right_space, comp[t]);
        for (std::size_t t = j + 1; t < n; ++t)
            right_space = row_space_sum(right_space, reduced[t]);

        const Matrix left_kernel = kernel(left_space);
        const Matrix right_kernel = kernel(right_space);
        for (std::size_t a = 0; a < left_kernel.rows(); ++a)
            for (std::size_t b = 0; b < right_kernel.rows(); ++b)
                gens.quadrics.push_back(QuadricProduct{pull_back(left_kernel.row(a)),
                                                       pull_back(right_kernel.row(b)),
                                                       static_cast<int>(j + 1)});
    }

    // Degenerate ambient: append products of each span-vanishing form with a
    // spanning set of independent linear forms. Where a coordinate form would
    // be proportional to the vanishing form, a shifted form keeps the span
    // while preserving the independent-factors invariant.
    if (s < ambient) {
        const Matrix span_kernel = kernel(span);
        for (std::size_t r = 0; r < span_kernel.rows(); ++r) {
            const LinearForm h = span_kernel.row(r);
            for (std::size_t k = 0; k < ambient; ++k) {
                LinearForm var(ambient);
                var[k] = 1;
                if (proportional(h, var)) {
                    const std::size_t m = k == 0 ? 1 : 0;
                    var[m] = 1;
                }
                gens.quadrics.push_back(QuadricProduct{h, var, 0});
            }
        }
    }

    Matrix coeffs(0, monomial_exponents(ambient, 2).size());
    for (const auto& q : gens.quadrics) coeffs.append_row(quadric_coefficients(q.left, q.right));
    gens.degree2_rank = rank(coeffs);
    gens.mu_predicted = mu_count(arr, order);
    return gens;
}

DegreePiece degree_piece(const Arrangement& arr, int degree) {
    if (degree != 2 && degree != 3) throw input_error("degree_piece supports degrees 2 and 3");
    const std::size_t ambient = arr.ambient_rank();
    Matrix constraints(0, monomial_exponents(ambient, degree).size());
    for (const auto& sub : arr.components())
        constraints = vstack(constraints, component_constraints(sub.basis, ambient, degree));
    DegreePiece piece;
    piece.basis = kernel(constraints);
    piece.rank = piece.basis.rows();
    return piece;
}

GenerationReport verify_generation(const Arrangement& arr, const GeneratorSet& gens) {
    GenerationReport report;
    const std::size_t ambient = arr.ambient_rank();
    const DegreePiece dp2 = degree_piece(arr, 2);
    const DegreePiece dp3 = degree_piece(arr, 3);
    report.degree2_rank = dp2.rank;
    report.degree3_rank = dp3.rank;

    Matrix emitted(0, monomial_exponents(ambient, 2).size());
    for (const auto& q : gens.quadrics) emitted.append_row(quadric_coefficients(q.left, q.right));

    report.spans_degree2 = rank(emitted) == dp2.rank &&
                           rank(vstack(emitted, dp2.basis)) == dp2.rank;
    if (!report.spans_degree2 && report.detail.empty())
        report.detail = "emitted quadrics do not span the exact degree-2 piece";

    Matrix degree3(0, monomial_exponents(ambient, 3).size());
    for (std::size_t r = 0; r < dp2.basis.rows(); ++r)
        for (std::size_t k = 0; k < ambient; ++k) {
            LinearForm var(ambient);
            var[k] = 1;
            degree3.append_row(multiply_by_form(dp2.basis.row(r), 2, var));
        }
    report.degree3_surjective = rank(degree3) == dp3.rank &&
                                rank(vstack(degree3, dp3.basis)) == dp3.rank;
    if (!report.degree3_surjective && report.detail.empty())
        report.detail = "linear multiples of the degree-2 piece miss part of degree 3";

    report.all_vanish = true;
    for (std::size_t g = 0; g < gens.quadrics.size() && report.all_vanish; ++g) {
        const auto coeffs = quadric_coefficients(gens.quadrics[g].left, gens.quadrics[g].right);
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const Matrix constraints = component_constraints(arr.component(i).basis, ambient, 2);
            bool vanishes = true;
            for (std::size_t r = 0; r < constraints.rows() && vanishes; ++r) {
                Rational dot = 0;
                for (std::size_t c = 0; c < constraints.cols(); ++c)
                    dot += constraints.at(r, c) * coeffs[c];
                vanishes = dot == 0;
            }
            if (!vanishes) {
                report.all_vanish = false;
                report.detail = "generator " + std::to_string(g) +
                                " does not vanish on component \"" + arr.component(i).name + "\"";
                break;
            }
        }
    }

    // Generators are counted modulo the degree-2 piece of the span's ideal,
    // matching the inside-the-span semantics of mu_count.
    const Matrix span = arr.span();
    Matrix span_ideal_basis(0, monomial_exponents(ambient, 2).size());
    if (span.rows() == 0) {
        span_ideal_basis = Matrix::identity(monomial_exponents(ambient, 2).size());
    } else if (span.rows() < ambient) {
        const Subspace whole{"span", span};
        const DegreePiece span_piece =
            degree_piece(Arrangement::create(ambient, {whole}), 2);
        span_ideal_basis = span_piece.basis;
    }
    report.reduced_generator_count =
        rank(vstack(emitted, span_ideal_basis)) - span_ideal_basis.rows();
    report.count_matches = report.reduced_generator_count == gens.mu_predicted;
    if (!report.count_matches && report.detail.empty())
        report.detail = "reduced generator count " +
                        std::to_string(report.reduced_generator_count) +
                        " differs from the predicted " + std::to_string(gens.mu_predicted);
    return report;
}

}  // namespace smallarr
