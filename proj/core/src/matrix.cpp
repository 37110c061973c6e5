#include "smallarr/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "smallarr/errors.hpp"
#include "smallarr/rng.hpp"

namespace smallarr {

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Int(text));
        }
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) throw input_error("rational with zero denominator: " + text);
        if (den < 0) {  // the backing type requires a positive denominator
            num = -num;
            den = -den;
        }
        return Rational(num, den);
    } catch (const input_error&) {
        throw;
    } catch (const std::exception&) {
        throw input_error("malformed rational literal: \"" + text + "\"");
    }
}

std::string rational_to_string(const Rational& q) {
    std::ostringstream out;
    out << numerator(q);
    if (denominator(q) != 1) out << '/' << denominator(q);
    return out.str();
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty()) return Matrix();
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_)
            throw input_error("ragged rows: row " + std::to_string(r) + " has " +
                              std::to_string(rows[r].size()) + " entries, expected " +
                              std::to_string(m.cols_));
        for (std::size_t c = 0; c < m.cols_; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

std::vector<Rational> Matrix::row(std::size_t r) const {
    return std::vector<Rational>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                                 data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void Matrix::append_row(const std::vector<Rational>& v) {
    if (rows_ == 0 && cols_ == 0) cols_ = v.size();
    if (v.size() != cols_) throw input_error("appended row has wrong length");
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
}

bool Matrix::is_zero_row(std::size_t r) const {
    for (std::size_t c = 0; c < cols_; ++c)
        if (at(r, c) != 0) return false;
    return true;
}

Matrix rref(const Matrix& m) {
    Matrix a = m;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows && a.at(sel, col) == 0) ++sel;
        if (sel == rows) continue;
        if (sel != pivot_row)
            for (std::size_t c = 0; c < cols; ++c) std::swap(a.at(sel, c), a.at(pivot_row, c));
        const Rational inv = Rational(1) / a.at(pivot_row, col);
        for (std::size_t c = col; c < cols; ++c) a.at(pivot_row, c) *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pivot_row || a.at(r, col) == 0) continue;
            const Rational factor = a.at(r, col);
            for (std::size_t c = col; c < cols; ++c) a.at(r, c) -= factor * a.at(pivot_row, c);
        }
        ++pivot_row;
    }
    // pivot_row is the rank; rows below it are zero after elimination.
    Matrix trimmed(pivot_row, cols);
    for (std::size_t r = 0; r < pivot_row; ++r)
        for (std::size_t c = 0; c < cols; ++c) trimmed.at(r, c) = a.at(r, c);
    return trimmed;
}

std::size_t rank(const Matrix& m) { return rref(m).rows(); }

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols() && a.rows() != 0 && b.rows() != 0)
        throw input_error("dimension mismatch: " + std::to_string(a.cols()) + " vs " +
                          std::to_string(b.cols()) + " columns");
    const std::size_t cols = a.rows() != 0 || a.cols() != 0 ? a.cols() : b.cols();
    Matrix out(a.rows() + b.rows(), cols);
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < cols; ++c) out.at(r, c) = a.at(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < cols; ++c) out.at(a.rows() + r, c) = b.at(r, c);
    return out;
}

Matrix row_space_sum(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw input_error("dimension mismatch in row_space_sum");
    return rref(vstack(a, b));
}

Matrix kernel(const Matrix& m) {
    const Matrix r = rref(m);
    const std::size_t cols = m.cols();
    std::vector<std::size_t> pivot_col(r.rows());
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t i = 0; i < r.rows(); ++i) {
        std::size_t c = 0;
        while (c < cols && r.at(i, c) == 0) ++c;
        pivot_col[i] = c;
        is_pivot[c] = true;
    }
    Matrix basis(0, cols);
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols);
        v[free] = 1;
        for (std::size_t i = 0; i < r.rows(); ++i) v[pivot_col[i]] = -r.at(i, free);
        basis.append_row(v);
    }
    if (basis.rows() == 0) return Matrix::empty(cols);
    return rref(basis);
}

Matrix row_space_intersect(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw input_error("dimension mismatch in row_space_intersect");
    return kernel(vstack(kernel(a), kernel(b)));
}

bool row_space_contains(const Matrix& outer, const Matrix& inner) {
    if (inner.rows() == 0) return true;
    return rank(vstack(outer, inner)) == rank(outer);
}

bool same_row_space(const Matrix& a, const Matrix& b) { return rref(a) == rref(b); }

Matrix complement_within(const Matrix& l, const Matrix& m) {
    if (!row_space_contains(l, m))
        throw input_error("complement_within: inner space is not contained in the outer space");
    const Matrix lc = rref(l);
    Matrix current = rref(m);
    const std::size_t target = lc.rows();
    Matrix chosen(0, l.cols());
    std::size_t cur_rank = current.rows();
    for (std::size_t r = 0; r < lc.rows() && cur_rank < target; ++r) {
        Matrix trial = current;
        trial.append_row(lc.row(r));
        const std::size_t new_rank = rank(trial);
        if (new_rank > cur_rank) {
            chosen.append_row(lc.row(r));
            current = rref(trial);
            cur_rank = new_rank;
        }
    }
    return rref(chosen);
}

std::vector<Rational> combine_rows(const Matrix& m, const std::vector<Rational>& coeffs) {
    if (coeffs.size() != m.rows()) throw input_error("coefficient count does not match row count");
    std::vector<Rational> out(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (coeffs[r] == 0) continue;
        for (std::size_t c = 0; c < m.cols(); ++c) out[c] += coeffs[r] * m.at(r, c);
    }
    return out;
}

std::vector<Rational> random_point(const Matrix& l, std::uint64_t seed, int bound) {
    if (l.rows() == 0) throw input_error("random_point: zero space has no nonzero points");
    Rng rng(seed);
    for (;;) {
        std::vector<Rational> coeffs(l.rows());
        bool nonzero = false;
        for (auto& c : coeffs) {
            c = rng.rational(bound);
            if (c != 0) nonzero = true;
        }
        if (!nonzero) continue;
        return combine_rows(l, coeffs);
    }
}

}  // namespace smallarr
