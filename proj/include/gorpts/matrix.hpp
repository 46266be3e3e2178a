#ifndef GORPTS_MATRIX_HPP
#define GORPTS_MATRIX_HPP

#include "gorpts/errors.hpp"
#include "gorpts/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gorpts {

/// Dense matrix of Rationals, row-major. Immutable use is the norm; the
/// elimination routines below work on copies.
class QMatrix {
public:
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    QMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
        : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
        e_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_)
                throw std::invalid_argument("QMatrix: ragged rows");
            e_.insert(e_.end(), r.begin(), r.end());
        }
    }

    static QMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
        QMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_)
                throw std::invalid_argument("QMatrix: ragged rows");
            for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Rational& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> e_;
};

namespace detail {

// Clears denominators row by row; scales[i] is the factor row i was
// multiplied by. Row scaling leaves rank and kernel unchanged and scales
// det by the product of the factors.
inline std::vector<std::vector<mpz_class>> integer_rows(const QMatrix& m,
                                                        std::vector<mpz_class>& scales) {
    std::vector<std::vector<mpz_class>> w(m.rows(), std::vector<mpz_class>(m.cols()));
    scales.assign(m.rows(), mpz_class(1));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        mpz_class l(1);
        for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, m.at(i, j).den());
        for (std::size_t j = 0; j < m.cols(); ++j)
            w[i][j] = m.at(i, j).num() * mpz_class(l / m.at(i, j).den());
        scales[i] = l;
    }
    return w;
}

inline void divexact(mpz_class& v, const mpz_class& d) {
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
}

} // namespace detail

/// Exact determinant via fraction-free (Bareiss) elimination. Pivot is the
/// first nonzero entry in column order; exact arithmetic needs no
/// magnitude-based pivoting.
inline Rational det(const QMatrix& m) {
    if (!m.square()) throw std::invalid_argument("det: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0) return Rational(1);

    std::vector<mpz_class> scales;
    auto w = detail::integer_rows(m, scales);

    int sign = 1;
    mpz_class prev(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && w[p][k] == 0) ++p;
        if (p == n) return Rational(0);
        if (p != k) {
            std::swap(w[p], w[k]);
            sign = -sign;
        }
        if (k + 1 == n) break;
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                w[i][j] = w[i][j] * w[k][k] - w[i][k] * w[k][j];
                detail::divexact(w[i][j], prev);
            }
            w[i][k] = 0;
        }
        prev = w[k][k];
    }

    mpz_class den(1);
    for (const auto& s : scales) den *= s;
    return Rational(sign > 0 ? w[n - 1][n - 1] : mpz_class(-w[n - 1][n - 1]), den);
}

/// Exact rank over the rationals, fraction-free elimination with column
/// skipping.
inline std::size_t rank(const QMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0) return 0;

    std::vector<mpz_class> scales;
    auto w = detail::integer_rows(m, scales);

    std::size_t r = 0;
    mpz_class prev(1);
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && w[p][c] == 0) ++p;
        if (p == rows) continue;
        if (p != r) std::swap(w[p], w[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                w[i][j] = w[i][j] * w[r][c] - w[i][c] * w[r][j];
                detail::divexact(w[i][j], prev);
            }
            w[i][c] = 0;
        }
        prev = w[r][c];
        ++r;
    }
    return r;
}

/// Basis of the right null space. Empty when rank = cols. Deterministic:
/// Gauss-Jordan with first-nonzero pivots, one basis vector per free
/// column in increasing column order.
inline std::vector<std::vector<Rational>> kernel_basis(const QMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Rational>> w(rows, std::vector<Rational>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) w[i][j] = m.at(i, j);

    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && w[p][c].is_zero()) ++p;
        if (p == rows) continue;
        if (p != r) std::swap(w[p], w[r]);
        const Rational inv = Rational(1) / w[r][c];
        for (std::size_t j = c; j < cols; ++j) w[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || w[i][c].is_zero()) continue;
            const Rational f = w[i][c];
            for (std::size_t j = c; j < cols; ++j) w[i][j] -= f * w[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }

    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_col) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[fc] = Rational(1);
        for (std::size_t pr = 0; pr < pivot_col.size(); ++pr)
            v[pivot_col[pr]] = -w[pr][fc];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Determinant of the submatrix with the listed rows and columns removed
/// (0-based). The remaining matrix must be square.
inline Rational minor_det(const QMatrix& m, std::span<const std::size_t> drop_rows,
                          std::span<const std::size_t> drop_cols) {
    std::vector<bool> rkeep(m.rows(), true), ckeep(m.cols(), true);
    for (auto i : drop_rows) {
        if (i >= m.rows() || !rkeep[i])
            throw std::invalid_argument("minor_det: bad row index");
        rkeep[i] = false;
    }
    for (auto j : drop_cols) {
        if (j >= m.cols() || !ckeep[j])
            throw std::invalid_argument("minor_det: bad column index");
        ckeep[j] = false;
    }
    const std::size_t nr = m.rows() - drop_rows.size();
    const std::size_t nc = m.cols() - drop_cols.size();
    if (nr != nc) throw std::invalid_argument("minor_det: residue is not square");

    QMatrix sub(nr, nc);
    std::size_t si = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (!rkeep[i]) continue;
        std::size_t sj = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!ckeep[j]) continue;
            sub.at(si, sj) = m.at(i, j);
            ++sj;
        }
        ++si;
    }
    return det(sub);
}

} // namespace gorpts

#endif
