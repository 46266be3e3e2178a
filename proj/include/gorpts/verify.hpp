#ifndef GORPTS_VERIFY_HPP
#define GORPTS_VERIFY_HPP

#include "gorpts/construction.hpp"
#include "gorpts/errors.hpp"
#include "gorpts/hvector.hpp"
#include "gorpts/matrix.hpp"
#include "gorpts/projgeom.hpp"

#include <cstddef>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace gorpts {

/// Finite set of pairwise distinct points, all in the same ambient P^n.
class PointSet {
public:
    PointSet(std::size_t ambient_dim, std::vector<ProjPoint> pts)
        : n_(ambient_dim), pts_(std::move(pts)) {
        for (const auto& p : pts_)
            if (p.size() != n_ + 1)
                throw validation_error("PointSet: point of wrong ambient dimension");
        std::vector<ProjPoint> sorted = pts_;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
            if (sorted[i] == sorted[i + 1])
                throw validation_error("points not distinct");
    }

    std::size_t ambient_dim() const { return n_; }
    std::size_t size() const { return pts_.size(); }
    const std::vector<ProjPoint>& points() const { return pts_; }

private:
    std::size_t n_;
    std::vector<ProjPoint> pts_;
};

namespace detail {

// Exponent vectors of total degree d over nv variables, descending
// lexicographic.
inline void monomials_rec(int nv, int d, std::vector<int>& cur,
                          std::vector<std::vector<int>>& out) {
    const int pos = static_cast<int>(cur.size());
    if (pos == nv - 1) {
        cur.push_back(d);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int e = d; e >= 0; --e) {
        cur.push_back(e);
        monomials_rec(nv, d - e, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<int>> monomials(int nv, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    monomials_rec(nv, d, cur, out);
    return out;
}

} // namespace detail

/// Value of the Hilbert function at d: the rank of the evaluation matrix
/// with one row per point and one column per degree-d monomial
/// (descending lex order).
inline long long hilbert_function(const PointSet& ps, int d) {
    if (d < 0) return 0;
    const int nv = static_cast<int>(ps.ambient_dim()) + 1;
    const auto mons = detail::monomials(nv, d);

    QMatrix m(ps.size(), mons.size());
    for (std::size_t r = 0; r < ps.size(); ++r) {
        const auto& p = ps.points()[r];
        // Canonical coordinates are integers; power tables keep the
        // evaluation in mpz.
        std::vector<std::vector<mpz_class>> powers(nv);
        for (int i = 0; i < nv; ++i) {
            powers[i].resize(d + 1);
            powers[i][0] = 1;
            for (int e = 1; e <= d; ++e) powers[i][e] = powers[i][e - 1] * p[i].num();
        }
        for (std::size_t c = 0; c < mons.size(); ++c) {
            mpz_class v(1);
            for (int i = 0; i < nv; ++i)
                if (mons[c][i]) v *= powers[i][mons[c][i]];
            m.at(r, c) = Rational(v);
        }
    }
    return static_cast<long long>(rank(m));
}

/// Hilbert function values up to stabilization at |points|, plus the
/// h-vector as first differences.
struct HFReport {
    std::vector<long long> values; // HF(0), HF(1), ..., HF(stabilized_at)
    std::vector<long long> h_vector;
    int stabilized_at = 0;
};

inline HFReport h_vector_of(const PointSet& ps) {
    const long long n = static_cast<long long>(ps.size());
    HFReport rep;
    long long prev = 0;
    for (int d = 0;; ++d) {
        // Distinct points stabilize by degree |points| - 1; the cap only
        // guards against bugs.
        if (d > static_cast<int>(ps.size()))
            throw internal_error("h_vector_of: Hilbert function failed to stabilize");
        const long long hf = hilbert_function(ps, d);
        if (hf < prev || hf > n)
            throw internal_error("h_vector_of: Hilbert function is not monotone into |points|");
        rep.values.push_back(hf);
        rep.h_vector.push_back(hf - prev);
        prev = hf;
        if (hf == n) {
            rep.stabilized_at = d;
            break;
        }
    }
    return rep;
}

struct StickCheckReport {
    bool pass = true;
    std::string message; // first counterexample when pass is false
};

/// Exhaustive incidence check on a rectangular grid of lines: every pair
/// must meet exactly when it shares a row or a column (and never be the
/// same line), and no three lines may pass through a common point.
inline StickCheckReport check_line_grid(const std::vector<Line3>& lines, int rows, int cols) {
    const std::size_t n = lines.size();
    if (n != static_cast<std::size_t>(rows) * cols)
        throw std::invalid_argument("check_line_grid: grid shape mismatch");

    auto cell = [&](std::size_t idx) {
        return std::pair<int, int>(static_cast<int>(idx) / cols, static_cast<int>(idx) % cols);
    };
    auto fail = [](std::string msg) { return StickCheckReport{false, std::move(msg)}; };

    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) {
            QMatrix m(4, 4);
            for (std::size_t c = 0; c < 4; ++c) {
                m.at(0, c) = lines[p].form_a()[c];
                m.at(1, c) = lines[p].form_b()[c];
                m.at(2, c) = lines[q].form_a()[c];
                m.at(3, c) = lines[q].form_b()[c];
            }
            const std::size_t r = rank(m);
            const auto [pi, pj] = cell(p);
            const auto [qi, qj] = cell(q);
            std::ostringstream at;
            at << "lines (" << pi << ',' << pj << ") and (" << qi << ',' << qj << ')';
            if (r == 2) return fail(at.str() + ": duplicate line");
            const bool meets = r == 3;
            const bool expected = (pi == qi) != (pj == qj);
            if (meets != expected)
                return fail(at.str() + (meets ? ": unexpected intersection" : ": expected intersection is empty"));
        }

    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q)
            for (std::size_t r3 = q + 1; r3 < n; ++r3) {
                QMatrix m(6, 4);
                const Line3* ls[3] = {&lines[p], &lines[q], &lines[r3]};
                for (int li = 0; li < 3; ++li)
                    for (std::size_t c = 0; c < 4; ++c) {
                        m.at(2 * li, c) = ls[li]->form_a()[c];
                        m.at(2 * li + 1, c) = ls[li]->form_b()[c];
                    }
                if (rank(m) <= 3) {
                    const auto [ai, aj] = cell(p);
                    const auto [bi, bj] = cell(q);
                    const auto [ci, cj] = cell(r3);
                    std::ostringstream os;
                    os << "lines (" << ai << ',' << aj << "), (" << bi << ',' << bj
                       << "), (" << ci << ',' << cj << ") share a point";
                    return fail(os.str());
                }
            }

    return {};
}

/// check_line_grid plus the closed-form/solver agreement on every meeting
/// pair of the figure.
inline StickCheckReport check_stick_figure(const StickFigure& sf) {
    StickCheckReport rep = check_line_grid(sf.lines(), sf.rows(), sf.cols());
    if (!rep.pass) return rep;
    const auto& u = sf.row_values();
    const auto& v = sf.col_values();
    try {
        for (int i = 0; i < sf.rows(); ++i)
            for (int j = 0; j < sf.cols(); ++j)
                for (int l = j + 1; l < sf.cols(); ++l)
                    intersect_lines(sf, {u[i], v[j]}, {u[i], v[l]});
        for (int j = 0; j < sf.cols(); ++j)
            for (int i = 0; i < sf.rows(); ++i)
                for (int k = i + 1; k < sf.rows(); ++k)
                    intersect_lines(sf, {u[i], v[j]}, {u[k], v[j]});
    } catch (const internal_error& e) {
        return {false, e.what()};
    }
    return {};
}

inline bool vanishes_on(const Poly& f, std::span<const ProjPoint> pts) {
    for (const auto& p : pts)
        if (!f.eval(p).is_zero()) return false;
    return true;
}

} // namespace gorpts

#endif
