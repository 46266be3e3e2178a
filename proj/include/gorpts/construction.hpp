#ifndef GORPTS_CONSTRUCTION_HPP
#define GORPTS_CONSTRUCTION_HPP

#include "gorpts/errors.hpp"
#include "gorpts/matrix.hpp"
#include "gorpts/projgeom.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gorpts {

/// Strictly increasing nonnegative integers, starting at 0 and never
/// containing 1. (With 1 present, two grid lines with both indices
/// different could still meet and the grid would stop being a complete
/// intersection.)
class IndexSet {
public:
    explicit IndexSet(std::vector<long long> v) : v_(std::move(v)) {
        if (v_.empty()) throw validation_error("index set is empty");
        if (v_[0] != 0) throw validation_error("index set must start at 0");
        for (std::size_t i = 0; i + 1 < v_.size(); ++i)
            if (v_[i] >= v_[i + 1])
                throw validation_error("index set must be strictly increasing");
        for (long long x : v_)
            if (x == 1) throw validation_error("1 not allowed in index set");
    }

    std::size_t size() const { return v_.size(); }
    long long operator[](std::size_t i) const { return v_[i]; }
    const std::vector<long long>& values() const { return v_; }

private:
    std::vector<long long> v_;
};

/// Four validated ratio points of P^1 plus the two index sets. The whole
/// construction is a function of this and an h-vector.
struct LineConfig {
    std::array<ProjPoint, 4> points; // canonical [alpha_i : beta_i]
    IndexSet ia;
    IndexSet ib;

    const Rational& alpha(std::size_t i) const { return points[i][0]; }
    const Rational& beta(std::size_t i) const { return points[i][1]; }
};

/// True for [alpha:beta] with -beta/alpha a positive integer or the
/// reciprocal of one; exactly the ratios that would put a zero coordinate
/// into some family point.
inline bool in_excluded_ratio_set(const ProjPoint& a) {
    const Rational r = -(a[1] / a[0]);
    if (r.sign() <= 0) return false;
    return r.den() == 1 || r.num() == 1;
}

inline ProjPoint point_p(const LineConfig& cfg, long long k);
inline ProjPoint point_q(const LineConfig& cfg, long long k);

/// Checks every hypothesis the construction needs: no zero coordinates,
/// pairwise distinct ratios, exclusion of the bad ratio set, and (re-derived
/// rather than trusted) that the family points for the given index sets
/// have no zero coordinate.
inline LineConfig validate_config(std::array<ProjPoint, 4> a, IndexSet ia, IndexSet ib) {
    for (std::size_t i = 0; i < 4; ++i) {
        if (a[i].size() != 2)
            throw validation_error("A[" + std::to_string(i) + "] is not a point of P^1");
        if (a[i][0].is_zero() || a[i][1].is_zero())
            throw validation_error("A[" + std::to_string(i) + "] has a zero coordinate");
    }
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            if ((a[i][0] * a[j][1] - a[j][0] * a[i][1]).is_zero())
                throw validation_error("A[" + std::to_string(i) + "] and A[" +
                                       std::to_string(j) + "] are not distinct");
    for (std::size_t i = 0; i < 4; ++i)
        if (in_excluded_ratio_set(a[i]))
            throw validation_error("A[" + std::to_string(i) +
                                   "] lies in the excluded ratio set (-beta/alpha is n or 1/n)");

    LineConfig cfg{std::move(a), std::move(ia), std::move(ib)};
    for (long long k : cfg.ia.values())
        if (has_zero_coordinate(point_p(cfg, k)))
            throw validation_error("P_" + std::to_string(k) + " has a zero coordinate");
    for (long long k : cfg.ib.values())
        if (has_zero_coordinate(point_q(cfg, k)))
            throw validation_error("Q_" + std::to_string(k) + " has a zero coordinate");
    return cfg;
}

/// The line cut out by sum(alpha_i x_i) and sum(beta_i x_i). Avoids the
/// locus of points with two zero coordinates; asserted, not assumed.
inline Line3 base_line(const LineConfig& cfg) {
    std::vector<Rational> fa(4), fb(4);
    for (std::size_t i = 0; i < 4; ++i) {
        fa[i] = cfg.alpha(i);
        fb[i] = cfg.beta(i);
    }
    Line3 l{LinearForm(std::move(fa)), LinearForm(std::move(fb))};

    // No point of the line may have two zero coordinates: for each pair of
    // positions the 2x2 minor of a kernel basis must be nonsingular.
    QMatrix m(2, 4);
    for (std::size_t j = 0; j < 4; ++j) {
        m.at(0, j) = l.form_a()[j];
        m.at(1, j) = l.form_b()[j];
    }
    auto ker = kernel_basis(m);
    if (ker.size() != 2) throw internal_error("base_line: kernel dimension is not 2");
    for (std::size_t s = 0; s < 4; ++s)
        for (std::size_t t = s + 1; t < 4; ++t)
            if ((ker[0][s] * ker[1][t] - ker[0][t] * ker[1][s]).is_zero())
                throw internal_error("base_line: line meets the two-zero-coordinate locus");
    return l;
}

/// P_k = [(alpha_i + k beta_i) / alpha_i]. P_0 = [1:1:1:1].
inline ProjPoint point_p(const LineConfig& cfg, long long k) {
    std::vector<Rational> c(4);
    for (std::size_t i = 0; i < 4; ++i)
        c[i] = (cfg.alpha(i) + Rational(k) * cfg.beta(i)) / cfg.alpha(i);
    return ProjPoint(std::move(c));
}

/// Q_k = [(k alpha_i + beta_i) / beta_i]. Q_0 = [1:1:1:1].
inline ProjPoint point_q(const LineConfig& cfg, long long k) {
    std::vector<Rational> c(4);
    for (std::size_t i = 0; i < 4; ++i)
        c[i] = (Rational(k) * cfg.alpha(i) + cfg.beta(i)) / cfg.beta(i);
    return ProjPoint(std::move(c));
}

/// The two coplanar carrier lines: one through all P_k, one through all
/// Q_k. Both are returned with the shared plane as their first form; the
/// second forms are the alpha- and beta-weighted minor expansions.
inline std::pair<Line3, Line3> carrier_lines(const LineConfig& cfg) {
    QMatrix m(3, 4), n(2, 4);
    for (std::size_t t = 0; t < 4; ++t) {
        m.at(0, t) = cfg.alpha(t) * cfg.beta(t);
        m.at(1, t) = cfg.alpha(t) * cfg.alpha(t);
        m.at(2, t) = cfg.beta(t) * cfg.beta(t);
        n.at(0, t) = cfg.alpha(t);
        n.at(1, t) = cfg.beta(t);
    }

    std::vector<Rational> h(4), f(4, Rational(0)), g(4, Rational(0));
    for (std::size_t t = 0; t < 4; ++t) {
        const std::array<std::size_t, 1> drop{t};
        const Rational mt = minor_det(m, {}, drop);
        h[t] = (t % 2 == 0 ? Rational(-1) : Rational(1)) * cfg.alpha(t) * cfg.beta(t) * mt;
    }
    for (std::size_t t = 1; t < 4; ++t) {
        const std::array<std::size_t, 2> drop{0, t};
        const Rational nt = minor_det(n, {}, drop);
        const Rational sign = (t % 2 == 1) ? Rational(-1) : Rational(1);
        f[t] = sign * cfg.alpha(t) * nt;
        g[t] = sign * cfg.beta(t) * nt;
    }

    Line3 lp{LinearForm(h), LinearForm(f)};
    Line3 lq{LinearForm(h), LinearForm(g)};

    const ProjPoint ones{Rational(1), Rational(1), Rational(1), Rational(1)};
    if (!lp.contains(ones) || !lq.contains(ones))
        throw internal_error("carrier_lines: [1:1:1:1] escaped a carrier line");
    if (same_line(lp, lq))
        throw internal_error("carrier_lines: carrier lines coincide");
    return {std::move(lp), std::move(lq)};
}

namespace detail {

inline void check_grid_extent(const LineConfig& cfg, int a, int b) {
    if (a < 1 || b < 1) throw validation_error("grid extents must be positive");
    if (static_cast<std::size_t>(a) > cfg.ia.size())
        throw validation_error("first index set has fewer than " + std::to_string(a) + " entries");
    if (static_cast<std::size_t>(b) > cfg.ib.size())
        throw validation_error("second index set has fewer than " + std::to_string(b) + " entries");
}

} // namespace detail

/// The a*b products P_u * Q_v over the first a and b index values,
/// row-major. Verified here: pairwise distinct and contained in a plane.
inline std::vector<ProjPoint> product_grid(const LineConfig& cfg, int a, int b) {
    detail::check_grid_extent(cfg, a, b);
    std::vector<ProjPoint> pts;
    pts.reserve(static_cast<std::size_t>(a) * b);
    for (int i = 0; i < a; ++i) {
        const ProjPoint pi = point_p(cfg, cfg.ia[i]);
        for (int j = 0; j < b; ++j)
            pts.push_back(hadamard_point(pi, point_q(cfg, cfg.ib[j])));
    }

    std::vector<ProjPoint> sorted = pts;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
        if (sorted[i] == sorted[i + 1])
            throw internal_error("product_grid: duplicate product point");

    QMatrix coords(pts.size(), 4);
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < 4; ++j) coords.at(i, j) = pts[i][j];
    if (rank(coords) > 3)
        throw internal_error("product_grid: points are not coplanar");
    return pts;
}

/// Ideal generators of the planar grid: the plane h, the product of the
/// transformed second forms of the Q-carrier over the column points, and
/// the same for the P-carrier over the row points. Degrees 1, b, a.
inline std::array<Poly, 3> grid_generators(const LineConfig& cfg, int a, int b) {
    detail::check_grid_extent(cfg, a, b);
    auto [lp, lq] = carrier_lines(cfg);
    const Poly h = Poly::from_form(lp.form_a());
    const Poly f = Poly::from_form(lp.form_b());
    const Poly g = Poly::from_form(lq.form_b());

    std::optional<Poly> fprod, gprod;
    for (int j = 0; j < b; ++j) {
        Poly tj = hadamard_transform(f, point_q(cfg, cfg.ib[j]));
        fprod = fprod ? (*fprod * tj) : tj;
    }
    for (int i = 0; i < a; ++i) {
        Poly ti = hadamard_transform(g, point_p(cfg, cfg.ia[i]));
        gprod = gprod ? (*gprod * ti) : ti;
    }
    return {h.canonicalized(), fprod->canonicalized(), gprod->canonicalized()};
}

/// Grid of lines (P_u * Q_v) * L, one per cell, plus the planes that rule
/// the rows and the columns. Built by stick_figure().
class StickFigure {
public:
    const LineConfig& config() const { return cfg_; }
    const std::vector<long long>& row_values() const { return u_; }
    const std::vector<long long>& col_values() const { return v_; }
    int rows() const { return static_cast<int>(u_.size()); }
    int cols() const { return static_cast<int>(v_.size()); }

    const Line3& line(int i, int j) const { return lines_[static_cast<std::size_t>(i) * cols() + j]; }
    const std::vector<Line3>& lines() const { return lines_; }

    const std::vector<LinearForm>& row_planes() const { return row_planes_; }
    const std::vector<LinearForm>& col_planes() const { return col_planes_; }

    int find_row(long long value) const {
        for (int i = 0; i < rows(); ++i)
            if (u_[i] == value) return i;
        return -1;
    }
    int find_col(long long value) const {
        for (int j = 0; j < cols(); ++j)
            if (v_[j] == value) return j;
        return -1;
    }

private:
    friend StickFigure stick_figure(const LineConfig&, int, int);
    StickFigure(LineConfig cfg, std::vector<long long> u, std::vector<long long> v,
                std::vector<Line3> lines, std::vector<LinearForm> rp, std::vector<LinearForm> cp)
        : cfg_(std::move(cfg)), u_(std::move(u)), v_(std::move(v)), lines_(std::move(lines)),
          row_planes_(std::move(rp)), col_planes_(std::move(cp)) {}

    LineConfig cfg_;
    std::vector<long long> u_, v_;
    std::vector<Line3> lines_;
    std::vector<LinearForm> row_planes_, col_planes_;
};

namespace detail {

// Plane through a family of lines, from two sampled points per line. A
// single line leaves a pencil of planes; the lexicographically smallest
// canonical kernel form is taken (documented as non-canonical).
inline LinearForm family_plane(const std::vector<const Line3*>& family) {
    std::vector<std::vector<Rational>> rows;
    for (const Line3* l : family)
        for (const auto& pt : sample_line_points(*l, 2)) rows.push_back(pt.coords());
    auto ker = kernel_basis(QMatrix::from_rows(rows));
    if (ker.empty()) throw internal_error("ruling plane: family of lines is not coplanar");
    std::vector<LinearForm> forms;
    forms.reserve(ker.size());
    for (auto& k : ker) forms.emplace_back(std::move(k));
    return *std::min_element(forms.begin(), forms.end());
}

} // namespace detail

/// The grid of a*b transformed lines over the first a row and b column
/// index values. Lines are checked pairwise distinct at construction; the
/// full incidence properties are the job of check_stick_figure().
inline StickFigure stick_figure(const LineConfig& cfg, int a, int b) {
    detail::check_grid_extent(cfg, a, b);
    const Line3 base = base_line(cfg);
    std::vector<long long> u(cfg.ia.values().begin(), cfg.ia.values().begin() + a);
    std::vector<long long> v(cfg.ib.values().begin(), cfg.ib.values().begin() + b);

    std::vector<Line3> lines;
    lines.reserve(static_cast<std::size_t>(a) * b);
    for (int i = 0; i < a; ++i) {
        const ProjPoint pi = point_p(cfg, u[i]);
        for (int j = 0; j < b; ++j)
            lines.push_back(transform_line(base, hadamard_point(pi, point_q(cfg, v[j]))));
    }

    std::vector<std::vector<Rational>> ids;
    ids.reserve(lines.size());
    for (const auto& l : lines) ids.push_back(l.span_id());
    std::sort(ids.begin(), ids.end());
    for (std::size_t i = 0; i + 1 < ids.size(); ++i)
        if (ids[i] == ids[i + 1]) throw internal_error("stick_figure: duplicate line");

    std::vector<LinearForm> row_planes, col_planes;
    for (int i = 0; i < a; ++i) {
        std::vector<const Line3*> fam;
        for (int j = 0; j < b; ++j) fam.push_back(&lines[static_cast<std::size_t>(i) * b + j]);
        row_planes.push_back(detail::family_plane(fam));
    }
    for (int j = 0; j < b; ++j) {
        std::vector<const Line3*> fam;
        for (int i = 0; i < a; ++i) fam.push_back(&lines[static_cast<std::size_t>(i) * b + j]);
        col_planes.push_back(detail::family_plane(fam));
    }

    return StickFigure(cfg, std::move(u), std::move(v), std::move(lines),
                       std::move(row_planes), std::move(col_planes));
}

/// Row planes (one per row value) and column planes (one per column
/// value); every line of a family lies in its plane.
inline std::pair<std::vector<LinearForm>, std::vector<LinearForm>>
ruling_planes(const StickFigure& sf) {
    return {sf.row_planes(), sf.col_planes()};
}

namespace detail {

// Pairwise cross products alpha_s beta_t - alpha_t beta_s, indexed by the
// sorted pair.
inline Rational ratio_cross(const LineConfig& cfg, std::size_t s, std::size_t t) {
    return cfg.alpha(s) * cfg.beta(t) - cfg.alpha(t) * cfg.beta(s);
}

inline Rational meet_denominator(const LineConfig& cfg, std::size_t t) {
    Rational d = cfg.alpha(t) * cfg.beta(t);
    for (std::size_t m = 0; m < 4; ++m) {
        if (m == t) continue;
        d *= (m < t) ? ratio_cross(cfg, m, t) : ratio_cross(cfg, t, m);
    }
    return d;
}

} // namespace detail

/// Closed form for the meeting point of the lines with row values i = k
/// and column values j != l.
inline ProjPoint meet_shared_p(const LineConfig& cfg, long long i, long long j, long long l) {
    std::vector<Rational> c(4);
    for (std::size_t t = 0; t < 4; ++t) {
        const Rational num = (cfg.alpha(t) + Rational(i) * cfg.beta(t)) *
                             (Rational(j) * cfg.alpha(t) + cfg.beta(t)) *
                             (Rational(l) * cfg.alpha(t) + cfg.beta(t));
        const Rational sign = (t % 2 == 0) ? Rational(-1) : Rational(1);
        c[t] = sign * num / detail::meet_denominator(cfg, t);
    }
    return ProjPoint(std::move(c));
}

/// Closed form for the meeting point of the lines with column values
/// j = l and row values i != k.
inline ProjPoint meet_shared_q(const LineConfig& cfg, long long i, long long k, long long j) {
    std::vector<Rational> c(4);
    for (std::size_t t = 0; t < 4; ++t) {
        const Rational num = (cfg.alpha(t) + Rational(i) * cfg.beta(t)) *
                             (cfg.alpha(t) + Rational(k) * cfg.beta(t)) *
                             (Rational(j) * cfg.alpha(t) + cfg.beta(t));
        const Rational sign = (t % 2 == 0) ? Rational(-1) : Rational(1);
        c[t] = sign * num / detail::meet_denominator(cfg, t);
    }
    return ProjPoint(std::move(c));
}

/// Intersection of grid lines addressed by their (row value, column value)
/// pairs. Lines sharing exactly one index meet in a single point, computed
/// both from the closed form and from the kernel of the stacked 4x4
/// coefficient system; the two must agree exactly. Lines sharing no index
/// are disjoint, certified by a nonzero 4x4 determinant.
inline std::optional<ProjPoint> intersect_lines(const StickFigure& sf,
                                                std::pair<long long, long long> first,
                                                std::pair<long long, long long> second) {
    const int pi = sf.find_row(first.first), pj = sf.find_col(first.second);
    const int pk = sf.find_row(second.first), pl = sf.find_col(second.second);
    if (pi < 0 || pj < 0 || pk < 0 || pl < 0)
        throw std::invalid_argument("intersect_lines: line is not in the grid");
    if (first == second)
        throw std::invalid_argument("intersect_lines: identical line pair");

    const Line3& l1 = sf.line(pi, pj);
    const Line3& l2 = sf.line(pk, pl);
    QMatrix m(4, 4);
    for (std::size_t c = 0; c < 4; ++c) {
        m.at(0, c) = l1.form_a()[c];
        m.at(1, c) = l1.form_b()[c];
        m.at(2, c) = l2.form_a()[c];
        m.at(3, c) = l2.form_b()[c];
    }

    if (first.first != second.first && first.second != second.second) {
        if (det(m).is_zero())
            throw internal_error("intersect_lines: skew pair has a singular system");
        return std::nullopt;
    }

    const ProjPoint closed =
        (first.first == second.first)
            ? meet_shared_p(sf.config(), first.first, first.second, second.second)
            : meet_shared_q(sf.config(), first.first, second.first, first.second);

    auto ker = kernel_basis(m);
    if (ker.size() != 1)
        throw internal_error("intersect_lines: meeting pair does not have a unique solution");
    if (ProjPoint(ker[0]) != closed)
        throw internal_error("intersect_lines: closed form disagrees with the kernel solution");
    return closed;
}

} // namespace gorpts

#endif
