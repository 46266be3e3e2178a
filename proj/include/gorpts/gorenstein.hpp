#ifndef GORPTS_GORENSTEIN_HPP
#define GORPTS_GORENSTEIN_HPP

#include "gorpts/construction.hpp"
#include "gorpts/errors.hpp"
#include "gorpts/hvector.hpp"
#include "gorpts/projgeom.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace gorpts {

/// The assembled point set, one label per point telling which two grid
/// lines it is the crossing of: "i{j,k}" for a crossing inside row i,
/// "{i,k}j" for one inside column j (positional indices).
struct GorensteinResult {
    std::vector<ProjPoint> points;
    std::vector<std::string> labels;
    HVector h;
    std::vector<std::pair<int, int>> c1_pairs;
};

/// Grid positions of the sublattice with h-vector a: in row i the first
/// a_i columns, i = 0..t.
inline std::vector<std::pair<int, int>> select_c1(const SIProfile& p) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i <= p.t; ++i) {
        if (p.a[i] > p.s - p.t + 1)
            throw validation_error("select_c1: a_" + std::to_string(i) + " exceeds s-t+1");
        for (long long j = 0; j < p.a[i]; ++j)
            pairs.emplace_back(i, static_cast<int>(j));
    }
    return pairs;
}

/// Point count predicted by the index ranges; must equal sum(h).
inline long long expected_count(const SIProfile& p) {
    long long n = 0;
    for (int i = 0; i <= p.t; ++i) n += p.a[i] * (p.s - p.t + 2 - p.a[i]);
    for (int i = 0; i <= p.t; ++i)
        for (int k = i + 1; k <= p.t; ++k) n += std::llabs(p.a[i] - p.a[k]);
    return n;
}

namespace detail {

inline std::string row_label(int i, long long j, long long k) {
    std::ostringstream os;
    os << i << '{' << j << ',' << k << '}';
    return os.str();
}

inline std::string col_label(int i, int k, long long j) {
    std::ostringstream os;
    os << '{' << i << ',' << k << '}' << j;
    return os.str();
}

} // namespace detail

/// The crossing points of the selected sublattice with its residual inside
/// the (t+1) x (s-t+2) grid of lines. Every point is produced by the
/// closed formula and cross-checked against the solved line intersection;
/// counts, distinctness and nonzero coordinates are all verified before
/// returning.
inline GorensteinResult gorenstein_points(const SIProfile& profile, const LineConfig& cfg) {
    const int rows = profile.t + 1;
    const int cols = profile.s - profile.t + 2;
    if (cfg.ia.size() < static_cast<std::size_t>(rows))
        throw validation_error("first index set needs at least " + std::to_string(rows) +
                               " entries for this h-vector");
    if (cfg.ib.size() < static_cast<std::size_t>(cols))
        throw validation_error("second index set needs at least " + std::to_string(cols) +
                               " entries for this h-vector");

    const StickFigure sf = stick_figure(cfg, rows, cols);
    const auto& u = sf.row_values();
    const auto& v = sf.col_values();

    GorensteinResult out;
    out.h = profile.h;
    out.c1_pairs = select_c1(profile);

    for (int i = 0; i <= profile.t; ++i)
        for (long long j = 0; j < profile.a[i]; ++j)
            for (long long k = profile.a[i]; k <= profile.s - profile.t + 1; ++k) {
                auto pt = intersect_lines(sf, {u[i], v[j]}, {u[i], v[k]});
                if (!pt) throw internal_error("gorenstein_points: expected row crossing");
                out.points.push_back(std::move(*pt));
                out.labels.push_back(detail::row_label(i, j, k));
            }
    for (int i = 0; i <= profile.t; ++i)
        for (int k = i + 1; k <= profile.t; ++k) {
            const long long lo = std::min(profile.a[i], profile.a[k]);
            const long long hi = std::max(profile.a[i], profile.a[k]) - 1;
            for (long long j = lo; j <= hi; ++j) {
                auto pt = intersect_lines(sf, {u[i], v[j]}, {u[k], v[j]});
                if (!pt) throw internal_error("gorenstein_points: expected column crossing");
                out.points.push_back(std::move(*pt));
                out.labels.push_back(detail::col_label(i, k, j));
            }
        }

    long long total = 0;
    for (long long x : profile.h) total += x;
    if (static_cast<long long>(out.points.size()) != total ||
        total != expected_count(profile))
        throw internal_error("gorenstein_points: point count does not match sum(h)");

    std::vector<ProjPoint> sorted = out.points;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
        if (sorted[i] == sorted[i + 1])
            throw internal_error("gorenstein_points: duplicate point");
    for (const auto& p : out.points)
        if (has_zero_coordinate(p))
            throw internal_error("gorenstein_points: point with a zero coordinate");

    return out;
}

} // namespace gorpts

#endif
