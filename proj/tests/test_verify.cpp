#include "test_support.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace gorpts;
using testsupport::pt;
using testsupport::ratios;

namespace {

// Quadric carrying the product of the two coplanar lines through
// S1=[1:1:1:1], S2=[3:3/2:5:7/2] and S1, S3=[3/2:3:4/3:7/5].
Poly coplanar_product_quadric() {
    auto T = [](int a, int b, int c, int d, long long coeff) {
        return Poly::Term{{a, b, c, d}, Rational(coeff)};
    };
    return Poly(4, {T(2, 0, 0, 0, 1120), T(1, 1, 0, 0, -68), T(0, 2, 0, 0, 1),
                    T(1, 0, 1, 0, 1056), T(0, 1, 1, 0, -30), T(0, 0, 2, 0, 216),
                    T(1, 0, 0, 1, -3500), T(0, 1, 0, 1, 110), T(0, 0, 1, 1, -1530),
                    T(0, 0, 0, 2, 2625)});
}

std::vector<ProjPoint> pairwise_products(const Line3& l1, const Line3& l2, std::size_t n) {
    const auto s1 = sample_line_points(l1, n);
    const auto s2 = sample_line_points(l2, n);
    std::vector<ProjPoint> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(hadamard_point(s1[i], s2[i]));
    return out;
}

} // namespace

TEST_CASE("point sets reject duplicates", "[verify]") {
    CHECK_THROWS_WITH(PointSet(3, {pt({1, 1, 1, 1}), pt({2, 2, 2, 2})}),
                      Catch::Matchers::ContainsSubstring("points not distinct"));
    CHECK_THROWS_AS(PointSet(3, {pt({1, 1})}), validation_error);
    CHECK_NOTHROW(PointSet(3, {pt({1, 1, 1, 1}), pt({1, 2, 3, 4})}));
}

TEST_CASE("hilbert function of small sets", "[verify]") {
    const PointSet single(3, {pt({1, 2, 3, 4})});
    for (int d = 0; d <= 5; ++d) CHECK(hilbert_function(single, d) == 1);

    const auto cfg = testsupport::default_config();
    const PointSet grid22(3, product_grid(cfg, 2, 2));
    CHECK(hilbert_function(grid22, 1) == 3); // coplanar
}

TEST_CASE("hilbert function of the reference 12-point set", "[verify]") {
    const PointSet ps(3, testsupport::reference_points());
    const std::vector<long long> expected{1, 4, 8, 11, 12};
    for (int d = 0; d <= 4; ++d) CHECK(hilbert_function(ps, d) == expected[d]);

    const HFReport rep = h_vector_of(ps);
    CHECK(rep.values == expected);
    CHECK(rep.h_vector == std::vector<long long>{1, 3, 4, 3, 1});
    CHECK(rep.stabilized_at == 4);
}

TEST_CASE("h-vector of simple configurations", "[verify]") {
    CHECK(h_vector_of(PointSet(3, {pt({1, 2, 3, 4})})).h_vector ==
          std::vector<long long>{1});

    // four points on the plane x3 = 0, no three collinear
    const PointSet planar(3, {pt({1, 0, 0, 0}), pt({0, 1, 0, 0}), pt({0, 0, 1, 0}),
                              pt({1, 1, 1, 0})});
    CHECK(h_vector_of(planar).h_vector == std::vector<long long>{1, 2, 1});
}

TEST_CASE("h-vector recovery for a generated set", "[verify]") {
    std::mt19937_64 rng(61);
    const auto cfg = testsupport::random_config(rng, 2, 4);
    const HVector h{1, 3, 3, 1};
    const auto gr = gorenstein_points(make_profile(h), cfg);
    const HFReport rep = h_vector_of(PointSet(3, gr.points));
    CHECK(rep.h_vector == h);
    // symmetry of the result
    for (std::size_t i = 0; i < rep.h_vector.size(); ++i)
        CHECK(rep.h_vector[i] == rep.h_vector[rep.h_vector.size() - 1 - i]);
}

TEST_CASE("evaluation-matrix rank is consistent with the transpose kernel", "[verify]") {
    const PointSet ps(3, testsupport::reference_points());
    const int d = 2;
    // rebuild the evaluation matrix by hand and compare both rank routes
    const std::vector<ProjPoint>& pts = ps.points();
    std::vector<std::vector<int>> mons;
    for (int e0 = d; e0 >= 0; --e0)
        for (int e1 = d - e0; e1 >= 0; --e1)
            for (int e2 = d - e0 - e1; e2 >= 0; --e2)
                mons.push_back({e0, e1, e2, d - e0 - e1 - e2});
    QMatrix m(pts.size(), mons.size()), mt(mons.size(), pts.size());
    for (std::size_t r = 0; r < pts.size(); ++r)
        for (std::size_t c = 0; c < mons.size(); ++c) {
            Rational v(1);
            for (int i = 0; i < 4; ++i)
                if (mons[c][i]) v *= pow(pts[r][i], static_cast<unsigned long>(mons[c][i]));
            m.at(r, c) = v;
            mt.at(c, r) = v;
        }
    const long long hf = hilbert_function(ps, d);
    CHECK(hf == static_cast<long long>(rank(m)));
    CHECK(hf == static_cast<long long>(pts.size() - kernel_basis(mt).size()));
}

TEST_CASE("stick figure checker", "[verify]") {
    const auto cfg = testsupport::default_config();
    const StickFigure sf = stick_figure(cfg, 3, 4);
    CHECK(check_stick_figure(sf).pass);

    const StickFigure tiny = stick_figure(cfg, 1, 1);
    CHECK(check_stick_figure(tiny).pass);

    // duplicated line in a hand-built grid
    std::vector<Line3> dup{sf.line(0, 0), sf.line(0, 0)};
    const auto bad = check_line_grid(dup, 1, 2);
    CHECK_FALSE(bad.pass);
    CHECK_THAT(bad.message, Catch::Matchers::ContainsSubstring("duplicate line"));

    // two skew lines placed in the same row must be flagged
    const Line3 e01{LinearForm({Rational(1), Rational(0), Rational(0), Rational(0)}),
                    LinearForm({Rational(0), Rational(1), Rational(0), Rational(0)})};
    const Line3 e23{LinearForm({Rational(0), Rational(0), Rational(1), Rational(0)}),
                    LinearForm({Rational(0), Rational(0), Rational(0), Rational(1)})};
    const auto skew = check_line_grid({e01, e23}, 1, 2);
    CHECK_FALSE(skew.pass);
    CHECK_THAT(skew.message, Catch::Matchers::ContainsSubstring("expected intersection is empty"));
}

TEST_CASE("vanishing tests from the coplanar-lines examples", "[verify]") {
    // first pair: product lies on a quadric
    const ProjPoint s1 = pt({1, 1, 1, 1});
    const ProjPoint s2 = ratios({{3, 1}, {3, 2}, {5, 1}, {7, 2}});
    const ProjPoint s3 = ratios({{3, 2}, {3, 1}, {4, 3}, {7, 5}});
    const Line3 l1 = line_through(s1, s2);
    const Line3 l2 = line_through(s1, s3);

    // the lines agree with their displayed equations
    CHECK(same_line(l1, Line3{LinearForm({Rational(0), Rational(3), Rational(4), Rational(-7)}),
                              LinearForm({Rational(7), Rational(-4), Rational(-3), Rational(0)})}));
    CHECK(same_line(l2, Line3{LinearForm({Rational(0), Rational(1), Rational(24), Rational(-25)}),
                              LinearForm({Rational(10), Rational(-1), Rational(-9), Rational(0)})}));

    const Poly quadric = coplanar_product_quadric();
    const auto prods = pairwise_products(l1, l2, 20);
    CHECK(vanishes_on(quadric, prods));
    CHECK_FALSE(vanishes_on(quadric, std::vector<ProjPoint>{pt({1, 0, 0, 0})}));

    // second pair: carrier lines of a ratio configuration multiply into a plane
    const auto cfg2 = validate_config({pt({1, 2}), pt({2, 1}), pt({1, 3}), pt({2, 5})},
                                      IndexSet({0}), IndexSet({0}));
    CHECK(point_p(cfg2, 1) == ratios({{3, 1}, {3, 2}, {4, 1}, {7, 2}}));
    CHECK(point_q(cfg2, 1) == s3);
    const auto [lp, lq] = carrier_lines(cfg2);
    CHECK(same_line(lp, Line3{LinearForm({Rational(0), Rational(1), Rational(4), Rational(-5)}),
                              LinearForm({Rational(5), Rational(-2), Rational(-3), Rational(0)})}));
    CHECK(same_line(lq, l2));

    const Poly plane(4, {{{1, 0, 0, 0}, Rational(40)},
                         {{0, 1, 0, 0}, Rational(-1)},
                         {{0, 0, 1, 0}, Rational(36)},
                         {{0, 0, 0, 1}, Rational(-75)}});
    CHECK(vanishes_on(plane, pairwise_products(lp, lq, 20)));

    const Poly x0(4, {{{1, 0, 0, 0}, Rational(1)}});
    CHECK(vanishes_on(x0, std::vector<ProjPoint>{pt({0, 1, 1, 1})}));
    CHECK_FALSE(vanishes_on(x0, std::vector<ProjPoint>{pt({1, 1, 1, 1})}));
}
