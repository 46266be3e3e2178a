#include "test_support.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace gorpts;
using testsupport::pt;
using testsupport::ratios;

TEST_CASE("canonical coordinates", "[projgeom]") {
    CHECK(ratios({{-1, 2}, {2, 1}, {-5, 2}, {1, 1}}) == pt({1, -4, 5, -2}));
    CHECK(pt({2, 4, 6, 8}) == pt({1, 2, 3, 4}));
    CHECK(pt({0, -3, 0, 6}) == pt({0, 1, 0, -2}));
    CHECK_THROWS_AS(ProjPoint({Rational(0), Rational(0)}), validation_error);

    // idempotence
    const ProjPoint p = ratios({{-3, 2}, {5, 1}, {-35, 6}, {9, 4}});
    CHECK(ProjPoint(p.coords()) == p);
    CHECK(p == pt({18, -60, 70, -27}));
}

TEST_CASE("hadamard product of points", "[projgeom]") {
    CHECK(hadamard_point(pt({1, 1, 1, 1}), pt({2, 3, 4, 5})) == pt({2, 3, 4, 5}));

    const ProjPoint p1 = pt({2, 3, 4, 5});
    const ProjPoint q1 = ratios({{2, 1}, {3, 2}, {4, 3}, {5, 4}});
    CHECK(hadamard_point(p1, q1) == pt({48, 54, 64, 75}));

    CHECK_THROWS_AS(hadamard_point(pt({1, 0}), pt({0, 1})), validation_error);
    CHECK_THROWS_AS(hadamard_point(pt({1, 0}), pt({1, 1, 1})), std::invalid_argument);
}

TEST_CASE("hadamard product properties", "[projgeom]") {
    std::mt19937_64 rng(23);
    const ProjPoint ones = pt({1, 1, 1, 1});
    for (int it = 0; it < 20; ++it) {
        const ProjPoint a = testsupport::random_positive_point(rng);
        const ProjPoint b = testsupport::random_positive_point(rng);
        const ProjPoint c = testsupport::random_positive_point(rng);
        CHECK(hadamard_point(a, b) == hadamard_point(b, a));
        CHECK(hadamard_point(hadamard_point(a, b), c) == hadamard_point(a, hadamard_point(b, c)));
        CHECK(hadamard_point(ones, a) == a);
        if (b != c) CHECK(hadamard_point(a, b) != hadamard_point(a, c));
    }
}

TEST_CASE("delta index", "[projgeom]") {
    CHECK(delta_index(pt({1, 0, 0, 0})) == 0);
    CHECK(delta_index(pt({1, 1, 1, 1})) == 3);
    CHECK(delta_index(pt({0, 1, 2, 0})) == 1);
    CHECK(has_zero_coordinate(pt({0, 1, 2, 0})));
    CHECK_FALSE(has_zero_coordinate(pt({1, 1, 2, 3})));
}

TEST_CASE("hadamard transform of polynomials", "[projgeom]") {
    const Poly f(4, {{{1, 0, 0, 0}, Rational(1)},
                     {{0, 1, 0, 0}, Rational(1)},
                     {{0, 0, 1, 0}, Rational(1)},
                     {{0, 0, 0, 1}, Rational(1)}});

    CHECK(hadamard_transform(f, pt({1, 1, 1, 1})).terms() == f.terms());

    // Transform by the grid point P_2 * Q_2 of the worked example must give
    // the displayed coefficients a_t^2 b_t / ((a_t + 2 b_t)(2 a_t + b_t)).
    const auto cfg = testsupport::default_config();
    const ProjPoint g22 = hadamard_point(point_p(cfg, 2), point_q(cfg, 2));
    const Poly got = hadamard_transform(f, g22);
    std::vector<Poly::Term> expect;
    for (int t = 0; t < 4; ++t) {
        const Rational a = cfg.alpha(t), b = cfg.beta(t);
        std::vector<int> e(4, 0);
        e[t] = 1;
        expect.push_back({e, a * a * b / ((a + Rational(2) * b) * (Rational(2) * a + b))});
    }
    CHECK(got.terms() == Poly(4, expect).canonicalized().terms());

    const Poly m(4, {{{1, 1, 0, 0}, Rational(1)}});
    const Poly tm = hadamard_transform(m, pt({2, 1, 1, 1}));
    CHECK(tm.terms() == Poly(4, {{{1, 1, 0, 0}, Rational(1, 2)}}).canonicalized().terms());

    CHECK_THROWS_AS(hadamard_transform(f, pt({1, 0, 1, 1})), validation_error);
}

TEST_CASE("polynomial arithmetic and evaluation", "[projgeom]") {
    const Poly f(4, {{{1, 0, 0, 0}, Rational(1)}, {{0, 1, 0, 0}, Rational(1)}});
    CHECK(eval_poly(f, pt({1, -1, 0, 0})) == Rational(0));

    const Poly x0(4, {{{1, 0, 0, 0}, Rational(1)}});
    CHECK(eval_poly(x0, pt({3, 1, 1, 1})) == Rational(3));

    const Poly prod = f * f;
    CHECK(prod.degree() == 2);
    CHECK(prod.terms().size() == 3);
    CHECK(eval_poly(prod, pt({2, 3, 1, 1})) == Rational(25));

    CHECK_THROWS_AS(Poly(4, {{{1, 0, 0, 0}, Rational(1)}, {{2, 0, 0, 0}, Rational(1)}}),
                    std::invalid_argument);

    // cancellation leaves the zero polynomial
    const Poly z(4, {{{1, 0, 0, 0}, Rational(1)}, {{1, 0, 0, 0}, Rational(-1)}});
    CHECK(z.is_zero());
    CHECK(z.str() == "0");
}

TEST_CASE("transform_line keeps membership", "[projgeom]") {
    const auto cfg = testsupport::default_config();
    const Line3 base = base_line(cfg);

    CHECK(same_line(transform_line(base, pt({1, 1, 1, 1})), base));

    const ProjPoint mover = hadamard_point(point_p(cfg, 0), point_q(cfg, 2));
    const Line3 moved = transform_line(base, mover);
    for (const auto& q : sample_line_points(base, 6)) {
        const ProjPoint image = hadamard_point(mover, q);
        CHECK(moved.contains(image));
    }

    CHECK_THROWS_AS(transform_line(base, pt({1, 0, 1, 1})), validation_error);
}

TEST_CASE("transform_line preserves line dimension", "[projgeom]") {
    std::mt19937_64 rng(29);
    const auto cfg = testsupport::default_config();
    const Line3 base = base_line(cfg);
    for (int it = 0; it < 15; ++it) {
        const ProjPoint p = testsupport::random_positive_point(rng);
        const Line3 image = transform_line(base, p); // ctor enforces independence
        CHECK(same_line(transform_line(image, pt({1, 1, 1, 1})), image));
        for (const auto& q : sample_line_points(base, 3))
            CHECK(image.contains(hadamard_point(p, q)));
    }
}

TEST_CASE("line through two points", "[projgeom]") {
    const Line3 axis = line_through(pt({1, 0, 0, 0}), pt({0, 1, 0, 0}));
    // the span of {x2, x3}, forms emitted in lexicographic order
    CHECK(axis.form_a() == LinearForm({Rational(0), Rational(0), Rational(0), Rational(1)}));
    CHECK(axis.form_b() == LinearForm({Rational(0), Rational(0), Rational(1), Rational(0)}));

    const auto cfg = testsupport::default_config();
    const auto [lp, lq] = carrier_lines(cfg);
    CHECK(same_line(line_through(point_p(cfg, 0), point_p(cfg, 1)), lp));

    std::mt19937_64 rng(31);
    for (int it = 0; it < 15; ++it) {
        const ProjPoint a = testsupport::random_positive_point(rng);
        ProjPoint b = testsupport::random_positive_point(rng);
        if (a == b) continue;
        const Line3 l = line_through(a, b);
        CHECK(l.contains(a));
        CHECK(l.contains(b));
    }

    CHECK_THROWS_AS(line_through(pt({1, 2, 3, 4}), pt({2, 4, 6, 8})), validation_error);
}

TEST_CASE("sampling points on a line", "[projgeom]") {
    const auto cfg = testsupport::default_config();
    const Line3 base = base_line(cfg);

    CHECK(sample_line_points(base, 0).empty());

    const auto one = sample_line_points(base, 1);
    REQUIRE(one.size() == 1);
    CHECK(base.contains(one[0]));

    const auto five = sample_line_points(base, 5);
    REQUIRE(five.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(base.contains(five[i]));
        for (std::size_t j = i + 1; j < 5; ++j) CHECK(five[i] != five[j]);
    }
}

TEST_CASE("line construction rejects dependent forms", "[projgeom]") {
    const LinearForm f({Rational(1), Rational(2), Rational(3), Rational(4)});
    CHECK_THROWS_AS(Line3(f, LinearForm({Rational(2), Rational(4), Rational(6), Rational(8)})),
                    validation_error);
}
