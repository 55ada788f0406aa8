#include <doctest.h>

#include "fixtures.hpp"

using namespace strongmatch;
using namespace smtest;

namespace {
const double kS3 = std::sqrt(3.0);
}

TEST_CASE("smallest homothets") {
    SUBCASE("disk has the segment as diameter") {
        auto d = smallest_homothet<double>({0, 0}, {2, 0}, ShapeKind::Disk);
        CHECK(d.center.x == doctest::Approx(1));
        CHECK(d.center.y == doctest::Approx(0));
        CHECK(d.radius_double() == doctest::Approx(1));
        CHECK(d.scale() == doctest::Approx(1));
    }
    SUBCASE("downward triangle of a horizontal pair") {
        auto t = smallest_homothet<double>({0, 0}, {1, 0}, ShapeKind::TriDown);
        CHECK(t.a == doctest::Approx(0));
        CHECK(t.b == doctest::Approx(0));
        CHECK(t.c == doctest::Approx(kS3 / 2));
        CHECK(t.scale() == doctest::Approx(kS3 / 2));
        // side length 1, area sigma^2/sqrt3 = sqrt3/4
        auto vs = tri_vertices(t);
        double side = std::hypot(vs[0].x - vs[1].x, vs[0].y - vs[1].y);
        CHECK(side == doctest::Approx(1));
        double sigma = t.scale();
        CHECK(sigma * sigma / kS3 == doctest::Approx(kS3 / 4));
    }
    SUBCASE("square family and canonical placement") {
        auto f = square_family<double>({0, 0}, {3, 1});
        CHECK(f.x_dominant);
        CHECK(f.side == doctest::Approx(3));
        CHECK(f.fixed_lo == doctest::Approx(0));
        CHECK(f.free_lo == doctest::Approx(-2));
        CHECK(f.free_hi == doctest::Approx(0));
        auto q = smallest_homothet<double>({0, 0}, {3, 1}, ShapeKind::Square);
        CHECK(q.x0 == doctest::Approx(0));
        CHECK(q.y0 == doctest::Approx(-1));
        CHECK(q.side == doctest::Approx(3));
    }
    SUBCASE("degenerate pair is an error") {
        CHECK_THROWS_AS(smallest_homothet<double>({1, 1}, {1, 1}, ShapeKind::Disk),
                        std::invalid_argument);
    }
    SUBCASE("both endpoints on the closed boundary, never inside") {
        DetRng rng(7);
        for (int it = 0; it < 200; ++it) {
            Pt<double> p{rng.uniform01(), rng.uniform01()};
            Pt<double> q{rng.uniform01(), rng.uniform01()};
            if (same_point(p, q)) continue;
            for (auto kind :
                 {ShapeKind::Disk, ShapeKind::TriDown, ShapeKind::TriUp, ShapeKind::Square}) {
                auto h = smallest_homothet(p, q, kind);
                CHECK(on_boundary(h, p));
                CHECK(on_boundary(h, q));
            }
        }
    }
}

TEST_CASE("containment predicates") {
    auto d = smallest_homothet<double>({0, 0}, {2, 0}, ShapeKind::Disk);  // disk((1,0),1)
    CHECK(contains_open(d, Pt<double>{1, 0.5}));
    auto t = Homothet<double>::tri_down(0, 0, kS3 / 2);
    CHECK(contains_closed(t, Pt<double>{0.5, 0}));
    CHECK(!contains_open(t, Pt<double>{0.5, 0}));  // on the top side
    auto q = Homothet<double>::square(0, 0, 1);
    CHECK(!contains_closed(q, Pt<double>{2, 2}));
}

TEST_CASE("containment shrinks the scale (Observation 2)") {
    DetRng rng(11);
    for (auto kind : {ShapeKind::Disk, ShapeKind::TriDown, ShapeKind::TriUp, ShapeKind::Square}) {
        int found = 0;
        while (found < 60) {
            Pt<double> p{rng.uniform01(), rng.uniform01()};
            Pt<double> q{rng.uniform01(), rng.uniform01()};
            Pt<double> r{rng.uniform01(), rng.uniform01()};
            if (same_point(p, q)) continue;
            auto h = smallest_homothet(p, q, kind);
            if (!contains_open(h, r)) continue;
            ++found;
            CHECK(smallest_homothet(p, r, kind).scale() < h.scale());
            CHECK(smallest_homothet(q, r, kind).scale() < h.scale());
        }
    }
}

TEST_CASE("intersection predicates") {
    SUBCASE("triangles on a line") {
        auto t1 = smallest_homothet<double>({0, 0}, {1, 0}, ShapeKind::TriDown);
        auto t2 = smallest_homothet<double>({3, 0}, {4, 0}, ShapeKind::TriDown);
        auto t3 = smallest_homothet<double>({1, 0}, {2, 0}, ShapeKind::TriDown);
        // min-sum -sqrt3 < 0: disjoint
        CHECK(!intersects(t1, t2));
        // min-sum 0: shared point (1,0)
        CHECK(intersects(t1, t3));
        CHECK(!interiors_intersect(t1, t3));
    }
    SUBCASE("closed disk touch") {
        auto d1 = Homothet<double>::disk({0.5, 0}, 0.25);
        auto d2 = Homothet<double>::disk({2, 0}, 1.0);
        CHECK(intersects(d1, d2));  // distance 1.5 == r1 + r2
        CHECK(!interiors_intersect(d1, d2));
    }
    SUBCASE("symmetry and self intersection") {
        DetRng rng(3);
        for (int it = 0; it < 100; ++it) {
            Pt<double> p{rng.uniform01(), rng.uniform01()};
            Pt<double> q{rng.uniform01(), rng.uniform01()};
            Pt<double> r{rng.uniform01(), rng.uniform01()};
            Pt<double> s{rng.uniform01(), rng.uniform01()};
            for (auto kind : {ShapeKind::Disk, ShapeKind::TriDown, ShapeKind::Square}) {
                auto h1 = smallest_homothet(p, q, kind);
                auto h2 = smallest_homothet(r, s, kind);
                CHECK(intersects(h1, h2) == intersects(h2, h1));
                CHECK(intersects(h1, h1));
            }
        }
    }
    SUBCASE("mixed families are rejected") {
        auto d = Homothet<double>::disk({0, 0}, 1);
        auto q = Homothet<double>::square(0, 0, 1);
        CHECK_THROWS_AS(intersects(d, q), std::invalid_argument);
    }
}

TEST_CASE("triangle intersection agrees with a sampling oracle") {
    DetRng rng(23);
    int checked = 0;
    while (checked < 1000) {
        Pt<double> p{rng.uniform01(), rng.uniform01()};
        Pt<double> q{2 * rng.uniform01(), 2 * rng.uniform01()};
        Pt<double> r{2 * rng.uniform01(), rng.uniform01()};
        Pt<double> s{rng.uniform01(), 2 * rng.uniform01()};
        if (same_point(p, q) || same_point(r, s)) continue;
        bool down1 = (rng.next() & 1) != 0, down2 = (rng.next() & 1) != 0;
        auto h1 = smallest_homothet(p, q, down1 ? ShapeKind::TriDown : ShapeKind::TriUp);
        auto h2 = smallest_homothet(r, s, down2 ? ShapeKind::TriDown : ShapeKind::TriUp);
        if (h1.scale() < 1e-6 || h2.scale() < 1e-6) continue;
        ++checked;
        bool hit = grid_overlap(h1, h2);
        if (hit) CHECK(intersects(h1, h2));
        if (!intersects(h1, h2)) CHECK(!hit);
        // substantial interior overlap must be visible to the grid
        double margin = 0.05 * std::min(h1.scale(), h2.scale());
        if (interiors_intersect(h1, shrink_triangle(h2, margin)))
            CHECK(grid_overlap(h1, h2, 100));
    }
}

TEST_CASE("exact and double predicates agree on rational inputs") {
    DetRng rng(31);
    auto mk = [&](double g) { return ExactReal(Rational(std::llround(g * 1000), 1000)); };
    for (int it = 0; it < 50; ++it) {
        double ax = rng.uniform01(), ay = rng.uniform01();
        double bx = rng.uniform01(), by = rng.uniform01();
        double cx = rng.uniform01(), cy = rng.uniform01();
        Pt<double> a{std::round(ax * 1000) / 1000, std::round(ay * 1000) / 1000};
        Pt<double> b{std::round(bx * 1000) / 1000, std::round(by * 1000) / 1000};
        Pt<double> c{std::round(cx * 1000) / 1000, std::round(cy * 1000) / 1000};
        if (same_point(a, b)) continue;
        Pt<ExactReal> ea{mk(a.x), mk(a.y)}, eb{mk(b.x), mk(b.y)}, ec{mk(c.x), mk(c.y)};
        for (auto kind : {ShapeKind::Disk, ShapeKind::TriDown, ShapeKind::Square}) {
            auto hd = smallest_homothet(a, b, kind);
            auto he = smallest_homothet(ea, eb, kind);
            // interior membership can only disagree within the double tolerance band
            if (contains_open(hd, c) != contains_open(he, ec)) {
                CHECK(contains_closed(hd, c));
            }
        }
    }
}

TEST_CASE("isometries preserve homothet membership") {
    DetRng rng(41);
    for (int it = 0; it < 100; ++it) {
        Pt<double> p{rng.uniform01(), rng.uniform01()};
        Pt<double> q{rng.uniform01(), rng.uniform01()};
        Pt<double> r{rng.uniform01() * 2 - 0.5, rng.uniform01() * 2 - 0.5};
        if (same_point(p, q)) continue;
        Pt<double> c{rng.uniform01(), rng.uniform01()};
        auto g = (it % 2) ? Isometry<double>::rotation60(2 * (it % 3), c)
                          : Isometry<double>::mirror_x(c.x);
        for (auto kind : {ShapeKind::TriDown, ShapeKind::TriUp}) {
            auto h = smallest_homothet(p, q, kind);
            auto gh = apply_isometry(g, h);
            CHECK(contains_closed(h, r) == contains_closed(gh, g.apply(r)));
            CHECK(gh.scale() == doctest::Approx(h.scale()));
        }
        auto sq = smallest_homothet(p, q, ShapeKind::Square);
        for (auto gg : {Isometry<double>::mirror_x(c.x), Isometry<double>::mirror_y(c.y),
                        Isometry<double>::transpose_about(c)}) {
            auto gh = apply_isometry(gg, sq);
            CHECK(contains_closed(sq, r) == contains_closed(gh, gg.apply(r)));
        }
    }
}
