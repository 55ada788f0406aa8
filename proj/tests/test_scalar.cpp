#include <doctest.h>

#include "strongmatch/geometry.hpp"

using namespace strongmatch;

TEST_CASE("exact field arithmetic") {
    ExactReal r3 = ExactReal::sqrt3();
    CHECK((r3 * r3) == ExactReal(3));
    CHECK((r3 * r3 - ExactReal(3)).sign() == 0);

    // signs of a + b sqrt3 with mixed signs
    CHECK((ExactReal(2) - r3).sign() > 0);                     // 2 > sqrt3
    CHECK((ExactReal(1) - r3).sign() < 0);                     // 1 < sqrt3
    CHECK((ExactReal(-5) + ExactReal(3) * r3).sign() > 0);     // 3 sqrt3 > 5
    CHECK((ExactReal(-7) + ExactReal(4) * r3).sign() < 0);     // 4 sqrt3 < 7

    ExactReal x(Rational(7, 10), Rational(-3, 4));
    ExactReal y(Rational(1, 3), Rational(2, 5));
    CHECK(((x / y) * y - x).sign() == 0);
    CHECK(doctest::Approx(x.to_double()) == 0.7 - 0.75 * std::sqrt(3.0));
}

TEST_CASE("decimal literals parse exactly") {
    CHECK(rational_from_decimal("0.125") == Rational(1, 8));
    CHECK(rational_from_decimal("-12.5") == Rational(-25, 2));
    CHECK(rational_from_decimal("3") == Rational(3));
    CHECK_THROWS(rational_from_decimal("1e5"));
    CHECK_THROWS(rational_from_decimal(""));
}

TEST_CASE("cone functionals sum to zero") {
    // exact mode: identically zero
    Pt<ExactReal> p{ExactReal(rational_from_decimal("0.3117")), ExactReal(rational_from_decimal("-2.04"))};
    CHECK((p.u() + p.v() + p.w()).sign() == 0);

    // float mode: within tolerance
    Pt<double> q{0.3117, -2.04};
    CHECK(std::abs(q.u() + q.v() + q.w()) < 1e-12);

    // spec values
    Pt<double> origin{0, 0};
    CHECK(origin.u() == 0);
    CHECK(origin.v() == 0);
    CHECK(origin.w() == 0);
    Pt<double> e1{1, 0};
    CHECK(e1.u() == doctest::Approx(0.0));
    CHECK(e1.v() == doctest::Approx(-std::sqrt(3.0) / 2));
    CHECK(e1.w() == doctest::Approx(std::sqrt(3.0) / 2));
}

TEST_CASE("isometries compose and invert") {
    Pt<double> c{0.2, -0.4};
    auto g = Isometry<double>::rotation60(2, c).compose(Isometry<double>::mirror_x(0.7));
    auto gi = g.inverse();
    Pt<double> p{1.3, 2.9};
    auto q = gi.apply(g.apply(p));
    CHECK(q.x == doctest::Approx(p.x));
    CHECK(q.y == doctest::Approx(p.y));

    // rotation by 120 degrees cycles the cone functionals
    auto r = Isometry<double>::rotation60(2, Pt<double>{0, 0});
    auto rp = r.apply(p);
    CHECK(rp.u() == doctest::Approx(p.w()));
    CHECK(rp.v() == doctest::Approx(p.u()));
    CHECK(rp.w() == doctest::Approx(p.v()));
}
