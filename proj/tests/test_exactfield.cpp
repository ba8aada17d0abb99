#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sqc/errors.hpp"
#include "sqc/rational.hpp"
#include "sqc/roots.hpp"
#include "sqc/scalar.hpp"

using namespace sqc;

TEST_CASE("rational strings reduce to lowest terms") {
    CHECK(rational_to_string(rational_from_string("6/4")) == "3/2");
    CHECK(rational_to_string(rational_from_string("-6/4")) == "-3/2");
    CHECK(rational_to_string(rational_from_string("4/2")) == "2");
    CHECK(rational_to_string(rational_from_string("0/7")) == "0");
    CHECK(rational_from_string("3/-6") == Rational(-1, 2));
    CHECK_THROWS_AS(rational_from_string("1/0"), const parse_error&);
    CHECK_THROWS_AS(rational_from_string("abc"), const parse_error&);
    CHECK_THROWS_AS(rational_from_string(""), const parse_error&);
}

TEST_CASE("the generator satisfies its minimal polynomial") {
    // z^4 = z^2 - 1, and z is a primitive 12th root of unity.
    CHECK(zeta_power(4) == zeta_power(2) - Scalar(1));
    CHECK(zeta_power(6) == Scalar(-1));
    CHECK(zeta_power(12) == Scalar(1));
    CHECK(zeta_power(13) == zeta_power(1));
    CHECK(zeta_power(-1) == zeta_power(11));
    for (int k = 1; k < 12; ++k) CHECK(zeta_power(k) != Scalar(1));
}

TEST_CASE("distinguished roots of unity") {
    const Scalar i = scalar_i();
    CHECK(i * i == Scalar(-1));
    const Scalar w = scalar_omega();
    CHECK(w != Scalar(1));
    CHECK(w * w * w == Scalar(1));
    CHECK(Scalar(1) + w + w * w == Scalar(0));
}

TEST_CASE("scalar arithmetic and inversion") {
    const Scalar a = Scalar(Rational(2, 3)) + zeta_power(1);
    const Scalar b = Scalar(5) - zeta_power(3);
    CHECK((a + b) - b == a);
    CHECK(a * b == b * a);
    CHECK(a * scalar_inv(a) == Scalar(1));
    CHECK(b / b == Scalar(1));
    CHECK_THROWS_AS(scalar_inv(Scalar(0)), const division_by_zero&);

    // Inversion exercises the full tower, not just rationals.
    const Scalar c = zeta_power(1) + zeta_power(2) - Scalar(Rational(7, 2));
    CHECK(c * scalar_inv(c) == Scalar(1));
}

TEST_CASE("scalar string rendering") {
    CHECK(scalar_to_string(Scalar(0)) == "0");
    CHECK(scalar_to_string(Scalar(Rational(-3, 2))) == "-3/2");
    CHECK(scalar_to_string(zeta_power(1)) == "z");
    CHECK(scalar_to_string(Scalar(1) - zeta_power(2)) == "1 - z^2");
}

TEST_CASE("square roots inside the field") {
    auto root_of = [](const Scalar& a) {
        const auto r = sqrt_scalar(a);
        REQUIRE(r.has_value());
        CHECK((*r) * (*r) == a);
    };
    root_of(Scalar(Rational(9, 4)));
    root_of(Scalar(3));       // sqrt(3) = z + z^-1
    root_of(Scalar(-1));      // i
    root_of(scalar_omega()); // z^2 * (unit)
    root_of(Scalar(-3));
    root_of((Scalar(2) + zeta_power(1)) * (Scalar(2) + zeta_power(1)));

    // 2 is not a square in the field: no quadratic subfield contains sqrt(2).
    CHECK_FALSE(sqrt_scalar(Scalar(2)).has_value());
    CHECK_FALSE(sqrt_scalar(Scalar(5)).has_value());
}

TEST_CASE("monomial n-th roots") {
    const auto cbrt8 = nth_root_monomial(Scalar(8), 3);
    REQUIRE(cbrt8.has_value());
    CHECK(*cbrt8 == Scalar(2));

    const auto r = nth_root_monomial(Scalar(Rational(27, 8)) * zeta_power(6), 3);
    REQUIRE(r.has_value());
    CHECK((*r) * (*r) * (*r) == Scalar(Rational(27, 8)) * zeta_power(6));

    const auto quart = nth_root_monomial(zeta_power(4), 4);
    REQUIRE(quart.has_value());
    CHECK((*quart) * (*quart) * (*quart) * (*quart) == zeta_power(4));

    CHECK_FALSE(nth_root_monomial(Scalar(2), 3).has_value());
    // Non-monomial input is declined even when a root exists elsewhere.
    CHECK_FALSE(nth_root_monomial(Scalar(1) + zeta_power(1), 3).has_value());
}

TEST_CASE("cube roots of general field elements") {
    auto root_of = [](const Scalar& x) {
        const Scalar cube = x * x * x;
        const auto r = cube_root_scalar(cube);
        REQUIRE(r.has_value());
        CHECK((*r) * (*r) * (*r) == cube);
    };
    root_of(Scalar(2));
    root_of(Scalar(Rational(-3, 2)));
    root_of(zeta_power(5));
    // Dense coefficient vectors, their inverses, and mixed products: the
    // cases a monomial-only search cannot reach.
    const Scalar dense(std::array<Rational, 4>{Rational(3, 2), Rational(-1), Rational(0), Rational(2)});
    root_of(dense);
    root_of(scalar_inv(dense));
    root_of(dense * scalar_inv(Scalar(1) + zeta_power(2)));

    CHECK(cube_root_scalar(Scalar(0)) == Scalar(0));
    // The root returned for a cube of a rational is that rational up to a
    // cube root of unity, so re-cubing is the right acceptance check; a
    // non-cube has no root anywhere in the field.
    CHECK_FALSE(cube_root_scalar(Scalar(2)).has_value());
    CHECK_FALSE(cube_root_scalar(Scalar(1) + zeta_power(1)).has_value());
}
