#include "orbint/field.hpp"
#include "orbint/matrix.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace orbint;

TEST_SUITE("field") {

TEST_CASE("valuation") {
    CHECK(val_p(Rational(9), 3) == Valuation(2));
    CHECK(val_p(Rational(2, 3), 3) == Valuation(-1));
    CHECK(val_p(Rational(0), 3).is_infinite());
    CHECK(Valuation(5) < Valuation::infinity());
    CHECK((Valuation(1) + Valuation::infinity()).is_infinite());
    CHECK(val_p(Rational(-250, 7), 5) == Valuation(3));
}

TEST_CASE("valuation agrees with repeated division") {
    for (long p : {3, 5, 7})
        for (long num = -200; num <= 200; num += 7)
            for (long den : {1, 2, 9, 25, 49, 63}) {
                if (num == 0) continue;
                Rational x(num, den);
                x.canonicalize();
                CHECK(val_p(x, p).value() == oracle::val(x, p));
            }
}

TEST_CASE("eta") {
    CHECK(eta(Rational(3), 3) == -1);
    CHECK(eta(Rational(2), 3) == 1);
    CHECK(eta(Rational(50), 5) == 1);
    CHECK(eta(Rational(1, 27), 3) == -1);
    CHECK_THROWS(eta(Rational(0), 3));
}

TEST_CASE("field params") {
    CHECK(FieldParams::make(3).epsilon == 2);
    CHECK(FieldParams::make(7).epsilon == 3);
    CHECK(FieldParams::make(5, 3).epsilon == 3);
    CHECK_THROWS(FieldParams::make(2));
    CHECK_THROWS(FieldParams::make(9));
    CHECK_THROWS(FieldParams::make(5, 4));  // 4 is a square mod 5
    for (long p : {3, 5, 7, 11, 13}) {
        long e = smallest_nonresidue(p);
        bool square = false;
        for (long x = 1; x < p; ++x) square |= (x * x) % p == e;
        CHECK_FALSE(square);
    }
}

TEST_CASE("quadratic extension arithmetic") {
    const long eps = 2;
    QuadExt z(1, 2, eps);
    CHECK(z.conj() == QuadExt(1, -2, eps));
    CHECK(QuadExt::sqrt_eps(eps).norm() == -eps);
    CHECK(val_F(QuadExt(3, 3, eps), 3) == Valuation(1));
    CHECK(val_F(QuadExt(0), 3).is_infinite());
    QuadExt w(Rational(1, 3), 5, eps);
    CHECK((z * w) / w == z);
    CHECK((z + w) - w == z);
    CHECK((z * z.conj()).im() == 0);
    CHECK((z * z.conj()).re() == z.norm());
    CHECK_THROWS(z / QuadExt(0));
    CHECK_THROWS(QuadExt(1, 1, 2) + QuadExt(1, 1, 3));
}

TEST_CASE("norms of units are units") {
    // F/F0 unramified: val_F(z) = val(N z) / 2.
    const long p = 3, eps = 2;
    for (long a = -6; a <= 6; ++a)
        for (long b = -6; b <= 6; ++b) {
            if (a == 0 && b == 0) continue;
            QuadExt z(a, b, eps);
            CHECK(2 * val_F(z, p).value() == val_p(z.norm(), p).value());
        }
}

TEST_CASE("reduce_mod_power") {
    CHECK(reduce_mod_power(Rational(10), 2, 3) == 1);
    CHECK(reduce_mod_power(Rational(9), 2, 3) == 0);
    CHECK(reduce_mod_power(Rational(-1), 1, 3) == 2);
    const Rational r = reduce_mod_power(Rational(7, 3), 1, 3);
    CHECK(oracle::integral(Rational((r - Rational(7, 3)) / 3), 3));
}

TEST_CASE("charpoly and inverse") {
    QMat id = QMat::identity(2);
    auto cp = charpoly(id);  // (T - 1)^2 = T^2 - 2T + 1
    REQUIRE(cp.size() == 3);
    CHECK(cp[0] == 1);
    CHECK(cp[1] == -2);
    CHECK(cp[2] == 1);
    QMat g{{1, 1}, {3, 2}};
    auto cg = charpoly(g);
    CHECK(cg[0] == -1);
    CHECK(cg[1] == -3);
    CHECK(inverse(g) * g == id);
    CHECK_THROWS(inverse(QMat{{1, 2}, {2, 4}}));
    // Cayley-Hamilton
    QMat acc(2, 2);
    QMat pw = QMat::identity(2);
    for (const auto& c : cg) {
        acc += pw * c;
        pw = pw * g;
    }
    CHECK(acc == QMat(2, 2));
}

TEST_CASE("realify is a ring map") {
    const long eps = 2;
    FMat a{{QuadExt(1, 2, eps), QuadExt(3)}, {QuadExt(0, 1, eps), QuadExt(Rational(1, 3), 1, eps)}};
    FMat b{{QuadExt(2), QuadExt(1, -1, eps)}, {QuadExt(5, 1, eps), QuadExt(1)}};
    CHECK(realify(a * b, eps) == realify(a, eps) * realify(b, eps));
    CHECK(realify(a + b, eps) == realify(a, eps) + realify(b, eps));
}

}  // TEST_SUITE
