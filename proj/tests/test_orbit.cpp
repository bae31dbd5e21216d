#include "orbint/errors.hpp"
#include "orbint/orbit.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace orbint;

namespace {

GLOrbitDatum gl1(Rational g, Rational u1, Rational u2) { return {QMat{{g}}, QMat{{u1}}, QMat{{u2}}}; }

const GLOrbitDatum kTwoByTwo{QMat{{1, 1}, {3, 2}}, QMat{{0}, {1}}, QMat{{0, 1}}};

// m_k = u2 gamma^k u1 by repeated multiplication.
Rational direct_moment(const GLOrbitDatum& x, std::size_t k) {
    QMat v = x.u1;
    for (std::size_t i = 0; i < k; ++i) v = x.gamma * v;
    return (x.u2 * v)(0, 0);
}

}  // namespace

TEST_SUITE("orbit") {

TEST_CASE("GL invariants") {
    auto a = invariants_gl(gl1(2, 1, 1));
    CHECK(a.charpoly == std::vector<Rational>{-2});
    CHECK(a.moments == std::vector<Rational>{1});
    auto b = invariants_gl(kTwoByTwo);
    CHECK(b.charpoly == std::vector<Rational>{-1, -3});
    CHECK(b.moments == std::vector<Rational>{1, 2});
    CHECK(b.extended_moments(3)[2] == 7);
    CHECK(determinant(b.moment_matrix()) == 3);
}

TEST_CASE("moment recursion reproduces direct powers") {
    const auto params = FieldParams::make(5);
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        auto x = random_rs_gl(params, 1 + seed % 3, 2, seed);
        auto ext = invariants_gl(x).extended_moments(2 * x.n() + 2);
        for (std::size_t k = 0; k < ext.size(); ++k) CHECK(ext[k] == direct_moment(x, k));
    }
}

TEST_CASE("unitary invariants") {
    const long eps = 2;
    UOrbitDatum y{FMat{{QuadExt(1)}}, FMat{{QuadExt(2)}}, FMat{{QuadExt(1)}}};
    auto a = invariants_u(y);
    CHECK(a.charpoly == std::vector<Rational>{-2});
    CHECK(a.moments == std::vector<Rational>{1});
    UOrbitDatum z{FMat{{QuadExt(9)}}, FMat{{QuadExt(1)}}, FMat{{QuadExt(1)}}};
    CHECK(invariants_u(z).moments == std::vector<Rational>{9});
    UOrbitDatum bad{FMat{{QuadExt(1)}}, FMat{{QuadExt(0, 1, eps)}}, FMat{{QuadExt(1)}}};
    CHECK_THROWS(validate(bad));  // J alpha not hermitian
}

TEST_CASE("regular semisimple") {
    CHECK(is_rs_gl(gl1(5, 3, 7)));
    CHECK(is_rs_gl(kTwoByTwo));
    CHECK_FALSE(is_rs_gl(GLOrbitDatum{QMat{{1, 1}, {3, 2}}, QMat{{0}, {0}}, QMat{{0, 1}}}));
    CHECK_FALSE(is_rs_gl(GLOrbitDatum{QMat::identity(2), QMat{{1}, {2}}, QMat{{1, 1}}}));
}

TEST_CASE("transfer factor") {
    const auto params = FieldParams::make(3);
    CHECK(transfer_factor(gl1(2, 1, 1), params) == 1);
    CHECK(transfer_factor(gl1(2, 3, 1), params) == -1);
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        auto x = random_rs_gl(params, 1 + seed % 3, 2, seed);
        CHECK(transfer_factor(x, params) == oracle::omega(x, 3));
        Rng rng(seed);
        QMat h = random_invertible(rng, 3, x.n(), 2);
        int eta_h = oracle::val(determinant(h), 3) % 2 == 0 ? 1 : -1;
        CHECK(transfer_factor(act_gl(h, x), params) == eta_h * transfer_factor(x, params));
    }
}

TEST_CASE("side") {
    const auto params = FieldParams::make(3);
    CHECK(match_side(invariants_gl(gl1(1, 3, 1)), params) == Side::NonSplit);
    CHECK(match_side(invariants_gl(gl1(1, 9, 1)), params) == Side::Split);
    CHECK(match_side(invariants_gl(kTwoByTwo), params) == Side::NonSplit);
}

TEST_CASE("matched datum") {
    const auto params = FieldParams::make(3);
    auto y = build_matched_u_datum(gl1(1, 9, 1), params);
    CHECK(y.J == FMat{{QuadExt(9)}});
    CHECK(y.alpha == FMat{{QuadExt(1)}});
    CHECK(y.u == FMat{{QuadExt(1)}});
    CHECK_THROWS_AS(build_matched_u_datum(kTwoByTwo, params), PreconditionError);
    for (long p : {3, 5}) {
        const auto pp = FieldParams::make(p);
        for (std::uint64_t seed = 1; seed <= 80; ++seed) {
            auto x = random_rs_gl(pp, 1 + seed % 3, 2, seed);
            if (match_side(invariants_gl(x), pp) != Side::Split) continue;
            auto m = build_matched_u_datum(x, pp);
            CHECK(matches(x, m));
            CHECK(invariants_u(m) == invariants_gl(x));
            const FMat ja = m.J * m.alpha;
            CHECK(ja == ja.adjoint());
        }
    }
}

TEST_CASE("matches") {
    UOrbitDatum y2{FMat{{QuadExt(1)}}, FMat{{QuadExt(2)}}, FMat{{QuadExt(1)}}};
    UOrbitDatum y3{FMat{{QuadExt(1)}}, FMat{{QuadExt(3)}}, FMat{{QuadExt(1)}}};
    CHECK(matches(gl1(2, 1, 1), y2));
    CHECK_FALSE(matches(gl1(2, 1, 1), y3));
}

TEST_CASE("group actions") {
    const auto params = FieldParams::make(3);
    CHECK(act_gl(QMat::identity(2), kTwoByTwo) == kTwoByTwo);
    CHECK(invariants_gl(act_gl(QMat{{3, 0}, {0, 1}}, kTwoByTwo)) == invariants_gl(kTwoByTwo));
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        auto x = random_rs_gl(params, 1 + seed % 3, 1, seed);
        Rng rng(seed * 31);
        QMat h = random_invertible(rng, 3, x.n(), 2);
        auto hx = act_gl(h, x);
        CHECK(invariants_gl(hx) == invariants_gl(x));
        CHECK(match_side(invariants_gl(hx), params) == match_side(invariants_gl(x), params));
        if (match_side(invariants_gl(x), params) != Side::Split) continue;
        auto y = build_matched_u_datum(x, params);
        FMat g = random_unitary(rng, y.J, params, 1);
        CHECK(g.adjoint() * y.J * g == y.J);
        auto gy = act_u(g, y);
        const FMat ja = gy.J * gy.alpha;
        CHECK(ja == ja.adjoint());
        CHECK(invariants_u(gy) == invariants_u(y));
        CHECK(matches(hx, gy));
    }
    UOrbitDatum y{FMat{{QuadExt(1)}}, FMat{{QuadExt(2)}}, FMat{{QuadExt(1)}}};
    CHECK_THROWS(act_u(FMat{{QuadExt(2)}}, y));
}

TEST_CASE("samplers") {
    const auto params = FieldParams::make(3);
    CHECK(random_rs_gl(params, 2, 2, 42) == random_rs_gl(params, 2, 2, 42));
    CHECK_FALSE(random_rs_gl(params, 2, 2, 42) == random_rs_gl(params, 2, 2, 43));
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        CHECK(is_rs_gl(random_rs_gl(params, 3, 2, seed)));
        auto x = random_rs_gl(params, 1, 0, seed);
        CHECK(oracle::val(invariants_gl(x).moments[0], 3) == 0);
        CHECK(match_side(invariants_gl(x), params) == Side::Split);
        auto c = random_compact_rs_gl(params, 2, 2, seed);
        CHECK(oracle::val(determinant(c.gamma), 3) == 0);
        CHECK(oracle::all_integral(c.gamma, 3));
    }
}

}  // TEST_SUITE
