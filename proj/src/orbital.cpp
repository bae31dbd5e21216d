#include "orbint/orbital.hpp"

#include "orbint/errors.hpp"

namespace orbint {

bool is_compact(const QMat& op, long p) {
    auto cp = charpoly(op);
    for (const auto& c : cp)
        if (!is_integral(c, p)) return false;
    return is_unit(cp[0], p);
}

bool is_compact(const FMat& op, long p) {
    auto cp = charpoly(op);
    for (const auto& c : cp)
        if (val_F(c, p) < Valuation(0)) return false;
    return val_F(cp[0], p) == Valuation(0);
}

std::optional<SupportBounds> gl_support_bounds(const GLOrbitDatum& x, const FieldParams& params) {
    validate(x);
    if (!is_compact(x.gamma, params.p)) return std::nullopt;
    const QMat gi = inverse(x.gamma);
    LocalLattice lower = stable_span(params, std::vector<QMat>{x.gamma, gi}, std::vector<QMat>{x.u1});
    LocalLattice co = stable_span(params, std::vector<QMat>{x.gamma.transpose(), gi.transpose()},
                                  std::vector<QMat>{x.u2.transpose()});
    LocalLattice upper = dual(co, QMat::identity(x.n()));
    return SupportBounds{std::move(lower), std::move(upper)};
}

std::optional<SupportBounds> u_support_bounds(const UOrbitDatum& y, const FieldParams& params) {
    validate(y);
    if (!is_compact(y.alpha, params.p)) return std::nullopt;
    LocalLattice lower = stable_span(params, std::vector<FMat>{y.alpha}, std::vector<FMat>{y.u});
    LocalLattice upper = dual(lower, y.J, true);
    return SupportBounds{std::move(lower), std::move(upper)};
}

OrbResult make_result(LaurentPoly poly, std::size_t lattice_count, int omega) {
    OrbResult r;
    r.value_at_0 = poly.value_at_one();
    r.derivative_normalized = poly.derivative_normalized();
    r.poly = std::move(poly);
    r.lattice_count = lattice_count;
    r.omega = omega;
    return r;
}

OrbResult orb_gl(const GLOrbitDatum& x, const FieldParams& params, std::uint64_t threshold) {
    validate(x);
    if (!is_rs_gl(x)) throw PreconditionError("orb_gl: datum is not regular semisimple");
    const int omega = transfer_factor(x, params);
    auto bounds = gl_support_bounds(x, params);
    if (!bounds) return make_result({}, 0, omega);

    const std::vector<QMat> ops{x.gamma, inverse(x.gamma)};
    auto lattices = enumerate_stable_between(bounds->lower, bounds->upper, ops, threshold);
    LaurentPoly poly;
    for (const auto& l : lattices) {
        const long d = l.index_val();
        poly.add_term((d % 2 == 0) ? omega : -omega, static_cast<int>(d));
    }
    return make_result(std::move(poly), lattices.size(), omega);
}

std::uint64_t orb_u(const UOrbitDatum& y, const FieldParams& params, std::uint64_t threshold) {
    validate(y);
    if (!is_rs_u(y)) throw PreconditionError("orb_u: datum is not regular semisimple");
    const QuadExt det_j = determinant(y.J);
    if (eta(det_j.re(), params.p) != 1)
        throw PreconditionError("orb_u: background form is non-split (no self-dual lattice)");
    auto bounds = u_support_bounds(y, params);
    if (!bounds) return 0;
    auto lattices = enumerate_stable_between(bounds->lower, bounds->upper, std::vector<FMat>{y.alpha}, threshold);
    std::uint64_t count = 0;
    for (const auto& l : lattices)
        if (is_self_dual(l, y.J)) ++count;
    return count;
}

long long derivative_at_zero(const OrbResult& r) { return r.poly.derivative_normalized(); }

bool is_standard_vector_datum(const GLOrbitDatum& x) {
    const std::size_t n = x.n();
    return x.u1 == QMat::unit_column(n, n - 1) && x.u2 == QMat::unit_column(n, n - 1).transpose();
}

GLOrbitDatum cayley_gl(const GLOrbitDatum& x, const FieldParams& params) {
    validate(x);
    const std::size_t n = x.n();
    if (n < 2) throw PreconditionError("cayley_gl: dimension must be at least 2");
    if (!is_standard_vector_datum(x)) throw PreconditionError("cayley_gl: expects u1 = e_n and u2 = e_n^*");
    const Rational one_minus_d = 1 - x.gamma(n - 1, n - 1);
    if (!is_unit(one_minus_d, params.p)) throw PreconditionError("cayley_gl: 1 - d is not a unit");
    const Rational s = 1 / one_minus_d;
    const std::size_t m = n - 1;
    return GLOrbitDatum{x.gamma.block(0, 0, m, m) * s, x.gamma.block(0, m, m, 1) * s,
                        x.gamma.block(m, 0, 1, m) * s};
}

UOrbitDatum cayley_herm(const UOrbitDatum& y, const FieldParams& params) {
    validate(y);
    const std::size_t n = y.n();
    if (n < 2) throw PreconditionError("cayley_herm: dimension must be at least 2");
    const std::size_t m = n - 1;
    if (!(y.u == FMat::unit_column(n, m))) throw PreconditionError("cayley_herm: expects u = e_n");
    if (!(y.J(m, m) == QuadExt(1))) throw PreconditionError("cayley_herm: e_n must have norm one");
    for (std::size_t i = 0; i < m; ++i)
        if (!is_zero(y.J(i, m))) throw PreconditionError("cayley_herm: e_n must be orthogonal to its complement");
    const QuadExt one_minus_d = QuadExt(1) - y.alpha(m, m);
    if (val_F(one_minus_d, params.p) != Valuation(0)) throw PreconditionError("cayley_herm: 1 - d is not a unit");
    const QuadExt s = QuadExt(1) / one_minus_d;
    return UOrbitDatum{y.J.block(0, 0, m, m), y.alpha.block(0, 0, m, m) * s, y.alpha.block(0, m, m, 1) * s};
}

InductionReport verify_induction(const GLOrbitDatum& x, const FieldParams& params, std::uint64_t threshold) {
    InductionReport rep;
    auto skip = [&](std::string why) {
        rep.skipped = true;
        rep.reason = std::move(why);
        return rep;
    };
    validate(x);
    const std::size_t n = x.n();
    if (n < 2) return skip("dimension below 2");
    if (!is_standard_vector_datum(x)) return skip("vectors are not (e_n, e_n^*)");
    if (!is_unit(1 - x.gamma(n - 1, n - 1), params.p)) return skip("1 - d is not a unit");
    if (!is_rs_gl(x)) return skip("(gamma, e, e^*) is not regular semisimple");
    const QMat a = x.gamma.block(0, 0, n - 1, n - 1);
    if (is_zero(determinant(a))) return skip("reduced gamma is not invertible");
    GLOrbitDatum flat = cayley_gl(x, params);
    if (!is_rs_gl(flat)) return skip("reduced datum is not regular semisimple");

    rep.full = orb_gl(x, params, threshold).poly;
    rep.reduced = orb_gl(flat, params, threshold).poly;
    rep.reduced_datum = std::move(flat);
    rep.equal = rep.full == rep.reduced;
    return rep;
}

Rational predicted_int_n1(const OrbitInvariants& inv, const FieldParams& params) {
    if (inv.n() != 1) throw PreconditionError("predicted_int_n1: dimension must be 1");
    Valuation v = val_p(inv.moments.at(0), params.p);
    if (v.is_infinite()) throw PreconditionError("predicted_int_n1: m_0 = 0 is not regular semisimple");
    if (v.value() % 2 == 0) throw PreconditionError("predicted_int_n1: datum matches the split space");
    if (v.value() < 0) return Rational(0);
    Rational r(v.value() + 1, 2);
    r.canonicalize();
    return r;
}

}  // namespace orbint
