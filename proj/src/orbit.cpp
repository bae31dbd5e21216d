#include "orbint/orbit.hpp"

#include "orbint/errors.hpp"

namespace orbint {

std::string to_string(Side side) { return side == Side::Split ? "split" : "nonsplit"; }

std::vector<Rational> OrbitInvariants::extended_moments(std::size_t count) const {
    const std::size_t n = charpoly.size();
    std::vector<Rational> m(moments.begin(), moments.begin() + std::min(count, moments.size()));
    while (m.size() < count) {
        const std::size_t k = m.size() - n;
        Rational next = 0;
        for (std::size_t i = 0; i < n; ++i) next -= charpoly[i] * m[k + i];
        m.push_back(next);
    }
    return m;
}

QMat OrbitInvariants::moment_matrix() const {
    const std::size_t n = charpoly.size();
    auto m = extended_moments(n == 0 ? 0 : 2 * n - 1);
    QMat h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h(i, j) = m[i + j];
    return h;
}

void validate(const GLOrbitDatum& x) {
    const std::size_t n = x.n();
    if (n == 0 || !x.gamma.is_square()) throw std::invalid_argument("GL datum: gamma must be square and nonempty");
    if (x.u1.rows() != n || x.u1.cols() != 1) throw std::invalid_argument("GL datum: u1 must be n x 1");
    if (x.u2.rows() != 1 || x.u2.cols() != n) throw std::invalid_argument("GL datum: u2 must be 1 x n");
    if (is_zero(determinant(x.gamma))) throw PreconditionError("GL datum: gamma is not invertible");
}

void validate(const UOrbitDatum& y) {
    const std::size_t n = y.n();
    if (n == 0 || !y.J.is_square()) throw std::invalid_argument("U datum: J must be square and nonempty");
    if (y.alpha.rows() != n || y.alpha.cols() != n) throw std::invalid_argument("U datum: alpha must be n x n");
    if (y.u.rows() != n || y.u.cols() != 1) throw std::invalid_argument("U datum: u must be n x 1");
    if (!(y.J.adjoint() == y.J)) throw PreconditionError("U datum: J is not hermitian");
    if (is_zero(determinant(y.J))) throw PreconditionError("U datum: J is degenerate");
    FMat a = y.J * y.alpha;
    if (!(a.adjoint() == a)) throw PreconditionError("U datum: J * alpha is not hermitian");
}

OrbitInvariants invariants_gl(const GLOrbitDatum& x) {
    validate(x);
    const std::size_t n = x.n();
    auto cp = charpoly(x.gamma);
    OrbitInvariants inv;
    inv.charpoly.assign(cp.begin(), cp.begin() + static_cast<long>(n));
    QMat v = x.u1;
    for (std::size_t i = 0; i < n; ++i) {
        inv.moments.push_back((x.u2 * v)(0, 0));
        v = x.gamma * v;
    }
    return inv;
}

OrbitInvariants invariants_u(const UOrbitDatum& y) {
    validate(y);
    const std::size_t n = y.n();
    auto cp = charpoly(y.alpha);
    OrbitInvariants inv;
    for (std::size_t i = 0; i < n; ++i) {
        if (!cp[i].in_base()) throw PreconditionError("U datum: characteristic polynomial not over F0");
        inv.charpoly.push_back(cp[i].re());
    }
    const FMat uh = y.u.adjoint() * y.J;
    FMat v = y.u;
    for (std::size_t i = 0; i < n; ++i) {
        QuadExt m = (uh * v)(0, 0);
        if (!m.in_base()) throw PreconditionError("U datum: moment not in F0");
        inv.moments.push_back(m.re());
        v = y.alpha * v;
    }
    return inv;
}

bool is_rs(const OrbitInvariants& inv) { return !is_zero(determinant(inv.moment_matrix())); }

bool is_rs_gl(const GLOrbitDatum& x) { return is_rs(invariants_gl(x)); }

bool is_rs_u(const UOrbitDatum& y) { return is_rs(invariants_u(y)); }

QMat krylov_matrix(const GLOrbitDatum& x) {
    const std::size_t n = x.n();
    QMat k(n, n);
    QMat v = x.u1;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) k(i, j) = v(i, 0);
        v = x.gamma * v;
    }
    return k;
}

int transfer_factor(const GLOrbitDatum& x, const FieldParams& params) {
    if (!is_rs_gl(x)) throw PreconditionError("transfer_factor: datum is not regular semisimple");
    return eta(determinant(krylov_matrix(x)), params.p);
}

Side match_side(const OrbitInvariants& inv, const FieldParams& params) {
    Rational d = determinant(inv.moment_matrix());
    if (is_zero(d)) throw PreconditionError("match_side: degenerate moment matrix");
    return eta(d, params.p) == 1 ? Side::Split : Side::NonSplit;
}

UOrbitDatum build_matched_u_datum(const GLOrbitDatum& x, const FieldParams& params) {
    auto inv = invariants_gl(x);
    if (!is_rs(inv)) throw PreconditionError("build_matched_u_datum: datum is not regular semisimple");
    if (match_side(inv, params) != Side::Split)
        throw PreconditionError("build_matched_u_datum: datum matches the non-split space");
    UOrbitDatum y;
    y.J = to_ext(inv.moment_matrix());
    y.alpha = to_ext(companion(inv.charpoly));
    y.u = FMat::unit_column(x.n(), 0);
    return y;
}

bool matches(const GLOrbitDatum& x, const UOrbitDatum& y) {
    if (x.n() != y.n()) return false;
    try {
        return invariants_gl(x) == invariants_u(y);
    } catch (const PreconditionError&) {
        return false;
    }
}

GLOrbitDatum act_gl(const QMat& h, const GLOrbitDatum& x) {
    QMat hi = inverse(h);
    return GLOrbitDatum{hi * x.gamma * h, hi * x.u1, x.u2 * h};
}

UOrbitDatum act_u(const FMat& h, const UOrbitDatum& y) {
    if (!(h.adjoint() * y.J * h == y.J)) throw PreconditionError("act_u: h is not unitary for J");
    FMat hi = inverse(h);
    return UOrbitDatum{y.J, hi * y.alpha * h, hi * y.u};
}

std::vector<long> unit_pool(long p, std::size_t size) {
    std::vector<long> pool;
    for (long k = 1; pool.size() < size; ++k)
        for (long s : {k, -k})
            if (k % p != 0 && pool.size() < size) pool.push_back(s);
    return pool;
}

Rational random_entry(Rng& rng, long p, long bound) {
    static thread_local std::vector<long> cached_pool;
    static thread_local long cached_p = 0;
    if (cached_p != p) {
        cached_pool = unit_pool(p);
        cached_p = p;
    }
    const long k = rng.uniform(-bound, bound);
    return p_power(p, k) * Rational(rng.pick(cached_pool));
}

QMat random_invertible(Rng& rng, long p, std::size_t n, long bound) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        QMat h(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) h(i, j) = random_entry(rng, p, bound);
        if (!is_zero(determinant(h))) return h;
    }
    throw ResampleExhausted("random_invertible: no invertible matrix drawn");
}

GLOrbitDatum random_rs_gl(const FieldParams& params, std::size_t n, long bound, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("random_rs_gl: n must be positive");
    if (bound < 0) throw std::invalid_argument("random_rs_gl: bound must be non-negative");
    Rng rng(seed);
    const long p = params.p;
    constexpr int kBudget = 10000;
    for (int attempt = 0; attempt < kBudget; ++attempt) {
        GLOrbitDatum x{QMat(n, n), QMat(n, 1), QMat(1, n)};
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) x.gamma(i, j) = random_entry(rng, p, bound);
        for (std::size_t i = 0; i < n; ++i) x.u1(i, 0) = random_entry(rng, p, bound);
        for (std::size_t i = 0; i < n; ++i) x.u2(0, i) = random_entry(rng, p, bound);
        if (is_zero(determinant(x.gamma))) continue;
        if (is_rs_gl(x)) return x;
    }
    throw ResampleExhausted("random_rs_gl: resample budget exhausted");
}

GLOrbitDatum random_compact_rs_gl(const FieldParams& params, std::size_t n, long bound, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("random_compact_rs_gl: n must be positive");
    if (bound < 0) throw std::invalid_argument("random_compact_rs_gl: bound must be non-negative");
    Rng rng(seed);
    const long p = params.p;
    const auto pool = unit_pool(p);
    auto integral_entry = [&]() -> Rational {
        if (rng.uniform(0, 3) == 0) return Rational(0);
        return p_power(p, rng.uniform(0, bound)) * Rational(rng.pick(pool));
    };
    constexpr int kBudget = 10000;
    for (int attempt = 0; attempt < kBudget; ++attempt) {
        GLOrbitDatum x{QMat(n, n), QMat(n, 1), QMat(1, n)};
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) x.gamma(i, j) = integral_entry();
        for (std::size_t i = 0; i < n; ++i) x.u1(i, 0) = random_entry(rng, p, bound);
        for (std::size_t i = 0; i < n; ++i) x.u2(0, i) = random_entry(rng, p, bound);
        if (!is_unit(determinant(x.gamma), p)) continue;
        if (is_rs_gl(x)) return x;
    }
    throw ResampleExhausted("random_compact_rs_gl: resample budget exhausted");
}

FMat random_unitary(Rng& rng, const FMat& J, const FieldParams& params, long bound) {
    const std::size_t n = J.rows();
    const long p = params.p;
    const long eps = params.epsilon;
    auto maybe = [&]() -> Rational { return rng.uniform(0, 2) == 0 ? Rational(0) : random_entry(rng, p, bound); };
    FMat Jinv = inverse(J);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        FMat s(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            s(i, i) = QuadExt(0, maybe(), eps);
            for (std::size_t j = i + 1; j < n; ++j) {
                s(i, j) = QuadExt(maybe(), maybe(), eps);
                s(j, i) = -s(i, j).conj();
            }
        }
        FMat k = Jinv * s;
        FMat one = FMat::identity(n);
        FMat plus = one + k;
        if (is_zero(determinant(plus))) continue;
        FMat h = (one - k) * inverse(plus);
        if (is_zero(determinant(h))) continue;
        return h;
    }
    throw ResampleExhausted("random_unitary: no admissible Cayley parameter drawn");
}

}  // namespace orbint
