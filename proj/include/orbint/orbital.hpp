#pragma once

// Orbital integrals of the standard test functions, computed exactly as
// finite lattice sums.
//
// General linear side. The integrand of
//     Orb((gamma, u1, u2), s) = omega * int 1_{GL(L0)}(h^-1 gamma h)
//                               1_{L0}(h^-1 u1) 1_{L0*}(u2 h) |det h|^s eta(det h) dh
// is right-invariant under K = GL(L0) (of volume 1), and cosets hK are in
// bijection with lattices Lambda = h L0. The three indicator conditions
// become gamma Lambda = Lambda, u1 in Lambda and u2(Lambda) in O, and the
// weight becomes (-1)^d X^d with X = q^-s and d = val det h. So
//     Orb = omega * sum over such Lambda of (-X)^{d(Lambda)}.
// Such Lambda exist only if gamma has an integral characteristic
// polynomial with unit constant term; they then lie between
// Z_p[gamma] u1 and the dual of Z_p[gamma^T] u2^T.
//
// Unitary side. Cosets of U(L) in U(V) are the self-dual lattices of
// (F^n, J) (a single U(V)-orbit, F/F0 unramified, p odd). The indicator of
// Herm(L) becomes "alpha Lambda = Lambda" and that of L becomes
// "u in Lambda", so the integral is the number of such self-dual Lambda.

#include "orbint/lattice.hpp"
#include "orbint/laurent.hpp"
#include "orbint/orbit.hpp"

#include <optional>
#include <string>

namespace orbint {

struct OrbResult {
    LaurentPoly poly;                     // includes the transfer factor
    long long value_at_0 = 0;             // poly at X = 1
    long long derivative_normalized = 0;  // dOrb/ds at 0, divided by -log q
    std::size_t lattice_count = 0;        // lattices in the support
    int omega = 1;

    friend bool operator==(const OrbResult&, const OrbResult&) = default;
};

/// Integral characteristic polynomial with unit constant term.
bool is_compact(const QMat& op, long p);
bool is_compact(const FMat& op, long p);

/// Bounding lattices of the general linear lattice sum; nullopt when gamma
/// is not compact (empty support).
struct SupportBounds {
    LocalLattice lower;
    LocalLattice upper;
};
std::optional<SupportBounds> gl_support_bounds(const GLOrbitDatum& x, const FieldParams& params);
std::optional<SupportBounds> u_support_bounds(const UOrbitDatum& y, const FieldParams& params);

OrbResult make_result(LaurentPoly poly, std::size_t lattice_count, int omega);

OrbResult orb_gl(const GLOrbitDatum& x, const FieldParams& params,
                 std::uint64_t threshold = kDefaultEnumerationThreshold);

/// Number of J-self-dual O_F-lattices Lambda with alpha Lambda = Lambda and
/// u in Lambda. Rejects data whose background form is non-split.
std::uint64_t orb_u(const UOrbitDatum& y, const FieldParams& params,
                    std::uint64_t threshold = kDefaultEnumerationThreshold);

long long derivative_at_zero(const OrbResult& r);

/// Relative Cayley map on (gamma, e_n, e_n^*): with gamma = [[a, b], [c, d]]
/// (d the lower-right scalar), returns (a, b, c) / (1 - d). Requires 1 - d a unit.
GLOrbitDatum cayley_gl(const GLOrbitDatum& x, const FieldParams& params);

/// Unitary counterpart on (J, alpha, e_n) with J = diag(J', 1): blocks of
/// the operator alpha = [[a, b], [c, d]] give (J', a / (1 - d), b / (1 - d)).
UOrbitDatum cayley_herm(const UOrbitDatum& y, const FieldParams& params);

struct InductionReport {
    bool skipped = false;
    std::string reason;  // why skipped
    bool equal = false;
    LaurentPoly full;     // Orb(gamma, e, e^*, s)
    LaurentPoly reduced;  // Orb(cayley_gl(gamma), s)
    std::optional<GLOrbitDatum> reduced_datum;
};

/// Compares the orbital integral of (gamma, e_n, e_n^*) with that of its
/// relative Cayley image. Inputs outside the hypotheses are reported as
/// skipped rather than rejected.
InductionReport verify_induction(const GLOrbitDatum& x, const FieldParams& params,
                                 std::uint64_t threshold = kDefaultEnumerationThreshold);

/// (val m_0 + 1) / 2 for a non-split datum of dimension one (zero when the
/// support is empty, val m_0 < 0).
Rational predicted_int_n1(const OrbitInvariants& inv, const FieldParams& params);

/// (gamma, e_n, e_n^*) has the shape cayley_gl expects.
bool is_standard_vector_datum(const GLOrbitDatum& x);

}  // namespace orbint
