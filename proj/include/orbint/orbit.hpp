#pragma once

// Orbit data on the general linear side (gamma, u1, u2) and on the unitary
// side (J, alpha, u), their invariants, the transfer factor and matching.
//
// The unitary side is modelled concretely: J is the Gram matrix of the
// background hermitian form h(x, y) = x^H J y, and a hermitian structure A
// is recorded through the J-self-adjoint operator alpha with
// A(x, y) = h(alpha x, y), i.e. J * alpha is hermitian.

#include "orbint/field.hpp"
#include "orbint/matrix.hpp"
#include "orbint/random.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace orbint {

struct GLOrbitDatum {
    QMat gamma;  // n x n, invertible
    QMat u1;     // n x 1
    QMat u2;     // 1 x n

    std::size_t n() const { return gamma.rows(); }
    friend bool operator==(const GLOrbitDatum&, const GLOrbitDatum&) = default;
};

struct UOrbitDatum {
    FMat J;      // n x n hermitian, invertible
    FMat alpha;  // n x n, J * alpha hermitian
    FMat u;      // n x 1

    std::size_t n() const { return J.rows(); }
    friend bool operator==(const UOrbitDatum&, const UOrbitDatum&) = default;
};

/// Characteristic polynomial det(T - x) = T^n + c_{n-1} T^{n-1} + ... + c_0
/// (stored as c_0..c_{n-1}) and moments m_0..m_{n-1}.
struct OrbitInvariants {
    std::vector<Rational> charpoly;
    std::vector<Rational> moments;

    std::size_t n() const { return charpoly.size(); }

    /// m_0..m_{count-1}, continuing past m_{n-1} by the recursion
    /// m_{k+n} = -sum_i c_i m_{k+i}.
    std::vector<Rational> extended_moments(std::size_t count) const;

    /// Hankel matrix M_ij = m_{i+j}, 0 <= i, j < n.
    QMat moment_matrix() const;

    friend bool operator==(const OrbitInvariants&, const OrbitInvariants&) = default;
};

enum class Side { Split, NonSplit };

std::string to_string(Side side);

void validate(const GLOrbitDatum& x);
/// Checks shapes, J hermitian and invertible, J * alpha hermitian.
void validate(const UOrbitDatum& y);

OrbitInvariants invariants_gl(const GLOrbitDatum& x);
/// Throws PreconditionError when the invariants do not lie in F0.
OrbitInvariants invariants_u(const UOrbitDatum& y);

bool is_rs(const OrbitInvariants& inv);
bool is_rs_gl(const GLOrbitDatum& x);
bool is_rs_u(const UOrbitDatum& y);

/// (u1 | gamma u1 | ... | gamma^{n-1} u1).
QMat krylov_matrix(const GLOrbitDatum& x);

/// omega = (-1)^{val det(u1 | gamma u1 | ... | gamma^{n-1} u1)}.
int transfer_factor(const GLOrbitDatum& x, const FieldParams& params);

/// Split iff the moment matrix has even determinant valuation.
Side match_side(const OrbitInvariants& inv, const FieldParams& params);

/// (J = moment matrix, alpha = companion matrix of the characteristic
/// polynomial, u = e_1). Requires a split regular semisimple datum.
UOrbitDatum build_matched_u_datum(const GLOrbitDatum& x, const FieldParams& params);

bool matches(const GLOrbitDatum& x, const UOrbitDatum& y);

/// h.(gamma, u1, u2) = (h^-1 gamma h, h^-1 u1, u2 h).
GLOrbitDatum act_gl(const QMat& h, const GLOrbitDatum& x);
/// h.(J, alpha, u) = (J, h^-1 alpha h, h^-1 u); h must satisfy h^H J h = J.
UOrbitDatum act_u(const FMat& h, const UOrbitDatum& y);

/// Small pool of p-adic units used for unit parts of random entries.
std::vector<long> unit_pool(long p, std::size_t size = 4);

/// p^k * unit with k uniform in [-bound, bound] and unit from unit_pool.
Rational random_entry(Rng& rng, long p, long bound);

/// Invertible n x n matrix with random_entry entries.
QMat random_invertible(Rng& rng, long p, std::size_t n, long bound);

/// Random regular semisimple datum with invertible gamma, rejection-sampled;
/// deterministic in the seed.
GLOrbitDatum random_rs_gl(const FieldParams& params, std::size_t n, long bound, std::uint64_t seed);

/// As random_rs_gl, but gamma has entries of non-negative valuation (at most
/// `bound`) and unit determinant, so the orbital integral has nonempty support.
GLOrbitDatum random_compact_rs_gl(const FieldParams& params, std::size_t n, long bound, std::uint64_t seed);

/// Random h with h^H J h = J, from the Cayley transform of a random
/// J-skew-adjoint K: h = (1 - K)(1 + K)^-1.
FMat random_unitary(Rng& rng, const FMat& J, const FieldParams& params, long bound);

}  // namespace orbint
