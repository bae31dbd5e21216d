#pragma once

// Lattices over the localization Z_(p) inside Q^m, stored as canonical
// column Hermite forms. Everything in lattice.hpp reduces to these
// routines; O_F-lattices are Z_(p)-lattices of twice the rank that are
// stable under multiplication by sqrt(eps).

#include "orbint/matrix.hpp"

#include <cstdint>
#include <vector>

namespace orbint::zp {

/// Canonical echelon basis of the Z_(p)-span of the columns of `gens`.
///
/// Columns are ordered by pivot row; each pivot is an exact power p^a and
/// the entries of earlier columns in a pivot row are reduced to the
/// canonical representatives of reduce_mod_power. The result has one
/// column per rank; for full rank it is lower triangular.
QMat echelon(const QMat& gens, long p);

/// Full-rank variant of echelon; throws SingularError otherwise.
QMat hnf(const QMat& gens, long p);

/// Exponents a_i of the diagonal of a full-rank Hermite form.
std::vector<long> diagonal_exponents(const QMat& h, long p);

/// val_p(det h).
long index_val(const QMat& h, long p);

/// Every column of `vecs` lies in the lattice with Hermite form `h`.
bool contains(const QMat& h, const QMat& vecs, long p);

bool is_sublattice(const QMat& a, const QMat& b, long p);

QMat sum(const QMat& a, const QMat& b, long p);

/// Dual with respect to the standard pairing x^T y.
QMat standard_dual(const QMat& h, long p);

/// {x : x^T G y in Z_(p) for all y in the lattice}.
QMat dual(const QMat& h, const QMat& gram, long p);

QMat intersect(const QMat& a, const QMat& b, long p);

QMat scale(const QMat& h, const Rational& c, long p);

bool is_stable(const QMat& h, const QMat& op, long p);

/// op has an integral characteristic polynomial, i.e. stabilizes some lattice.
bool admits_stable_lattice(const QMat& op, long p);

/// Smallest lattice containing the columns of `gens` and stable under all
/// `ops`, computed by saturation to a fixpoint. Throws PreconditionError if
/// an operator stabilizes no lattice, SingularError if the closure is not of
/// full rank.
QMat stable_span(const std::vector<QMat>& ops, const QMat& gens, long p);

/// All lattices between `lo` and `hi` stable under `ops`, sorted by
/// canonical form. `scalars` are additional operators that define the
/// coefficient ring (sqrt(eps) for O_F-lattices); they are also required
/// to stabilize every result. Returns an empty list when lo is not inside
/// hi. Throws InstanceTooLarge when [hi : lo] exceeds `max_quotient_order`.
std::vector<QMat> enumerate_stable(const QMat& lo, const QMat& hi, const std::vector<QMat>& ops,
                                   const std::vector<QMat>& scalars, long p, std::uint64_t max_quotient_order);

/// Strict weak order on canonical forms (shape, then entries).
bool form_less(const QMat& a, const QMat& b);

/// p^k if it fits below `cap`, else cap + 1 (overflow-safe order check).
std::uint64_t bounded_power(long p, long k, std::uint64_t cap);

}  // namespace orbint::zp
