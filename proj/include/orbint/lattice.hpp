#pragma once

// Local lattices over O_{F0} = Z_p (modelled by Z_(p)) in F0^n and over
// O_F in F^n. O_F-lattices are stored through their real form: a
// Z_(p)-lattice in F0^{2n} stable under multiplication by sqrt(eps). The
// public API speaks F-vectors.

#include "orbint/field.hpp"
#include "orbint/matrix.hpp"

#include <cstdint>
#include <vector>

namespace orbint {

enum class Ring { Base, Ext };

/// Default cap on the order of the finite quotient enumerated between two
/// bounding lattices.
inline constexpr std::uint64_t kDefaultEnumerationThreshold = 59049;  // 3^10

class LocalLattice {
public:
    /// Canonicalizes the span of the columns of `real_gens` (for Ext, the
    /// caller must already have included the sqrt(eps)-multiples).
    static LocalLattice from_real(Ring ring, const FieldParams& params, const QMat& real_gens);

    Ring ring() const { return ring_; }
    const FieldParams& params() const { return params_; }
    /// Rank over the coefficient ring.
    std::size_t dim() const { return ring_ == Ring::Base ? basis_.rows() : basis_.rows() / 2; }
    /// Canonical Hermite form of the underlying Z_(p)-lattice.
    const QMat& real_basis() const { return basis_; }
    /// Valuation of the determinant of a basis over the coefficient ring
    /// (val_F for O_F-lattices, so half the real index).
    long index_val() const;

    friend bool operator==(const LocalLattice& a, const LocalLattice& b) {
        return a.ring_ == b.ring_ && a.params_ == b.params_ && a.basis_ == b.basis_;
    }
    friend bool operator<(const LocalLattice& a, const LocalLattice& b);

private:
    LocalLattice(Ring ring, FieldParams params, QMat basis)
        : ring_(ring), params_(params), basis_(std::move(basis)) {}

    Ring ring_;
    FieldParams params_;
    QMat basis_;
};

std::ostream& operator<<(std::ostream& os, const LocalLattice& l);

LocalLattice canonicalize(const QMat& basis, const FieldParams& params);
LocalLattice canonicalize(const FMat& basis, const FieldParams& params);

LocalLattice standard_lattice(Ring ring, std::size_t n, const FieldParams& params);

/// c * L for a nonzero rational c.
LocalLattice scaled(const LocalLattice& l, const Rational& c);

/// Multiplication by sqrt(eps) on F0^{2n}.
QMat sqrt_eps_operator(std::size_t n, long epsilon);

bool contains(const LocalLattice& l, const QMat& vectors);
bool contains(const LocalLattice& l, const FMat& vectors);

bool is_sublattice(const LocalLattice& a, const LocalLattice& b);

/// Dual under the bilinear form x^T G y on F0^n.
LocalLattice dual(const LocalLattice& l, const QMat& form);
/// Dual under x^H J y (sesquilinear) or x^T J y on F^n.
LocalLattice dual(const LocalLattice& l, const FMat& form, bool sesquilinear);

bool is_stable(const LocalLattice& l, const QMat& op);
bool is_stable(const LocalLattice& l, const FMat& op);

bool is_self_dual(const LocalLattice& l, const QMat& form);
bool is_self_dual(const LocalLattice& l, const FMat& hermitian_form);

/// Smallest O_{F0}-lattice containing the generators and stable under every operator.
LocalLattice stable_span(const FieldParams& params, const std::vector<QMat>& ops, const std::vector<QMat>& generators);
/// Smallest O_F-lattice containing the generators and stable under every operator.
LocalLattice stable_span(const FieldParams& params, const std::vector<FMat>& ops, const std::vector<FMat>& generators);

/// All operator-stable lattices between lo and hi (inclusive), sorted by
/// canonical form. Empty when lo is not contained in hi.
std::vector<LocalLattice> enumerate_stable_between(const LocalLattice& lo, const LocalLattice& hi,
                                                   const std::vector<QMat>& ops,
                                                   std::uint64_t threshold = kDefaultEnumerationThreshold);
std::vector<LocalLattice> enumerate_stable_between(const LocalLattice& lo, const LocalLattice& hi,
                                                   const std::vector<FMat>& ops,
                                                   std::uint64_t threshold = kDefaultEnumerationThreshold);

}  // namespace orbint
