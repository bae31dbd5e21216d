#pragma once

// Exact arithmetic in Q_p (modelled by rationals with their p-adic
// valuation) and in its unramified quadratic extension Q_p(sqrt(eps)).

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>

namespace orbint {

using Rational = mpq_class;

/// p-adic valuation with a distinguished infinity for zero.
class Valuation {
public:
    constexpr Valuation(long v) : value_(v), infinite_(false) {}  // NOLINT(implicit)
    static constexpr Valuation infinity() { return Valuation(); }

    constexpr bool is_infinite() const { return infinite_; }
    /// Finite value; throws on infinity.
    long value() const;

    friend constexpr bool operator==(const Valuation& a, const Valuation& b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }
    friend constexpr std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
        if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
        return a.value_ <=> b.value_;
    }
    friend Valuation operator+(const Valuation& a, const Valuation& b) {
        if (a.infinite_ || b.infinite_) return infinity();
        return Valuation(a.value_ + b.value_);
    }

    std::string to_string() const;

private:
    constexpr Valuation() : value_(0), infinite_(true) {}
    long value_;
    bool infinite_;
};

std::ostream& operator<<(std::ostream& os, const Valuation& v);

/// Parameters of the pair F/F0: an odd prime p and a unit non-residue eps.
struct FieldParams {
    long p = 3;
    long epsilon = 2;

    long q() const { return p; }

    /// Validates p and eps; eps defaults to the smallest positive non-residue.
    static FieldParams make(long p, std::optional<long> epsilon = std::nullopt);

    friend bool operator==(const FieldParams&, const FieldParams&) = default;
};

bool is_prime(long n);
bool is_quadratic_residue(long a, long p);
long smallest_nonresidue(long p);

Valuation val_p(const Rational& x, long p);
Valuation val_p(const mpz_class& x, long p);

/// (-1)^{val_p(x)}; rejects zero.
int eta(const Rational& x, long p);

/// p^k as an exact rational, k of any sign.
Rational p_power(long p, long k);

/// x / p^{val_p(x)}; x must be nonzero.
Rational unit_part(const Rational& x, long p);

bool is_integral(const Rational& x, long p);
bool is_unit(const Rational& x, long p);

/// Canonical representative of the class of x in Q / p^k Z_(p):
/// zero when val(x) >= k, otherwise N / p^K with K = max(0, -val x)
/// and 0 <= N < p^{k+K}.
Rational reduce_mod_power(const Rational& x, long k, long p);

/// a + b*sqrt(eps). An element with b == 0 may carry eps == 0 ("not yet
/// attached to a field"); it then combines with any extension element.
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(int a) : a_(a) {}  // NOLINT(implicit)
    QuadExt(long a) : a_(a) {}  // NOLINT(implicit)
    QuadExt(Rational a) : a_(std::move(a)) {}  // NOLINT(implicit)
    QuadExt(Rational a, Rational b, long epsilon);

    static QuadExt sqrt_eps(long epsilon) { return QuadExt(0, 1, epsilon); }

    const Rational& re() const { return a_; }
    const Rational& im() const { return b_; }
    long epsilon() const { return eps_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool in_base() const { return b_ == 0; }

    QuadExt conj() const;
    Rational norm() const;
    /// Trace to F0: 2a.
    Rational trace() const { return 2 * a_; }

    QuadExt& operator+=(const QuadExt& o);
    QuadExt& operator-=(const QuadExt& o);
    QuadExt& operator*=(const QuadExt& o);
    QuadExt& operator/=(const QuadExt& o);
    QuadExt operator-() const;

    friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
    friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
    friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
    friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
    friend bool operator==(const QuadExt& x, const QuadExt& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

    std::string to_string() const;

private:
    static long join_eps(long e1, long e2);

    Rational a_{0};
    Rational b_{0};
    long eps_ = 0;
};

std::ostream& operator<<(std::ostream& os, const QuadExt& x);

/// min(val a, val b); valid because {1, sqrt eps} is an O_F-basis.
Valuation val_F(const QuadExt& x, long p);

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const QuadExt& x) { return x.is_zero(); }
inline Rational conj(const Rational& x) { return x; }
inline QuadExt conj(const QuadExt& x) { return x.conj(); }

}  // namespace orbint
