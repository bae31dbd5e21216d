#include "orbint/field.hpp"

#include "orbint/errors.hpp"

#include <ostream>
#include <stdexcept>

namespace orbint {

long Valuation::value() const {
    if (infinite_) throw std::domain_error("valuation of zero is infinite");
    return value_;
}

std::string Valuation::to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

std::ostream& operator<<(std::ostream& os, const Valuation& v) { return os << v.to_string(); }

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_quadratic_residue(long a, long p) {
    long r = ((a % p) + p) % p;
    if (r == 0) return false;
    // Euler's criterion.
    mpz_class base = r, result;
    mpz_class exp = (p - 1) / 2, mod = p;
    mpz_powm(result.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return result == 1;
}

long smallest_nonresidue(long p) {
    for (long a = 2; a < p; ++a)
        if (!is_quadratic_residue(a, p)) return a;
    throw std::invalid_argument("no quadratic non-residue mod " + std::to_string(p));
}

FieldParams FieldParams::make(long p, std::optional<long> epsilon) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime, got " + std::to_string(p));
    long e = epsilon ? *epsilon : smallest_nonresidue(p);
    if (e % p == 0) throw std::invalid_argument("epsilon must be a unit at p");
    if (is_quadratic_residue(e, p))
        throw std::invalid_argument("epsilon = " + std::to_string(e) + " is a square mod " + std::to_string(p));
    return FieldParams{p, e};
}

Valuation val_p(const mpz_class& x, long p) {
    if (x == 0) return Valuation::infinity();
    mpz_class rest;
    mpz_class pp = p;
    long v = static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), pp.get_mpz_t()));
    return Valuation(v);
}

Valuation val_p(const Rational& x, long p) {
    if (sgn(x) == 0) return Valuation::infinity();
    return Valuation(val_p(x.get_num(), p).value() - val_p(x.get_den(), p).value());
}

int eta(const Rational& x, long p) {
    auto v = val_p(x, p);
    if (v.is_infinite()) throw std::domain_error("eta is undefined at zero");
    return (v.value() % 2 == 0) ? 1 : -1;
}

Rational p_power(long p, long k) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k < 0 ? -k : k));
    if (k >= 0) return Rational(r);
    Rational out(1, r);
    out.canonicalize();
    return out;
}

Rational unit_part(const Rational& x, long p) {
    auto v = val_p(x, p);
    if (v.is_infinite()) throw std::domain_error("unit part of zero");
    Rational r = x / p_power(p, v.value());
    return r;
}

bool is_integral(const Rational& x, long p) { return val_p(x, p) >= Valuation(0); }

bool is_unit(const Rational& x, long p) { return val_p(x, p) == Valuation(0); }

Rational reduce_mod_power(const Rational& x, long k, long p) {
    auto v = val_p(x, p);
    if (v.is_infinite() || v.value() >= k) return Rational(0);
    long K = v.value() < 0 ? -v.value() : 0;
    Rational y = x * p_power(p, K);
    mpz_class mod = p_power(p, k + K).get_num();
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), y.get_den().get_mpz_t(), mod.get_mpz_t());
    mpz_class n = y.get_num() * inv;
    mpz_fdiv_r(n.get_mpz_t(), n.get_mpz_t(), mod.get_mpz_t());
    Rational out(n, p_power(p, K).get_num());
    out.canonicalize();
    return out;
}

QuadExt::QuadExt(Rational a, Rational b, long epsilon) : a_(std::move(a)), b_(std::move(b)), eps_(epsilon) {
    if (b_ != 0 && eps_ == 0) throw std::invalid_argument("extension element needs a nonzero epsilon");
}

long QuadExt::join_eps(long e1, long e2) {
    if (e1 == 0) return e2;
    if (e2 == 0 || e1 == e2) return e1;
    throw std::invalid_argument("mixing elements of different quadratic extensions");
}

QuadExt QuadExt::conj() const {
    QuadExt r = *this;
    r.b_ = -r.b_;
    return r;
}

Rational QuadExt::norm() const {
    Rational r = a_ * a_ - Rational(eps_) * b_ * b_;
    return r;
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
    eps_ = join_eps(eps_, o.eps_);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
    eps_ = join_eps(eps_, o.eps_);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
    eps_ = join_eps(eps_, o.eps_);
    Rational a = a_ * o.a_ + Rational(eps_) * b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
    if (o.is_zero()) throw std::domain_error("division by zero in F");
    eps_ = join_eps(eps_, o.eps_);
    Rational n = o.norm();
    QuadExt oc = o.conj();
    *this *= oc;
    a_ /= n;
    b_ /= n;
    return *this;
}

QuadExt QuadExt::operator-() const {
    QuadExt r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

std::string QuadExt::to_string() const {
    if (b_ == 0) return a_.get_str();
    return a_.get_str() + (sgn(b_) < 0 ? " - " : " + ") + Rational(abs(b_)).get_str() + "*sqrt(" +
           std::to_string(eps_) + ")";
}

std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.to_string(); }

Valuation val_F(const QuadExt& x, long p) { return std::min(val_p(x.re(), p), val_p(x.im(), p)); }

}  // namespace orbint
