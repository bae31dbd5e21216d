#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>

namespace orbint {

/// Integer Laurent polynomial sum c_d X^d in X = q^{-s}. Zero coefficients
/// are never stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly monomial(long long coeff, int exponent);

    bool is_zero() const { return coeffs_.empty(); }
    long long coeff(int exponent) const;
    const std::map<int, long long>& coefficients() const { return coeffs_; }

    /// Adds c X^d.
    void add_term(long long c, int d);

    /// Value at X = 1, i.e. at s = 0.
    long long value_at_one() const;
    /// sum d * c_d: d/ds at s = 0 divided by -log q.
    long long derivative_normalized() const;

    /// Multiplication by X^k.
    LaurentPoly shifted(int k) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator*=(long long c);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator*(LaurentPoly a, long long c) { return a *= c; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    /// e.g. "1 - X^-1"; "0" for the zero polynomial.
    std::string to_string() const;

private:
    std::map<int, long long> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& f);

}  // namespace orbint
