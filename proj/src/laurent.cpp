#include "orbint/laurent.hpp"

namespace orbint {

LaurentPoly LaurentPoly::monomial(long long coeff, int exponent) {
    LaurentPoly f;
    f.add_term(coeff, exponent);
    return f;
}

long long LaurentPoly::coeff(int exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? 0 : it->second;
}

void LaurentPoly::add_term(long long c, int d) {
    if (c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(d, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

long long LaurentPoly::value_at_one() const {
    long long s = 0;
    for (const auto& [d, c] : coeffs_) s += c;
    return s;
}

long long LaurentPoly::derivative_normalized() const {
    long long s = 0;
    for (const auto& [d, c] : coeffs_) s += static_cast<long long>(d) * c;
    return s;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly f;
    for (const auto& [d, c] : coeffs_) f.coeffs_.emplace(d + k, c);
    return f;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [d, c] : o.coeffs_) add_term(c, d);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(long long c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [d, v] : coeffs_) v *= c;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly f;
    for (const auto& [d1, c1] : a.coeffs_)
        for (const auto& [d2, c2] : b.coeffs_) f.add_term(c1 * c2, d1 + d2);
    return f;
}

std::string LaurentPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [d, c] : coeffs_) {
        long long mag = c < 0 ? -c : c;
        if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        first = false;
        if (d == 0) {
            out += std::to_string(mag);
            continue;
        }
        if (mag != 1) out += std::to_string(mag) + "*";
        out += "X";
        if (d != 1) out += "^" + std::to_string(d);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& f) { return os << f.to_string(); }

}  // namespace orbint
