#include "orbint/lattice.hpp"

#include "orbint/errors.hpp"
#include "orbint/zp_lattice.hpp"

#include <ostream>

namespace orbint {

namespace {

void require_ring(const LocalLattice& l, Ring ring, const char* what) {
    if (l.ring() != ring)
        throw std::invalid_argument(std::string(what) + ": lattice ring does not match the argument type");
}

// Real generators of the O_F-span of F-columns: each column v and sqrt(eps) v.
QMat ext_generators(const FMat& vectors, long epsilon) { return realify(vectors, epsilon); }

std::vector<QMat> realify_all(const std::vector<FMat>& ops, long epsilon) {
    std::vector<QMat> out;
    out.reserve(ops.size());
    for (const auto& op : ops) out.push_back(realify(op, epsilon));
    return out;
}

// Real bilinear form Tr h(x, y) on F0^{2n}.
QMat trace_form(const FMat& form, bool sesquilinear, long epsilon) {
    const std::size_t n = form.rows();
    const QuadExt basis[2] = {QuadExt(1), QuadExt::sqrt_eps(epsilon)};
    QMat g(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (int s = 0; s < 2; ++s)
                for (int t = 0; t < 2; ++t) {
                    QuadExt left = sesquilinear ? basis[s].conj() : basis[s];
                    g(2 * i + s, 2 * j + t) = (left * form(i, j) * basis[t]).trace();
                }
    return g;
}

}  // namespace

LocalLattice LocalLattice::from_real(Ring ring, const FieldParams& params, const QMat& real_gens) {
    return LocalLattice(ring, params, zp::hnf(real_gens, params.p));
}

long LocalLattice::index_val() const {
    long v = zp::index_val(basis_, params_.p);
    return ring_ == Ring::Base ? v : v / 2;
}

bool operator<(const LocalLattice& a, const LocalLattice& b) {
    if (a.ring_ != b.ring_) return a.ring_ < b.ring_;
    return zp::form_less(a.basis_, b.basis_);
}

std::ostream& operator<<(std::ostream& os, const LocalLattice& l) {
    return os << (l.ring() == Ring::Base ? "O_F0" : "O_F") << "-lattice " << l.real_basis();
}

LocalLattice canonicalize(const QMat& basis, const FieldParams& params) {
    if (!basis.is_square() || is_zero(determinant(basis))) throw SingularError("canonicalize: singular basis");
    return LocalLattice::from_real(Ring::Base, params, basis);
}

LocalLattice canonicalize(const FMat& basis, const FieldParams& params) {
    if (!basis.is_square() || is_zero(determinant(basis))) throw SingularError("canonicalize: singular basis");
    return LocalLattice::from_real(Ring::Ext, params, ext_generators(basis, params.epsilon));
}

LocalLattice standard_lattice(Ring ring, std::size_t n, const FieldParams& params) {
    const std::size_t m = ring == Ring::Base ? n : 2 * n;
    return LocalLattice::from_real(ring, params, QMat::identity(m));
}

LocalLattice scaled(const LocalLattice& l, const Rational& c) {
    if (is_zero(c)) throw SingularError("scaled: zero factor");
    return LocalLattice::from_real(l.ring(), l.params(), l.real_basis() * c);
}

QMat sqrt_eps_operator(std::size_t n, long epsilon) {
    return realify(FMat::identity(n) * QuadExt::sqrt_eps(epsilon), epsilon);
}

bool contains(const LocalLattice& l, const QMat& vectors) {
    require_ring(l, Ring::Base, "contains");
    return zp::contains(l.real_basis(), vectors, l.params().p);
}

bool contains(const LocalLattice& l, const FMat& vectors) {
    require_ring(l, Ring::Ext, "contains");
    return zp::contains(l.real_basis(), ext_generators(vectors, l.params().epsilon), l.params().p);
}

bool is_sublattice(const LocalLattice& a, const LocalLattice& b) {
    if (a.ring() != b.ring()) throw std::invalid_argument("is_sublattice: ring mismatch");
    return zp::is_sublattice(a.real_basis(), b.real_basis(), a.params().p);
}

LocalLattice dual(const LocalLattice& l, const QMat& form) {
    require_ring(l, Ring::Base, "dual");
    return LocalLattice::from_real(Ring::Base, l.params(), zp::dual(l.real_basis(), form, l.params().p));
}

LocalLattice dual(const LocalLattice& l, const FMat& form, bool sesquilinear) {
    require_ring(l, Ring::Ext, "dual");
    if (is_zero(determinant(form))) throw SingularError("dual: degenerate form");
    if (sesquilinear && !(form.adjoint() == form)) throw std::invalid_argument("dual: form is not hermitian");
    QMat g = trace_form(form, sesquilinear, l.params().epsilon);
    return LocalLattice::from_real(Ring::Ext, l.params(), zp::dual(l.real_basis(), g, l.params().p));
}

bool is_stable(const LocalLattice& l, const QMat& op) {
    require_ring(l, Ring::Base, "is_stable");
    return zp::is_stable(l.real_basis(), op, l.params().p);
}

bool is_stable(const LocalLattice& l, const FMat& op) {
    require_ring(l, Ring::Ext, "is_stable");
    return zp::is_stable(l.real_basis(), realify(op, l.params().epsilon), l.params().p);
}

bool is_self_dual(const LocalLattice& l, const QMat& form) { return dual(l, form) == l; }

bool is_self_dual(const LocalLattice& l, const FMat& hermitian_form) { return dual(l, hermitian_form, true) == l; }

LocalLattice stable_span(const FieldParams& params, const std::vector<QMat>& ops, const std::vector<QMat>& generators) {
    if (generators.empty()) throw SingularError("stable_span: no generators");
    QMat gens(generators.front().rows(), 0);
    for (const auto& g : generators) gens = hconcat(gens, g);
    return LocalLattice::from_real(Ring::Base, params, zp::stable_span(ops, gens, params.p));
}

LocalLattice stable_span(const FieldParams& params, const std::vector<FMat>& ops, const std::vector<FMat>& generators) {
    if (generators.empty()) throw SingularError("stable_span: no generators");
    const std::size_t n = generators.front().rows();
    QMat gens(2 * n, 0);
    for (const auto& g : generators) gens = hconcat(gens, ext_generators(g, params.epsilon));
    auto real_ops = realify_all(ops, params.epsilon);
    real_ops.push_back(sqrt_eps_operator(n, params.epsilon));
    return LocalLattice::from_real(Ring::Ext, params, zp::stable_span(real_ops, gens, params.p));
}

std::vector<LocalLattice> enumerate_stable_between(const LocalLattice& lo, const LocalLattice& hi,
                                                   const std::vector<QMat>& ops, std::uint64_t threshold) {
    require_ring(lo, Ring::Base, "enumerate_stable_between");
    require_ring(hi, Ring::Base, "enumerate_stable_between");
    auto forms = zp::enumerate_stable(lo.real_basis(), hi.real_basis(), ops, {}, lo.params().p, threshold);
    std::vector<LocalLattice> out;
    out.reserve(forms.size());
    for (auto& f : forms) out.push_back(LocalLattice::from_real(Ring::Base, lo.params(), f));
    return out;
}

std::vector<LocalLattice> enumerate_stable_between(const LocalLattice& lo, const LocalLattice& hi,
                                                   const std::vector<FMat>& ops, std::uint64_t threshold) {
    require_ring(lo, Ring::Ext, "enumerate_stable_between");
    require_ring(hi, Ring::Ext, "enumerate_stable_between");
    const long eps = lo.params().epsilon;
    auto forms = zp::enumerate_stable(lo.real_basis(), hi.real_basis(), realify_all(ops, eps),
                                      {sqrt_eps_operator(lo.dim(), eps)}, lo.params().p, threshold);
    std::vector<LocalLattice> out;
    out.reserve(forms.size());
    for (auto& f : forms) out.push_back(LocalLattice::from_real(Ring::Ext, lo.params(), f));
    return out;
}

}  // namespace orbint
