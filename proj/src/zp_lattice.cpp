#include "orbint/zp_lattice.hpp"

#include "orbint/errors.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace orbint::zp {

namespace {

using Column = std::vector<Rational>;

void axpy(Column& dst, const Rational& t, const Column& src) {
    for (std::size_t i = 0; i < dst.size(); ++i)
        if (!is_zero(src[i])) dst[i] -= t * src[i];
}

struct Pivot {
    std::size_t row;
    long exponent;
};

// Column echelon over Z_(p); returns columns and their pivots.
std::vector<Column> echelon_columns(const QMat& gens, long p, std::vector<Pivot>& pivots) {
    const std::size_t m = gens.rows();
    std::vector<Column> cols;
    cols.reserve(gens.cols());
    for (std::size_t j = 0; j < gens.cols(); ++j) {
        Column c(m);
        bool nonzero = false;
        for (std::size_t i = 0; i < m; ++i) {
            c[i] = gens(i, j);
            nonzero = nonzero || !is_zero(c[i]);
        }
        if (nonzero) cols.push_back(std::move(c));
    }

    std::size_t pc = 0;
    for (std::size_t r = 0; r < m && pc < cols.size(); ++r) {
        std::size_t best = cols.size();
        Valuation best_val = Valuation::infinity();
        for (std::size_t j = pc; j < cols.size(); ++j) {
            if (is_zero(cols[j][r])) continue;
            Valuation v = val_p(cols[j][r], p);
            if (best == cols.size() || v < best_val) {
                best = j;
                best_val = v;
            }
        }
        if (best == cols.size()) continue;
        std::swap(cols[pc], cols[best]);
        const long a = best_val.value();
        const Rational pa = p_power(p, a);
        Rational unit = cols[pc][r] / pa;
        for (auto& x : cols[pc]) x /= unit;
        for (std::size_t j = pc + 1; j < cols.size(); ++j) {
            if (is_zero(cols[j][r])) continue;
            Rational t = cols[j][r] / pa;
            axpy(cols[j], t, cols[pc]);
        }
        pivots.push_back({r, a});
        ++pc;
    }
    cols.resize(pc);

    // Reduce entries of column i in the pivot rows of later columns.
    for (std::size_t i = 0; i < cols.size(); ++i)
        for (std::size_t j = i + 1; j < cols.size(); ++j) {
            const auto [row, a] = pivots[j];
            const Rational& x = cols[i][row];
            if (is_zero(x)) continue;
            Rational rep = reduce_mod_power(x, a, p);
            if (rep == x) continue;
            Rational t = (x - rep) / p_power(p, a);
            axpy(cols[i], t, cols[j]);
        }
    return cols;
}

QMat to_matrix(const std::vector<Column>& cols, std::size_t m) {
    QMat h(m, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < m; ++i) h(i, j) = cols[j][i];
    return h;
}

struct FormLess {
    bool operator()(const QMat& a, const QMat& b) const { return form_less(a, b); }
};

}  // namespace

QMat echelon(const QMat& gens, long p) {
    std::vector<Pivot> pivots;
    return to_matrix(echelon_columns(gens, p, pivots), gens.rows());
}

QMat hnf(const QMat& gens, long p) {
    std::vector<Pivot> pivots;
    auto cols = echelon_columns(gens, p, pivots);
    if (cols.size() != gens.rows()) throw SingularError("lattice generators do not have full rank");
    return to_matrix(cols, gens.rows());
}

std::vector<long> diagonal_exponents(const QMat& h, long p) {
    std::vector<long> out(h.cols());
    for (std::size_t i = 0; i < h.cols(); ++i) out[i] = val_p(h(i, i), p).value();
    return out;
}

long index_val(const QMat& h, long p) {
    long s = 0;
    for (long a : diagonal_exponents(h, p)) s += a;
    return s;
}

bool contains(const QMat& h, const QMat& vecs, long p) {
    const std::size_t m = h.rows();
    if (vecs.rows() != m) throw std::invalid_argument("contains: dimension mismatch");
    for (std::size_t c = 0; c < vecs.cols(); ++c) {
        Column x(m);
        for (std::size_t r = 0; r < m; ++r) {
            Rational acc = vecs(r, c);
            for (std::size_t k = 0; k < r; ++k)
                if (!is_zero(h(r, k))) acc -= h(r, k) * x[k];
            x[r] = acc / h(r, r);
            if (!is_integral(x[r], p)) return false;
        }
    }
    return true;
}

bool is_sublattice(const QMat& a, const QMat& b, long p) { return contains(b, a, p); }

QMat sum(const QMat& a, const QMat& b, long p) { return hnf(hconcat(a, b), p); }

QMat standard_dual(const QMat& h, long p) { return hnf(inverse(h).transpose(), p); }

QMat dual(const QMat& h, const QMat& gram, long p) {
    if (is_zero(determinant(gram))) throw SingularError("dual: degenerate form");
    return hnf(inverse((gram * h).transpose()), p);
}

QMat intersect(const QMat& a, const QMat& b, long p) {
    return standard_dual(sum(standard_dual(a, p), standard_dual(b, p), p), p);
}

QMat scale(const QMat& h, const Rational& c, long p) { return hnf(h * c, p); }

bool is_stable(const QMat& h, const QMat& op, long p) { return contains(h, op * h, p); }

bool admits_stable_lattice(const QMat& op, long p) {
    for (const auto& c : charpoly(op))
        if (!is_integral(c, p)) return false;
    return true;
}

namespace {

QMat saturate(const std::vector<QMat>& ops, const QMat& gens, long p) {
    QMat current = echelon(gens, p);
    // Each non-final round either raises the rank or lowers the index.
    constexpr int kMaxRounds = 4096;
    for (int round = 0; round < kMaxRounds; ++round) {
        QMat big = current;
        for (const auto& op : ops) big = hconcat(big, op * current);
        QMat next = echelon(big, p);
        if (next == current) {
            if (current.cols() != gens.rows())
                throw SingularError("stable_span: closure is not of full rank");
            return current;
        }
        current = std::move(next);
    }
    throw std::runtime_error("stable_span: saturation did not converge");
}

}  // namespace

QMat stable_span(const std::vector<QMat>& ops, const QMat& gens, long p) {
    for (const auto& op : ops)
        if (!admits_stable_lattice(op, p))
            throw PreconditionError("stable_span: an operator has a non-integral characteristic polynomial");
    return saturate(ops, gens, p);
}

std::uint64_t bounded_power(long p, long k, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (long i = 0; i < k; ++i) {
        if (r > cap / static_cast<std::uint64_t>(p)) return cap + 1;
        r *= static_cast<std::uint64_t>(p);
    }
    return r;
}

bool form_less(const QMat& a, const QMat& b) {
    if (a.rows() != b.rows()) return a.rows() < b.rows();
    if (a.cols() != b.cols()) return a.cols() < b.cols();
    const auto& x = a.data();
    const auto& y = b.data();
    for (std::size_t k = 0; k < x.size(); ++k) {
        int c = cmp(x[k], y[k]);
        if (c != 0) return c < 0;
    }
    return false;
}

namespace {

// Basis of W / L over the residue ring generated by `scalars` (F_p, or
// F_{p^2} for O_F-lattices); W/L must be killed by p.
std::vector<QMat> residue_basis(const QMat& lattice, const QMat& w, const std::vector<QMat>& scalars, long p) {
    std::vector<QMat> basis;
    QMat cur = lattice;
    for (std::size_t j = 0; j < w.cols(); ++j) {
        QMat v = w.col(j);
        if (contains(cur, v, p)) continue;
        basis.push_back(v);
        QMat add = v;
        for (const auto& s : scalars) add = hconcat(add, s * v);
        cur = sum(cur, add, p);
    }
    return basis;
}

}  // namespace

std::vector<QMat> enumerate_stable(const QMat& lo, const QMat& hi, const std::vector<QMat>& ops,
                                   const std::vector<QMat>& scalars, long p, std::uint64_t max_quotient_order) {
    if (!is_sublattice(lo, hi, p)) return {};
    std::vector<QMat> all_ops = ops;
    all_ops.insert(all_ops.end(), scalars.begin(), scalars.end());
    for (const auto& op : all_ops)
        if (!is_stable(lo, op, p) || !is_stable(hi, op, p))
            throw PreconditionError("enumerate_stable: bounding lattices are not operator-stable");

    const long log_order = index_val(lo, p) - index_val(hi, p);
    if (bounded_power(p, log_order, max_quotient_order) > max_quotient_order)
        throw InstanceTooLarge(p, log_order, max_quotient_order);

    // Residue field elements as (a, b) meaning a + b*s for the single scalar s.
    if (scalars.size() > 1) throw std::invalid_argument("enumerate_stable: at most one scalar generator");
    const long field_size = scalars.empty() ? p : p * p;
    const Rational inv_p(1, p);

    std::set<QMat, FormLess> seen{lo};
    std::deque<QMat> queue{lo};
    while (!queue.empty()) {
        QMat node = std::move(queue.front());
        queue.pop_front();
        QMat w = intersect(scale(node, inv_p, p), hi, p);
        auto basis = residue_basis(node, w, scalars, p);
        const std::size_t k = basis.size();
        if (k == 0) continue;

        // Projective points of k-dimensional space: first nonzero coordinate is 1.
        std::vector<long> coords(k, 0);
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < k; ++i) total *= static_cast<std::uint64_t>(field_size);
        for (std::uint64_t idx = 1; idx < total; ++idx) {
            std::uint64_t t = idx;
            for (std::size_t i = 0; i < k; ++i) {
                coords[i] = static_cast<long>(t % field_size);
                t /= field_size;
            }
            std::size_t first = 0;
            while (coords[first] == 0) ++first;
            if (coords[first] != 1) continue;

            QMat x(node.rows(), 1);
            for (std::size_t i = first; i < k; ++i) {
                const long a = coords[i] % p;
                const long b = coords[i] / p;
                if (a != 0) x += basis[i] * Rational(a);
                if (b != 0) x += (scalars[0] * basis[i]) * Rational(b);
            }
            QMat child = saturate(all_ops, hconcat(node, x), p);
            if (seen.insert(child).second) queue.push_back(std::move(child));
        }
    }
    return {seen.begin(), seen.end()};
}

}  // namespace orbint::zp
