#include "orbint/matrix.hpp"

namespace orbint {

FMat to_ext(const QMat& m) {
    FMat r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = QuadExt(m(i, j));
    return r;
}

QMat realify(const FMat& m, long epsilon) {
    QMat r(2 * m.rows(), 2 * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const QuadExt& z = m(i, j);
            if (!z.in_base() && z.epsilon() != epsilon)
                throw std::invalid_argument("realify: entry belongs to a different extension");
            r(2 * i, 2 * j) = z.re();
            r(2 * i, 2 * j + 1) = Rational(epsilon) * z.im();
            r(2 * i + 1, 2 * j) = z.im();
            r(2 * i + 1, 2 * j + 1) = z.re();
        }
    return r;
}

FMat complexify_column(const QMat& v, long epsilon) {
    if (v.cols() != 1 || v.rows() % 2 != 0) throw std::invalid_argument("complexify_column: expects 2n x 1");
    FMat r(v.rows() / 2, 1);
    for (std::size_t i = 0; i < r.rows(); ++i) r(i, 0) = QuadExt(v(2 * i, 0), v(2 * i + 1, 0), epsilon);
    return r;
}

}  // namespace orbint
