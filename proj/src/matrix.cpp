#include "catlab/matrix.hpp"

#include "catlab/errors.hpp"

namespace catlab {

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

RationalMatrix mat_mul(const RationalMatrix& x, const RationalMatrix& y) {
    if (x.cols != y.rows) throw LengthMismatch("mat_mul: inner dimensions differ");
    RationalMatrix r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Rational& xv = x.at(i, k);
            if (xv == 0) continue;
            for (int j = 0; j < y.cols; ++j) {
                const Rational& yv = y.at(k, j);
                if (yv != 0) r.at(i, j) += xv * yv;
            }
        }
    return r;
}

RationalMatrix mat_sub(const RationalMatrix& x, const RationalMatrix& y) {
    if (x.rows != y.rows || x.cols != y.cols)
        throw LengthMismatch("mat_sub: shapes differ");
    RationalMatrix r(x.rows, x.cols);
    for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] - y.a[i];
    return r;
}

RationalMatrix mat_scale(const RationalMatrix& x, const Rational& c) {
    RationalMatrix r(x.rows, x.cols);
    for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] * c;
    return r;
}

RationalMatrix vstack(const RationalMatrix& top, const RationalMatrix& bottom) {
    if (top.rows == 0) return bottom;
    if (bottom.rows == 0) return top;
    if (top.cols != bottom.cols) throw LengthMismatch("vstack: column counts differ");
    RationalMatrix r(top.rows + bottom.rows, top.cols);
    std::copy(top.a.begin(), top.a.end(), r.a.begin());
    std::copy(bottom.a.begin(), bottom.a.end(), r.a.begin() + top.a.size());
    return r;
}

} // namespace catlab
