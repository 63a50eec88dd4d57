#pragma once

#include <vector>

#include "catlab/rational.hpp"

namespace catlab {

/// Dense matrix of exact rationals, row-major.
struct RationalMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Rational> a;

    RationalMatrix() = default;
    RationalMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * static_cast<std::size_t>(c)) {}

    static RationalMatrix identity(int n);

    Rational& at(int i, int j) { return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(j)]; }
    const Rational& at(int i, int j) const { return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(j)]; }

    RationalMatrix transpose() const;

    friend bool operator==(const RationalMatrix& x, const RationalMatrix& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
};

RationalMatrix mat_mul(const RationalMatrix& x, const RationalMatrix& y);
RationalMatrix mat_sub(const RationalMatrix& x, const RationalMatrix& y);
RationalMatrix mat_scale(const RationalMatrix& x, const Rational& c);

/// Stack two matrices vertically (same column count).
RationalMatrix vstack(const RationalMatrix& top, const RationalMatrix& bottom);

} // namespace catlab
