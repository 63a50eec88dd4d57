#include "catlab/linalg.hpp"

#include <algorithm>
#include <cstdint>

#include "catlab/errors.hpp"
#include "catlab/monomial.hpp"

namespace catlab {

bool LinalgConfig::modular_fastpath = true;

namespace {

// 2^62 - 57, the largest prime below 2^62. Products of two residues fit in
// an unsigned 128-bit intermediate.
constexpr std::uint64_t kPrime = 4611686018427387847ULL;

std::uint64_t mulmod(std::uint64_t x, std::uint64_t y) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(x) * y) % kPrime);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t acc = 1;
    while (exp > 0) {
        if (exp & 1) acc = mulmod(acc, base);
        base = mulmod(base, base);
        exp >>= 1;
    }
    return acc;
}

std::uint64_t invmod(std::uint64_t x) { return powmod(x, kPrime - 2); }

std::uint64_t mod_reduce(const mpz_class& z) {
    return mpz_fdiv_ui(z.get_mpz_t(), kPrime);
}

// Nonzero columns of row `r` of `m`, from column `from` on.
std::vector<int> nonzero_cols(const RationalMatrix& m, int r, int from) {
    std::vector<int> nz;
    for (int j = from; j < m.cols; ++j)
        if (m.at(r, j) != 0) nz.push_back(j);
    return nz;
}

} // namespace

RrefResult rref(const RationalMatrix& m) {
    RationalMatrix a = m;
    std::vector<int> pivots;
    int pr = 0;
    for (int c = 0; c < a.cols && pr < a.rows; ++c) {
        int sel = -1;
        for (int i = pr; i < a.rows; ++i)
            if (a.at(i, c) != 0) { sel = i; break; }
        if (sel < 0) continue;
        if (sel != pr)
            for (int j = c; j < a.cols; ++j) std::swap(a.at(sel, j), a.at(pr, j));
        Rational inv = 1 / a.at(pr, c);
        for (int j = c; j < a.cols; ++j)
            if (a.at(pr, j) != 0) a.at(pr, j) *= inv;
        std::vector<int> nz = nonzero_cols(a, pr, c);
        for (int i = 0; i < a.rows; ++i) {
            if (i == pr) continue;
            Rational f = a.at(i, c);
            if (f == 0) continue;
            for (int j : nz) a.at(i, j) -= f * a.at(pr, j);
        }
        pivots.push_back(c);
        ++pr;
    }
    RationalMatrix out(pr, a.cols);
    std::copy(a.a.begin(), a.a.begin() + static_cast<long>(pr) * a.cols,
              out.a.begin());
    return {std::move(out), std::move(pivots)};
}

int rank_exact_bareiss(const RationalMatrix& m) {
    int rows = m.rows, cols = m.cols;
    if (rows == 0 || cols == 0) return 0;
    std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
    for (int i = 0; i < rows; ++i) {
        Integer den = 1;
        for (int j = 0; j < cols; ++j)
            den = lcm(den, Integer(m.at(i, j).get_den()));
        for (int j = 0; j < cols; ++j) {
            const Rational& q = m.at(i, j);
            a[i][j] = Integer(q.get_num()) * (den / Integer(q.get_den()));
        }
    }
    Integer prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int sel = -1;
        for (int i = r; i < rows; ++i)
            if (a[i][c] != 0) { sel = i; break; }
        if (sel < 0) continue;
        if (sel != r) std::swap(a[sel], a[r]);
        for (int i = r + 1; i < rows; ++i) {
            if (a[i][c] == 0 && a[r][c] == 1 && prev == 1) continue;
            for (int j = c + 1; j < cols; ++j) {
                Integer v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = v;
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

std::optional<int> rank_mod_prime(const RationalMatrix& m) {
    int rows = m.rows, cols = m.cols;
    if (rows == 0 || cols == 0) return 0;
    std::vector<std::uint64_t> a(static_cast<std::size_t>(rows) * cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            const Rational& q = m.at(i, j);
            std::uint64_t num = mod_reduce(q.get_num());
            std::uint64_t den = mod_reduce(q.get_den());
            if (den == 0) return std::nullopt;
            std::uint64_t v = num;
            if (den != 1 && v != 0) v = mulmod(v, invmod(den));
            a[static_cast<std::size_t>(i) * cols + j] = v;
        }
    auto at = [&](int i, int j) -> std::uint64_t& {
        return a[static_cast<std::size_t>(i) * cols + j];
    };
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int sel = -1;
        for (int i = r; i < rows; ++i)
            if (at(i, c) != 0) { sel = i; break; }
        if (sel < 0) continue;
        if (sel != r)
            for (int j = c; j < cols; ++j) std::swap(at(sel, j), at(r, j));
        std::uint64_t inv = invmod(at(r, c));
        for (int i = r + 1; i < rows; ++i) {
            std::uint64_t f = at(i, c);
            if (f == 0) continue;
            f = mulmod(f, inv);
            for (int j = c; j < cols; ++j) {
                std::uint64_t sub = mulmod(f, at(r, j));
                std::uint64_t& cell = at(i, j);
                cell = (cell >= sub) ? cell - sub : cell + (kPrime - sub);
            }
        }
        ++r;
    }
    return r;
}

int rank(const RationalMatrix& m) {
    if (LinalgConfig::modular_fastpath) {
        std::optional<int> lower = rank_mod_prime(m);
        if (lower && *lower == std::min(m.rows, m.cols)) return *lower;
    }
    return rank_exact_bareiss(m);
}

Rational determinant(const RationalMatrix& m) {
    if (m.rows != m.cols) throw LengthMismatch("determinant: matrix not square");
    int n = m.rows;
    if (n == 0) return 1;
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    Rational scale = 1;
    for (int i = 0; i < n; ++i) {
        Integer den = 1;
        for (int j = 0; j < n; ++j)
            den = lcm(den, Integer(m.at(i, j).get_den()));
        for (int j = 0; j < n; ++j) {
            const Rational& q = m.at(i, j);
            a[i][j] = Integer(q.get_num()) * (den / Integer(q.get_den()));
        }
        scale *= Rational(den);
    }
    Integer prev = 1;
    int sign = 1;
    for (int c = 0; c < n; ++c) {
        int sel = -1;
        for (int i = c; i < n; ++i)
            if (a[i][c] != 0) { sel = i; break; }
        if (sel < 0) return 0;
        if (sel != c) { std::swap(a[sel], a[c]); sign = -sign; }
        for (int i = c + 1; i < n; ++i) {
            for (int j = c + 1; j < n; ++j) {
                Integer v = a[c][c] * a[i][j] - a[i][c] * a[c][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = v;
            }
            a[i][c] = 0;
        }
        prev = a[c][c];
    }
    Rational det(a[n - 1][n - 1] * sign);
    return det / scale;
}

RationalMatrix kernel(const RationalMatrix& m) {
    RrefResult e = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : e.pivot_cols) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < m.cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    RationalMatrix raw(static_cast<int>(free_cols.size()), m.cols);
    for (int k = 0; k < raw.rows; ++k) {
        int f = free_cols[k];
        raw.at(k, f) = 1;
        for (int j = 0; j < e.mat.rows; ++j)
            raw.at(k, e.pivot_cols[j]) = -e.mat.at(j, f);
    }
    return rref(raw).mat;
}

std::optional<std::vector<Rational>> solve(const RationalMatrix& m,
                                           const std::vector<Rational>& b) {
    if (static_cast<int>(b.size()) != m.rows)
        throw LengthMismatch("solve: rhs length differs from row count");
    RationalMatrix aug(m.rows, m.cols + 1);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[i];
    }
    RrefResult e = rref(aug);
    std::vector<Rational> x(m.cols, Rational(0));
    for (int j = 0; j < e.mat.rows; ++j) {
        if (e.pivot_cols[j] == m.cols) return std::nullopt;
        x[e.pivot_cols[j]] = e.mat.at(j, m.cols);
    }
    return x;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
    if (m.rows != m.cols) return std::nullopt;
    int n = m.rows;
    RationalMatrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    RrefResult e = rref(aug);
    if (static_cast<int>(e.pivot_cols.size()) != n || e.pivot_cols[n - 1] != n - 1)
        return std::nullopt;
    RationalMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = e.mat.at(i, n + j);
    return inv;
}

GradedSubspace GradedSubspace::zero(int num_vars, int degree, Ring ring) {
    GradedSubspace s;
    s.num_vars = num_vars;
    s.degree = degree;
    s.ring = ring;
    s.basis = RationalMatrix(0, static_cast<int>(dim_sym(num_vars, degree)));
    return s;
}

GradedSubspace GradedSubspace::full(int num_vars, int degree, Ring ring) {
    GradedSubspace s;
    s.num_vars = num_vars;
    s.degree = degree;
    s.ring = ring;
    int n = static_cast<int>(dim_sym(num_vars, degree));
    s.basis = RationalMatrix::identity(n);
    s.pivot_cols.resize(n);
    for (int c = 0; c < n; ++c) s.pivot_cols[c] = c;
    return s;
}

GradedSubspace GradedSubspace::from_rows(int num_vars, int degree, Ring ring,
                                         const RationalMatrix& raw) {
    int ambient = static_cast<int>(dim_sym(num_vars, degree));
    if (raw.cols != ambient && raw.rows > 0)
        throw LengthMismatch("GradedSubspace: row length differs from ambient dimension");
    GradedSubspace s;
    s.num_vars = num_vars;
    s.degree = degree;
    s.ring = ring;
    if (raw.rows == 0) {
        s.basis = RationalMatrix(0, ambient);
        return s;
    }
    RrefResult e = rref(raw);
    s.basis = std::move(e.mat);
    s.pivot_cols = std::move(e.pivot_cols);
    return s;
}

int GradedSubspace::ambient_dim() const {
    return static_cast<int>(dim_sym(num_vars, degree));
}

std::vector<Rational> reduce_mod_rref(const RationalMatrix& basis,
                                      const std::vector<int>& pivot_cols,
                                      std::vector<Rational> v) {
    for (int j = 0; j < basis.rows; ++j) {
        Rational f = v[pivot_cols[j]];
        if (f == 0) continue;
        for (int c = pivot_cols[j]; c < basis.cols; ++c) {
            const Rational& bv = basis.at(j, c);
            if (bv != 0) v[c] -= f * bv;
        }
    }
    return v;
}

bool GradedSubspace::contains_vector(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != basis.cols)
        throw LengthMismatch("contains_vector: length differs from ambient dimension");
    std::vector<Rational> red = reduce_mod_rref(basis, pivot_cols, v);
    for (const Rational& q : red)
        if (q != 0) return false;
    return true;
}

bool GradedSubspace::contains_subspace(const GradedSubspace& other) const {
    if (num_vars != other.num_vars || degree != other.degree || ring != other.ring)
        throw AmbientMismatch("contains_subspace: ambient spaces differ");
    for (int i = 0; i < other.basis.rows; ++i) {
        std::vector<Rational> v(other.basis.cols);
        for (int j = 0; j < other.basis.cols; ++j) v[j] = other.basis.at(i, j);
        if (!contains_vector(v)) return false;
    }
    return true;
}

bool GradedSubspace::operator==(const GradedSubspace& other) const {
    return num_vars == other.num_vars && degree == other.degree &&
           ring == other.ring && basis == other.basis;
}

std::vector<HomogeneousPoly> GradedSubspace::basis_polys() const {
    std::vector<HomogeneousPoly> out;
    out.reserve(basis.rows);
    for (int i = 0; i < basis.rows; ++i) {
        std::vector<Rational> v(basis.cols);
        for (int j = 0; j < basis.cols; ++j) v[j] = basis.at(i, j);
        out.push_back(HomogeneousPoly::from_coefficient_vector(num_vars, degree, ring, v));
    }
    return out;
}

GradedSubspace subspace_sum(const GradedSubspace& x, const GradedSubspace& y) {
    if (x.num_vars != y.num_vars || x.degree != y.degree || x.ring != y.ring)
        throw AmbientMismatch("subspace_sum: ambient spaces differ");
    return GradedSubspace::from_rows(x.num_vars, x.degree, x.ring,
                                     vstack(x.basis, y.basis));
}

GradedSubspace row_space(int num_vars, int degree, Ring ring,
                         const RationalMatrix& m) {
    return GradedSubspace::from_rows(num_vars, degree, ring, m);
}

GradedSubspace kernel_subspace(int num_vars, int degree, Ring ring,
                               const RationalMatrix& m) {
    GradedSubspace s;
    s.num_vars = num_vars;
    s.degree = degree;
    s.ring = ring;
    RrefResult e = rref(kernel(m));
    s.basis = std::move(e.mat);
    s.pivot_cols = std::move(e.pivot_cols);
    return s;
}

GradedSubspace perp(const GradedSubspace& s) {
    MonomialTable table(s.num_vars, s.degree);
    int n = s.ambient_dim();
    RationalMatrix scaled(s.basis.rows, n);
    for (int j = 0; j < n; ++j) {
        Integer g = 1;
        for (int e : table.at(j)) g *= factorial(static_cast<unsigned long>(e));
        Rational gq(g);
        for (int i = 0; i < s.basis.rows; ++i) {
            const Rational& v = s.basis.at(i, j);
            if (v != 0) scaled.at(i, j) = v * gq;
        }
    }
    Ring other = (s.ring == Ring::Point) ? Ring::Dual : Ring::Point;
    return kernel_subspace(s.num_vars, s.degree, other, scaled);
}

} // namespace catlab
