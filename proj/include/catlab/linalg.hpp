#pragma once

#include <optional>
#include <vector>

#include "catlab/matrix.hpp"
#include "catlab/poly.hpp"

namespace catlab {

// Global switches for the exact linear algebra kernels.
struct LinalgConfig {
    // When true, rank computations first try a single modular elimination;
    // the modular count is a lower bound on the true rank and is accepted as
    // exact only when it already equals min(rows, cols).
    static bool modular_fastpath;
};

struct RrefResult {
    RationalMatrix mat;        // reduced row echelon form, zero rows dropped
    std::vector<int> pivot_cols;
};

// Canonical reduced row echelon form with deterministic pivoting (first
// nonzero entry scanning columns left to right, rows top to bottom). Two row
// spaces are equal iff their RREFs are identical.
RrefResult rref(const RationalMatrix& m);

// Rank over the rationals. Uses the modular fast path when enabled and
// conclusive, otherwise fraction-free Bareiss elimination over the integers.
int rank(const RationalMatrix& m);

// Always runs the exact fraction-free elimination.
int rank_exact_bareiss(const RationalMatrix& m);

// Rank of the matrix reduced mod a fixed 62-bit prime. Never exceeds the
// rational rank. Returns nullopt if an entry's denominator vanishes mod p.
std::optional<int> rank_mod_prime(const RationalMatrix& m);

// Determinant of a square matrix via fraction-free elimination.
Rational determinant(const RationalMatrix& m);

// Basis of the right null space {x : m x = 0}, one row per basis vector,
// re-echelonized so the result is canonical.
RationalMatrix kernel(const RationalMatrix& m);

// Solves m x = b exactly. Returns nullopt when the system is inconsistent.
// When the solution space is positive-dimensional, returns the solution whose
// free coordinates are zero.
std::optional<std::vector<Rational>> solve(const RationalMatrix& m,
                                           const std::vector<Rational>& b);

// Exact inverse; nullopt when m is not square or singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& m);

// A subspace of the degree-`ambient_degree` homogeneous component of the
// polynomial ring in `ambient_num_vars` variables (point or dual ring),
// stored as a canonical RREF basis in the descending-lex monomial coordinates.
struct GradedSubspace {
    int num_vars = 0;
    int degree = 0;
    Ring ring = Ring::Point;
    RationalMatrix basis;          // RREF, one basis vector per row
    std::vector<int> pivot_cols;

    static GradedSubspace zero(int num_vars, int degree, Ring ring);
    static GradedSubspace full(int num_vars, int degree, Ring ring);
    // Rows of `raw` are coordinate vectors of spanning elements.
    static GradedSubspace from_rows(int num_vars, int degree, Ring ring,
                                    const RationalMatrix& raw);

    int dim() const { return basis.rows; }
    int ambient_dim() const;

    bool contains_vector(const std::vector<Rational>& v) const;
    bool contains_subspace(const GradedSubspace& other) const;

    // Canonical bases make equality a coordinate-wise comparison.
    bool operator==(const GradedSubspace& other) const;

    std::vector<HomogeneousPoly> basis_polys() const;
};

// Normal form of v modulo the row space of an RREF matrix: subtracts the
// unique combination of basis rows matching v on the pivot columns.
std::vector<Rational> reduce_mod_rref(const RationalMatrix& basis,
                                      const std::vector<int>& pivot_cols,
                                      std::vector<Rational> v);

GradedSubspace subspace_sum(const GradedSubspace& x, const GradedSubspace& y);

// Row space of the catalecticant-style matrix, tagged with ambient data.
GradedSubspace row_space(int num_vars, int degree, Ring ring,
                         const RationalMatrix& m);

// Right kernel of m, tagged with ambient data (columns of m are indexed by
// the degree-`degree` monomials of the stated ring).
GradedSubspace kernel_subspace(int num_vars, int degree, Ring ring,
                               const RationalMatrix& m);

// Orthogonal complement under the contraction pairing of equal degrees. The
// pairing's Gram matrix on the monomial basis is diagonal with entries
// prod_t(a_t!), so this is the kernel of basis * gram.
GradedSubspace perp(const GradedSubspace& s);

} // namespace catlab
