#pragma once

#include <map>
#include <set>
#include <vector>

#include "catlab/hilbert.hpp"
#include "catlab/linalg.hpp"

namespace catlab {

// A homogeneous ideal known degree by degree: pieces[j] is the degree-j
// component as a canonical echelon subspace.  Pieces are computed up to
// max_computed_degree and extended on demand by grow_to.  Finished ideals
// are immutable values; growth copies.
struct GradedIdeal {
    int num_vars = 0;
    Ring ring = Ring::Dual;
    std::map<int, GradedSubspace> pieces;
    std::map<int, GradedSubspace> generators;
    std::set<int> generator_degrees;
    int max_computed_degree = -1;

    const GradedSubspace& piece(int j) const;
    bool has_piece(int j) const { return pieces.count(j) != 0; }

    /// Piecewise equality of computed components for degrees 0..through.
    bool agrees_with(const GradedIdeal& other, int through) const;
};

/// Ideal generated by the given subspaces (each tagged with its own degree).
/// Pieces are computed for all degrees up to the largest generator degree.
/// Empty gens with explicit ambient data give the zero ideal.
GradedIdeal ideal_from_generators(int num_vars, Ring ring,
                                  const std::vector<GradedSubspace>& gens);

/// Extends pieces to degree D via pieces[j+1] = span(S^1 * pieces[j], G_{j+1}).
/// Idempotent; growing to a degree already computed returns the input.
GradedIdeal grow_to(GradedIdeal ideal, int D);

/// values[j] = dim S^j - dim pieces[j] for j = 0..D, growing a copy on
/// demand when the ideal is short.
HilbertFunction quotient_hf(const GradedIdeal& ideal, int D);

/// Macaulay's bound: writes h in its i-th binomial representation
/// h = C(a_i,i) + C(a_{i-1},i-1) + ... and returns
/// C(a_i+1,i+1) + C(a_{i-1}+1,i) + ...; equals h whenever h <= i.
int macaulay_bound(int h, int i);

/// True iff hf[at] = hf[at+1] = r, the maximal-growth configuration that
/// makes the constancy persist for ideals generated in degrees <= at.
bool growth_is_maximal(const HilbertFunction& hf, int r, int at);

/// {alpha in S^j : S^{deg W - j} * alpha is contained in W}, the degree-j
/// component of the ancestor ideal of W.
GradedSubspace ancestor_closure(const GradedSubspace& W, int j);

/// Span of x_t * S over all variables, one degree up.
GradedSubspace multiply_by_variables(const GradedSubspace& S);

} // namespace catlab
