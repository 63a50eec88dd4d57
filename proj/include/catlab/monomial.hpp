#pragma once

#include <map>
#include <vector>

#include "catlab/rational.hpp"

namespace catlab {

// A monomial exponent tuple.  The fixed total order on monomials of equal
// degree is descending lexicographic with the first variable most
// significant; std::vector's operator> gives exactly that, so
// monomial_basis lists and coefficient maps all share the same order and
// every matrix and serialized polynomial is bit-reproducible.
using ExponentVector = std::vector<int>;

int degree_of(const ExponentVector& e);

/// dim S^degree of a space with num_vars variables: C(num_vars+degree-1, degree).
long dim_sym(int num_vars, int degree);

/// All exponent vectors of the given degree, descending lexicographic.
std::vector<ExponentVector> monomial_basis(int num_vars, int degree);

/// Basis of S^degree with O(log) exponent-to-index lookup.
class MonomialTable {
public:
    MonomialTable(int num_vars, int degree);

    int num_vars() const { return num_vars_; }
    int degree() const { return degree_; }
    long size() const { return static_cast<long>(list_.size()); }
    const ExponentVector& at(long idx) const { return list_[static_cast<std::size_t>(idx)]; }
    const std::vector<ExponentVector>& list() const { return list_; }

    /// Index in the fixed order; throws IndexOutOfRange for a foreign monomial.
    long index_of(const ExponentVector& e) const;

private:
    int num_vars_;
    int degree_;
    std::vector<ExponentVector> list_;
    std::map<ExponentVector, long> index_;
};

} // namespace catlab
