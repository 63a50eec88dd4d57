#pragma once

#include "catlab/hilbert.hpp"
#include "catlab/linalg.hpp"
#include "catlab/poly.hpp"

namespace catlab {

// Matrix of the flattening S^i V* -> S^{d-i} V, alpha -> alpha . p: row a
// (a dual monomial of degree i, fixed order) holds the coefficient vector of
// contract(a, p) over the degree-(d-i) point monomials.
struct Catalecticant {
    HomogeneousPoly p;
    int i = 0;
    RationalMatrix matrix;
};

/// Throws DegreeOutOfRange unless 0 <= i <= deg p; ZeroPolynomial for p = 0.
Catalecticant catalecticant(const HomogeneousPoly& p, int i);

/// Ann(p)^j = {alpha in S^j V* : alpha . p = 0}; for j > d this is all of
/// S^j V*.  Canonical echelon basis.
GradedSubspace ann_degree(const HomogeneousPoly& p, int j);

/// Omega_p^j = S^{d-j} V* . p, the space of order-(d-j) partials of p inside
/// S^j V.  Canonical echelon basis.
GradedSubspace omega_degree(const HomogeneousPoly& p, int j);

/// values[i] = dim Omega_p^i for i = 0..d; symmetric about d/2.
HilbertFunction hilbert_function(const HomogeneousPoly& p);

/// True iff rank of the i-th catalecticant is <= r.
bool membership(const HomogeneousPoly& p, int r, int i);

/// The membership test carries no information when r already meets the
/// ambient bound rank <= dim S^i V*; reports attach a warning in that case.
bool membership_is_vacuous(const HomogeneousPoly& p, int r, int i);

/// Hilbert function plus the low-degree annihilator pieces, the standard
/// summary of the apolar algebra of p.
struct ApolarProfile {
    HomogeneousPoly p;
    HilbertFunction hf;
    std::vector<GradedSubspace> ann;   // ann[j] = Ann(p)^j for j = 0..max_ann_degree
};

ApolarProfile apolar_profile(const HomogeneousPoly& p, int max_ann_degree);

} // namespace catlab
