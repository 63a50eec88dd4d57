#include "catlab/apolarity.hpp"

#include <algorithm>

#include "catlab/errors.hpp"

namespace catlab {

Catalecticant catalecticant(const HomogeneousPoly& p, int i) {
    if (p.is_zero()) throw ZeroPolynomial("catalecticant: p = 0");
    if (i < 0 || i > p.degree)
        throw DegreeOutOfRange("catalecticant: i outside [0, deg p]");
    MonomialTable dual(p.num_vars, i);
    MonomialTable target(p.num_vars, p.degree - i);
    Catalecticant c;
    c.p = p;
    c.i = i;
    c.matrix = RationalMatrix(static_cast<int>(dual.size()),
                              static_cast<int>(target.size()));
    HomogeneousPoly alpha = HomogeneousPoly::zero(p.num_vars, i, Ring::Dual);
    for (long row = 0; row < dual.size(); ++row) {
        alpha.coeffs.clear();
        alpha.coeffs.emplace(dual.at(row), Rational(1));
        HomogeneousPoly img = contract(alpha, p);
        for (const auto& [mono, coef] : img.coeffs)
            c.matrix.at(static_cast<int>(row),
                        static_cast<int>(target.index_of(mono))) = coef;
    }
    return c;
}

GradedSubspace ann_degree(const HomogeneousPoly& p, int j) {
    if (p.is_zero()) throw ZeroPolynomial("ann_degree: p = 0");
    if (j < 0) throw DegreeOutOfRange("ann_degree: negative degree");
    if (j > p.degree) return GradedSubspace::full(p.num_vars, j, Ring::Dual);
    Catalecticant c = catalecticant(p, j);
    return kernel_subspace(p.num_vars, j, Ring::Dual, c.matrix.transpose());
}

GradedSubspace omega_degree(const HomogeneousPoly& p, int j) {
    if (p.is_zero()) throw ZeroPolynomial("omega_degree: p = 0");
    if (j < 0 || j > p.degree)
        throw DegreeOutOfRange("omega_degree: degree outside [0, deg p]");
    Catalecticant c = catalecticant(p, p.degree - j);
    return row_space(p.num_vars, j, Ring::Point, c.matrix);
}

HilbertFunction hilbert_function(const HomogeneousPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial("hilbert_function: p = 0");
    int d = p.degree;
    std::vector<int> values(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) {
        // rank cat(p, i) = rank cat(p, d-i); build the matrix with the
        // smaller row count.
        int side = std::min(i, d - i);
        values[static_cast<std::size_t>(i)] = rank(catalecticant(p, side).matrix);
    }
    return HilbertFunction(std::move(values));
}

bool membership(const HomogeneousPoly& p, int r, int i) {
    if (p.is_zero()) throw ZeroPolynomial("membership: p = 0");
    if (i < 0 || i > p.degree)
        throw DegreeOutOfRange("membership: i outside [0, deg p]");
    int side = std::min(i, p.degree - i);
    return rank(catalecticant(p, side).matrix) <= r;
}

bool membership_is_vacuous(const HomogeneousPoly& p, int r, int i) {
    if (i < 0 || i > p.degree)
        throw DegreeOutOfRange("membership_is_vacuous: i outside [0, deg p]");
    return static_cast<long>(r) >= dim_sym(p.num_vars, i);
}

ApolarProfile apolar_profile(const HomogeneousPoly& p, int max_ann_degree) {
    ApolarProfile prof;
    prof.p = p;
    prof.hf = hilbert_function(p);
    for (int j = 0; j <= max_ann_degree; ++j)
        prof.ann.push_back(ann_degree(p, j));
    return prof;
}

} // namespace catlab
