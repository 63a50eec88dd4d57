#include "catlab/monomial.hpp"

#include "catlab/errors.hpp"

namespace catlab {

int degree_of(const ExponentVector& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

long dim_sym(int num_vars, int degree) {
    if (num_vars < 1) throw IndexOutOfRange("dim_sym: num_vars must be positive");
    if (degree < 0) return 0;
    Integer b = binomial(static_cast<unsigned long>(num_vars + degree - 1),
                         static_cast<unsigned long>(degree));
    return static_cast<long>(b.get_ui());
}

namespace {

void enumerate(int vars_left, int deg_left, ExponentVector& cur,
               std::vector<ExponentVector>& out) {
    if (vars_left == 1) {
        cur.push_back(deg_left);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    // Descending first exponent keeps the whole list descending-lex.
    for (int e = deg_left; e >= 0; --e) {
        cur.push_back(e);
        enumerate(vars_left - 1, deg_left - e, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<ExponentVector> monomial_basis(int num_vars, int degree) {
    if (num_vars < 1) throw IndexOutOfRange("monomial_basis: num_vars must be positive");
    if (degree < 0) throw IndexOutOfRange("monomial_basis: degree must be nonnegative");
    std::vector<ExponentVector> out;
    out.reserve(static_cast<std::size_t>(dim_sym(num_vars, degree)));
    ExponentVector cur;
    enumerate(num_vars, degree, cur, out);
    return out;
}

MonomialTable::MonomialTable(int num_vars, int degree)
    : num_vars_(num_vars), degree_(degree), list_(monomial_basis(num_vars, degree)) {
    for (long i = 0; i < static_cast<long>(list_.size()); ++i)
        index_[list_[static_cast<std::size_t>(i)]] = i;
}

long MonomialTable::index_of(const ExponentVector& e) const {
    auto it = index_.find(e);
    if (it == index_.end())
        throw IndexOutOfRange("MonomialTable: monomial not in this basis");
    return it->second;
}

} // namespace catlab
