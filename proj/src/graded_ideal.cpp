#include "catlab/graded_ideal.hpp"

#include <algorithm>

#include "catlab/errors.hpp"
#include "catlab/monomial.hpp"

namespace catlab {

namespace {

// Column index maps for multiplication by each variable: shift[t][c] is the
// index one degree up of the degree-`deg` monomial c times x_t.  The maps are
// strictly increasing, so shifted rows keep their column ordering.
std::vector<std::vector<long>> variable_shifts(int num_vars, int deg) {
    MonomialTable src(num_vars, deg);
    MonomialTable dst(num_vars, deg + 1);
    std::vector<std::vector<long>> shift(static_cast<std::size_t>(num_vars),
                                         std::vector<long>(static_cast<std::size_t>(src.size())));
    for (int t = 0; t < num_vars; ++t)
        for (long c = 0; c < src.size(); ++c) {
            ExponentVector e = src.at(c);
            ++e[static_cast<std::size_t>(t)];
            shift[static_cast<std::size_t>(t)][static_cast<std::size_t>(c)] = dst.index_of(e);
        }
    return shift;
}

// Rows spanning S^1 * S, not yet echelonized.
RationalMatrix variable_products_raw(const GradedSubspace& S) {
    std::vector<std::vector<long>> shift = variable_shifts(S.num_vars, S.degree);
    long dst_dim = dim_sym(S.num_vars, S.degree + 1);
    RationalMatrix out(S.basis.rows * S.num_vars, static_cast<int>(dst_dim));
    int row = 0;
    for (int t = 0; t < S.num_vars; ++t)
        for (int i = 0; i < S.basis.rows; ++i, ++row)
            for (int c = 0; c < S.basis.cols; ++c) {
                const Rational& v = S.basis.at(i, c);
                if (v != 0)
                    out.at(row, static_cast<int>(shift[static_cast<std::size_t>(t)][static_cast<std::size_t>(c)])) = v;
            }
    return out;
}

void grow_in_place(GradedIdeal& ideal, int D) {
    for (int j = ideal.max_computed_degree + 1; j <= D; ++j) {
        RationalMatrix raw(0, 0);
        if (j > 0) raw = variable_products_raw(ideal.piece(j - 1));
        auto g = ideal.generators.find(j);
        if (g != ideal.generators.end()) {
            if (raw.rows == 0)
                raw = g->second.basis;
            else
                raw = vstack(raw, g->second.basis);
        }
        GradedSubspace piece =
            (raw.rows == 0)
                ? GradedSubspace::zero(ideal.num_vars, j, ideal.ring)
                : GradedSubspace::from_rows(ideal.num_vars, j, ideal.ring, raw);
        ideal.pieces.emplace(j, std::move(piece));
    }
    ideal.max_computed_degree = std::max(ideal.max_computed_degree, D);
}

} // namespace

const GradedSubspace& GradedIdeal::piece(int j) const {
    auto it = pieces.find(j);
    if (it == pieces.end())
        throw IndexOutOfRange("GradedIdeal: piece not computed at this degree");
    return it->second;
}

bool GradedIdeal::agrees_with(const GradedIdeal& other, int through) const {
    if (num_vars != other.num_vars || ring != other.ring) return false;
    for (int j = 0; j <= through; ++j)
        if (!(piece(j) == other.piece(j))) return false;
    return true;
}

GradedIdeal ideal_from_generators(int num_vars, Ring ring,
                                  const std::vector<GradedSubspace>& gens) {
    GradedIdeal ideal;
    ideal.num_vars = num_vars;
    ideal.ring = ring;
    int max_gen_degree = 0;
    for (const GradedSubspace& g : gens) {
        if (g.num_vars != num_vars || g.ring != ring)
            throw AmbientMismatch("ideal_from_generators: generator ambient differs");
        if (g.dim() == 0) continue;
        auto it = ideal.generators.find(g.degree);
        if (it == ideal.generators.end())
            ideal.generators.emplace(g.degree, g);
        else
            it->second = subspace_sum(it->second, g);
        ideal.generator_degrees.insert(g.degree);
        max_gen_degree = std::max(max_gen_degree, g.degree);
    }
    grow_in_place(ideal, max_gen_degree);
    return ideal;
}

GradedIdeal grow_to(GradedIdeal ideal, int D) {
    if (D > ideal.max_computed_degree) grow_in_place(ideal, D);
    return ideal;
}

HilbertFunction quotient_hf(const GradedIdeal& ideal, int D) {
    const GradedIdeal* src = &ideal;
    GradedIdeal grown;
    if (ideal.max_computed_degree < D) {
        grown = grow_to(ideal, D);
        src = &grown;
    }
    std::vector<int> values(static_cast<std::size_t>(D) + 1);
    for (int j = 0; j <= D; ++j)
        values[static_cast<std::size_t>(j)] =
            static_cast<int>(dim_sym(src->num_vars, j)) - src->piece(j).dim();
    return HilbertFunction(std::move(values));
}

int macaulay_bound(int h, int i) {
    if (h < 0 || i < 1)
        throw IndexOutOfRange("macaulay_bound: need h >= 0 and i >= 1");
    if (h == 0) return 0;
    Integer rem = h;
    Integer out = 0;
    for (int idx = i; idx >= 1 && rem > 0; --idx) {
        // largest a with C(a, idx) <= rem
        unsigned long a = static_cast<unsigned long>(idx);
        while (binomial(a + 1, static_cast<unsigned long>(idx)) <= rem) ++a;
        rem -= binomial(a, static_cast<unsigned long>(idx));
        out += binomial(a + 1, static_cast<unsigned long>(idx) + 1);
    }
    if (rem != 0)
        throw InternalChainBroken("macaulay_bound: binomial representation did not close");
    return static_cast<int>(out.get_si());
}

bool growth_is_maximal(const HilbertFunction& hf, int r, int at) {
    return hf.at(at) == r && hf.at(at + 1) == r;
}

GradedSubspace ancestor_closure(const GradedSubspace& W, int j) {
    if (j < 0 || j > W.degree)
        throw DegreeOutOfRange("ancestor_closure: need 0 <= j <= deg W");
    if (j == W.degree) return W;
    int nv = W.num_vars;
    MonomialTable mul(nv, W.degree - j);
    MonomialTable src(nv, j);
    MonomialTable dst(nv, W.degree);
    // alpha is in the closure iff every mu * alpha reduces to zero mod W.
    RationalMatrix m(static_cast<int>(mul.size()) * W.ambient_dim(),
                     static_cast<int>(src.size()));
    for (long u = 0; u < mul.size(); ++u) {
        for (long c = 0; c < src.size(); ++c) {
            ExponentVector e = src.at(c);
            const ExponentVector& mu = mul.at(u);
            for (int t = 0; t < nv; ++t) e[static_cast<std::size_t>(t)] += mu[static_cast<std::size_t>(t)];
            std::vector<Rational> unit(static_cast<std::size_t>(dst.size()), Rational(0));
            unit[static_cast<std::size_t>(dst.index_of(e))] = 1;
            std::vector<Rational> red = reduce_mod_rref(W.basis, W.pivot_cols, std::move(unit));
            for (long row = 0; row < dst.size(); ++row)
                if (red[static_cast<std::size_t>(row)] != 0)
                    m.at(static_cast<int>(u * dst.size() + row), static_cast<int>(c)) =
                        red[static_cast<std::size_t>(row)];
        }
    }
    return kernel_subspace(nv, j, W.ring, m);
}

GradedSubspace multiply_by_variables(const GradedSubspace& S) {
    return GradedSubspace::from_rows(S.num_vars, S.degree + 1, S.ring,
                                     variable_products_raw(S));
}

} // namespace catlab
