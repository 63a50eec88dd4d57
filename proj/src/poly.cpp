#include "catlab/poly.hpp"

#include <cctype>
#include <sstream>

#include "catlab/errors.hpp"

namespace catlab {

std::string ring_name(Ring r) { return r == Ring::Point ? "point" : "dual"; }

HomogeneousPoly HomogeneousPoly::zero(int num_vars, int degree, Ring ring) {
    HomogeneousPoly p;
    p.num_vars = num_vars;
    p.degree = degree;
    p.ring = ring;
    return p;
}

Rational HomogeneousPoly::coeff(const ExponentVector& e) const {
    auto it = coeffs.find(e);
    return it == coeffs.end() ? Rational(0) : it->second;
}

void HomogeneousPoly::add_term(const ExponentVector& e, const Rational& c) {
    if (c == 0) return;
    if (static_cast<int>(e.size()) != num_vars)
        throw MismatchedVariables("add_term: exponent vector has wrong arity");
    if (degree_of(e) != degree)
        throw DegreeOutOfRange("add_term: monomial degree does not match polynomial degree");
    auto it = coeffs.find(e);
    if (it == coeffs.end()) {
        coeffs.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) coeffs.erase(it);
    }
}

std::vector<Rational> HomogeneousPoly::coefficient_vector() const {
    MonomialTable table(num_vars, degree);
    std::vector<Rational> v(static_cast<std::size_t>(table.size()), Rational(0));
    for (const auto& [e, c] : coeffs) v[static_cast<std::size_t>(table.index_of(e))] = c;
    return v;
}

HomogeneousPoly HomogeneousPoly::from_coefficient_vector(int num_vars, int degree, Ring ring,
                                                         const std::vector<Rational>& v) {
    MonomialTable table(num_vars, degree);
    if (static_cast<long>(v.size()) != table.size())
        throw LengthMismatch("from_coefficient_vector: wrong vector length");
    HomogeneousPoly p = zero(num_vars, degree, ring);
    for (long i = 0; i < table.size(); ++i)
        if (v[static_cast<std::size_t>(i)] != 0) p.coeffs.emplace(table.at(i), v[static_cast<std::size_t>(i)]);
    return p;
}

namespace {

void require_compatible(const HomogeneousPoly& a, const HomogeneousPoly& b) {
    if (a.num_vars != b.num_vars)
        throw MismatchedVariables("polynomials have different numbers of variables");
    if (a.ring != b.ring) throw CatlabError("polynomials live in different rings");
    if (a.degree != b.degree)
        throw DegreeOutOfRange("polynomials have different degrees");
}

} // namespace

HomogeneousPoly add(const HomogeneousPoly& a, const HomogeneousPoly& b) {
    require_compatible(a, b);
    HomogeneousPoly r = a;
    for (const auto& [e, c] : b.coeffs) r.add_term(e, c);
    return r;
}

HomogeneousPoly sub(const HomogeneousPoly& a, const HomogeneousPoly& b) {
    require_compatible(a, b);
    HomogeneousPoly r = a;
    for (const auto& [e, c] : b.coeffs) r.add_term(e, -c);
    return r;
}

HomogeneousPoly scale(const HomogeneousPoly& a, const Rational& c) {
    HomogeneousPoly r = HomogeneousPoly::zero(a.num_vars, a.degree, a.ring);
    if (c == 0) return r;
    for (const auto& [e, v] : a.coeffs) r.coeffs.emplace(e, v * c);
    return r;
}

HomogeneousPoly mul(const HomogeneousPoly& a, const HomogeneousPoly& b) {
    if (a.num_vars != b.num_vars)
        throw MismatchedVariables("mul: different numbers of variables");
    if (a.ring != b.ring) throw CatlabError("mul: different rings");
    HomogeneousPoly r = HomogeneousPoly::zero(a.num_vars, a.degree + b.degree, a.ring);
    for (const auto& [ea, ca] : a.coeffs)
        for (const auto& [eb, cb] : b.coeffs) {
            ExponentVector e(static_cast<std::size_t>(a.num_vars));
            for (int t = 0; t < a.num_vars; ++t)
                e[static_cast<std::size_t>(t)] =
                    ea[static_cast<std::size_t>(t)] + eb[static_cast<std::size_t>(t)];
            r.add_term(e, ca * cb);
        }
    return r;
}

HomogeneousPoly contract(const HomogeneousPoly& alpha, const HomogeneousPoly& p) {
    if (alpha.ring != Ring::Dual || p.ring != Ring::Point)
        throw CatlabError("contract: expected a dual-ring operator and a point-ring polynomial");
    if (alpha.num_vars != p.num_vars)
        throw MismatchedVariables("contract: different numbers of variables");
    const int i = alpha.degree, d = p.degree;
    if (i > d) return HomogeneousPoly::zero(p.num_vars, 0, Ring::Point);

    HomogeneousPoly r = HomogeneousPoly::zero(p.num_vars, d - i, Ring::Point);
    for (const auto& [b, cb] : alpha.coeffs) {
        for (const auto& [a, ca] : p.coeffs) {
            Integer scalecoef = 1;
            bool ok = true;
            ExponentVector e(static_cast<std::size_t>(p.num_vars));
            for (int t = 0; t < p.num_vars && ok; ++t) {
                const int at = a[static_cast<std::size_t>(t)];
                const int bt = b[static_cast<std::size_t>(t)];
                if (bt > at) {
                    ok = false;
                } else {
                    e[static_cast<std::size_t>(t)] = at - bt;
                    scalecoef *= falling_factorial(at, bt);
                }
            }
            if (ok) r.add_term(e, cb * ca * Rational(scalecoef));
        }
    }
    return r;
}

bool LinearForm::is_zero() const {
    for (const auto& c : coeffs)
        if (c != 0) return false;
    return true;
}

HomogeneousPoly power_of_linear_form(const LinearForm& v, int d, Ring ring) {
    const int nv = static_cast<int>(v.coeffs.size());
    if (nv < 1) throw LengthMismatch("power_of_linear_form: empty linear form");
    if (d < 0) throw DegreeOutOfRange("power_of_linear_form: negative degree");
    HomogeneousPoly p = HomogeneousPoly::zero(nv, d, ring);
    for (const ExponentVector& e : monomial_basis(nv, d)) {
        Rational c(factorial(static_cast<unsigned long>(d)));
        for (int t = 0; t < nv; ++t) {
            const int et = e[static_cast<std::size_t>(t)];
            c /= Rational(factorial(static_cast<unsigned long>(et)));
            if (c == 0) break;
            if (et > 0) {
                Rational pw = 1;
                for (int s = 0; s < et; ++s) pw *= v.coeffs[static_cast<std::size_t>(t)];
                c *= pw;
            }
        }
        p.add_term(e, c);
    }
    return p;
}

LinearForm normalize_point(const LinearForm& v) {
    if (v.is_zero()) return v;
    Integer den_lcm = 1;
    for (const auto& c : v.coeffs) {
        Integer den = c.get_den();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), den.get_mpz_t());
    }
    std::vector<Integer> ints;
    ints.reserve(v.coeffs.size());
    Integer g = 0;
    for (const auto& c : v.coeffs) {
        Rational scaled = c * Rational(den_lcm);
        ints.push_back(scaled.get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
    }
    int sign = 0;
    for (const auto& z : ints)
        if (z != 0) {
            sign = (z > 0) ? 1 : -1;
            break;
        }
    LinearForm out;
    out.coeffs.reserve(ints.size());
    for (const auto& z : ints) out.coeffs.emplace_back(Rational(z * sign) / Rational(g));
    return out;
}

// --- parser ----------------------------------------------------------------

namespace {

struct Term {
    Rational coeff;
    std::vector<std::pair<int, int>> powers; // (variable index, exponent)
    Ring ring = Ring::Point;
    bool has_vars = false;
};

class Parser {
public:
    explicit Parser(const std::string& text) {
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch))) s_.push_back(ch);
    }

    std::vector<Term> parse() {
        std::vector<Term> terms;
        if (s_.empty()) throw ParseError("empty polynomial text");
        int sign = 1;
        if (peek() == '+' || peek() == '-') sign = (get() == '-') ? -1 : 1;
        terms.push_back(parse_term(sign));
        while (pos_ < s_.size()) {
            char op = get();
            if (op != '+' && op != '-')
                throw ParseError(std::string("expected '+' or '-', found '") + op + "'");
            terms.push_back(parse_term(op == '-' ? -1 : 1));
        }
        return terms;
    }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() { return s_[pos_++]; }

    Integer parse_integer() {
        std::string digits;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(peek())))
            digits.push_back(get());
        if (digits.empty()) throw ParseError("expected a number");
        return Integer(digits);
    }

    Term parse_term(int sign) {
        Term t;
        t.coeff = sign;
        bool saw_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            Integer num = parse_integer();
            if (peek() == '/') {
                get();
                Integer den = parse_integer();
                if (den == 0) throw ParseError("zero denominator");
                t.coeff *= Rational(num) / Rational(den);
            } else {
                t.coeff *= Rational(num);
            }
            saw_coeff = true;
            if (peek() == '*') get();
        }
        while (peek() == 'x' || peek() == 'a') {
            Ring r = (get() == 'x') ? Ring::Point : Ring::Dual;
            if (t.has_vars && r != t.ring)
                throw ParseError("term mixes point-ring and dual-ring variables");
            t.ring = r;
            t.has_vars = true;
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError("variable name must carry an index, e.g. x0");
            Integer idx = parse_integer();
            int exp = 1;
            if (peek() == '^') {
                get();
                exp = static_cast<int>(parse_integer().get_si());
            }
            t.powers.emplace_back(static_cast<int>(idx.get_si()), exp);
            if (peek() == '*') {
                get();
                if (peek() != 'x' && peek() != 'a')
                    throw ParseError("expected a variable after '*'");
            }
        }
        if (!saw_coeff && !t.has_vars) throw ParseError("empty term");
        return t;
    }

    std::string s_;
    std::size_t pos_ = 0;
};

} // namespace

HomogeneousPoly parse_poly(const std::string& text, std::optional<int> num_vars,
                           std::optional<int> degree) {
    std::vector<Term> terms = Parser(text).parse();

    int max_index = -1;
    std::optional<Ring> ring;
    for (const Term& t : terms) {
        if (!t.has_vars) continue;
        if (ring && *ring != t.ring) throw ParseError("polynomial mixes the two rings");
        ring = t.ring;
        for (auto [idx, exp] : t.powers) {
            if (idx < 0 || exp < 0) throw ParseError("negative index or exponent");
            if (idx > max_index) max_index = idx;
        }
    }
    const int nv = num_vars.value_or(max_index + 1 > 0 ? max_index + 1 : 1);
    if (max_index >= nv)
        throw ParseError("variable index exceeds the declared number of variables");

    int deg = -1;
    for (const Term& t : terms) {
        int td = 0;
        for (auto [idx, exp] : t.powers) td += exp;
        if (deg == -1)
            deg = td;
        else if (deg != td && t.coeff != 0)
            throw ParseError("polynomial is not homogeneous");
    }
    if (degree) {
        bool all_zero = true;
        for (const Term& t : terms)
            if (t.coeff != 0) all_zero = false;
        if (!all_zero && deg != *degree)
            throw ParseError("polynomial degree does not match the declared degree");
        deg = *degree;
    }

    HomogeneousPoly p = HomogeneousPoly::zero(nv, deg, ring.value_or(Ring::Point));
    for (const Term& t : terms) {
        ExponentVector e(static_cast<std::size_t>(nv), 0);
        for (auto [idx, exp] : t.powers) e[static_cast<std::size_t>(idx)] += exp;
        p.add_term(e, t.coeff);
    }
    return p;
}

std::string to_string(const HomogeneousPoly& p) {
    if (p.is_zero()) return "0";
    const char var = (p.ring == Ring::Point) ? 'x' : 'a';
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : p.coeffs) {
        Rational abs_c = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << '-';
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        std::string mono;
        for (int t = 0; t < p.num_vars; ++t) {
            const int et = e[static_cast<std::size_t>(t)];
            if (et == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += var;
            mono += std::to_string(t);
            if (et > 1) mono += '^' + std::to_string(et);
        }
        if (mono.empty()) {
            out << abs_c.get_str();
        } else if (abs_c == 1) {
            out << mono;
        } else {
            out << abs_c.get_str() << '*' << mono;
        }
    }
    return out.str();
}

Rational rational_from_string(const std::string& s) {
    try {
        Rational q(s);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw ParseError("invalid rational literal: " + s);
    }
}

} // namespace catlab
