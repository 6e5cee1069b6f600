#include "rsums/multfn.hpp"

#include <stdexcept>

#include "rsums/specfun.hpp"

namespace rsums {

Value poly_eval(const Poly& c, const Value& x) {
    Value acc(0);
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, Value(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

Poly poly_shift(const Poly& c, const Value& m) {
    // q(r) = sum_i c_i (r+m)^i; expand binomially.
    Poly out(c.size(), Value(0));
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) continue;
        // (r+m)^i = sum_j C(i,j) m^{i-j} r^j
        mpz_class binom = 1;
        Value mp(1);
        std::vector<Value> mpow(i + 1);
        for (size_t j = 0; j <= i; ++j) { mpow[j] = mp; mp *= m; }
        for (size_t j = 0; j <= i; ++j) {
            if (j > 0) binom = binom * (i - j + 1) / j;
            out[j] += c[i] * Value(binom) * mpow[i - j];
        }
        binom = 1;
    }
    return out;
}

Poly poly_scale(const Poly& c, const Value& s) {
    Poly out = c;
    for (auto& v : out) v *= s;
    return out;
}

Value poly_geometric_tail(const Poly& c, const Value& y, unsigned r_lo) {
    bool nonzero = false;
    for (const auto& v : c) nonzero = nonzero || !v.is_zero();
    if (!nonzero) return Value(0);
    if (!(y.abs() < Value(1)))
        throw ConvergenceError("poly_geometric_tail: |ratio| >= 1, series diverges");
    // Full sum via Li_{-k}, then subtract the finite prefix.
    Value acc(0);
    for (size_t k = 0; k < c.size(); ++k) {
        if (c[k].is_zero()) continue;
        Value sk = (k == 0) ? Value(1) / (Value(1) - y) : polylog_neg(static_cast<unsigned>(k), y);
        acc += c[k] * sk;
    }
    for (unsigned r = 0; r < r_lo; ++r)
        acc -= poly_eval(c, Value(static_cast<long>(r))) * y.pow(static_cast<long>(r));
    return acc;
}

Value ExpPolyAtPrime::eval(unsigned r) const {
    if (r < r0) return small[r];
    Value acc(0);
    for (const auto& t : terms)
        acc += poly_eval(t.poly, Value(static_cast<long>(r))) * t.base.pow(static_cast<long>(r));
    return acc;
}

Value MultFn::eval_factored(const Factorization& fac) const {
    Value acc = k_prefactor;
    for (const auto& pp : fac) {
        Value v = rule(pp.prime, pp.exponent);
        acc *= v;
        if (acc.is_zero()) break;  // mu-like functions vanish often
    }
    return acc;
}

Value MultFn::eval(std::uint64_t k, const SpfTable& table) const {
    if (k == 0) throw std::domain_error("MultFn::eval: k must be positive");
    if (k == 1) return k_prefactor;
    return eval_factored(table.factorize(k));
}

namespace {
ExpPolyAtPrime expoly_product(const ExpPolyAtPrime& a, const ExpPolyAtPrime& b,
                              const PrimePowerRule& combined, std::uint64_t p) {
    ExpPolyAtPrime out;
    out.r0 = std::max(a.r0, b.r0);
    for (unsigned r = 0; r < out.r0; ++r) out.small.push_back(combined(p, r));
    for (const auto& ta : a.terms)
        for (const auto& tb : b.terms)
            out.terms.push_back({poly_mul(ta.poly, tb.poly), ta.base * tb.base});
    return out;
}
}  // namespace

MultFn pointwise_product(std::string name, const MultFn& f, const MultFn& g) {
    MultFn out;
    out.name = std::move(name);
    PrimePowerRule fr = f.rule, gr = g.rule;
    out.rule = [fr, gr](std::uint64_t p, std::uint32_t r) { return fr(p, r) * gr(p, r); };
    if (f.expoly && g.expoly) {
        ExpPolyRule fe = f.expoly, ge = g.expoly;
        PrimePowerRule rule = out.rule;
        out.expoly = [fe, ge, rule](std::uint64_t p) {
            return expoly_product(fe(p), ge(p), rule, p);
        };
    }
    out.completely_multiplicative = f.completely_multiplicative && g.completely_multiplicative;
    out.rational_valued = f.rational_valued && g.rational_valued;
    out.k_prefactor = f.k_prefactor * g.k_prefactor;
    return out;
}

MultFn pointwise_power(std::string name, const MultFn& f, unsigned n) {
    if (n == 0) throw std::invalid_argument("pointwise_power: n must be >= 1");
    MultFn out = f;
    out.name = name;
    if (n == 1) return out;
    for (unsigned i = 1; i < n; ++i) out = pointwise_product(name, out, f);
    out.name = std::move(name);
    return out;
}

MultFn scale_by_ks(std::string name, const MultFn& f, long s) {
    MultFn out;
    out.name = std::move(name);
    PrimePowerRule fr = f.rule;
    out.rule = [fr, s](std::uint64_t p, std::uint32_t r) {
        return fr(p, r) * pow_uint(p, r).pow(s);  // f(p^r) * (p^r)^s
    };
    if (f.expoly) {
        ExpPolyRule fe = f.expoly;
        out.expoly = [fe, s](std::uint64_t p) {
            ExpPolyAtPrime e = fe(p);
            Value ps = (s >= 0) ? pow_uint(p, static_cast<unsigned long>(s))
                                : Value(1) / pow_uint(p, static_cast<unsigned long>(-s));
            for (auto& t : e.terms) t.base *= ps;
            for (unsigned r = 0; r < e.r0; ++r) e.small[r] *= ps.pow(static_cast<long>(r));
            return e;
        };
    }
    out.completely_multiplicative = f.completely_multiplicative;
    out.rational_valued = f.rational_valued;
    out.k_prefactor = f.k_prefactor;
    return out;
}

MultFn shift_real(std::string name, const MultFn& f, long double s) {
    MultFn out;
    out.name = std::move(name);
    PrimePowerRule fr = f.rule;
    out.rule = [fr, s](std::uint64_t p, std::uint32_t r) {
        long double factor = powl(static_cast<long double>(p), -s * static_cast<long double>(r));
        return fr(p, r) * Value(factor);
    };
    if (f.expoly) {
        ExpPolyRule fe = f.expoly;
        out.expoly = [fe, s](std::uint64_t p) {
            ExpPolyAtPrime e = fe(p);
            Value ps(powl(static_cast<long double>(p), -s));
            for (auto& t : e.terms) t.base *= ps;
            for (unsigned r = 0; r < e.r0; ++r) e.small[r] *= ps.pow(static_cast<long>(r));
            return e;
        };
    }
    out.completely_multiplicative = f.completely_multiplicative;
    out.rational_valued = false;
    out.k_prefactor = f.k_prefactor;
    return out;
}

}  // namespace rsums
