#include "rsums/specfun.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "rsums/partition.hpp"
#include "rsums/sieve.hpp"

namespace rsums {

namespace {
// Row n of the Eulerian triangle, cached.
const std::vector<mpz_class>& eulerian_row(unsigned n) {
    static std::vector<std::vector<mpz_class>> rows = {{mpz_class(1)}};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (rows.size() <= n) {
        unsigned m = static_cast<unsigned>(rows.size());
        const auto& prev = rows.back();
        std::vector<mpz_class> row(m, 0);
        // <m,i> = (i+1)<m-1,i> + (m-i)<m-1,i-1>
        for (unsigned i = 0; i < m; ++i) {
            mpz_class v = 0;
            if (i < prev.size()) v += (i + 1) * prev[i];
            if (i >= 1) v += (m - i) * prev[i - 1];
            row[i] = v;
        }
        rows.push_back(std::move(row));
    }
    return rows[n];
}
}  // namespace

mpz_class eulerian_number(unsigned n, unsigned i) {
    const auto& row = eulerian_row(n);
    return i < row.size() ? row[i] : mpz_class(0);
}

Value polylog_neg(unsigned k, const Value& x) {
    if (x < Value(0) || x >= Value(1))
        throw std::domain_error("polylog_neg: x must be in [0,1)");
    if (x.is_zero()) return Value(0);
    if (k == 0) return x / (Value(1) - x);
    // Li_{-k}(x) = sum_{i=0}^{k-1} <k,i> x^{k-i} / (1-x)^{k+1}
    Value num(0);
    for (unsigned i = 0; i < k; ++i)
        num += Value(eulerian_number(k, i)) * x.pow(static_cast<long>(k - i));
    return num / (Value(1) - x).pow(static_cast<long>(k) + 1);
}

namespace {
bool is_nonpositive_int(const Value& v) {
    return v.is_integer() && v.sign() <= 0;
}

Value hyp_series(const std::vector<Value>& upper, const std::vector<Value>& lower,
                 const Value& z, long double tol) {
    bool terminating = false;
    for (const auto& a : upper) terminating = terminating || is_nonpositive_int(a);
    for (const auto& b : lower)
        if (is_nonpositive_int(b) && !terminating)
            throw std::domain_error("hypergeometric: lower parameter a nonpositive integer");
    if (!terminating && !(z.abs() < Value(1)))
        throw std::domain_error("hypergeometric: |z| must be < 1");

    long double zz = z.real();
    long double term = 1.0L, acc = 1.0L;
    const unsigned long cap = 100000;  // never near-binding for z = 1/p <= 1/2
    for (unsigned long r = 0; r < cap; ++r) {
        long double ratio = 1.0L;
        bool hit_zero = false;
        for (const auto& a : upper) {
            long double ar = a.real() + static_cast<long double>(r);
            if (ar == 0.0L) hit_zero = true;
            ratio *= ar;
        }
        if (hit_zero) return Value(acc);  // terminated
        for (const auto& b : lower) ratio /= (b.real() + static_cast<long double>(r));
        ratio /= static_cast<long double>(r + 1);
        term *= ratio * zz;
        acc += term;
        if (fabsl(term) < tol * fabsl(acc)) return Value(acc);
    }
    throw ConvergenceError("hypergeometric: iteration cap reached");
}
}  // namespace

Value hyp2f1(const Value& a, const Value& b, const Value& c, const Value& z,
             long double tol) {
    return hyp_series({a, b}, {c}, z, tol);
}

Value hyp3f2(const Value& a1, const Value& a2, const Value& a3,
             const Value& b1, const Value& b2, const Value& z, long double tol) {
    return hyp_series({a1, a2, a3}, {b1, b2}, z, tol);
}

long double zeta(long double s) {
    if (s <= 1.0L) throw std::domain_error("zeta: s must be > 1");
    // Borwein's eta-series acceleration: truncation error ~ (3+sqrt(8))^-n.
    const int n = 32;
    // term_i = n*(n+i-1)!*4^i/((n-i)!*(2i)!), d_k = sum_{i<=k} term_i
    std::vector<long double> terms(n + 1);
    terms[0] = 1.0L;
    for (int i = 1; i <= n; ++i)
        terms[i] = terms[i - 1] *
                   (static_cast<long double>(n + i - 1) * 4.0L *
                    static_cast<long double>(n - i + 1)) /
                   (static_cast<long double>(2 * i) * static_cast<long double>(2 * i - 1));
    long double dn = 0.0L;
    for (int i = 0; i <= n; ++i) dn += terms[i];
    long double acc = 0.0L, dk = 0.0L;
    for (int k = 0; k < n; ++k) {
        dk += terms[k];
        long double sign = (k % 2 == 0) ? 1.0L : -1.0L;
        acc += sign * (dk - dn) / powl(static_cast<long double>(k + 1), s);
    }
    return (-acc / dn) / (1.0L - powl(2.0L, 1.0L - s));
}

Value s_helper(unsigned n, std::uint64_t p, const Value& t) {
    if (n < 1) throw std::invalid_argument("s_helper: n must be >= 1");
    Value x = Value::ratio(1, static_cast<long>(p));
    Value acc = t.pow(static_cast<long>(n)) / (Value(1) - x);
    mpz_class binom = 1;
    for (unsigned k = 1; k <= n; ++k) {
        // C(n,k) incrementally
        binom = binom * (n - k + 1) / k;
        acc += Value(binom) * t.pow(static_cast<long>(n - k)) * polylog_neg(k, x);
    }
    return acc;
}

Value t_helper(std::uint64_t p, unsigned t, long double tol) {
    if (p < 2) throw std::invalid_argument("t_helper: p must be >= 2");
    long double acc = 0.0L;
    long double pk = powl(static_cast<long double>(p), -static_cast<long double>(t));
    for (unsigned k = t;; ++k) {
        long double term = pk / partition(k).get_d();
        acc += term;
        if (term < tol && k > t + 4) break;
        pk /= static_cast<long double>(p);
        if (k > 4000) throw ConvergenceError("t_helper: no convergence");
    }
    return Value(acc);
}

EulerProductResult euler_product(const EulerProductSpec& spec, const SpfTable& table) {
    if (spec.cutoff < 2) throw std::invalid_argument("euler_product: cutoff must be >= 2");
    if (spec.over_primes && table.limit() < spec.cutoff)
        throw std::out_of_range("euler_product: prime table smaller than cutoff");

    // Log-accumulate with Neumaier compensation to avoid underflow of the
    // raw product and loss from many near-1 factors.
    long double sum = 0.0L, comp = 0.0L;
    std::uint64_t used = 0;
    auto feed = [&](std::uint64_t idx) {
        long double f = spec.factor(idx).real();
        if (!(f > 0.0L))
            throw std::domain_error("euler_product: nonpositive factor in log accumulation");
        long double term = logl(f);
        long double t = sum + term;
        if (fabsl(sum) >= fabsl(term)) comp += (sum - t) + term;
        else comp += (term - t) + sum;
        sum = t;
        ++used;
    };
    if (spec.over_primes) {
        for (std::uint32_t p : table.primes()) {
            if (p > spec.cutoff) break;
            feed(p);
        }
    } else {
        for (std::uint64_t i = 2; i <= spec.cutoff; ++i) feed(i);
    }
    EulerProductResult res;
    res.value = expl(sum + comp);
    res.factors_used = used;
    if (spec.tail_estimate) res.tail = spec.tail_estimate(spec.cutoff);
    return res;
}

}  // namespace rsums
