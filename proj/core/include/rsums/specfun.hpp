// Transcendental and combinatorial helpers for the closed-form catalogue:
// negative-order polylogarithms, hypergeometric series, Riemann zeta, Euler
// products over primes, and the helper sums S(n,p,t) and T(p,t).

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "rsums/value.hpp"

namespace rsums {

class SpfTable;

// Thrown when an iterative series fails to reach its tolerance.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Li_{-k}(x) for k >= 0, 0 <= x < 1.  Exact rational for rational x, via the
// Eulerian-polynomial closed form x^? / (1-x)^{k+1}.
Value polylog_neg(unsigned k, const Value& x);

// Eulerian number <n over i>, exact.
mpz_class eulerian_number(unsigned n, unsigned i);

// Gauss hypergeometric 2F1(a,b;c;z) by partial sums until |term| < tol.
// Returns Real.  Terminating series (a or b a nonpositive integer) stop on
// their own.  |z| < 1 required unless the series terminates.
Value hyp2f1(const Value& a, const Value& b, const Value& c, const Value& z,
             long double tol = 1e-17L);

// 3F2(a1,a2,a3;b1,b2;z), same contract as hyp2f1.
Value hyp3f2(const Value& a1, const Value& a2, const Value& a3,
             const Value& b1, const Value& b2, const Value& z,
             long double tol = 1e-17L);

// Riemann zeta for real s > 1; absolute error < 1e-12 (eta-series
// acceleration after Borwein).
long double zeta(long double s);

// S(n,p,t) = sum_{k=1}^n C(n,k) t^{n-k} Li_{-k}(1/p) + t^n/(1-1/p);
// equivalently sum_{r>=0} (r+t)^n p^-r.  Exact for rational t.
Value s_helper(unsigned n, std::uint64_t p, const Value& t);

// T(p,t) = sum_{k>=t} p^-k / P(k), truncated when the term < tol (Real).
Value t_helper(std::uint64_t p, unsigned t, long double tol = 1e-20L);

struct EulerProductSpec {
    std::function<Value(std::uint64_t)> factor;  // per-prime (or per-index) factor
    std::uint64_t cutoff = 2;                    // inclusive upper bound
    bool over_primes = true;                     // false: product over integers 2..cutoff
    // Optional tail estimate from the cutoff; reported, not applied.
    std::function<long double(std::uint64_t)> tail_estimate;
};

struct EulerProductResult {
    long double value;
    std::uint64_t factors_used;
    std::optional<long double> tail;  // nullopt => "cutoff-only"
};

// Log-accumulated product of spec.factor over primes (default) or integers
// up to cutoff.  Requires a prime table covering the cutoff when over_primes.
EulerProductResult euler_product(const EulerProductSpec& spec, const SpfTable& table);

}  // namespace rsums
