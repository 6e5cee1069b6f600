// Multiplicative arithmetic functions defined by prime-power rules.
//
// A MultFn carries its rule f(p^r), the universality-class exponents
// (a1,b1,a2,b2) of its summatory asymptotics where known, and (when the rule
// is an exponential polynomial in r) a structured form that lets downstream
// series be summed in closed rational form.

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rsums/sieve.hpp"
#include "rsums/value.hpp"

namespace rsums {

// ---------------------------------------------------------------------------
// Small dense polynomials over Value (coefficient vectors, index = degree).
// ---------------------------------------------------------------------------
using Poly = std::vector<Value>;

Value poly_eval(const Poly& c, const Value& x);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_shift(const Poly& c, const Value& m);  // q(r) = c(r + m)
Poly poly_scale(const Poly& c, const Value& s);

// sum_{r >= r_lo} c(r) y^r for |y| < 1, exact when inputs are exact.
// Throws DivergenceError (from specfun) when |y| >= 1 and c is nonzero.
Value poly_geometric_tail(const Poly& c, const Value& y, unsigned r_lo);

// ---------------------------------------------------------------------------
// Exponential-polynomial form of r -> f(p^r) at a fixed prime.
// ---------------------------------------------------------------------------
struct ExpPolyTerm {
    Poly poly;   // polynomial in r
    Value base;  // f contribution poly(r) * base^r
};

struct ExpPolyAtPrime {
    unsigned r0 = 0;            // form valid for r >= r0
    std::vector<Value> small;   // f(p^0) .. f(p^{r0-1})
    std::vector<ExpPolyTerm> terms;

    Value eval(unsigned r) const;
};

using PrimePowerRule = std::function<Value(std::uint64_t p, std::uint32_t r)>;
using ExpPolyRule = std::function<ExpPolyAtPrime(std::uint64_t p)>;

// ---------------------------------------------------------------------------
// MultFn
// ---------------------------------------------------------------------------
class MultFn {
public:
    std::string name;
    PrimePowerRule rule;  // must satisfy rule(p, 0) == 1
    ExpPolyRule expoly;   // optional; enables exact geometric summation

    // G1(N) = N^a1 (log N)^b1, G2(N) = N^-a2 (log N)^-b2.  Absent when the
    // paper assigns no universality class (mu, lambda, tau).
    std::optional<Value> a1, b1, a2, b2;

    bool completely_multiplicative = false;
    bool rational_valued = true;  // false: rule may return Real values

    // k-level prefactor for functions whose multiplicative core is stored in
    // the rule (r2 = 4 * core); 1 for everything else.
    Value k_prefactor = Value(1);

    Value at_prime_power(std::uint64_t p, std::uint32_t r) const { return rule(p, r); }

    // f(k) for a factored argument: prefactor * prod rule(p, e).
    Value eval_factored(const Factorization& fac) const;
    Value eval(std::uint64_t k, const SpfTable& table) const;
};

// ---------------------------------------------------------------------------
// Pointwise combinators (all preserve multiplicativity).
// ---------------------------------------------------------------------------
MultFn pointwise_product(std::string name, const MultFn& f, const MultFn& g);
MultFn pointwise_power(std::string name, const MultFn& f, unsigned n);
// f(k) * k^s for integer s (exact); use shift_real for fractional exponents.
MultFn scale_by_ks(std::string name, const MultFn& f, long s);
// f(k) * k^-s for real s (Real-valued rule).
MultFn shift_real(std::string name, const MultFn& f, long double s);

}  // namespace rsums
