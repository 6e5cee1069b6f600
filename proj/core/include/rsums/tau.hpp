// Ramanujan tau: bulk computation of tau(1..limit) from the eta-product,
// the Hecke prime-power recursion, identity checks, and the quartic-bound
// prime scan.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rsums/value.hpp"

namespace rsums {

class SpfTable;

class TauTable {
public:
    // Coefficients of q * prod_k (1-q^k)^24 up to q^limit.  eta^3 is the
    // sparse triangular-number series; squaring it three times would change
    // the pass count, so we multiply the sparse factor in 8 times, giving
    // O(limit^1.5) integer operations.
    explicit TauTable(std::uint64_t limit);

    std::uint64_t limit() const { return limit_; }
    const mpz_class& at(std::uint64_t n) const;  // tau(n), 1 <= n <= limit

    // Binary cache: header (magic, version, limit) + little-endian
    // two's-complement variable-length records.  Invalid or mismatched
    // caches are ignored.
    bool save(const std::string& path) const;
    static std::optional<TauTable> load(const std::string& path, std::uint64_t limit);
    static TauTable load_or_build(const std::string& path, std::uint64_t limit);

private:
    TauTable() = default;
    std::uint64_t limit_ = 0;
    std::vector<mpz_class> vals_;
};

// tau(p^r) by the Hecke recursion from tau(p); exact.
mpz_class tau_prime_power(std::uint64_t p, std::uint32_t r, const mpz_class& tau_p);

// Checks tau(p^{m+n}) == tau(p^m)tau(p^n) - p^11 tau(p^{m-1})tau(p^{n-1}),
// m, n >= 1; returns both sides for reporting.
struct TauIdentityCheck {
    bool pass;
    mpz_class lhs, rhs;
};
TauIdentityCheck tau_identity_check(std::uint64_t p, unsigned m, unsigned n,
                                    const mpz_class& tau_p);

// Per-prime quartic-bound data: compares |tau(p^4)| against 4p^22 exactly;
// ratio is reported as a float for display only.
struct DelignePoint {
    std::uint64_t p;
    long double ratio;   // tau(p^4) / (4 p^22)
    bool within_bound;   // |tau(p^4)| < 4p^22
};
std::vector<DelignePoint> deligne_quartic_scan(unsigned prime_count,
                                               const TauTable& tau,
                                               const SpfTable& primes);

enum class TauRenormVariant { dirichlet, tau_sq, tau_sq_normalized };

// dirichlet(s):       D(tau;p^m,s)/D(tau,s) = tau(p^m) - tau(p^{m-1})/p^{s-11}
// tau_sq:             R_inf(tau^2;p^m) (exact rational)
// tau_sq_normalized:  p^{25m/2} R_inf(tau^2 k^{-25/2};p^m) (Real)
Value tau_renorm(std::uint64_t p, unsigned m, TauRenormVariant variant,
                 const mpz_class& tau_p, long double s = 0.0L);

// Process-wide shared table for catalogue evaluation.  Configure before the
// first use; the build is synchronized internally.
void configure_shared_tau(std::uint64_t limit, std::string cache_path = "");
const TauTable& shared_tau_table();

}  // namespace rsums
