// Smallest-prime-factor sieve and factorization.
//
// The table is built once (single-threaded, linear sieve) and is immutable
// afterwards, so concurrent reads are safe.

#pragma once

#include <cstdint>
#include <vector>

namespace rsums {

struct PrimePower {
    std::uint64_t prime;
    std::uint32_t exponent;
    bool operator==(const PrimePower&) const = default;
};

// Ordered prime-power decomposition, primes strictly increasing.
using Factorization = std::vector<PrimePower>;

class SpfTable {
public:
    // limit >= 2; entries are 32-bit so limit must fit in uint32_t.
    explicit SpfTable(std::uint64_t limit);

    std::uint64_t limit() const { return limit_; }

    std::uint32_t spf(std::uint64_t k) const { return spf_[k]; }
    bool is_prime(std::uint64_t k) const { return k >= 2 && spf_[k] == k; }

    // k == 1 yields the empty factorization; k must be <= limit().
    Factorization factorize(std::uint64_t k) const;

    const std::vector<std::uint32_t>& primes() const { return primes_; }

private:
    std::uint64_t limit_;
    std::vector<std::uint32_t> spf_;
    std::vector<std::uint32_t> primes_;
};

// Merges extra prime powers into an existing factorization (used to evaluate
// f(p^m * k) from the factorization of k without factorizing the product).
Factorization merge_scale(const Factorization& base, std::uint64_t p, std::uint32_t m);
Factorization merge_scales(const Factorization& base,
                           const std::vector<std::pair<std::uint64_t, std::uint32_t>>& scales);

// Multiplies every exponent by n, then merges p^m (for f(k^n * p^m)).
Factorization power_scale(const Factorization& base, std::uint32_t n,
                          std::uint64_t p, std::uint32_t m);

}  // namespace rsums
