#include "rsums/sieve.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace rsums {

SpfTable::SpfTable(std::uint64_t limit) : limit_(limit) {
    if (limit < 2) throw std::invalid_argument("SpfTable: limit must be >= 2");
    if (limit > std::numeric_limits<std::uint32_t>::max())
        throw std::length_error("SpfTable: limit exceeds 32-bit entry budget");

    spf_.assign(limit + 1, 0);
    // Linear sieve: each composite is crossed once by its smallest prime.
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (spf_[i] == 0) {
            spf_[i] = static_cast<std::uint32_t>(i);
            primes_.push_back(static_cast<std::uint32_t>(i));
        }
        for (std::uint32_t p : primes_) {
            if (p > spf_[i] || i * p > limit) break;
            spf_[i * p] = p;
        }
    }
}

Factorization SpfTable::factorize(std::uint64_t k) const {
    if (k == 0 || k > limit_) throw std::out_of_range("factorize: k outside table range");
    Factorization out;
    while (k > 1) {
        std::uint64_t p = spf_[k];
        std::uint32_t e = 0;
        while (k % p == 0) { k /= p; ++e; }
        out.push_back({p, e});
    }
    return out;
}

Factorization merge_scale(const Factorization& base, std::uint64_t p, std::uint32_t m) {
    if (m == 0) return base;
    Factorization out;
    out.reserve(base.size() + 1);
    bool placed = false;
    for (const auto& pp : base) {
        if (pp.prime == p) {
            out.push_back({p, pp.exponent + m});
            placed = true;
        } else {
            if (!placed && pp.prime > p) {
                out.push_back({p, m});
                placed = true;
            }
            out.push_back(pp);
        }
    }
    if (!placed) out.push_back({p, m});
    return out;
}

Factorization merge_scales(const Factorization& base,
                           const std::vector<std::pair<std::uint64_t, std::uint32_t>>& scales) {
    Factorization out = base;
    for (const auto& [p, m] : scales) out = merge_scale(out, p, m);
    return out;
}

Factorization power_scale(const Factorization& base, std::uint32_t n,
                          std::uint64_t p, std::uint32_t m) {
    Factorization out = base;
    for (auto& pp : out) pp.exponent *= n;
    return merge_scale(out, p, m);
}

}  // namespace rsums
