#include "rsums/partition.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace rsums {

namespace {
std::vector<mpz_class> g_part = {mpz_class(1)};  // P(0) = 1
std::mutex g_part_mutex;

void extend_unlocked(unsigned n) {
    for (unsigned m = static_cast<unsigned>(g_part.size()); m <= n; ++m) {
        mpz_class acc = 0;
        for (unsigned j = 1;; ++j) {
            unsigned long g1 = static_cast<unsigned long>(j) * (3UL * j - 1) / 2;
            if (g1 > m) break;
            int sign = (j % 2 == 1) ? 1 : -1;
            if (sign > 0) acc += g_part[m - g1]; else acc -= g_part[m - g1];
            unsigned long g2 = static_cast<unsigned long>(j) * (3UL * j + 1) / 2;
            if (g2 <= m) {
                if (sign > 0) acc += g_part[m - g2]; else acc -= g_part[m - g2];
            }
        }
        g_part.push_back(acc);
    }
}
}  // namespace

const mpz_class& partition(unsigned n) {
    std::lock_guard<std::mutex> lock(g_part_mutex);
    extend_unlocked(n);
    return g_part[n];
}

void partition_reserve(unsigned n_max) {
    std::lock_guard<std::mutex> lock(g_part_mutex);
    extend_unlocked(n_max);
}

Value euler_q(const Value& x, unsigned bits) {
    if (x < Value(0) || x >= Value(1))
        throw std::domain_error("euler_q: x must be in [0,1)");
    if (x.is_zero()) return Value(1);
    // Q(x) = sum_{j=-inf}^{inf} (-1)^j x^{j(3j-1)/2}  (pentagonal number theorem)
    Value acc(1), xp = x.to_real();
    long double mag = xp.real();
    Value term_bound(1);
    for (long j = 1;; ++j) {
        long g1 = j * (3 * j - 1) / 2;
        long g2 = j * (3 * j + 1) / 2;
        long double est = powl(mag, static_cast<long double>(g1));
        Value t = (j % 2 == 1) ? -(x.pow(g1) + x.pow(g2)) : (x.pow(g1) + x.pow(g2));
        acc += t;
        if (est < ldexpl(1.0L, -static_cast<int>(bits))) break;
        if (j > 64) break;  // x < 1 guarantees termination long before this
    }
    return acc;
}

}  // namespace rsums
