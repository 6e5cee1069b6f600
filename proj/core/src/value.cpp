#include "rsums/value.hpp"

#include <cstdio>

namespace rsums {

// Full 64-bit-mantissa conversion; mpq_get_d would truncate to 53 bits.
long double Value::mpq_to_ld(const mpq_class& q) {
    const mpz_class& num = q.get_num();
    const mpz_class& den = q.get_den();
    if (sgn(num) == 0) return 0.0L;

    long nbits = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2));
    long dbits = static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
    // t = floor(|num| * 2^shift / den) carries ~96 significant bits.
    long shift = 96 - (nbits - dbits);
    mpz_class t, n_abs = ::abs(num);
    if (shift >= 0) {
        mpz_mul_2exp(t.get_mpz_t(), n_abs.get_mpz_t(), static_cast<unsigned long>(shift));
        t /= den;
    } else {
        mpz_class d_shifted;
        mpz_mul_2exp(d_shifted.get_mpz_t(), den.get_mpz_t(),
                     static_cast<unsigned long>(-shift));
        t = n_abs / d_shifted;
    }
    long double x = 0.0L;
    size_t limbs = mpz_size(t.get_mpz_t());
    for (size_t i = limbs; i-- > 0;) {
        x = x * 18446744073709551616.0L +  // 2^64
            static_cast<long double>(mpz_getlimbn(t.get_mpz_t(), i));
    }
    x = ldexpl(x, static_cast<int>(-shift));
    return sgn(num) < 0 ? -x : x;
}

std::string format_real(long double x) {
    char buf[64];
    snprintf(buf, sizeof buf, "%.15Lg", x);
    return std::string(buf);
}

std::string Value::str() const {
    if (is_exact()) {
        const mpq_class& q = std::get<mpq_class>(rep_);
        std::string s = q.get_num().get_str();
        if (q.get_den() != 1) s += "/" + q.get_den().get_str();
        return s;
    }
    return format_real(std::get<long double>(rep_));
}

std::string Value::decimal_str() const { return format_real(real()); }

}  // namespace rsums
