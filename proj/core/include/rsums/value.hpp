// Exact-or-real number type used throughout the library.
//
// Every quantity is either an ExactRational (GMP mpq, always canonical) or a
// Real (80-bit extended long double).  Arithmetic between two exact values
// stays exact; a real operand makes the result real.  There is no implicit
// promotion back from real to exact.

#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

namespace rsums {

class Value {
public:
    Value() : rep_(mpq_class(0)) {}
    Value(int n) : rep_(mpq_class(n)) {}
    Value(long n) : rep_(mpq_class(static_cast<signed long>(n))) {}
    Value(unsigned long n) : rep_(mpq_class(n)) {}
    Value(long long n) : rep_(mpq_class(int64_str(n))) { canonicalize(); }
    Value(unsigned long long n) : rep_(mpq_class(uint64_str(n))) { canonicalize(); }
    Value(const mpz_class& z) : rep_(mpq_class(z)) {}
    Value(const mpq_class& q) : rep_(q) { canonicalize(); }
    Value(long double x) : rep_(x) {}
    Value(double x) : rep_(static_cast<long double>(x)) {}

    static Value ratio(long num, long den) {
        if (den == 0) throw std::domain_error("Value: zero denominator");
        mpq_class q(num, den);
        q.canonicalize();
        return Value(q);
    }
    static Value ratio(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw std::domain_error("Value: zero denominator");
        mpq_class q(num, den);
        q.canonicalize();
        return Value(q);
    }

    bool is_exact() const { return std::holds_alternative<mpq_class>(rep_); }
    bool is_real() const { return !is_exact(); }
    bool is_integer() const {
        return is_exact() && std::get<mpq_class>(rep_).get_den() == 1;
    }

    const mpq_class& rational() const {
        if (!is_exact()) throw std::logic_error("Value: not exact");
        return std::get<mpq_class>(rep_);
    }
    mpz_class numerator() const { return rational().get_num(); }
    mpz_class denominator() const { return rational().get_den(); }

    long double real() const {
        if (is_exact()) return mpq_to_ld(std::get<mpq_class>(rep_));
        return std::get<long double>(rep_);
    }

    bool is_zero() const {
        return is_exact() ? sgn(std::get<mpq_class>(rep_)) == 0
                          : std::get<long double>(rep_) == 0.0L;
    }
    int sign() const {
        if (is_exact()) return sgn(std::get<mpq_class>(rep_));
        long double x = std::get<long double>(rep_);
        return (x > 0) - (x < 0);
    }

    Value operator-() const {
        if (is_exact()) return Value(mpq_class(-std::get<mpq_class>(rep_)));
        return Value(-std::get<long double>(rep_));
    }

    Value& operator+=(const Value& o) { return apply(o, Add{}); }
    Value& operator-=(const Value& o) { return apply(o, Sub{}); }
    Value& operator*=(const Value& o) { return apply(o, Mul{}); }
    Value& operator/=(const Value& o) {
        if (o.is_zero()) throw std::domain_error("Value: division by zero");
        return apply(o, Div{});
    }

    friend Value operator+(Value a, const Value& b) { return a += b; }
    friend Value operator-(Value a, const Value& b) { return a -= b; }
    friend Value operator*(Value a, const Value& b) { return a *= b; }
    friend Value operator/(Value a, const Value& b) { return a /= b; }

    // Exact comparison when both sides are exact, else real comparison.
    friend bool operator==(const Value& a, const Value& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const Value& a, const Value& b) { return cmp(a, b) != 0; }
    friend bool operator<(const Value& a, const Value& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const Value& a, const Value& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const Value& a, const Value& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const Value& a, const Value& b) { return cmp(a, b) >= 0; }

    static int cmp(const Value& a, const Value& b) {
        if (a.is_exact() && b.is_exact())
            return ::cmp(std::get<mpq_class>(a.rep_), std::get<mpq_class>(b.rep_));
        long double x = a.real(), y = b.real();
        return (x > y) - (x < y);
    }

    Value abs() const { return sign() < 0 ? -*this : *this; }

    // Integer power; negative exponents invert.  Exact stays exact.
    Value pow(long e) const {
        if (e == 0) return Value(1);
        if (is_exact()) {
            const mpq_class& q = std::get<mpq_class>(rep_);
            mpz_class num, den;
            unsigned long ue = static_cast<unsigned long>(e < 0 ? -e : e);
            mpz_pow_ui(num.get_mpz_t(), q.get_num().get_mpz_t(), ue);
            mpz_pow_ui(den.get_mpz_t(), q.get_den().get_mpz_t(), ue);
            if (e < 0) {
                if (num == 0) throw std::domain_error("Value: 0^negative");
                std::swap(num, den);
            }
            return ratio(num, den);
        }
        return Value(powl(std::get<long double>(rep_), static_cast<long double>(e)));
    }

    // Forced conversion to the real lane.
    Value to_real() const { return Value(real()); }

    std::string str() const;          // "num/den" or decimal
    std::string decimal_str() const;  // 15 significant digits

private:
    struct Add { static void q(mpq_class& a, const mpq_class& b) { a += b; }
                 static long double r(long double a, long double b) { return a + b; } };
    struct Sub { static void q(mpq_class& a, const mpq_class& b) { a -= b; }
                 static long double r(long double a, long double b) { return a - b; } };
    struct Mul { static void q(mpq_class& a, const mpq_class& b) { a *= b; }
                 static long double r(long double a, long double b) { return a * b; } };
    struct Div { static void q(mpq_class& a, const mpq_class& b) { a /= b; }
                 static long double r(long double a, long double b) { return a / b; } };

    template <class Op>
    Value& apply(const Value& o, Op) {
        if (is_exact() && o.is_exact()) {
            Op::q(std::get<mpq_class>(rep_), std::get<mpq_class>(o.rep_));
        } else {
            rep_ = Op::r(real(), o.real());
        }
        return *this;
    }

    void canonicalize() {
        if (is_exact()) std::get<mpq_class>(rep_).canonicalize();
    }

    static std::string int64_str(long long n) { return std::to_string(n); }
    static std::string uint64_str(unsigned long long n) { return std::to_string(n); }

    static long double mpq_to_ld(const mpq_class& q);

    std::variant<mpq_class, long double> rep_;
};

// p^e as an exact integer Value, e >= 0.
inline Value pow_uint(unsigned long long base, unsigned long e) {
    mpz_class b(std::to_string(base)), r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return Value(r);
}

std::string format_real(long double x);

}  // namespace rsums
