#include "rsums/tau.hpp"

#include <cstdio>
#include <cstring>
#include <mutex>
#include <stdexcept>

#include "rsums/sieve.hpp"

namespace rsums {

namespace {

using int128 = __int128;

// Magnitude ceiling for the 128-bit fast path.  |tau(n)| <= d(n) n^{11/2}
// and the intermediate eta-power coefficients are smaller, so partial sums
// stay below 2^120 for limits up to this bound.
constexpr std::uint64_t kFastPathLimit = 400000;

struct SparseTerm {
    std::uint32_t offset;
    std::int64_t coeff;
};

// eta(q)^3 = sum_k (-1)^k (2k+1) q^{k(k+1)/2}
std::vector<SparseTerm> eta3_terms(std::uint64_t n) {
    std::vector<SparseTerm> out;
    for (std::uint64_t k = 0;; ++k) {
        std::uint64_t off = k * (k + 1) / 2;
        if (off >= n) break;
        std::int64_t c = static_cast<std::int64_t>(2 * k + 1);
        out.push_back({static_cast<std::uint32_t>(off), (k % 2 == 0) ? c : -c});
    }
    return out;
}

mpz_class int128_to_mpz(int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v)
                              : static_cast<unsigned __int128>(v);
    mpz_class hi(static_cast<unsigned long>(u >> 64));
    mpz_class out;
    mpz_mul_2exp(out.get_mpz_t(), hi.get_mpz_t(), 64);
    out += static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFULL);
    return neg ? mpz_class(-out) : out;
}

std::vector<mpz_class> build_fast(std::uint64_t limit) {
    const size_t n = limit;
    auto sparse = eta3_terms(n);
    std::vector<int128> cur(n, 0), next(n);
    cur[0] = 1;
    for (int pass = 0; pass < 8; ++pass) {
        std::fill(next.begin(), next.end(), int128(0));
        for (const auto& t : sparse) {
            const int128 c = t.coeff;
            const size_t off = t.offset;
            for (size_t i = 0; i + off < n; ++i) next[i + off] += c * cur[i];
        }
        std::swap(cur, next);
    }
    std::vector<mpz_class> out(n);
    for (size_t i = 0; i < n; ++i) out[i] = int128_to_mpz(cur[i]);
    return out;
}

std::vector<mpz_class> build_exact(std::uint64_t limit) {
    const size_t n = limit;
    auto sparse = eta3_terms(n);
    std::vector<mpz_class> cur(n), next(n);
    cur[0] = 1;
    for (int pass = 0; pass < 8; ++pass) {
        for (auto& v : next) v = 0;
        for (const auto& t : sparse) {
            const size_t off = t.offset;
            if (t.coeff >= 0) {
                unsigned long c = static_cast<unsigned long>(t.coeff);
                for (size_t i = 0; i + off < n; ++i)
                    mpz_addmul_ui(next[i + off].get_mpz_t(), cur[i].get_mpz_t(), c);
            } else {
                unsigned long c = static_cast<unsigned long>(-t.coeff);
                for (size_t i = 0; i + off < n; ++i)
                    mpz_submul_ui(next[i + off].get_mpz_t(), cur[i].get_mpz_t(), c);
            }
        }
        std::swap(cur, next);
    }
    return cur;
}

}  // namespace

TauTable::TauTable(std::uint64_t limit) : limit_(limit) {
    if (limit < 1) throw std::invalid_argument("TauTable: limit must be >= 1");
    vals_ = (limit <= kFastPathLimit) ? build_fast(limit) : build_exact(limit);
    // vals_[i] = tau(i+1)
}

const mpz_class& TauTable::at(std::uint64_t n) const {
    if (n < 1 || n > limit_) throw std::out_of_range("TauTable::at: n outside table");
    return vals_[n - 1];
}

// --------------------------- binary cache ----------------------------------

namespace {
constexpr char kMagic[4] = {'R', 'S', 'T', 'C'};
constexpr std::uint32_t kVersion = 1;

void put_u32(FILE* f, std::uint32_t v) {
    unsigned char b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    fwrite(b, 1, 4, f);
}
void put_u64(FILE* f, std::uint64_t v) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    fwrite(b, 1, 8, f);
}
bool get_u32(FILE* f, std::uint32_t* v) {
    unsigned char b[4];
    if (fread(b, 1, 4, f) != 4) return false;
    *v = 0;
    for (int i = 0; i < 4; ++i) *v |= static_cast<std::uint32_t>(b[i]) << (8 * i);
    return true;
}
bool get_u64(FILE* f, std::uint64_t* v) {
    unsigned char b[8];
    if (fread(b, 1, 8, f) != 8) return false;
    *v = 0;
    for (int i = 0; i < 8; ++i) *v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    return true;
}

// Little-endian two's complement, minimal width, one length byte in front.
void put_record(FILE* f, const mpz_class& v) {
    if (v == 0) {
        fputc(1, f);
        fputc(0, f);
        return;
    }
    mpz_class mag = ::abs(v);
    size_t bits = mpz_sizeinbase(mag.get_mpz_t(), 2);
    size_t len = bits / 8 + 1;  // always room for the sign bit
    mpz_class enc = v;
    if (v < 0) {
        mpz_class mod;
        mpz_ui_pow_ui(mod.get_mpz_t(), 2, static_cast<unsigned long>(8 * len));
        enc = mod + v;
    }
    std::vector<unsigned char> buf(len, 0);
    size_t count = 0;
    mpz_export(buf.data(), &count, -1 /*LSB first*/, 1, 0, 0, enc.get_mpz_t());
    if (len > 255) throw std::length_error("tau cache: record too wide");
    fputc(static_cast<int>(len), f);
    fwrite(buf.data(), 1, len, f);
}

bool get_record(FILE* f, mpz_class* out) {
    int len = fgetc(f);
    if (len == EOF || len == 0) return false;
    std::vector<unsigned char> buf(static_cast<size_t>(len));
    if (fread(buf.data(), 1, buf.size(), f) != buf.size()) return false;
    mpz_class v;
    mpz_import(v.get_mpz_t(), buf.size(), -1, 1, 0, 0, buf.data());
    if (buf.back() & 0x80) {
        mpz_class mod;
        mpz_ui_pow_ui(mod.get_mpz_t(), 2, static_cast<unsigned long>(8 * len));
        v -= mod;
    }
    *out = v;
    return true;
}
}  // namespace

bool TauTable::save(const std::string& path) const {
    FILE* f = fopen(path.c_str(), "wb");
    if (!f) return false;
    fwrite(kMagic, 1, 4, f);
    put_u32(f, kVersion);
    put_u64(f, limit_);
    for (const auto& v : vals_) put_record(f, v);
    fclose(f);
    return true;
}

std::optional<TauTable> TauTable::load(const std::string& path, std::uint64_t limit) {
    FILE* f = fopen(path.c_str(), "rb");
    if (!f) return std::nullopt;
    char magic[4];
    std::uint32_t version = 0;
    std::uint64_t stored_limit = 0;
    bool ok = fread(magic, 1, 4, f) == 4 && memcmp(magic, kMagic, 4) == 0 &&
              get_u32(f, &version) && version == kVersion &&
              get_u64(f, &stored_limit) && stored_limit == limit;
    if (!ok) {
        fclose(f);
        return std::nullopt;
    }
    TauTable t;
    t.limit_ = limit;
    t.vals_.resize(limit);
    for (std::uint64_t i = 0; i < limit; ++i) {
        if (!get_record(f, &t.vals_[i])) {
            fclose(f);
            return std::nullopt;
        }
    }
    fclose(f);
    return t;
}

TauTable TauTable::load_or_build(const std::string& path, std::uint64_t limit) {
    if (!path.empty()) {
        if (auto t = load(path, limit)) return std::move(*t);
    }
    TauTable t(limit);
    if (!path.empty()) t.save(path);
    return t;
}

// --------------------------- recursion & checks ----------------------------

mpz_class tau_prime_power(std::uint64_t p, std::uint32_t r, const mpz_class& tau_p) {
    if (r == 0) return 1;
    if (r == 1) return tau_p;
    mpz_class p11 = Value(pow_uint(p, 11)).numerator();
    mpz_class prev = 1, cur = tau_p;
    for (std::uint32_t i = 1; i < r; ++i) {
        mpz_class next = tau_p * cur - p11 * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

TauIdentityCheck tau_identity_check(std::uint64_t p, unsigned m, unsigned n,
                                    const mpz_class& tau_p) {
    if (m < 1 || n < 1) throw std::invalid_argument("tau_identity_check: m,n >= 1");
    mpz_class p11 = Value(pow_uint(p, 11)).numerator();
    mpz_class lhs = tau_prime_power(p, m + n, tau_p);
    mpz_class rhs = tau_prime_power(p, m, tau_p) * tau_prime_power(p, n, tau_p) -
                    p11 * tau_prime_power(p, m - 1, tau_p) * tau_prime_power(p, n - 1, tau_p);
    return {lhs == rhs, lhs, rhs};
}

std::vector<DelignePoint> deligne_quartic_scan(unsigned prime_count,
                                               const TauTable& tau,
                                               const SpfTable& primes) {
    std::vector<DelignePoint> out;
    out.reserve(prime_count);
    for (std::uint32_t p : primes.primes()) {
        if (out.size() == prime_count) break;
        // tau(p) from the table, tau(p^4) from the recursion.
        const mpz_class& tp = tau.at(p);
        mpz_class t4 = tau_prime_power(p, 4, tp);
        mpz_class bound;  // 4 p^22
        mpz_ui_pow_ui(bound.get_mpz_t(), static_cast<unsigned long>(p), 22);
        bound *= 4;
        bool within = ::abs(t4) < bound;
        long double ratio = Value(Value::ratio(t4, bound)).real();
        out.push_back({p, ratio, within});
    }
    if (out.size() < prime_count)
        throw std::out_of_range("deligne_quartic_scan: prime table too small");
    return out;
}

Value tau_renorm(std::uint64_t p, unsigned m, TauRenormVariant variant,
                 const mpz_class& tau_p, long double s) {
    mpz_class tm = tau_prime_power(p, m, tau_p);
    mpz_class tm1 = (m >= 1) ? tau_prime_power(p, m - 1, tau_p) : mpz_class(0);
    switch (variant) {
        case TauRenormVariant::dirichlet: {
            if (!(s > 6.5L))
                throw std::domain_error("tau dirichlet series requires s > 13/2");
            if (m == 0) return Value(1);
            long double shift = powl(static_cast<long double>(p), s - 11.0L);
            return Value(tm) - Value(tm1) / Value(shift);
        }
        case TauRenormVariant::tau_sq: {
            if (m == 0) return Value(1);
            Value p10 = pow_uint(p, 10);
            Value corr = Value(2) * Value(tau_p) * Value(tm1) * Value(tm) /
                         Value(static_cast<long>(p + 1));
            return Value(tm) * Value(tm) + p10 * Value(tm1) * Value(tm1) - corr;
        }
        case TauRenormVariant::tau_sq_normalized: {
            if (m == 0) return Value(1);
            long double pl = static_cast<long double>(p);
            Value p95(powl(pl, 9.5L));
            Value denom(powl(pl, 1.5L) + 1.0L);
            return Value(tm) * Value(tm) + p95 * Value(tm1) * Value(tm1) -
                   Value(2) * Value(tau_p) * Value(tm1) * Value(tm) / denom;
        }
    }
    throw std::logic_error("tau_renorm: bad variant");
}

// --------------------------- shared table ---------------------------------

namespace {
std::uint64_t g_tau_limit = 300000;
std::string g_tau_cache;
std::once_flag g_tau_once;
std::unique_ptr<TauTable> g_tau_table;
}  // namespace

void configure_shared_tau(std::uint64_t limit, std::string cache_path) {
    if (g_tau_table)
        throw std::logic_error("configure_shared_tau: table already built");
    g_tau_limit = limit;
    g_tau_cache = std::move(cache_path);
}

const TauTable& shared_tau_table() {
    std::call_once(g_tau_once, [] {
        g_tau_table = std::make_unique<TauTable>(
            TauTable::load_or_build(g_tau_cache, g_tau_limit));
    });
    return *g_tau_table;
}

}  // namespace rsums
