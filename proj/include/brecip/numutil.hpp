// Integer utilities shared by the whole library: exact square detection,
// deterministic 64-bit primality, prime iteration, squarefree kernels and
// seed derivation. Everything is pure; randomized callers pass explicit seeds.
#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace brecip {

class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

class zero_polynomial_error : public error {
public:
    zero_polynomial_error() : error("operation undefined for the zero polynomial") {}
};

class degree_error : public error {
public:
    explicit degree_error(const std::string& what) : error(what) {}
};

class not_prime_error : public error {
public:
    explicit not_prime_error(const std::string& what) : error(what) {}
};

class not_breciprocal_error : public error {
public:
    explicit not_breciprocal_error(const std::string& what) : error(what) {}
};

class not_irreducible_error : public error {
public:
    explicit not_irreducible_error(const std::string& what) : error(what) {}
};

class budget_exceeded_error : public error {
public:
    explicit budget_exceeded_error(const std::string& what) : error(what) {}
};

class degenerate_fit_error : public error {
public:
    explicit degenerate_fit_error(const std::string& what) : error(what) {}
};

inline uint64_t isqrt_u64(uint64_t n) {
    if (n == 0) return 0;
    uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
    if (r > UINT32_MAX) r = UINT32_MAX;
    // float seed only; settle exactly in integer arithmetic
    while (r > 0 && r * r > n) --r;
    while (r < UINT32_MAX && (r + 1) * (r + 1) <= n) ++r;
    return r;
}

inline bool is_square_u64(uint64_t n) {
    // squares hit only 12 of the 64 residues mod 64; filter before the isqrt
    static const uint64_t kMask64 = [] {
        uint64_t m = 0;
        for (uint64_t k = 0; k < 64; ++k) m |= uint64_t{1} << ((k * k) & 63);
        return m;
    }();
    if (!((kMask64 >> (n & 63)) & 1)) return false;
    uint64_t r = isqrt_u64(n);
    return r * r == n;
}

inline bool is_square_i64(int64_t n) {
    if (n < 0) return false;
    return is_square_u64(static_cast<uint64_t>(n));
}

/// True iff N = m^2 for an integer m >= 0. Exact, no floating point.
inline bool is_square_int(const mpz_class& n) {
    if (sgn(n) < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline mpz_class isqrt_int(const mpz_class& n) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t m) {
    if (m == 1) return 0;
    uint64_t acc = 1;
    base %= m;
    while (exp) {
        if (exp & 1) acc = mulmod_u64(acc, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return acc;
}

/// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // this base set decides primality for all n < 3.3 * 10^24
    for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

inline uint64_t next_prime_u64(uint64_t n) {
    if (n < 2) return 2;
    uint64_t c = n + 1 + (n & 1);
    if (n == 2) c = 3;
    while (!is_prime_u64(c)) c += 2;
    return c;
}

/// Primes below `limit`, ascending well past typical sweep budgets.
inline const std::vector<uint32_t>& small_primes(uint32_t limit = 1u << 20) {
    static const std::vector<uint32_t> primes = [limit] {
        std::vector<bool> sieve(limit, true);
        std::vector<uint32_t> out;
        for (uint32_t i = 2; i < limit; ++i) {
            if (!sieve[i]) continue;
            out.push_back(i);
            for (uint64_t j = static_cast<uint64_t>(i) * i; j < limit; j += i) sieve[j] = false;
        }
        return out;
    }();
    return primes;
}

inline bool is_probable_prime(const mpz_class& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 32) > 0;
}

enum class SqfStatus { Exact, Incomplete };

struct SqfKernel {
    mpz_class k;
    SqfStatus status = SqfStatus::Exact;
};

/// Squarefree kernel of N != 0: sign(N) times the product of primes dividing N
/// to odd order. Trial division by primes up to `bound`, then the remainder is
/// peeled as long as it is 1, prime, or a perfect power; otherwise Incomplete.
inline SqfKernel squarefree_kernel(const mpz_class& n, uint64_t bound = 1'000'000) {
    if (sgn(n) == 0) throw error("squarefree_kernel: input must be nonzero");
    mpz_class rest = abs(n);
    mpz_class kernel = sgn(n) < 0 ? -1 : 1;
    auto strip = [&](uint64_t p) {
        int e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++e;
        }
        if (e & 1) kernel *= static_cast<unsigned long>(p);
    };
    bool small_done = false;
    uint64_t highest_tried = 1;
    for (uint32_t p : small_primes()) {
        if (p > bound) { small_done = true; break; }
        mpz_class psq = static_cast<unsigned long>(p);
        psq *= p;
        if (rest < psq) { small_done = true; break; }  // remainder is 1 or prime
        highest_tried = p;
        strip(p);
    }
    if (!small_done) {
        // bound exceeds the sieve: continue with odd trial divisors
        for (uint64_t d = highest_tried + 2; d <= bound; d += 2) {
            mpz_class dsq = static_cast<unsigned long>(d);
            dsq *= d;
            if (rest < dsq) break;
            strip(d);
        }
    }
    // Peel the remainder: prime, prime power, or perfect power thereof.
    int exp_mult = 1;
    while (rest != 1) {
        if (is_probable_prime(rest)) {
            if (exp_mult & 1) kernel *= rest;
            break;
        }
        if (mpz_perfect_square_p(rest.get_mpz_t())) {
            mpz_sqrt(rest.get_mpz_t(), rest.get_mpz_t());
            exp_mult *= 2;
            continue;
        }
        // odd perfect power (e.g. p^3 with p beyond the trial bound)
        bool reduced = false;
        if (mpz_perfect_power_p(rest.get_mpz_t())) {
            for (unsigned long e = 3; ; e += 2) {
                mpz_class root;
                if (mpz_root(root.get_mpz_t(), rest.get_mpz_t(), e)) {
                    rest = root;
                    exp_mult *= static_cast<int>(e);
                    reduced = true;
                    break;
                }
                mpz_class emin;
                mpz_ui_pow_ui(emin.get_mpz_t(), 2, e);
                if (emin > rest) break;
            }
        }
        if (!reduced) return {mpz_class(0), SqfStatus::Incomplete};
    }
    return {kernel, SqfStatus::Exact};
}

/// splitmix64: cheap, well-mixed derivation of per-task seeds from one master seed.
inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline uint64_t mix_seed(uint64_t a, uint64_t b) {
    return splitmix64(a ^ splitmix64(b));
}

}  // namespace brecip
