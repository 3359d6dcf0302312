#pragma once

#include <cstdint>
#include <vector>

namespace zdg {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Largest supported modulus: 2^63 - 1.
inline constexpr u64 kMaxModulus = (u64{1} << 63) - 1;

struct PrimePower {
    u64 prime = 0;
    unsigned exponent = 0;
    bool operator==(const PrimePower&) const = default;
};

// Unique prime factorization of n, primes strictly increasing.
struct Factorization {
    u64 n = 0;
    std::vector<PrimePower> factors;

    u64 divisor_count() const;  // tau(n)
    bool is_prime_power() const { return factors.size() == 1; }
    bool is_prime() const { return factors.size() == 1 && factors[0].exponent == 1; }
};

u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 a, u64 e, u64 m);

// Deterministic Miller-Rabin, valid for the full 64-bit range.
bool is_prime(u64 n);

// Trial division below 10^6, then Miller-Rabin + Brent's rho on the
// cofactor. Deterministic. Throws DomainError for n < 2 or n > 2^63 - 1.
Factorization factorize(u64 n);

// Euler's totient via the product formula. Throws DomainError for m < 1.
u64 euler_phi(u64 m);
u64 euler_phi(const Factorization& f);

// All divisors of n, ascending. Throws DomainError for n < 2.
std::vector<u64> divisors(u64 n);
std::vector<u64> divisors(const Factorization& f);

// (d, phi(d)) for every divisor d of n, ascending by d. One pass over the
// factorization; avoids re-factorizing n/d for every divisor class.
std::vector<std::pair<u64, u64>> divisors_with_phi(const Factorization& f);

// Proper divisors d of n with 1 < d < n, ascending: the divisor-class
// domain of Gamma[Z_n]. Empty exactly when n is prime.
std::vector<u64> proper_divisor_classes_domain(u64 n);

// True iff every exponent in factorize(n) equals 1.
bool is_squarefree(u64 n);

}  // namespace zdg
