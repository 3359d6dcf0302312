#include <doctest.h>

#include <numeric>

#include "zdg/errors.hpp"
#include "zdg/numtheory.hpp"

using namespace zdg;

namespace {

// Independent oracle: phi by direct coprime count.
u64 phi_brute(u64 m) {
    u64 count = 0;
    for (u64 k = 1; k <= m; ++k) {
        if (std::gcd(k, m) == 1) ++count;
    }
    return count;
}

u64 recompose(const Factorization& f) {
    u64 n = 1;
    for (const auto& [p, e] : f.factors) {
        for (unsigned i = 0; i < e; ++i) n *= p;
    }
    return n;
}

}  // namespace

TEST_CASE("factorize on small examples") {
    const Factorization f12 = factorize(12);
    REQUIRE(f12.factors.size() == 2);
    CHECK(f12.factors[0] == PrimePower{2, 2});
    CHECK(f12.factors[1] == PrimePower{3, 1});

    const Factorization f9973 = factorize(9973);
    CHECK(f9973.is_prime());
    CHECK(f9973.factors[0] == PrimePower{9973, 1});

    const Factorization f27 = factorize(27);
    REQUIRE(f27.factors.size() == 1);
    CHECK(f27.factors[0] == PrimePower{3, 3});
    CHECK(f27.is_prime_power());
    CHECK(!f27.is_prime());
}

TEST_CASE("factorize recomposition and structure up to 10^4") {
    for (u64 n = 2; n <= 10'000; ++n) {
        const Factorization f = factorize(n);
        REQUIRE(recompose(f) == n);
        for (std::size_t i = 0; i < f.factors.size(); ++i) {
            REQUIRE(f.factors[i].exponent >= 1);
            REQUIRE(is_prime(f.factors[i].prime));
            if (i > 0) REQUIRE(f.factors[i - 1].prime < f.factors[i].prime);
        }
    }
}

TEST_CASE("factorize domain errors") {
    CHECK_THROWS_AS(factorize(0), DomainError);
    CHECK_THROWS_AS(factorize(1), DomainError);
    CHECK_THROWS_AS(factorize(u64{1} << 63), DomainError);
}

TEST_CASE("factorize large inputs through the rho path") {
    const Factorization pow2 = factorize(u64{1} << 62);
    REQUIRE(pow2.factors.size() == 1);
    CHECK(pow2.factors[0] == PrimePower{2, 62});

    // (2^31 - 1)^2: no factor below the trial bound, rho must split it.
    const u64 m31 = 2147483647ULL;
    const Factorization sq = factorize(m31 * m31);
    REQUIRE(sq.factors.size() == 1);
    CHECK(sq.factors[0] == PrimePower{m31, 1 + 1});

    const Factorization semi = factorize(1000000007ULL * 1000000009ULL);
    REQUIRE(semi.factors.size() == 2);
    CHECK(semi.factors[0] == PrimePower{1000000007ULL, 1});
    CHECK(semi.factors[1] == PrimePower{1000000009ULL, 1});

    // 2^63 - 1 = 7^2 * 73 * 127 * 337 * 92737 * 649657.
    const Factorization mersenne = factorize(kMaxModulus);
    REQUIRE(mersenne.factors.size() == 6);
    CHECK(mersenne.factors[0] == PrimePower{7, 2});
    CHECK(mersenne.factors[1] == PrimePower{73, 1});
    CHECK(mersenne.factors[2] == PrimePower{127, 1});
    CHECK(mersenne.factors[3] == PrimePower{337, 1});
    CHECK(mersenne.factors[4] == PrimePower{92737, 1});
    CHECK(mersenne.factors[5] == PrimePower{649657, 1});
    CHECK(recompose(mersenne) == kMaxModulus);
}

TEST_CASE("deterministic primality") {
    CHECK(is_prime(2));
    CHECK(is_prime(9973));
    CHECK(!is_prime(1));
    CHECK(!is_prime(9973ULL * 9973ULL));
    CHECK(is_prime(2305843009213693951ULL));  // 2^61 - 1
    CHECK(!is_prime(2305843009213693951ULL - 2));
    CHECK(is_prime(1000000007ULL));
}

TEST_CASE("euler_phi examples and oracle agreement") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(9) == 6);
    CHECK(euler_phi(12) == phi_brute(12));
    CHECK(euler_phi(12) == 4);
    CHECK_THROWS_AS(euler_phi(0), DomainError);

    for (u64 n = 2; n <= 10'000; ++n) {
        if (euler_phi(n) != phi_brute(n)) {
            REQUIRE_MESSAGE(false, "phi mismatch at n=", n);
        }
    }
}

TEST_CASE("divisor-sum identity: sum of phi(n/d) over d | n equals n") {
    for (u64 n = 2; n <= 10'000; ++n) {
        u64 sum = 0;
        for (u64 d : divisors(n)) sum += euler_phi(n / d);
        if (sum != n) REQUIRE_MESSAGE(false, "identity fails at n=", n);
    }
}

TEST_CASE("divisors and the proper divisor class domain") {
    CHECK(divisors(12) == std::vector<u64>{1, 2, 3, 4, 6, 12});
    CHECK(proper_divisor_classes_domain(12) == std::vector<u64>{2, 3, 4, 6});
    CHECK(proper_divisor_classes_domain(7).empty());
    CHECK(proper_divisor_classes_domain(4) == std::vector<u64>{2});
    CHECK_THROWS_AS(divisors(1), DomainError);
    CHECK_THROWS_AS(proper_divisor_classes_domain(0), DomainError);
}

TEST_CASE("divisors_with_phi matches the scalar routes") {
    for (u64 n : {12ULL, 27ULL, 360ULL, 9973ULL, 96577ULL}) {
        const auto table = divisors_with_phi(factorize(n));
        const auto plain = divisors(n);
        REQUIRE(table.size() == plain.size());
        for (std::size_t i = 0; i < table.size(); ++i) {
            CHECK(table[i].first == plain[i]);
            CHECK(table[i].second == euler_phi(plain[i]));
        }
    }
}

TEST_CASE("is_squarefree") {
    CHECK(is_squarefree(15));
    CHECK(!is_squarefree(12));
    CHECK(is_squarefree(105));
    CHECK(!is_squarefree(4));
    CHECK(is_squarefree(9973));
}

TEST_CASE("modular arithmetic near the top of the range") {
    const u64 big = kMaxModulus;
    CHECK(mul_mod(big - 1, big - 1, big) == 1);
    CHECK(pow_mod(2, 62, big) == (u64{1} << 62));
    CHECK(pow_mod(2, 63, big) == 1);  // 2^63 = n + 1
}
