#include "zdg/numtheory.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "zdg/errors.hpp"

namespace zdg {

u64 mul_mod(u64 a, u64 b, u64 m) {
    return static_cast<u64>((u128{a} * b) % m);
}

u64 pow_mod(u64 a, u64 e, u64 m) {
    if (m == 1) return 0;
    u64 r = 1;
    a %= m;
    while (e > 0) {
        if (e & 1) r = mul_mod(r, a, m);
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                  29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    if (n < 41 * 41) return true;

    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set is deterministic for all n < 2^64.
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                  29ULL, 31ULL, 37ULL}) {
        u64 x = pow_mod(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

// Brent's cycle-finding variant of Pollard's rho. n must be composite, odd,
// and free of factors below the trial-division bound. Deterministic: the
// polynomial increment c is swept 1, 2, 3, ... instead of drawn at random.
u64 pollard_brent(u64 n) {
    for (u64 c = 1;; ++c) {
        const auto step = [n, c](u64 v) {
            u64 w = mul_mod(v, v, n) + c;
            return w < n ? w : w - n;
        };
        u64 x = 2, y = 2, d = 1;
        u64 q = 1, ys = 0;
        const u64 batch = 128;
        u64 r = 1;
        while (d == 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = step(y);
            for (u64 k = 0; k < r && d == 1; k += batch) {
                ys = y;
                const u64 lim = std::min(batch, r - k);
                for (u64 i = 0; i < lim; ++i) {
                    y = step(y);
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                d = std::gcd(q, n);
            }
            r <<= 1;
        }
        if (d == n) {
            // Batched gcd overshot; backtrack one step at a time.
            d = 1;
            while (d == 1) {
                ys = step(ys);
                d = std::gcd(x > ys ? x - ys : ys - x, n);
            }
        }
        if (d != n) return d;
        // Cycle collapsed for this c; retry with the next increment.
    }
}

void factor_rec(u64 n, std::map<u64, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    // Perfect powers and semiprimes both fall out of a single split.
    u64 d = pollard_brent(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

Factorization factorize(u64 n) {
    if (n < 2) throw DomainError("factorize: n must be >= 2");
    if (n > kMaxModulus) throw DomainError("factorize: n exceeds 2^63 - 1");

    Factorization f;
    f.n = n;
    u64 m = n;
    std::map<u64, unsigned> acc;

    for (u64 p : {2ULL, 3ULL, 5ULL}) {
        while (m % p == 0) {
            m /= p;
            ++acc[p];
        }
    }
    // Wheel mod 30 over the remaining candidates below 10^6.
    static constexpr unsigned steps[8] = {4, 2, 4, 2, 4, 6, 2, 6};
    u64 d = 7;
    unsigned idx = 0;
    while (d < 1'000'000 && d * d <= m) {
        while (m % d == 0) {
            m /= d;
            ++acc[d];
        }
        d += steps[idx];
        idx = (idx + 1) & 7;
    }
    if (m > 1) {
        if (d * d > m) {
            ++acc[m];  // cofactor below the wheel bound squared is prime
        } else {
            factor_rec(m, acc);
        }
    }

    f.factors.reserve(acc.size());
    for (auto [p, e] : acc) f.factors.push_back({p, e});
    return f;
}

u64 Factorization::divisor_count() const {
    u64 t = 1;
    for (const auto& pp : factors) t *= pp.exponent + 1;
    return t;
}

u64 euler_phi(const Factorization& f) {
    u64 phi = 1;
    for (const auto& [p, e] : f.factors) {
        u64 pe = 1;
        for (unsigned i = 1; i < e; ++i) pe *= p;
        phi *= pe * (p - 1);
    }
    return phi;
}

u64 euler_phi(u64 m) {
    if (m < 1) throw DomainError("euler_phi: m must be >= 1");
    if (m == 1) return 1;
    return euler_phi(factorize(m));
}

std::vector<u64> divisors(const Factorization& f) {
    std::vector<u64> divs{1};
    for (const auto& [p, e] : f.factors) {
        const std::size_t base = divs.size();
        u64 pe = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pe *= p;
            for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pe);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::vector<u64> divisors(u64 n) {
    if (n < 2) throw DomainError("divisors: n must be >= 2");
    return divisors(factorize(n));
}

std::vector<std::pair<u64, u64>> divisors_with_phi(const Factorization& f) {
    std::vector<std::pair<u64, u64>> out{{1, 1}};
    for (const auto& [p, e] : f.factors) {
        const std::size_t base = out.size();
        u64 pe = 1, phi_pe = 1;
        for (unsigned i = 1; i <= e; ++i) {
            phi_pe = i == 1 ? p - 1 : phi_pe * p;
            pe *= p;
            for (std::size_t j = 0; j < base; ++j) {
                out.push_back({out[j].first * pe, out[j].second * phi_pe});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<u64> proper_divisor_classes_domain(u64 n) {
    std::vector<u64> all = divisors(n);
    return {all.begin() + 1, all.end() - 1};
}

bool is_squarefree(u64 n) {
    const Factorization f = factorize(n);
    return std::all_of(f.factors.begin(), f.factors.end(),
                       [](const PrimePower& pp) { return pp.exponent == 1; });
}

}  // namespace zdg
