#include "cforms/arith.hpp"

#include <numeric>
#include <stdexcept>

namespace cforms {

std::int64_t mod_reduce(std::int64_t a, std::int64_t m)
{
    std::int64_t r = a % m;
    if (r < 0)
        r += m;
    return r;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m)
{
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % m);
}

std::int64_t pow_mod(std::int64_t base, std::uint64_t exp, std::int64_t m)
{
    std::int64_t result = 1 % m;
    std::int64_t b = mod_reduce(base, m);
    while (exp) {
        if (exp & 1)
            result = mul_mod(result, b, m);
        b = mul_mod(b, b, m);
        exp >>= 1;
    }
    return result;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t m)
{
    // extended Euclid on (a mod m, m)
    std::int64_t r0 = mod_reduce(a, m), r1 = m;
    std::int64_t s0 = 1, s1 = 0;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        std::int64_t s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1)
        throw std::domain_error("inv_mod: argument not invertible");
    return mod_reduce(s0, m);
}

bool is_prime(std::int64_t n)
{
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

std::vector<std::int64_t> primes_up_to(std::int64_t bound)
{
    std::vector<std::int64_t> out;
    if (bound < 2)
        return out;
    std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
    for (std::int64_t p = 2; p <= bound; ++p) {
        if (composite[static_cast<std::size_t>(p)])
            continue;
        out.push_back(p);
        for (std::int64_t q = p * p; q <= bound; q += p)
            composite[static_cast<std::size_t>(q)] = true;
    }
    return out;
}

} // namespace cforms
