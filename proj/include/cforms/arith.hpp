#ifndef CFORMS_ARITH_HPP
#define CFORMS_ARITH_HPP

#include <cstdint>
#include <vector>

namespace cforms {

// Default seed of the randomized equal-degree splitting; fixed so that runs
// are reproducible unless the caller injects entropy.
inline constexpr std::uint64_t kFactorDefaultSeed = 0x5eedc0de;

// Reduce into [0, m). Works for negative a.
std::int64_t mod_reduce(std::int64_t a, std::int64_t m);

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m);
std::int64_t pow_mod(std::int64_t base, std::uint64_t exp, std::int64_t m);

// Inverse of a modulo m; throws std::domain_error if gcd(a,m) != 1.
std::int64_t inv_mod(std::int64_t a, std::int64_t m);

bool is_prime(std::int64_t n);
std::vector<std::int64_t> primes_up_to(std::int64_t bound);

} // namespace cforms

#endif
