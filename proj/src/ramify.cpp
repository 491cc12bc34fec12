#include "cforms/ramify.hpp"

#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "cforms/arith.hpp"

namespace cforms {

std::string to_string(CompanionType t)
{
    switch (t) {
    case CompanionType::T1: return "1T";
    case CompanionType::T2: return "2T";
    case CompanionType::W2: return "2W";
    default: return "unknown";
    }
}

CompanionType companion_type_from_string(const std::string& s)
{
    if (s == "1T") return CompanionType::T1;
    if (s == "2T") return CompanionType::T2;
    if (s == "2W") return CompanionType::W2;
    if (s == "unknown") return CompanionType::Unknown;
    throw std::invalid_argument("companion type must be one of 1T, 2T, 2W, unknown");
}

void RamProfile::validate() const
{
    std::set<std::int64_t> seen;
    for (const auto& [p, e] : contributions) {
        if (!is_prime(p))
            throw std::invalid_argument("ramification profile: " + std::to_string(p)
                                        + " is not prime");
        if (!seen.insert(p).second)
            throw std::invalid_argument("ramification profile: repeated prime "
                                        + std::to_string(p));
        if (e < 0 || e >= 2)
            throw std::invalid_argument("ramification profile: exponent for "
                                        + std::to_string(p) + " outside [0,2)");
    }
}

double evaluate(const RamProfile& profile)
{
    profile.validate();
    double log_sum = 0.0;
    for (const auto& [p, e] : profile.contributions)
        log_sum += e.get_d() * std::log(static_cast<double>(p));
    return std::exp(log_sum);
}

double root_disc_from_D(const mpz_class& D, int n)
{
    if (sgn(D) == 0)
        throw std::invalid_argument("root_disc_from_D: zero discriminant");
    if (n < 1)
        throw std::invalid_argument("root_disc_from_D: degree must be positive");
    signed long exp2;
    const double mant = mpz_get_d_2exp(&exp2, D.get_mpz_t());
    const double log_abs = std::log(std::fabs(mant)) + static_cast<double>(exp2) * std::log(2.0);
    return std::exp(log_abs / n);
}

mpq_class tame_grd_exponent(long t)
{
    if (t < 1)
        throw std::invalid_argument("tame_grd_exponent: order must be >= 1");
    mpq_class e(t - 1, t);
    e.canonicalize();
    return e;
}

namespace {

mpq_class ratio(long num, long den)
{
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

} // namespace

ContribPair level_prime_contribution(std::int64_t p, int ord, std::int64_t ell, int e)
{
    if (!is_prime(p) || !is_prime(ell) || p == ell)
        throw std::invalid_argument("level_prime_contribution: p and ell must be distinct primes");
    if (ord == 1)
        return {ratio(ell - 1, ell + 1), ratio(ell - 1, ell)};
    if (ord == 2) {
        if (e != 3 && e != 4 && e != 6)
            throw std::invalid_argument("level_prime_contribution: tame order e must be 3, 4 or 6");
        if (p == 2 && e != 3)
            throw std::invalid_argument("level_prime_contribution: p=2 forces e=3");
        if (p == 3 && e != 4)
            throw std::invalid_argument("level_prime_contribution: p=3 forces e=4");
        const bool div_minus = (ell - 1) % e == 0;
        const bool div_plus = (ell + 1) % e == 0;
        if (div_minus == div_plus)
            throw std::invalid_argument(
                "level_prime_contribution: e must divide exactly one of ell-1, ell+1");
        const mpq_class grd = ratio(e - 1, e);
        if (div_minus)
            return {ratio(static_cast<long>(e - 1) * (ell - 1), static_cast<long>(e) * (ell + 1)),
                    grd};
        return {grd, grd};
    }
    throw std::invalid_argument("wild level prime out of scope: supply exponents directly");
}

ContribPair ell_contribution(std::int64_t ell, CompanionType type, int k)
{
    if (!is_prime(ell) || ell < 3)
        throw std::invalid_argument("ell_contribution: ell must be an odd prime");
    switch (type) {
    case CompanionType::T1: {
        const long d = std::gcd(static_cast<long>(k - 1), static_cast<long>(ell - 1));
        const long e = (ell - 1) / d;
        return {ratio((e - 1) * (ell - 1), e * (ell + 1)), ratio(e - 1, e)};
    }
    case CompanionType::T2: {
        const long d = std::gcd(static_cast<long>(k - 1), static_cast<long>(ell + 1));
        const long e = (ell + 1) / d;
        return {ratio(e - 1, e), ratio(e - 1, e)};
    }
    case CompanionType::W2: {
        // weight-free
        mpq_class grd = 1 + ratio(ell - 2, ell * (ell - 1));
        return {ratio(ell, ell + 1), grd};
    }
    default:
        throw std::invalid_argument("ell_contribution: type must be 1T, 2T or 2W");
    }
}

RamanujanPair ramanujan_profile(std::int64_t ell)
{
    if (!is_prime(ell) || ell <= 7)
        throw std::invalid_argument("ramanujan_profile: ell must be a prime > 7");
    const double log_ell = std::log(static_cast<double>(ell));
    const double delta_exp = static_cast<double>(ell + 10) / static_cast<double>(ell + 1);
    const double grd_exp = (static_cast<double>(ell) * ell + 10.0 * ell - 12.0)
                         / (static_cast<double>(ell) * ell - ell);
    return {std::exp(delta_exp * log_ell), std::exp(grd_exp * log_ell)};
}

} // namespace cforms
