#include "cforms/curves.hpp"

#include <stdexcept>

#include "cforms/arith.hpp"

namespace cforms {

mpz_class curve_disc(const ShortWeierstrass& e)
{
    return -4 * e.a * e.a * e.a - 27 * e.b * e.b;
}

long ap_naive(const ShortWeierstrass& e, std::int64_t p)
{
    if (!is_prime(p) || p == 2)
        throw std::invalid_argument("ap_naive: p must be an odd prime");
    const mpz_class d = curve_disc(e);
    if (mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(p)))
        throw std::domain_error("ap_naive: bad reduction at " + std::to_string(p));

    const std::int64_t a = static_cast<std::int64_t>(
        mpz_fdiv_ui(e.a.get_mpz_t(), static_cast<unsigned long>(p)));
    const std::int64_t b = static_cast<std::int64_t>(
        mpz_fdiv_ui(e.b.get_mpz_t(), static_cast<unsigned long>(p)));

    std::vector<signed char> chi(static_cast<std::size_t>(p), -1);
    chi[0] = 0;
    for (std::int64_t z = 1; z < p; ++z)
        chi[static_cast<std::size_t>(mul_mod(z, z, p))] = 1;

    long sum = 0;
    for (std::int64_t x = 0; x < p; ++x) {
        const std::int64_t v =
            mod_reduce(mul_mod(mul_mod(x, x, p), x, p) + mul_mod(a, x, p) + b, p);
        sum += chi[static_cast<std::size_t>(v)];
    }
    return -sum;
}

IntPolynomial atkin_lift(const ShortWeierstrass& e)
{
    const mpz_class d = curve_disc(e);
    if (sgn(d) == 0)
        throw std::invalid_argument("atkin_lift: singular curve");
    const mpz_class d2 = d * d;
    const mpz_class d3 = d2 * d;
    const mpz_class d5 = d2 * d3;
    const mpz_class d10 = d5 * d5;

    std::vector<mpz_class> c(25);
    c[24] = d10;
    c[12] = -15840 * d5;
    c[8] = -337920 * e.a * d3;
    c[6] = -2280960 * e.b * d2;
    c[4] = 811008 * e.a * e.a * d;
    c[2] = 663552 * e.a * e.b;
    c[0] = -2816;
    return IntPolynomial(std::move(c));
}

const std::vector<ChartCurve>& chart_curves()
{
    static const std::vector<ChartCurve> chart = {
        {CompanionType::T1, 54, {21, -26}},
        {CompanionType::T1, 182, {13861, 426358}},
        {CompanionType::T2, 14, {-675, 13662}},
        {CompanionType::T2, 20, {-108, 297}},
        {CompanionType::T2, 30, {1917, 99198}},
        {CompanionType::W2, 15, {-27, 8694}},
        {CompanionType::W2, 24, {54, 189}},
        {CompanionType::W2, 42, {-5211, 319734}},
        {CompanionType::W2, 84, {-108, -1755}},
        {CompanionType::W2, 96, {-189, -540}},
    };
    return chart;
}

} // namespace cforms
