#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "cforms/arith.hpp"
#include "cforms/ramify.hpp"

using namespace cforms;

namespace {

mpz_class power(unsigned long base, unsigned long exp)
{
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), base, exp);
    return out;
}

mpq_class frac(long num, long den)
{
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

bool near(double x, double reference)
{
    return std::fabs(x - reference) <= 0.01;
}

} // namespace

TEST_CASE("profile evaluation of the two quoted Galois root discriminants")
{
    RamProfile first;
    first.contributions = {{2, frac(7, 6)}, {3, frac(10, 11)}, {11, frac(9, 10)}};
    CHECK(near(evaluate(first), 52.75));

    RamProfile second;
    second.contributions = {{2, frac(10, 11)}, {3, frac(7, 6)}, {11, frac(9, 10)}};
    CHECK(near(evaluate(second), 58.55));

    CHECK(evaluate(RamProfile{}) == 1.0);
}

TEST_CASE("profile validation")
{
    RamProfile repeated;
    repeated.contributions = {{2, frac(1, 2)}, {2, frac(1, 3)}};
    CHECK_THROWS_AS(evaluate(repeated), std::invalid_argument);

    RamProfile composite;
    composite.contributions = {{6, frac(1, 2)}};
    CHECK_THROWS_AS(evaluate(composite), std::invalid_argument);

    RamProfile out_of_range;
    out_of_range.contributions = {{2, frac(2, 1)}};
    CHECK_THROWS_AS(evaluate(out_of_range), std::invalid_argument);
}

TEST_CASE("root discriminant from |D|^(1/n)")
{
    const mpz_class d1 = -(mpz_class(1) << 14) * power(3, 10) * power(11, 9);
    CHECK(near(root_disc_from_D(d1, 12), 33.87));

    const mpz_class d2 = -(mpz_class(1) << 10) * power(3, 14) * power(11, 9);
    CHECK(near(root_disc_from_D(d2, 12), 38.77));

    CHECK(root_disc_from_D(1, 5) == 1.0);
    CHECK_THROWS_AS(root_disc_from_D(0, 5), std::invalid_argument);
}

TEST_CASE("tame exponents")
{
    CHECK(tame_grd_exponent(10) == frac(9, 10));
    CHECK(tame_grd_exponent(1) == 0);
    CHECK(tame_grd_exponent(11) == frac(10, 11));
    CHECK_THROWS_AS(tame_grd_exponent(0), std::invalid_argument);
}

TEST_CASE("level prime contributions")
{
    const ContribPair exact = level_prime_contribution(5, 1, 13);
    CHECK(exact.delta_exp == frac(12, 14));
    CHECK(exact.grd_exp == frac(12, 13));

    const ContribPair at29 = level_prime_contribution(2, 1, 29);
    CHECK(at29.delta_exp == frac(28, 30));

    const ContribPair square = level_prime_contribution(2, 2, 11, 3);
    CHECK(square.grd_exp == frac(2, 3));
    // e = 3 divides ell+1 = 12, so both exponents coincide
    CHECK(square.delta_exp == frac(2, 3));

    // e dividing ell-1: the root-discriminant exponent is smaller
    const ContribPair split = level_prime_contribution(5, 2, 13, 6);
    CHECK(split.delta_exp == frac(5 * 12, 6 * 14));
    CHECK(split.grd_exp == frac(5, 6));

    CHECK_THROWS_WITH_AS(level_prime_contribution(5, 3, 13),
                         doctest::Contains("wild level prime out of scope"),
                         std::invalid_argument);
    CHECK_THROWS_AS(level_prime_contribution(2, 2, 11, 4), std::invalid_argument);
    CHECK_THROWS_AS(level_prime_contribution(3, 2, 11, 3), std::invalid_argument);
    CHECK_THROWS_AS(level_prime_contribution(5, 2, 13, 5), std::invalid_argument);
    CHECK_THROWS_AS(level_prime_contribution(13, 1, 13), std::invalid_argument);
}

TEST_CASE("contributions of ell by type")
{
    const ContribPair t2 = ell_contribution(13, CompanionType::T2, 6);
    CHECK(t2.delta_exp == frac(13, 14));
    CHECK(t2.grd_exp == frac(13, 14));

    // d = gcd(7, 14) = 7, e = 2
    const ContribPair small_e = ell_contribution(13, CompanionType::T2, 8);
    CHECK(small_e.delta_exp == frac(1, 2));
    CHECK(small_e.grd_exp == frac(1, 2));

    const ContribPair t1 = ell_contribution(11, CompanionType::T1, 4);
    CHECK(t1.grd_exp == frac(9, 10));
    CHECK(t1.delta_exp == frac(9 * 10, 10 * 12));

    const ContribPair w2 = ell_contribution(11, CompanionType::W2, 2);
    CHECK(w2.delta_exp == frac(11, 12));
    CHECK(w2.grd_exp == 1 + frac(9, 110));

    CHECK_THROWS_AS(ell_contribution(11, CompanionType::Unknown, 4), std::invalid_argument);
}

TEST_CASE("the inertia degree d is weight-symmetric and odd")
{
    for (std::int64_t ell : primes_up_to(43)) {
        if (ell < 11)
            continue;
        for (int t : {1, 2}) {
            for (int k = 2; k <= ell + 1; k += 2) {
                const long kp = ell - 1 + 2 * t - k;
                if (kp < k || kp > ell + 1)
                    continue;
                const long modulus = (t == 1) ? ell - 1 : ell + 1;
                const long d = std::gcd(static_cast<long>(k - 1), modulus);
                const long d_from_kp = std::gcd(kp - 1, modulus);
                CHECK(d == d_from_kp);
                CHECK(d % 2 == 1);
                const CompanionType type = t == 1 ? CompanionType::T1 : CompanionType::T2;
                const ContribPair from_k = ell_contribution(ell, type, k);
                const ContribPair from_kp = ell_contribution(ell, type, static_cast<int>(kp));
                CHECK(from_k.delta_exp == from_kp.delta_exp);
                CHECK(from_k.grd_exp == from_kp.grd_exp);
            }
        }
    }
}

TEST_CASE("root-discriminant exponent never exceeds the Galois one")
{
    for (std::int64_t ell : {11, 13, 19, 29}) {
        for (int k = 2; k <= ell + 1; k += 2) {
            for (CompanionType type : {CompanionType::T1, CompanionType::T2}) {
                const ContribPair c = ell_contribution(ell, type, k);
                CHECK(c.delta_exp <= c.grd_exp);
            }
        }
        const ContribPair w = ell_contribution(ell, CompanionType::W2, 2);
        CHECK(w.delta_exp <= w.grd_exp);
        const ContribPair lvl = level_prime_contribution(2, 1, ell);
        CHECK(lvl.delta_exp <= lvl.grd_exp);
    }
}

TEST_CASE("evaluation is monotone in the exponent")
{
    double prev = 0.0;
    for (int num = 1; num <= 9; ++num) {
        RamProfile profile;
        profile.contributions = {{7, frac(num, 10)}};
        const double value = evaluate(profile);
        CHECK(value > prev);
        prev = value;
    }
}

TEST_CASE("level-one comparison values")
{
    const RamanujanPair r11 = ramanujan_profile(11);
    CHECK(near(r11.delta, 66.44));
    CHECK(near(r11.grd, 118.39));

    const RamanujanPair r29 = ramanujan_profile(29);
    CHECK(near(r29.delta, 79.64));
    CHECK(near(r29.grd, 103.59));

    const RamanujanPair r13 = ramanujan_profile(13);
    CHECK(near(r13.delta, 67.62));
    CHECK(near(r13.grd, 112.04));

    CHECK_THROWS_AS(ramanujan_profile(7), std::invalid_argument);
}

TEST_CASE("root discriminant of the degree-18 fixture's field")
{
    mpz_class d = 1, t;
    for (unsigned long base : {2, 3, 5}) {
        mpz_ui_pow_ui(t.get_mpz_t(), base, 16);
        d *= t;
    }
    mpz_ui_pow_ui(t.get_mpz_t(), 17, 17);
    d *= t;
    CHECK(std::fabs(root_disc_from_D(d, 18) - 298.6) <= 0.05);
}

TEST_CASE("Galois root discriminants of the two degenerate pairs")
{
    // (ell, N) = (11, 8): weights (4,10), d = gcd(3,12) = 3; wild 2-adic part 7/6
    const ContribPair at11 = ell_contribution(11, CompanionType::T2, 4);
    CHECK(at11.grd_exp == frac(3, 4));
    RamProfile first;
    first.contributions = {{2, frac(7, 6)}, {11, at11.grd_exp}};
    CHECK(near(evaluate(first), 13.56));

    // (ell, N) = (19, 4): weights (6,16), d = gcd(5,20) = 5; tame order 3 at 2
    const ContribPair at19 = ell_contribution(19, CompanionType::T2, 6);
    CHECK(at19.grd_exp == frac(3, 4));
    const ContribPair at2 = level_prime_contribution(2, 2, 19, 3);
    CHECK(at2.grd_exp == frac(2, 3));
    RamProfile second;
    second.contributions = {{2, at2.grd_exp}, {19, at19.grd_exp}};
    CHECK(near(evaluate(second), 14.45));
}

TEST_CASE("the reference lower-bound constant")
{
    CHECK(kGrdAsymptoticLowerBound == 44.76);
}

TEST_CASE("type labels round-trip through strings")
{
    for (CompanionType t : {CompanionType::T1, CompanionType::T2, CompanionType::W2,
                            CompanionType::Unknown})
        CHECK(companion_type_from_string(to_string(t)) == t);
    CHECK_THROWS_AS(companion_type_from_string("3T"), std::invalid_argument);
}
