#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "cforms/arith.hpp"
#include "cforms/intpoly.hpp"
#include "cforms/modpoly.hpp"
#include "cforms/pgl2.hpp"
#include "oracles.hpp"

using namespace cforms;
using cforms::testing::brute_force_irreducible;
using cforms::testing::sylvester_resultant;

namespace {

IntPolynomial fixture(const std::string& name)
{
    return read_polynomial_file(std::string(CFORMS_FIXTURES_DIR) + "/" + name);
}

IntPolynomial random_poly(std::mt19937_64& rng, int degree, long spread)
{
    std::uniform_int_distribution<long> dist(-spread, spread);
    std::vector<mpz_class> c(static_cast<std::size_t>(degree) + 1);
    for (auto& v : c)
        v = dist(rng);
    while (sgn(c.back()) == 0)
        c.back() = dist(rng);
    return IntPolynomial(std::move(c));
}

} // namespace

TEST_CASE("discriminant of quadratics and depressed cubics")
{
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> dist(-50, 50);
    for (int trial = 0; trial < 25; ++trial) {
        const long b = dist(rng), c = dist(rng);
        const IntPolynomial quad{std::vector<mpz_class>{c, b, 1}};
        CHECK(discriminant(quad) == mpz_class(b) * b - 4 * c);
        const long p = dist(rng), q = dist(rng);
        const IntPolynomial cubic{std::vector<mpz_class>{q, p, 0, 1}};
        CHECK(discriminant(cubic) == -4 * mpz_class(p) * p * p - 27 * mpz_class(q) * q);
    }
}

TEST_CASE("subresultant resultant agrees with Sylvester-Bareiss elimination")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<int> deg(1, 6);
        const IntPolynomial a = random_poly(rng, deg(rng), 20);
        const IntPolynomial b = random_poly(rng, deg(rng), 20);
        CHECK(resultant(a, b) == sylvester_resultant(a, b));
    }
}

TEST_CASE("discriminants of the two degree-12 fixtures")
{
    mpz_class d1 = 1;
    d1 <<= 14;
    mpz_class t;
    mpz_ui_pow_ui(t.get_mpz_t(), 3, 30);
    d1 *= t;
    mpz_ui_pow_ui(t.get_mpz_t(), 11, 9);
    d1 *= t;
    CHECK(discriminant(fixture("f1.txt")) == -d1);

    mpz_class d2 = 1;
    d2 <<= 12;
    mpz_ui_pow_ui(t.get_mpz_t(), 3, 14);
    d2 *= t;
    mpz_ui_pow_ui(t.get_mpz_t(), 11, 9);
    d2 *= t;
    d2 *= mpz_class(17) * 17;
    d2 *= mpz_class(1907473) * 1907473;
    d2 *= mpz_class(2615189) * 2615189;
    CHECK(discriminant(fixture("f2.txt")) == -d2);
}

TEST_CASE("discriminant rejects constants")
{
    CHECK_THROWS_AS(discriminant(IntPolynomial{std::vector<mpz_class>{5}}),
                    std::invalid_argument);
}

TEST_CASE("x^2+1 factors as (x+2)(x+3) mod 5")
{
    const IntPolynomial f{std::vector<mpz_class>{1, 0, 1}};
    const auto factors = factor_mod(f, 5);
    REQUIRE(factors.size() == 2);
    CHECK(factors[0].first == ModPolynomial(5, {2, 1}));
    CHECK(factors[1].first == ModPolynomial(5, {3, 1}));
    CHECK(factors[0].second == 1);
}

TEST_CASE("factorization of the first fixture mod 5")
{
    const auto factors = factor_mod(fixture("f1.txt"), 5);
    REQUIRE(factors.size() == 4);
    std::multiset<int> degrees;
    for (const auto& [g, mult] : factors) {
        CHECK(mult == 1);
        degrees.insert(g.degree());
    }
    CHECK(degrees == std::multiset<int>{1, 1, 5, 5});
    CHECK(factors[0].first == ModPolynomial(5, {2, 1}));
    CHECK(factors[1].first == ModPolynomial(5, {4, 1}));
}

TEST_CASE("random factorizations reproduce the input and are irreducible")
{
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> deg(1, 8);
    const std::int64_t primes[] = {2, 3, 5, 7, 11};
    for (int trial = 0; trial < 50; ++trial) {
        const std::int64_t p = primes[trial % 5];
        IntPolynomial f = random_poly(rng, deg(rng), 40);
        if (mpz_divisible_ui_p(f.leading().get_mpz_t(), static_cast<unsigned long>(p)))
            continue;
        const auto factors = factor_mod(f, p);
        ModPolynomial product(p, {f.leading().get_si() % p});
        for (const auto& [g, mult] : factors) {
            CHECK(brute_force_irreducible(g));
            CHECK(g.is_monic());
            for (int i = 0; i < mult; ++i)
                product = mp_mul(product, g);
        }
        CHECK(product == reduce_mod(f, p));
    }
}

TEST_CASE("repeated factors carry multiplicities")
{
    // (x+1)^2 (x-2)^3
    const IntPolynomial square{std::vector<mpz_class>{1, 2, 1}};
    const IntPolynomial cube{std::vector<mpz_class>{-8, 12, -6, 1}};
    std::vector<mpz_class> prod(6, 0);
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= 3; ++j)
            prod[static_cast<std::size_t>(i + j)] +=
                square.coeff(static_cast<std::size_t>(i)) * cube.coeff(static_cast<std::size_t>(j));
    const auto factors = factor_mod(IntPolynomial{std::move(prod)}, 7);
    REQUIRE(factors.size() == 2);
    CHECK(factors[0].first == ModPolynomial(7, {1, 1}));
    CHECK(factors[0].second == 2);
    CHECK(factors[1].first == ModPolynomial(7, {5, 1}));
    CHECK(factors[1].second == 3);

    // x^5 + 1 = (x+1)^5 mod 5: the p-th power path of the squarefree split
    const IntPolynomial frob{std::vector<mpz_class>{1, 0, 0, 0, 0, 1}};
    const auto fifth = factor_mod(frob, 5);
    REQUIRE(fifth.size() == 1);
    CHECK(fifth[0].first == ModPolynomial(5, {1, 1}));
    CHECK(fifth[0].second == 5);

    // x^4 + x^2 = x^2 (x^2+1) = x^2 (x+1)^2 mod 2
    const IntPolynomial even{std::vector<mpz_class>{0, 0, 1, 0, 1}};
    const auto mod2 = factor_mod(even, 2);
    REQUIRE(mod2.size() == 2);
    CHECK(mod2[0].first == ModPolynomial(2, {0, 1}));
    CHECK(mod2[0].second == 2);
    CHECK(mod2[1].first == ModPolynomial(2, {1, 1}));
    CHECK(mod2[1].second == 2);
}

TEST_CASE("factorization is independent of the splitting seed")
{
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 10; ++trial) {
        const IntPolynomial f = random_poly(rng, 8, 30);
        if (mpz_divisible_ui_p(f.leading().get_mpz_t(), 7))
            continue;
        CHECK(factor_mod(f, 7, 1) == factor_mod(f, 7, 999));
    }
}

TEST_CASE("Frobenius partitions of the fixtures at quoted primes")
{
    const IntPolynomial f1 = fixture("f1.txt");
    const IntPolynomial f2 = fixture("f2.txt");
    CHECK(frobenius_partition(f1, 13).parts == std::vector<int>{12});
    CHECK(frobenius_partition(f2, 71).parts == std::vector<int>{2, 2, 2, 2, 2, 2});
    CHECK(frobenius_partition(f1, 5).parts == std::vector<int>{5, 5, 1, 1});
}

TEST_CASE("partition sums to the degree and factors are simple at good primes")
{
    const IntPolynomial f1 = fixture("f1.txt");
    for (std::int64_t p : {5, 7, 13, 19, 97})
        CHECK(frobenius_partition(f1, p).degree() == 12);
}

TEST_CASE("bad primes are rejected as not good")
{
    const IntPolynomial f1 = fixture("f1.txt");
    for (std::int64_t p : {2, 3, 11})
        CHECK_THROWS_WITH_AS(frobenius_partition(f1, p),
                             doctest::Contains("not a good prime"), std::domain_error);
    // 17 divides the polynomial discriminant of the second fixture (but not
    // the field discriminant); the conservative test rejects it
    CHECK_THROWS_WITH_AS(frobenius_partition(fixture("f2.txt"), 17),
                         doctest::Contains("not a good prime"), std::domain_error);
}

TEST_CASE("partition parity")
{
    CHECK(partition_parity({{12}}) == -1);
    CHECK(partition_parity({std::vector<int>(12, 1)}) == 1);
    CHECK(partition_parity({{6, 6}}) == 1);
}

TEST_CASE("parity of the first fixture follows the quadratic residues mod 11")
{
    const IntPolynomial f1 = fixture("f1.txt");
    const std::set<std::int64_t> residues = {1, 3, 4, 5, 9};
    int checked = 0;
    for (std::int64_t p : primes_up_to(700)) {
        if (p == 2 || p == 3 || p == 11)
            continue;
        const int parity = partition_parity(frobenius_partition(f1, p));
        CHECK(parity == (residues.count(p % 11) ? 1 : -1));
        if (++checked == 100)
            break;
    }
    CHECK(checked == 100);
}

TEST_CASE("discriminant is compatible with coefficientwise reduction")
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        std::uniform_int_distribution<int> deg(3, 4);
        const IntPolynomial f = random_poly(rng, deg(rng), 500);
        for (std::int64_t p : {5, 7, 13}) {
            if (mpz_divisible_ui_p(f.leading().get_mpz_t(), static_cast<unsigned long>(p)))
                continue;
            std::vector<mpz_class> reduced;
            for (const auto& c : f.coeffs())
                reduced.emplace_back(mpz_fdiv_ui(c.get_mpz_t(), static_cast<unsigned long>(p)));
            const IntPolynomial g{std::move(reduced)};
            const std::int64_t lhs = mpz_fdiv_ui(discriminant(f).get_mpz_t(),
                                                 static_cast<unsigned long>(p));
            const std::int64_t rhs = mpz_fdiv_ui(discriminant(g).get_mpz_t(),
                                                 static_cast<unsigned long>(p));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("even contraction")
{
    const IntPolynomial quartic{std::vector<mpz_class>{1, 0, 0, 0, 1}};
    CHECK(even_contraction(quartic) == IntPolynomial{std::vector<mpz_class>{1, 0, 1}});

    const IntPolynomial odd{std::vector<mpz_class>{0, 1, 0, 1}};
    CHECK_THROWS_WITH_AS(even_contraction(odd), doctest::Contains("indices 1 and 3"),
                         std::domain_error);

    const IntPolynomial lift = fixture("ftilde1.txt");
    CHECK(lift.degree() == 24);
    CHECK(even_contraction(lift).degree() == 12);
}

TEST_CASE("polynomial text format round-trips and skips comments")
{
    const IntPolynomial f1 = fixture("f1.txt");
    std::ostringstream out;
    out << "# a comment\n\n";
    write_polynomial(out, f1);
    std::istringstream in(out.str());
    CHECK(read_polynomial(in) == f1);

    std::istringstream bad("# only a comment\n");
    CHECK_THROWS_AS(read_polynomial(bad), std::runtime_error);
    std::istringstream garbage("1 2 x\n");
    CHECK_THROWS_AS(read_polynomial(garbage), std::runtime_error);
}

TEST_CASE("the degree-18 fixture factors its discriminant as D c^2")
{
    const IntPolynomial f = fixture("pgl2_f17_n30.txt");
    CHECK(f.degree() == 18);
    // field discriminant 2^16 3^16 5^16 17^17; the polynomial discriminant is
    // D times a perfect square
    mpz_class field_disc = 1, t;
    for (unsigned long base : {2, 3, 5}) {
        mpz_ui_pow_ui(t.get_mpz_t(), base, 16);
        field_disc *= t;
    }
    mpz_ui_pow_ui(t.get_mpz_t(), 17, 17);
    field_disc *= t;

    const mpz_class poly_disc = discriminant(f);
    REQUIRE(poly_disc % field_disc == 0);
    const mpz_class cofactor = poly_disc / field_disc;
    CHECK(mpz_perfect_square_p(cofactor.get_mpz_t()) != 0);
}

TEST_CASE("partitions of the degree-18 fixture land in the ell=17 class table")
{
    const IntPolynomial f = fixture("pgl2_f17_n30.txt");
    std::set<std::vector<int>> allowed;
    for (const auto& row : class_table(17))
        allowed.insert(row.partition.parts);
    const mpz_class disc = discriminant(f);
    int checked = 0;
    for (std::int64_t p : primes_up_to(60)) {
        if (mpz_divisible_ui_p(disc.get_mpz_t(), static_cast<unsigned long>(p)))
            continue;
        CHECK(allowed.count(frobenius_partition(f, p).parts) == 1);
        ++checked;
    }
    CHECK(checked >= 5);
}

TEST_CASE("the two quartic fixtures parse")
{
    for (const char* name : {"quartic_ell11.txt", "quartic_ell19.txt"}) {
        const IntPolynomial q = fixture(name);
        CHECK(q.degree() == 4);
        CHECK(discriminant(q) != 0);
    }
}

TEST_CASE("partition display uses exponent notation")
{
    CHECK(partition_string({{5, 5, 1, 1}}) == "5^2 1^2");
    CHECK(partition_string({{12}}) == "12");
    CHECK(partition_string({{11, 1}}) == "11 1");
    CHECK(partition_string({std::vector<int>(12, 1)}) == "1^12");
}
