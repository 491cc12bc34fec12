// Independent reference implementations used only by the tests. Each one
// takes a deliberately different route from the library code it checks.
#ifndef CFORMS_TEST_ORACLES_HPP
#define CFORMS_TEST_ORACLES_HPP

#include <cstdint>
#include <numeric>
#include <vector>

#include <gmpxx.h>

#include "cforms/intpoly.hpp"
#include "cforms/modpoly.hpp"
#include "cforms/qseries.hpp"

namespace cforms::testing {

// Schoolbook convolution, plain operator arithmetic.
inline QSeries naive_convolution(const QSeries& a, const QSeries& b)
{
    const std::size_t m = std::min(a.precision(), b.precision());
    QSeries out(m);
    for (std::size_t n = 0; n <= m; ++n) {
        mpz_class acc = 0;
        for (std::size_t i = 0; i <= n; ++i)
            acc += a[i] * b[n - i];
        out.at(n) = acc;
    }
    return out;
}

// q^{sum/24} prod_t prod_{n=1..M/t} (1 - q^{tn}) by multiplying the binomial
// factors one at a time.
inline QSeries naive_eta_product(const std::vector<int>& ts, std::size_t m)
{
    long sum = 0;
    for (int t : ts)
        sum += t;
    QSeries acc(m);
    const std::size_t lead = static_cast<std::size_t>(sum / 24);
    if (lead > m)
        return acc;
    acc.at(lead) = 1;
    for (int t : ts) {
        for (std::size_t n = 1; n * static_cast<std::size_t>(t) <= m; ++n) {
            QSeries binom(m);
            binom.at(0) = 1;
            binom.at(n * static_cast<std::size_t>(t)) = -1;
            acc = naive_convolution(acc, binom);
        }
    }
    return acc;
}

// #{(x,y) in Z^2 : x^2 + xy + y^2 = n} by exhaustive search over a box that
// certainly contains all solutions (|x|,|y| <= n+1).
inline long hex_form_count(long n)
{
    long count = 0;
    for (long x = -(n + 1); x <= n + 1; ++x)
        for (long y = -(n + 1); y <= n + 1; ++y)
            if (x * x + x * y + y * y == n)
                ++count;
    return count;
}

// Resultant via the Sylvester matrix and fraction-free (Bareiss) elimination.
inline mpz_class sylvester_resultant(const IntPolynomial& a, const IntPolynomial& b)
{
    const int m = a.degree(), n = b.degree();
    if (m < 0 || n < 0)
        return 0;
    const int size = m + n;
    if (size == 0)
        return 1;
    std::vector<std::vector<mpz_class>> mat(static_cast<std::size_t>(size),
                                            std::vector<mpz_class>(static_cast<std::size_t>(size)));
    for (int row = 0; row < n; ++row)
        for (int j = 0; j <= m; ++j)
            mat[row][row + j] = a.coeff(static_cast<std::size_t>(m - j));
    for (int row = 0; row < m; ++row)
        for (int j = 0; j <= n; ++j)
            mat[n + row][row + j] = b.coeff(static_cast<std::size_t>(n - j));

    mpz_class sign = 1, prev = 1;
    for (int k = 0; k < size - 1; ++k) {
        if (sgn(mat[k][k]) == 0) {
            int pivot = -1;
            for (int r = k + 1; r < size; ++r)
                if (sgn(mat[r][k]) != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0)
                return 0;
            std::swap(mat[static_cast<std::size_t>(k)], mat[static_cast<std::size_t>(pivot)]);
            sign = -sign;
        }
        for (int i = k + 1; i < size; ++i)
            for (int j = k + 1; j < size; ++j) {
                mpz_class v = mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                mat[i][j] = v;
            }
        prev = mat[k][k];
    }
    return sign * mat[static_cast<std::size_t>(size - 1)][static_cast<std::size_t>(size - 1)];
}

// Number of points of P^1(Z/N): primitive pairs up to unit scaling.
inline long projective_line_count(long n)
{
    long primitive = 0, units = 0;
    for (long a = 0; a < n; ++a) {
        if (std::gcd(a, n) == 1)
            ++units;
        for (long b = 0; b < n; ++b)
            if (std::gcd(std::gcd(a, b), n) == 1)
                ++primitive;
    }
    return primitive / units;
}

// Irreducibility by trial division over every monic polynomial of degree
// 1 .. deg/2.
inline bool brute_force_irreducible(const ModPolynomial& f)
{
    const std::int64_t p = f.modulus();
    if (f.degree() < 1)
        return false;
    for (int d = 1; 2 * d <= f.degree(); ++d) {
        std::vector<std::int64_t> c(static_cast<std::size_t>(d) + 1, 0);
        c.back() = 1;
        while (true) {
            const ModPolynomial divisor(p, std::vector<std::int64_t>(c));
            if (mp_mod(f, divisor).is_zero())
                return false;
            int i = 0;
            while (i < d && ++c[static_cast<std::size_t>(i)] == p) {
                c[static_cast<std::size_t>(i)] = 0;
                ++i;
            }
            if (i == d)
                break;
        }
    }
    return true;
}

} // namespace cforms::testing

#endif
