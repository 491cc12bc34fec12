#include "cforms/qseries.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "cforms/arith.hpp"

namespace cforms {

QSeries::QSeries(std::vector<mpz_class> coeffs)
    : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty())
        throw std::invalid_argument("QSeries: empty coefficient vector");
}

QSeriesModL::QSeriesModL(std::size_t precision, std::int64_t ell)
    : ell_(ell), coeffs_(precision + 1)
{
    if (ell < 3 || !is_prime(ell))
        throw std::invalid_argument("QSeriesModL: modulus must be an odd prime");
}

QSeriesModL::QSeriesModL(std::vector<std::int64_t> coeffs, std::int64_t ell)
    : ell_(ell), coeffs_(std::move(coeffs))
{
    if (ell < 3 || !is_prime(ell))
        throw std::invalid_argument("QSeriesModL: modulus must be an odd prime");
    if (coeffs_.empty())
        throw std::invalid_argument("QSeriesModL: empty coefficient vector");
    for (auto& c : coeffs_)
        c = mod_reduce(c, ell_);
}

QSeries series_add(const QSeries& a, const QSeries& b)
{
    const std::size_t m = std::min(a.precision(), b.precision());
    QSeries out(m);
    for (std::size_t n = 0; n <= m; ++n)
        out.at(n) = a[n] + b[n];
    return out;
}

QSeries series_sub(const QSeries& a, const QSeries& b)
{
    const std::size_t m = std::min(a.precision(), b.precision());
    QSeries out(m);
    for (std::size_t n = 0; n <= m; ++n)
        out.at(n) = a[n] - b[n];
    return out;
}

QSeries series_mul(const QSeries& a, const QSeries& b)
{
    const std::size_t m = std::min(a.precision(), b.precision());
    QSeries out(m);
    for (std::size_t i = 0; i <= m; ++i) {
        if (sgn(a[i]) == 0)
            continue;
        const mpz_srcptr ai = a[i].get_mpz_t();
        for (std::size_t j = 0; i + j <= m; ++j) {
            if (sgn(b[j]) == 0)
                continue;
            mpz_addmul(out.at(i + j).get_mpz_t(), ai, b[j].get_mpz_t());
        }
    }
    return out;
}

QSeries series_scale(const QSeries& a, const mpz_class& c)
{
    QSeries out(a.precision());
    for (std::size_t n = 0; n <= a.precision(); ++n)
        out.at(n) = c * a[n];
    return out;
}

QSeries exact_div_scalar(const QSeries& f, const mpz_class& c)
{
    if (sgn(c) == 0)
        throw std::invalid_argument("exact_div_scalar: zero divisor");
    QSeries out(f.precision());
    for (std::size_t n = 0; n <= f.precision(); ++n) {
        if (!mpz_divisible_p(f[n].get_mpz_t(), c.get_mpz_t()))
            throw std::domain_error("exact_div_scalar: coefficient at index "
                                    + std::to_string(n) + " not divisible by "
                                    + c.get_str());
        mpz_divexact(out.at(n).get_mpz_t(), f[n].get_mpz_t(), c.get_mpz_t());
    }
    return out;
}

namespace {

// prod_{n>=1} (1 - x^{tn}) to precision m, by the pentagonal-number theorem:
// sum_k (-1)^k x^{t k(3k-1)/2} over all k in Z.
QSeries euler_factor(int t, std::size_t m)
{
    QSeries out(m);
    out.at(0) = 1;
    for (long k = 1;; ++k) {
        const long e1 = k * (3 * k - 1) / 2;
        const long e2 = k * (3 * k + 1) / 2;
        const long sign = (k % 2 == 0) ? 1 : -1;
        bool any = false;
        if (static_cast<unsigned long>(t) * e1 <= m) {
            out.at(static_cast<std::size_t>(t * e1)) += sign;
            any = true;
        }
        if (static_cast<unsigned long>(t) * e2 <= m) {
            out.at(static_cast<std::size_t>(t * e2)) += sign;
            any = true;
        }
        if (!any)
            break;
    }
    return out;
}

} // namespace

QSeries eta_product(const std::vector<int>& indices, std::size_t precision)
{
    long sum = 0;
    for (int t : indices) {
        if (t <= 0)
            throw std::invalid_argument("eta_product: indices must be positive");
        sum += t;
    }
    if (sum == 0 || sum % 24 != 0)
        throw std::domain_error("eta_product: index sum " + std::to_string(sum)
                                + " is not a positive multiple of 24, leading exponent "
                                + std::to_string(sum) + "/24 is not integral");
    const std::size_t lead = static_cast<std::size_t>(sum / 24);

    QSeries out(precision);
    if (lead > precision)
        return out;
    out.at(lead) = 1;
    for (int t : indices)
        out = series_mul(out, euler_factor(t, precision));
    return out;
}

QSeries theta_hex(int t, std::size_t precision)
{
    if (t <= 0)
        throw std::invalid_argument("theta_hex: t must be positive");
    QSeries out(precision);
    const long bound = static_cast<long>(precision) / t;
    // x^2+xy+y^2 >= (3/4) max(x^2, y^2), so |x|,|y| <= sqrt(4B/3)
    long r = 1;
    while (3 * r * r < 4 * bound)
        ++r;
    for (long x = -r; x <= r; ++x)
        for (long y = -r; y <= r; ++y) {
            const long v = x * x + x * y + y * y;
            if (v <= bound)
                out.at(static_cast<std::size_t>(t * v)) += 1;
        }
    return out;
}

QSeriesModL reduce_mod(const QSeries& f, std::int64_t ell)
{
    QSeriesModL out(f.precision(), ell);
    for (std::size_t n = 0; n <= f.precision(); ++n)
        out.at(n) = static_cast<std::int64_t>(
            mpz_fdiv_ui(f[n].get_mpz_t(), static_cast<unsigned long>(ell)));
    return out;
}

QSeriesModL theta_operator(const QSeriesModL& f)
{
    QSeriesModL out(f.precision(), f.modulus());
    for (std::size_t n = 0; n <= f.precision(); ++n)
        out.at(n) = mul_mod(static_cast<std::int64_t>(n) % f.modulus(), f[n], f.modulus());
    return out;
}

} // namespace cforms
