#ifndef CFORMS_QSERIES_HPP
#define CFORMS_QSERIES_HPP

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace cforms {

/// Truncated power series in q with exact integer coefficients.
/// A series of precision M stores the coefficients of q^0 .. q^M.
class QSeries {
public:
    explicit QSeries(std::size_t precision)
        : coeffs_(precision + 1) {}
    explicit QSeries(std::vector<mpz_class> coeffs);

    std::size_t precision() const { return coeffs_.size() - 1; }
    const mpz_class& operator[](std::size_t n) const { return coeffs_[n]; }
    mpz_class& at(std::size_t n) { return coeffs_[n]; }
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    bool operator==(const QSeries& other) const = default;

private:
    std::vector<mpz_class> coeffs_;
};

/// Series reduced coefficientwise modulo an odd prime ell; residues in [0, ell).
class QSeriesModL {
public:
    QSeriesModL(std::size_t precision, std::int64_t ell);
    QSeriesModL(std::vector<std::int64_t> coeffs, std::int64_t ell);

    std::size_t precision() const { return coeffs_.size() - 1; }
    std::int64_t modulus() const { return ell_; }
    std::int64_t operator[](std::size_t n) const { return coeffs_[n]; }
    std::int64_t& at(std::size_t n) { return coeffs_[n]; }

    bool operator==(const QSeriesModL& other) const = default;

private:
    std::int64_t ell_;
    std::vector<std::int64_t> coeffs_;
};

// Binary operations truncate to the smaller operand precision.
QSeries series_add(const QSeries& a, const QSeries& b);
QSeries series_sub(const QSeries& a, const QSeries& b);
QSeries series_mul(const QSeries& a, const QSeries& b);
QSeries series_scale(const QSeries& a, const mpz_class& c);

inline QSeries operator+(const QSeries& a, const QSeries& b) { return series_add(a, b); }
inline QSeries operator-(const QSeries& a, const QSeries& b) { return series_sub(a, b); }
inline QSeries operator*(const QSeries& a, const QSeries& b) { return series_mul(a, b); }
inline QSeries operator*(const mpz_class& c, const QSeries& a) { return series_scale(a, c); }

/// Coefficientwise exact quotient by c; throws std::domain_error naming the
/// first index whose coefficient c does not divide.
QSeries exact_div_scalar(const QSeries& f, const mpz_class& c);

/// prod_t q^{t/24} prod_{n>=1} (1 - q^{tn}), truncated at `precision`.
/// The multiset sum must be a positive multiple of 24 (integral leading
/// exponent); each Euler factor is expanded by the pentagonal-number theorem.
QSeries eta_product(const std::vector<int>& indices, std::size_t precision);

/// Theta series of the hexagonal lattice scaled by t: the q^n coefficient
/// counts pairs (x,y) in Z^2 with t(x^2+xy+y^2) = n.
QSeries theta_hex(int t, std::size_t precision);

QSeriesModL reduce_mod(const QSeries& f, std::int64_t ell);

/// q d/dq on reduced series: the q^n coefficient becomes n*c_n mod ell.
QSeriesModL theta_operator(const QSeriesModL& f);

} // namespace cforms

#endif
