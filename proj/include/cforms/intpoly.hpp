#ifndef CFORMS_INTPOLY_HPP
#define CFORMS_INTPOLY_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cforms/arith.hpp"

namespace cforms {

/// Dense univariate polynomial over Z, constant term first.
/// The zero polynomial is the empty coefficient sequence.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coeffs);

    static IntPolynomial from_degree_descending(const std::vector<mpz_class>& coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const mpz_class& coeff(std::size_t i) const;
    const mpz_class& leading() const;
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }
    std::vector<mpz_class> degree_descending() const;

    mpz_class operator()(const mpz_class& x) const;

    bool operator==(const IntPolynomial& other) const = default;

private:
    std::vector<mpz_class> coeffs_;
};

IntPolynomial derivative(const IntPolynomial& f);

mpz_class resultant(const IntPolynomial& a, const IntPolynomial& b);

/// disc(f) = (-1)^{n(n-1)/2} Res(f, f') / lc(f), computed by the subresultant
/// algorithm. Throws std::invalid_argument on constant input.
mpz_class discriminant(const IntPolynomial& f);

/// Returns g with g(x^2) = f(x). Throws std::domain_error naming the offending
/// indices if f has a nonzero odd-degree coefficient.
IntPolynomial even_contraction(const IntPolynomial& f);

/// Multiset of positive integers summing to `degree`, stored descending.
struct Partition {
    std::vector<int> parts;

    int degree() const;
    bool operator==(const Partition& other) const = default;
};

/// (-1)^{sum (part-1)}: the sign of a permutation with this cycle type.
int partition_parity(const Partition& lambda);

std::int64_t lcm_parts(const Partition& lambda);

/// Exponent notation, e.g. "5^2 1^2".
std::string partition_string(const Partition& lambda);

/// Degrees of the irreducible factors of f mod p, for p a good prime of the
/// polynomial (p does not divide lc(f) or disc(f)). Sorted descending.
Partition frobenius_partition(const IntPolynomial& f, std::int64_t p,
                              std::uint64_t seed = kFactorDefaultSeed);

// Text format: one line of whitespace-separated integers in degree-descending
// order; lines beginning with '#' are comments.
IntPolynomial read_polynomial(std::istream& in);
IntPolynomial read_polynomial_file(const std::string& path);
void write_polynomial(std::ostream& out, const IntPolynomial& f);

} // namespace cforms

#endif
