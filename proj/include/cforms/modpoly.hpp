#ifndef CFORMS_MODPOLY_HPP
#define CFORMS_MODPOLY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cforms/arith.hpp"
#include "cforms/intpoly.hpp"

namespace cforms {

/// Dense univariate polynomial over F_p, constant term first, no trailing zeros.
class ModPolynomial {
public:
    explicit ModPolynomial(std::int64_t p) : p_(p) {}
    ModPolynomial(std::int64_t p, std::vector<std::int64_t> coeffs);

    std::int64_t modulus() const { return p_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::int64_t coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
    std::int64_t leading() const;
    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    std::string str(const std::string& var = "x") const;

    bool operator==(const ModPolynomial& other) const = default;

private:
    std::int64_t p_;
    std::vector<std::int64_t> coeffs_;
};

ModPolynomial reduce_mod(const IntPolynomial& f, std::int64_t p);

ModPolynomial mp_add(const ModPolynomial& a, const ModPolynomial& b);
ModPolynomial mp_sub(const ModPolynomial& a, const ModPolynomial& b);
ModPolynomial mp_mul(const ModPolynomial& a, const ModPolynomial& b);
ModPolynomial mp_scale(const ModPolynomial& a, std::int64_t c);
ModPolynomial mp_monic(const ModPolynomial& a);
std::pair<ModPolynomial, ModPolynomial> mp_divmod(const ModPolynomial& a, const ModPolynomial& b);
ModPolynomial mp_mod(const ModPolynomial& a, const ModPolynomial& b);
ModPolynomial mp_gcd(const ModPolynomial& a, const ModPolynomial& b); // monic
ModPolynomial mp_derivative(const ModPolynomial& a);

/// base^exp mod f, exponent an arbitrary-precision nonnegative integer.
ModPolynomial mp_pow_mod(const ModPolynomial& base, const mpz_class& exp, const ModPolynomial& f);

/// Full factorization of f over F_p: squarefree split, distinct-degree split,
/// then randomized equal-degree split. Returned factors are monic irreducible,
/// sorted by (degree, coefficients); their product times lc(f) is f mod p.
/// Requires p prime and p not dividing lc(f).
std::vector<std::pair<ModPolynomial, int>>
factor_mod(const IntPolynomial& f, std::int64_t p, std::uint64_t seed = kFactorDefaultSeed);

std::vector<std::pair<ModPolynomial, int>>
factor_squarefree(const ModPolynomial& f); // monic input

} // namespace cforms

#endif
