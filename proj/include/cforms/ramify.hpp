#ifndef CFORMS_RAMIFY_HPP
#define CFORMS_RAMIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cforms {

/// The three behaviours of the mod-ell representation at ell, plus Unknown
/// when the classifying coefficient is not available.
enum class CompanionType { T1, T2, W2, Unknown };

std::string to_string(CompanionType t);          // "1T", "2T", "2W", "unknown"
CompanionType companion_type_from_string(const std::string& s);

/// Multiplicative ramification data: a factor p^exponent per prime, exponents
/// exact rationals in [0, 2).
struct RamProfile {
    std::vector<std::pair<std::int64_t, mpq_class>> contributions;

    void validate() const;
};

/// exp(sum e_i log p_i), exponents kept exact until this final evaluation.
double evaluate(const RamProfile& profile);

/// Root discriminant |D|^{1/n} of a degree-n field.
double root_disc_from_D(const mpz_class& D, int n);

/// Contribution exponent (t-1)/t of a prime tamely ramified with inertia order t.
mpq_class tame_grd_exponent(long t);

struct ContribPair {
    mpq_class delta_exp; // towards the root discriminant
    mpq_class grd_exp;   // towards the Galois root discriminant
};

/// Contribution of a level prime p != ell with ord_p(N) = 1 or 2. For the
/// square case the tame inertia order e in {3,4,6} must divide exactly one of
/// ell-1, ell+1; p=2 forces e=3 and p=3 forces e=4. ord >= 3 is out of scope
/// (wild): supply exponents directly via RamProfile.
ContribPair level_prime_contribution(std::int64_t p, int ord, std::int64_t ell, int e = 0);

/// Contribution of ell itself, by type and weight. For 1T/2T put
/// d = gcd(k-1, ell -+ 1), e = (ell -+ 1)/d (sign - for 1T, + for 2T); the pair
/// is (e-1)(ell -+ 1)/(e(ell+1)) and (e-1)/e. For 2W the weight is ignored and
/// the pair is ell/(ell+1) and 1 + (ell-2)/(ell(ell-1)).
ContribPair ell_contribution(std::int64_t ell, CompanionType type, int k);

struct RamanujanPair {
    double delta;
    double grd;
};

/// Level-one comparison values ell^{(ell+10)/(ell+1)} and
/// ell^{(ell^2+10 ell-12)/(ell^2-ell)}.
RamanujanPair ramanujan_profile(std::int64_t ell);

/// GRH-conditional asymptotic lower bound on root discriminants of large
/// Galois number fields (2 * 4 pi e^gamma, two decimals). Reference constant,
/// not computed here.
inline constexpr double kGrdAsymptoticLowerBound = 44.76;

} // namespace cforms

#endif
