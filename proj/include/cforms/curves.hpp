#ifndef CFORMS_CURVES_HPP
#define CFORMS_CURVES_HPP

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "cforms/intpoly.hpp"
#include "cforms/ramify.hpp"

namespace cforms {

/// y^2 = x^3 + ax + b with integer coefficients.
struct ShortWeierstrass {
    mpz_class a;
    mpz_class b;
};

/// d = -4a^3 - 27b^2 (zero output means a singular curve; the other
/// operations reject it).
mpz_class curve_disc(const ShortWeierstrass& e);

/// a_p = p + 1 - #E(F_p) by direct enumeration of x with a quadratic-residue
/// table. Requires p odd and of good reduction.
long ap_naive(const ShortWeierstrass& e, std::int64_t p);

/// The seven-term degree-24 polynomial, in terms of d = curve_disc:
/// d^10 x^24 - 15840 d^5 x^12 - 337920 a d^3 x^8 - 2280960 b d^2 x^6
///   + 811008 a^2 d x^4 + 663552 a b x^2 - 2816.
IntPolynomial atkin_lift(const ShortWeierstrass& e);

struct ChartCurve {
    CompanionType type;
    long level;
    ShortWeierstrass curve;
};

/// The ten (a,b) pairs of the level chart, tagged with type and level.
const std::vector<ChartCurve>& chart_curves();

} // namespace cforms

#endif
