#ifndef CFORMS_PGL2_HPP
#define CFORMS_PGL2_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cforms/intpoly.hpp"

namespace cforms {

/// Invertible 2x2 matrix over F_ell, ell an odd prime; entries reduced to [0, ell).
struct Mat2 {
    std::int64_t ell;
    std::int64_t a, b, c, d;

    Mat2(std::int64_t ell_, std::int64_t a_, std::int64_t b_, std::int64_t c_, std::int64_t d_);

    std::int64_t det() const;
    std::int64_t trace() const;
    bool is_scalar() const;
};

Mat2 mat_mul(const Mat2& x, const Mat2& y);

/// Smallest m >= 1 with M^m scalar; divides one of ell-1, ell, ell+1.
int proj_order(const Mat2& m);

/// Projective order of [[0,-1],[p^{k-1}, a_p]] mod ell. Requires p != 0 mod ell.
int companion_order(std::int64_t p, int k, const mpz_class& a_p, std::int64_t ell);

/// Cycle type of the Moebius action of M on the ell+1 points of P^1(F_ell).
Partition cycle_partition(const Mat2& m);

/// One row of the conjugation-invariant summary of PGL_2(F_ell): all classes
/// realizing a common cycle partition, with their total mass and the set of
/// values trace^2/det they take.
struct ClassRow {
    Partition partition;
    int parity;                       // +-1
    long count;                       // number of group elements
    mpq_class mass;                   // count / (ell^3 - ell)
    int order;                        // common projective order
    std::vector<std::int64_t> s_values; // trace^2/det residues, sorted
};

/// Enumerates the whole group via canonical representatives (first nonzero
/// entry scaled to 1). Guarded at ell <= 101.
std::vector<ClassRow> class_table(std::int64_t ell);

struct MatchResult {
    bool ok = false;
    std::string reason;     // "ok", or which clause failed
    std::int64_t s_g = -1;  // a_p^2 / p^{k-1} mod ell
    std::int64_t s_h = -1;  // b_p^2 / p^{k'-1} mod ell
    std::int64_t o_p = 0;   // lcm of partition parts
    int big_o_p = 0;        // companion-matrix order
};

/// The local field<->forms agreement predicate at p: equal normalized squares
/// and o_p = O_p, excusing only the literal (o_p, O_p) = (1, ell) pair.
MatchResult match_frobenius(const Partition& lambda, std::int64_t p,
                            int k, const mpz_class& a_p,
                            int kprime, const mpz_class& b_p,
                            std::int64_t ell);

} // namespace cforms

#endif
