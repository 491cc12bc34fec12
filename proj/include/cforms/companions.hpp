#ifndef CFORMS_COMPANIONS_HPP
#define CFORMS_COMPANIONS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cforms/intpoly.hpp"
#include "cforms/newforms.hpp"
#include "cforms/pgl2.hpp"
#include "cforms/ramify.hpp"

namespace cforms {

/// Parameters of a candidate triple: odd prime ell, level N prime to ell, even
/// weights 2 <= k <= k' <= ell+1 with k + k' = ell - 1 + 2t, t in {1,2}.
struct TripleParams {
    std::int64_t ell = 0;
    long level = 0;
    int k = 0;
    int kprime = 0;
    int t = 0;

    void validate() const; // throws std::invalid_argument
};

/// sigma_1(N) = prod_{p^e || N} (p^e + p^{e-1}), the index of Gamma_0(N).
long sigma1(long n);

struct SturmData {
    long kappa;
    long bound;
};

/// kappa = k' + (k+2-t)(ell+1), the weight of the theta-lifted difference
/// theta^2 g - theta^{k+2-t} h whose q^n coefficient is n^{2-t} c_n; the bound
/// is ceil(kappa sigma_1(N) / 12). Validates lightly (primality, parity,
/// positivity) but not the full triple relation.
SturmData sturm_bound(std::int64_t ell, long level, int k, int kprime, int t);

enum class Verdict { Verified, Failed, InsufficientPrecision };

std::string to_string(Verdict v);

struct CompanionReport {
    TripleParams params;
    long kappa = 0;
    long sturm = 0;
    Verdict verdict = Verdict::Failed;
    std::string g_label, h_label;
    CompanionType type = CompanionType::Unknown;

    // verdict == Failed
    long fail_index = 0;
    std::int64_t fail_lhs = 0, fail_rhs = 0; // n^t a_n and n^k b_n mod ell

    // verdict == InsufficientPrecision
    long needed = 0, have = 0;

    // surjectivity advisory: observed s_p spectrum for good p <= 100, plus the
    // denylist flag for the two known non-surjective (ell, N) pairs.
    std::vector<std::int64_t> s_spectrum;
    bool known_degenerate = false;
};

/// Type of the triple: t=1 is 1T; t=2 is 2T unless (k,k') = (2, ell+1), where
/// a_ell of the weight-2 form decides between 2T (a_ell = 0 mod ell) and 2W.
CompanionType classify_type(const TripleParams& params, const std::optional<mpz_class>& a_ell);

/// Checks c_n = n^t a_n - n^k b_n = 0 mod ell for all 1 <= n <= S, with early
/// exit at the first nonzero c_n. Parameter problems (level mismatch, weight
/// relation, ell | N) throw; precision shortfalls are verdicts.
CompanionReport verify_companion(const NewformData& g, const NewformData& h,
                                 std::int64_t ell, int t);

/// All-pairs scan: groups forms by level, enumerates pairs of distinct forms
/// with k <= k' and k + k' = ell - 1 + 2t for t in {1,2}, and verifies each.
/// Reports come back ordered by (N, k, k', labels).
std::vector<CompanionReport> scan_corpus(const std::vector<NewformData>& forms,
                                         std::int64_t ell);

struct PrimeMatch {
    std::int64_t p;
    Partition lambda;
    MatchResult result;
};

struct FieldMatchReport {
    bool all_match = true;
    std::int64_t first_mismatch = 0; // 0 when none
    std::vector<PrimeMatch> primes;
    std::vector<std::int64_t> skipped; // primes dividing ell*N*disc(f)
};

/// Runs the per-prime Frobenius match of a degree ell+1 polynomial against a
/// pair of forms, over every prime p <= pmax not dividing ell*N*disc(f).
FieldMatchReport match_field_to_pair(const IntPolynomial& f,
                                     const NewformData& g, const NewformData& h,
                                     std::int64_t ell, std::int64_t pmax,
                                     std::uint64_t seed = kFactorDefaultSeed);

} // namespace cforms

#endif
