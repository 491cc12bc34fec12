#include "cforms/companions.hpp"

#include <algorithm>
#include <stdexcept>

#include "cforms/arith.hpp"

namespace cforms {

void TripleParams::validate() const
{
    if (ell < 3 || !is_prime(ell))
        throw std::invalid_argument("triple: ell must be an odd prime");
    if (level < 1)
        throw std::invalid_argument("triple: level must be positive");
    if (level % ell == 0)
        throw std::invalid_argument("triple: level is a multiple of ell");
    if (t != 1 && t != 2)
        throw std::invalid_argument("triple: t must be 1 or 2");
    if (k % 2 || kprime % 2)
        throw std::invalid_argument("triple: weights must be even");
    if (k < 2 || k > kprime || kprime > ell + 1)
        throw std::invalid_argument("triple: weights must satisfy 2 <= k <= k' <= ell+1");
    if (k + kprime != ell - 1 + 2 * t)
        throw std::invalid_argument("triple: weight relation k+k' = ell-1+2t violated ("
                                    + std::to_string(k) + "+" + std::to_string(kprime)
                                    + " != " + std::to_string(ell - 1 + 2 * t) + ")");
}

long sigma1(long n)
{
    if (n < 1)
        throw std::invalid_argument("sigma1: argument must be positive");
    long result = 1;
    long rest = n;
    for (long p = 2; p * p <= rest; ++p) {
        if (rest % p)
            continue;
        long pe = 1;
        while (rest % p == 0) {
            rest /= p;
            pe *= p;
        }
        result *= pe + pe / p;
    }
    if (rest > 1)
        result *= rest + 1;
    return result;
}

SturmData sturm_bound(std::int64_t ell, long level, int k, int kprime, int t)
{
    if (ell < 3 || !is_prime(ell))
        throw std::invalid_argument("sturm_bound: ell must be an odd prime");
    if (level < 1)
        throw std::invalid_argument("sturm_bound: level must be positive");
    if (t != 1 && t != 2)
        throw std::invalid_argument("sturm_bound: t must be 1 or 2");
    if (k < 1 || kprime < 1)
        throw std::invalid_argument("sturm_bound: weights must be positive");
    if (k % 2 || kprime % 2)
        throw std::invalid_argument("sturm_bound: weights must be even");
    const long kappa = kprime + static_cast<long>(k + 2 - t) * (ell + 1);
    const long num = kappa * sigma1(level);
    return {kappa, (num + 11) / 12};
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Verified: return "verified";
    case Verdict::Failed: return "failed";
    default: return "insufficient_precision";
    }
}

CompanionType classify_type(const TripleParams& params, const std::optional<mpz_class>& a_ell)
{
    params.validate();
    if (params.t == 1)
        return CompanionType::T1;
    if (!(params.k == 2 && params.kprime == params.ell + 1))
        return CompanionType::T2;
    if (!a_ell)
        return CompanionType::Unknown;
    return mpz_divisible_ui_p(a_ell->get_mpz_t(), static_cast<unsigned long>(params.ell))
               ? CompanionType::T2
               : CompanionType::W2;
}

namespace {

bool degenerate_pair(std::int64_t ell, long level)
{
    return (ell == 11 && level == 8) || (ell == 19 && level == 4);
}

void fill_s_spectrum(CompanionReport& report, const NewformData& g)
{
    for (std::int64_t p : primes_up_to(std::min<std::int64_t>(100, g.max_n()))) {
        if (p == report.params.ell || report.params.level % p == 0)
            continue;
        const std::int64_t s = normalized_square(g, p, report.params.ell);
        if (!std::binary_search(report.s_spectrum.begin(), report.s_spectrum.end(), s))
            report.s_spectrum.insert(
                std::lower_bound(report.s_spectrum.begin(), report.s_spectrum.end(), s), s);
    }
}

} // namespace

CompanionReport verify_companion(const NewformData& g, const NewformData& h,
                                 std::int64_t ell, int t)
{
    if (g.level != h.level)
        throw std::invalid_argument("verify_companion: forms have different levels");
    TripleParams params{ell, g.level, g.weight, h.weight, t};
    params.validate();

    CompanionReport report;
    report.params = params;
    report.g_label = g.label;
    report.h_label = h.label;
    const SturmData sturm = sturm_bound(ell, params.level, params.k, params.kprime, t);
    report.kappa = sturm.kappa;
    report.sturm = sturm.bound;
    report.known_degenerate = degenerate_pair(ell, params.level);

    std::optional<mpz_class> a_ell;
    if (g.max_n() >= ell)
        a_ell = g.a(ell);
    report.type = classify_type(params, a_ell);

    const long have = std::min(g.max_n(), h.max_n());
    if (have < sturm.bound) {
        report.verdict = Verdict::InsufficientPrecision;
        report.needed = sturm.bound;
        report.have = have;
        return report;
    }

    for (long n = 1; n <= sturm.bound; ++n) {
        const std::int64_t nm = mod_reduce(n, ell);
        const std::int64_t an = static_cast<std::int64_t>(
            mpz_fdiv_ui(g.a(n).get_mpz_t(), static_cast<unsigned long>(ell)));
        const std::int64_t bn = static_cast<std::int64_t>(
            mpz_fdiv_ui(h.a(n).get_mpz_t(), static_cast<unsigned long>(ell)));
        const std::int64_t lhs = mul_mod(pow_mod(nm, static_cast<std::uint64_t>(t), ell), an, ell);
        const std::int64_t rhs =
            mul_mod(pow_mod(nm, static_cast<std::uint64_t>(params.k), ell), bn, ell);
        if (lhs != rhs) {
            report.verdict = Verdict::Failed;
            report.fail_index = n;
            report.fail_lhs = lhs;
            report.fail_rhs = rhs;
            return report;
        }
    }
    report.verdict = Verdict::Verified;
    fill_s_spectrum(report, g);
    return report;
}

std::vector<CompanionReport> scan_corpus(const std::vector<NewformData>& forms,
                                         std::int64_t ell)
{
    std::vector<CompanionReport> reports;
    for (std::size_t i = 0; i < forms.size(); ++i) {
        if (forms[i].level % ell == 0)
            continue;
        for (std::size_t j = 0; j < forms.size(); ++j) {
            if (i == j || forms[i].level != forms[j].level)
                continue;
            const NewformData& g = forms[i];
            const NewformData& h = forms[j];
            if (g.weight > h.weight)
                continue;
            // equal weights: visit each unordered pair once
            if (g.weight == h.weight
                && !(g.label < h.label || (g.label == h.label && i < j)))
                continue;
            for (int t : {1, 2}) {
                if (g.weight + h.weight != ell - 1 + 2 * t)
                    continue;
                reports.push_back(verify_companion(g, h, ell, t));
            }
        }
    }
    std::sort(reports.begin(), reports.end(),
              [](const CompanionReport& x, const CompanionReport& y) {
                  return std::tie(x.params.level, x.params.k, x.params.kprime,
                                  x.g_label, x.h_label)
                       < std::tie(y.params.level, y.params.k, y.params.kprime,
                                  y.g_label, y.h_label);
              });
    return reports;
}

FieldMatchReport match_field_to_pair(const IntPolynomial& f,
                                     const NewformData& g, const NewformData& h,
                                     std::int64_t ell, std::int64_t pmax,
                                     std::uint64_t seed)
{
    if (f.degree() != ell + 1)
        throw std::invalid_argument("match_field_to_pair: polynomial degree must be ell+1");
    if (pmax < 2)
        throw std::invalid_argument("match_field_to_pair: pmax must be at least 2");
    if (g.level != h.level)
        throw std::invalid_argument("match_field_to_pair: forms have different levels");

    const mpz_class disc = discriminant(f);
    FieldMatchReport report;
    for (std::int64_t p : primes_up_to(pmax)) {
        const bool bad = p == ell || g.level % p == 0
                      || mpz_divisible_ui_p(disc.get_mpz_t(), static_cast<unsigned long>(p))
                      || mpz_divisible_ui_p(f.leading().get_mpz_t(),
                                            static_cast<unsigned long>(p));
        if (bad) {
            report.skipped.push_back(p);
            continue;
        }
        PrimeMatch pm;
        pm.p = p;
        pm.lambda = frobenius_partition(f, p, seed);
        pm.result = match_frobenius(pm.lambda, p, g.weight, g.a(p),
                                    h.weight, h.a(p), ell);
        if (!pm.result.ok && report.all_match) {
            report.all_match = false;
            report.first_mismatch = p;
        }
        report.primes.push_back(std::move(pm));
    }
    return report;
}

} // namespace cforms
