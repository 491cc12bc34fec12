#ifndef CFORMS_NEWFORMS_HPP
#define CFORMS_NEWFORMS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cforms {

/// A rational newform given by its label, level, weight, optional
/// Atkin-Lehner signs (provenance metadata, never consumed by the verifier)
/// and the coefficients a_1..a_M with a_1 = 1.
struct NewformData {
    std::string label;
    long level = 0;
    int weight = 0;
    std::map<long, int> al_signs; // prime power p^e || N -> +-1
    std::vector<mpz_class> an;    // an[i] = a_{i+1}

    long max_n() const { return static_cast<long>(an.size()); }
    const mpz_class& a(long n) const; // 1-based, throws beyond precision

    void validate() const;
};

/// s_p = a_p^2 / p^{k-1} mod ell. Throws if p = ell ("p divisible by ell") or
/// if p exceeds the stored precision ("insufficient precision").
std::int64_t normalized_square(const NewformData& form, std::int64_t p, std::int64_t ell);

/// The unique weight-2 level-24 newform, computed independently from its
/// theta-quotient and eta-product expressions; the two expansions are checked
/// against each other before returning.
NewformData build_delta2_24(std::size_t precision);

/// Weight-4 level-24 companion: 3^{-1} (Theta_2^2 + 2 Theta_4^2) * Delta2.
NewformData build_g1(std::size_t precision);

/// Weight-8 level-24 companion:
/// 9^{-1} (Theta_2^2 - 2 Theta_4^2)(7 Theta_2^4 - 44 Theta_2^2 Theta_4^2 + 28 Theta_4^4) * Delta2.
NewformData build_h1(std::size_t precision);

// JSON file format:
//   {"label": str, "level": int, "weight": int,
//    "al": {"8": -1, "3": 1} (optional),
//    "an": ["1", "-1", ...]}   a_{i+1} as decimal strings
NewformData read_newform(const std::string& path);
void write_newform(const NewformData& form, const std::string& path);

NewformData newform_from_json_text(const std::string& text);
std::string newform_to_json_text(const NewformData& form);

} // namespace cforms

#endif
