#include "cforms/modpoly.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "cforms/arith.hpp"

namespace cforms {

ModPolynomial::ModPolynomial(std::int64_t p, std::vector<std::int64_t> coeffs)
    : p_(p), coeffs_(std::move(coeffs))
{
    for (auto& c : coeffs_)
        c = mod_reduce(c, p_);
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

std::int64_t ModPolynomial::leading() const
{
    if (coeffs_.empty())
        throw std::invalid_argument("leading: zero polynomial");
    return coeffs_.back();
}

std::string ModPolynomial::str(const std::string& var) const
{
    if (is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const std::int64_t c = coeff(static_cast<std::size_t>(i));
        if (c == 0)
            continue;
        if (!first)
            out << " + ";
        if (i == 0 || c != 1)
            out << c;
        if (i > 0) {
            if (c != 1)
                out << '*';
            out << var;
            if (i > 1)
                out << '^' << i;
        }
        first = false;
    }
    return out.str();
}

ModPolynomial reduce_mod(const IntPolynomial& f, std::int64_t p)
{
    std::vector<std::int64_t> c(f.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = static_cast<std::int64_t>(
            mpz_fdiv_ui(f.coeff(i).get_mpz_t(), static_cast<unsigned long>(p)));
    return ModPolynomial(p, std::move(c));
}

namespace {

void check_same_modulus(const ModPolynomial& a, const ModPolynomial& b)
{
    if (a.modulus() != b.modulus())
        throw std::invalid_argument("mod polynomial arithmetic: modulus mismatch");
}

} // namespace

ModPolynomial mp_add(const ModPolynomial& a, const ModPolynomial& b)
{
    check_same_modulus(a, b);
    std::vector<std::int64_t> c(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = a.coeff(i) + b.coeff(i);
    return ModPolynomial(a.modulus(), std::move(c));
}

ModPolynomial mp_sub(const ModPolynomial& a, const ModPolynomial& b)
{
    check_same_modulus(a, b);
    std::vector<std::int64_t> c(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = a.coeff(i) - b.coeff(i);
    return ModPolynomial(a.modulus(), std::move(c));
}

ModPolynomial mp_mul(const ModPolynomial& a, const ModPolynomial& b)
{
    check_same_modulus(a, b);
    if (a.is_zero() || b.is_zero())
        return ModPolynomial(a.modulus());
    std::vector<std::int64_t> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
    const std::int64_t p = a.modulus();
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeff(i) == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] = (c[i + j] + mul_mod(a.coeff(i), b.coeff(j), p)) % p;
    }
    return ModPolynomial(p, std::move(c));
}

ModPolynomial mp_scale(const ModPolynomial& a, std::int64_t c)
{
    std::vector<std::int64_t> out(a.coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = mul_mod(a.coeff(i), mod_reduce(c, a.modulus()), a.modulus());
    return ModPolynomial(a.modulus(), std::move(out));
}

ModPolynomial mp_monic(const ModPolynomial& a)
{
    if (a.is_zero() || a.is_monic())
        return a;
    return mp_scale(a, inv_mod(a.leading(), a.modulus()));
}

std::pair<ModPolynomial, ModPolynomial> mp_divmod(const ModPolynomial& a, const ModPolynomial& b)
{
    check_same_modulus(a, b);
    if (b.is_zero())
        throw std::invalid_argument("mp_divmod: division by zero polynomial");
    const std::int64_t p = a.modulus();
    if (a.degree() < b.degree())
        return {ModPolynomial(p), a};
    const std::int64_t linv = inv_mod(b.leading(), p);
    std::vector<std::int64_t> r = a.coeffs();
    std::vector<std::int64_t> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, 0);
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        const std::int64_t top = r[static_cast<std::size_t>(k + b.degree())];
        if (top == 0)
            continue;
        const std::int64_t factor = mul_mod(top, linv, p);
        q[static_cast<std::size_t>(k)] = factor;
        for (int i = 0; i <= b.degree(); ++i) {
            auto& ri = r[static_cast<std::size_t>(k + i)];
            ri = mod_reduce(ri - mul_mod(factor, b.coeff(static_cast<std::size_t>(i)), p), p);
        }
    }
    return {ModPolynomial(p, std::move(q)), ModPolynomial(p, std::move(r))};
}

ModPolynomial mp_mod(const ModPolynomial& a, const ModPolynomial& b)
{
    return mp_divmod(a, b).second;
}

ModPolynomial mp_gcd(const ModPolynomial& a, const ModPolynomial& b)
{
    check_same_modulus(a, b);
    ModPolynomial x = a, y = b;
    while (!y.is_zero()) {
        ModPolynomial r = mp_mod(x, y);
        x = y;
        y = r;
    }
    return mp_monic(x);
}

ModPolynomial mp_derivative(const ModPolynomial& a)
{
    if (a.degree() < 1)
        return ModPolynomial(a.modulus());
    std::vector<std::int64_t> c(static_cast<std::size_t>(a.degree()));
    for (int i = 1; i <= a.degree(); ++i)
        c[static_cast<std::size_t>(i - 1)] =
            mul_mod(i % a.modulus(), a.coeff(static_cast<std::size_t>(i)), a.modulus());
    return ModPolynomial(a.modulus(), std::move(c));
}

ModPolynomial mp_pow_mod(const ModPolynomial& base, const mpz_class& exp, const ModPolynomial& f)
{
    if (sgn(exp) < 0)
        throw std::invalid_argument("mp_pow_mod: negative exponent");
    ModPolynomial result(f.modulus(), {1});
    ModPolynomial b = mp_mod(base, f);
    const std::size_t bits = mpz_sizeinbase(exp.get_mpz_t(), 2);
    if (sgn(exp) == 0)
        return result;
    for (std::size_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(exp.get_mpz_t(), i))
            result = mp_mod(mp_mul(result, b), f);
        if (i + 1 < bits)
            b = mp_mod(mp_mul(b, b), f);
    }
    return result;
}

namespace {

// p-th root of a polynomial all of whose terms have exponent divisible by p;
// over the prime field, coefficients are their own p-th roots.
ModPolynomial pth_root(const ModPolynomial& f)
{
    const auto p = static_cast<std::size_t>(f.modulus());
    std::vector<std::int64_t> c(static_cast<std::size_t>(f.degree()) / p + 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = f.coeff(i * p);
    return ModPolynomial(f.modulus(), std::move(c));
}

using FactorList = std::vector<std::pair<ModPolynomial, int>>;

// Yun-style squarefree decomposition over F_p with the p-th power tail.
void squarefree_split(const ModPolynomial& f, int mult_scale, FactorList& out)
{
    ModPolynomial c = mp_gcd(f, mp_derivative(f));
    ModPolynomial w = mp_divmod(f, c).first;
    int i = 1;
    while (!(w.degree() == 0)) {
        ModPolynomial y = mp_gcd(w, c);
        ModPolynomial fac = mp_divmod(w, y).first;
        if (fac.degree() > 0)
            out.emplace_back(mp_monic(fac), i * mult_scale);
        w = y;
        c = mp_divmod(c, y).first;
        ++i;
    }
    if (c.degree() > 0)
        squarefree_split(pth_root(c), mult_scale * static_cast<int>(f.modulus()), out);
}

// Distinct-degree split of a monic squarefree polynomial: list of
// (product of irreducible factors of degree d, d).
std::vector<std::pair<ModPolynomial, int>> distinct_degree_split(ModPolynomial f)
{
    const std::int64_t p = f.modulus();
    std::vector<std::pair<ModPolynomial, int>> out;
    ModPolynomial x(p, {0, 1});
    ModPolynomial h = x; // x^(p^d) mod f, starting at d=0
    int d = 0;
    while (f.degree() >= 2 * (d + 1)) {
        ++d;
        h = mp_pow_mod(h, mpz_class(p), f);
        ModPolynomial g = mp_gcd(mp_sub(h, x), f);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            f = mp_divmod(f, g).first;
            h = mp_mod(h, f);
        }
    }
    if (f.degree() > 0)
        out.emplace_back(f, f.degree());
    return out;
}

// Equal-degree split (Cantor-Zassenhaus) of a monic product of distinct
// irreducible factors all of degree d.
void equal_degree_split(const ModPolynomial& f, int d, std::mt19937_64& rng,
                        std::vector<ModPolynomial>& out)
{
    const std::int64_t p = f.modulus();
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    const ModPolynomial one(p, {1});
    std::uniform_int_distribution<std::int64_t> coeff_dist(0, p - 1);
    while (true) {
        std::vector<std::int64_t> rc(static_cast<std::size_t>(f.degree()));
        for (auto& c : rc)
            c = coeff_dist(rng);
        ModPolynomial u(p, std::move(rc));
        if (u.degree() < 1)
            continue;
        ModPolynomial g = mp_gcd(u, f);
        if (g.degree() == 0) {
            if (p == 2) {
                // trace map u + u^2 + ... + u^(2^(d-1)) mod f
                ModPolynomial t = mp_mod(u, f);
                ModPolynomial acc = t;
                for (int i = 1; i < d; ++i) {
                    t = mp_mod(mp_mul(t, t), f);
                    acc = mp_add(acc, t);
                }
                g = mp_gcd(acc, f);
            } else {
                mpz_class e;
                mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p),
                              static_cast<unsigned long>(d));
                e = (e - 1) / 2;
                ModPolynomial v = mp_pow_mod(u, e, f);
                g = mp_gcd(mp_sub(v, one), f);
            }
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(mp_divmod(f, g).first, d, rng, out);
            return;
        }
    }
}

} // namespace

std::vector<std::pair<ModPolynomial, int>> factor_squarefree(const ModPolynomial& f)
{
    FactorList out;
    squarefree_split(f, 1, out);
    return out;
}

std::vector<std::pair<ModPolynomial, int>>
factor_mod(const IntPolynomial& f, std::int64_t p, std::uint64_t seed)
{
    if (!is_prime(p))
        throw std::invalid_argument("factor_mod: p must be prime");
    if (f.is_zero())
        throw std::invalid_argument("factor_mod: zero polynomial");
    if (mpz_divisible_ui_p(f.leading().get_mpz_t(), static_cast<unsigned long>(p)))
        throw std::domain_error("factor_mod: p divides the leading coefficient");

    std::mt19937_64 rng(seed);
    FactorList factors;
    const ModPolynomial reduced = mp_monic(reduce_mod(f, p));
    if (reduced.degree() == 0)
        return factors;
    for (const auto& [sqfree, mult] : factor_squarefree(reduced)) {
        for (const auto& [product, d] : distinct_degree_split(sqfree)) {
            std::vector<ModPolynomial> irreducibles;
            equal_degree_split(product, d, rng, irreducibles);
            for (auto& g : irreducibles)
                factors.emplace_back(std::move(g), mult);
        }
    }
    std::sort(factors.begin(), factors.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree())
            return a.first.degree() < b.first.degree();
        return a.first.coeffs() < b.first.coeffs();
    });
    return factors;
}

} // namespace cforms
