#include "cforms/intpoly.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cforms/arith.hpp"
#include "cforms/modpoly.hpp"

namespace cforms {

namespace {
const mpz_class kZero = 0;
}

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs)
    : coeffs_(std::move(coeffs))
{
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0)
        coeffs_.pop_back();
}

IntPolynomial IntPolynomial::from_degree_descending(const std::vector<mpz_class>& coeffs)
{
    std::vector<mpz_class> c(coeffs.rbegin(), coeffs.rend());
    return IntPolynomial(std::move(c));
}

const mpz_class& IntPolynomial::coeff(std::size_t i) const
{
    return i < coeffs_.size() ? coeffs_[i] : kZero;
}

const mpz_class& IntPolynomial::leading() const
{
    if (coeffs_.empty())
        throw std::invalid_argument("leading: zero polynomial");
    return coeffs_.back();
}

std::vector<mpz_class> IntPolynomial::degree_descending() const
{
    return std::vector<mpz_class>(coeffs_.rbegin(), coeffs_.rend());
}

mpz_class IntPolynomial::operator()(const mpz_class& x) const
{
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

IntPolynomial derivative(const IntPolynomial& f)
{
    if (f.degree() < 1)
        return IntPolynomial();
    std::vector<mpz_class> c(static_cast<std::size_t>(f.degree()));
    for (int i = 1; i <= f.degree(); ++i)
        c[static_cast<std::size_t>(i - 1)] = i * f.coeff(static_cast<std::size_t>(i));
    return IntPolynomial(std::move(c));
}

namespace {

// Pseudo-remainder: lc(B)^{deg A - deg B + 1} A = Q B + R with deg R < deg B.
IntPolynomial pseudo_rem(const IntPolynomial& a, const IntPolynomial& b)
{
    std::vector<mpz_class> r = a.coeffs();
    const int db = b.degree();
    const mpz_class& lb = b.leading();
    int e = a.degree() - db + 1;
    while (true) {
        int dr = static_cast<int>(r.size()) - 1;
        while (dr >= 0 && sgn(r[static_cast<std::size_t>(dr)]) == 0)
            --dr;
        r.resize(static_cast<std::size_t>(dr + 1));
        if (dr < db)
            break;
        const mpz_class lr = r[static_cast<std::size_t>(dr)];
        for (int i = 0; i <= dr; ++i) {
            mpz_class v = lb * r[static_cast<std::size_t>(i)];
            const int j = i - (dr - db);
            if (j >= 0 && j <= db)
                v -= lr * b.coeff(static_cast<std::size_t>(j));
            r[static_cast<std::size_t>(i)] = v;
        }
        // leading term cancels
        r.resize(static_cast<std::size_t>(dr));
        --e;
    }
    IntPolynomial rem{std::vector<mpz_class>(r)};
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(std::max(e, 0)));
    std::vector<mpz_class> out = rem.coeffs();
    for (auto& c : out)
        c *= scale;
    return IntPolynomial(std::move(out));
}

IntPolynomial exact_div_poly_scalar(const IntPolynomial& a, const mpz_class& d)
{
    std::vector<mpz_class> out = a.coeffs();
    for (auto& c : out) {
        if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t()))
            throw std::logic_error("subresultant: inexact division");
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    }
    return IntPolynomial(std::move(out));
}

} // namespace

mpz_class resultant(const IntPolynomial& a, const IntPolynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return 0;
    IntPolynomial A = a, B = b;
    int sign = 1;
    if (A.degree() < B.degree()) {
        std::swap(A, B);
        if ((A.degree() % 2) && (B.degree() % 2))
            sign = -sign;
    }
    if (B.degree() == 0) {
        mpz_class out;
        mpz_pow_ui(out.get_mpz_t(), B.leading().get_mpz_t(),
                   static_cast<unsigned long>(A.degree()));
        return sign * out;
    }

    // subresultant PRS, keeping g,h per Collins
    mpz_class g = 1, h = 1;
    while (true) {
        const int delta = A.degree() - B.degree();
        if ((A.degree() % 2) && (B.degree() % 2))
            sign = -sign;
        IntPolynomial R = pseudo_rem(A, B);
        A = B;
        mpz_class hd;
        mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
        B = R.is_zero() ? R : exact_div_poly_scalar(R, g * hd);
        if (B.is_zero())
            return 0;
        g = A.leading();
        if (delta > 0) {
            mpz_class gd;
            mpz_pow_ui(gd.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
            if (delta == 1) {
                h = gd;
            } else {
                mpz_class hprev;
                mpz_pow_ui(hprev.get_mpz_t(), h.get_mpz_t(),
                           static_cast<unsigned long>(delta - 1));
                mpz_divexact(h.get_mpz_t(), gd.get_mpz_t(), hprev.get_mpz_t());
            }
        }
        if (B.degree() == 0)
            break;
    }
    mpz_class num;
    mpz_pow_ui(num.get_mpz_t(), B.leading().get_mpz_t(),
               static_cast<unsigned long>(A.degree()));
    if (A.degree() > 1) {
        mpz_class hprev;
        mpz_pow_ui(hprev.get_mpz_t(), h.get_mpz_t(),
                   static_cast<unsigned long>(A.degree() - 1));
        mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), hprev.get_mpz_t());
    }
    return sign * num;
}

mpz_class discriminant(const IntPolynomial& f)
{
    const int n = f.degree();
    if (n < 1)
        throw std::invalid_argument("discriminant: polynomial must have degree >= 1");
    mpz_class res = resultant(f, derivative(f));
    mpz_class disc;
    mpz_divexact(disc.get_mpz_t(), res.get_mpz_t(), f.leading().get_mpz_t());
    if ((n * (n - 1) / 2) % 2)
        disc = -disc;
    return disc;
}

IntPolynomial even_contraction(const IntPolynomial& f)
{
    if (f.is_zero())
        return f;
    std::vector<std::size_t> bad;
    for (int i = 1; i <= f.degree(); i += 2)
        if (sgn(f.coeff(static_cast<std::size_t>(i))) != 0)
            bad.push_back(static_cast<std::size_t>(i));
    if (!bad.empty()) {
        std::ostringstream msg;
        msg << "even_contraction: nonzero odd-degree coefficient at "
            << (bad.size() > 1 ? "indices" : "index");
        for (std::size_t i = 0; i < bad.size(); ++i)
            msg << (i ? (i + 1 == bad.size() ? " and " : ", ") : " ") << bad[i];
        throw std::domain_error(msg.str());
    }
    std::vector<mpz_class> c;
    for (int i = 0; i <= f.degree(); i += 2)
        c.push_back(f.coeff(static_cast<std::size_t>(i)));
    return IntPolynomial(std::move(c));
}

int Partition::degree() const
{
    return std::accumulate(parts.begin(), parts.end(), 0);
}

int partition_parity(const Partition& lambda)
{
    int s = 0;
    for (int part : lambda.parts)
        s += part - 1;
    return (s % 2 == 0) ? 1 : -1;
}

std::int64_t lcm_parts(const Partition& lambda)
{
    std::int64_t m = 1;
    for (int part : lambda.parts)
        m = std::lcm(m, static_cast<std::int64_t>(part));
    return m;
}

std::string partition_string(const Partition& lambda)
{
    std::ostringstream out;
    std::size_t i = 0;
    bool first = true;
    while (i < lambda.parts.size()) {
        std::size_t j = i;
        while (j < lambda.parts.size() && lambda.parts[j] == lambda.parts[i])
            ++j;
        if (!first)
            out << ' ';
        out << lambda.parts[i];
        if (j - i > 1)
            out << '^' << (j - i);
        first = false;
        i = j;
    }
    return out.str();
}

Partition frobenius_partition(const IntPolynomial& f, std::int64_t p, std::uint64_t seed)
{
    if (!is_prime(p))
        throw std::invalid_argument("frobenius_partition: p must be prime");
    if (f.degree() < 1)
        throw std::invalid_argument("frobenius_partition: constant polynomial");
    if (mpz_divisible_ui_p(f.leading().get_mpz_t(), static_cast<unsigned long>(p)))
        throw std::domain_error("frobenius_partition: " + std::to_string(p)
                                + " divides the leading coefficient, not a good prime for this polynomial");
    const mpz_class disc = discriminant(f);
    if (mpz_divisible_ui_p(disc.get_mpz_t(), static_cast<unsigned long>(p)))
        throw std::domain_error("frobenius_partition: " + std::to_string(p)
                                + " divides the polynomial discriminant, not a good prime for this polynomial");
    Partition lambda;
    for (const auto& [factor, mult] : factor_mod(f, p, seed)) {
        if (mult != 1)
            throw std::logic_error("frobenius_partition: repeated factor at a good prime");
        lambda.parts.push_back(factor.degree());
    }
    std::sort(lambda.parts.begin(), lambda.parts.end(), std::greater<>());
    return lambda;
}

IntPolynomial read_polynomial(std::istream& in)
{
    std::string line;
    while (std::getline(in, line)) {
        const auto pos = line.find_first_not_of(" \t\r\n");
        if (pos == std::string::npos || line[pos] == '#')
            continue;
        std::istringstream fields(line);
        std::vector<mpz_class> coeffs;
        std::string tok;
        while (fields >> tok) {
            mpz_class v;
            if (mpz_set_str(v.get_mpz_t(), tok.c_str(), 10) != 0)
                throw std::runtime_error("read_polynomial: bad integer token '" + tok + "'");
            coeffs.push_back(v);
        }
        if (coeffs.empty())
            throw std::runtime_error("read_polynomial: empty coefficient line");
        return IntPolynomial::from_degree_descending(coeffs);
    }
    throw std::runtime_error("read_polynomial: no coefficient line found");
}

IntPolynomial read_polynomial_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open polynomial file: " + path);
    return read_polynomial(in);
}

void write_polynomial(std::ostream& out, const IntPolynomial& f)
{
    const auto coeffs = f.degree_descending();
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        out << (i ? " " : "") << coeffs[i].get_str();
    out << '\n';
}

} // namespace cforms
