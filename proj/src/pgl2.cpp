#include "cforms/pgl2.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cforms/arith.hpp"

namespace cforms {

Mat2::Mat2(std::int64_t ell_, std::int64_t a_, std::int64_t b_, std::int64_t c_, std::int64_t d_)
    : ell(ell_),
      a(mod_reduce(a_, ell_)), b(mod_reduce(b_, ell_)),
      c(mod_reduce(c_, ell_)), d(mod_reduce(d_, ell_))
{
    if (ell < 3 || !is_prime(ell))
        throw std::invalid_argument("Mat2: modulus must be an odd prime");
    if (det() == 0)
        throw std::invalid_argument("Mat2: singular matrix");
}

std::int64_t Mat2::det() const
{
    return mod_reduce(mul_mod(a, d, ell) - mul_mod(b, c, ell), ell);
}

std::int64_t Mat2::trace() const
{
    return mod_reduce(a + d, ell);
}

bool Mat2::is_scalar() const
{
    return b == 0 && c == 0 && a == d;
}

Mat2 mat_mul(const Mat2& x, const Mat2& y)
{
    if (x.ell != y.ell)
        throw std::invalid_argument("mat_mul: modulus mismatch");
    const std::int64_t m = x.ell;
    return Mat2(m,
                mul_mod(x.a, y.a, m) + mul_mod(x.b, y.c, m),
                mul_mod(x.a, y.b, m) + mul_mod(x.b, y.d, m),
                mul_mod(x.c, y.a, m) + mul_mod(x.d, y.c, m),
                mul_mod(x.c, y.b, m) + mul_mod(x.d, y.d, m));
}

int proj_order(const Mat2& m)
{
    Mat2 power = m;
    for (int k = 1; k <= m.ell + 1; ++k) {
        if (power.is_scalar())
            return k;
        power = mat_mul(power, m);
    }
    throw std::logic_error("proj_order: no scalar power up to ell+1");
}

int companion_order(std::int64_t p, int k, const mpz_class& a_p, std::int64_t ell)
{
    if (mod_reduce(p, ell) == 0)
        throw std::invalid_argument("companion_order: p is divisible by ell");
    const std::int64_t lower_left = pow_mod(p, static_cast<std::uint64_t>(k - 1), ell);
    const std::int64_t ap = static_cast<std::int64_t>(
        mpz_fdiv_ui(a_p.get_mpz_t(), static_cast<unsigned long>(ell)));
    return proj_order(Mat2(ell, 0, -1, lower_left, ap));
}

namespace {

// Points of P^1(F_ell) indexed 0..ell-1 as (t:1) and ell as (1:0).
std::int64_t apply_moebius(const Mat2& m, std::int64_t point)
{
    std::int64_t x, y;
    if (point == m.ell) {
        x = 1;
        y = 0;
    } else {
        x = point;
        y = 1;
    }
    const std::int64_t nx = mod_reduce(mul_mod(m.a, x, m.ell) + mul_mod(m.b, y, m.ell), m.ell);
    const std::int64_t ny = mod_reduce(mul_mod(m.c, x, m.ell) + mul_mod(m.d, y, m.ell), m.ell);
    if (ny == 0)
        return m.ell;
    return mul_mod(nx, inv_mod(ny, m.ell), m.ell);
}

} // namespace

Partition cycle_partition(const Mat2& m)
{
    const std::size_t n = static_cast<std::size_t>(m.ell) + 1;
    std::vector<std::int64_t> image(n);
    for (std::size_t i = 0; i < n; ++i)
        image[i] = apply_moebius(m, static_cast<std::int64_t>(i));
    std::vector<bool> seen(n, false);
    Partition lambda;
    for (std::size_t i = 0; i < n; ++i) {
        if (seen[i])
            continue;
        int len = 0;
        std::size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<std::size_t>(image[j]);
            ++len;
        }
        lambda.parts.push_back(len);
    }
    std::sort(lambda.parts.begin(), lambda.parts.end(), std::greater<>());
    return lambda;
}

std::vector<ClassRow> class_table(std::int64_t ell)
{
    if (ell > 101)
        throw std::invalid_argument("class_table: ell > 101 enumeration guard");
    if (ell < 3 || !is_prime(ell))
        throw std::invalid_argument("class_table: ell must be an odd prime");

    struct Accum {
        long count = 0;
        int order = 0;
        std::vector<std::int64_t> s_values;
    };
    std::map<std::vector<int>, Accum> groups;

    // Canonical representatives: first nonzero entry in (a,b,c,d) order is 1.
    // Visits each element of PGL_2 exactly once.
    auto visit = [&](std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
        if (mod_reduce(mul_mod(a, d, ell) - mul_mod(b, c, ell), ell) == 0)
            return;
        const Mat2 m(ell, a, b, c, d);
        const Partition lambda = cycle_partition(m);
        auto& acc = groups[lambda.parts];
        acc.count += 1;
        const int order = proj_order(m);
        if (acc.order == 0)
            acc.order = order;
        const std::int64_t s =
            mul_mod(mul_mod(m.trace(), m.trace(), ell), inv_mod(m.det(), ell), ell);
        if (!std::binary_search(acc.s_values.begin(), acc.s_values.end(), s))
            acc.s_values.insert(
                std::lower_bound(acc.s_values.begin(), acc.s_values.end(), s), s);
    };

    for (std::int64_t b = 0; b < ell; ++b)
        for (std::int64_t c = 0; c < ell; ++c)
            for (std::int64_t d = 0; d < ell; ++d)
                visit(1, b, c, d);
    for (std::int64_t c = 0; c < ell; ++c)
        for (std::int64_t d = 0; d < ell; ++d)
            visit(0, 1, c, d);

    const long group_order = static_cast<long>(ell) * (ell - 1) * (ell + 1);
    std::vector<ClassRow> rows;
    for (auto& [parts, acc] : groups) {
        ClassRow row;
        row.partition.parts = parts;
        row.parity = partition_parity(row.partition);
        row.count = acc.count;
        row.mass = mpq_class(acc.count, group_order);
        row.mass.canonicalize();
        row.order = acc.order;
        row.s_values = std::move(acc.s_values);
        rows.push_back(std::move(row));
    }
    // heaviest classes first, ties by partition
    std::sort(rows.begin(), rows.end(), [](const ClassRow& x, const ClassRow& y) {
        if (x.count != y.count)
            return x.count > y.count;
        return x.partition.parts > y.partition.parts;
    });
    return rows;
}

MatchResult match_frobenius(const Partition& lambda, std::int64_t p,
                            int k, const mpz_class& a_p,
                            int kprime, const mpz_class& b_p,
                            std::int64_t ell)
{
    if (mod_reduce(p, ell) == 0)
        throw std::invalid_argument("match_frobenius: p is divisible by ell");

    MatchResult r;
    const auto square = [&](const mpz_class& coeff, int weight) {
        const std::int64_t c = static_cast<std::int64_t>(
            mpz_fdiv_ui(coeff.get_mpz_t(), static_cast<unsigned long>(ell)));
        const std::int64_t denom = pow_mod(p, static_cast<std::uint64_t>(weight - 1), ell);
        return mul_mod(mul_mod(c, c, ell), inv_mod(denom, ell), ell);
    };
    r.s_g = square(a_p, k);
    r.s_h = square(b_p, kprime);
    r.o_p = lcm_parts(lambda);
    r.big_o_p = companion_order(p, k, a_p, ell);

    if (r.s_g != r.s_h) {
        std::ostringstream msg;
        msg << "normalized squares differ: " << r.s_g << " vs " << r.s_h;
        r.reason = msg.str();
        return r;
    }
    if (r.o_p != r.big_o_p && !(r.o_p == 1 && r.big_o_p == ell)) {
        std::ostringstream msg;
        msg << "order mismatch: o_p=" << r.o_p << " O_p=" << r.big_o_p;
        r.reason = msg.str();
        return r;
    }
    r.ok = true;
    r.reason = "ok";
    return r;
}

} // namespace cforms
