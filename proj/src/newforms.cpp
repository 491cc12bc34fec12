#include "cforms/newforms.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "cforms/arith.hpp"
#include "cforms/qseries.hpp"

namespace cforms {

const mpz_class& NewformData::a(long n) const
{
    if (n < 1 || n > max_n())
        throw std::out_of_range("NewformData: coefficient a_" + std::to_string(n)
                                + " beyond stored precision " + std::to_string(max_n()));
    return an[static_cast<std::size_t>(n - 1)];
}

void NewformData::validate() const
{
    if (level < 1)
        throw std::invalid_argument("newform: level must be positive");
    if (weight < 1)
        throw std::invalid_argument("newform: weight must be positive");
    if (an.empty() || an[0] != 1)
        throw std::invalid_argument("newform: a_1 must be 1 (normalized eigenform)");
    for (const auto& [q, sign] : al_signs) {
        if (q < 2 || level % q != 0)
            throw std::invalid_argument("newform: Atkin-Lehner key " + std::to_string(q)
                                        + " does not divide the level");
        if (sign != 1 && sign != -1)
            throw std::invalid_argument("newform: Atkin-Lehner sign must be +-1");
    }
}

std::int64_t normalized_square(const NewformData& form, std::int64_t p, std::int64_t ell)
{
    if (mod_reduce(p, ell) == 0)
        throw std::invalid_argument("normalized_square: p is divisible by ell");
    if (p > form.max_n())
        throw std::out_of_range("normalized_square: insufficient precision, need a_"
                                + std::to_string(p) + ", have " + std::to_string(form.max_n()));
    const std::int64_t ap = static_cast<std::int64_t>(
        mpz_fdiv_ui(form.a(p).get_mpz_t(), static_cast<unsigned long>(ell)));
    const std::int64_t denom = pow_mod(p, static_cast<std::uint64_t>(form.weight - 1), ell);
    return mul_mod(mul_mod(ap, ap, ell), inv_mod(denom, ell), ell);
}

namespace {

NewformData from_series(std::string label, long level, int weight,
                        std::map<long, int> al, const QSeries& s)
{
    NewformData form;
    form.label = std::move(label);
    form.level = level;
    form.weight = weight;
    form.al_signs = std::move(al);
    form.an.assign(s.coeffs().begin() + 1, s.coeffs().end());
    form.validate();
    return form;
}

QSeries delta2_series(std::size_t m)
{
    const QSeries theta1 = theta_hex(1, m);
    const QSeries theta2 = theta_hex(2, m);
    const QSeries theta4 = theta_hex(4, m);
    const QSeries theta8 = theta_hex(8, m);
    const QSeries by_theta = exact_div_scalar(
        series_mul(theta4 - theta1, theta2 - mpz_class(4) * theta8), 18);
    const QSeries by_eta = eta_product({2, 4, 6, 12}, m);
    if (!(by_theta == by_eta))
        throw std::logic_error("delta2_24: theta-quotient and eta-product expansions disagree");
    return by_eta;
}

} // namespace

NewformData build_delta2_24(std::size_t precision)
{
    return from_series("24.2.-+", 24, 2, {{8, -1}, {3, 1}}, delta2_series(precision));
}

NewformData build_g1(std::size_t precision)
{
    const QSeries t2 = theta_hex(2, precision);
    const QSeries t4 = theta_hex(4, precision);
    const QSeries factor = series_mul(t2, t2) + mpz_class(2) * series_mul(t4, t4);
    const QSeries g = exact_div_scalar(series_mul(factor, delta2_series(precision)), 3);
    return from_series("24.4.--", 24, 4, {{8, -1}, {3, -1}}, g);
}

NewformData build_h1(std::size_t precision)
{
    const QSeries t2sq = series_mul(theta_hex(2, precision), theta_hex(2, precision));
    const QSeries t4sq = series_mul(theta_hex(4, precision), theta_hex(4, precision));
    const QSeries first = t2sq - mpz_class(2) * t4sq;
    const QSeries second = mpz_class(7) * series_mul(t2sq, t2sq)
                         - mpz_class(44) * series_mul(t2sq, t4sq)
                         + mpz_class(28) * series_mul(t4sq, t4sq);
    const QSeries h = exact_div_scalar(
        series_mul(series_mul(first, second), delta2_series(precision)), 9);
    return from_series("24.8.+-", 24, 8, {{8, 1}, {3, -1}}, h);
}

NewformData newform_from_json_text(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(std::string("newform: JSON parse error: ") + e.what());
    }
    if (!j.is_object())
        throw std::runtime_error("newform: top-level JSON value is not an object");

    NewformData form;
    try {
        form.label = j.at("label").get<std::string>();
        form.level = j.at("level").get<long>();
        form.weight = j.at("weight").get<int>();
        if (j.contains("al")) {
            for (const auto& [key, value] : j.at("al").items()) {
                try {
                    form.al_signs[std::stol(key)] = value.get<int>();
                } catch (const std::logic_error&) {
                    throw std::runtime_error("newform: bad Atkin-Lehner key '" + key + "'");
                }
            }
        }
        for (const auto& entry : j.at("an")) {
            if (!entry.is_string())
                throw std::runtime_error("newform: field 'an' must hold decimal strings, entry "
                                         + std::to_string(form.an.size() + 1));
            mpz_class v;
            if (mpz_set_str(v.get_mpz_t(), entry.get<std::string>().c_str(), 10) != 0)
                throw std::runtime_error("newform: non-integer coefficient a_"
                                         + std::to_string(form.an.size() + 1) + " = '"
                                         + entry.get<std::string>() + "'");
            form.an.push_back(v);
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("newform: malformed record: ") + e.what());
    }
    form.validate();
    return form;
}

std::string newform_to_json_text(const NewformData& form)
{
    nlohmann::json j;
    j["label"] = form.label;
    j["level"] = form.level;
    j["weight"] = form.weight;
    if (!form.al_signs.empty()) {
        nlohmann::json al = nlohmann::json::object();
        for (const auto& [q, sign] : form.al_signs)
            al[std::to_string(q)] = sign;
        j["al"] = al;
    }
    nlohmann::json an = nlohmann::json::array();
    for (const auto& c : form.an)
        an.push_back(c.get_str());
    j["an"] = an;
    return j.dump(2) + "\n";
}

NewformData read_newform(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open newform file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return newform_from_json_text(buf.str());
    } catch (const std::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

void write_newform(const NewformData& form, const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write newform file: " + path);
    out << newform_to_json_text(form);
}

} // namespace cforms
