#include "jackal/json_io.hpp"

#include <fstream>

#include <unistd.h>

namespace jackal {

namespace {

nlohmann::json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return static_cast<long long>(v.get_si());
    return v.get_str();
}

Int int_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::domain_error("malformed integer: " + j.dump());
}

}  // namespace

nlohmann::json alpha_poly_to_json(const AlphaPoly& p) {
    Int den = 1;
    for (const Rational& c : p.coeffs()) {
        Int d = c.get_den();
        den = den / gcd(den, d) * d;  // lcm
    }
    nlohmann::json coeffs = nlohmann::json::array();
    for (const Rational& c : p.coeffs()) {
        Rational scaled = c * Rational(den);
        coeffs.push_back(int_to_json(scaled.get_num()));
    }
    return {{"den", int_to_json(den)}, {"coeffs", coeffs}};
}

AlphaPoly alpha_poly_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("den") || !j.contains("coeffs"))
        throw std::domain_error("malformed polynomial: " + j.dump());
    Int den = int_from_json(j.at("den"));
    std::vector<Rational> coeffs;
    for (const nlohmann::json& c : j.at("coeffs"))
        coeffs.push_back(make_rational(int_from_json(c), den));
    return AlphaPoly(std::move(coeffs));
}

nlohmann::json partition_to_json(const Partition& lam) {
    nlohmann::json out = nlohmann::json::array();
    for (int p : lam.parts()) out.push_back(p);
    return out;
}

Partition partition_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::domain_error("malformed partition: " + j.dump());
    std::vector<int> parts;
    for (const nlohmann::json& p : j) parts.push_back(p.get<int>());
    return Partition(std::move(parts));
}

nlohmann::json symfunc_to_json(const SymFuncM& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [lam, c] : f.terms()) {
        if (!c.is_poly())
            throw std::domain_error("coefficient of m[" + lam.str() + "] is not a polynomial");
        terms.push_back({{"partition", partition_to_json(lam)},
                         {"coeff", alpha_poly_to_json(c.as_poly())}});
    }
    return {{"basis", "m"}, {"degree", f.degree()}, {"terms", terms}};
}

SymFuncM symfunc_from_json(const nlohmann::json& j) {
    if (!j.is_object() || j.value("basis", "") != "m")
        throw std::domain_error("malformed symmetric function: " + j.dump());
    SymFuncM f(j.at("degree").get<int>());
    for (const nlohmann::json& t : j.at("terms"))
        f.add_term(partition_from_json(t.at("partition")),
                   AlphaRat(alpha_poly_from_json(t.at("coeff"))));
    return f;
}

void atomic_write(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp" + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << content;
        if (!out.flush()) throw std::runtime_error("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace jackal
