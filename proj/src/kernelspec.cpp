#include "shimorin/kernelspec.hpp"

#include <fstream>

#include "shimorin/errors.hpp"

namespace shimorin {

namespace {

int require_int(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw ValidationError(std::string("kernelspec: missing integer field '") + key + "'");
    return j[key].get<int>();
}

Rational rational_field(const json& j, const char* key) {
    if (!j.contains(key)) return Rational(0);
    if (!j[key].is_string()) throw ValidationError(std::string("kernelspec: field '") + key + "' must be a \"p/q\" string");
    return parse_rational(j[key].get<std::string>());
}

}  // namespace

json to_json(const MultiIndex& a) { return a.exponents(); }

MultiIndex multi_index_from_json(const json& j) {
    if (!j.is_array()) throw ValidationError("multi-index must be an integer array");
    std::vector<int> e;
    for (auto& x : j) {
        if (!x.is_number_integer()) throw ValidationError("multi-index must be an integer array");
        e.push_back(x.get<int>());
    }
    return MultiIndex(std::move(e));
}

json to_json(const DiagonalSeries& f) {
    json coeffs = json::array();
    for (auto& [a, v] : f.terms()) coeffs.push_back({{"index", to_json(a)}, {"value", to_string(v)}});
    return {{"format", "kernelspec/1"},
            {"variables", f.variables()},
            {"truncation_degree", f.truncation()},
            {"kind", "diagonal"},
            {"coefficients", coeffs}};
}

json to_json(const BivariateSeries& f) {
    json coeffs = json::array();
    int n = f.truncation();
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            const Gaussian& c = f.at(i, j);
            if (!c.is_zero()) coeffs.push_back({{"i", i}, {"j", j}, {"re", to_string(c.re)}, {"im", to_string(c.im)}});
        }
    return {{"format", "kernelspec/1"},
            {"variables", 1},
            {"truncation_degree", n},
            {"kind", "bivariate"},
            {"coefficients", coeffs}};
}

json to_json(const AnySeries& f) {
    return std::visit([](const auto& s) { return to_json(s); }, f);
}

AnySeries series_from_json(const json& j) {
    if (!j.is_object() || j.value("format", "") != "kernelspec/1")
        throw ValidationError("expected a kernelspec/1 object");
    int g = require_int(j, "variables");
    int n = require_int(j, "truncation_degree");
    std::string kind = j.value("kind", "");
    const json& coeffs = j.contains("coefficients") ? j["coefficients"] : json::array();
    if (!coeffs.is_array()) throw ValidationError("kernelspec: coefficients must be an array");
    if (kind == "diagonal") {
        DiagonalSeries f(g, n);
        for (auto& c : coeffs) {
            MultiIndex a = multi_index_from_json(c.at("index"));
            if (a.variables() != g) throw ValidationError("kernelspec: index " + a.str() + " has wrong length");
            if (a.degree() > n) throw ValidationError("kernelspec: index " + a.str() + " exceeds truncation degree");
            f.set(a, rational_field(c, "value"));
        }
        return f;
    }
    if (kind == "bivariate") {
        if (g != 1) throw ValidationError("kernelspec: bivariate series must have one variable");
        BivariateSeries f(n);
        for (auto& c : coeffs) {
            int i = require_int(c, "i"), jj = require_int(c, "j");
            if (i < 0 || jj < 0 || i > n || jj > n) throw ValidationError("kernelspec: bivariate entry out of range");
            f.at(i, jj) = Gaussian(rational_field(c, "re"), rational_field(c, "im"));
        }
        return f;
    }
    throw ValidationError("kernelspec: kind must be \"diagonal\" or \"bivariate\"");
}

DiagonalSeries diagonal_from_json(const json& j) {
    AnySeries s = series_from_json(j);
    if (auto* d = std::get_if<DiagonalSeries>(&s)) return *d;
    throw ValidationError("expected a diagonal kernelspec");
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace shimorin
