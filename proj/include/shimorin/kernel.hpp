#pragma once

#include <complex>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "shimorin/bivariate.hpp"
#include "shimorin/series.hpp"

namespace shimorin {

using Complex = std::complex<double>;
using Point = std::vector<Complex>;
using KernelEval = std::function<Complex(const Point&, const Point&)>;

struct KernelHandle {
    std::string name;
    nlohmann::json params = nlohmann::json::object();
    int variables = 1;
    KernelEval eval;
    std::function<DiagonalSeries(int)> diagonal;     // exact diagonal series, if any
    std::function<BivariateSeries(int)> bivariate;   // exact coefficient matrix, if any
    double radius = std::numeric_limits<double>::quiet_NaN();  // known convergence radius

    Complex operator()(const Point& z, const Point& w) const { return eval(z, w); }
    bool has_series() const { return static_cast<bool>(diagonal) || static_cast<bool>(bivariate); }
};

// x = <z, w> componentwise: prod_j (z_j conj(w_j))^{a_j}
Complex evaluate_diagonal(const DiagonalSeries& f, const Point& z, const Point& w);

KernelHandle handle_from_series(const std::string& name, const DiagonalSeries& f);
KernelHandle handle_from_series(const std::string& name, const BivariateSeries& f);

}  // namespace shimorin
