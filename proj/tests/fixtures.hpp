#pragma once

#include <random>

#include "shimorin/catalog.hpp"
#include "shimorin/float_linalg.hpp"
#include "shimorin/interpolation.hpp"
#include "shimorin/series.hpp"

namespace fixtures {

using namespace shimorin;

inline DiagonalSeries poly(std::vector<long> c, int n) {
    std::vector<Rational> q(c.begin(), c.end());
    return DiagonalSeries::univariate(q, n);
}

inline DiagonalSeries geometric_series(long c, int n) { return series_reciprocal(poly({1, -c}, n)); }

inline Rational grid_rational(double x, long den = 1000000) { return round_to_grid(x, den); }

// Random contractive data on F = {|a| <= top}: Gaussian entries scaled so that ||C|| <= 0.95 (or the
// given target), rounded to a rational grid, and rescaled until the exact Gram form is PSD.
inline CaratheodoryData random_contractive_data(std::mt19937& rng, int g, int J, int top, const DiagonalSeries& k,
                                                const DiagonalSeries& l, double target = 0.95) {
    std::normal_distribution<double> nd;
    CaratheodoryData d;
    d.variables = g;
    d.J = J;
    for (auto& a : indices_up_to(g, top)) d.F.insert(a);
    std::map<MultiIndex, FloatMatrix, GradedLess> raw;
    for (auto& a : d.F) {
        FloatMatrix m(J, J);
        for (int i = 0; i < J; ++i)
            for (int j = 0; j < J; ++j) m(i, j) = {nd(rng), nd(rng)};
        raw[a] = m;
    }
    auto build = [&](double s) {
        for (auto& [a, m] : raw) {
            ExactMatrix e(J, J);
            for (int i = 0; i < J; ++i)
                for (int j = 0; j < J; ++j)
                    e(i, j) = Gaussian(grid_rational(s * m(i, j).real()), grid_rational(s * m(i, j).imag()));
            d.c[a] = e;
        }
    };
    build(1.0);
    double s = target / std::max(1e-12, operator_norm(caratheodory_matrix(d, k, l)));
    for (int attempt = 0; attempt < 20; ++attempt) {
        build(s);
        if (psd_test_exact(caratheodory_gram(d, k, l)).is_psd) return d;
        s *= 0.9;
    }
    for (auto& [a, m] : d.c) m = ExactMatrix(J, J);
    return d;
}

}  // namespace fixtures
