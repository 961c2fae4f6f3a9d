#pragma once

#include <complex>
#include <vector>

#include <json.hpp>

#include "shimorin/bivariate.hpp"
#include "shimorin/hermitian.hpp"
#include "shimorin/kernel.hpp"
#include "shimorin/series.hpp"

namespace shimorin {

struct SchurChain {
    std::vector<BivariateSeries> stages;  // l^(0) .. l^(n)
    std::vector<Rational> pivots;         // l^(m-1)_{(m-1)(m-1)} for m = 1..n
};

// l^(m)_ij = l^(m-1)_ij - l^(m-1)_{i,m-1} l^(m-1)_{m-1,j} / l^(m-1)_{m-1,m-1}
SchurChain coeff_schur_chain(const BivariateSeries& l, int n);

struct QuotientVerdict {
    BivariateSeries quotient{0};
    PsdVerdict psd;
};

// exact PSD test of the degree-n coefficient matrix of stage * (1/k)
QuotientVerdict quotient_positivity(const BivariateSeries& stage, const DiagonalSeries& k, int n);

// l_[1..n](z,w) built by successive one-point Schur complements at u_1, ..., u_n
KernelHandle point_schur_chain(const KernelHandle& l, const std::vector<Point>& points);

struct LimitRow {
    double t;
    std::vector<double> schedule;  // u_1 .. u_n
    double deviation;              // sup over grid pairs
};

struct LimitReport {
    int n = 0;
    int truncation = 0;
    std::vector<LimitRow> rows;
    double truncation_floor = 0;  // size of the outermost coefficient shell on the grid
    bool decreasing = true;
};

// Compares the iterated point chain at u_m = t^(3^(n-m+1)) with the coefficient chain l^(n),
// in 50-digit arithmetic on the truncated series.
LimitReport limit_identity_check(const BivariateSeries& l, int n, const std::vector<double>& ts,
                                 const std::vector<std::complex<double>>& grid);

nlohmann::json to_json(const SchurChain& c);
nlohmann::json to_json(const LimitReport& r);

}  // namespace shimorin
