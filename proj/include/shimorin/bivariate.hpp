#pragma once

#include <complex>
#include <vector>

#include "shimorin/scalar.hpp"
#include "shimorin/series.hpp"

namespace shimorin {

// sum_{i,j <= N} f_ij z^i w-bar^j, dense (N+1)x(N+1)
class BivariateSeries {
public:
    explicit BivariateSeries(int truncation);

    static BivariateSeries constant(int truncation, const Gaussian& c);

    int truncation() const { return n_; }
    const Gaussian& at(int i, int j) const { return c_[idx(i, j)]; }
    Gaussian& at(int i, int j) { return c_[idx(i, j)]; }

    BivariateSeries truncated(int n) const;
    bool is_hermitian() const;
    bool is_zero() const;

    // truncated Horner evaluation at (z, w); the conjugate of w is taken here
    std::complex<double> evaluate(std::complex<double> z, std::complex<double> w) const;

    bool operator==(const BivariateSeries& o) const { return n_ == o.n_ && c_ == o.c_; }

private:
    std::size_t idx(int i, int j) const;
    int n_;
    std::vector<Gaussian> c_;
};

BivariateSeries bivariate_add(const BivariateSeries& f, const BivariateSeries& g);
BivariateSeries bivariate_scale(const BivariateSeries& f, const Gaussian& c);
BivariateSeries bivariate_mul(const BivariateSeries& f, const BivariateSeries& g);
BivariateSeries bivariate_reciprocal(const BivariateSeries& f);
BivariateSeries bivariate_from_diagonal(const DiagonalSeries& d);

}  // namespace shimorin
