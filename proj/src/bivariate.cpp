#include "shimorin/bivariate.hpp"

#include "shimorin/errors.hpp"

namespace shimorin {

BivariateSeries::BivariateSeries(int truncation) : n_(truncation) {
    if (n_ < 0) throw ValidationError("truncation degree must be nonnegative");
    c_.resize(static_cast<std::size_t>(n_ + 1) * (n_ + 1));
}

std::size_t BivariateSeries::idx(int i, int j) const {
    if (i < 0 || j < 0 || i > n_ || j > n_) throw std::out_of_range("bivariate index out of range");
    return static_cast<std::size_t>(i) * (n_ + 1) + j;
}

BivariateSeries BivariateSeries::constant(int truncation, const Gaussian& c) {
    BivariateSeries f(truncation);
    f.at(0, 0) = c;
    return f;
}

BivariateSeries BivariateSeries::truncated(int n) const {
    BivariateSeries r(std::min(n, n_));
    for (int i = 0; i <= r.n_; ++i)
        for (int j = 0; j <= r.n_; ++j) r.at(i, j) = at(i, j);
    return r;
}

bool BivariateSeries::is_hermitian() const {
    for (int i = 0; i <= n_; ++i)
        for (int j = i; j <= n_; ++j)
            if (!(at(j, i) == at(i, j).conj())) return false;
    return true;
}

bool BivariateSeries::is_zero() const {
    for (auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

std::complex<double> BivariateSeries::evaluate(std::complex<double> z, std::complex<double> w) const {
    std::complex<double> wb = std::conj(w);
    std::complex<double> outer = 0.0;
    for (int i = n_; i >= 0; --i) {
        std::complex<double> inner = 0.0;
        for (int j = n_; j >= 0; --j) inner = inner * wb + at(i, j).to_complex();
        outer = outer * z + inner;
    }
    return outer;
}

BivariateSeries bivariate_add(const BivariateSeries& f, const BivariateSeries& g) {
    BivariateSeries r = f.truncated(g.truncation());
    for (int i = 0; i <= r.truncation(); ++i)
        for (int j = 0; j <= r.truncation(); ++j) r.at(i, j) += g.at(i, j);
    return r;
}

BivariateSeries bivariate_scale(const BivariateSeries& f, const Gaussian& c) {
    BivariateSeries r = f;
    for (int i = 0; i <= r.truncation(); ++i)
        for (int j = 0; j <= r.truncation(); ++j) r.at(i, j) *= c;
    return r;
}

BivariateSeries bivariate_mul(const BivariateSeries& f, const BivariateSeries& g) {
    int n = std::min(f.truncation(), g.truncation());
    BivariateSeries r(n);
    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q) {
            const Gaussian& x = f.at(p, q);
            if (x.is_zero()) continue;
            for (int i = p; i <= n; ++i)
                for (int j = q; j <= n; ++j) {
                    const Gaussian& y = g.at(i - p, j - q);
                    if (!y.is_zero()) r.at(i, j) += x * y;
                }
        }
    return r;
}

BivariateSeries bivariate_reciprocal(const BivariateSeries& f) {
    const Gaussian& f0 = f.at(0, 0);
    if (f0.is_zero()) throw ValidationError("reciprocal of a series with zero constant term");
    int n = f.truncation();
    BivariateSeries r(n);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            Gaussian acc = (i == 0 && j == 0) ? Gaussian(1) : Gaussian(0);
            for (int p = 0; p <= i; ++p)
                for (int q = 0; q <= j; ++q) {
                    if (p == 0 && q == 0) continue;
                    const Gaussian& x = f.at(p, q);
                    if (!x.is_zero()) acc -= x * r.at(i - p, j - q);
                }
            r.at(i, j) = acc / f0;
        }
    return r;
}

BivariateSeries bivariate_from_diagonal(const DiagonalSeries& d) {
    if (d.variables() != 1) throw ValidationError("bivariate embedding needs a one-variable series");
    BivariateSeries r(d.truncation());
    for (auto& [a, v] : d.terms()) r.at(a[0], a[0]) = Gaussian(v);
    return r;
}

}  // namespace shimorin
