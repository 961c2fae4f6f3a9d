#pragma once

#include <complex>
#include <string>

#include <gmpxx.h>

namespace shimorin {

using Rational = mpq_class;

Rational parse_rational(const std::string& s);
std::string to_string(const Rational& q);

// Rational nearest to x on the grid of multiples of `step` (step = 1/denominator).
Rational round_to_grid(double x, long denominator);

struct Gaussian {
    Rational re;
    Rational im;

    Gaussian() : re(0), im(0) {}
    Gaussian(Rational r) : re(std::move(r)), im(0) {}
    Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    Gaussian(long r) : re(r), im(0) {}

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }
    Gaussian conj() const { return {re, -im}; }
    Rational norm2() const { return re * re + im * im; }
    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

    Gaussian& operator+=(const Gaussian& o);
    Gaussian& operator-=(const Gaussian& o);
    Gaussian& operator*=(const Gaussian& o);
    Gaussian& operator/=(const Gaussian& o);
};

Gaussian operator+(Gaussian a, const Gaussian& b);
Gaussian operator-(Gaussian a, const Gaussian& b);
Gaussian operator-(const Gaussian& a);
Gaussian operator*(Gaussian a, const Gaussian& b);
Gaussian operator/(Gaussian a, const Gaussian& b);
bool operator==(const Gaussian& a, const Gaussian& b);

}  // namespace shimorin
