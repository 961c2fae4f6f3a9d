#include "shimorin/scalar.hpp"

#include <cmath>

#include "shimorin/errors.hpp"

namespace shimorin {

namespace {

bool is_decimal_integer(const std::string& s) {
    std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    std::string p = s.substr(0, slash);
    std::string q = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!is_decimal_integer(p) || !is_decimal_integer(q) || q[0] == '-')
        throw ValidationError("malformed rational '" + s + "'");
    mpz_class num(p, 10), den(q, 10);
    if (den == 0) throw ValidationError("zero denominator in '" + s + "'");
    Rational r(num, den);
    r.canonicalize();
    if (r.get_den() != den)
        throw ValidationError("rational '" + s + "' is not in lowest terms");
    return r;
}

std::string to_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational round_to_grid(double x, long denominator) {
    if (!std::isfinite(x)) throw NumericalBreakdown("cannot round a non-finite value");
    double scaled = std::nearbyint(x * static_cast<double>(denominator));
    mpz_class num;
    mpz_set_d(num.get_mpz_t(), scaled);
    Rational r(num, mpz_class(denominator));
    r.canonicalize();
    return r;
}

Gaussian& Gaussian::operator+=(const Gaussian& o) {
    re += o.re;
    im += o.im;
    return *this;
}

Gaussian& Gaussian::operator-=(const Gaussian& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

Gaussian& Gaussian::operator*=(const Gaussian& o) {
    if (is_real() && o.is_real()) {
        re *= o.re;
        return *this;
    }
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

Gaussian& Gaussian::operator/=(const Gaussian& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    if (o.is_real()) {
        re /= o.re;
        im /= o.re;
        return *this;
    }
    Rational n = o.norm2();
    *this *= o.conj();
    re /= n;
    im /= n;
    return *this;
}

Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
Gaussian operator-(const Gaussian& a) { return {-a.re, -a.im}; }
Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
bool operator==(const Gaussian& a, const Gaussian& b) { return a.re == b.re && a.im == b.im; }

}  // namespace shimorin
