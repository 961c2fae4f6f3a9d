#include "shimorin/series.hpp"

#include <sstream>

#include "shimorin/errors.hpp"

namespace shimorin {

namespace {

const Rational& zero_rational() {
    static const Rational z(0);
    return z;
}

void require_same_variables(const DiagonalSeries& f, const DiagonalSeries& g) {
    if (f.variables() != g.variables())
        throw ValidationError("variable-count mismatch: " + std::to_string(f.variables()) + " vs " +
                              std::to_string(g.variables()));
}

}  // namespace

DiagonalSeries::DiagonalSeries(int variables, int truncation) : g_(variables), n_(truncation) {
    if (g_ < 1) throw ValidationError("variable count must be positive");
    if (n_ < 0) throw ValidationError("truncation degree must be nonnegative");
}

DiagonalSeries DiagonalSeries::constant(int variables, int truncation, const Rational& c) {
    DiagonalSeries f(variables, truncation);
    f.set(MultiIndex::zero(variables), c);
    return f;
}

DiagonalSeries DiagonalSeries::univariate(const std::vector<Rational>& coeffs, int truncation) {
    DiagonalSeries f(1, truncation);
    for (std::size_t n = 0; n < coeffs.size() && static_cast<int>(n) <= truncation; ++n)
        f.set(MultiIndex::scalar(static_cast<int>(n)), coeffs[n]);
    return f;
}

const Rational& DiagonalSeries::operator[](const MultiIndex& a) const {
    auto it = c_.find(a);
    return it == c_.end() ? zero_rational() : it->second;
}

const Rational& DiagonalSeries::coeff(int n) const {
    if (g_ != 1) throw ValidationError("coeff(n) needs a one-variable series");
    return (*this)[MultiIndex::scalar(n)];
}

void DiagonalSeries::set(const MultiIndex& a, const Rational& v) {
    if (a.variables() != g_) throw ValidationError("index " + a.str() + " has wrong variable count");
    if (a.degree() > n_) return;
    if (sgn(v) == 0)
        c_.erase(a);
    else
        c_[a] = v;
}

DiagonalSeries DiagonalSeries::truncated(int n) const {
    DiagonalSeries r(g_, std::min(n, n_));
    for (auto& [a, v] : c_)
        if (a.degree() <= r.n_) r.c_.emplace(a, v);
    return r;
}

bool DiagonalSeries::is_normalized_kernel() const {
    if ((*this)[MultiIndex::zero(g_)] != 1) return false;
    for (auto& [a, v] : c_)
        if (sgn(v) <= 0) return false;
    return true;
}

std::optional<MultiIndex> DiagonalSeries::first_negative() const {
    for (auto& [a, v] : c_)
        if (sgn(v) < 0) return a;
    return std::nullopt;
}

std::string DiagonalSeries::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [a, v] : c_) {
        if (!first) os << (sgn(v) < 0 ? " - " : " + ");
        else if (sgn(v) < 0) os << "-";
        first = false;
        Rational m = abs(v);
        bool unit = m == 1 && !a.is_zero();
        if (!unit) os << m.get_str();
        if (a.is_zero()) continue;
        for (int j = 0; j < g_; ++j) {
            if (a[j] == 0) continue;
            os << "x";
            if (g_ > 1) os << j + 1;
            if (a[j] > 1) os << "^" << a[j];
        }
    }
    return os.str();
}

DiagonalSeries series_add(const DiagonalSeries& f, const DiagonalSeries& g) {
    require_same_variables(f, g);
    DiagonalSeries r = f.truncated(g.truncation());
    for (auto& [a, v] : g.terms())
        if (a.degree() <= r.truncation()) r.set(a, r[a] + v);
    return r;
}

DiagonalSeries series_sub(const DiagonalSeries& f, const DiagonalSeries& g) {
    return series_add(f, series_scale(g, -1));
}

DiagonalSeries series_scale(const DiagonalSeries& f, const Rational& c) {
    DiagonalSeries r(f.variables(), f.truncation());
    for (auto& [a, v] : f.terms()) r.set(a, c * v);
    return r;
}

DiagonalSeries series_mul(const DiagonalSeries& f, const DiagonalSeries& g) {
    require_same_variables(f, g);
    int n = std::min(f.truncation(), g.truncation());
    DiagonalSeries::Terms acc;
    for (auto& [a, x] : f.terms()) {
        if (a.degree() > n) break;
        for (auto& [b, y] : g.terms()) {
            if (a.degree() + b.degree() > n) break;
            acc[a + b] += x * y;
        }
    }
    DiagonalSeries r(f.variables(), n);
    for (auto& [a, v] : acc) r.set(a, v);
    return r;
}

DiagonalSeries series_reciprocal(const DiagonalSeries& f) {
    int g = f.variables();
    const Rational& f0 = f[MultiIndex::zero(g)];
    if (sgn(f0) == 0) throw ValidationError("reciprocal of a series with zero constant term");
    DiagonalSeries r(g, f.truncation());
    for (auto& a : indices_up_to(g, f.truncation())) {
        Rational acc = a.is_zero() ? Rational(1) : Rational(0);
        for (auto& [u, fu] : f.terms()) {
            if (u.degree() > a.degree()) break;
            if (u.is_zero() || !u.leq(a)) continue;
            acc -= fu * r[a - u];
        }
        r.set(a, acc / f0);
    }
    return r;
}

DiagonalSeries one_minus(const DiagonalSeries& f) {
    return series_sub(DiagonalSeries::constant(f.variables(), f.truncation(), 1), f);
}

}  // namespace shimorin
