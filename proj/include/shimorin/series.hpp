#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "shimorin/multi_index.hpp"
#include "shimorin/scalar.hpp"

namespace shimorin {

// Truncated diagonal power series sum f_a x^a, x^a standing for (z w-bar)^a.
// Only nonzero coefficients with |a| <= N are stored.
class DiagonalSeries {
public:
    using Terms = std::map<MultiIndex, Rational, GradedLess>;

    DiagonalSeries(int variables, int truncation);

    static DiagonalSeries constant(int variables, int truncation, const Rational& c);
    // one variable: coefficient list f_0, f_1, ...
    static DiagonalSeries univariate(const std::vector<Rational>& coeffs, int truncation);

    int variables() const { return g_; }
    int truncation() const { return n_; }
    const Terms& terms() const { return c_; }

    const Rational& operator[](const MultiIndex& a) const;
    const Rational& coeff(int n) const;  // one variable only
    void set(const MultiIndex& a, const Rational& v);

    // the same series truncated at min(n, truncation())
    DiagonalSeries truncated(int n) const;
    bool is_zero() const { return c_.empty(); }
    // constant term 1, every stored coefficient positive
    bool is_normalized_kernel() const;
    // first index (graded order) with a negative coefficient
    std::optional<MultiIndex> first_negative() const;

    std::string str() const;

    bool operator==(const DiagonalSeries& o) const {
        return g_ == o.g_ && n_ == o.n_ && c_ == o.c_;
    }

private:
    int g_;
    int n_;
    Terms c_;
};

DiagonalSeries series_add(const DiagonalSeries& f, const DiagonalSeries& g);
DiagonalSeries series_sub(const DiagonalSeries& f, const DiagonalSeries& g);
DiagonalSeries series_scale(const DiagonalSeries& f, const Rational& c);
DiagonalSeries series_mul(const DiagonalSeries& f, const DiagonalSeries& g);
DiagonalSeries series_reciprocal(const DiagonalSeries& f);
// 1 - f at f's truncation
DiagonalSeries one_minus(const DiagonalSeries& f);

}  // namespace shimorin
