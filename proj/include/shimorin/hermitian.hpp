#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "shimorin/bivariate.hpp"
#include "shimorin/scalar.hpp"

namespace shimorin {

// Hermitian matrix over the Gaussian rationals; Hermitian symmetry is checked on construction.
class HermitianExact {
public:
    explicit HermitianExact(int n);  // zero matrix
    HermitianExact(int n, std::vector<Gaussian> row_major);

    static HermitianExact identity(int n);
    // leading (n+1)x(n+1) block of a bivariate coefficient matrix
    static HermitianExact from_bivariate(const BivariateSeries& f, int n);

    int size() const { return n_; }
    const Gaussian& operator()(int i, int j) const { return a_[i * n_ + j]; }

    HermitianExact principal(const std::vector<int>& idx) const;
    // v* H v, always real for Hermitian H
    Rational quadratic_form(const std::vector<Gaussian>& v) const;
    Eigen::MatrixXcd to_float() const;

private:
    int n_;
    std::vector<Gaussian> a_;
};

struct PsdWitness {
    enum class Kind { NegativeDiagonal, ZeroDiagonalRow, NegativeMinor };
    Kind kind;
    int i = -1;                   // offending pivot (original indexing)
    int j = -1;                   // partner column for ZeroDiagonalRow
    std::vector<int> minor;       // principal index set with negative determinant, ascending
    Rational minor_determinant;   // < 0
    std::vector<Gaussian> vector; // v with v* H v < 0
    Rational value;               // v* H v
};

struct PsdVerdict {
    bool is_psd = true;
    int rank = 0;
    std::optional<PsdWitness> witness;
};

std::string kind_name(PsdWitness::Kind k);

// exact determinant (real for Hermitian input)
Rational determinant(const HermitianExact& h);

// Exact recursive pivoted LDL*.
PsdVerdict psd_test_exact(const HermitianExact& h);

// Positivity of the congruent Gram form is equivalent to the contraction property.
PsdVerdict contraction_test_exact(const HermitianExact& g);

nlohmann::json to_json(const HermitianExact& h);
nlohmann::json to_json(const PsdVerdict& v);
HermitianExact hermitian_from_json(const nlohmann::json& j);

}  // namespace shimorin
