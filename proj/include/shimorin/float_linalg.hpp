#pragma once

#include <Eigen/Dense>
#include <json.hpp>

namespace shimorin {

using FloatMatrix = Eigen::MatrixXcd;

bool all_finite(const FloatMatrix& m);

// Largest singular value by power iteration on M*M with repeated squaring.
double operator_norm(const FloatMatrix& m);

// Smallest eigenvalue of a Hermitian float matrix.
double min_eigenvalue(const FloatMatrix& h);

// float PSD check: min eigenvalue >= -tol * max(||H||, scale); `scale` is the size of the matrices H was formed from
struct FloatPsd {
    bool is_psd = true;
    double min_eigenvalue = 0;
    double norm = 0;
    double tol = 1e-9;
};
FloatPsd psd_test_float(const FloatMatrix& h, double tol = 1e-9, double scale = 0);

// V diag(f(lambda)) V* for a Hermitian argument
FloatMatrix hermitian_sqrt(const FloatMatrix& h);
FloatMatrix hermitian_pinv(const FloatMatrix& h, double cutoff);

struct ParrottResult {
    FloatMatrix B;
    double column_norm = 0;     // ||[A; C]||
    double row_norm = 0;        // ||[C D]||
    double completed_norm = 0;  // ||[[A, B], [C, D]]||
};

// Central completion B = -X C* Y of [[A, ?], [C, D]].
ParrottResult parrott_complete(const FloatMatrix& A, const FloatMatrix& C, const FloatMatrix& D, double slack = 1e-9);

FloatMatrix assemble_blocks(const FloatMatrix& A, const FloatMatrix& B, const FloatMatrix& C, const FloatMatrix& D);

nlohmann::json to_json(const FloatMatrix& m);
FloatMatrix float_matrix_from_json(const nlohmann::json& j);

}  // namespace shimorin
