#include "shimorin/float_linalg.hpp"

#include <cmath>

#include "shimorin/errors.hpp"

namespace shimorin {

bool all_finite(const FloatMatrix& m) {
    for (Eigen::Index i = 0; i < m.size(); ++i)
        if (!std::isfinite(m.data()[i].real()) || !std::isfinite(m.data()[i].imag())) return false;
    return true;
}

double operator_norm(const FloatMatrix& m) {
    if (!all_finite(m)) throw ValidationError("matrix has non-finite entries");
    if (m.size() == 0) return 0.0;
    double scale = m.cwiseAbs().maxCoeff();
    if (scale == 0.0) return 0.0;
    FloatMatrix a = m / scale;
    FloatMatrix g = a.adjoint() * a;
    // g^(2^k) is dominated by the top eigenspace; its largest column is a good start vector
    FloatMatrix p = g;
    for (int k = 0; k < 60; ++k) {
        double mx = p.cwiseAbs().maxCoeff();
        if (mx == 0.0) break;
        p /= mx;
        p = p * p;
    }
    Eigen::Index col = 0;
    p.colwise().norm().maxCoeff(&col);
    Eigen::VectorXcd v = p.col(col);
    if (v.norm() == 0.0) v = Eigen::VectorXcd::Ones(g.rows());
    v.normalize();
    double lambda = 0.0;
    for (int it = 0; it < 200; ++it) {
        Eigen::VectorXcd w = g * v;
        double next = v.dot(w).real();
        double wn = w.norm();
        if (wn == 0.0) return 0.0;
        v = w / wn;
        if (it > 2 && std::abs(next - lambda) <= 1e-15 * std::abs(next)) {
            lambda = next;
            break;
        }
        lambda = next;
    }
    return scale * std::sqrt(std::max(lambda, 0.0));
}

double min_eigenvalue(const FloatMatrix& h) {
    if (h.rows() == 0) return 0.0;
    Eigen::SelfAdjointEigenSolver<FloatMatrix> es(h, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw NumericalBreakdown("eigenvalue solver failed");
    return es.eigenvalues().minCoeff();
}

FloatPsd psd_test_float(const FloatMatrix& h, double tol, double scale) {
    if (!all_finite(h)) throw NumericalBreakdown("Gram matrix has non-finite entries");
    FloatPsd r;
    r.tol = tol;
    if (h.rows() == 0) return r;
    Eigen::SelfAdjointEigenSolver<FloatMatrix> es(h, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw NumericalBreakdown("eigenvalue solver failed");
    r.min_eigenvalue = es.eigenvalues().minCoeff();
    r.norm = es.eigenvalues().cwiseAbs().maxCoeff();
    r.is_psd = r.min_eigenvalue >= -tol * std::max(r.norm, scale);
    return r;
}

FloatMatrix hermitian_sqrt(const FloatMatrix& h) {
    Eigen::SelfAdjointEigenSolver<FloatMatrix> es(h);
    if (es.info() != Eigen::Success) throw NumericalBreakdown("eigenvalue solver failed");
    Eigen::VectorXd d = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
}

FloatMatrix hermitian_pinv(const FloatMatrix& h, double cutoff) {
    Eigen::SelfAdjointEigenSolver<FloatMatrix> es(h);
    if (es.info() != Eigen::Success) throw NumericalBreakdown("eigenvalue solver failed");
    Eigen::VectorXd d = es.eigenvalues();
    for (Eigen::Index i = 0; i < d.size(); ++i) d(i) = std::abs(d(i)) > cutoff ? 1.0 / d(i) : 0.0;
    return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
}

FloatMatrix assemble_blocks(const FloatMatrix& A, const FloatMatrix& B, const FloatMatrix& C, const FloatMatrix& D) {
    FloatMatrix m(A.rows() + C.rows(), A.cols() + B.cols());
    m << A, B, C, D;
    return m;
}

ParrottResult parrott_complete(const FloatMatrix& A, const FloatMatrix& C, const FloatMatrix& D, double slack) {
    if (A.cols() != C.cols() || C.rows() != D.rows())
        throw ValidationError("Parrott blocks have incompatible dimensions");
    for (auto* m : {&A, &C, &D})
        if (!all_finite(*m)) throw ValidationError("Parrott blocks have non-finite entries");
    ParrottResult r;
    FloatMatrix col(A.rows() + C.rows(), A.cols());
    col << A, C;
    FloatMatrix row(C.rows(), C.cols() + D.cols());
    row << C, D;
    r.column_norm = operator_norm(col);
    r.row_norm = operator_norm(row);
    if (r.column_norm > 1.0 + slack || r.row_norm > 1.0 + slack)
        throw ValidationError("Parrott constraints violated: column norm " + std::to_string(r.column_norm) +
                              ", row norm " + std::to_string(r.row_norm));
    // Completing at unit scale and scaling back keeps the result within max(column, row) norm.
    double mu = std::max(r.column_norm, r.row_norm);
    if (mu == 0.0) {
        r.B = FloatMatrix::Zero(A.rows(), D.cols());
        r.completed_norm = 0.0;
        return r;
    }
    FloatMatrix a = A / mu, c = C / mu, d = D / mu;
    const double cutoff = 1e-12;
    FloatMatrix iq = FloatMatrix::Identity(c.cols(), c.cols());
    FloatMatrix ir = FloatMatrix::Identity(c.rows(), c.rows());
    FloatMatrix t = hermitian_sqrt(iq - c.adjoint() * c);
    FloatMatrix u = hermitian_sqrt(ir - c * c.adjoint());
    FloatMatrix X = a * hermitian_pinv(t, cutoff);
    FloatMatrix Y = hermitian_pinv(u, cutoff) * d;
    r.B = -mu * (X * c.adjoint() * Y);
    r.completed_norm = operator_norm(assemble_blocks(A, r.B, C, D));
    return r;
}

nlohmann::json to_json(const FloatMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
        rows.push_back(row);
    }
    return rows;
}

FloatMatrix float_matrix_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw ValidationError("float matrix must be an array of rows");
    Eigen::Index rows = static_cast<Eigen::Index>(j.size());
    Eigen::Index cols = rows ? static_cast<Eigen::Index>(j[0].size()) : 0;
    FloatMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        if (!j[i].is_array() || static_cast<Eigen::Index>(j[i].size()) != cols)
            throw ValidationError("float matrix rows must have equal length");
        for (Eigen::Index k = 0; k < cols; ++k) {
            const auto& e = j[i][k];
            if (e.is_number())
                m(i, k) = e.get<double>();
            else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number())
                m(i, k) = {e[0].get<double>(), e[1].get<double>()};
            else
                throw ValidationError("float matrix entries must be numbers or [re, im] pairs");
        }
    }
    if (!all_finite(m)) throw ValidationError("float matrix has non-finite entries");
    return m;
}

}  // namespace shimorin
