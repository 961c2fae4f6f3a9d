#include "shimorin/sampling.hpp"

#include <cmath>
#include <random>

#include "shimorin/errors.hpp"
#include "shimorin/interpolation.hpp"

namespace shimorin {

Grid random_grid(int variables, int count, double radius, std::uint64_t seed) {
    if (variables < 1 || count < 0 || !(radius > 0)) throw ValidationError("grid needs g >= 1, count >= 0, radius > 0");
    Grid grid{variables, seed, radius, count, {}};
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    int attempts = 0;
    while (static_cast<int>(grid.points.size()) < count) {
        if (++attempts > 100 * (count + 1)) throw NumericalBreakdown("could not draw separated grid points");
        Point p(variables);
        double len = 0;
        for (auto& x : p) {
            x = {normal(rng), normal(rng)};
            len += std::norm(x);
        }
        double r = radius * std::pow(unif(rng), 1.0 / (2.0 * variables)) / std::sqrt(len);
        for (auto& x : p) x *= r;
        bool ok = true;
        for (auto& q : grid.points) {
            double d = 0;
            for (int j = 0; j < variables; ++j) d = std::max(d, std::abs(p[j] - q[j]));
            if (d < 1e-8) ok = false;
        }
        if (ok) grid.points.push_back(std::move(p));
    }
    return grid;
}

Grid grid_from_json(const nlohmann::json& j) {
    try {
        return random_grid(j.value("variables", 1), j.at("count").get<int>(), j.at("radius").get<double>(),
                           j.value("seed", std::uint64_t{0}));
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("grid spec: ") + e.what());
    }
}

FloatMatrix gram_matrix(const KernelHandle& k, const std::vector<Point>& points) {
    int n = static_cast<int>(points.size());
    FloatMatrix g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Complex v = k(points[i], points[j]);
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                throw NumericalBreakdown("kernel " + k.name + " evaluated to a non-finite value");
            g(i, j) = v;
        }
    return g;
}

GramVerdict gram_psd(const KernelHandle& k, const Grid& grid, double tol) {
    return {psd_test_float(gram_matrix(k, grid.points), tol), grid.seed, grid.count, grid.radius};
}

namespace {

std::vector<double> diagonal_coefficients(const KernelHandle& l, int truncation) {
    if (!l.diagonal || l.variables != 1) throw ValidationError("projection needs a one-variable diagonal kernel");
    DiagonalSeries f = l.diagonal(truncation);
    std::vector<double> c(truncation + 1);
    for (int n = 0; n <= truncation; ++n) {
        c[n] = f.coeff(n).get_d();
        if (!(c[n] > 0)) throw ValidationError("projection needs positive kernel coefficients");
    }
    return c;
}

}  // namespace

Eigen::VectorXcd kernel_section(const KernelHandle& l, Complex w, int truncation) {
    auto c = diagonal_coefficients(l, truncation);
    Eigen::VectorXcd v(truncation + 1);
    Complex p = 1, wb = std::conj(w);
    for (int n = 0; n <= truncation; ++n, p *= wb) v(n) = std::sqrt(c[n]) * p;
    return v;
}

Projection span_projection(const KernelHandle& l, const std::vector<Complex>& lambda, int m, int truncation,
                           double max_condition) {
    if (m < 0 || m > truncation + 1) throw ValidationError("monomial count out of range");
    auto c = diagonal_coefficients(l, truncation);
    int cols = m + static_cast<int>(lambda.size());
    FloatMatrix V = FloatMatrix::Zero(truncation + 1, cols);
    for (int j = 0; j < m; ++j) V(j, j) = 1.0 / std::sqrt(c[j]);
    for (std::size_t i = 0; i < lambda.size(); ++i) V.col(m + i) = kernel_section(l, lambda[i], truncation);
    Projection r;
    r.truncation = truncation;
    if (cols == 0) {
        r.P = FloatMatrix::Zero(truncation + 1, truncation + 1);
        r.condition = 1;
        return r;
    }
    for (int j = 0; j < cols; ++j) V.col(j).normalize();
    FloatMatrix G = V.adjoint() * V;
    Eigen::SelfAdjointEigenSolver<FloatMatrix> es(G, Eigen::EigenvaluesOnly);
    double lo = es.eigenvalues().minCoeff(), hi = es.eigenvalues().maxCoeff();
    r.condition = lo > 0 ? hi / lo : std::numeric_limits<double>::infinity();
    if (!(r.condition <= max_condition))
        throw NumericalBreakdown("spanning set is ill-conditioned (condition " + std::to_string(r.condition) + ")");
    r.P = V * G.ldlt().solve(V.adjoint());
    return r;
}

Complex complement_kernel(const KernelHandle& l, const Projection& p, Complex z, Complex w) {
    Eigen::VectorXcd kz = kernel_section(l, z, p.truncation), kw = kernel_section(l, w, p.truncation);
    Eigen::VectorXcd r = kw - p.P * kw;
    return kz.dot(r);
}

nlohmann::json to_json(const GramVerdict& v) {
    return {{"is_psd", v.psd.is_psd}, {"min_eigenvalue", v.psd.min_eigenvalue}, {"norm", v.psd.norm},
            {"tol", v.psd.tol}, {"seed", v.seed}, {"count", v.count}, {"radius", v.radius}, {"method", "float"}};
}

}  // namespace shimorin
