#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shimorin/catalog.hpp"
#include "shimorin/errors.hpp"
#include "shimorin/interpolation.hpp"
#include "shimorin/sampling.hpp"

using namespace shimorin;

namespace {

double max_abs(const FloatMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("random grids") {
    auto g = random_grid(2, 50, 0.7, 9);
    CHECK(g.points.size() == 50);
    for (auto& p : g.points) {
        double r2 = std::norm(p[0]) + std::norm(p[1]);
        CHECK(r2 <= 0.49 + 1e-15);
    }
    auto again = random_grid(2, 50, 0.7, 9);
    CHECK(again.points == g.points);
    CHECK(random_grid(2, 50, 0.7, 10).points != g.points);
    auto j = grid_from_json({{"seed", 9}, {"radius", 0.7}, {"count", 50}, {"variables", 2}});
    CHECK(j.points == g.points);
    CHECK_THROWS_AS(random_grid(1, 5, -1, 0), ValidationError);
    CHECK_THROWS_AS(grid_from_json({{"seed", 1}}), ValidationError);
}

TEST_CASE("gram positivity") {
    auto grid = random_grid(1, 40, 1.0 / 3, 1);
    auto h = g_lambda(0.2).h;
    auto v = gram_psd(h, grid);
    CHECK(v.psd.is_psd);
    CHECK(v.psd.min_eigenvalue >= -1e-9 * v.psd.norm);
    CHECK(v.seed == 1);

    CHECK(gram_psd(szego(), random_grid(1, 30, 0.95, 2)).psd.is_psd);

    KernelHandle bad = bergman();
    bad.eval = [](const Point& z, const Point& w) {
        Complex x = z[0] * std::conj(w[0]);
        return (1.0 - 3.0 * x) / ((1.0 - x) * (1.0 - x));
    };
    auto pts = random_grid(1, 30, 0.5, 3);
    pts.points.push_back({Complex(0.5, 0)});
    pts.points.push_back({Complex(0, 0)});
    CHECK_FALSE(gram_psd(bad, pts).psd.is_psd);

    FloatMatrix gm = gram_matrix(szego(), grid.points);
    CHECK(max_abs(gm - gm.adjoint()) < 1e-15);
}

TEST_CASE("span projection") {
    auto l = geometric(2);
    int N = 30;
    auto full = span_projection(l, {}, N + 1, N);
    CHECK(max_abs(full.P - FloatMatrix::Identity(N + 1, N + 1)) < 1e-12);

    Complex u(0.3, -0.2);
    auto one = span_projection(l, {u}, 0, 80);
    auto lu = kernel_schur_point(l, {u});
    std::vector<Complex> pts{Complex(0.1, 0.2), Complex(-0.4, 0), Complex(0.2, -0.5)};
    for (auto z : pts)
        for (auto w : pts) CHECK(std::abs(complement_kernel(l, one, z, w) - lu({z}, {w})) < 1e-10);

    std::vector<Complex> lambda{Complex(0.1, 0.1), Complex(-0.3, 0.2), Complex(0.4, -0.1)};
    auto p = span_projection(l, lambda, 2, N);
    CHECK(max_abs(p.P * p.P - p.P) < 1e-10);
    CHECK(max_abs(p.P - p.P.adjoint()) < 1e-10);
    for (auto lam : lambda)
        for (auto w : pts) CHECK(std::abs(complement_kernel(l, p, lam, w)) < 1e-9);

    CHECK_THROWS_AS(span_projection(l, {u, u}, 0, N), NumericalBreakdown);
    CHECK_THROWS_AS(span_projection(l, {}, N + 5, N), ValidationError);
}

TEST_CASE("adjoining a point near the origin approaches adjoining a monomial") {
    auto l = bergman();
    int N = 30;
    std::vector<Complex> lambda{Complex(0.5, 0.1)};
    auto target = span_projection(l, lambda, 2, N);
    double prev = 1e300;
    for (double t : {1e-1, 1e-2, 1e-3}) {
        std::vector<Complex> with = lambda;
        with.push_back(Complex(t, 0));
        auto p = span_projection(l, with, 1, N);
        double gap = operator_norm(p.P - target.P);
        CHECK(gap < prev);
        prev = gap;
    }
    CHECK(prev < 1e-2);
}

TEST_CASE("pick feasibility with sampled kernels") {
    auto grid = random_grid(1, 6, 0.3, 4);
    auto gl = g_lambda(0.25);
    PickProblem p{grid.points, {}, bergman(), gl.s};
    for (auto& z : grid.points) {
        FloatMatrix w(1, 1);
        w << 0.5 * z[0];
        p.targets.push_back(w);
    }
    CHECK(psd_test_float(pick_matrix(p)).is_psd == gram_psd(gl.s, grid).psd.is_psd);
}
