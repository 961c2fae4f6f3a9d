// Runs the acceptance checks and prints one PASS/FAIL line per criterion.
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "fixtures.hpp"
#include "shimorin/bivariate.hpp"
#include "shimorin/catalog.hpp"
#include "shimorin/certificates.hpp"
#include "shimorin/float_linalg.hpp"
#include "shimorin/hermitian.hpp"
#include "shimorin/interpolation.hpp"
#include "shimorin/sampling.hpp"
#include "shimorin/schurtools.hpp"

using namespace shimorin;
using fixtures::geometric_series;
using fixtures::poly;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail << "first failure: " << what << "; ";
        pass = pass && ok;
    }
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// sum_i w_i x_i
DiagonalSeries linear_theta(const std::vector<int>& w, int n) {
    int g = static_cast<int>(w.size());
    DiagonalSeries t(g, n);
    for (int i = 0; i < g; ++i) t.set(MultiIndex::unit(g, i), w[i]);
    return t;
}

Outcome criterion1() {
    Outcome o;
    const int n = 12;
    double slowest = 0;
    int kernels = 0;
    auto timed = [&](const KernelHandle& k, const DiagonalSeries& want, const std::string& name) {
        auto t0 = Clock::now();
        auto th = master_certificate(k.diagonal(n), n);
        double dt = seconds_since(t0);
        slowest = std::max(slowest, dt);
        ++kernels;
        o.require(th == want, name + " certificate");
        o.require(dt < 1.0, name + " took " + std::to_string(dt) + " s");
    };
    for (int g = 1; g <= 3; ++g) {
        std::vector<int> p(g, 1);
        std::function<void(int)> rec = [&](int i) {
            if (i == g) {
                std::string name = "polydisc(";
                for (int x : p) name += std::to_string(x) + ",";
                name.back() = ')';
                timed(polydisc_weights(p), linear_theta(p, n), name);
                return;
            }
            for (int v = 1; v <= 5; ++v) {
                p[i] = v;
                rec(i + 1);
            }
        };
        rec(0);
        for (int alpha = 1; alpha <= 5; ++alpha)
            timed(ball_power(alpha, g), linear_theta(std::vector<int>(g, alpha), n),
                  "ball(" + std::to_string(alpha) + "," + std::to_string(g) + ")");
    }
    o.detail << kernels << " kernels at degree " << n << ", slowest " << slowest << " s";
    return o;
}

Outcome criterion2() {
    Outcome o;
    const int n = 10;
    auto k = prop65_kernel().diagonal(n);
    o.require(k.coeff(0) == 1 && k.coeff(1) == 2 && k.coeff(2) == 3 && k.coeff(3) == 16, "kernel coefficients");
    auto th = master_certificate(k, n);
    o.require(th.truncated(3) == poly({0, 2, 0, 10}, 3), "theta = 2x + 10x^3");
    auto quotient = series_mul(geometric_series(3, n), series_reciprocal(k));
    o.require(quotient == poly({1, 1, 4}, n), "s/k = 1 + x + 4x^2 with zero tail");
    auto rep = certify_pair(k, geometric_series(3, n), n);
    o.require(!rep.pass, "certify rejects");
    o.require(rep.first_failure && *rep.first_failure == MultiIndex::scalar(3) && rep.failure_value == -1,
              "first failure g_3 = -1");
    o.detail << "theta_3 = " << to_string(th.coeff(3)) << ", g_3 = " << to_string(rep.g.coeff(3));
    return o;
}

Rational cofactor_det(const std::vector<std::vector<Rational>>& m) {
    std::size_t n = m.size();
    if (n == 1) return m[0][0];
    Rational d = 0;
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<Rational>> sub;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Rational> row;
            for (std::size_t j = 0; j < n; ++j)
                if (j != c) row.push_back(m[r][j]);
            sub.push_back(row);
        }
        d += ((c % 2) ? -1 : 1) * m[0][c] * cofactor_det(sub);
    }
    return d;
}

Outcome criterion3() {
    Outcome o;
    auto s = lastex_kernel().bivariate(8);
    BivariateSeries factor = BivariateSeries::constant(8, 1);
    factor.at(1, 1) = Gaussian(-2);
    auto m = bivariate_mul(factor, s);
    std::vector<std::vector<long>> want{{1, 0, 0, 0}, {0, 1, -2, 0}, {0, -2, 5, -8}, {0, 0, -8, 33}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) o.require(m.at(i, j) == Gaussian(want[i][j]), "matrix entry");
    auto h = HermitianExact::from_bivariate(m, 3);
    auto v = psd_test_exact(h);
    o.require(!v.is_psd && v.witness, "exact test rejects");
    if (v.witness) {
        auto& w = *v.witness;
        o.require(w.kind == PsdWitness::Kind::NegativeMinor, "witness is a negative minor");
        std::vector<std::vector<Rational>> sub;
        for (int i : w.minor) {
            std::vector<Rational> row;
            for (int j : w.minor) row.push_back(h(i, j).re);
            sub.push_back(row);
        }
        Rational det = cofactor_det(sub);
        o.require(det == w.minor_determinant && det == -31, "minor determinant -31");
        o.require(h.quadratic_form(w.vector) == w.value && w.value < 0, "negative vector");
        o.detail << "minor {";
        for (std::size_t i = 0; i < w.minor.size(); ++i) o.detail << (i ? "," : "") << w.minor[i];
        o.detail << "} det " << to_string(det);
    }
    return o;
}

Outcome criterion4() {
    Outcome o;
    double r = omega1_radius(poly({0, 2}, 4));
    o.require(std::abs(r - 1 / std::sqrt(2.0)) < 1e-10, "radius of 2x");
    double worst = std::abs(r - 1 / std::sqrt(2.0));
    std::mt19937 rng(4);
    std::uniform_real_distribution<double> u(0.05, 1);
    for (int g = 1; g <= 3; ++g)
        for (int alpha = 1; alpha <= 5; ++alpha) {
            DiagonalSeries th(g, 2);
            for (int i = 0; i < g; ++i) {
                MultiIndex e = MultiIndex::unit(g, i);
                th.set(e, alpha);
            }
            for (int trial = 0; trial < 4; ++trial) {
                std::vector<double> dir(g);
                double norm = 0;
                for (auto& x : dir) norm += (x = u(rng)) * x;
                for (auto& x : dir) x /= std::sqrt(norm);
                double rr = omega1_radius(th, dir);
                double err = std::abs(rr - 1 / std::sqrt(double(alpha)));
                worst = std::max(worst, err);
                o.require(err < 1e-10, "ball radius alpha=" + std::to_string(alpha));
            }
        }
    o.detail << "max error " << worst;
    return o;
}

Complex random_in_disc(std::mt19937& rng, double radius) {
    std::uniform_real_distribution<double> u(-1, 1);
    for (;;) {
        Complex z(u(rng), u(rng));
        if (std::abs(z) < 1) return radius * z;
    }
}

Outcome criterion5() {
    Outcome o;
    std::mt19937 rng(5);
    double worst = 0, lowest = 1;
    for (int trial = 0; trial < 20; ++trial) {
        Complex lambda;
        do lambda = random_in_disc(rng, 1.0 / 3);
        while (std::abs(lambda) < 1e-3);
        auto gl = g_lambda(lambda);
        for (int i = 0; i < 30; ++i) {
            Complex z = random_in_disc(rng, 1.0 / 3), w = random_in_disc(rng, 1.0 / 3);
            Complex x = z * std::conj(w);
            Complex lhs = (gl.g(z) * std::conj(gl.g(w)) - 1.0) / ((1.0 - x) * (1.0 - x)) + 1.0;
            double res = std::abs(lhs - gl.h({z}, {w}));
            worst = std::max(worst, res);
            o.require(res < 1e-11, "identity residual");
        }
        auto grid = random_grid(1, 40, 1.0 / 3, 1000 + trial);
        auto gv = gram_psd(gl.h, grid);
        lowest = std::min(lowest, gv.psd.min_eigenvalue);
        o.require(gv.psd.is_psd, "Gram matrix of h_lambda");
    }
    std::uniform_real_distribution<double> u(0.01, 0.99);
    for (int i = 0; i < 10; ++i) {
        double lam = u(rng);
        o.require(std::abs(g_lambda(lam).g(1 / std::sqrt(2.0))) < 1, "|g(1/sqrt 2)| < 1");
    }
    o.detail << "max residual " << worst << ", min Gram eigenvalue " << lowest;
    return o;
}

Rational random_coefficient(std::mt19937& rng) {
    int q = std::uniform_int_distribution<int>(1, 8)(rng);
    int p = std::uniform_int_distribution<int>(1, 4 * q)(rng);
    Rational r(p, q);
    r.canonicalize();
    return r;
}

Outcome criterion6() {
    Outcome o;
    std::mt19937 rng(6);
    std::uniform_real_distribution<double> target(0.05, 0.999);
    int passing = 0, extensions = 0;
    double worst_slack = 0;
    for (int trial = 0; trial < 200; ++trial) {
        int n = std::uniform_int_distribution<int>(1, 6)(rng);
        std::vector<Rational> kc{1}, lc{1};
        for (int i = 1; i <= n; ++i) {
            kc.push_back(random_coefficient(rng));
            lc.push_back(random_coefficient(rng));
        }
        auto k = DiagonalSeries::univariate(kc, n), l = DiagonalSeries::univariate(lc, n);
        auto rep = certify_pair(k, l, n);
        auto formal = verify_formal_certificate(k, l, master_certificate(k, n));
        o.require(rep.pass == formal.pass, "certify_pair agrees with the master certificate");
        if (!rep.pass) continue;
        ++passing;
        for (int e = 0; e < 100; ++e) {
            int D = std::uniform_int_distribution<int>(1, n)(rng);
            int J = 1 + e % 2;
            auto data = fixtures::random_contractive_data(rng, 1, J, D - 1, k, l, target(rng));
            auto ext = caratheodory_extend(data, k, l, MultiIndex::scalar(D));
            ++extensions;
            worst_slack = std::max(worst_slack, ext.slack);
            o.require(ext.success && ext.slack <= 1e-8, "one-step extension");
        }
    }
    o.require(passing > 0, "some pairs pass");
    o.detail << passing << " of 200 pairs certified, " << extensions << " extensions, max slack " << worst_slack;
    return o;
}

Outcome criterion7() {
    Outcome o;
    const int n = 10;
    struct Pair {
        std::string name;
        DiagonalSeries k, l;
    };
    std::vector<Pair> pairs{{"bergman/geo2", bergman().diagonal(n), geometric_series(2, n)},
                            {"szego/szego", szego().diagonal(n), szego().diagonal(n)}};
    int chains = 0;
    for (auto& p : pairs)
        for (int mask = 1; mask < 64; ++mask) {
            std::vector<int> idx;
            for (int i = 0; i <= 5; ++i)
                if (mask & (1 << i)) idx.push_back(i);
            auto c = ell_chain(p.l, p.k, idx, n);
            ++chains;
            o.require(c.verdict_available && c.pass, p.name + " chain");
        }
    auto rev = ell_chain(geometric_series(2, n), bergman().diagonal(n), {2, 0}, n);
    bool negative = false;
    for (auto& st : rev.stages) negative = negative || st.first_negative.has_value();
    o.require(!rev.verdict_available && negative, "chain (2,0) goes negative");
    o.detail << chains << " increasing chains pass; (2,0) has a negative coefficient";
    return o;
}

Outcome criterion8() {
    Outcome o;
    auto geo2 = bivariate_from_diagonal(geometric_series(2, 10));
    auto audit = bergman_necessity_audit(geo2, 8);
    o.require(audit.pass && audit.rows.size() == 8, "audit of geo2");
    for (auto& row : audit.rows) o.require(row.pivot == 2 * row.previous, "pivot doubling");
    auto chain = coeff_schur_chain(geo2, 8);
    for (int m = 1; m <= 8; ++m) o.require(chain.pivots[m - 1] == Rational(1L << (m - 1)), "pivot 2^(m-1)");

    std::mt19937 rng(8);
    std::vector<Complex> grid;
    for (int i = 0; i < 12; ++i) grid.push_back(random_in_disc(rng, 0.3));
    auto b = bergman().bivariate(30);
    for (int k = 1; k <= 2; ++k) {
        auto r = limit_identity_check(b, k, {1e-1, 1e-2, 1e-3}, grid);
        bool strictly = r.rows.size() == 3 && r.rows[0].deviation > r.rows[1].deviation &&
                        r.rows[1].deviation > r.rows[2].deviation;
        o.require(strictly, "deviation decreases");
        o.require(r.rows.back().deviation < 1e-6, "deviation below 1e-6");
        o.detail << (k > 1 ? ", " : "") << "n=" << k << " deviation " << r.rows.back().deviation;
    }
    return o;
}

Rational small_rational(std::mt19937& rng) {
    Rational q(std::uniform_int_distribution<int>(-6, 6)(rng), std::uniform_int_distribution<int>(1, 4)(rng));
    q.canonicalize();
    return q;
}

Outcome criterion9() {
    Outcome o;
    std::mt19937 rng(9);
    int disagreements = 0, banded = 0;
    for (int trial = 0; trial < 500; ++trial) {
        int n = 1 + trial % 8;
        std::vector<Gaussian> a(n * n);
        if (trial % 3 == 0) {
            int r = std::uniform_int_distribution<int>(0, n - 1)(rng);
            std::vector<Gaussian> v(r * n);
            for (auto& x : v) x = Gaussian(small_rational(rng), small_rational(rng));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    for (int q = 0; q < r; ++q) a[i * n + j] += v[q * n + i].conj() * v[q * n + j];
        } else {
            for (int i = 0; i < n; ++i) {
                a[i * n + i] = Gaussian(small_rational(rng) + 3);
                for (int j = i + 1; j < n; ++j) {
                    a[i * n + j] = Gaussian(small_rational(rng), small_rational(rng));
                    a[j * n + i] = a[i * n + j].conj();
                }
            }
        }
        HermitianExact h(n, a);
        auto exact = psd_test_exact(h);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h.to_float());
        double lo = es.eigenvalues().minCoeff();
        double norm = es.eigenvalues().cwiseAbs().maxCoeff();
        if (std::abs(lo) <= 1e-9 * norm) {
            ++banded;
            continue;
        }
        if (exact.is_psd != (lo > 0)) ++disagreements;
    }
    o.require(disagreements == 0, "exact and float PSD tests agree");

    std::normal_distribution<double> nd;
    std::uniform_real_distribution<double> target(0.5, 0.999);
    double worst = -1;
    for (int t = 0; t < 200; ++t) {
        int r1 = 1 + t % 3, r2 = 1 + (t / 3) % 3, c1 = 1 + (t / 9) % 3, c2 = 1 + (t / 27) % 3;
        auto rnd = [&](int rows, int cols) {
            FloatMatrix m(rows, cols);
            for (int i = 0; i < rows; ++i)
                for (int j = 0; j < cols; ++j) m(i, j) = {nd(rng), nd(rng)};
            return m;
        };
        FloatMatrix A = rnd(r1, c1), C = rnd(r2, c1), D = rnd(r2, c2);
        FloatMatrix col(r1 + r2, c1), row(r2, c1 + c2);
        col << A, C;
        row << C, D;
        double s = target(rng) / std::max(operator_norm(col), operator_norm(row));
        A *= s;
        C *= s;
        D *= s;
        auto p = parrott_complete(A, C, D);
        double svd = Eigen::JacobiSVD<FloatMatrix>(assemble_blocks(A, p.B, C, D)).singularValues()(0);
        double excess = svd - std::max(p.column_norm, p.row_norm);
        worst = std::max(worst, excess);
        o.require(excess <= 1e-8, "Parrott completion within the constraint norm");
    }
    o.detail << disagreements << " disagreements (" << banded << " in the tolerance band), max Parrott excess "
             << worst;
    return o;
}

}  // namespace

int main() {
    auto start = Clock::now();
    struct Criterion {
        int id;
        std::string what;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> criteria{
        {1, "master certificates of polydisc and ball kernels", criterion1},
        {2, "counterexample kernel and its failing certificate", criterion2},
        {3, "non-diagonal example matrix and exact negative minor", criterion3},
        {4, "radius of the certificate domain", criterion4},
        {5, "g_lambda identity, Gram positivity and image bound", criterion5},
        {6, "certify agrees with the master certificate; extensions succeed", criterion6},
        {7, "increasing subtraction chains stay positive", criterion7},
        {8, "pivot doubling and the limit identity", criterion8},
        {9, "exact vs float PSD agreement and Parrott bound", criterion9},
    };
    bool all = true;
    for (auto& c : criteria) {
        auto t0 = Clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << "exception: " << e.what();
        }
        all = all && o.pass;
        std::cout << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << " - " << c.what << " ("
                  << o.detail.str() << "; " << seconds_since(t0) << " s)" << std::endl;
    }
    double total = seconds_since(start);
    bool fast = total < 300;
    all = all && fast;
    std::cout << "criterion 10: " << (fast ? "PASS" : "FAIL") << " - acceptance suite runtime " << total
              << " s (limit 300 s)" << std::endl;
    return all ? 0 : 1;
}
