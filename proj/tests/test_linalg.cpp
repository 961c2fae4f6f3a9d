#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <Eigen/Eigenvalues>

#include "shimorin/errors.hpp"
#include "shimorin/float_linalg.hpp"
#include "shimorin/hermitian.hpp"

using namespace shimorin;

namespace {

HermitianExact real_matrix(int n, std::vector<long> v) {
    std::vector<Gaussian> g;
    for (long x : v) g.emplace_back(x);
    return HermitianExact(n, g);
}

Rational small_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

HermitianExact random_hermitian(std::mt19937& rng, int n, bool low_rank) {
    std::vector<Gaussian> a(n * n);
    if (low_rank) {
        int r = std::uniform_int_distribution<int>(0, n - 1)(rng);
        std::vector<Gaussian> v(r * n);
        for (auto& x : v) x = Gaussian(small_rational(rng), small_rational(rng));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Gaussian s;
                for (int k = 0; k < r; ++k) s += v[k * n + i].conj() * v[k * n + j];
                a[i * n + j] = s;
            }
    } else {
        for (int i = 0; i < n; ++i) {
            a[i * n + i] = Gaussian(small_rational(rng) + 3);
            for (int j = i + 1; j < n; ++j) {
                a[i * n + j] = Gaussian(small_rational(rng), small_rational(rng));
                a[j * n + i] = a[i * n + j].conj();
            }
        }
    }
    return HermitianExact(n, a);
}

// independent determinant by cofactor expansion
Rational cofactor_det(const std::vector<std::vector<Rational>>& m) {
    std::size_t n = m.size();
    if (n == 1) return m[0][0];
    Rational d = 0;
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<Rational>> sub;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Rational> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            sub.push_back(row);
        }
        Rational term = m[0][c] * cofactor_det(sub);
        d += (c % 2 == 0) ? term : Rational(-term);
    }
    return d;
}

void check_witness(const HermitianExact& h, const PsdVerdict& v) {
    REQUIRE_FALSE(v.is_psd);
    REQUIRE(v.witness);
    CHECK(sgn(v.witness->value) < 0);
    CHECK(h.quadratic_form(v.witness->vector) == v.witness->value);
}

}  // namespace

TEST_CASE("hermitian construction") {
    CHECK_THROWS_AS(real_matrix(2, {1, 2, 3, 1}), ValidationError);
    std::vector<Gaussian> bad{Gaussian(1, 1), Gaussian(0), Gaussian(0), Gaussian(1)};
    CHECK_THROWS_AS(HermitianExact(2, bad), ValidationError);
}

TEST_CASE("exact psd: worked matrices") {
    auto k = real_matrix(3, {1, 1, 0, 1, 2, 1, 0, 1, 2});
    auto v = psd_test_exact(k);
    CHECK(v.is_psd);
    CHECK(v.rank == 3);

    CHECK(psd_test_exact(HermitianExact::identity(5)).is_psd);

    auto m = real_matrix(4, {1, 0, 0, 0, 0, 1, -2, 0, 0, -2, 5, -8, 0, 0, -8, 33});
    auto w = psd_test_exact(m);
    check_witness(m, w);
    CHECK(w.witness->kind == PsdWitness::Kind::NegativeMinor);
    CHECK(w.witness->minor == std::vector<int>{1, 2, 3});
    CHECK(w.witness->minor_determinant == -31);
    CHECK(cofactor_det({{1, -2, 0}, {-2, 5, -8}, {0, -8, 33}}) == -31);
    CHECK(determinant(m.principal({1, 2, 3})) == -31);
}

TEST_CASE("exact psd: witness kinds") {
    auto neg = real_matrix(2, {1, 0, 0, -1});
    auto v = psd_test_exact(neg);
    check_witness(neg, v);
    CHECK(v.witness->kind == PsdWitness::Kind::NegativeDiagonal);
    CHECK(v.witness->i == 1);

    auto zero_row = real_matrix(2, {0, 1, 1, 5});
    auto z = psd_test_exact(zero_row);
    check_witness(zero_row, z);
    CHECK(z.witness->kind == PsdWitness::Kind::ZeroDiagonalRow);
    CHECK(z.witness->minor_determinant == -1);

    auto singular = real_matrix(3, {1, 1, 0, 1, 1, 0, 0, 0, 0});
    auto s = psd_test_exact(singular);
    CHECK(s.is_psd);
    CHECK(s.rank == 1);
}

TEST_CASE("exact psd agrees with eigenvalue oracle") {
    std::mt19937 rng(20240);
    int disagreements = 0, banded = 0;
    for (int trial = 0; trial < 500; ++trial) {
        int n = 1 + trial % 8;
        auto h = random_hermitian(rng, n, trial % 3 == 0);
        auto exact = psd_test_exact(h);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h.to_float());
        double lo = es.eigenvalues().minCoeff();
        double norm = es.eigenvalues().cwiseAbs().maxCoeff();
        if (std::abs(lo) <= 1e-9 * norm) {
            ++banded;
            continue;
        }
        if (exact.is_psd != (lo > 0)) ++disagreements;
        if (!exact.is_psd) check_witness(h, exact);
        if (exact.is_psd)
            for (int i = 0; i < n; ++i) CHECK(psd_test_exact(h.principal({i})).is_psd);
    }
    CHECK(disagreements == 0);
    CHECK(banded < 500);
}

TEST_CASE("operator norm") {
    FloatMatrix shift(2, 2);
    shift << 0, 1, 0, 0;
    CHECK(operator_norm(shift) == doctest::Approx(1).epsilon(1e-12));
    CHECK(operator_norm(FloatMatrix::Zero(3, 3)) == 0);
    FloatMatrix row(2, 2);
    row << 3, 4, 0, 0;
    CHECK(operator_norm(row) == doctest::Approx(5).epsilon(1e-12));

    std::mt19937 rng(3);
    std::normal_distribution<double> nd;
    for (int t = 0; t < 50; ++t) {
        FloatMatrix m(1 + t % 4, 1 + (t / 4) % 5);
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) m(i, j) = {nd(rng), nd(rng)};
        double svd = Eigen::JacobiSVD<FloatMatrix>(m).singularValues()(0);
        CHECK(std::abs(operator_norm(m) - svd) <= 1e-12 * svd);
        CHECK(std::abs(operator_norm(m) - operator_norm(m.adjoint())) <= 1e-10 * svd);
    }
    FloatMatrix nan(1, 1);
    nan << std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(operator_norm(nan), ValidationError);
}

TEST_CASE("parrott completion") {
    FloatMatrix one(1, 1), zero = FloatMatrix::Zero(1, 1);
    one << 1;
    auto r = parrott_complete(one, zero, zero);
    CHECK(std::abs(r.B(0, 0)) < 1e-12);
    auto r2 = parrott_complete(zero, one, zero);
    CHECK(std::abs(r2.B(0, 0)) < 1e-12);

    FloatMatrix big(1, 1);
    big << 2;
    CHECK_THROWS_AS(parrott_complete(big, zero, zero), ValidationError);
    CHECK_THROWS_AS(parrott_complete(FloatMatrix::Zero(1, 2), zero, zero), ValidationError);

    std::mt19937 rng(99);
    std::normal_distribution<double> nd;
    std::uniform_real_distribution<double> target(0.5, 0.999);
    for (int t = 0; t < 200; ++t) {
        auto rnd = [&](int rows, int cols) {
            FloatMatrix m(rows, cols);
            for (int i = 0; i < rows; ++i)
                for (int j = 0; j < cols; ++j) m(i, j) = {nd(rng), nd(rng)};
            return m;
        };
        FloatMatrix A = rnd(2, 2), C = rnd(2, 2), D = rnd(2, 2);
        FloatMatrix col(4, 2), row(2, 4);
        col << A, C;
        row << C, D;
        double s = target(rng) / std::max(operator_norm(col), operator_norm(row));
        A *= s;
        C *= s;
        D *= s;
        auto p = parrott_complete(A, C, D);
        double svd = Eigen::JacobiSVD<FloatMatrix>(assemble_blocks(A, p.B, C, D)).singularValues()(0);
        CHECK(svd <= std::max(p.column_norm, p.row_norm) + 1e-8);
    }
}

TEST_CASE("contraction form") {
    // F = {0}, c_0 = 1, normalized pair: [l_0 - k_0] = [0]
    CHECK(contraction_test_exact(real_matrix(1, {0})).is_psd);
    // k_a > l_a
    CHECK_FALSE(contraction_test_exact(real_matrix(2, {0, 0, 0, -1})).is_psd);
}

TEST_CASE("hmat json") {
    auto m = real_matrix(4, {1, 0, 0, 0, 0, 1, -2, 0, 0, -2, 5, -8, 0, 0, -8, 33});
    auto j = to_json(m);
    CHECK(j["format"] == "hmat/1");
    auto back = hermitian_from_json(j);
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) CHECK(back(i, k) == m(i, k));
    j["entries"][0]["im"] = "1/1";  // diagonal entry made non-real
    CHECK_THROWS_AS(hermitian_from_json(j), ValidationError);
}
