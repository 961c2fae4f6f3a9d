#include "shimorin/catalog.hpp"

#include <cmath>

#include "shimorin/bivariate.hpp"
#include "shimorin/errors.hpp"

namespace shimorin {

namespace {

Complex inner(const Point& z, const Point& w) {
    if (z.size() != w.size()) throw ValidationError("point dimensions differ");
    Complex s = 0;
    for (std::size_t j = 0; j < z.size(); ++j) s += z[j] * std::conj(w[j]);
    return s;
}

void require_dim(const Point& z, const Point& w, std::size_t g) {
    if (z.size() != g || w.size() != g) throw ValidationError("point dimension does not match kernel variables");
}

mpz_class binomial(int n, int k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

mpz_class factorial(int n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

KernelHandle one_variable(const std::string& name, std::function<Complex(Complex)> of_x,
                          std::function<DiagonalSeries(int)> series, double radius) {
    KernelHandle h;
    h.name = name;
    h.variables = 1;
    h.eval = [of_x](const Point& z, const Point& w) {
        require_dim(z, w, 1);
        return of_x(z[0] * std::conj(w[0]));
    };
    h.bivariate = [series](int n) { return bivariate_from_diagonal(series(n)); };
    h.diagonal = std::move(series);
    h.radius = radius;
    return h;
}

}  // namespace

KernelHandle szego() {
    return one_variable(
        "szego", [](Complex x) { return 1.0 / (1.0 - x); },
        [](int n) { return DiagonalSeries::univariate(std::vector<Rational>(n + 1, Rational(1)), n); }, 1.0);
}

KernelHandle bergman() {
    return one_variable(
        "bergman", [](Complex x) { return 1.0 / ((1.0 - x) * (1.0 - x)); },
        [](int n) {
            std::vector<Rational> c;
            for (int i = 0; i <= n; ++i) c.emplace_back(i + 1);
            return DiagonalSeries::univariate(c, n);
        },
        1.0);
}

KernelHandle geometric(const Rational& c) {
    if (sgn(c) <= 0) throw ValidationError("geometric ratio must be positive");
    double cd = c.get_d();
    KernelHandle h = one_variable(
        "geometric", [cd](Complex x) { return 1.0 / (1.0 - cd * x); },
        [c](int n) {
            std::vector<Rational> v;
            Rational p(1);
            for (int i = 0; i <= n; ++i, p *= c) v.push_back(p);
            return DiagonalSeries::univariate(v, n);
        },
        1.0 / std::sqrt(cd));
    h.params = {{"c", to_string(c)}};
    return h;
}

KernelHandle polydisc_weights(const std::vector<int>& p) {
    if (p.empty()) throw ValidationError("polydisc weights need at least one variable");
    for (int x : p)
        if (x <= 0) throw ValidationError("polydisc weights must be positive");
    KernelHandle h;
    h.name = "polydisc";
    h.params = {{"p", p}};
    h.variables = static_cast<int>(p.size());
    h.radius = 1.0;
    h.eval = [p](const Point& z, const Point& w) {
        require_dim(z, w, p.size());
        Complex r = 1;
        for (std::size_t j = 0; j < p.size(); ++j) r /= std::pow(1.0 - z[j] * std::conj(w[j]), p[j]);
        return r;
    };
    h.diagonal = [p](int n) {
        int g = static_cast<int>(p.size());
        DiagonalSeries f(g, n);
        for (auto& a : indices_up_to(g, n)) {
            mpz_class c = 1;
            for (int j = 0; j < g; ++j) c *= binomial(a[j] + p[j] - 1, p[j] - 1);
            f.set(a, Rational(c));
        }
        return f;
    };
    return h;
}

KernelHandle ball_power(int alpha, int g) {
    if (alpha <= 0 || g <= 0) throw ValidationError("ball power parameters must be positive");
    KernelHandle h;
    h.name = "ball";
    h.params = {{"alpha", alpha}, {"g", g}};
    h.variables = g;
    h.radius = 1.0;
    h.eval = [alpha, g](const Point& z, const Point& w) {
        require_dim(z, w, static_cast<std::size_t>(g));
        return std::pow(1.0 - inner(z, w), -alpha);
    };
    h.diagonal = [alpha, g](int n) {
        DiagonalSeries f(g, n);
        for (auto& a : indices_up_to(g, n)) {
            mpz_class den = factorial(alpha - 1);
            for (int j = 0; j < g; ++j) den *= factorial(a[j]);
            f.set(a, Rational(mpz_class(factorial(a.degree() + alpha - 1) / den)));  // a multinomial, so exact
        }
        return f;
    };
    return h;
}

KernelHandle prop65_kernel() {
    return one_variable(
        "prop65", [](Complex x) { return 1.0 / (1.0 - 2.0 * x + x * x - 12.0 * x * x * x); },
        [](int n) { return series_reciprocal(DiagonalSeries::univariate({1, -2, 1, -12}, n)); },
        1.0 / std::sqrt(3.0));
}

BivariateSeries lastex_P(int n) {
    BivariateSeries P(n);
    auto put = [&](int i, int j, long v) {
        if (i <= n && j <= n) P.at(i, j) = Gaussian(v);
    };
    put(1, 1, 3);
    put(2, 1, -2);
    put(1, 2, -2);
    put(2, 2, 2);
    for (int m = 3; m <= n; ++m) put(m, m, 8);
    return P;
}

KernelHandle lastex_kernel() {
    KernelHandle h;
    h.name = "lastex";
    h.variables = 1;
    h.radius = 0.4;
    h.eval = [](const Point& z, const Point& w) {
        require_dim(z, w, 1);
        Complex a = z[0], b = std::conj(w[0]), x = a * b;
        Complex P = x * (3.0 - 2.0 * a - 2.0 * b + 2.0 * x) + 8.0 * x * x * x / (1.0 - x);
        return 1.0 / (1.0 - P);
    };
    h.bivariate = [](int n) {
        if (n < 3) throw ValidationError("the lastex kernel needs truncation at least 3");
        return bivariate_reciprocal(bivariate_add(BivariateSeries::constant(n, 1), bivariate_scale(lastex_P(n), -1)));
    };
    return h;
}

GLambda g_lambda(Complex lambda) {
    double m = std::abs(lambda);
    if (!(m > 0 && m < 1)) throw ValidationError("lambda must satisfy 0 < |lambda| < 1");
    double norm = std::sqrt(2 * m * m - m * m * m * m);
    GLambda r;
    r.lambda = lambda;
    r.g = [lambda, norm](Complex z) {
        Complex u = z * std::conj(lambda);
        return (2.0 * u - u * u) / norm;
    };
    auto g = r.g;
    nlohmann::json params = {{"lambda", {lambda.real(), lambda.imag()}}};
    r.s.name = "s_lambda";
    r.s.params = params;
    r.s.eval = [g](const Point& z, const Point& w) {
        require_dim(z, w, 1);
        return 1.0 / (1.0 - g(z[0]) * std::conj(g(w[0])));
    };
    r.h.name = "h_lambda";
    r.h.params = params;
    r.h.eval = [lambda, m](const Point& z, const Point& w) {
        require_dim(z, w, 1);
        Complex x = z[0] * std::conj(w[0]);
        return 2.0 * x * (z[0] - lambda) * std::conj(w[0] - lambda) / ((1.0 - x) * (1.0 - x) * (2.0 - m * m));
    };
    r.in_domain = [g](Complex z) { return std::abs(g(z)) < 1; };
    return r;
}

Example32 finite_example32() {
    auto mat = [](std::vector<long> v) {
        std::vector<Gaussian> a;
        for (long x : v) a.emplace_back(x);
        return HermitianExact(3, std::move(a));
    };
    Example32 e{mat({1, 1, 0, 1, 2, 1, 0, 1, 2}), HermitianExact::identity(3), {}};
    for (int t = 0; t < 3; ++t) {
        std::vector<long> p(9);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) p[i * 3 + j] = (i == t || j == t) ? 0 : 1;
        e.p.push_back(mat(p));
    }
    return e;
}

std::vector<std::string> catalog_names() {
    return {"szego", "bergman", "geometric", "polydisc", "ball", "prop65", "lastex", "s_lambda", "h_lambda"};
}

KernelHandle catalog_by_name(const std::string& name, const nlohmann::json& params) {
    try {
        if (name == "szego") return szego();
        if (name == "bergman") return bergman();
        if (name == "prop65") return prop65_kernel();
        if (name == "lastex") return lastex_kernel();
        if (name == "geometric") {
            const auto& c = params.at("c");
            return geometric(c.is_string() ? parse_rational(c.get<std::string>()) : Rational(c.get<long>()));
        }
        if (name == "polydisc") return polydisc_weights(params.at("p").get<std::vector<int>>());
        if (name == "ball") return ball_power(params.at("alpha").get<int>(), params.value("g", 1));
        if (name == "s_lambda" || name == "h_lambda") {
            auto l = params.at("lambda");
            Complex lambda = l.is_array() ? Complex(l.at(0).get<double>(), l.at(1).get<double>()) : Complex(l.get<double>(), 0);
            GLambda gl = g_lambda(lambda);
            return name == "s_lambda" ? gl.s : gl.h;
        }
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError("bad parameters for " + name + ": " + e.what());
    }
    throw ValidationError("unknown catalog kernel '" + name + "'");
}

}  // namespace shimorin
