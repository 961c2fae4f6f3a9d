#include "shimorin/schurtools.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "shimorin/certificates.hpp"
#include "shimorin/errors.hpp"
#include "shimorin/interpolation.hpp"
#include "shimorin/kernelspec.hpp"

namespace shimorin {

SchurChain coeff_schur_chain(const BivariateSeries& l, int n) {
    if (!l.is_hermitian()) throw ValidationError("coefficient matrix is not Hermitian");
    int N = l.truncation();
    if (n < 0 || n > N) throw ValidationError("chain length must lie in 0.." + std::to_string(N));
    SchurChain c;
    c.stages.push_back(l);
    for (int m = 1; m <= n; ++m) {
        const BivariateSeries& prev = c.stages.back();
        Gaussian p = prev.at(m - 1, m - 1);
        if (p.is_zero()) {
            std::vector<int> minor(m);
            for (int i = 0; i < m; ++i) minor[i] = i;
            throw RegularityError("zero pivot at stage " + std::to_string(m), minor);
        }
        BivariateSeries next = prev;
        for (int i = 0; i <= N; ++i) {
            const Gaussian& a = prev.at(i, m - 1);
            if (a.is_zero()) continue;
            Gaussian f = a / p;
            for (int j = 0; j <= N; ++j) {
                const Gaussian& b = prev.at(m - 1, j);
                if (!b.is_zero()) next.at(i, j) -= f * b;
            }
        }
        c.pivots.push_back(p.re);
        c.stages.push_back(std::move(next));
    }
    return c;
}

QuotientVerdict quotient_positivity(const BivariateSeries& stage, const DiagonalSeries& k, int n) {
    if (k.variables() != 1) throw ValidationError("quotient positivity is defined for one variable");
    if (!k.is_normalized_kernel()) throw ValidationError("k is not a normalized kernel");
    if (n < 0 || n > stage.truncation() || n > k.truncation())
        throw ValidationError("degree exceeds the available truncation");
    QuotientVerdict v;
    BivariateSeries kinv = bivariate_from_diagonal(series_reciprocal(k.truncated(n)));
    v.quotient = bivariate_mul(stage.truncated(n), kinv);
    v.psd = psd_test_exact(HermitianExact::from_bivariate(v.quotient, n));
    return v;
}

KernelHandle point_schur_chain(const KernelHandle& l, const std::vector<Point>& points) {
    KernelHandle cur = l;
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (points[i] == points[j]) throw ValidationError("chain points must be distinct");
    for (auto& u : points) cur = kernel_schur_point(cur, u);
    cur.name = l.name + "_chain";
    return cur;
}

namespace {

namespace mp = boost::multiprecision;
using Real50 = mp::cpp_bin_float_50;
using Complex50 = mp::cpp_complex_50;

Real50 to_real50(const Rational& q) {
    return Real50(q.get_num().get_str()) / Real50(q.get_den().get_str());
}

struct Poly50 {
    int n;
    std::vector<Complex50> c;

    explicit Poly50(const BivariateSeries& f) : n(f.truncation()), c(static_cast<std::size_t>(n + 1) * (n + 1)) {
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) {
                const Gaussian& x = f.at(i, j);
                if (!x.is_zero()) c[i * (n + 1) + j] = Complex50(to_real50(x.re), to_real50(x.im));
            }
    }

    Complex50 operator()(const Complex50& z, const Complex50& w) const {
        Complex50 wb = conj(w);
        Complex50 outer(0);
        for (int i = n; i >= 0; --i) {
            Complex50 inner(0);
            for (int j = n; j >= 0; --j) inner = inner * wb + c[i * (n + 1) + j];
            outer = outer * z + inner;
        }
        return outer;
    }

    // terms with max(i, j) = n
    Complex50 shell(const Complex50& z, const Complex50& w) const {
        Complex50 wb = conj(w), acc(0);
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j)
                if (std::max(i, j) == n) acc += c[i * (n + 1) + j] * pow(z, i) * pow(wb, j);
        return acc;
    }
};

Complex50 chain_eval(const Poly50& l, const std::vector<Complex50>& u, int m, const Complex50& z, const Complex50& w) {
    if (m == 0) return l(z, w);
    const Complex50& um = u[m - 1];
    Complex50 d = chain_eval(l, u, m - 1, um, um);
    if (abs(d) == 0) throw NumericalBreakdown("vanishing denominator in point chain");
    return chain_eval(l, u, m - 1, z, w) - chain_eval(l, u, m - 1, z, um) * chain_eval(l, u, m - 1, um, w) / d;
}

}  // namespace

LimitReport limit_identity_check(const BivariateSeries& l, int n, const std::vector<double>& ts,
                                 const std::vector<std::complex<double>>& grid) {
    if (grid.empty()) throw ValidationError("test grid is empty");
    for (double t : ts)
        if (!(t > 0 && t < 1)) throw ValidationError("schedule parameters must lie in (0, 1)");
    SchurChain chain = coeff_schur_chain(l, n);
    Poly50 base(l), target(chain.stages.back());
    std::vector<Complex50> pts;
    for (auto& z : grid) pts.emplace_back(Real50(z.real()), Real50(z.imag()));

    LimitReport r;
    r.n = n;
    r.truncation = l.truncation();
    Real50 floor(0);
    for (auto& z : pts)
        for (auto& w : pts) floor = std::max(floor, Real50(abs(base.shell(z, w))));
    r.truncation_floor = static_cast<double>(floor);

    for (double t : ts) {
        LimitRow row;
        row.t = t;
        std::vector<Complex50> u;
        for (int m = 1; m <= n; ++m) {
            Real50 um = pow(Real50(t), static_cast<int>(std::pow(3, n - m + 1)));
            u.emplace_back(um, Real50(0));
            row.schedule.push_back(static_cast<double>(um));
        }
        Real50 dev(0);
        for (auto& z : pts)
            for (auto& w : pts) dev = std::max(dev, Real50(abs(chain_eval(base, u, n, z, w) - target(z, w))));
        row.deviation = static_cast<double>(dev);
        if (!r.rows.empty() && n > 0 && !(row.deviation < r.rows.back().deviation)) r.decreasing = false;
        r.rows.push_back(std::move(row));
    }
    return r;
}

nlohmann::json to_json(const SchurChain& c) {
    nlohmann::json pivots = nlohmann::json::array(), stages = nlohmann::json::array();
    for (auto& p : c.pivots) pivots.push_back(to_string(p));
    for (auto& s : c.stages) stages.push_back(to_json(s));
    return {{"pivots", pivots}, {"stages", stages}, {"method", "exact"}};
}

nlohmann::json to_json(const LimitReport& r) {
    nlohmann::json rows = nlohmann::json::array();
    for (auto& x : r.rows) rows.push_back({{"t", x.t}, {"schedule", x.schedule}, {"deviation", x.deviation}});
    return {{"n", r.n}, {"truncation_degree", r.truncation}, {"rows", rows},
            {"truncation_floor", r.truncation_floor}, {"decreasing", r.decreasing}, {"precision_digits", 50}};
}

}  // namespace shimorin
