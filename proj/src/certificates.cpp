#include "shimorin/certificates.hpp"

#include <cmath>
#include <limits>

#include "shimorin/hermitian.hpp"
#include "shimorin/kernelspec.hpp"
#include "shimorin/schurtools.hpp"

namespace shimorin {

namespace {

void require_normalized(const DiagonalSeries& f, const char* name) {
    if (!f.is_normalized_kernel())
        throw ValidationError(std::string(name) + " is not a normalized kernel (constant term 1, positive coefficients)");
}

void require_degree(const DiagonalSeries& f, int n, const char* name) {
    if (n < 0) throw ValidationError("degree must be nonnegative");
    if (f.truncation() < n)
        throw ValidationError(std::string(name) + " is only known to degree " + std::to_string(f.truncation()) +
                              ", degree " + std::to_string(n) + " requested");
}

SeriesCheck check(DiagonalSeries s) {
    SeriesCheck c{std::move(s), std::nullopt, Rational(0)};
    c.first_negative = c.series.first_negative();
    if (c.first_negative) c.value = c.series[*c.first_negative];
    return c;
}

void require_certificate_shape(const DiagonalSeries& t) {
    if (sgn(t[MultiIndex::zero(t.variables())]) != 0) throw ValidationError("certificate must have zero constant term");
    if (auto a = t.first_negative()) throw ValidationError("certificate has negative coefficient at " + a->str());
}

}  // namespace

DiagonalSeries master_certificate(const DiagonalSeries& k, int n) {
    require_normalized(k, "k");
    require_degree(k, n, "k");
    int g = k.variables();
    DiagonalSeries theta(g, n);
    std::vector<std::pair<MultiIndex, Rational>> support;
    for (auto& b : indices_up_to(g, n)) {
        if (b.is_zero()) continue;
        Rational acc = k[b];
        for (auto& [w, tw] : support)
            if (w != b && w.leq(b)) acc -= tw * k[b - w];
        if (sgn(acc) > 0) {
            theta.set(b, acc);
            support.emplace_back(b, acc);
        }
    }
    return theta;
}

SeriesCheck shimorin_h(const DiagonalSeries& k, const DiagonalSeries& t) {
    return check(one_minus(series_mul(k, one_minus(t))));
}

SeriesCheck shimorin_g(const DiagonalSeries& l, const DiagonalSeries& t) {
    return check(series_mul(l, one_minus(t)));
}

namespace {

void fill_failure(CertificateReport& r, const SeriesCheck& gc, const SeriesCheck& hc) {
    r.pass = gc.nonnegative() && hc.nonnegative();
    if (r.pass) return;
    bool use_g = gc.first_negative && (!hc.first_negative || !graded_less(*hc.first_negative, *gc.first_negative));
    const SeriesCheck& f = use_g ? gc : hc;
    r.first_failure = f.first_negative;
    r.failure_value = f.value;
    r.failure_series = use_g ? "g" : "h";
}

void verify_identities(CertificateReport& r, const DiagonalSeries& k, const DiagonalSeries& l) {
    r.s = series_reciprocal(one_minus(r.t));
    r.identities_verified = series_mul(one_minus(r.h), *r.s) == k && series_mul(r.g, *r.s) == l;
}

}  // namespace

CertificateReport certify_pair(const DiagonalSeries& k0, const DiagonalSeries& l0, int n) {
    require_normalized(k0, "k");
    require_normalized(l0, "l");
    if (k0.variables() != l0.variables()) throw ValidationError("k and l have different variable counts");
    require_degree(k0, n, "k");
    require_degree(l0, n, "l");
    DiagonalSeries k = k0.truncated(n), l = l0.truncated(n);
    CertificateReport r;
    r.degree = n;
    r.t = master_certificate(k, n);
    SeriesCheck hc = shimorin_h(k, r.t);
    if (!hc.nonnegative())
        throw std::logic_error("master certificate produced a negative h coefficient at " + hc.first_negative->str());
    SeriesCheck gc = shimorin_g(l, r.t);
    r.h = hc.series;
    r.g = gc.series;
    fill_failure(r, gc, hc);
    if (r.pass) {
        verify_identities(r, k, l);
        if (!r.identities_verified) throw std::logic_error("factorization identities failed for a passing pair");
    }
    return r;
}

CertificateReport verify_formal_certificate(const DiagonalSeries& k0, const DiagonalSeries& l0, const DiagonalSeries& t0) {
    require_normalized(k0, "k");
    require_normalized(l0, "l");
    if (k0.variables() != l0.variables() || k0.variables() != t0.variables())
        throw ValidationError("k, l and t have different variable counts");
    require_certificate_shape(t0);
    int n = std::min({k0.truncation(), l0.truncation(), t0.truncation()});
    DiagonalSeries k = k0.truncated(n), l = l0.truncated(n);
    CertificateReport r;
    r.degree = n;
    r.t = t0.truncated(n);
    SeriesCheck gc = shimorin_g(l, r.t);
    SeriesCheck hc = shimorin_h(k, r.t);
    r.g = gc.series;
    r.h = hc.series;
    fill_failure(r, gc, hc);
    if (r.pass) verify_identities(r, k, l);
    return r;
}

VSequence greedy_v_sequence(const DiagonalSeries& k, const DiagonalSeries& l, const MultiIndex& d, const IndexSet& S) {
    require_normalized(k, "k");
    require_normalized(l, "l");
    require_degree(k, d.degree(), "k");
    require_degree(l, d.degree(), "l");
    VSequence out;
    out.d = d;
    out.S = S;
    for (auto& a : S)
        if (!a.leq(d)) throw ValidationError("S contains " + a.str() + " which is not below d");
    std::map<MultiIndex, Rational, GradedLess> v;
    for (auto& a : indices_below(d)) {
        Rational va;
        if (a.is_zero()) {
            va = S.count(a) ? 0 : 1;
        } else if (!S.count(a)) {
            va = l[a];
            for (auto& [u, vu] : v)
                if (u.leq(a)) va -= vu * k[a - u];
        }
        Rational res = l[a] - va * k[MultiIndex::zero(d.variables())];
        for (auto& [u, vu] : v)
            if (u.leq(a)) res -= vu * k[a - u];
        v.emplace(a, va);
        out.v.emplace_back(a, va);
        out.residual.emplace_back(a, res);
        if (sgn(va) < 0 && !out.negative_v) out.negative_v = a;
        if (sgn(res) < 0 && !out.negative_residual) out.negative_residual = a;
    }
    return out;
}

IndexSet vanishing_certificate_set(const DiagonalSeries& theta, const MultiIndex& d) {
    IndexSet S;
    for (auto& a : indices_below(d))
        if (sgn(theta[d - a]) == 0) S.insert(a);
    return S;
}

ChainReport ell_chain(const DiagonalSeries& l, const DiagonalSeries& k, const std::vector<int>& indices, int n) {
    if (l.variables() != 1 || k.variables() != 1) throw ValidationError("ell_chain is defined for one variable");
    require_normalized(k, "k");
    require_degree(k, n, "k");
    require_degree(l, n, "l");
    std::vector<int> seen;
    ChainReport r;
    r.verdict_available = true;
    for (std::size_t i = 0; i < indices.size(); ++i) {
        int m = indices[i];
        if (m < 0 || m > n) throw ValidationError("chain index " + std::to_string(m) + " outside 0.." + std::to_string(n));
        if (std::find(seen.begin(), seen.end(), m) != seen.end())
            throw ValidationError("repeated chain index " + std::to_string(m));
        if (i > 0 && m <= indices[i - 1]) r.verdict_available = false;
        seen.push_back(m);
    }
    DiagonalSeries kinv = series_reciprocal(k.truncated(n));
    DiagonalSeries cur = l.truncated(n);
    r.pass = true;
    for (int m : indices) {
        Rational c = series_mul(cur, kinv).coeff(m);
        cur.set(MultiIndex::scalar(m), cur.coeff(m) - c);
        ChainStage st{m, cur, series_mul(cur, kinv), std::nullopt, Rational(0)};
        if (auto a = st.quotient.first_negative()) {
            st.first_negative = (*a)[0];
            st.negative_value = st.quotient[*a];
            r.pass = false;
        }
        r.stages.push_back(std::move(st));
    }
    if (!r.verdict_available) r.pass = false;
    return r;
}

double omega1_radius(const DiagonalSeries& theta, double tol) {
    if (theta.variables() != 1) throw ValidationError("use the directional radius for several variables");
    return omega1_radius(theta, {1.0}, tol);
}

double omega1_radius(const DiagonalSeries& theta, const std::vector<double>& direction, double tol) {
    int g = theta.variables();
    if (static_cast<int>(direction.size()) != g) throw ValidationError("direction has wrong length");
    if (sgn(theta[MultiIndex::zero(g)]) != 0) throw ValidationError("certificate must have zero constant term");
    if (theta.is_zero()) throw ValidationError("certificate is identically zero");
    if (auto a = theta.first_negative()) throw ValidationError("negative certificate coefficient at " + a->str());
    if (!(tol > 0)) throw ValidationError("tolerance must be positive");
    double len = 0;
    for (double u : direction) {
        if (!(u >= 0) || !std::isfinite(u)) throw ValidationError("direction entries must be nonnegative moduli");
        len += u * u;
    }
    if (len == 0) throw ValidationError("direction must be nonzero");
    std::vector<double> u2;
    for (double u : direction) u2.push_back(u * u / len);

    std::vector<std::pair<int, double>> terms;  // (degree, coefficient * prod u_j^{2 a_j})
    for (auto& [a, c] : theta.terms()) {
        double w = c.get_d();
        for (int j = 0; j < g; ++j) w *= std::pow(u2[j], a[j]);
        if (w > 0) terms.emplace_back(a.degree(), w);
    }
    if (terms.empty()) return std::numeric_limits<double>::infinity();
    auto sum = [&](double r) {
        double rho = r * r, s = 0;
        for (auto& [deg, w] : terms) s += w * std::pow(rho, deg);
        return s;
    };
    double lo = 0, hi = 1;
    while (sum(hi) < 1) {
        lo = hi;
        hi *= 2;
        if (hi > 1e150) return std::numeric_limits<double>::infinity();
    }
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (sum(mid) < 1 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

std::optional<std::vector<int>> find_singular_principal_minor(const BivariateSeries& l, int n) {
    if (n + 1 > 20) throw ValidationError("exhaustive principal-minor check limited to order 20");
    HermitianExact h = HermitianExact::from_bivariate(l, n);
    int m = n + 1;
    std::vector<std::vector<int>> subsets;
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        std::vector<int> idx;
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) idx.push_back(i);
        subsets.push_back(std::move(idx));
    }
    std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    for (auto& idx : subsets)
        if (sgn(determinant(h.principal(idx))) == 0) return idx;
    return std::nullopt;
}

AuditReport bergman_necessity_audit(const BivariateSeries& l, int n) {
    if (!l.is_hermitian()) throw ValidationError("coefficient matrix is not Hermitian");
    if (n < 1 || n > l.truncation()) throw ValidationError("audit degree must lie in 1.." + std::to_string(l.truncation()));
    if (auto bad = find_singular_principal_minor(l, n)) {
        std::string s;
        for (int i : *bad) s += (s.empty() ? "" : ",") + std::to_string(i);
        throw RegularityError("not regular to order " + std::to_string(n) + ": principal minor {" + s + "} vanishes", *bad);
    }
    SchurChain chain = coeff_schur_chain(l, n);
    AuditReport r;
    r.degree = n;
    const Rational& l00 = l.at(0, 0).re;
    for (int m = 1; m <= n; ++m) {
        AuditRow row;
        row.n = m;
        row.pivot = chain.stages[m].at(m, m).re;
        row.previous = chain.stages[m - 1].at(m - 1, m - 1).re;
        row.doubling_holds = row.pivot >= 2 * row.previous;
        mpz_class pow2 = mpz_class(1) << m;
        row.geometric_holds = l.at(m, m).re >= Rational(pow2) * l00;
        if ((!row.doubling_holds || !row.geometric_holds) && r.pass) {
            r.pass = false;
            r.first_failure = m;
        }
        r.rows.push_back(row);
    }
    return r;
}

nlohmann::json to_json(const CertificateReport& r) {
    nlohmann::json j = {{"verdict", r.pass ? "pass" : "fail"},
                        {"method", "exact"},
                        {"truncation_degree", r.degree},
                        {"t", to_json(r.t)},
                        {"g", to_json(r.g)},
                        {"h", to_json(r.h)}};
    if (r.s) {
        j["s"] = to_json(*r.s);
        j["identities_verified"] = r.identities_verified;
    }
    if (r.first_failure)
        j["first_failure"] = {{"series", r.failure_series},
                              {"index", to_json(*r.first_failure)},
                              {"value", to_string(r.failure_value)}};
    return j;
}

nlohmann::json to_json(const VSequence& v) {
    nlohmann::json vals = nlohmann::json::array(), res = nlohmann::json::array(), S = nlohmann::json::array();
    for (auto& [a, x] : v.v) vals.push_back({{"index", to_json(a)}, {"value", to_string(x)}});
    for (auto& [a, x] : v.residual) res.push_back({{"index", to_json(a)}, {"value", to_string(x)}});
    for (auto& a : v.S) S.push_back(to_json(a));
    nlohmann::json j = {{"d", to_json(v.d)}, {"S", S}, {"v", vals}, {"residual", res},
                        {"verdict", v.holds() ? "pass" : "fail"}, {"method", "exact"}};
    if (v.negative_v) j["negative_v"] = to_json(*v.negative_v);
    if (v.negative_residual) j["negative_residual"] = to_json(*v.negative_residual);
    return j;
}

nlohmann::json to_json(const ChainReport& r) {
    nlohmann::json stages = nlohmann::json::array();
    for (auto& s : r.stages) {
        nlohmann::json st = {{"index", s.index}, {"kernel", to_json(s.kernel)}, {"quotient", to_json(s.quotient)},
                             {"quotient_nonnegative", !s.first_negative}};
        if (s.first_negative) st["first_negative"] = {{"index", *s.first_negative}, {"value", to_string(s.negative_value)}};
        stages.push_back(st);
    }
    nlohmann::json j = {{"stages", stages}, {"method", "exact"}, {"verdict_available", r.verdict_available}};
    j["verdict"] = r.verdict_available ? (r.pass ? "pass" : "fail") : "withheld";
    return j;
}

nlohmann::json to_json(const AuditReport& r) {
    nlohmann::json rows = nlohmann::json::array();
    for (auto& x : r.rows)
        rows.push_back({{"n", x.n}, {"pivot", to_string(x.pivot)}, {"previous_pivot", to_string(x.previous)},
                        {"doubling_holds", x.doubling_holds}, {"geometric_bound_holds", x.geometric_holds}});
    nlohmann::json j = {{"regular_to_order", r.degree}, {"rows", rows}, {"verdict", r.pass ? "pass" : "fail"},
                        {"method", "exact"}};
    if (r.first_failure) j["first_failure"] = *r.first_failure;
    return j;
}

}  // namespace shimorin
