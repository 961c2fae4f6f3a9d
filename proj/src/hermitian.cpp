#include "shimorin/hermitian.hpp"

#include <algorithm>

#include "shimorin/errors.hpp"
#include "shimorin/kernelspec.hpp"

namespace shimorin {

HermitianExact::HermitianExact(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {
    if (n < 0) throw ValidationError("negative matrix dimension");
}

HermitianExact::HermitianExact(int n, std::vector<Gaussian> row_major) : n_(n), a_(std::move(row_major)) {
    if (n < 0 || a_.size() != static_cast<std::size_t>(n) * n)
        throw ValidationError("matrix entry count does not match dimension");
    for (int i = 0; i < n_; ++i)
        for (int j = i; j < n_; ++j)
            if (!((*this)(j, i) == (*this)(i, j).conj()))
                throw ValidationError("matrix is not Hermitian at (" + std::to_string(i) + "," + std::to_string(j) + ")");
}

HermitianExact HermitianExact::identity(int n) {
    std::vector<Gaussian> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) a[i * n + i] = 1;
    return HermitianExact(n, std::move(a));
}

HermitianExact HermitianExact::from_bivariate(const BivariateSeries& f, int n) {
    if (n > f.truncation()) throw ValidationError("requested block exceeds series truncation");
    int m = n + 1;
    std::vector<Gaussian> a(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) a[i * m + j] = f.at(i, j);
    return HermitianExact(m, std::move(a));
}

HermitianExact HermitianExact::principal(const std::vector<int>& idx) const {
    int m = static_cast<int>(idx.size());
    std::vector<Gaussian> a(static_cast<std::size_t>(m) * m);
    for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q) a[p * m + q] = (*this)(idx[p], idx[q]);
    return HermitianExact(m, std::move(a));
}

Rational HermitianExact::quadratic_form(const std::vector<Gaussian>& v) const {
    if (static_cast<int>(v.size()) != n_) throw ValidationError("vector length mismatch");
    Gaussian acc;
    for (int i = 0; i < n_; ++i) {
        if (v[i].is_zero()) continue;
        Gaussian row;
        for (int j = 0; j < n_; ++j)
            if (!v[j].is_zero()) row += (*this)(i, j) * v[j];
        acc += v[i].conj() * row;
    }
    return acc.re;
}

Eigen::MatrixXcd HermitianExact::to_float() const {
    Eigen::MatrixXcd m(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m(i, j) = (*this)(i, j).to_complex();
    return m;
}

std::string kind_name(PsdWitness::Kind k) {
    switch (k) {
        case PsdWitness::Kind::NegativeDiagonal: return "negative-diagonal";
        case PsdWitness::Kind::ZeroDiagonalRow: return "zero-diagonal-row";
        case PsdWitness::Kind::NegativeMinor: return "negative-minor";
    }
    return "unknown";
}

namespace {

// Solve A y = b exactly (A nonsingular) by Gaussian elimination.
std::vector<Gaussian> solve_exact(std::vector<std::vector<Gaussian>> a, std::vector<Gaussian> b) {
    int m = static_cast<int>(b.size());
    for (int c = 0; c < m; ++c) {
        int p = c;
        while (p < m && a[p][c].is_zero()) ++p;
        if (p == m) throw std::logic_error("singular pivot block in witness construction");
        std::swap(a[p], a[c]);
        std::swap(b[p], b[c]);
        for (int r = c + 1; r < m; ++r) {
            if (a[r][c].is_zero()) continue;
            Gaussian f = a[r][c] / a[c][c];
            for (int k = c; k < m; ++k) a[r][k] -= f * a[c][k];
            b[r] -= f * b[c];
        }
    }
    std::vector<Gaussian> y(m);
    for (int r = m - 1; r >= 0; --r) {
        Gaussian acc = b[r];
        for (int k = r + 1; k < m; ++k) acc -= a[r][k] * y[k];
        y[r] = acc / a[r][r];
    }
    return y;
}

// Extend x (supported off the pivot set) by v_E = -H_EE^{-1} H_{E,.} x so that v*Hv equals the
// Schur-complement form of x.
std::vector<Gaussian> lift_witness(const HermitianExact& h, const std::vector<int>& pivots, std::vector<Gaussian> x) {
    int n = h.size();
    int m = static_cast<int>(pivots.size());
    if (m == 0) return x;
    std::vector<std::vector<Gaussian>> a(m, std::vector<Gaussian>(m));
    std::vector<Gaussian> rhs(m);
    for (int p = 0; p < m; ++p) {
        for (int q = 0; q < m; ++q) a[p][q] = h(pivots[p], pivots[q]);
        for (int j = 0; j < n; ++j)
            if (!x[j].is_zero()) rhs[p] -= h(pivots[p], j) * x[j];
    }
    auto y = solve_exact(std::move(a), std::move(rhs));
    for (int p = 0; p < m; ++p) x[pivots[p]] = y[p];
    return x;
}

}  // namespace

PsdVerdict psd_test_exact(const HermitianExact& h) {
    int n = h.size();
    std::vector<Gaussian> s(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s[i * n + j] = h(i, j);
    auto S = [&](int i, int j) -> Gaussian& { return s[i * n + j]; };

    std::vector<int> active(n);
    for (int i = 0; i < n; ++i) active[i] = i;
    std::vector<int> pivots;
    Rational pivot_product(1);
    PsdVerdict verdict;

    auto finish = [&](PsdWitness w, std::vector<Gaussian> x) {
        w.vector = lift_witness(h, pivots, std::move(x));
        w.value = h.quadratic_form(w.vector);
        if (sgn(w.value) >= 0) throw std::logic_error("PSD witness failed to certify negativity");
        w.minor = pivots;
        w.minor.push_back(w.i);
        if (w.j >= 0) w.minor.push_back(w.j);
        std::sort(w.minor.begin(), w.minor.end());
        verdict.is_psd = false;
        verdict.rank = static_cast<int>(pivots.size());
        verdict.witness = std::move(w);
        return verdict;
    };

    while (!active.empty()) {
        for (int i : active) {
            const Rational& d = S(i, i).re;
            if (sgn(d) < 0) {
                PsdWitness w;
                w.kind = pivots.empty() ? PsdWitness::Kind::NegativeDiagonal : PsdWitness::Kind::NegativeMinor;
                w.i = i;
                w.minor_determinant = pivot_product * d;
                std::vector<Gaussian> x(n);
                x[i] = 1;
                return finish(std::move(w), std::move(x));
            }
        }
        for (int i : active) {
            if (sgn(S(i, i).re) != 0) continue;
            for (int j : active) {
                if (j == i || S(i, j).is_zero()) continue;
                const Gaussian& sij = S(i, j);
                Rational m2 = sij.norm2();
                PsdWitness w;
                w.kind = PsdWitness::Kind::ZeroDiagonalRow;
                w.i = i;
                w.j = j;
                w.minor_determinant = -pivot_product * m2;
                Rational c = (abs(S(j, j).re) + 1) / m2;
                std::vector<Gaussian> x(n);
                x[i] = -(Gaussian(c) * sij);
                x[j] = 1;
                return finish(std::move(w), std::move(x));
            }
        }
        int k = -1;
        for (int i : active)
            if (sgn(S(i, i).re) > 0 && (k < 0 || S(i, i).re > S(k, k).re)) k = i;
        std::vector<int> rest;
        for (int i : active)
            if (i != k && sgn(S(i, i).re) != 0) rest.push_back(i);
        if (k < 0) break;
        Gaussian piv = S(k, k);
        for (int i : rest) {
            if (S(i, k).is_zero()) continue;
            Gaussian f = S(i, k) / piv;
            for (int j : rest)
                if (!S(k, j).is_zero()) S(i, j) -= f * S(k, j);
        }
        pivot_product *= piv.re;
        pivots.push_back(k);
        active = std::move(rest);
    }
    verdict.rank = static_cast<int>(pivots.size());
    return verdict;
}

Rational determinant(const HermitianExact& h) {
    int n = h.size();
    std::vector<std::vector<Gaussian>> a(n, std::vector<Gaussian>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = h(i, j);
    Gaussian det(1);
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && a[p][c].is_zero()) ++p;
        if (p == n) return Rational(0);
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (int r = c + 1; r < n; ++r) {
            if (a[r][c].is_zero()) continue;
            Gaussian f = a[r][c] / a[c][c];
            for (int k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return det.re;
}

PsdVerdict contraction_test_exact(const HermitianExact& g) { return psd_test_exact(g); }

nlohmann::json to_json(const HermitianExact& h) {
    nlohmann::json entries = nlohmann::json::array();
    for (int i = 0; i < h.size(); ++i)
        for (int j = i; j < h.size(); ++j) {
            const Gaussian& x = h(i, j);
            if (!x.is_zero()) entries.push_back({{"i", i}, {"j", j}, {"re", to_string(x.re)}, {"im", to_string(x.im)}});
        }
    return {{"format", "hmat/1"}, {"n", h.size()}, {"entries", entries}};
}

nlohmann::json to_json(const PsdVerdict& v) {
    nlohmann::json j = {{"is_psd", v.is_psd}, {"rank", v.rank}, {"method", "exact"}};
    if (v.witness) {
        const PsdWitness& w = *v.witness;
        nlohmann::json vec = nlohmann::json::array();
        for (auto& x : w.vector) vec.push_back({to_string(x.re), to_string(x.im)});
        j["witness"] = {{"kind", kind_name(w.kind)},
                        {"i", w.i},
                        {"j", w.j},
                        {"minor", w.minor},
                        {"minor_determinant", to_string(w.minor_determinant)},
                        {"vector", vec},
                        {"quadratic_form", to_string(w.value)}};
    }
    return j;
}

HermitianExact hermitian_from_json(const nlohmann::json& j) {
    if (!j.is_object() || j.value("format", "") != "hmat/1") throw ValidationError("expected an hmat/1 object");
    if (!j.contains("n") || !j["n"].is_number_integer()) throw ValidationError("hmat: missing integer n");
    int n = j["n"].get<int>();
    if (n < 0) throw ValidationError("hmat: negative dimension");
    std::vector<Gaussian> a(static_cast<std::size_t>(n) * n);
    auto field = [](const nlohmann::json& e, const char* key) {
        if (!e.contains(key)) return Rational(0);
        if (!e[key].is_string()) throw ValidationError(std::string("hmat: '") + key + "' must be a \"p/q\" string");
        return parse_rational(e[key].get<std::string>());
    };
    for (auto& e : j.value("entries", nlohmann::json::array())) {
        int r = e.at("i").get<int>(), c = e.at("j").get<int>();
        if (r < 0 || c < 0 || r >= n || c >= n) throw ValidationError("hmat: entry index out of range");
        if (r > c) throw ValidationError("hmat: entries must lie in the upper triangle");
        Gaussian x(field(e, "re"), field(e, "im"));
        if (r == c && !x.is_real()) throw ValidationError("hmat: diagonal entries must be real");
        a[r * n + c] = x;
        a[c * n + r] = x.conj();
    }
    return HermitianExact(n, std::move(a));
}

}  // namespace shimorin
