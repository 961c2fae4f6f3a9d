#include "shimorin/interpolation.hpp"

#include <cmath>
#include <numeric>

#include "shimorin/errors.hpp"
#include "shimorin/kernelspec.hpp"

namespace shimorin {

namespace {

Complex checked(const KernelHandle& k, const Point& z, const Point& w) {
    Complex v = k(z, w);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw NumericalBreakdown("kernel " + k.name + " evaluated to a non-finite value");
    return v;
}

FloatMatrix gram(const KernelHandle& k, const std::vector<Point>& pts) {
    int n = static_cast<int>(pts.size());
    FloatMatrix g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = checked(k, pts[i], pts[j]);
    return g;
}

double distance(const Point& a, const Point& b) {
    double d = 0;
    for (std::size_t j = 0; j < a.size(); ++j) d = std::max(d, std::abs(a[j] - b[j]));
    return d;
}

}  // namespace

FloatMatrix pick_matrix(const PickProblem& p) {
    int n = static_cast<int>(p.points.size());
    if (static_cast<int>(p.targets.size()) != n) throw ValidationError("one target per point required");
    if (n == 0) return FloatMatrix(0, 0);
    int N = static_cast<int>(p.targets[0].rows());
    for (auto& W : p.targets)
        if (W.rows() != N || W.cols() != N) throw ValidationError("targets must all be square of one size");
    FloatMatrix m(n * N, n * N);
    FloatMatrix I = FloatMatrix::Identity(N, N);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.block(i * N, j * N, N, N) = checked(p.l, p.points[i], p.points[j]) * I -
                                          checked(p.k, p.points[i], p.points[j]) * p.targets[i] * p.targets[j].adjoint();
    return m;
}

KernelHandle kernel_schur_point(const KernelHandle& k, const Point& z) {
    Complex kzz = checked(k, z, z);
    if (std::abs(kzz) < 1e-14) throw NumericalBreakdown("kernel " + k.name + " vanishes on the diagonal at the Schur point");
    KernelHandle r;
    r.name = k.name + "^z";
    r.params = k.params;
    r.variables = k.variables;
    KernelEval base = k.eval;
    r.eval = [base, z, kzz](const Point& w, const Point& v) { return base(w, v) - base(w, z) * base(z, v) / kzz; };
    return r;
}

HermitianExact finite_schur_point(const HermitianExact& K, int t) {
    int n = K.size();
    if (t < 0 || t >= n) throw ValidationError("Schur point out of range");
    const Gaussian& ktt = K(t, t);
    if (ktt.is_zero()) {
        for (int j = 0; j < n; ++j)
            if (!K(t, j).is_zero()) throw ValidationError("zero diagonal with nonzero row: kernel is not PSD");
        return K;
    }
    std::vector<Gaussian> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i * n + j] = K(i, j) - K(i, t) * K(t, j) / ktt;
    return HermitianExact(n, std::move(a));
}

ExtensionVerdict one_point_extension_feasible(const PickProblem& p, const Point& z_new, double tol, double independence) {
    ExtensionVerdict v;
    for (auto& z : p.points) {
        if (z.size() != z_new.size()) throw ValidationError("point dimensions differ");
        if (distance(z, z_new) < 1e-12) throw ValidationError("new point coincides with a data point");
    }
    if (p.points.empty()) {
        v.feasible = true;
        v.gram_min_ratio = 1;
        return v;
    }
    std::vector<Point> all = p.points;
    all.push_back(z_new);
    Eigen::SelfAdjointEigenSolver<FloatMatrix> es(gram(p.l, all), Eigen::EigenvaluesOnly);
    double top = es.eigenvalues().cwiseAbs().maxCoeff();
    v.gram_min_ratio = top > 0 ? es.eigenvalues().minCoeff() / top : 0;
    if (!(v.gram_min_ratio > independence))
        throw NumericalBreakdown("l kernel functions at the data points are numerically dependent (ratio " +
                                 std::to_string(v.gram_min_ratio) + ")");
    v.original = psd_test_float(pick_matrix(p), tol);
    PickProblem reduced{p.points, p.targets, kernel_schur_point(p.k, z_new), kernel_schur_point(p.l, z_new)};
    v.reduced = psd_test_float(pick_matrix(reduced), tol);
    v.feasible = v.original.is_psd && v.reduced.is_psd;
    return v;
}

bool ExactMatrix::is_zero() const {
    for (auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

FloatMatrix ExactMatrix::to_float() const {
    FloatMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = (*this)(i, j).to_complex();
    return m;
}

ExactMatrix CaratheodoryData::coefficient(const MultiIndex& a) const {
    auto it = c.find(a);
    return it == c.end() ? ExactMatrix(J, J) : it->second;
}

namespace {

void require_valid(const CaratheodoryData& data) {
    if (data.J < 1) throw ValidationError("block size must be positive");
    auto chk = validate_coinvariant(data.variables, data.F);
    if (!chk.valid) throw ValidationError("index set is not co-invariant; missing " + chk.witness->str());
    for (auto& [a, m] : data.c) {
        if (!data.F.count(a)) throw ValidationError("coefficient given at " + a.str() + " outside the index set");
        if (m.rows != data.J || m.cols != data.J) throw ValidationError("coefficient at " + a.str() + " has wrong size");
    }
}

void require_kernels(const DiagonalSeries& k, const DiagonalSeries& l, int g, int degree) {
    for (auto* f : {&k, &l}) {
        if (f->variables() != g) throw ValidationError("kernel variable count does not match the data");
        if (!f->is_normalized_kernel()) throw ValidationError("kernels must be normalized");
        if (f->truncation() < degree) throw ValidationError("kernel truncation below the data degree");
    }
}

int max_degree(const IndexSet& F) { return F.empty() ? 0 : F.rbegin()->degree(); }

MultiIndex meet(const MultiIndex& a, const MultiIndex& b) {
    std::vector<int> e(a.variables());
    for (int j = 0; j < a.variables(); ++j) e[j] = std::min(a[j], b[j]);
    return MultiIndex(std::move(e));
}

// [l_a delta_ab I - sum_{u <= a,b; |u| >= lowest} k_u c*_{a-u} c_{b-u}]
HermitianExact congruent_gram(const CaratheodoryData& data, const std::vector<MultiIndex>& idx, const DiagonalSeries& k,
                              const DiagonalSeries& l, bool skip_zero) {
    int J = data.J, m = static_cast<int>(idx.size()), n = m * J;
    std::vector<Gaussian> a(static_cast<std::size_t>(n) * n);
    for (int p = 0; p < m; ++p)
        for (int q = p; q < m; ++q) {
            const MultiIndex &ia = idx[p], &ib = idx[q];
            std::vector<Gaussian> blk(static_cast<std::size_t>(J) * J);
            if (p == q)
                for (int r = 0; r < J; ++r) blk[r * J + r] = l[ia];
            for (auto& u : indices_below(meet(ia, ib))) {
                if (skip_zero && u.is_zero()) continue;
                const Rational& ku = k[u];
                if (sgn(ku) == 0) continue;
                ExactMatrix ca = data.coefficient(ia - u), cb = data.coefficient(ib - u);
                if (ca.is_zero() || cb.is_zero()) continue;
                for (int r = 0; r < J; ++r)
                    for (int s = 0; s < J; ++s) {
                        Gaussian acc;
                        for (int t = 0; t < J; ++t) acc += ca(t, r).conj() * cb(t, s);
                        blk[r * J + s] -= Gaussian(ku) * acc;
                    }
            }
            for (int r = 0; r < J; ++r)
                for (int s = 0; s < J; ++s) {
                    a[(p * J + r) * n + q * J + s] = blk[r * J + s];
                    a[(q * J + s) * n + p * J + r] = blk[r * J + s].conj();
                }
        }
    return HermitianExact(n, std::move(a));
}

FloatMatrix float_blocks(const CaratheodoryData& data, const std::vector<MultiIndex>& rows,
                         const std::vector<MultiIndex>& cols, const DiagonalSeries& k, const DiagonalSeries& l) {
    int J = data.J;
    FloatMatrix m = FloatMatrix::Zero(static_cast<Eigen::Index>(rows.size()) * J, static_cast<Eigen::Index>(cols.size()) * J);
    for (std::size_t p = 0; p < rows.size(); ++p)
        for (std::size_t q = 0; q < cols.size(); ++q) {
            const MultiIndex &a = rows[p], &b = cols[q];
            if (!a.leq(b)) continue;
            double w = std::sqrt(k[a].get_d() / l[b].get_d());
            m.block(p * J, q * J, J, J) = w * data.coefficient(b - a).to_float();
        }
    return m;
}

}  // namespace

HermitianExact caratheodory_gram(const CaratheodoryData& data, const DiagonalSeries& k, const DiagonalSeries& l) {
    require_valid(data);
    require_kernels(k, l, data.variables, max_degree(data.F));
    std::vector<MultiIndex> idx(data.F.begin(), data.F.end());
    return congruent_gram(data, idx, k, l, false);
}

HermitianExact caratheodory_gram_shifted(const CaratheodoryData& data, const MultiIndex& d, const DiagonalSeries& k,
                                         const DiagonalSeries& l) {
    require_valid(data);
    IndexSet all = data.F;
    all.insert(d);
    require_kernels(k, l, data.variables, max_degree(all));
    std::vector<MultiIndex> idx(all.begin(), all.end());
    return congruent_gram(data, idx, k, l, true);
}

FloatMatrix caratheodory_matrix(const CaratheodoryData& data, const DiagonalSeries& k, const DiagonalSeries& l) {
    require_valid(data);
    require_kernels(k, l, data.variables, max_degree(data.F));
    std::vector<MultiIndex> idx(data.F.begin(), data.F.end());
    return float_blocks(data, idx, idx, k, l);
}

CaratheodoryExtension caratheodory_extend(const CaratheodoryData& data, const DiagonalSeries& k, const DiagonalSeries& l,
                                          const MultiIndex& d) {
    require_valid(data);
    if (d.variables() != data.variables) throw ValidationError("new index has wrong variable count");
    if (data.F.count(d)) throw ValidationError("index " + d.str() + " is already in the data");
    for (auto& a : indices_up_to(data.variables, d.degree() - 1))
        if (!data.F.count(a)) throw ValidationError("index " + a.str() + " of lower degree than " + d.str() + " is missing");
    IndexSet all = data.F;
    all.insert(d);
    require_kernels(k, l, data.variables, max_degree(all));
    if (!psd_test_exact(caratheodory_gram(data, k, l)).is_psd)
        throw ValidationError("Carathéodory data is not a contraction");

    CaratheodoryExtension ext;
    ext.shifted = psd_test_exact(caratheodory_gram_shifted(data, d, k, l));
    ext.feasible = ext.shifted.is_psd;
    ext.extended = data;
    if (!ext.feasible) return ext;

    int J = data.J;
    std::vector<MultiIndex> cols(data.F.begin(), data.F.end());
    std::vector<MultiIndex> plus;
    for (auto& a : all)
        if (!a.is_zero()) plus.push_back(a);
    MultiIndex zero = MultiIndex::zero(data.variables);
    FloatMatrix A = float_blocks(data, {zero}, cols, k, l);
    FloatMatrix C = float_blocks(data, plus, cols, k, l);
    FloatMatrix D = FloatMatrix::Zero(static_cast<Eigen::Index>(plus.size()) * J, J);
    double ld = l[d].get_d();
    for (std::size_t p = 0; p < plus.size(); ++p)
        if (plus[p].leq(d))
            D.block(p * J, 0, J, J) = std::sqrt(k[plus[p]].get_d() / ld) * data.coefficient(d - plus[p]).to_float();
    ParrottResult pr = parrott_complete(A, C, D);
    ext.c_d_float = std::sqrt(ld) * pr.B;

    ExactMatrix cd(J, J);
    for (int r = 0; r < J; ++r)
        for (int s = 0; s < J; ++s)
            cd(r, s) = Gaussian(round_to_grid(ext.c_d_float(r, s).real(), 1000000000000L),
                                round_to_grid(ext.c_d_float(r, s).imag(), 1000000000000L));
    ext.extended.F = all;
    ext.extended.c[d] = cd;
    ext.completed_norm = operator_norm(caratheodory_matrix(ext.extended, k, l));
    ext.slack = std::max(0.0, ext.completed_norm - 1.0);
    ext.exact_psd = psd_test_exact(caratheodory_gram(ext.extended, k, l)).is_psd;
    ext.success = ext.slack <= 1e-8;
    return ext;
}

PointwiseCheck shimorin_pointwise_check(const KernelHandle& k, const KernelHandle& l, const KernelHandle& p,
                                        const Point& z, const std::vector<Point>& grid, double tol) {
    KernelHandle kz = kernel_schur_point(k, z), lz = kernel_schur_point(l, z);
    int n = static_cast<int>(grid.size());
    FloatMatrix lz_g(n, n), pl_g(n, n), pk_g(n, n), kz_g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Point &x = grid[i], &y = grid[j];
            Complex pv = checked(p, x, y);
            lz_g(i, j) = checked(lz, x, y);
            pl_g(i, j) = pv * checked(l, x, y);
            pk_g(i, j) = pv * checked(k, x, y);
            kz_g(i, j) = checked(kz, x, y);
        }
    // differences of equal kernels vanish, so the tolerance is taken relative to the terms
    double lscale = std::max(operator_norm(lz_g), operator_norm(pl_g));
    double kscale = std::max(operator_norm(pk_g), operator_norm(kz_g));
    return {psd_test_float(lz_g - pl_g, tol, lscale), psd_test_float(pk_g - kz_g, tol, kscale)};
}

FinitePointwiseCheck shimorin_pointwise_check_exact(const HermitianExact& K, const HermitianExact& L,
                                                    const HermitianExact& P, int t) {
    int n = K.size();
    if (L.size() != n || P.size() != n) throw ValidationError("finite kernels have different sizes");
    HermitianExact Kt = finite_schur_point(K, t), Lt = finite_schur_point(L, t);
    std::vector<Gaussian> lo(static_cast<std::size_t>(n) * n), up(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            lo[i * n + j] = Lt(i, j) - P(i, j) * L(i, j);
            up[i * n + j] = P(i, j) * K(i, j) - Kt(i, j);
        }
    return {psd_test_exact(HermitianExact(n, std::move(lo))), psd_test_exact(HermitianExact(n, std::move(up)))};
}

std::vector<std::vector<int>> irreducible_components(const HermitianExact& K) {
    int n = K.size();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!K(i, j).is_zero()) {
                int a = find(i), b = find(j);
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
    std::map<int, std::vector<int>> groups;
    for (int i = 0; i < n; ++i) groups[find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& [root, members] : groups) out.push_back(members);
    return out;
}

std::vector<PatternViolation> zero_pattern_audit(const HermitianExact& K, const HermitianExact& L) {
    int n = K.size();
    if (L.size() != n) throw ValidationError("kernels have different sizes");
    std::vector<PatternViolation> out;
    for (int z = 0; z < n; ++z)
        for (int w = z + 1; w < n; ++w) {
            if (!K(z, w).is_zero()) continue;
            if (!L(z, w).is_zero()) out.push_back({z, w, -1, "k(z,w) = 0 but l(z,w) != 0"});
            for (int v = 0; v < n; ++v) {
                if (v == z || v == w) continue;
                bool l_zero = L(z, v).is_zero() && L(w, v).is_zero();
                bool k_zero = K(z, v).is_zero() || K(w, v).is_zero();
                if (!l_zero && !k_zero)
                    out.push_back({z, w, v, "k(z,w) = 0 but neither l(z,v) = l(w,v) = 0 nor k(z,v) k(w,v) = 0"});
            }
        }
    return out;
}

nlohmann::json to_json(const ExactMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.rows; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back({{"re", to_string(m(i, j).re)}, {"im", to_string(m(i, j).im)}});
        rows.push_back(row);
    }
    return rows;
}

ExactMatrix exact_matrix_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty()) throw ValidationError("matrix must be a nonempty array of rows");
    int r = static_cast<int>(j.size()), c = static_cast<int>(j[0].size());
    ExactMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (!j[i].is_array() || static_cast<int>(j[i].size()) != c) throw ValidationError("matrix rows must have equal length");
        for (int k = 0; k < c; ++k) {
            const auto& e = j[i][k];
            if (e.is_string())
                m(i, k) = Gaussian(parse_rational(e.get<std::string>()));
            else if (e.is_object())
                m(i, k) = Gaussian(parse_rational(e.value("re", "0")), parse_rational(e.value("im", "0")));
            else
                throw ValidationError("matrix entries must be \"p/q\" strings or {re, im} objects");
        }
    }
    return m;
}

nlohmann::json to_json(const CaratheodoryData& d) {
    nlohmann::json F = nlohmann::json::array(), coeffs = nlohmann::json::array();
    for (auto& a : d.F) F.push_back(to_json(a));
    for (auto& [a, m] : d.c)
        if (!m.is_zero()) coeffs.push_back({{"index", to_json(a)}, {"matrix", to_json(m)}});
    return {{"format", "ccdata/1"}, {"variables", d.variables}, {"J", d.J}, {"F", F}, {"coefficients", coeffs}};
}

CaratheodoryData caratheodory_from_json(const nlohmann::json& j) {
    if (!j.is_object() || j.value("format", "") != "ccdata/1") throw ValidationError("expected a ccdata/1 object");
    CaratheodoryData d;
    d.variables = j.value("variables", 1);
    d.J = j.value("J", 1);
    for (auto& a : j.at("F")) d.F.insert(multi_index_from_json(a));
    for (auto& e : j.value("coefficients", nlohmann::json::array())) {
        MultiIndex a = multi_index_from_json(e.at("index"));
        d.c[a] = exact_matrix_from_json(e.at("matrix"));
    }
    require_valid(d);
    return d;
}

nlohmann::json to_json(const FloatPsd& p) {
    return {{"is_psd", p.is_psd}, {"min_eigenvalue", p.min_eigenvalue}, {"norm", p.norm}, {"tol", p.tol},
            {"method", "float"}};
}

nlohmann::json to_json(const CaratheodoryExtension& e) {
    nlohmann::json j = {{"feasible", e.feasible}, {"shifted_gram", to_json(e.shifted)}};
    if (e.feasible) {
        j["extended"] = to_json(e.extended);
        j["completed_norm"] = e.completed_norm;
        j["slack"] = e.slack;
        j["slack_tol"] = 1e-8;
        j["rounding_grid"] = 1e-12;
        j["exact_psd_after_rounding"] = e.exact_psd;
        j["success"] = e.success;
    }
    return j;
}

}  // namespace shimorin
