#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "shimorin/bivariate.hpp"
#include "shimorin/errors.hpp"
#include "shimorin/series.hpp"

namespace shimorin {

// Greedy max-against-zero recursion theta_b = max{0, k_b - sum_{w+u=b, w,u != 0} theta_w k_u}.
DiagonalSeries master_certificate(const DiagonalSeries& k, int n);

struct SeriesCheck {
    DiagonalSeries series;
    std::optional<MultiIndex> first_negative;
    Rational value;  // coefficient at first_negative
    bool nonnegative() const { return !first_negative; }
};

// h = 1 - k(1 - t)
SeriesCheck shimorin_h(const DiagonalSeries& k, const DiagonalSeries& t);
// g = l(1 - t)
SeriesCheck shimorin_g(const DiagonalSeries& l, const DiagonalSeries& t);

struct CertificateReport {
    int degree = 0;
    bool pass = false;
    DiagonalSeries t{1, 0};
    DiagonalSeries g{1, 0};
    DiagonalSeries h{1, 0};
    std::optional<DiagonalSeries> s;  // 1/(1-t), set on pass
    std::optional<MultiIndex> first_failure;
    Rational failure_value;
    std::string failure_series;       // "g" or "h"
    bool identities_verified = false; // k = (1-h)s and l = g s, exact to degree
};

CertificateReport certify_pair(const DiagonalSeries& k, const DiagonalSeries& l, int n);
CertificateReport verify_formal_certificate(const DiagonalSeries& k, const DiagonalSeries& l, const DiagonalSeries& t);

struct VSequence {
    MultiIndex d;
    IndexSet S;
    std::vector<std::pair<MultiIndex, Rational>> v;        // graded order over {a <= d}
    std::vector<std::pair<MultiIndex, Rational>> residual; // l_a - sum_{u<=a} v_u k_{a-u}
    std::optional<MultiIndex> negative_v;
    std::optional<MultiIndex> negative_residual;
    bool holds() const { return !negative_v && !negative_residual; }
};

VSequence greedy_v_sequence(const DiagonalSeries& k, const DiagonalSeries& l, const MultiIndex& d, const IndexSet& S);
// S = {a <= d : theta_{d-a} = 0}
IndexSet vanishing_certificate_set(const DiagonalSeries& theta, const MultiIndex& d);

struct ChainStage {
    int index;
    DiagonalSeries kernel;    // the chain element after subtracting at `index`
    DiagonalSeries quotient;  // kernel / k
    std::optional<int> first_negative;
    Rational negative_value;
};

struct ChainReport {
    std::vector<ChainStage> stages;
    bool verdict_available = false;  // only for strictly increasing indices
    bool pass = false;
};

ChainReport ell_chain(const DiagonalSeries& l, const DiagonalSeries& k, const std::vector<int>& indices, int n);

// r > 0 with sum_a theta_a prod_j (r u_j)^{2 a_j} = 1 along the unit direction u (nonnegative moduli);
// +infinity if the truncated sum stays below 1.
double omega1_radius(const DiagonalSeries& theta, double tol = 1e-12);
double omega1_radius(const DiagonalSeries& theta, const std::vector<double>& direction, double tol = 1e-12);

struct RegularityError : ValidationError {
    RegularityError(const std::string& what, std::vector<int> minor_) : ValidationError(what), minor(std::move(minor_)) {}
    std::vector<int> minor;
};

// first principal index set of the leading (n+1)x(n+1) block with zero determinant
std::optional<std::vector<int>> find_singular_principal_minor(const BivariateSeries& l, int n);

struct AuditRow {
    int n;
    Rational pivot;          // l^(n)_{nn}
    Rational previous;       // l^(n-1)_{(n-1)(n-1)}
    bool doubling_holds;     // pivot >= 2 previous
    bool geometric_holds;    // l_{nn} >= 2^n l_{00}
};

struct AuditReport {
    int degree = 0;
    std::vector<AuditRow> rows;
    bool pass = true;
    std::optional<int> first_failure;
};

AuditReport bergman_necessity_audit(const BivariateSeries& l, int n);

nlohmann::json to_json(const CertificateReport& r);
nlohmann::json to_json(const VSequence& v);
nlohmann::json to_json(const ChainReport& r);
nlohmann::json to_json(const AuditReport& r);

}  // namespace shimorin
