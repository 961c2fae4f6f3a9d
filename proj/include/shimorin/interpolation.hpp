#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "shimorin/float_linalg.hpp"
#include "shimorin/hermitian.hpp"
#include "shimorin/kernel.hpp"
#include "shimorin/multi_index.hpp"
#include "shimorin/series.hpp"

namespace shimorin {

struct PickProblem {
    std::vector<Point> points;
    std::vector<FloatMatrix> targets;  // all N x N
    KernelHandle k;
    KernelHandle l;
};

// blocks l(z_i, z_j) I - k(z_i, z_j) W_i W_j*
FloatMatrix pick_matrix(const PickProblem& p);

// k^z(w, v) = k(w, v) - k(w, z) k(z, v) / k(z, z)
KernelHandle kernel_schur_point(const KernelHandle& k, const Point& z);

// Exact Schur complement of a finite kernel at index t; a vanishing diagonal (with its row) leaves K unchanged.
HermitianExact finite_schur_point(const HermitianExact& K, int t);

struct ExtensionVerdict {
    bool feasible = false;
    FloatPsd original;  // Pick matrix of the given data
    FloatPsd reduced;   // Pick matrix of the one-point Schur-complement kernels
    double gram_min_ratio = 0;  // smallest / largest eigenvalue of the l Gram matrix
};

ExtensionVerdict one_point_extension_feasible(const PickProblem& p, const Point& z_new, double tol = 1e-9,
                                              double independence = 1e-10);

// J x J matrix of Gaussian rationals
struct ExactMatrix {
    int rows = 0, cols = 0;
    std::vector<Gaussian> a;

    ExactMatrix() = default;
    ExactMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
    const Gaussian& operator()(int i, int j) const { return a[i * cols + j]; }
    Gaussian& operator()(int i, int j) { return a[i * cols + j]; }
    bool is_zero() const;
    FloatMatrix to_float() const;
};

struct CaratheodoryData {
    int variables = 1;
    int J = 1;
    IndexSet F;
    std::map<MultiIndex, ExactMatrix, GradedLess> c;  // missing entries are zero

    ExactMatrix coefficient(const MultiIndex& a) const;
};

// exact [l_a delta_ab I - sum_{u <= a,b} k_u c*_{a-u} c_{b-u}] over F in graded order
HermitianExact caratheodory_gram(const CaratheodoryData& data, const DiagonalSeries& k, const DiagonalSeries& l);
// same form over F u {d} with the sum restricted to 0 < u
HermitianExact caratheodory_gram_shifted(const CaratheodoryData& data, const MultiIndex& d, const DiagonalSeries& k,
                                         const DiagonalSeries& l);
// float matrix with blocks c_{b-a} sqrt(k_a / l_b), a <= b
FloatMatrix caratheodory_matrix(const CaratheodoryData& data, const DiagonalSeries& k, const DiagonalSeries& l);

struct CaratheodoryExtension {
    bool feasible = false;          // shifted Gram PSD (exact)
    PsdVerdict shifted;             // exact verdict for the row constraint
    CaratheodoryData extended;
    FloatMatrix c_d_float;
    double completed_norm = 0;      // ||C~|| with the rounded c_d
    double slack = 0;               // max(0, completed_norm - 1)
    bool exact_psd = false;         // exact Gram of the extended data
    bool success = false;           // feasible and slack <= 1e-8
};

CaratheodoryExtension caratheodory_extend(const CaratheodoryData& data, const DiagonalSeries& k,
                                          const DiagonalSeries& l, const MultiIndex& d);

struct PointwiseCheck {
    FloatPsd lower;  // l^z - p l
    FloatPsd upper;  // p k - k^z
    bool pass() const { return lower.is_psd && upper.is_psd; }
};

PointwiseCheck shimorin_pointwise_check(const KernelHandle& k, const KernelHandle& l, const KernelHandle& p,
                                        const Point& z, const std::vector<Point>& grid, double tol = 1e-9);

struct FinitePointwiseCheck {
    PsdVerdict lower;
    PsdVerdict upper;
    bool pass() const { return lower.is_psd && upper.is_psd; }
};

// the same conditions on a finite set, exactly; P is the certificate kernel p[t]
FinitePointwiseCheck shimorin_pointwise_check_exact(const HermitianExact& K, const HermitianExact& L,
                                                    const HermitianExact& P, int t);

std::vector<std::vector<int>> irreducible_components(const HermitianExact& K);

struct PatternViolation {
    int z, w;
    int v = -1;           // third point, -1 when L[z][w] itself is nonzero
    std::string reason;
};

std::vector<PatternViolation> zero_pattern_audit(const HermitianExact& K, const HermitianExact& L);

nlohmann::json to_json(const ExactMatrix& m);
ExactMatrix exact_matrix_from_json(const nlohmann::json& j);
nlohmann::json to_json(const CaratheodoryData& d);
CaratheodoryData caratheodory_from_json(const nlohmann::json& j);
nlohmann::json to_json(const FloatPsd& p);
nlohmann::json to_json(const CaratheodoryExtension& e);

}  // namespace shimorin
