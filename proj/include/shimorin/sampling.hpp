#pragma once

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "shimorin/float_linalg.hpp"
#include "shimorin/kernel.hpp"

namespace shimorin {

struct Grid {
    int variables = 1;
    std::uint64_t seed = 0;
    double radius = 0;
    int count = 0;
    std::vector<Point> points;
};

// uniform in the ball of the given radius in C^g; points closer than 1e-8 are redrawn
Grid random_grid(int variables, int count, double radius, std::uint64_t seed);
Grid grid_from_json(const nlohmann::json& j);

FloatMatrix gram_matrix(const KernelHandle& k, const std::vector<Point>& points);

struct GramVerdict {
    FloatPsd psd;
    std::uint64_t seed = 0;
    int count = 0;
    double radius = 0;
};

GramVerdict gram_psd(const KernelHandle& k, const Grid& grid, double tol = 1e-9);

// Orthogonal projection in H_l for a one-variable diagonal l, in the orthonormal coordinates
// e_n = sqrt(l_n) z^n, n <= truncation.
struct Projection {
    int truncation = 0;
    FloatMatrix P;
    double condition = 0;
};

// projection onto span{z^0, ..., z^{m-1}} + span{l_lambda : lambda in Lambda}
Projection span_projection(const KernelHandle& l, const std::vector<Complex>& lambda, int m, int truncation = 40,
                           double max_condition = 1e10);

// coordinates of the kernel section l_w
Eigen::VectorXcd kernel_section(const KernelHandle& l, Complex w, int truncation);

// <(I - P) l_w, l_z>, the reproducing kernel of the complement of the span
Complex complement_kernel(const KernelHandle& l, const Projection& p, Complex z, Complex w);

nlohmann::json to_json(const GramVerdict& v);

}  // namespace shimorin
