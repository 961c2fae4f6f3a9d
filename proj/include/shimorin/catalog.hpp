#pragma once

#include <functional>
#include <vector>

#include <json.hpp>

#include "shimorin/hermitian.hpp"
#include "shimorin/kernel.hpp"

namespace shimorin {

KernelHandle szego();
KernelHandle bergman();
// 1/(1 - c x)
KernelHandle geometric(const Rational& c);
// prod_i (1 - z_i w-bar_i)^{-p_i}
KernelHandle polydisc_weights(const std::vector<int>& p);
// (1 - <z, w>)^{-alpha} on the ball in C^g
KernelHandle ball_power(int alpha, int g);
// 1/((1 + x + 4x^2)(1 - 3x))
KernelHandle prop65_kernel();
// s = 1/(1 - P), P = z w-bar [3 - 2z - 2w-bar + 2 z w-bar] + 8 (z w-bar)^3/(1 - z w-bar)
KernelHandle lastex_kernel();
// the P above as an exact coefficient matrix
BivariateSeries lastex_P(int n);

struct GLambda {
    Complex lambda;
    std::function<Complex(Complex)> g;
    KernelHandle s;  // 1/(1 - g(z) conj(g(w)))
    KernelHandle h;  // 2 z w-bar (z - lambda) conj(w - lambda) / ((1 - z w-bar)^2 (2 - |lambda|^2))
    std::function<bool(Complex)> in_domain;  // |g(z)| < 1
};

GLambda g_lambda(Complex lambda);

struct Example32 {
    HermitianExact K;
    HermitianExact L;
    std::vector<HermitianExact> p;  // p[t](z, w) = 0 if z = t or w = t, else 1
};

Example32 finite_example32();

// lookup used by the command line: name plus JSON parameters
KernelHandle catalog_by_name(const std::string& name, const nlohmann::json& params);
std::vector<std::string> catalog_names();

}  // namespace shimorin
