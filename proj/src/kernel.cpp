#include "shimorin/kernel.hpp"

#include "shimorin/errors.hpp"

namespace shimorin {

Complex evaluate_diagonal(const DiagonalSeries& f, const Point& z, const Point& w) {
    int g = f.variables();
    if (static_cast<int>(z.size()) != g || static_cast<int>(w.size()) != g)
        throw ValidationError("point dimension does not match kernel variables");
    std::vector<Complex> x(g);
    for (int j = 0; j < g; ++j) x[j] = z[j] * std::conj(w[j]);
    Complex acc = 0;
    for (auto& [a, c] : f.terms()) {
        Complex term = c.get_d();
        for (int j = 0; j < g; ++j)
            if (a[j]) term *= std::pow(x[j], a[j]);
        acc += term;
    }
    return acc;
}

KernelHandle handle_from_series(const std::string& name, const DiagonalSeries& f) {
    KernelHandle h;
    h.name = name;
    h.variables = f.variables();
    h.eval = [f](const Point& z, const Point& w) { return evaluate_diagonal(f, z, w); };
    h.diagonal = [f](int n) {
        if (n > f.truncation()) throw ValidationError("series only known to degree " + std::to_string(f.truncation()));
        return f.truncated(n);
    };
    return h;
}

KernelHandle handle_from_series(const std::string& name, const BivariateSeries& f) {
    KernelHandle h;
    h.name = name;
    h.variables = 1;
    h.eval = [f](const Point& z, const Point& w) {
        if (z.size() != 1 || w.size() != 1) throw ValidationError("bivariate kernels take scalar points");
        return f.evaluate(z[0], w[0]);
    };
    h.bivariate = [f](int n) {
        if (n > f.truncation()) throw ValidationError("series only known to degree " + std::to_string(f.truncation()));
        return f.truncated(n);
    };
    return h;
}

}  // namespace shimorin
