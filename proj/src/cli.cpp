#include "shimorin/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "shimorin/catalog.hpp"
#include "shimorin/certificates.hpp"
#include "shimorin/errors.hpp"
#include "shimorin/float_linalg.hpp"
#include "shimorin/hermitian.hpp"
#include "shimorin/interpolation.hpp"
#include "shimorin/kernelspec.hpp"
#include "shimorin/report.hpp"
#include "shimorin/sampling.hpp"

namespace shimorin {

namespace {

struct Common {
    int degree = -1;
    double tol = -1;
    std::uint64_t seed = 0;
    std::string out;
    std::string format = "json";
};

void add_common(CLI::App* sub, Common& c, bool with_degree, bool with_seed) {
    if (with_degree) sub->add_option("--degree", c.degree, "truncation degree of the verdict");
    sub->add_option("--tol", c.tol, "tolerance (defaults per command)");
    if (with_seed) sub->add_option("--seed", c.seed, "random seed");
    sub->add_option("--out", c.out, "write the report here instead of stdout");
    sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json"}));
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            int v = std::stoi(item, &pos);
            if (pos != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw ValidationError("expected a comma-separated integer list, got '" + s + "'");
        }
    }
    return out;
}

std::vector<double> parse_double_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw ValidationError("expected a comma-separated number list, got '" + s + "'");
        }
    }
    return out;
}

DiagonalSeries load_diagonal(const std::string& path, RunReport& rep) {
    rep.add_input(path);
    return diagonal_from_json(read_json_file(path));
}

int resolve_degree(int requested, std::initializer_list<const DiagonalSeries*> fs) {
    if (requested >= 0) return requested;
    int n = std::numeric_limits<int>::max();
    for (auto* f : fs) n = std::min(n, f->truncation());
    return n;
}

Complex complex_from_json(const json& e) {
    if (e.is_number()) return {e.get<double>(), 0.0};
    if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) return {e[0].get<double>(), e[1].get<double>()};
    throw ValidationError("complex numbers are numbers or [re, im] pairs");
}

Point point_from_json(const json& j) {
    Point p;
    if (j.is_array() && !j.empty() && (j[0].is_array() || j.size() != 2))
        for (auto& e : j) p.push_back(complex_from_json(e));
    else
        p.push_back(complex_from_json(j));
    return p;
}

KernelHandle kernel_from_json(const json& j, RunReport& rep, const std::string& base_dir) {
    if (j.contains("catalog")) {
        rep.add_inline_input("catalog", j["catalog"].get<std::string>());
        return catalog_by_name(j["catalog"].get<std::string>(), j.value("params", json::object()));
    }
    if (j.contains("kernelspec")) {
        std::string path = j["kernelspec"].get<std::string>();
        if (!path.empty() && path[0] != '/' && !base_dir.empty()) path = base_dir + "/" + path;
        rep.add_input(path);
        AnySeries s = series_from_json(read_json_file(path));
        return std::visit([&](const auto& f) { return handle_from_series(path, f); }, s);
    }
    throw ValidationError("kernel must be given by \"catalog\" or \"kernelspec\"");
}

std::string dir_of(const std::string& path) {
    auto p = path.find_last_of('/');
    return p == std::string::npos ? "" : path.substr(0, p);
}

struct Emitter {
    std::ostream& out;
    std::string path;

    void operator()(const json& j) const {
        if (path.empty()) {
            out << j.dump(2) << "\n";
            return;
        }
        write_json_file(path, j);
    }
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Shimorin certificates for pairs of reproducing kernels", "shimorin"};
    app.require_subcommand(1);

    Common c;
    std::string file1, file2, file3, name, indices, direction, params = "{}", index;
    int count = 40;
    double radius = 0.3;
    bool spec_only = true;

    auto* mastercert = app.add_subcommand("mastercert", "master certificate of a diagonal kernel");
    mastercert->add_option("kernel", file1, "kernelspec file")->required();
    add_common(mastercert, c, true, false);

    auto* certify = app.add_subcommand("certify", "complete Pick / Carathéodory verdict for a diagonal pair (k, l)");
    certify->add_option("k", file1, "kernelspec file for k")->required();
    certify->add_option("l", file2, "kernelspec file for l")->required();
    add_common(certify, c, true, false);

    auto* chain = app.add_subcommand("chain", "recursive chain conditions l_(m0,...,mj)/k >= 0");
    chain->add_option("l", file1, "kernelspec file for l")->required();
    chain->add_option("k", file2, "kernelspec file for k")->required();
    chain->add_option("--indices", indices, "comma-separated chain indices")->required();
    add_common(chain, c, true, false);

    auto* psd = app.add_subcommand("psd", "exact PSD test of an hmat/1 matrix");
    psd->add_option("matrix", file1, "hmat/1 file")->required();
    add_common(psd, c, false, false);

    auto* parrott = app.add_subcommand("parrott", "central Parrott completion of [[A, ?], [C, D]]");
    parrott->add_option("blocks", file1, "parrott/1 file with A, C, D")->required();
    add_common(parrott, c, false, false);

    auto* pick = app.add_subcommand("pick", "Pick matrix positivity and one-point extension feasibility");
    pick->add_option("problem", file1, "pick/1 file")->required();
    add_common(pick, c, false, false);

    auto* cc = app.add_subcommand("cc-extend", "one-step Carathéodory extension");
    cc->alias("cc_extend");
    cc->add_option("k", file1, "kernelspec file for k")->required();
    cc->add_option("l", file2, "kernelspec file for l")->required();
    cc->add_option("data", file3, "ccdata/1 file")->required();
    cc->add_option("--index", index, "new multi-index, comma separated")->required();
    add_common(cc, c, false, false);

    auto* rad = app.add_subcommand("radius", "radius of the certificate domain along a direction");
    rad->add_option("theta", file1, "kernelspec file of the certificate")->required();
    rad->add_option("--direction", direction, "comma-separated moduli of a direction (default: first axis / g = 1)");
    add_common(rad, c, false, false);

    auto* cat = app.add_subcommand("catalog", "emit a catalog kernel as kernelspec JSON");
    cat->add_option("name", name, "kernel name")->required();
    cat->add_option("--params", params, "JSON object of parameters");
    cat->add_flag("!--report", spec_only, "wrap the series in a run report");
    add_common(cat, c, true, false);

    auto* sample = app.add_subcommand("sample-check", "Gram-matrix positivity of a catalog kernel on a random grid");
    sample->alias("sample_check");
    sample->add_option("name", name, "kernel name")->required();
    sample->add_option("--params", params, "JSON object of parameters");
    sample->add_option("--count", count, "number of grid points");
    sample->add_option("--radius", radius, "grid radius");
    add_common(sample, c, false, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    Emitter emit{out, c.out};
    try {
        if (mastercert->parsed()) {
            RunReport rep("mastercert");
            DiagonalSeries k = load_diagonal(file1, rep);
            int n = resolve_degree(c.degree, {&k});
            DiagonalSeries theta = master_certificate(k, n);
            rep.set_degree(n);
            rep.set_verdict("computed", "exact");
            rep.set_result({{"theta", to_json(theta)}, {"theta_display", theta.str()}});
            emit(rep.finish());
            return 0;
        }
        if (certify->parsed()) {
            RunReport rep("certify");
            DiagonalSeries k = load_diagonal(file1, rep), l = load_diagonal(file2, rep);
            int n = resolve_degree(c.degree, {&k, &l});
            CertificateReport r = certify_pair(k, l, n);
            rep.set_degree(n);
            rep.set_verdict(r.pass ? "pass" : "fail", "exact");
            rep.set_result(to_json(r));
            emit(rep.finish());
            return r.pass ? 0 : 1;
        }
        if (chain->parsed()) {
            RunReport rep("chain");
            DiagonalSeries l = load_diagonal(file1, rep), k = load_diagonal(file2, rep);
            int n = resolve_degree(c.degree, {&k, &l});
            ChainReport r = ell_chain(l, k, parse_int_list(indices), n);
            rep.set_degree(n);
            rep.set_verdict(r.verdict_available ? (r.pass ? "pass" : "fail") : "withheld", "exact");
            rep.set_result(to_json(r));
            emit(rep.finish());
            return r.verdict_available && !r.pass ? 1 : 0;
        }
        if (psd->parsed()) {
            RunReport rep("psd");
            rep.add_input(file1);
            PsdVerdict v = psd_test_exact(hermitian_from_json(read_json_file(file1)));
            rep.set_verdict(v.is_psd ? "pass" : "fail", "exact");
            rep.set_result(to_json(v));
            emit(rep.finish());
            return v.is_psd ? 0 : 1;
        }
        if (parrott->parsed()) {
            RunReport rep("parrott");
            rep.add_input(file1);
            json j = read_json_file(file1);
            if (j.value("format", "") != "parrott/1") throw ValidationError("expected a parrott/1 object");
            double slack = c.tol >= 0 ? c.tol : 1e-9;
            ParrottResult r = parrott_complete(float_matrix_from_json(j.at("A")), float_matrix_from_json(j.at("C")),
                                               float_matrix_from_json(j.at("D")), slack);
            double bound = std::max(r.column_norm, r.row_norm) + 1e-8;
            bool ok = r.completed_norm <= bound;
            rep.set_tolerance("constraint_slack", slack);
            rep.set_tolerance("completion_excess", 1e-8);
            rep.set_verdict(ok ? "pass" : "fail", "float");
            rep.set_result({{"B", to_json(r.B)}, {"column_norm", r.column_norm}, {"row_norm", r.row_norm},
                            {"completed_norm", r.completed_norm}});
            emit(rep.finish());
            return ok ? 0 : 1;
        }
        if (pick->parsed()) {
            RunReport rep("pick");
            rep.add_input(file1);
            json j = read_json_file(file1);
            if (j.value("format", "") != "pick/1") throw ValidationError("expected a pick/1 object");
            std::string base = dir_of(file1);
            PickProblem p{{}, {}, kernel_from_json(j.at("k"), rep, base), kernel_from_json(j.at("l"), rep, base)};
            for (auto& z : j.value("points", json::array())) p.points.push_back(point_from_json(z));
            for (auto& w : j.value("targets", json::array())) p.targets.push_back(float_matrix_from_json(w));
            double tol = c.tol >= 0 ? c.tol : 1e-9;
            rep.set_tolerance("psd_relative", tol);
            json result;
            bool ok;
            if (j.contains("z_new")) {
                rep.set_tolerance("independence", 1e-10);
                ExtensionVerdict v = one_point_extension_feasible(p, point_from_json(j["z_new"]), tol);
                ok = v.feasible;
                result = {{"feasible", v.feasible}, {"original", to_json(v.original)}, {"reduced", to_json(v.reduced)},
                          {"gram_min_ratio", v.gram_min_ratio}};
            } else {
                FloatPsd v = psd_test_float(pick_matrix(p), tol);
                ok = v.is_psd;
                result = {{"pick_matrix", to_json(v)}};
            }
            rep.set_verdict(ok ? "pass" : "fail", "float");
            rep.set_result(result);
            emit(rep.finish());
            return ok ? 0 : 1;
        }
        if (cc->parsed()) {
            RunReport rep("cc-extend");
            DiagonalSeries k = load_diagonal(file1, rep), l = load_diagonal(file2, rep);
            rep.add_input(file3);
            CaratheodoryData data = caratheodory_from_json(read_json_file(file3));
            MultiIndex d(parse_int_list(index));
            CaratheodoryExtension e = caratheodory_extend(data, k, l, d);
            rep.set_tolerance("parrott_slack", 1e-9);
            rep.set_tolerance("contraction_slack", 1e-8);
            rep.set_tolerance("rounding_grid", 1e-12);
            rep.set_verdict(e.success ? "pass" : "fail", e.feasible ? "exact feasibility, float completion" : "exact");
            rep.set_result(to_json(e));
            emit(rep.finish());
            return e.success ? 0 : 1;
        }
        if (rad->parsed()) {
            RunReport rep("radius");
            DiagonalSeries theta = load_diagonal(file1, rep);
            double tol = c.tol >= 0 ? c.tol : 1e-12;
            std::vector<double> dir = direction.empty() ? std::vector<double>(theta.variables(), 0.0) : parse_double_list(direction);
            if (direction.empty()) dir[0] = 1.0;
            double r = omega1_radius(theta, dir, tol);
            rep.set_tolerance("bisection_absolute", tol);
            rep.set_verdict("computed", "float");
            rep.set_result({{"radius", std::isinf(r) ? json("inf") : json(r)}, {"direction", dir}});
            emit(rep.finish());
            return 0;
        }
        if (cat->parsed()) {
            json p = json::parse(params, nullptr, false);
            if (p.is_discarded() || !p.is_object()) throw ValidationError("--params must be a JSON object");
            KernelHandle h = catalog_by_name(name, p);
            int n = c.degree >= 0 ? c.degree : 10;
            json spec;
            if (h.diagonal)
                spec = to_json(h.diagonal(n));
            else if (h.bivariate)
                spec = to_json(h.bivariate(n));
            else
                throw ValidationError("kernel " + name + " has no exact series form");
            if (spec_only) {
                emit(spec);
                return 0;
            }
            RunReport rep("catalog");
            rep.add_inline_input("name", name);
            rep.add_inline_input("params", p.dump());
            rep.set_degree(n);
            rep.set_verdict("computed", "exact");
            rep.set_result(spec);
            emit(rep.finish());
            return 0;
        }
        if (sample->parsed()) {
            json p = json::parse(params, nullptr, false);
            if (p.is_discarded() || !p.is_object()) throw ValidationError("--params must be a JSON object");
            RunReport rep("sample-check");
            rep.add_inline_input("name", name);
            rep.add_inline_input("params", p.dump());
            KernelHandle h = catalog_by_name(name, p);
            double tol = c.tol >= 0 ? c.tol : 1e-9;
            GramVerdict v = gram_psd(h, random_grid(h.variables, count, radius, c.seed), tol);
            rep.set_tolerance("psd_relative", tol);
            rep.set_verdict(v.psd.is_psd ? "pass" : "fail", "float");
            rep.set_result(to_json(v));
            emit(rep.finish());
            return v.psd.is_psd ? 0 : 1;
        }
    } catch (const NumericalBreakdown& e) {
        err << "numerical breakdown: " << e.what() << "\n";
        return 3;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace shimorin
