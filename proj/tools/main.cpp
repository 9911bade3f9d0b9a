#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "config.hpp"

#include "hypoheat/fibration/area_cf.hpp"
#include "hypoheat/special/circular_jacobi.hpp"
#include "hypoheat/special/hyperbolic_kernel.hpp"
#include "hypoheat/special/quadrature.hpp"
#include "hypoheat/special/sphere_kernel.hpp"
#include "hypoheat/special/su2_kernel.hpp"
#include "hypoheat/fibration/kernels.hpp"
#include "hypoheat/fibration/models.hpp"
#include "hypoheat/flat/area_cf.hpp"
#include "hypoheat/flat/densities.hpp"
#include "hypoheat/flat/models.hpp"
#include "hypoheat/matrix/grassmann.hpp"
#include "hypoheat/matrix/unitary.hpp"
#include "hypoheat/sde/ensemble.hpp"
#include "hypoheat/stats/ecf.hpp"
#include "hypoheat/stats/gil_pelaez.hpp"
#include "hypoheat/stats/laws.hpp"
#include "hypoheat/stats/report.hpp"
#include "hypoheat/stats/tests.hpp"
#include "hypoheat/winding/models.hpp"

namespace {

using namespace hypoheat;

constexpr const char* kVersion = "0.1.0";

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct ParsedModel {
    std::string family;
    std::vector<double> args;
};

ParsedModel parse_model(const std::string& tag) {
    ParsedModel m;
    const auto lp = tag.find('(');
    if (lp == std::string::npos) {
        m.family = tag;
        return m;
    }
    m.family = tag.substr(0, lp);
    const auto rp = tag.find(')', lp);
    std::stringstream ss(tag.substr(lp + 1, rp - lp - 1));
    std::string tok;
    while (std::getline(ss, tok, ',')) m.args.push_back(std::stod(tok));
    return m;
}

std::ofstream open_csv(const cli::RunConfig& cfg, const std::string& name,
                       const std::string& header) {
    std::filesystem::create_directories(cfg.out_dir);
    std::ofstream out(std::filesystem::path(cfg.out_dir) / name);
    out << "# hypoheat " << kVersion << ", config_hash=" << std::hex
        << fnv1a(cfg.serialize()) << std::dec << ", seed=" << cfg.seed << "\n";
    out << header << "\n";
    return out;
}

int run_simulate(const cli::RunConfig& cfg) {
    const auto pm = parse_model(cfg.model);
    sde::TimeGrid grid(cfg.t, cfg.steps);
    if (pm.family == "heisenberg" || pm.family == "qheisenberg" ||
        pm.family == "oheisenberg" ) {
        flat::FlatModel model =
            pm.family == "heisenberg"
                ? flat::FlatModel::complex_heisenberg(static_cast<int>(pm.args.at(0)))
                : pm.family == "qheisenberg"
                      ? flat::FlatModel::quaternionic_heisenberg(
                            static_cast<int>(pm.args.at(0)))
                      : flat::FlatModel::octonionic_heisenberg();
        auto e = flat::simulate_flat_area(model, grid, cfg.paths, cfg.seed);
        std::string header = "path_id,t";
        for (int j = 0; j < model.base_dim(); ++j) header += ",b" + std::to_string(j);
        for (int j = 0; j < model.area_dim(); ++j) header += ",s" + std::to_string(j);
        auto out = open_csv(cfg, "simulate.csv", header);
        for (std::size_t p = 0; p < e.n_paths; ++p) {
            out << p << "," << fmt17(cfg.t);
            for (std::size_t j = 0; j < e.dim; ++j) out << "," << fmt17(e.at(p, 0, j));
            out << "\n";
        }
        return 0;
    }
    if (pm.family == "chopf" || pm.family == "cads" || pm.family == "qhopf" ||
        pm.family == "qads" || pm.family == "ohopf" || pm.family == "oads") {
        fib::FibrationModel::Kind kind =
            pm.family == "chopf"   ? fib::FibrationModel::Kind::CHopf
            : pm.family == "cads"  ? fib::FibrationModel::Kind::CAdS
            : pm.family == "qhopf" ? fib::FibrationModel::Kind::QHopf
            : pm.family == "qads"  ? fib::FibrationModel::Kind::QAdS
            : pm.family == "ohopf" ? fib::FibrationModel::Kind::OHopf
                                   : fib::FibrationModel::Kind::OAdS;
        auto model = fib::make_fibration(kind, pm.args.empty() ? 1 : static_cast<int>(pm.args[0]));
        auto e = fib::simulate_fibration_exact(model, {cfg.t}, cfg.paths, cfg.seed);
        auto fibv = fib::fiber_from_clock(e, model.fiber_dim(), cfg.seed);
        std::string header = "path_id,t,r,clock";
        for (int j = 0; j < model.fiber_dim(); ++j) header += ",a" + std::to_string(j);
        auto out = open_csv(cfg, "simulate.csv", header);
        for (std::size_t p = 0; p < e.n_paths; ++p) {
            out << p << "," << fmt17(cfg.t) << "," << fmt17(e.at(p, 0, 0)) << ","
                << fmt17(e.at(p, 0, 1));
            for (int j = 0; j < model.fiber_dim(); ++j)
                out << "," << fmt17(fibv[p * model.fiber_dim() + j]);
            out << "\n";
        }
        return 0;
    }
    if (pm.family.rfind("wind_", 0) == 0) {
        wind::WindingModel::Kind kind = pm.family == "wind_plane"
                                            ? wind::WindingModel::Kind::Plane
                                        : pm.family == "wind_quat"
                                            ? wind::WindingModel::Kind::Quaternionic
                                        : pm.family == "wind_cp1" ? wind::WindingModel::Kind::CP1
                                        : pm.family == "wind_ch1" ? wind::WindingModel::Kind::CH1
                                        : pm.family == "wind_hp1" ? wind::WindingModel::Kind::HP1
                                                                  : wind::WindingModel::Kind::HH1;
        auto model = wind::make_winding_model(kind, pm.args.empty() ? 1.0 : pm.args[0]);
        auto e = wind::simulate_winding_exact(model, {cfg.t}, cfg.paths, cfg.seed);
        auto fibv = wind::fiber_from_clock(e, model.fiber_dim(), cfg.seed);
        std::string header = "path_id,t,r,clock";
        for (int j = 0; j < model.fiber_dim(); ++j) header += ",zeta" + std::to_string(j);
        auto out = open_csv(cfg, "simulate.csv", header);
        for (std::size_t p = 0; p < e.n_paths; ++p) {
            out << p << "," << fmt17(cfg.t) << "," << fmt17(e.at(p, 0, 0)) << ","
                << fmt17(e.at(p, 0, 1));
            for (int j = 0; j < model.fiber_dim(); ++j)
                out << "," << fmt17(fibv[p * model.fiber_dim() + j]);
            out << "\n";
        }
        return 0;
    }
    if (pm.family == "unitary") {
        const int n = static_cast<int>(pm.args.at(0));
        std::vector<double> l0(n);
        for (int j = 0; j < n; ++j) l0[j] = 2.0 * M_PI * j / n - M_PI * (n - 1.0) / n;
        auto e = mat::unitary_eigen_sde(n, grid, cfg.paths, cfg.seed, l0);
        std::string header = "path_id,t";
        for (int j = 0; j < n; ++j) header += ",lambda" + std::to_string(j);
        header += ",min_gap";
        auto out = open_csv(cfg, "simulate.csv", header);
        const std::size_t last = e.times.size() - 1;
        for (std::size_t p = 0; p < e.n_paths; ++p) {
            out << p << "," << fmt17(cfg.t);
            for (int j = 0; j <= n; ++j) out << "," << fmt17(e.at(p, last, j));
            out << "\n";
        }
        return 0;
    }
    if (pm.family == "grassmann" || pm.family == "hgrassmann") {
        const int n = static_cast<int>(pm.args.at(0)), k = static_cast<int>(pm.args.at(1));
        std::vector<double> l0(k);
        for (int j = 0; j < k; ++j)
            l0[j] = pm.family == "grassmann" ? 0.3 + 0.9 * j : 0.2 + 0.5 * j / std::max(1, k - 1);
        auto model = mat::make_grassmann(n, k, pm.family == "hgrassmann", l0);
        std::string header = "path_id,t";
        for (int j = 0; j < k; ++j) header += ",lambda" + std::to_string(j);
        header += ",detz_mod,detz_arg,trace_eta,int_tr_j,min_gap";
        auto out = open_csv(cfg, "simulate.csv", header);
        std::vector<mat::GrassmannRecord> recs(cfg.paths);
        mat::grassmann_bm(model, grid, cfg.paths, cfg.seed, {cfg.steps},
                          [&](std::size_t p, std::size_t, const mat::GrassmannRecord& r) {
                              recs[p] = r;
                          });
        for (std::size_t p = 0; p < cfg.paths; ++p) {
            const auto& r = recs[p];
            out << p << "," << fmt17(r.t);
            for (int j = 0; j < k; ++j) out << "," << fmt17(r.eigenvalues[j]);
            out << "," << fmt17(r.det_z_modulus) << "," << fmt17(r.det_z_argument) << ","
                << fmt17(r.trace_eta) << "," << fmt17(r.int_tr_j) << ","
                << fmt17(r.min_gap) << "\n";
        }
        return 0;
    }
    throw std::runtime_error("simulate: unknown model '" + cfg.model + "'");
}

int run_cf(const cli::RunConfig& cfg) {
    const auto pm = parse_model(cfg.model);
    auto grid = cfg.lambda_grid.empty() ? std::vector<double>{0.0, 0.5, 1.0, 2.0}
                                        : cfg.lambda_grid;
    auto out = open_csv(cfg, "cf.csv", "lambda,value_re,value_im");
    for (double lam : grid) {
        double v = 0.0;
        if (pm.family == "heisenberg" || pm.family == "qheisenberg" ||
            pm.family == "oheisenberg") {
            flat::FlatModel model =
                pm.family == "heisenberg"
                    ? flat::FlatModel::complex_heisenberg(static_cast<int>(pm.args.at(0)))
                    : pm.family == "qheisenberg"
                          ? flat::FlatModel::quaternionic_heisenberg(
                                static_cast<int>(pm.args.at(0)))
                          : flat::FlatModel::octonionic_heisenberg();
            std::vector<double> lv(model.area_dim(), 0.0);
            lv[0] = lam;
            v = flat::flat_area_cf(model, lv, cfg.t);
        } else if (pm.family == "laguerre") {
            v = flat::laguerre_trace_cf(static_cast<int>(pm.args.at(0)),
                                        static_cast<int>(pm.args.at(1)), lam, cfg.t);
        } else {
            fib::FibrationModel::Kind kind =
                pm.family == "chopf"   ? fib::FibrationModel::Kind::CHopf
                : pm.family == "cads"  ? fib::FibrationModel::Kind::CAdS
                : pm.family == "qhopf" ? fib::FibrationModel::Kind::QHopf
                : pm.family == "qads"  ? fib::FibrationModel::Kind::QAdS
                : pm.family == "ohopf" ? fib::FibrationModel::Kind::OHopf
                                       : fib::FibrationModel::Kind::OAdS;
            auto model =
                fib::make_fibration(kind, pm.args.empty() ? 1 : static_cast<int>(pm.args[0]));
            v = fib::area_cf_marginal(model, lam, cfg.t);
        }
        out << fmt17(lam) << "," << fmt17(v) << "," << fmt17(0.0) << "\n";
    }
    return 0;
}

int run_kernel(const cli::RunConfig& cfg) {
    const auto pm = parse_model(cfg.model);
    fib::FibrationModel::Kind kind =
        pm.family == "chopf"   ? fib::FibrationModel::Kind::CHopf
        : pm.family == "cads"  ? fib::FibrationModel::Kind::CAdS
        : pm.family == "qhopf" ? fib::FibrationModel::Kind::QHopf
        : pm.family == "qads"  ? fib::FibrationModel::Kind::QAdS
        : pm.family == "ohopf" ? fib::FibrationModel::Kind::OHopf
                               : fib::FibrationModel::Kind::OAdS;
    auto model = fib::make_fibration(kind, pm.args.empty() ? 1 : static_cast<int>(pm.args[0]));
    auto rg = cfg.r_grid.empty() ? std::vector<double>{0.3, 0.6, 0.9} : cfg.r_grid;
    auto tg = cfg.theta_grid.empty() ? std::vector<double>{0.0, 0.5, 1.0} : cfg.theta_grid;
    auto out = open_csv(cfg, "kernel.csv", "r,theta,value");
    for (double r : rg)
        for (double th : tg) {
            const double v = fib::horizontal_kernel(
                model,
                model.compact() ? fib::KernelForm::Spectral : fib::KernelForm::Integral,
                cfg.t, r, th);
            out << fmt17(r) << "," << fmt17(th) << "," << fmt17(v) << "\n";
        }
    return 0;
}

std::vector<stats::TestReport> suite_kernels();
std::vector<stats::TestReport> suite_calibration(uint64_t seed);
std::vector<stats::TestReport> suite_flat(uint64_t seed);
std::vector<stats::TestReport> suite_limits_fibration(uint64_t seed);
std::vector<stats::TestReport> suite_limits_winding(uint64_t seed);

int run_reports(const cli::RunConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<stats::TestReport> reports;
    if (cfg.suite == "kernels")
        reports = suite_kernels();
    else if (cfg.suite == "calibration")
        reports = suite_calibration(cfg.seed);
    else if (cfg.suite == "flat")
        reports = suite_flat(cfg.seed);
    else if (cfg.suite == "fibration")
        reports = suite_limits_fibration(cfg.seed);
    else if (cfg.suite == "winding")
        reports = suite_limits_winding(cfg.seed);
    else
        throw std::runtime_error("unknown suite '" + cfg.suite + "'");
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    std::filesystem::create_directories(cfg.out_dir);
    std::ofstream out(std::filesystem::path(cfg.out_dir) / (cfg.suite + "_report.json"));
    out << stats::reports_to_json(cfg.suite, reports, cfg.seed, ms) << "\n";
    for (const auto& r : reports)
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name
                  << "  statistic=" << r.statistic << " threshold=" << r.threshold
                  << "\n";
    if (!stats::all_pass(reports)) {
        for (const auto& r : reports)
            if (!r.pass) {
                std::cerr << "first failing report: " << r.name << "\n";
                return 1;
            }
    }
    return 0;
}

} // namespace

#include "suites.ipp"

int main(int argc, char** argv) {
    CLI::App app{"hypoheat: stochastic areas, windings and hypoelliptic heat kernels"};
    std::string config_path;
    std::string out_override;
    uint64_t seed_override = 0;
    bool have_seed = false;
    int threads = 0;
    app.add_option("--config", config_path, "run configuration file")->required();
    app.add_option("--seed", seed_override, "override the config seed");
    app.add_option("--out", out_override, "output directory override");
    app.add_option("--threads", threads,
                   "worker threads (default: HYPOHEAT_THREADS or hardware)");
    CLI11_PARSE(app, argc, argv);

    try {
        auto cfg = hypoheat::cli::load_config_file(config_path);
        if (app.count("--seed")) {
            cfg.seed = seed_override;
            have_seed = true;
        }
        (void)have_seed;
        if (!out_override.empty()) cfg.out_dir = out_override;
        int nthreads = threads ? threads : cfg.threads;
        if (!nthreads) {
            if (const char* env = std::getenv("HYPOHEAT_THREADS")) nthreads = std::atoi(env);
        }
        hypoheat::sde::set_worker_count(nthreads);

        if (cfg.command == "list-models") {
            std::cout << "flat: heisenberg(n) qheisenberg(n) oheisenberg skew\n"
                      << "fibrations: chopf(n) cads(n) qhopf(n) qads(n) ohopf oads\n"
                      << "windings: wind_plane(r0) wind_quat(r0) wind_cp1(r0) "
                         "wind_ch1(r0) wind_hp1(r0) wind_hh1(r0)\n"
                      << "matrix: unitary(n) grassmann(n,k) hgrassmann(n,k) laguerre(n,m)\n"
                      << "suites: kernels calibration flat fibration winding\n";
            return 0;
        }
        if (cfg.command == "simulate") return run_simulate(cfg);
        if (cfg.command == "cf") return run_cf(cfg);
        if (cfg.command == "kernel") return run_kernel(cfg);
        return run_reports(cfg);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
}
