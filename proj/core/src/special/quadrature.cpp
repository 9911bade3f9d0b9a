#include "hypoheat/special/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <map>
#include <mutex>

namespace hypoheat::sfn {

namespace {

std::vector<std::pair<double, double>> compute_gl(int n) {
    // Newton iteration on Legendre P_n, standard initial guesses.
    std::vector<std::pair<double, double>> nw(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        nw[i] = {-x, w};
        nw[n - 1 - i] = {x, w};
    }
    return nw;
}

} // namespace

const std::vector<std::pair<double, double>>& gauss_legendre(int n) {
    static std::map<int, std::vector<std::pair<double, double>>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_gl(n)).first;
    return it->second;
}

double gl_integrate(const std::function<double(double)>& f, double a, double b, int n) {
    const auto& nw = gauss_legendre(n);
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double s = 0.0;
    for (const auto& [x, w] : nw) s += w * f(c + h * x);
    return h * s;
}

namespace {

void adapt(const std::function<double(double)>& f, double a, double b, double tol,
           int depth, QuadResult& out) {
    const double coarse = gl_integrate(f, a, b, 10);
    const double fine = gl_integrate(f, a, b, 20);
    const double err = std::abs(fine - coarse);
    if (err < tol || depth <= 0) {
        out.value += fine;
        out.error_estimate += err;
        if (err >= tol) out.converged = false;
        return;
    }
    const double m = 0.5 * (a + b);
    adapt(f, a, m, 0.5 * tol, depth - 1, out);
    adapt(f, m, b, 0.5 * tol, depth - 1, out);
}

} // namespace

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double tol, int max_depth) {
    QuadResult out;
    if (a == b) return out;
    adapt(f, a, b, tol, max_depth, out);
    return out;
}

QuadResult integrate_semiinf(const std::function<double(double)>& f, double a,
                             double scale, double tol) {
    auto g = [&](double u) {
        const double om = 1.0 - u;
        const double x = a + scale * u / om;
        return f(x) * scale / (om * om);
    };
    return integrate(g, 0.0, 1.0 - 1e-12, tol, 20);
}

std::vector<std::pair<double, double>> gauss_laguerre(int n) {
    // Golub-Welsch on the Laguerre Jacobi matrix.
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        J(i, i) = 2.0 * i + 1.0;
        if (i + 1 < n) {
            const double off = i + 1.0;
            J(i, i + 1) = off;
            J(i + 1, i) = off;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    std::vector<std::pair<double, double>> nw(n);
    for (int i = 0; i < n; ++i) {
        const double w = es.eigenvectors()(0, i) * es.eigenvectors()(0, i);
        nw[i] = {es.eigenvalues()(i), w};
    }
    return nw;
}

QuadResult integrate_oscillatory_halfperiods(const std::function<double(double)>& g,
                                             double period, double tail_cut,
                                             double check_tol) {
    // The caller supplies the full integrand (including the sine); integrate
    // over half-periods [k*T/2, (k+1)*T/2] where T = period.
    auto run_full = [&](int order) {
        double total = 0.0;
        const double half = 0.5 * period;
        int k = 0;
        for (;; ++k) {
            const double a = k * half;
            const double piece = gl_integrate(g, a, a + half, order);
            total += piece;
            if (a > tail_cut) break;
            if (k > 200000) break;
        }
        return total;
    };
    QuadResult out;
    const double v1 = run_full(12);
    const double v2 = run_full(24);
    out.value = v2;
    out.error_estimate = std::abs(v2 - v1);
    const double denom = std::max(std::abs(v2), 1e-300);
    out.converged = out.error_estimate / denom <= check_tol;
    return out;
}

} // namespace hypoheat::sfn
