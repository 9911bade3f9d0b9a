#include "hypoheat/special/pde_jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hypoheat::sfn {

namespace {

// Thomas solve of a tridiagonal system (a: sub, b: diag, c: super), in place.
void thomas(std::vector<double>& a, std::vector<double>& b, std::vector<double>& c,
            std::vector<double>& d) {
    const size_t n = b.size();
    for (size_t i = 1; i < n; ++i) {
        const double w = a[i] / b[i - 1];
        b[i] -= w * c[i - 1];
        d[i] -= w * d[i - 1];
    }
    d[n - 1] /= b[n - 1];
    for (size_t i = n - 1; i-- > 0;) d[i] = (d[i] - c[i] * d[i + 1]) / b[i];
}

} // namespace

HyperbolicJacobiKernel::HyperbolicJacobiKernel(double a, double b, double t, const Options& opt)
    : a_(a), b_(b), t_(t), opt_(opt) {
    if (t <= opt.t0) throw std::domain_error("HyperbolicJacobiKernel: t too small");
    // outward drift ~ (a+b+1) for large r
    r_max_ = (a + b + 1.0) * t + opt.domain_pad * std::sqrt(t) + 3.0;
    h_ = r_max_ / opt.cells;
    p_ = evolve(opt.cells, opt.dt_target);
    double m1 = 0.0;
    for (double v : p_) m1 += v;
    m1 *= h_;
    if (opt.refine_check) {
        const auto coarse = evolve(opt.cells / 2, 2.0 * opt.dt_target);
        // L1 distance between resolutions as the error estimate
        double err = 0.0;
        const double hc = r_max_ / (opt.cells / 2);
        for (size_t i = 0; i < coarse.size(); ++i) {
            const double r = (i + 0.5) * hc;
            err += std::abs(coarse[i] - density_from(p_, r)) * hc;
        }
        refine_error_ = err;
    }
    // mass sitting in the outer 5% of the domain
    const size_t tail_start = p_.size() * 95 / 100;
    for (size_t i = tail_start; i < p_.size(); ++i) far_mass_ += p_[i] * h_;
    far_mass_ += 1.0 - m1; // plus whatever was absorbed
}

double HyperbolicJacobiKernel::density_from(const std::vector<double>& p, double r) const {
    if (r <= 0.0 || r >= r_max_) return 0.0;
    const double u = r / h_ - 0.5;
    const int i = static_cast<int>(std::floor(u));
    if (i < 0) return p.front();
    if (i + 1 >= static_cast<int>(p.size())) return p.back();
    const double w = u - i;
    return (1.0 - w) * p[i] + w * p[i + 1];
}

std::vector<double> HyperbolicJacobiKernel::evolve(int cells, double dt) const {
    const double h = r_max_ / cells;
    auto drift = [&](double r) {
        // (a+1/2) coth r + (b+1/2) tanh r, with the removable expansion near 0
        if (r < 1e-12) r = 1e-12;
        return (a_ + 0.5) / std::tanh(r) + (b_ + 0.5) * std::tanh(r);
    };
    // initialize from the exact Bessel(2a+2) short-time profile, cell-averaged
    // by subsampling and renormalized so the (conservative) scheme keeps the
    // total mass at 1 minus the far-boundary absorption
    std::vector<double> p(cells, 0.0);
    const double t0 = opt_.t0;
    const double lognorm = -a_ * std::log(2.0) - (a_ + 1.0) * std::log(t0) -
                           std::lgamma(a_ + 1.0);
    auto init_density = [&](double r) {
        return std::exp(lognorm + (2.0 * a_ + 1.0) * std::log(r) - r * r / (2.0 * t0));
    };
    const double init_cut = std::sqrt(2.0 * t0 * 60.0 * (1.0 + a_));
    double mass0 = 0.0;
    for (int i = 0; i < cells; ++i) {
        const double rl = i * h;
        if (rl > init_cut) break;
        double cell = 0.0;
        constexpr int sub = 16;
        for (int j = 0; j < sub; ++j) cell += init_density(rl + (j + 0.5) * h / sub);
        p[i] = cell / sub;
        mass0 += p[i] * h;
    }
    for (double& v : p) v /= mass0;
    // flux F_{i+1/2} = (1/2)(p_{i+1}-p_i)/h - b_{i+1/2} (p_i+p_{i+1})/2;
    // dp_i/dt = (F_{i+1/2} - F_{i-1/2})/h, F_{-1/2} = 0 (no flux at the
    // entrance), F at the far end uses p_{cells} = 0 (absorbing).
    std::vector<double> bmid(cells + 1);
    for (int i = 0; i <= cells; ++i) bmid[i] = drift(std::max(1e-12, i * h));
    const int steps = std::max(16, static_cast<int>(std::ceil((t_ - t0) / dt)));
    const double dtau = (t_ - t0) / steps;

    // Crank-Nicolson: (I - dtau/2 A) p^{n+1} = (I + dtau/2 A) p^n
    auto row = [&](int i, double& lo, double& di, double& hi) {
        lo = di = hi = 0.0;
        const double inv_h2 = 1.0 / (h * h), inv_2h = 1.0 / (2.0 * h);
        if (i > 0) { // flux through i-1/2
            lo += 0.5 * inv_h2 + bmid[i] * inv_2h;
            di += -0.5 * inv_h2 + bmid[i] * inv_2h;
        }
        // flux through i+1/2 (vanishes into the wall only via absorption)
        if (i < cells - 1) {
            di += -0.5 * inv_h2 - bmid[i + 1] * inv_2h;
            hi += 0.5 * inv_h2 - bmid[i + 1] * inv_2h;
        } else {
            di += -0.5 * inv_h2 - bmid[i + 1] * inv_2h; // ghost p = 0
        }
    };
    std::vector<double> Alo(cells), Adi(cells), Ahi(cells);
    for (int i = 0; i < cells; ++i) row(i, Alo[i], Adi[i], Ahi[i]);

    std::vector<double> sub(cells), diag(cells), sup(cells), rhs(cells);
    for (int s = 0; s < steps; ++s) {
        for (int i = 0; i < cells; ++i) {
            const double pm = i > 0 ? p[i - 1] : 0.0;
            const double pp = i + 1 < cells ? p[i + 1] : 0.0;
            rhs[i] = p[i] + 0.5 * dtau * (Alo[i] * pm + Adi[i] * p[i] + Ahi[i] * pp);
            sub[i] = -0.5 * dtau * Alo[i];
            diag[i] = 1.0 - 0.5 * dtau * Adi[i];
            sup[i] = -0.5 * dtau * Ahi[i];
        }
        thomas(sub, diag, sup, rhs);
        p = rhs;
    }
    return p;
}

double HyperbolicJacobiKernel::density(double r) const { return density_from(p_, r); }

double HyperbolicJacobiKernel::integrate(const std::function<double(double)>& f) const {
    double s = 0.0;
    for (size_t i = 0; i < p_.size(); ++i) s += f((i + 0.5) * h_) * p_[i];
    return s * h_;
}

double HyperbolicJacobiKernel::mass() const {
    double s = 0.0;
    for (double v : p_) s += v;
    return s * h_;
}

} // namespace hypoheat::sfn
