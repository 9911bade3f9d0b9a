#include "hypoheat/fibration/kernels.hpp"

#include <cmath>
#include <stdexcept>

#include "hypoheat/special/circular_jacobi.hpp"
#include "hypoheat/special/jet.hpp"
#include "hypoheat/special/hyperbolic_kernel.hpp"
#include "hypoheat/special/orthopoly.hpp"
#include "hypoheat/special/quadrature.hpp"
#include "hypoheat/special/sphere_kernel.hpp"
#include "hypoheat/special/su2_kernel.hpp"

namespace hypoheat::fib {

namespace {

constexpr double kEps = 1e-13;

// Oscillating slow-exponential tails: fixed base integral plus period blocks
// summed until three consecutive blocks are negligible.
double blocked_integral(const std::function<double(double)>& f, double y1,
                        double block, double cap, double tol = 1e-13) {
    double total = sfn::integrate(f, 0.0, y1, 1e-13, 18).value;
    int quiet = 0;
    for (double a = y1; a < cap; a += block) {
        const double piece = sfn::gl_integrate(f, a, std::min(a + block, cap), 24);
        total += piece;
        if (std::abs(piece) < tol * std::abs(total)) {
            if (++quiet >= 3) break;
        } else {
            quiet = 0;
        }
    }
    return total;
}



// ---- spectral forms ----

// Complex Hopf S^{2n+1}: Gamma(n)/(2 pi^{n+1}) sum_{k,m} (2m+|k|+n)
//   C(m+|k|+n-1, n-1) e^{-lam_{m,k} t} e^{ik theta} (cos r)^{|k|} P_m^{n-1,|k|}(cos 2r)
double chopf_spectral(int n, double t, double r, double theta) {
    const double x = std::cos(2.0 * r);
    const double pref = std::exp(std::lgamma(n) - std::log(2.0) -
                                 (n + 1.0) * std::log(M_PI));
    double total = 0.0;
    for (int k = 0;; ++k) {
        double band = 0.0;
        sfn::TruncationPolicy pol;
        for (int m = 0; m < pol.m_max; ++m) {
            const double lam = 4.0 * m * (m + k + n) + 2.0 * k * n;
            const double decay = std::exp(-lam * t);
            if (decay < kEps && m > 1) break;
            const double cmk = std::exp(std::lgamma(m + k + n) - std::lgamma(n) -
                                        std::lgamma(m + k + 1.0));
            band += (2.0 * m + k + n) * cmk * decay *
                    std::pow(std::cos(r), k) * sfn::jacobi_poly(m, n - 1.0, k, x);
        }
        total += (k == 0 ? 1.0 : 2.0 * std::cos(k * theta)) * band;
        if (std::exp(-2.0 * k * n * t) < kEps && k > 1) break;
    }
    return pref * total;
}

// Quaternionic Hopf S^{4n+3}: alpha_{k,m} e^{-4[k(k+2n+m+1)+nm]t}
//   sin((m+1)eta)/sin(eta) (cos r)^m P_k^{2n-1,m+1}(cos 2r)
double qhopf_spectral(int n, double t, double r, double eta) {
    const double x = std::cos(2.0 * r);
    double total = 0.0;
    for (int m = 0;; ++m) {
        if (std::exp(-4.0 * n * m * t) < kEps && m > 1) break;
        double band = 0.0;
        for (int k = 0;; ++k) {
            const double lam = 4.0 * (k * (k + 2.0 * n + m + 1.0) + n * m);
            const double decay = std::exp(-lam * t);
            if (decay < kEps && k > 1) break;
            const double binom = std::exp(std::lgamma(k + m + 2.0 * n + 1.0) -
                                          std::lgamma(2.0 * n) -
                                          std::lgamma(k + m + 2.0));
            const double alpha = std::exp(std::lgamma(2.0 * n) - std::log(2.0) -
                                          (2.0 * n + 2.0) * std::log(M_PI)) *
                                 (2.0 * k + m + 2.0 * n + 1.0) * (m + 1.0) * binom;
            band += alpha * decay * std::pow(std::cos(r), m) *
                    sfn::jacobi_poly(k, 2.0 * n - 1.0, m + 1.0, x);
        }
        total += band * sfn::chebyshev_u(m, std::cos(eta));
    }
    return total;
}

// Octonionic Hopf S^15: (96/pi^8)(m+3)(2k+m+7) C(k+m+6,3) C(m+5,5)
//   h_m(eta) e^{-4(k(k+m+7)+2m)t} (cos r)^m P_k^{3,m+3}(cos 2r)
double ohopf_spectral(double t, double r, double eta) {
    const double x = std::cos(2.0 * r);
    double total = 0.0;
    for (int m = 0;; ++m) {
        if (std::exp(-8.0 * m * t) < kEps && m > 1) break;
        double band = 0.0;
        for (int k = 0;; ++k) {
            const double lam = 4.0 * (k * (k + m + 7.0) + 2.0 * m);
            const double decay = std::exp(-lam * t);
            if (decay < kEps && k > 1) break;
            const double c1 = std::exp(std::lgamma(k + m + 7.0) - std::lgamma(4.0) -
                                       std::lgamma(k + m + 4.0));
            const double c2 = std::exp(std::lgamma(m + 6.0) - std::lgamma(6.0) -
                                       std::lgamma(m + 1.0));
            band += 96.0 / std::pow(M_PI, 8.0) * (m + 3.0) * (2.0 * k + m + 7.0) * c1 *
                    c2 * decay * std::pow(std::cos(r), m) *
                    sfn::jacobi_poly(k, 3.0, m + 3.0, x);
        }
        total += band * sfn::s7_eigenfunction(m, eta);
    }
    return total;
}

// ---- integral forms ----

// Complex Hopf: (4 pi t)^{-1/2} int e^{-(y^2-theta^2)/4t} cos(y theta/2t)
//   q_t^{S^{2n+1}}(cos r cosh y) dy  (even-part reduction)
double chopf_integral(int n, double t, double r, double theta) {
    const int d = 2 * n + 1;
    auto f = [&](double y) {
        return std::exp(-(y * y - theta * theta) / (4.0 * t)) *
               std::cos(y * theta / (2.0 * t)) *
               sfn::sphere_kernel_x(d, t, std::cos(r) * std::cosh(y));
    };
    const double y1 = 8.0 * std::sqrt(t) + 2.0 * t + 2.0;
    const double block = std::abs(theta) > 0.05 ? 2.0 * M_PI * t / std::abs(theta) : 4.0;
    return 2.0 / std::sqrt(4.0 * M_PI * t) *
           blocked_integral(f, y1, std::min(block, 6.0),
                           std::min(400.0, 0.95 * std::sqrt(2800.0 * t) + 2.0));
}

// Quaternionic Hopf: (e^{-t}/sqrt(pi t)) int_0^inf sinh(y) sin(eta y/2t)/sin(eta)
//   e^{-(y^2-eta^2)/4t} q_t^{S^{4n+3}}(cos r cosh y) dy
double qhopf_integral(int n, double t, double r, double eta) {
    const int d = 4 * n + 3;
    auto f = [&](double y) {
        return std::sinh(y) * std::sin(eta * y / (2.0 * t)) *
               std::exp(-(y * y - eta * eta) / (4.0 * t)) *
               sfn::sphere_kernel_x(d, t, std::cos(r) * std::cosh(y));
    };
    const double y1 = 8.0 * std::sqrt(t) + 2.0 * t + 2.0;
    const double block = eta > 0.05 ? 2.0 * M_PI * t / eta : 4.0;
    return std::exp(-t) / (std::sqrt(M_PI * t) * std::sin(eta)) *
           blocked_integral(f, y1, std::min(block, 6.0),
                           std::min(400.0, 0.95 * std::sqrt(2800.0 * t) + 2.0));
}

// Octonionic Hopf from the quaternionic S^11 kernel through the fiber
// relation p^O = (4 e^{16t}/(pi^2 cos^2 r)) [ (1/sin^2 eta) d^2/deta^2
//   - (cos eta/sin^3 eta) d/deta ] p^Q; the eta-derivatives are taken
// exactly under the integral sign with second-order jets. (The monograph
// prints the relation with constant 144; matching the spectral coefficient
// tables gives 4.)
double ohopf_integral(double t, double r, double eta) {
    using sfn::Jet2;
    auto f = [&](double y) {
        const Jet2 e = Jet2::variable(eta);
        const Jet2 F = sin(e * (y / (2.0 * t))) / sin(e) *
                       exp((e * e - Jet2::constant(y * y)) * (1.0 / (4.0 * t)));
        const double se = std::sin(eta), ce = std::cos(eta);
        const double bracket = F.d2 / (se * se) - ce * F.d1 / (se * se * se);
        return bracket * std::sinh(y) *
               sfn::sphere_kernel_x(11, t, std::cos(r) * std::cosh(y));
    };
    const double y1 = 8.0 * std::sqrt(t) + 2.0 * t + 2.0;
    const double block = eta > 0.05 ? 2.0 * M_PI * t / eta : 4.0;
    const double cap = std::min(400.0, 0.95 * std::sqrt(2800.0 * t) + 2.0);
    const double val = blocked_integral(f, y1, std::min(block, 6.0), cap);
    return 4.0 * std::exp(16.0 * t) / (M_PI * M_PI * std::cos(r) * std::cos(r)) *
           std::exp(-t) / std::sqrt(M_PI * t) * val;
}

// Complex AdS universal cover: (4 pi t)^{-1/2} int e^{(y - i theta)^2/4t}
//   q^{H^{2n+1}}_t(cosh r cosh y) dy, reduced by parity.
double cads_cover(int n, double t, double r, double theta) {
    const int d = 2 * n + 1;
    auto f = [&](double y) {
        const double u = std::acosh(std::cosh(r) * std::cosh(y));
        auto [lq, sq] = sfn::hyperbolic_kernel_log(d, 2.0 * t, u);
        const double ex = (y * y - theta * theta) / (4.0 * t) + lq;
        if (ex < -500.0) return 0.0;
        return sq * std::exp(ex) * std::cos(y * theta / (2.0 * t));
    };
    // the product decays like a slow exponential with the cosine oscillation
    const double y1 = 8.0 * std::sqrt(t) + 2.0 * t + 2.0;
    const double block = std::abs(theta) > 0.05 ? 2.0 * M_PI * t / std::abs(theta) : 4.0;
    return 2.0 / std::sqrt(4.0 * M_PI * t) *
           blocked_integral(f, y1, std::min(block, 6.0),
                           std::min(400.0, 0.95 * std::sqrt(2800.0 * t) + 2.0));
}

// Quaternionic AdS theta form:
//   (e^t/(sqrt(pi t) sin eta)) sum_k int_0^inf sinh y sin((eta+2k pi) y/2t)
//   e^{(y^2-(eta+2k pi)^2)/4t} q^{H^{4n+3}}_t(cosh r cosh y) dy
double qads_kernel(int n, double t, double r, double eta) {
    const int d = 4 * n + 3;
    double total = 0.0;
    for (int k = 0; k < 32; ++k) {
        double shell = 0.0;
        for (int sgn = (k == 0 ? 1 : -1); sgn <= 1; sgn += 2) {
            const double th = eta + 2.0 * M_PI * k * sgn;
            auto f = [&](double y) {
                const double u = std::acosh(std::cosh(r) * std::cosh(y));
                auto [lq, sq] = sfn::hyperbolic_kernel_log(d, 2.0 * t, u);
                // fold sinh(y) into the exponent for stability at large y
                const double ex = (y * y - th * th) / (4.0 * t) + lq + y - std::log(2.0);
                const double rest = sq * (1.0 - std::exp(-2.0 * y));
                if (ex < -500.0) return 0.0;
                return rest * std::sin(th * y / (2.0 * t)) * std::exp(ex);
            };
            const double y1 = 8.0 * std::sqrt(t) + 2.0 * t + 2.0;
            const double blk =
                std::abs(th) > 0.05 ? 2.0 * M_PI * t / std::abs(th) : 4.0;
            shell += blocked_integral(f, y1, std::min(blk, 6.0),
                                     std::min(400.0, 0.95 * std::sqrt(2800.0 * t) + 2.0));
        }
        total += shell;
        if (std::abs(shell) < 1e-15 * std::abs(total) && k >= 1) break;
    }
    return std::exp(t) / (std::sqrt(M_PI * t) * std::sin(eta)) * total;
}

// Octonionic AdS: int_0^inf s_t^{S^7}(eta, -iu) q^{H^15}_t(cosh r cosh u)
//   sinh^6 u du with the L2-normalized S^7 eigenfunctions.
double oads_kernel(double t, double r, double eta) {
    auto f = [&](double u) {
        const std::complex<double> s =
            sfn::s7_radial_kernel(t, eta, std::complex<double>(0.0, -u));
        const double uu = std::acosh(std::cosh(r) * std::cosh(u));
        auto [lq, sq] = sfn::hyperbolic_kernel_log(15, 2.0 * t, uu);
        const double ex = lq + 6.0 * (u - std::log(2.0));
        const double shr = std::pow(1.0 - std::exp(-2.0 * u), 6.0);
        if (ex < -500.0) return 0.0;
        return s.real() * shr * sq * std::exp(ex);
    };
    const double umax = 8.0 * std::sqrt(t) + 2.0 * t + 3.0;
    // the 2^5 prefactor is pinned numerically by the radial-marginal identity
    // against the (3,3) hyperbolic Jacobi density (PDE-converged to 32.00);
    // the printed representation carries no constant and unnormalized
    // eigenfunctions, and does not reproduce that marginal
    return 32.0 * sfn::integrate(f, 0.0, umax, 1e-11).value;
}

} // namespace

double cylindrical_measure(const FibrationModel& model, double r, double fiber_coord) {
    const int n = model.n;
    switch (model.kind) {
        case FibrationModel::Kind::CHopf:
            return 2.0 * std::pow(M_PI, n) / std::tgamma(n) *
                   std::pow(std::sin(r), 2.0 * n - 1.0) * std::cos(r);
        case FibrationModel::Kind::CAdS:
            return 2.0 * std::pow(M_PI, n) / std::tgamma(n) *
                   std::pow(std::sinh(r), 2.0 * n - 1.0) * std::cosh(r);
        case FibrationModel::Kind::QHopf: {
            const double s = std::sin(fiber_coord);
            return 8.0 * std::pow(M_PI, 2.0 * n + 1.0) / std::tgamma(2.0 * n) *
                   std::pow(std::sin(r), 4.0 * n - 1.0) * std::pow(std::cos(r), 3.0) *
                   s * s;
        }
        case FibrationModel::Kind::QAdS: {
            const double s = std::sin(fiber_coord);
            return 8.0 * std::pow(M_PI, 2.0 * n + 1.0) / std::tgamma(2.0 * n) *
                   std::pow(std::sinh(r), 4.0 * n - 1.0) * std::pow(std::cosh(r), 3.0) *
                   s * s;
        }
        case FibrationModel::Kind::OHopf: {
            const double s = std::sin(fiber_coord);
            return 56.0 * std::pow(M_PI, 7.0) / std::tgamma(8.0) *
                   std::pow(std::sin(r) * std::cos(r), 7.0) * std::pow(s, 6.0);
        }
        case FibrationModel::Kind::OAdS: {
            const double s = std::sin(fiber_coord);
            return 56.0 * std::pow(M_PI, 7.0) / std::tgamma(8.0) *
                   std::pow(std::sinh(r) * std::cosh(r), 7.0) * std::pow(s, 6.0);
        }
    }
    return 0.0;
}

double horizontal_kernel(const FibrationModel& model, KernelForm form, double t,
                         double r, double fiber_coord) {
    switch (model.kind) {
        case FibrationModel::Kind::CHopf:
            return form == KernelForm::Spectral ? chopf_spectral(model.n, t, r, fiber_coord)
                                                : chopf_integral(model.n, t, r, fiber_coord);
        case FibrationModel::Kind::QHopf:
            return form == KernelForm::Spectral ? qhopf_spectral(model.n, t, r, fiber_coord)
                                                : qhopf_integral(model.n, t, r, fiber_coord);
        case FibrationModel::Kind::OHopf:
            return form == KernelForm::Spectral ? ohopf_spectral(t, r, fiber_coord)
                                                : ohopf_integral(t, r, fiber_coord);
        case FibrationModel::Kind::CAdS: {
            // wrapped over theta + 2 k pi
            double total = 0.0;
            for (int k = 0; k < 64; ++k) {
                double shell = cads_cover(model.n, t, r, fiber_coord + 2.0 * M_PI * k);
                if (k > 0) shell += cads_cover(model.n, t, r, fiber_coord - 2.0 * M_PI * k);
                total += shell;
                if (std::abs(shell) < 1e-14 * std::abs(total) && k >= 1) break;
            }
            return total;
        }
        case FibrationModel::Kind::QAdS:
            return qads_kernel(model.n, t, r, fiber_coord);
        case FibrationModel::Kind::OAdS:
            return oads_kernel(t, r, fiber_coord);
    }
    return 0.0;
}

double horizontal_kernel_cover(const FibrationModel& model, double t, double r,
                               double theta) {
    if (model.kind != FibrationModel::Kind::CAdS)
        throw std::invalid_argument("universal cover kernel: CAdS only");
    return cads_cover(model.n, t, r, theta);
}

double p0theta_exact(double t, double theta) {
    // n = 1 complex Hopf, theta in [0, pi]
    theta = std::abs(theta);
    double sum = 0.0;
    for (int k = -40; k <= 40; ++k) {
        const double gauss = std::exp(-k * (k + 1.0) * M_PI * M_PI / t);
        if (gauss < 1e-18) continue;
        const double ex = std::exp(-M_PI * (theta + 2.0 * k * M_PI) / (2.0 * t));
        sum += gauss * ((2.0 * k + 1.0) + 2.0 * k * ex) / ((1.0 + ex) * (1.0 + ex));
    }
    // the displayed prefactor pi^2 e^t/(4 t^2) is 2 pi^2 too large: the
    // spectral and integral forms and the normalization pin e^t/(8 t^2)
    return std::exp(t) / (8.0 * t * t) *
           std::exp(-(2.0 * M_PI * theta - theta * theta) / (4.0 * t)) * sum;
}

double green_function_hopf(int n, double r, double theta) {
    const double den = 1.0 - 2.0 * std::cos(r) * std::cos(theta) +
                       std::cos(r) * std::cos(r);
    if (den <= 0.0) throw std::domain_error("green_function_hopf: pole");
    const double g = std::tgamma(0.5 * n);
    return g * g / (8.0 * std::pow(M_PI, n + 1.0) * std::pow(den, 0.5 * n));
}

double berger_kernel(double lambda_b, int n, double t, double r, double theta) {
    const double x = std::cos(2.0 * r);
    const double pref = std::exp(std::lgamma(n) - std::log(2.0) -
                                 (n + 1.0) * std::log(M_PI));
    double total = 0.0;
    for (int k = 0;; ++k) {
        double band = 0.0;
        for (int m = 0;; ++m) {
            const double lam = 4.0 * m * (m + k + n) + 2.0 * k * n +
                               k * k * lambda_b * lambda_b;
            const double decay = std::exp(-0.5 * lam * t);
            if (decay < kEps && m > 1) break;
            const double cmk = std::exp(std::lgamma(m + k + n) - std::lgamma(n) -
                                        std::lgamma(m + k + 1.0));
            band += (2.0 * m + k + n) * cmk * decay * std::pow(std::cos(r), k) *
                    sfn::jacobi_poly(m, n - 1.0, k, x);
        }
        total += (k == 0 ? 1.0 : 2.0 * std::cos(k * theta)) * band;
        if (std::exp(-0.5 * (2.0 * k * n * t + k * k * lambda_b * lambda_b * t)) < kEps &&
            k > 1)
            break;
    }
    return pref * total;
}

stats::TestReport homogenisation_check(int n, double t,
                                       const std::vector<double>& lambda_ladder) {
    // L2(mu_r) distance between the Berger kernel and the k = 0 sector
    auto cpn_radial = [&](double r) {
        return berger_kernel(1e9, n, t, r, 0.0); // k != 0 fully suppressed
    };
    std::vector<double> dist;
    for (double lb : lambda_ladder) {
        auto f = [&](double r) {
            auto g = [&](double th) {
                const double d = berger_kernel(lb, n, t, r, th) - cpn_radial(r);
                return d * d;
            };
            return sfn::integrate(g, -M_PI, M_PI, 1e-10).value * 2.0 *
                   std::pow(M_PI, n) / std::tgamma(n) *
                   std::pow(std::sin(r), 2.0 * n - 1.0) * std::cos(r);
        };
        dist.push_back(std::sqrt(sfn::integrate(f, 1e-6, M_PI_2 - 1e-6, 1e-9).value));
    }
    bool monotone = true;
    for (std::size_t i = 1; i < dist.size(); ++i)
        if (dist[i] >= dist[i - 1]) monotone = false;
    stats::TestReport rep;
    rep.name = "berger_homogenisation(n=" + std::to_string(n) + ")";
    rep.statistic = dist.back() / dist.front();
    rep.threshold = 1.0;
    rep.pass = monotone && dist.back() < dist.front();
    return rep;
}

stats::TestReport kernel_relation_check(KernelRelation rel, int n, double t, double r,
                                        double fiber_coord, double tol) {
    stats::TestReport rep;
    rep.threshold = tol;
    double lhs = 0.0, rhs = 0.0;
    const double h = 1e-4;
    switch (rel) {
        case KernelRelation::QcSphere: {
            // p^{S^{4n+3}}_t(r,eta) = -e^{4nt}/(2 pi sin(eta) cos(r)) d/deta
            //   p^{CR,S^{4n+1}}_t(r, eta)
            rep.name = "relation_qc_sphere";
            auto pcr = [&](double th) { return chopf_spectral(2 * n, t, r, th); };
            const double dtheta = (pcr(fiber_coord + h) - pcr(fiber_coord - h)) / (2.0 * h);
            lhs = -std::exp(4.0 * n * t) /
                  (2.0 * M_PI * std::sin(fiber_coord) * std::cos(r)) * dtheta;
            rhs = qhopf_spectral(n, t, r, fiber_coord);
            break;
        }
        case KernelRelation::TwistorCompact: {
            // h_t(r, phi) = (1/2 pi) int_0^pi p^Q_t(r, acos(cos phi cos s)) ds,
            // h the CP^{2n+1} twistor kernel (sigma_{k,m}, exponent
            // 4k(k+2n+2m+1) + 8nm).
            rep.name = "relation_twistor_compact";
            const double phi = fiber_coord;
            const double x = std::cos(2.0 * r);
            double hval = 0.0;
            for (int m = 0;; ++m) {
                if (std::exp(-8.0 * n * m * t) < kEps && m > 1) break;
                double band = 0.0;
                for (int k = 0;; ++k) {
                    const double lam = 4.0 * k * (k + 2.0 * n + 2.0 * m + 1.0) +
                                       8.0 * n * m;
                    const double decay = std::exp(-lam * t);
                    if (decay < kEps && k > 1) break;
                    const double binom = std::exp(std::lgamma(k + 2.0 * m + 2.0 * n + 1.0) -
                                                  std::lgamma(2.0 * n) -
                                                  std::lgamma(k + 2.0 * m + 2.0));
                    const double sig = std::exp(std::lgamma(2.0 * n) - std::log(4.0) -
                                                (2.0 * n + 2.0) * std::log(M_PI)) *
                                       (2.0 * k + 2.0 * m + 2.0 * n + 1.0) *
                                       (2.0 * m + 1.0) * binom;
                    band += sig * decay * std::pow(std::cos(r), 2.0 * m) *
                            sfn::jacobi_poly(k, 2.0 * n - 1.0, 2.0 * m + 1.0, x);
                }
                band *= sfn::jacobi_poly(m, 0.0, 0.0, std::cos(2.0 * phi));
                hval += band;
            }
            lhs = hval;
            auto f = [&](double s) {
                return qhopf_spectral(n, t, r,
                                      std::acos(std::cos(phi) * std::cos(s)));
            };
            rhs = 1.0 / (2.0 * M_PI) * sfn::integrate(f, 0.0, M_PI, 1e-11).value;
            break;
        }
        case KernelRelation::TwistorAds: {
            // p^{QAdS}_t(r,eta) = -e^{-4nt}/(2 pi cosh r sin eta) d/deta
            //   p^{CAdS wrapped, 4n+1}_t(r, eta)
            rep.name = "relation_twistor_ads";
            FibrationModel cads = make_fibration(FibrationModel::Kind::CAdS, 2 * n);
            auto pc = [&](double th) {
                return horizontal_kernel(cads, KernelForm::Integral, t, r, th);
            };
            const double dtheta = (pc(fiber_coord + h) - pc(fiber_coord - h)) / (2.0 * h);
            lhs = -std::exp(-4.0 * n * t) /
                  (2.0 * M_PI * std::cosh(r) * std::sin(fiber_coord)) * dtheta;
            rhs = qads_kernel(n, t, r, fiber_coord);
            break;
        }
    }
    rep.statistic = std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-300);
    rep.pass = rep.statistic <= tol;
    return rep;
}

} // namespace hypoheat::fib
