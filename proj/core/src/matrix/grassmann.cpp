#include "hypoheat/matrix/grassmann.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hypoheat/algebra/matrix_fns.hpp"
#include "hypoheat/sde/group_integrator.hpp"
#include "hypoheat/special/circular_jacobi.hpp"
#include "hypoheat/special/orthopoly.hpp"
#include "hypoheat/special/quadrature.hpp"

namespace hypoheat::mat {

using alg::CMatrix;
using alg::Complex;

std::string GrassmannModel::tag() const {
    return std::string(hyperbolic ? "hgrassmann(" : "grassmann(") + std::to_string(n) +
           "," + std::to_string(k) + ")";
}

GrassmannModel make_grassmann(int n, int k, bool hyperbolic,
                              std::vector<double> lambda0) {
    if (k < 1 || k > n - k)
        throw std::invalid_argument("grassmann: need 1 <= k <= n-k (use duality)");
    if (static_cast<int>(lambda0.size()) != k)
        throw std::invalid_argument("grassmann: lambda0 size");
    for (int i = 0; i + 1 < k; ++i)
        if (lambda0[i] >= lambda0[i + 1])
            throw std::invalid_argument("grassmann: lambda0 strictly ascending");
    GrassmannModel m;
    m.n = n;
    m.k = k;
    m.hyperbolic = hyperbolic;
    m.lambda0 = std::move(lambda0);
    return m;
}

void initial_frame(const GrassmannModel& m, CMatrix& x0, CMatrix& z0) {
    const int nk = m.n - m.k, k = m.k;
    CMatrix w0 = CMatrix::Zero(nk, k);
    for (int i = 0; i < k; ++i) w0(i, i) = std::sqrt(m.lambda0[i]);
    CMatrix j = w0.adjoint() * w0;
    CMatrix g = m.hyperbolic ? (CMatrix::Identity(k, k) - j).eval()
                             : (CMatrix::Identity(k, k) + j).eval();
    CMatrix half = alg::hermitian_sqrt(g.inverse());
    x0 = w0 * half;
    z0 = half;
}

namespace {

std::vector<double> ascending_eigen(const CMatrix& j) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (j + j.adjoint()),
                                              Eigen::EigenvaluesOnly);
    std::vector<double> out(es.eigenvalues().data(),
                            es.eigenvalues().data() + es.eigenvalues().size());
    std::sort(out.begin(), out.end());
    return out;
}

double vec_min_gap(const std::vector<double>& v) {
    double g = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < v.size(); ++i) g = std::min(g, v[i + 1] - v[i]);
    if (v.size() == 1) g = v[0];
    return g;
}

} // namespace

void grassmann_bm(const GrassmannModel& model, const sde::TimeGrid& grid,
                  std::size_t n_paths, uint64_t seed,
                  const std::vector<int>& record_nodes,
                  const std::function<void(std::size_t, std::size_t,
                                           const GrassmannRecord&)>& observe) {
    const int n = model.n, k = model.k, nk = model.n - model.k;
    const bool hyp = model.hyperbolic;
    const auto basis = hyp ? sde::unkk_basis(n, k)
                           : sde::un_basis(n, sde::UnConvention::HalfTrace);
    alg::RVector eta;
    if (hyp) {
        eta = alg::RVector::Ones(n);
        for (int i = nk; i < n; ++i) eta[i] = -1.0;
    }
    CMatrix x0, z0;
    initial_frame(model, x0, z0);
    // embed the frame in a group element: compact U = [[X Y],[Z V]] needs the
    // orthogonal complement; build by completing the frame columns to a
    // (pseudo-)unitary basis via Gram-Schmidt on the ambient form.
    CMatrix u0 = CMatrix::Zero(n, n);
    if (!hyp) {
        // columns 0..k-1 = (X0; Z0); complete unitarily
        CMatrix f(n, k);
        f.topRows(nk) = x0;
        f.bottomRows(k) = z0;
        Eigen::HouseholderQR<CMatrix> qr(f);
        CMatrix q = qr.householderQ();
        // reorder so that the frame occupies the (X; Z) block layout used in
        // the chapter: U = [[X, Y], [Z, V]] with X (n-k) x k, Z k x k
        u0.leftCols(k) = q.leftCols(k);
        // fix phases so u0.leftCols = f exactly
        u0.leftCols(k) = f;
        u0.rightCols(n - k) = q.rightCols(n - k);
        // orthonormalize the completion against f
        for (int c = 0; c < n - k; ++c) {
            CMatrix col = u0.col(k + c);
            for (int b = 0; b < k + c; ++b)
                col -= (u0.col(b).adjoint() * col)(0, 0) * u0.col(b);
            u0.col(k + c) = col / col.norm();
        }
    } else {
        // hyperbolic: columns k-frame is (X0; Z0) in the LAST k columns of
        // U = [[Y, X], [W, Z]]; complete to U(n-k,k) w.r.t. eta
        CMatrix f(n, k);
        f.topRows(nk) = x0;
        f.bottomRows(k) = z0;
        u0.setZero();
        u0.rightCols(k) = f;
        // seed the first n-k columns with the standard basis and eta-Gram-Schmidt
        for (int c = 0; c < nk; ++c) {
            CMatrix col = CMatrix::Zero(n, 1);
            col(c, 0) = 1.0;
            for (int b = 0; b < k; ++b) {
                const Complex ip = (u0.col(nk + b).adjoint() *
                                    (eta.cast<Complex>().asDiagonal() * col))(0, 0);
                col += ip * u0.col(nk + b); // minus sign form: these have norm -1
            }
            for (int b = 0; b < c; ++b) {
                const Complex ip = (u0.col(b).adjoint() *
                                    (eta.cast<Complex>().asDiagonal() * col))(0, 0);
                col -= ip * u0.col(b);
            }
            const Complex nrm2 =
                (col.adjoint() * (eta.cast<Complex>().asDiagonal() * col))(0, 0);
            u0.col(c) = col / std::sqrt(nrm2.real());
        }
    }

    sde::parallel_over_paths(n_paths, seed, [&](std::size_t p, sde::Rng& rng) {
        sde::GroupPath path(u0);
        if (hyp) path.set_pseudo(eta);
        GrassmannRecord rec;
        rec.eigenvalues = model.lambda0;
        alg::DetArgTracker det_tracker;
        double tr_eta = 0.0, int_trj = 0.0, min_gap_seen =
            vec_min_gap(model.lambda0);
        auto blocks = [&](const CMatrix& u, CMatrix& x, CMatrix& z) {
            if (!hyp) {
                x = u.topLeftCorner(nk, k);
                z = u.bottomLeftCorner(k, k);
            } else {
                x = u.topRightCorner(nk, k);
                z = u.bottomRightCorner(k, k);
            }
        };
        CMatrix x, z, xp, zp;
        blocks(path.value(), x, z);
        CMatrix w = x * z.partialPivLu().inverse();
        det_tracker.start(z);
        std::size_t ri = 0;
        auto emit = [&](int node) {
            CMatrix j = w.adjoint() * w;
            rec.t = grid.node(node);
            rec.eigenvalues = ascending_eigen(j);
            rec.det_z_modulus = det_tracker.modulus();
            rec.det_z_argument = det_tracker.argument();
            rec.trace_eta = tr_eta;
            rec.int_tr_j = int_trj;
            min_gap_seen = std::min(min_gap_seen, vec_min_gap(rec.eigenvalues));
            rec.min_gap = min_gap_seen;
            const CMatrix gram = x.adjoint() * x +
                                 (hyp ? -1.0 : 1.0) * (z.adjoint() * z);
            rec.frame_defect =
                (gram - (hyp ? -1.0 : 1.0) * CMatrix::Identity(k, k)).norm();
            observe(p, ri, rec);
            ++ri;
        };
        if (!record_nodes.empty() && record_nodes[0] == 0) emit(0);
        for (int i = 0; i < grid.steps(); ++i) {
            const CMatrix prev_w = w;
            const double trj_prev = (w.adjoint() * w).real().trace();
            path.step(sde::lie_increment(basis, grid.dt(i), rng));
            blocks(path.value(), x, z);
            w = x * z.partialPivLu().inverse();
            // det Z winding with a refinement guard; a second failure still
            // commits the principal-branch increment (wrapped into (-pi, pi])
            if (!det_tracker.step(z, M_PI_2))
                if (!det_tracker.step(z, M_PI)) det_tracker.step(z, 2.0 * M_PI);
            // Stratonovich midpoint of (1/i) tr eta and trapezoid of tr J
            const CMatrix mid = 0.5 * (prev_w + w);
            const CMatrix jm = mid.adjoint() * mid;
            const CMatrix g = hyp ? (CMatrix::Identity(k, k) - jm).eval()
                                  : (CMatrix::Identity(k, k) + jm).eval();
            const CMatrix dw = w - prev_w;
            // (1/2i) tr[g^{-1}(dw* w - w* dw)] at the midpoint; for the
            // hyperbolic model the area is -(1/i) int tr(eta)
            const Complex q =
                (g.partialPivLu().inverse() *
                 (dw.adjoint() * mid - mid.adjoint() * dw))
                    .trace();
            tr_eta += (hyp ? -0.5 : 0.5) * q.imag();
            const double trj_new = (w.adjoint() * w).real().trace();
            int_trj += 0.5 * (trj_prev + trj_new) * grid.dt(i);
            const bool want = ri < record_nodes.size() && record_nodes[ri] == i + 1;
            if (want) emit(i + 1);
        }
    });
}

namespace {

CMatrix complex_gaussian(int rows, int cols, double dt, sde::Rng& rng) {
    // entries with dB dB* = 2 dt (independent standard real/imaginary parts)
    CMatrix b(rows, cols);
    const double sd = std::sqrt(dt);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) b(i, j) = Complex(sd * rng.normal(), sd * rng.normal());
    return b;
}

} // namespace

sde::SampleEnsemble matrix_jacobi_sde(const GrassmannModel& model,
                                      const sde::TimeGrid& grid, std::size_t n_paths,
                                      uint64_t seed) {
    const int k = model.k, n = model.n;
    const bool hyp = model.hyperbolic;
    sde::SampleEnsemble e;
    e.model_tag = model.tag() + "|matrix_sde";
    e.master_seed = seed;
    e.n_paths = n_paths;
    e.dim = k;
    e.times = {grid.horizon()};
    e.data.assign(n_paths * k, 0.0);
    sde::parallel_over_paths(n_paths, seed, [&](std::size_t p, sde::Rng& rng) {
        // compact: flow the bounded matrix S = ZZ* = (I+J)^{-1} (values in
        // [0, I]); hyperbolic: J itself lives in [0, I].
        CMatrix s0 = CMatrix::Zero(k, k);
        for (int i = 0; i < k; ++i)
            s0(i, i) = hyp ? model.lambda0[i] : 1.0 / (1.0 + model.lambda0[i]);
        CMatrix s = s0;
        const CMatrix id = CMatrix::Identity(k, k);
        auto clamp01 = [&](CMatrix& m) {
            m = 0.5 * (m + m.adjoint()).eval();
            Eigen::SelfAdjointEigenSolver<CMatrix> es(m);
            alg::RVector ev = es.eigenvalues();
            for (int q = 0; q < k; ++q)
                ev[q] = std::min(std::max(ev[q], 1e-13), 1.0 - 1e-13);
            m = es.eigenvectors() * ev.cast<Complex>().asDiagonal() *
                es.eigenvectors().adjoint();
        };
        for (int i = 0; i < grid.steps(); ++i) {
            const double dt = grid.dt(i);
            const CMatrix b = complex_gaussian(k, k, dt, rng);
            if (!hyp) {
                // d(ZZ*) = sqrt(S) dB sqrt(I-S) + sqrt(I-S) dB* sqrt(S)
                //          + 2(k I - n S) dt
                CMatrix sq = alg::hermitian_sqrt(s);
                CMatrix sq1 = alg::hermitian_sqrt(id - s);
                s += sq * b * sq1 + sq1 * b.adjoint() * sq +
                     2.0 * (static_cast<double>(k) * id - static_cast<double>(n) * s) * dt;
            } else {
                CMatrix sj = alg::hermitian_sqrt(s);
                CMatrix s1 = alg::hermitian_sqrt(id - s);
                s += s1 * b * s1 * sj + sj * s1 * b.adjoint() * s1 +
                     2.0 * ((n - k) - s.real().trace()) * (id - s) * dt;
            }
            clamp01(s);
        }
        std::vector<double> evs = ascending_eigen(s);
        if (!hyp) {
            // J = S^{-1} - I, eigenvalues ascending
            std::vector<double> l(k);
            for (int q = 0; q < k; ++q) l[q] = 1.0 / evs[k - 1 - q] - 1.0;
            evs = l;
        }
        for (int q = 0; q < k; ++q) e.at(p, 0, q) = evs[q];
    });
    return e;
}

namespace {

void jacobi_eigen_drift(const GrassmannModel& m, const std::vector<double>& l,
                        std::vector<double>& out) {
    const int k = m.k, n = m.n;
    for (int i = 0; i < k; ++i) {
        double inter = 0.0;
        for (int q = 0; q < k; ++q)
            if (q != i) {
                if (!m.hyperbolic)
                    inter += 2.0 * l[i] * (1.0 + l[i]) / (l[i] - l[q]);
                else
                    inter += ((1.0 - l[q]) * l[i] * (1.0 - l[i]) +
                              (1.0 - l[i]) * l[q] * (1.0 - l[q])) /
                             (l[i] - l[q]);
            }
        if (!m.hyperbolic) {
            out[i] = 2.0 * (1.0 + l[i]) *
                     (n - 2.0 * k + 1.0 - (2.0 * k - 3.0) * l[i] + inter);
        } else {
            double tr = 0.0;
            for (double v : l) tr += v;
            out[i] = 2.0 * (n - k - tr) * (1.0 - l[i]) + 2.0 * inter;
        }
    }
}

} // namespace

sde::SampleEnsemble eigen_jacobi_sde(const GrassmannModel& model,
                                     const sde::TimeGrid& grid, std::size_t n_paths,
                                     uint64_t seed) {
    const int k = model.k, n = model.n;
    sde::SampleEnsemble e;
    e.model_tag = model.tag() + "|eigen_sde";
    e.master_seed = seed;
    e.n_paths = n_paths;
    e.dim = k + 1;
    e.times = {grid.horizon()};
    e.data.assign(n_paths * (k + 1), 0.0);
    const bool hyp = model.hyperbolic;
    sde::parallel_over_paths(n_paths, seed, [&](std::size_t p, sde::Rng& rng) {
        // compact: simulate the bounded coordinates rho_i = (1-l_i)/(1+l_i):
        //   d rho = -2 sqrt(1-rho^2) dB
        //     - 2 (n-2k + (n-2k+2) rho + 2 sum (1-rho^2)/(rho_l - rho)) dt;
        // hyperbolic: the lambda SDE is already bounded on (0,1).
        std::vector<double> y(k), drift(k);
        for (int i = 0; i < k; ++i)
            y[i] = hyp ? model.lambda0[i]
                       : (1.0 - model.lambda0[i]) / (1.0 + model.lambda0[i]);
        double mg_l = vec_min_gap(model.lambda0);
        std::function<void(double, int)> leg = [&](double dt, int depth) {
            double gap = std::numeric_limits<double>::infinity();
            for (int i = 0; i < k; ++i)
                for (int q = i + 1; q < k; ++q)
                    gap = std::min(gap, std::abs(y[i] - y[q]));
            double edge = 1e9;
            for (int i = 0; i < k; ++i)
                edge = std::min(edge, hyp ? std::min(y[i], 1.0 - y[i])
                                          : std::min(1.0 - std::abs(y[i]), 1.0));
            if (depth < 18 && (gap * gap < 100.0 * dt || edge * edge < 9.0 * dt)) {
                leg(0.5 * dt, depth + 1);
                leg(0.5 * dt, depth + 1);
                return;
            }
            const double sd = std::sqrt(dt);
            if (!hyp) {
                for (int i = 0; i < k; ++i) {
                    double inter = 0.0;
                    for (int q = 0; q < k; ++q)
                        if (q != i) inter += (1.0 - y[i] * y[i]) / (y[q] - y[i]);
                    drift[i] = -2.0 * (n - 2.0 * k + (n - 2.0 * k + 2.0) * y[i] +
                                       2.0 * inter);
                }
                for (int i = 0; i < k; ++i) {
                    const double vol = -2.0 * std::sqrt(std::max(0.0, 1.0 - y[i] * y[i]));
                    y[i] += drift[i] * dt + vol * sd * rng.normal();
                    if (y[i] > 1.0 - 1e-14) y[i] = 2.0 * (1.0 - 1e-14) - y[i];
                    if (y[i] < -1.0 + 1e-14) y[i] = 2.0 * (-1.0 + 1e-14) - y[i];
                }
            } else {
                jacobi_eigen_drift(model, y, drift);
                for (int i = 0; i < k; ++i) {
                    const double vol =
                        2.0 * std::sqrt(std::max(y[i], 0.0)) * (1.0 - y[i]);
                    y[i] += drift[i] * dt + vol * sd * rng.normal();
                    if (y[i] < 1e-14) y[i] = 2e-14 - y[i];
                    if (y[i] > 1.0 - 1e-14) y[i] = 2.0 * (1.0 - 1e-14) - y[i];
                }
            }
        };
        for (int i = 0; i < grid.steps(); ++i) {
            leg(grid.dt(i), 0);
            std::vector<double> l(k);
            for (int q = 0; q < k; ++q)
                l[q] = hyp ? y[q] : (1.0 - y[q]) / (1.0 + y[q]);
            std::sort(l.begin(), l.end());
            mg_l = std::min(mg_l, vec_min_gap(l));
        }
        std::vector<double> l(k);
        for (int q = 0; q < k; ++q) l[q] = hyp ? y[q] : (1.0 - y[q]) / (1.0 + y[q]);
        std::sort(l.begin(), l.end());
        for (int q = 0; q < k; ++q) e.at(p, 0, q) = l[q];
        e.at(p, 0, k) = mg_l;
    });
    return e;
}

namespace {

double simplex_vandermonde(const std::vector<double>& x) {
    double v = 1.0;
    for (std::size_t j = 0; j < x.size(); ++j)
        for (std::size_t i = j + 1; i < x.size(); ++i) v *= x[i] - x[j];
    return v;
}

} // namespace

double km_eigen_density(const GrassmannModel& model, double t,
                        const std::vector<double>& x) {
    if (model.hyperbolic)
        throw std::invalid_argument("km_eigen_density: compact models only");
    const int k = model.k, n = model.n;
    std::vector<double> rho0(k);
    for (int i = 0; i < k; ++i)
        rho0[i] = (1.0 - model.lambda0[k - 1 - i]) / (1.0 + model.lambda0[k - 1 - i]);
    const double pref =
        std::exp(k * (k - 1.0) * (3.0 * n - 4.0 * k + 2.0) * t / 3.0) *
        simplex_vandermonde(x) / simplex_vandermonde(rho0);
    Eigen::MatrixXd M(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            M(i, j) = sfn::jacobi_interval_kernel(n - 2.0 * k, 0.0, t, rho0[i], x[j])
                          .require();
    return pref * M.determinant();
}

double grassmann_limit_log_constant(int n, int k) {
    // 1/c = int_{Delta_k} prod (x_i-x_j)^2 prod (1-x_i)^{n-2k} dx
    //     = (1/k!) 2^{k + k(k-1) + (n-2k)k} S_k(n-2k+1, 1, 1)  (x = 1-2y)
    double logs = 0.0;
    const double a = n - 2.0 * k + 1.0, b = 1.0, g = 1.0;
    for (int j = 0; j < k; ++j) {
        logs += std::lgamma(a + j * g) + std::lgamma(b + j * g) +
                std::lgamma(1.0 + (j + 1.0) * g) -
                std::lgamma(a + b + (k + j - 1.0) * g) - std::lgamma(1.0 + g);
    }
    const double log_jac = (k + k * (k - 1.0) + (n - 2.0 * k) * k) * std::log(2.0) -
                           std::lgamma(k + 1.0);
    return -(logs + log_jac);
}

double grassmann_limit_density(int n, int k, const std::vector<double>& x) {
    double lg = grassmann_limit_log_constant(n, k);
    double v = simplex_vandermonde(x);
    double prod = 1.0;
    for (double xi : x) prod *= std::pow(1.0 - xi, n - 2.0 * k);
    return std::exp(lg) * v * v * prod;
}

std::pair<double, double> zonal_eigenfunction(int n, int k, const std::vector<int>& m,
                                              const std::vector<double>& rho) {
    Eigen::MatrixXd num(k, k), den(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            num(i, j) = sfn::jacobi_poly(m[i], n - 2.0 * k, 0.0, rho[j]);
            den(i, j) = sfn::jacobi_poly(i, n - 2.0 * k, 0.0, rho[j]);
        }
    const double dden = den.determinant();
    if (std::abs(dden) < 1e-300)
        throw std::domain_error("zonal_eigenfunction: degenerate denominator");
    // L_{n,k} is a (negative) diffusion generator: the eigenvalue is
    // k(k-1)(3n-4k+2)/3 - 2 sum m_i (m_i + n - 2k + 1) (the monograph displays
    // its negative)
    double eig = k * (k - 1.0) * (3.0 * n - 4.0 * k + 2.0) / 3.0;
    for (int i = 0; i < k; ++i) eig -= 2.0 * m[i] * (m[i] + n - 2.0 * k + 1.0);
    return {num.determinant() / dden, eig};
}

double apply_lnk(int n, int k, const std::function<double(const std::vector<double>&)>& f,
                 const std::vector<double>& rho, double h) {
    // L_{n,k} = 2 sum (1-r_i^2) d_i^2 - 2 sum (n-2k + (n-2k+2) r_i
    //   + 2 sum_{l != i} (1-r_i^2)/(r_l - r_i)) d_i
    double out = 0.0;
    std::vector<double> rp = rho, rm = rho;
    const double f0 = f(rho);
    for (int i = 0; i < k; ++i) {
        rp[i] += h;
        rm[i] -= h;
        const double d1 = (f(rp) - f(rm)) / (2.0 * h);
        const double d2 = (f(rp) - 2.0 * f0 + f(rm)) / (h * h);
        rp[i] = rho[i];
        rm[i] = rho[i];
        double inter = 0.0;
        for (int l = 0; l < k; ++l)
            if (l != i) inter += (1.0 - rho[i] * rho[i]) / (rho[l] - rho[i]);
        out += 2.0 * (1.0 - rho[i] * rho[i]) * d2 -
               2.0 * (n - 2.0 * k + (n - 2.0 * k + 2.0) * rho[i] + 2.0 * inter) * d1;
    }
    return out;
}

double trace_laplace_compact(const GrassmannModel& model, double alpha, double t) {
    if (model.hyperbolic || model.k > 2)
        throw std::invalid_argument("trace_laplace_compact: compact, k <= 2");
    const int n = model.n, k = model.k;
    if (alpha == 0.0) return 1.0;
    std::vector<double> rho0(k), lam = model.lambda0;
    std::sort(lam.rbegin(), lam.rend()); // descending for the C constant
    for (int i = 0; i < k; ++i) rho0[i] = (1.0 - lam[i]) / (1.0 + lam[i]);
    // C = prod (1+lam)^alpha/2^alpha * prod_{i>j} (1+l_i)(1+l_j)/(2(l_j-l_i))
    double logC = 0.0;
    for (int i = 0; i < k; ++i) logC += alpha * std::log((1.0 + lam[i]) / 2.0);
    double cpair = 1.0;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < i; ++j)
            cpair *= (1.0 + lam[i]) * (1.0 + lam[j]) / (2.0 * (lam[j] - lam[i]));
    const double expo = (k * (k - 1.0) * (3.0 * n - 4.0 * k + 6.0 * alpha + 2.0) / 3.0 -
                         2.0 * k * (n - k) * alpha) *
                        t;
    auto kern = [&](double u, double v) {
        return std::pow(2.0, alpha) *
               sfn::jacobi_interval_kernel(n - 2.0 * k, 2.0 * alpha, t, u, v).require() /
               std::pow(1.0 + v, alpha);
    };
    double integral = 0.0;
    if (k == 1) {
        integral = sfn::integrate([&](double x) { return kern(rho0[0], x); }, -1.0, 1.0,
                                  1e-11)
                       .value;
    } else {
        auto inner = [&](double x1) {
            auto f2 = [&](double x2) {
                const double det = kern(rho0[0], x1) * kern(rho0[1], x2) -
                                   kern(rho0[0], x2) * kern(rho0[1], x1);
                return det * (x2 - x1);
            };
            return sfn::integrate(f2, x1, 1.0, 1e-10).value;
        };
        integral = sfn::integrate(inner, -1.0, 1.0, 1e-9).value;
    }
    return std::exp(logC + expo) * cpair * integral;
}

stats::LawDescriptor trace_limit_compact(int n, int k) {
    return stats::hitting_time_law(k * (n - k));
}

stats::LawDescriptor area_limit(const GrassmannModel& m) {
    if (!m.hyperbolic) return stats::cauchy_law(m.k * (m.n - m.k));
    return stats::gaussian_law(0.0, m.k, 1);
}

stats::LawDescriptor winding_limit(const GrassmannModel& m) {
    if (!m.hyperbolic) return stats::cauchy_law(m.k * (m.n - m.k));
    return stats::gaussian_law(0.0, 2.0 * m.k, 1);
}

} // namespace hypoheat::mat
