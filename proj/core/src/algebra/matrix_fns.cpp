#include "hypoheat/algebra/matrix_fns.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>

namespace hypoheat::alg {

CMatrix matrix_exp(const CMatrix& A) {
    if (A.rows() != A.cols()) throw std::invalid_argument("matrix_exp: non-square input");
    const Eigen::Index n = A.rows();
    const double nrm = A.cwiseAbs().rowwise().sum().maxCoeff(); // inf-norm
    // theta_13 for the degree-13 Pade approximant
    constexpr double theta13 = 5.371920351148152;
    int squarings = 0;
    CMatrix As = A;
    if (nrm > theta13) {
        squarings = static_cast<int>(std::ceil(std::log2(nrm / theta13)));
        As *= std::pow(2.0, -squarings);
    }
    static const double b[] = {64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
                               1187353796428800.0,  129060195264000.0,   10559470521600.0,
                               670442572800.0,      33522128640.0,       1323241920.0,
                               40840800.0,          960960.0,            16380.0,
                               182.0,               1.0};
    const CMatrix I = CMatrix::Identity(n, n);
    const CMatrix A2 = As * As;
    const CMatrix A4 = A2 * A2;
    const CMatrix A6 = A2 * A4;
    CMatrix U = As * (A6 * (b[13] * A6 + b[11] * A4 + b[9] * A2) +
                      b[7] * A6 + b[5] * A4 + b[3] * A2 + b[1] * I);
    CMatrix V = A6 * (b[12] * A6 + b[10] * A4 + b[8] * A2) +
                b[6] * A6 + b[4] * A4 + b[2] * A2 + b[0] * I;
    CMatrix F = (V - U).partialPivLu().solve(V + U);
    for (int i = 0; i < squarings; ++i) F = F * F;
    return F;
}

CMatrix hermitian_sqrt(const CMatrix& A, double clamp_tol) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (A + A.adjoint()));
    RVector ev = es.eigenvalues();
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        if (ev[i] < -clamp_tol)
            throw std::domain_error("hermitian_sqrt: non-PSD input, min eigenvalue " +
                                    std::to_string(ev[i]));
        ev[i] = ev[i] > 0 ? std::sqrt(ev[i]) : 0.0;
    }
    return es.eigenvectors() * ev.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
}

CMatrix polar_retract(const CMatrix& M) {
    Eigen::JacobiSVD<CMatrix> svd(M, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (svd.singularValues().minCoeff() < 1e-14 * svd.singularValues().maxCoeff())
        throw std::domain_error("polar_retract: singular input");
    return svd.matrixU() * svd.matrixV().adjoint();
}

CMatrix pseudo_polar_retract(const CMatrix& M, const RVector& eta_diag,
                             int max_iter, double tol) {
    CMatrix eta = eta_diag.cast<Complex>().asDiagonal();
    CMatrix X = M;
    for (int it = 0; it < max_iter; ++it) {
        CMatrix Xinv_adj = X.partialPivLu().inverse().adjoint();
        CMatrix next = 0.5 * (X + eta * Xinv_adj * eta);
        const double delta = (next - X).norm();
        X = next;
        if (delta < tol) break;
    }
    return X;
}

void DetArgTracker::start(const CMatrix& m) {
    const Complex d = m.determinant();
    if (std::abs(d) == 0.0) throw std::domain_error("det_arg_track: singular matrix");
    last_det_ = d;
    arg_ = std::arg(d);
    mod_ = std::abs(d);
    started_ = true;
}

bool DetArgTracker::step(const CMatrix& m, double max_jump) {
    if (!started_) {
        start(m);
        return true;
    }
    const Complex d = m.determinant();
    if (std::abs(d) == 0.0) throw std::domain_error("det_arg_track: singular matrix");
    const double inc = std::arg(d / last_det_);
    if (std::abs(inc) >= max_jump) return false;
    arg_ += inc;
    mod_ = std::abs(d);
    last_det_ = d;
    return true;
}

std::vector<DetTrackPoint> det_arg_track(std::span<const CMatrix> path) {
    std::vector<DetTrackPoint> out;
    out.reserve(path.size());
    DetArgTracker tr;
    for (const auto& m : path) {
        if (!tr.step(m))
            throw std::runtime_error("det_arg_track: argument jump >= pi, path under-resolved");
        out.push_back({tr.modulus(), tr.argument()});
    }
    return out;
}

} // namespace hypoheat::alg
