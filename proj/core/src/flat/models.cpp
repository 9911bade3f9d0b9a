#include "hypoheat/flat/models.hpp"

#include <cmath>
#include <stdexcept>

#include "hypoheat/algebra/octonion.hpp"
#include "hypoheat/algebra/quaternion.hpp"

namespace hypoheat::flat {

int FlatModel::base_dim() const {
    switch (kind) {
        case Kind::ComplexHeisenberg: return 2 * n;
        case Kind::QuaternionicHeisenberg: return 4 * n;
        case Kind::OctonionicHeisenberg: return 8;
        case Kind::SkewQuadratic: return static_cast<int>(skew.rows());
    }
    return 0;
}

int FlatModel::area_dim() const {
    switch (kind) {
        case Kind::ComplexHeisenberg: return 1;
        case Kind::QuaternionicHeisenberg: return 3;
        case Kind::OctonionicHeisenberg: return 7;
        case Kind::SkewQuadratic: return 1;
    }
    return 0;
}

int FlatModel::cf_power() const {
    switch (kind) {
        case Kind::ComplexHeisenberg: return n;
        case Kind::QuaternionicHeisenberg: return 2 * n;
        case Kind::OctonionicHeisenberg: return 4;
        case Kind::SkewQuadratic: return -1; // no single power; use general_skew_cf
    }
    return 0;
}

std::string FlatModel::tag() const {
    switch (kind) {
        case Kind::ComplexHeisenberg: return "heisenberg(" + std::to_string(n) + ")";
        case Kind::QuaternionicHeisenberg: return "qheisenberg(" + std::to_string(n) + ")";
        case Kind::OctonionicHeisenberg: return "oheisenberg";
        case Kind::SkewQuadratic: return "skew(" + std::to_string(skew.rows()) + ")";
    }
    return "?";
}

FlatModel FlatModel::complex_heisenberg(int n) {
    FlatModel m;
    m.kind = Kind::ComplexHeisenberg;
    m.n = n;
    return m;
}
FlatModel FlatModel::quaternionic_heisenberg(int n) {
    FlatModel m;
    m.kind = Kind::QuaternionicHeisenberg;
    m.n = n;
    return m;
}
FlatModel FlatModel::octonionic_heisenberg() {
    FlatModel m;
    m.kind = Kind::OctonionicHeisenberg;
    return m;
}
FlatModel FlatModel::skew_quadratic(alg::RMatrix A) {
    if (A.rows() != A.cols()) throw std::invalid_argument("skew_quadratic: square matrix");
    if ((A + A.transpose()).norm() > 1e-12 * (1.0 + A.norm()))
        throw std::invalid_argument("skew_quadratic: A must be skew-symmetric");
    FlatModel m;
    m.kind = Kind::SkewQuadratic;
    m.skew = std::move(A);
    return m;
}

void area_increment(const FlatModel& model, const double* mid, const double* dx,
                    double* out) {
    switch (model.kind) {
        case FlatModel::Kind::ComplexHeisenberg: {
            // sum_j (x_j dy_j - y_j dx_j), layout (x_1, y_1, ..., x_n, y_n)
            double s = 0.0;
            for (int j = 0; j < model.n; ++j)
                s += mid[2 * j] * dx[2 * j + 1] - mid[2 * j + 1] * dx[2 * j];
            out[0] = s;
            break;
        }
        case FlatModel::Kind::QuaternionicHeisenberg: {
            // sum_j Im(dq_j conj(q_j))
            double s1 = 0, s2 = 0, s3 = 0;
            for (int j = 0; j < model.n; ++j) {
                const alg::Quaternion q(mid[4 * j], mid[4 * j + 1], mid[4 * j + 2],
                                        mid[4 * j + 3]);
                const alg::Quaternion dq(dx[4 * j], dx[4 * j + 1], dx[4 * j + 2],
                                         dx[4 * j + 3]);
                const alg::Quaternion p = dq * q.conj();
                s1 += p.x;
                s2 += p.y;
                s3 += p.z;
            }
            out[0] = s1;
            out[1] = s2;
            out[2] = s3;
            break;
        }
        case FlatModel::Kind::OctonionicHeisenberg: {
            alg::Octonion x(std::array<double, 8>{mid[0], mid[1], mid[2], mid[3], mid[4],
                                                  mid[5], mid[6], mid[7]});
            alg::Octonion d(std::array<double, 8>{dx[0], dx[1], dx[2], dx[3], dx[4], dx[5],
                                                  dx[6], dx[7]});
            const alg::Octonion p = d * x.conj();
            for (int i = 0; i < 7; ++i) out[i] = p.c[i + 1];
            break;
        }
        case FlatModel::Kind::SkewQuadratic: {
            const auto& A = model.skew;
            double s = 0.0;
            for (int i = 0; i < A.rows(); ++i) {
                double Ab = 0.0;
                for (int j = 0; j < A.cols(); ++j) Ab += A(i, j) * mid[j];
                s += Ab * dx[i];
            }
            out[0] = s;
            break;
        }
    }
}

sde::SampleEnsemble simulate_flat_area(const FlatModel& model, const sde::TimeGrid& grid,
                                       std::size_t n_paths, uint64_t seed) {
    const int bd = model.base_dim(), ad = model.area_dim();
    sde::SampleEnsemble e;
    e.model_tag = model.tag();
    e.master_seed = seed;
    e.n_paths = n_paths;
    e.dim = bd + ad;
    e.times = {grid.horizon()};
    e.data.assign(n_paths * e.dim, 0.0);

    sde::parallel_over_paths(n_paths, seed, [&](std::size_t p, sde::Rng& rng) {
        std::vector<double> x(bd, 0.0), dx(bd), mid(bd), s(ad, 0.0), ds(ad);
        for (int i = 0; i < grid.steps(); ++i) {
            const double sd = std::sqrt(grid.dt(i));
            for (int j = 0; j < bd; ++j) {
                dx[j] = sd * rng.normal();
                mid[j] = x[j] + 0.5 * dx[j];
            }
            area_increment(model, mid.data(), dx.data(), ds.data());
            for (int j = 0; j < ad; ++j) s[j] += ds[j];
            for (int j = 0; j < bd; ++j) x[j] += dx[j];
        }
        for (int j = 0; j < bd; ++j) e.at(p, 0, j) = x[j];
        for (int j = 0; j < ad; ++j) e.at(p, 0, bd + j) = s[j];
    });
    return e;
}

} // namespace hypoheat::flat
