// Copyright 2026 The spinnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "spinnet/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "spinnet/errors.hpp"

namespace spinnet {

namespace {

constexpr double kEigenClip = 1e-10;
// Eigenvalues this small are rounding noise; p log p would add ~1e-15 bits.
constexpr double kEigenFloor = 1e-14;

Eigen::VectorXd hermitian_eigenvalues(const Matrix &m) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

}  // namespace

double entanglement_entropy(const PureState &state, std::span<const QubitRef> subset) {
    if (subset.empty() || subset.size() >= state.n_qubits()) {
        throw Error(ErrorCode::InvalidArgument, "entropy subset must be nonempty and proper");
    }
    const Eigen::VectorXd ev = hermitian_eigenvalues(reduced_density(state, subset));
    double s = 0.0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        const double p = ev(i);
        if (p < -kEigenClip) {
            throw Error(ErrorCode::InvalidArgument, "reduced density has a negative eigenvalue");
        }
        if (p > kEigenFloor) {
            s -= p * std::log2(p);
        }
    }
    // An eigenvalue of 1 - eps contributes ~eps bits; report that as zero.
    return s > kEigenFloor ? s : 0.0;
}

double entanglement_entropy(const PureState &state, std::initializer_list<QubitRef> subset) {
    return entanglement_entropy(state, std::span<const QubitRef>(subset.begin(), subset.size()));
}

double concurrence(const DensityMatrix &rho) {
    if (rho.rows() != 4 || rho.cols() != 4) {
        throw Error(ErrorCode::DimensionMismatch, "concurrence expects a 4x4 density matrix");
    }
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > kEigenClip) {
        throw Error(ErrorCode::InvalidArgument, "density matrix is not Hermitian");
    }
    if (std::abs(rho.trace() - Complex(1.0, 0.0)) > kEigenClip) {
        throw Error(ErrorCode::InvalidArgument, "density matrix trace is not 1");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(rho);
    Eigen::VectorXd w = solver.eigenvalues();
    if (w.minCoeff() < -kEigenClip) {
        throw Error(ErrorCode::InvalidArgument, "density matrix is not positive semidefinite");
    }
    w = w.unaryExpr([](double x) { return x > kEigenFloor ? std::sqrt(x) : 0.0; });
    const Matrix sqrt_rho = solver.eigenvectors() * w.cast<Complex>().asDiagonal() * solver.eigenvectors().adjoint();

    // sigma_y (x) sigma_y is the antidiagonal (-1, 1, 1, -1) in any qubit order.
    Matrix yy = Matrix::Zero(4, 4);
    yy(0, 3) = yy(3, 0) = -1.0;
    yy(1, 2) = yy(2, 1) = 1.0;
    const Matrix tilde = yy * rho.conjugate() * yy;
    const Matrix r = sqrt_rho * tilde * sqrt_rho;
    Eigen::VectorXd mu = hermitian_eigenvalues((r + r.adjoint()) / 2.0);
    std::vector<double> lambda(4);
    for (int i = 0; i < 4; ++i) {
        lambda[i] = mu(i) > kEigenFloor ? std::sqrt(mu(i)) : 0.0;
    }
    std::sort(lambda.begin(), lambda.end(), std::greater<>());
    return std::clamp(lambda[0] - lambda[1] - lambda[2] - lambda[3], 0.0, 1.0);
}

namespace {

struct LinearFit {
    double a = 0.0;
    double b = 0.0;
    double sse = 0.0;
};

LinearFit fit_at(std::span<const PolarizationSample> samples, double theta0) {
    double n = 0, sx = 0, sxx = 0, sy = 0, sxy = 0;
    for (const auto &s : samples) {
        const double c = std::cos(s.theta - theta0);
        const double x = c * c;
        n += 1;
        sx += x;
        sxx += x * x;
        sy += s.p_up;
        sxy += x * s.p_up;
    }
    LinearFit f;
    const double det = n * sxx - sx * sx;
    if (std::abs(det) <= 1e-14 * std::max(1.0, n * sxx)) {
        f.a = sy / n;
        f.b = 0.0;
    } else {
        f.b = (n * sxy - sx * sy) / det;
        f.a = (sy - f.b * sx) / n;
    }
    for (const auto &s : samples) {
        const double c = std::cos(s.theta - theta0);
        const double r = s.p_up - (f.a + f.b * c * c);
        f.sse += r * r;
    }
    return f;
}

}  // namespace

PolarizationFit fit_polarization(std::span<const PolarizationSample> samples) {
    using std::numbers::pi;
    if (samples.size() < 4) {
        throw Error(ErrorCode::DegenerateSamples, "polarization fit needs at least 4 samples");
    }
    bool distinct = false;
    for (const auto &s : samples) {
        if (!std::isfinite(s.theta) || !std::isfinite(s.p_up)) {
            throw Error(ErrorCode::InvalidArgument, "polarization samples must be finite");
        }
        distinct = distinct || s.theta != samples[0].theta;
    }
    if (!distinct) {
        throw Error(ErrorCode::DegenerateSamples, "all sample angles are equal");
    }

    // Coarse scan brackets the global minimum, golden section refines it.
    constexpr int kGrid = 90;
    const double step = pi / kGrid;
    int best = 0;
    double best_sse = fit_at(samples, 0.0).sse;
    for (int i = 1; i < kGrid; ++i) {
        const double sse = fit_at(samples, i * step).sse;
        if (sse < best_sse) {
            best_sse = sse;
            best = i;
        }
    }
    double lo = (best - 1) * step;
    double hi = (best + 1) * step;
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - g * (hi - lo);
    double x2 = lo + g * (hi - lo);
    double f1 = fit_at(samples, x1).sse;
    double f2 = fit_at(samples, x2).sse;
    while (hi - lo > 1e-13) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - g * (hi - lo);
            f1 = fit_at(samples, x1).sse;
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + g * (hi - lo);
            f2 = fit_at(samples, x2).sse;
        }
    }
    double theta0 = (lo + hi) / 2;
    LinearFit lf = fit_at(samples, theta0);
    if (lf.b < 0.0) {
        // a + b cos^2(x) = (a + b) - b cos^2(x - pi/2)
        theta0 += pi / 2;
        lf.a += lf.b;
        lf.b = -lf.b;
    }
    theta0 = std::fmod(theta0, pi);
    if (theta0 < 0.0) {
        theta0 += pi;
    }
    if (theta0 >= pi) {
        theta0 = 0.0;
    }

    PolarizationFit out;
    out.a = lf.a;
    out.b = lf.b;
    out.theta0 = theta0;
    out.residual = std::sqrt(lf.sse / static_cast<double>(samples.size()));
    const double denom = 2.0 * lf.a + lf.b;
    out.degree = denom > 0.0 ? std::clamp(lf.b / denom, 0.0, 1.0) : 0.0;
    return out;
}

}  // namespace spinnet
